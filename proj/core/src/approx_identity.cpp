#include "ditkin/approx_identity.hpp"

#include <algorithm>

#include "ditkin/errors.hpp"
#include "tier.hpp"

namespace ditkin {

namespace {

void require_m_infinity(const Element& f) {
  const Rational limit = eval(f, Point::infinity());
  if (!limit.is_zero()) {
    throw Error(ErrorCode::kNotInMInfinity, "f(infinity) = " + limit.str() + ", expected 0");
  }
}

void require_index(Index k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "truncation index must be >= 1");
}

}  // namespace

Element make_e(Index k) {
  require_index(k);
  return Element::eventually_constant(std::vector<Rational>(k, Rational(1)), Rational(0));
}

NormResult residual_norm(const Element& f, const WeightFamily& w, Index k, const EvalOptions& options) {
  require_index(k);
  require_m_infinity(f);
  const Rational third = weight_at(w, k) * eval(f, Point::at(k + 1)).abs();

  if (const auto* ec = std::get_if<EventuallyConstant>(&f.variant())) {
    const Index len = ec->prefix.size();
    Rational sup(0);
    Rational variation(0);
    for (Index j = k + 1; j <= len; ++j) {
      sup = std::max(sup, ec->prefix[j - 1].abs());
      const Rational& next = j < len ? ec->prefix[j] : ec->tail;
      const Rational jump = (next - ec->prefix[j - 1]).abs();
      if (!jump.is_zero()) variation += weight_at(w, j) * jump;
    }
    return NormResult::exact(sup + variation + third);
  }

  const auto view = detail::tier_view(f);
  const Index last = k + options.horizon;
  Rational sup(0);
  Rational variation(0);
  Rational current = view.value_at(k + 1);
  for (Index j = k + 1; j <= last; ++j) {
    sup = std::max(sup, current.abs());
    Rational next = view.value_at(j + 1);
    if (next != current) variation += weight_at(w, j) * (next - current).abs();
    current = std::move(next);
  }
  Rational lo = sup + variation + third;
  Rational hi = std::max(sup, view.sup_tail(last + 1)) + variation + view.variation_tail(last + 1, w) + third;
  return NormResult::interval(std::move(lo), std::move(hi), options.horizon);
}

NormResult residual_oracle(const Element& f, const WeightFamily& w, Index k) {
  if (!f.is_exact()) {
    throw Error(ErrorCode::kUnsupportedOperandKind, "residual oracle needs an eventually constant element");
  }
  require_m_infinity(f);
  return norm(sub(f, mul(make_e(k), f)), w);
}

std::vector<DiagnosticRow> truncation_diagnostics(const Element& f, const WeightFamily& w,
                                                  std::span<const Index> indices,
                                                  const EvalOptions& options) {
  std::vector<DiagnosticRow> rows;
  rows.reserve(indices.size());
  for (Index n : indices) {
    DiagnosticRow row;
    row.n_k = n;
    row.residual = residual_norm(f, w, n, options);
    const Rational alpha = weight_at(w, n);
    row.alpha_next = alpha * eval(f, Point::at(n + 1)).abs();
    row.alpha_self = alpha * eval(f, Point::at(n)).abs();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view to_string(SelectionKind kind) {
  return kind == SelectionKind::kBoundedBai ? "BoundedBAI" : "RunningMin";
}

SelectionRule SelectionRule::for_weights(const WeightFamily& w, std::optional<Rational> slack) {
  const WeightClassification cls = classify_weights(w);
  if (!cls.liminf) return SelectionRule(w, SelectionKind::kRunningMin);

  SelectionRule rule(w, SelectionKind::kBoundedBai);
  rule.liminf_ = cls.liminf;
  if (slack) {
    if (slack->sign() < 0) throw Error(ErrorCode::kInvalidArgument, "slack must be >= 0");
    rule.slack_ = std::move(slack);
  } else if (cls.sup) {
    rule.slack_ = *cls.sup - *cls.liminf;
  } else if (liminf_attained_infinitely_often(w)) {
    rule.slack_ = Rational(0);
  } else {
    rule.slack_ = Rational(1);
  }
  return rule;
}

bool SelectionRule::selects(Index n) const {
  if (kind_ == SelectionKind::kBoundedBai) return weight_at(weights_, n) <= *liminf_ + *slack_;
  const TailInf inf = tail_infimum(weights_, n);
  return inf.attained_at == n;
}

Index SelectionRule::next_from(Index n) const {
  n = std::max<Index>(n, 1);
  if (kind_ == SelectionKind::kRunningMin) {
    // The earliest index attaining inf_{j >= n} attains its own tail infimum.
    return *tail_infimum(weights_, n).attained_at;
  }
  // Some residue class is eventually constant at the liminf, so this terminates
  // within one period past the explicit part of the weights.
  while (!selects(n)) ++n;
  return n;
}

AiSelection select_ai_subsequence(const WeightFamily& w, Index count, std::optional<Rational> slack) {
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  const SelectionRule rule = SelectionRule::for_weights(w, std::move(slack));

  AiSelection out;
  out.kind = rule.kind();
  out.liminf = rule.liminf();
  out.slack = rule.slack();
  Index n = 1;
  while (out.indices.size() < count) {
    n = rule.next_from(n);
    out.indices.push_back(n);
    out.norms.push_back(Rational(1) + weight_at(w, n));
    ++n;
  }
  return out;
}

DitkinApproximation ditkin_approximation(const Element& f, const WeightFamily& w, const Rational& tol,
                                         const DitkinOptions& options) {
  if (tol.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  require_m_infinity(f);
  const SelectionRule rule = SelectionRule::for_weights(w, options.slack);

  auto attempt = [&](Index k) -> std::optional<DitkinApproximation> {
    NormResult residual = residual_norm(f, w, k, options.eval);
    if (residual.hi() <= tol) return DitkinApproximation{k, std::move(residual)};
    return std::nullopt;
  };

  if (f.is_exact()) {
    // The residual vanishes once k reaches the support, so this walk terminates.
    for (Index k = rule.next_from(1);; k = rule.next_from(k + 1)) {
      if (auto hit = attempt(k)) return *hit;
    }
  }

  constexpr int kLinearProbes = 32;
  Index k = rule.next_from(1);
  for (int i = 0; i < kLinearProbes && k <= options.search_bound; ++i, k = rule.next_from(k + 1)) {
    if (auto hit = attempt(k)) return *hit;
  }
  while (k <= options.search_bound) {
    if (auto hit = attempt(k)) return *hit;
    k = rule.next_from(2 * k);
  }
  throw Error(ErrorCode::kHorizonExhausted,
              "no selected index up to " + std::to_string(options.search_bound) + " reaches tolerance " +
                  tol.str());
}

}  // namespace ditkin
