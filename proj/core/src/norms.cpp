#include <algorithm>

#include "ditkin/dyadic.hpp"
#include "ditkin/element.hpp"
#include "ditkin/errors.hpp"
#include "tier.hpp"

namespace ditkin {

namespace detail {

TierView tier_view(const Element& f) {
  if (std::holds_alternative<DyadicDecay>(f.variant())) {
    return TierView{
        dyadic_value,
        Rational(0),
        [](Index start, const WeightFamily& w) { return dyadic_variation_tail(w, start); },
        [](Index start) { return dyadic_value(start); },
    };
  }
  const auto* rule = std::get_if<RuleBased>(&f.variant());
  if (rule == nullptr) throw Error(ErrorCode::kUnsupportedOperandKind, "element is eventually constant");

  TierView view;
  view.value_at = rule->value_at;
  view.limit = rule->limit;
  view.variation_tail = [bound = rule->variation_bound, label = rule->label](Index start,
                                                                             const WeightFamily& w) {
    std::optional<Rational> value;
    if (bound) value = bound(start, w);
    if (!value) throw Error(ErrorCode::kMissingTailBound, "no variation tail bound for " + label);
    return *value;
  };
  view.sup_tail = [bound = rule->sup_bound, label = rule->label](Index start) {
    if (!bound) throw Error(ErrorCode::kMissingTailBound, "no sup tail bound for " + label);
    return bound(start);
  };
  return view;
}

}  // namespace detail

NormResult sup_norm(const Element& f, const EvalOptions& options) {
  if (const auto* ec = std::get_if<EventuallyConstant>(&f.variant())) {
    Rational best = ec->tail.abs();
    for (const auto& v : ec->prefix) best = std::max(best, v.abs());
    return NormResult::exact(best);
  }
  if (std::holds_alternative<DyadicDecay>(f.variant())) {
    // f(1) = 1/2 and f is nonincreasing.
    return NormResult::exact(Rational(1, 2));
  }
  const auto view = detail::tier_view(f);
  Rational lo = view.limit.abs();
  for (Index j = 1; j <= options.horizon; ++j) lo = std::max(lo, view.value_at(j).abs());
  Rational hi = std::max(lo, view.sup_tail(options.horizon + 1));
  return NormResult::interval(std::move(lo), std::move(hi), options.horizon);
}

NormResult weighted_variation(const Element& f, const WeightFamily& w, const EvalOptions& options) {
  if (const auto* ec = std::get_if<EventuallyConstant>(&f.variant())) {
    Rational sum(0);
    const Index len = ec->prefix.size();
    for (Index n = 1; n <= len; ++n) {
      const Rational& next = n < len ? ec->prefix[n] : ec->tail;
      const Rational jump = (next - ec->prefix[n - 1]).abs();
      if (!jump.is_zero()) sum += weight_at(w, n) * jump;
    }
    return NormResult::exact(sum);
  }
  if (std::holds_alternative<DyadicDecay>(f.variant())) {
    return NormResult::exact(dyadic_variation_tail(w, 1));
  }
  const auto view = detail::tier_view(f);
  Rational partial(0);
  Rational current = view.value_at(1);
  for (Index j = 1; j <= options.horizon; ++j) {
    Rational next = view.value_at(j + 1);
    if (next != current) partial += weight_at(w, j) * (next - current).abs();
    current = std::move(next);
  }
  Rational hi = partial + view.variation_tail(options.horizon + 1, w);
  return NormResult::interval(std::move(partial), std::move(hi), options.horizon);
}

NormResult norm(const Element& f, const WeightFamily& w, const EvalOptions& options) {
  return sup_norm(f, options) + weighted_variation(f, w, options);
}

}  // namespace ditkin
