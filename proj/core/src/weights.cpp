#include "ditkin/weights.hpp"

#include <algorithm>
#include <numeric>

#include "ditkin/errors.hpp"

namespace ditkin {

namespace {

constexpr Index kMaxPeriod = Index{1} << 20;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Rational evaluate_form(const NormalForm& form, Index n) {
  if (n <= form.explicit_until()) return form.explicit_values[n - 1];
  return form.class_of(n).at(n);
}

// First index >= start that is congruent to residue modulo period.
Index first_in_class(Index start, Index residue, Index period) {
  const Index shift = (residue + period - start % period) % period;
  return start + shift;
}

// Residue t modulo lcm(modulus, part_modulus) with t = residue (mod modulus) and
// t = part (mod part_modulus), or nullopt when the two classes never meet.
std::optional<std::pair<Index, Index>> meet_classes(Index residue, Index modulus, Index part,
                                                    Index part_modulus) {
  const Index g = std::gcd(modulus, part_modulus);
  if ((residue + part_modulus * g - part) % g != 0) return std::nullopt;
  const Index combined = std::lcm(modulus, part_modulus);
  for (Index t = residue % modulus; t < combined; t += modulus) {
    if (t % part_modulus == part) return std::make_pair(t, combined);
  }
  return std::nullopt;
}

// Lower bound on { alpha_j : j >= n, j = residue (mod modulus) } from the grammar tree.
Rational lower_bound_on_class(const WeightFamily& w, Index n, Index residue, Index modulus) {
  return std::visit(
      Overloaded{
          [&](const ConstantWeights& c) { return c.value; },
          [&](const LinearWeights& l) { return l.offset + l.slope * from_index(n); },
          [&](const InterleavedWeights& il) {
            std::optional<Rational> best;
            const Index m = il.parts.size();
            for (Index s = 0; s < m; ++s) {
              auto met = meet_classes(residue, modulus, s, m);
              if (!met) continue;
              Rational part = lower_bound_on_class(il.parts[s], n, met->first, met->second);
              if (!best || part < *best) best = std::move(part);
            }
            return *best;
          },
          [&](const PrefixedWeights& p) {
            const Index len = p.prefix.size();
            Rational best = lower_bound_on_class(p.tail, std::max(n, len + 1), residue, modulus);
            for (Index j = n; j <= len; ++j) {
              if (j % modulus == residue % modulus) best = std::min(best, p.prefix[j - 1]);
            }
            return best;
          },
      },
      w.node().rule);
}

void require_positive(const Rational& value, const char* what) {
  if (value.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be positive, got " + value.str());
  }
}

}  // namespace

WeightFamily WeightFamily::constant(Rational value) {
  require_positive(value, "constant weight");
  NormalForm form{{}, {AffineClass{value, Rational(0)}}};
  return WeightFamily(std::make_shared<const WeightNode>(
      WeightNode{ConstantWeights{std::move(value)}, std::move(form)}));
}

WeightFamily WeightFamily::linear(Rational offset, Rational slope) {
  if (offset.sign() < 0 || slope.sign() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "linear weight coefficients must be >= 0");
  }
  if (offset.is_zero() && slope.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "linear weight coefficients must not both be zero");
  }
  NormalForm form{{}, {AffineClass{offset, slope}}};
  return WeightFamily(std::make_shared<const WeightNode>(
      WeightNode{LinearWeights{std::move(offset), std::move(slope)}, std::move(form)}));
}

WeightFamily WeightFamily::interleave(std::vector<WeightFamily> parts) {
  const Index m = parts.size();
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "interleave needs at least two parts");

  Index period = m;
  Index explicit_until = 0;
  for (const auto& part : parts) {
    period = std::lcm(period, part.normal_form().period());
    if (period > kMaxPeriod) throw Error(ErrorCode::kInvalidArgument, "interleave period too large");
    explicit_until = std::max(explicit_until, part.normal_form().explicit_until());
  }

  NormalForm form;
  form.explicit_values.reserve(explicit_until);
  for (Index n = 1; n <= explicit_until; ++n) {
    form.explicit_values.push_back(evaluate_form(parts[n % m].normal_form(), n));
  }
  form.classes.reserve(period);
  for (Index r = 0; r < period; ++r) {
    form.classes.push_back(parts[r % m].normal_form().class_of(r));
  }
  return WeightFamily(std::make_shared<const WeightNode>(
      WeightNode{InterleavedWeights{std::move(parts)}, std::move(form)}));
}

WeightFamily WeightFamily::prefixed(std::vector<Rational> prefix, WeightFamily tail) {
  for (const auto& value : prefix) require_positive(value, "prefix weight");
  const NormalForm& tail_form = tail.normal_form();
  const Index explicit_until = std::max<Index>(prefix.size(), tail_form.explicit_until());

  NormalForm form;
  form.explicit_values.reserve(explicit_until);
  for (Index n = 1; n <= explicit_until; ++n) {
    form.explicit_values.push_back(n <= prefix.size() ? prefix[n - 1] : evaluate_form(tail_form, n));
  }
  form.classes = tail_form.classes;
  return WeightFamily(std::make_shared<const WeightNode>(
      WeightNode{PrefixedWeights{std::move(prefix), std::move(tail)}, std::move(form)}));
}

const NormalForm& WeightFamily::normal_form() const { return node_->form; }

Rational weight_at(const WeightFamily& w, Index n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "weights are indexed from 1");
  return evaluate_form(w.normal_form(), n);
}

Rational tail_lower_bound(const WeightFamily& w, Index n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "weights are indexed from 1");
  return lower_bound_on_class(w, n, 0, 1);
}

TailInf tail_infimum(const WeightFamily& w, Index n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "weights are indexed from 1");
  const NormalForm& form = w.normal_form();

  std::optional<Rational> best;
  Index best_index = 0;
  auto consider = [&](Rational value, Index j) {
    if (!best || value < *best || (value == *best && j < best_index)) {
      best = std::move(value);
      best_index = j;
    }
  };

  for (Index j = n; j <= form.explicit_until(); ++j) consider(form.explicit_values[j - 1], j);
  // Slopes are >= 0, so within a residue class the first index is the smallest.
  const Index start = std::max(n, form.explicit_until() + 1);
  for (Index r = 0; r < form.period(); ++r) {
    const Index j = first_in_class(start, r, form.period());
    consider(form.classes[r].at(j), j);
  }

  TailInf result;
  result.at_index = n;
  result.value = *best;
  result.attained_at = best_index;

  // Smallest H >= best_index whose structural tail bound already reaches the value.
  Index lo = best_index;
  if (tail_lower_bound(w, lo + 1) >= result.value) {
    result.certified_horizon = lo;
    return result;
  }
  Index step = 1;
  Index hi = lo + step;
  while (tail_lower_bound(w, hi + 1) < result.value) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    if (tail_lower_bound(w, mid + 1) >= result.value) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.certified_horizon = hi;
  return result;
}

WeightClassification classify_weights(const WeightFamily& w) {
  const NormalForm& form = w.normal_form();
  WeightClassification out;

  bool bounded = true;
  std::optional<Rational> liminf;
  for (const auto& c : form.classes) {
    if (!c.slope.is_zero()) {
      bounded = false;
    } else if (!liminf || c.offset < *liminf) {
      liminf = c.offset;
    }
  }
  if (bounded) {
    Rational sup = form.classes.front().offset;
    for (const auto& c : form.classes) sup = std::max(sup, c.offset);
    for (const auto& v : form.explicit_values) sup = std::max(sup, v);
    out.sup = std::move(sup);
  }
  out.liminf = liminf;
  out.diverges_to_infinity = !liminf.has_value();

  bool nondecreasing = true;
  for (Index n = 1; n <= form.explicit_until() && nondecreasing; ++n) {
    nondecreasing = evaluate_form(form, n) <= evaluate_form(form, n + 1);
  }
  // Beyond the explicit part, alpha_{n+1} - alpha_n is affine in n on each residue class.
  const Index period = form.period();
  const Index start = form.explicit_until() + 1;
  for (Index r = 0; r < period && nondecreasing; ++r) {
    const AffineClass& here = form.classes[r];
    const AffineClass& next = form.classes[(r + 1) % period];
    const Index j = first_in_class(start, r, period);
    const Rational slope_gap = next.slope - here.slope;
    const Rational first_gap = next.at(j + 1) - here.at(j);
    nondecreasing = slope_gap.sign() >= 0 && first_gap.sign() >= 0;
  }
  out.nondecreasing = nondecreasing;
  return out;
}

bool liminf_attained_infinitely_often(const WeightFamily& w) {
  const auto liminf = classify_weights(w).liminf;
  if (!liminf) return false;
  return std::any_of(w.normal_form().classes.begin(), w.normal_form().classes.end(),
                     [&](const AffineClass& c) { return c.slope.is_zero() && c.offset == *liminf; });
}

std::optional<Index> first_index_exceeding(const WeightFamily& w, const Rational& threshold) {
  const NormalForm& form = w.normal_form();
  for (Index n = 1; n <= form.explicit_until(); ++n) {
    if (form.explicit_values[n - 1] > threshold) return n;
  }
  const Index period = form.period();
  const Index start = form.explicit_until() + 1;
  std::optional<Index> best;
  for (Index r = 0; r < period; ++r) {
    const AffineClass& c = form.classes[r];
    Index j = first_in_class(start, r, period);
    if (c.slope.is_zero()) {
      if (c.offset <= threshold) continue;
    } else {
      // offset + slope * j > threshold  <=>  j > (threshold - offset) / slope
      const std::int64_t bound = ((threshold - c.offset) / c.slope).floor();
      if (bound >= 0 && static_cast<Index>(bound) + 1 > j) {
        j = first_in_class(static_cast<Index>(bound) + 1, r, period);
      }
    }
    if (!best || j < *best) best = j;
  }
  return best;
}

}  // namespace ditkin
