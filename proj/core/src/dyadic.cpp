#include "ditkin/dyadic.hpp"

#include <algorithm>
#include <bit>

#include "ditkin/errors.hpp"

namespace ditkin {

namespace {

constexpr Index kMaxExponent = 62;

Index pow2_mod(Index exponent, Index modulus) {
  Index result = 1 % modulus;
  for (Index i = 0; i < exponent; ++i) result = (result * 2) % modulus;
  return result;
}

}  // namespace

Rational dyadic_value(Index j) {
  if (j == 0) throw Error(ErrorCode::kInvalidArgument, "dyadic element is indexed from 1");
  return Rational::pow2(-static_cast<long>(std::bit_width(j)));
}

Rational dyadic_variation_tail(const WeightFamily& w, Index start) {
  start = std::max<Index>(start, 1);
  // Smallest k >= 1 with 2^k - 1 >= start.
  const Index first_k = std::max<Index>(1, std::bit_width(start));
  if (first_k > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "start index too large");

  const NormalForm& form = w.normal_form();
  const Index period = form.period();
  const Index two_adic = std::countr_zero(period);
  // Smallest k with 2^k - 1 beyond the explicit part of the weights.
  const Index past_explicit = std::bit_width(form.explicit_until() + 1);
  const Index periodic_from = std::max({first_k, past_explicit, two_adic});
  if (periodic_from > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "weight prefix too long");

  Rational sum(0);
  for (Index k = first_k; k < periodic_from; ++k) {
    const Index jump_at = (Index{1} << k) - 1;
    sum += weight_at(w, jump_at) * Rational::pow2(-static_cast<long>(k) - 1);
  }

  // For k >= two_adic, 2^k mod L is purely periodic.
  const Index first_residue = pow2_mod(periodic_from, period);
  Rational cycle(0);
  Index cycle_length = 0;
  Index residue = first_residue;
  do {
    const AffineClass& c = form.classes[(residue + period - 1) % period];
    if (!c.slope.is_zero()) {
      throw Error(ErrorCode::kNotInAlgebra,
                  "dyadic element has divergent weighted variation (jump class with slope " + c.slope.str() + ")");
    }
    const long k = static_cast<long>(periodic_from + cycle_length);
    cycle += c.offset * Rational::pow2(-k - 1);
    ++cycle_length;
    residue = (residue * 2) % period;
  } while (residue != first_residue);

  const Rational ratio = Rational(1) - Rational::pow2(-static_cast<long>(cycle_length));
  return sum + cycle / ratio;
}

}  // namespace ditkin
