#pragma once

#include "ditkin/rational.hpp"
#include "ditkin/weights.hpp"

namespace ditkin {

/// f(j) = 2^-k where 2^(k-1) <= j < 2^k.
Rational dyadic_value(Index j);

/// Exact sum_{j >= start} alpha_j |f(j+1) - f(j)| for the dyadic decay element.
///
/// The only nonzero jumps sit at j = 2^k - 1 with size 2^(-k-1). Beyond the
/// explicit part of the weights, (2^k - 1) mod L is eventually periodic in k,
/// so the tail is a finite sum plus a geometric series. Throws NotInAlgebra
/// when a jump class carries a positive slope (the series diverges).
Rational dyadic_variation_tail(const WeightFamily& w, Index start);

}  // namespace ditkin
