#pragma once

#include <functional>

#include "ditkin/element.hpp"

namespace ditkin::detail {

// Uniform access to interval-tier elements (dyadic decay and rule-based).
struct TierView {
  std::function<Rational(Index)> value_at;
  Rational limit;
  // Upper bound on sum_{j >= start} alpha_j |f(j+1) - f(j)|; throws MissingTailBound.
  std::function<Rational(Index start, const WeightFamily&)> variation_tail;
  // Upper bound on sup_{j >= start} |f(j)|; throws MissingTailBound.
  std::function<Rational(Index start)> sup_tail;
};

TierView tier_view(const Element& f);

}  // namespace ditkin::detail
