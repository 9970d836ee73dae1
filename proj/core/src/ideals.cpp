#include "ditkin/element.hpp"
#include "ditkin/errors.hpp"

namespace ditkin {

IdealSpec IdealSpec::m_at(const Point& p) {
  return i_of(p.is_infinity() ? ClosedSet::with_infinity({}) : ClosedSet::finite({p.index()}));
}

IdealSpec IdealSpec::j_at(const Point& p) {
  return j_of(p.is_infinity() ? ClosedSet::with_infinity({}) : ClosedSet::finite({p.index()}));
}

bool in_ideal(const Element& f, const IdealSpec& ideal) {
  const ClosedSet& set = ideal.set();
  // Points of N are isolated, so I and J agree there.
  for (Index x : set.finite_points()) {
    if (!eval(f, Point::at(x)).is_zero()) return false;
  }
  if (!set.contains_infinity()) return true;
  if (!eval(f, Point::infinity()).is_zero()) return false;
  if (ideal.kind() == IdealSpec::Kind::kVanishing) return true;

  // Neighbourhoods of infinity are cofinite: f must be eventually zero.
  if (f.is_exact()) return f.exact().tail.is_zero();
  if (std::holds_alternative<DyadicDecay>(f.variant())) return false;
  throw Error(ErrorCode::kUndecidableMembership,
              "cannot decide whether rule-based element " + std::get<RuleBased>(f.variant()).label +
                  " is eventually zero");
}

}  // namespace ditkin
