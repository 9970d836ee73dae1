#pragma once

#include <optional>
#include <vector>

#include "ditkin/approx_identity.hpp"
#include "ditkin/element.hpp"
#include "ditkin/weights.hpp"

namespace ditkin {

/// A point n together with alpha_n, a lower bound for the norm of the identity of M_n.
struct UnboundednessPoint {
  Index point = 0;
  Rational alpha;
};

/// Regularity properties of A_alpha.
///
/// ditkin, strongly_regular, spectral_synthesis and separable hold for every
/// weight sequence; they are constants, not computed. strong_ditkin,
/// m_infinity_has_bai and bru_bade are all equivalent to "liminf alpha_n is
/// finite"; bru_dales is equivalent to "alpha is bounded".
struct PropertyReport {
  bool ditkin = true;
  bool strongly_regular = true;
  bool spectral_synthesis = true;
  bool separable = true;
  bool strong_ditkin = false;
  bool m_infinity_has_bai = false;
  bool bru_bade = false;
  bool bru_dales = false;
  std::optional<Rational> dales_bound;  // 2M + 1 with M = sup alpha
  std::optional<AiSelection> bade_witness;
  std::optional<std::vector<UnboundednessPoint>> unboundedness_witness;
  WeightClassification classification;
};

struct ReportOptions {
  Index witness_count = 8;
  /// Thresholds 1, 2, 4, ... used for the unboundedness witness.
  Index threshold_count = 8;
};

PropertyReport property_report(const WeightFamily& w, const ReportOptions& options = {});

/// f in J_point with f = 1 on the compact set E (point not in E).
struct RelativeUnitWitness {
  Point point = Point::infinity();
  Index excluded_set_max = 0;
  Element element = Element::zero();
  Rational norm;
};

/// At infinity: e_k with k the earliest index >= max(E) attaining the tail
/// infimum from max(E). At a finite x: 1 - delta_x, the identity of M_x.
RelativeUnitWitness relative_unit_witness(const WeightFamily& w, const Point& point, const ClosedSet& excluded);

/// The identity of M_x (1 everywhere except 0 at x).
Element maximal_ideal_identity(Index x);
/// Its norm, 1 + alpha_{x-1} + alpha_x (1 + alpha_1 at x = 1). At least alpha_x.
Rational maximal_ideal_identity_norm(const WeightFamily& w, Index x);

struct CounterexamplePair {
  WeightFamily weights;
  Element element;
};

/// alpha_n = 1 for odd n and n/2 for even n, with the dyadic decay element:
/// f lies in M_infinity but alpha_{2^k} f(2^k) = 1/4 for every k, so (e_k)
/// is not an approximate identity for M_infinity.
CounterexamplePair dyadic_counterexample();

/// Interleave(Constant(bounded_value), unbounded_part): unbounded but not
/// divergent, so A_alpha is strong Ditkin without Dales bounded relative units.
/// Throws NotDivergent unless unbounded_part diverges to infinity.
WeightFamily strong_ditkin_without_dales(const WeightFamily& unbounded_part, const Rational& bounded_value);

}  // namespace ditkin
