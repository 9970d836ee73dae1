#include "ditkin/classifier.hpp"

#include <algorithm>

#include "ditkin/errors.hpp"

namespace ditkin {

PropertyReport property_report(const WeightFamily& w, const ReportOptions& options) {
  PropertyReport report;
  report.classification = classify_weights(w);
  const auto& cls = report.classification;

  report.strong_ditkin = cls.liminf.has_value();
  report.m_infinity_has_bai = report.strong_ditkin;
  report.bru_bade = report.strong_ditkin;
  report.bru_dales = cls.bounded();

  if (cls.sup) report.dales_bound = Rational(2) * *cls.sup + Rational(1);
  if (report.strong_ditkin) report.bade_witness = select_ai_subsequence(w, options.witness_count);
  if (!cls.bounded()) {
    std::vector<UnboundednessPoint> points;
    Rational threshold(1);
    for (Index i = 0; i < options.threshold_count; ++i, threshold *= Rational(2)) {
      const auto n = first_index_exceeding(w, threshold);
      if (!n) break;
      points.push_back({*n, weight_at(w, *n)});
    }
    report.unboundedness_witness = std::move(points);
  }
  return report;
}

Element maximal_ideal_identity(Index x) {
  if (x == 0) throw Error(ErrorCode::kInvalidArgument, "points of N are indexed from 1");
  std::vector<Rational> prefix(x, Rational(1));
  prefix.back() = Rational(0);
  return Element::eventually_constant(std::move(prefix), Rational(1));
}

Rational maximal_ideal_identity_norm(const WeightFamily& w, Index x) {
  if (x == 0) throw Error(ErrorCode::kInvalidArgument, "points of N are indexed from 1");
  Rational total = Rational(1) + weight_at(w, x);
  if (x >= 2) total += weight_at(w, x - 1);
  return total;
}

RelativeUnitWitness relative_unit_witness(const WeightFamily& w, const Point& point, const ClosedSet& excluded) {
  if (excluded.contains(point)) {
    throw Error(ErrorCode::kInvalidExcludedSet, "point " + point.str() + " lies in the excluded set");
  }

  RelativeUnitWitness witness;
  witness.point = point;
  witness.excluded_set_max = excluded.max_finite();

  if (point.is_infinity()) {
    // Compact subsets of N_inf missing infinity are finite.
    const Index from = std::max<Index>(excluded.max_finite(), 1);
    const Index k = *tail_infimum(w, from).attained_at;
    witness.element = make_e(k);
    witness.norm = Rational(1) + weight_at(w, k);
    return witness;
  }

  witness.element = maximal_ideal_identity(point.index());
  witness.norm = maximal_ideal_identity_norm(w, point.index());
  return witness;
}

CounterexamplePair dyadic_counterexample() {
  // Parts are indexed by n mod 2: even n -> n/2, odd n -> 1.
  WeightFamily weights = WeightFamily::interleave(
      {WeightFamily::linear(Rational(0), Rational(1, 2)), WeightFamily::constant(Rational(1))});
  return {std::move(weights), Element::dyadic_decay()};
}

WeightFamily strong_ditkin_without_dales(const WeightFamily& unbounded_part, const Rational& bounded_value) {
  if (!classify_weights(unbounded_part).diverges_to_infinity) {
    throw Error(ErrorCode::kNotDivergent, "unbounded part must diverge to infinity");
  }
  return WeightFamily::interleave({WeightFamily::constant(bounded_value), unbounded_part});
}

}  // namespace ditkin
