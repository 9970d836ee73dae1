#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ditkin/rational.hpp"

namespace ditkin {

struct WeightNode;

/// One residue class of the eventual affine form: alpha_n = offset + slope * n.
struct AffineClass {
  Rational offset;
  Rational slope;

  Rational at(Index n) const { return offset + slope * from_index(n); }
};

/// Exact eventual shape of a weight sequence.
///
/// For n <= explicit_values.size() the weight is tabulated; beyond that it is
/// classes[n % classes.size()].at(n). Every family in the grammar has such a
/// form, which is what makes boundedness, liminf and tail infima decidable.
struct NormalForm {
  std::vector<Rational> explicit_values;
  std::vector<AffineClass> classes;

  Index explicit_until() const { return explicit_values.size(); }
  Index period() const { return classes.size(); }
  const AffineClass& class_of(Index n) const { return classes[n % classes.size()]; }
};

/// A positive rational weight sequence alpha = (alpha_n), n >= 1, described by
/// a closed symbolic grammar. Immutable; copies share the underlying tree.
class WeightFamily {
 public:
  /// alpha_n = value; value > 0.
  static WeightFamily constant(Rational value);
  /// alpha_n = offset + slope * n; both >= 0 and not both zero.
  static WeightFamily linear(Rational offset, Rational slope);
  /// alpha_n = parts[n mod m](n) with m = parts.size() >= 2.
  static WeightFamily interleave(std::vector<WeightFamily> parts);
  /// alpha_n = prefix[n-1] for n <= prefix.size(), tail(n) afterwards.
  static WeightFamily prefixed(std::vector<Rational> prefix, WeightFamily tail);

  const WeightNode& node() const { return *node_; }
  const NormalForm& normal_form() const;

 private:
  explicit WeightFamily(std::shared_ptr<const WeightNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const WeightNode> node_;
};

struct ConstantWeights {
  Rational value;
};

struct LinearWeights {
  Rational offset;
  Rational slope;
};

struct InterleavedWeights {
  std::vector<WeightFamily> parts;
};

struct PrefixedWeights {
  std::vector<Rational> prefix;
  WeightFamily tail;
};

struct WeightNode {
  std::variant<ConstantWeights, LinearWeights, InterleavedWeights, PrefixedWeights> rule;
  NormalForm form;
};

/// Result of a tail-infimum query: value = inf { alpha_j : j >= at_index }.
struct TailInf {
  Index at_index = 1;
  Rational value;
  /// Earliest index attaining the infimum; empty means the infimum is only approached.
  std::optional<Index> attained_at;
  /// Index H such that the structural lower bound on { alpha_j : j > H } is >= value,
  /// so scanning at_index..H suffices to reproduce the infimum.
  Index certified_horizon = 1;

  bool attained() const { return attained_at.has_value(); }
};

struct WeightClassification {
  /// Present iff the sequence is bounded; holds sup_n alpha_n.
  std::optional<Rational> sup;
  /// Present iff liminf alpha_n is finite.
  std::optional<Rational> liminf;
  bool nondecreasing = false;
  bool diverges_to_infinity = false;

  bool bounded() const { return sup.has_value(); }
};

Rational weight_at(const WeightFamily& w, Index n);

TailInf tail_infimum(const WeightFamily& w, Index n);

/// Lower bound on inf { alpha_j : j >= n } read off the grammar tree alone
/// (constants, linear values at n, minima over parts). Nondecreasing in n.
Rational tail_lower_bound(const WeightFamily& w, Index n);

WeightClassification classify_weights(const WeightFamily& w);

/// True when some residue class is eventually constant at the liminf value,
/// i.e. the liminf is attained at infinitely many indices.
bool liminf_attained_infinitely_often(const WeightFamily& w);

/// Smallest n with alpha_n > threshold, or nullopt when sup alpha <= threshold.
std::optional<Index> first_index_exceeding(const WeightFamily& w, const Rational& threshold);

}  // namespace ditkin
