#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ditkin/rational.hpp"
#include "ditkin/weights.hpp"

namespace ditkin {

/// A point of the one-point compactification N u {infinity}.
class Point {
 public:
  static Point at(Index n);
  static Point infinity() { return Point(0); }

  bool is_infinity() const { return index_ == 0; }
  /// Only meaningful for finite points.
  Index index() const { return index_; }

  std::string str() const { return is_infinity() ? "inf" : std::to_string(index_); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  explicit Point(Index index) : index_(index) {}
  Index index_;
};

/// Closed subsets of N_inf that the library can represent: a finite set of
/// naturals, or infinity together with a finite set of naturals.
class ClosedSet {
 public:
  static ClosedSet finite(std::vector<Index> points);
  static ClosedSet with_infinity(std::vector<Index> finite_part);

  bool contains_infinity() const { return with_infinity_; }
  const std::vector<Index>& finite_points() const { return points_; }
  bool contains(const Point& p) const;
  /// Largest finite point, 0 when there is none.
  Index max_finite() const { return points_.empty() ? 0 : points_.back(); }

 private:
  ClosedSet(std::vector<Index> points, bool with_infinity);
  std::vector<Index> points_;
  bool with_infinity_;
};

/// f(n) = prefix[n-1] for n <= prefix.size(), tail for larger n and at infinity.
struct EventuallyConstant {
  std::vector<Rational> prefix;
  Rational tail;
};

/// f(j) = 2^-k for 2^(k-1) <= j < 2^k, f(infinity) = 0.
struct DyadicDecay {};

/// Upper bound on sum_{j >= start} alpha_j |f(j+1) - f(j)| for the given weights,
/// or nullopt when no bound is known for that weight family.
using VariationTailBound = std::function<std::optional<Rational>(Index start, const WeightFamily&)>;

/// A member of C(N_inf) given by a rule, with certified tail bounds.
struct RuleBased {
  std::string label;
  std::function<Rational(Index)> value_at;
  Rational limit;
  VariationTailBound variation_bound;
  /// Upper bound on sup_{j >= start} |f(j)|; must be nonincreasing in start.
  std::function<Rational(Index start)> sup_bound;
};

class Element {
 public:
  using Variant = std::variant<EventuallyConstant, DyadicDecay, RuleBased>;

  /// Canonicalises by dropping trailing prefix entries equal to the tail.
  static Element eventually_constant(std::vector<Rational> prefix, Rational tail);
  static Element constant(Rational value) { return eventually_constant({}, std::move(value)); }
  static Element zero() { return constant(Rational(0)); }
  static Element dyadic_decay() { return Element(DyadicDecay{}); }
  static Element rule_based(RuleBased rule);

  const Variant& variant() const { return value_; }
  bool is_exact() const { return std::holds_alternative<EventuallyConstant>(value_); }
  const EventuallyConstant& exact() const;

  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  explicit Element(Variant value) : value_(std::move(value)) {}
  Variant value_;
};

Rational eval(const Element& f, const Point& p);

Element add(const Element& f, const Element& g);
Element sub(const Element& f, const Element& g);
Element mul(const Element& f, const Element& g);
Element scale(const Rational& c, const Element& f);

/// A norm value: exact, or a certified enclosure [lo, hi] obtained by scanning
/// `horizon` terms and bounding the rest.
class NormResult {
 public:
  static NormResult exact(Rational value) { return NormResult(std::move(value)); }
  static NormResult interval(Rational lo, Rational hi, Index horizon);

  bool is_exact() const { return !horizon_.has_value(); }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  /// Exact value; throws when the result is an interval.
  const Rational& value() const;
  std::optional<Index> horizon() const { return horizon_; }

  std::string str() const;

  friend bool operator==(const NormResult&, const NormResult&) = default;

 private:
  explicit NormResult(Rational value) : lo_(value), hi_(std::move(value)) {}
  NormResult(Rational lo, Rational hi, Index horizon)
      : lo_(std::move(lo)), hi_(std::move(hi)), horizon_(horizon) {}

  Rational lo_;
  Rational hi_;
  std::optional<Index> horizon_;
};

NormResult operator+(const NormResult& a, const NormResult& b);

inline constexpr Index kDefaultHorizon = Index{1} << 16;

struct EvalOptions {
  /// Number of terms scanned explicitly before a certified tail bound takes over.
  Index horizon = kDefaultHorizon;
};

NormResult sup_norm(const Element& f, const EvalOptions& options = {});
NormResult weighted_variation(const Element& f, const WeightFamily& w, const EvalOptions& options = {});
/// ||f|| = ||f||_inf + sum_n alpha_n |f(n+1) - f(n)|.
NormResult norm(const Element& f, const WeightFamily& w, const EvalOptions& options = {});

/// The ideals M_x, J_x, I(E), J(E) of A_alpha.
class IdealSpec {
 public:
  enum class Kind { kVanishing, kVanishingNear };

  static IdealSpec m_at(const Point& p);
  static IdealSpec j_at(const Point& p);
  static IdealSpec i_of(ClosedSet set) { return IdealSpec(Kind::kVanishing, std::move(set)); }
  static IdealSpec j_of(ClosedSet set) { return IdealSpec(Kind::kVanishingNear, std::move(set)); }

  Kind kind() const { return kind_; }
  const ClosedSet& set() const { return set_; }

 private:
  IdealSpec(Kind kind, ClosedSet set) : kind_(kind), set_(std::move(set)) {}
  Kind kind_;
  ClosedSet set_;
};

bool in_ideal(const Element& f, const IdealSpec& ideal);

}  // namespace ditkin
