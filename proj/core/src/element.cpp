#include "ditkin/element.hpp"

#include <algorithm>

#include "ditkin/dyadic.hpp"
#include "ditkin/errors.hpp"

namespace ditkin {

Point Point::at(Index n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "points of N are indexed from 1");
  return Point(n);
}

ClosedSet::ClosedSet(std::vector<Index> points, bool with_infinity)
    : points_(std::move(points)), with_infinity_(with_infinity) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == 0) throw Error(ErrorCode::kInvalidArgument, "closed set points start at 1");
    if (i > 0 && points_[i - 1] >= points_[i]) {
      throw Error(ErrorCode::kInvalidArgument, "closed set points must be strictly increasing");
    }
  }
}

ClosedSet ClosedSet::finite(std::vector<Index> points) { return ClosedSet(std::move(points), false); }

ClosedSet ClosedSet::with_infinity(std::vector<Index> finite_part) {
  return ClosedSet(std::move(finite_part), true);
}

bool ClosedSet::contains(const Point& p) const {
  if (p.is_infinity()) return with_infinity_;
  return std::binary_search(points_.begin(), points_.end(), p.index());
}

Element Element::eventually_constant(std::vector<Rational> prefix, Rational tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  return Element(EventuallyConstant{std::move(prefix), std::move(tail)});
}

Element Element::rule_based(RuleBased rule) {
  if (!rule.value_at) throw Error(ErrorCode::kInvalidArgument, "rule-based element needs value_at");
  return Element(std::move(rule));
}

const EventuallyConstant& Element::exact() const {
  if (const auto* ec = std::get_if<EventuallyConstant>(&value_)) return *ec;
  throw Error(ErrorCode::kUnsupportedOperandKind, "element is not eventually constant");
}

bool operator==(const Element& lhs, const Element& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    return lhs.exact().prefix == rhs.exact().prefix && lhs.exact().tail == rhs.exact().tail;
  }
  // Rules cannot be compared; only the dyadic element is equal to itself.
  return std::holds_alternative<DyadicDecay>(lhs.variant()) &&
         std::holds_alternative<DyadicDecay>(rhs.variant());
}

Rational eval(const Element& f, const Point& p) {
  if (const auto* ec = std::get_if<EventuallyConstant>(&f.variant())) {
    if (p.is_infinity() || p.index() > ec->prefix.size()) return ec->tail;
    return ec->prefix[p.index() - 1];
  }
  if (std::holds_alternative<DyadicDecay>(f.variant())) {
    return p.is_infinity() ? Rational(0) : dyadic_value(p.index());
  }
  const auto& rule = std::get<RuleBased>(f.variant());
  return p.is_infinity() ? rule.limit : rule.value_at(p.index());
}

namespace {

template <class Op>
Element pointwise(const Element& f, const Element& g, Op op, const char* name) {
  if (!f.is_exact() || !g.is_exact()) {
    throw Error(ErrorCode::kUnsupportedOperandKind,
                std::string(name) + " is only defined for eventually constant elements");
  }
  const auto& a = f.exact();
  const auto& b = g.exact();
  const std::size_t len = std::max(a.prefix.size(), b.prefix.size());
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Rational& x = i < a.prefix.size() ? a.prefix[i] : a.tail;
    const Rational& y = i < b.prefix.size() ? b.prefix[i] : b.tail;
    prefix.push_back(op(x, y));
  }
  return Element::eventually_constant(std::move(prefix), op(a.tail, b.tail));
}

}  // namespace

Element add(const Element& f, const Element& g) {
  return pointwise(f, g, [](const Rational& x, const Rational& y) { return x + y; }, "add");
}

Element sub(const Element& f, const Element& g) {
  return pointwise(f, g, [](const Rational& x, const Rational& y) { return x - y; }, "sub");
}

Element mul(const Element& f, const Element& g) {
  return pointwise(f, g, [](const Rational& x, const Rational& y) { return x * y; }, "mul");
}

Element scale(const Rational& c, const Element& f) {
  if (const auto* ec = std::get_if<EventuallyConstant>(&f.variant())) {
    std::vector<Rational> prefix;
    prefix.reserve(ec->prefix.size());
    for (const auto& v : ec->prefix) prefix.push_back(c * v);
    return Element::eventually_constant(std::move(prefix), c * ec->tail);
  }

  const Rational magnitude = c.abs();
  RuleBased scaled;
  if (std::holds_alternative<DyadicDecay>(f.variant())) {
    scaled.label = c.str() + "*dyadic_decay";
    scaled.value_at = [c](Index j) { return c * dyadic_value(j); };
    scaled.limit = Rational(0);
    scaled.variation_bound = [magnitude](Index start, const WeightFamily& w) -> std::optional<Rational> {
      return magnitude * dyadic_variation_tail(w, start);
    };
    scaled.sup_bound = [magnitude](Index start) { return magnitude * dyadic_value(start); };
    return Element::rule_based(std::move(scaled));
  }

  const auto& rule = std::get<RuleBased>(f.variant());
  scaled.label = c.str() + "*" + rule.label;
  scaled.value_at = [c, inner = rule.value_at](Index j) { return c * inner(j); };
  scaled.limit = c * rule.limit;
  if (rule.variation_bound) {
    scaled.variation_bound = [magnitude, inner = rule.variation_bound](
                                 Index start, const WeightFamily& w) -> std::optional<Rational> {
      auto bound = inner(start, w);
      if (!bound) return std::nullopt;
      return magnitude * *bound;
    };
  }
  if (rule.sup_bound) {
    scaled.sup_bound = [magnitude, inner = rule.sup_bound](Index start) { return magnitude * inner(start); };
  }
  return Element::rule_based(std::move(scaled));
}

NormResult NormResult::interval(Rational lo, Rational hi, Index horizon) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "interval with lo > hi");
  return NormResult(std::move(lo), std::move(hi), horizon);
}

const Rational& NormResult::value() const {
  if (!is_exact()) throw Error(ErrorCode::kInvalidArgument, "norm result is an interval: " + str());
  return lo_;
}

std::string NormResult::str() const {
  if (is_exact()) return lo_.str();
  return "[" + lo_.str() + ", " + hi_.str() + "] (horizon " + std::to_string(*horizon_) + ")";
}

NormResult operator+(const NormResult& a, const NormResult& b) {
  if (a.is_exact() && b.is_exact()) return NormResult::exact(a.lo() + b.lo());
  const Index horizon = std::max(a.horizon().value_or(0), b.horizon().value_or(0));
  return NormResult::interval(a.lo() + b.lo(), a.hi() + b.hi(), horizon);
}

}  // namespace ditkin
