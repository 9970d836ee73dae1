#include <doctest.h>

#include "ditkin/approx_identity.hpp"
#include "ditkin/classifier.hpp"
#include "ditkin/dyadic.hpp"
#include "ditkin/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ditkin;
using ditkin::testing::direct_norm;
using ditkin::testing::direct_weight;
using ditkin::testing::Gen;
using ditkin::testing::sample;

namespace {

WeightFamily odd_even_family() { return dyadic_counterexample().weights; }

Element ec(std::vector<Rational> prefix, Rational tail) {
  return Element::eventually_constant(std::move(prefix), std::move(tail));
}

// f(j) = 2^-k on the block 2^(k-1) <= j < 2^k, found by walking blocks.
Rational block_value(Index j) {
  long k = 1;
  while ((Index{1} << k) <= j) ++k;
  return Rational::pow2(-k);
}

// f(j) = 2^-j with exact tails for constant weights only.
Element geometric() {
  RuleBased rule;
  rule.label = "geometric";
  rule.value_at = [](Index j) { return Rational::pow2(-static_cast<long>(j)); };
  rule.limit = Rational(0);
  rule.variation_bound = [](Index start, const WeightFamily& w) -> std::optional<Rational> {
    const auto* c = std::get_if<ConstantWeights>(&w.node().rule);
    if (c == nullptr) return std::nullopt;
    return c->value * Rational::pow2(-static_cast<long>(start));
  };
  rule.sup_bound = [](Index start) { return Rational::pow2(-static_cast<long>(start)); };
  return Element::rule_based(std::move(rule));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("eval") {
  const Element dyadic = Element::dyadic_decay();
  CHECK(eval(dyadic, Point::at(3)) == Rational(1, 4));
  CHECK(eval(dyadic, Point::at(1)) == Rational(1, 2));
  CHECK(eval(dyadic, Point::at(8)) == Rational(1, 16));
  CHECK(eval(dyadic, Point::infinity()).is_zero());
  CHECK(eval(Element::constant(1), Point::infinity()) == Rational(1));
  CHECK(eval(ec({Rational(1), Rational(1, 2)}, 0), Point::at(2)) == Rational(1, 2));
  CHECK(eval(ec({Rational(1), Rational(1, 2)}, 0), Point::at(9)).is_zero());
  CHECK_THROWS_AS(Point::at(0), Error);
}

TEST_CASE("pointwise arithmetic on the exact tier") {
  CHECK(mul(make_e(3), make_e(5)) == make_e(3));
  const Element f = ec({Rational(1), Rational(1, 2)}, 0);
  CHECK(sub(f, f) == Element::zero());
  CHECK(mul(f, ec({Rational(0), Rational(2)}, 1)) == ec({Rational(0), Rational(1)}, 0));
  CHECK(add(make_e(2), make_e(2)) == ec({Rational(2), Rational(2)}, 0));
  // Canonical form drops trailing entries equal to the tail.
  CHECK(ec({Rational(1), Rational(0), Rational(0)}, 0).exact().prefix.size() == 1);

  CHECK(code_of([&] { add(f, Element::dyadic_decay()); }) == ErrorCode::kUnsupportedOperandKind);
  CHECK(code_of([&] { mul(geometric(), f); }) == ErrorCode::kUnsupportedOperandKind);
}

TEST_CASE("pointwise arithmetic agrees with coordinatewise evaluation") {
  Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Element f = gen.exact_element(12, gen.coin());
    const Element g = gen.exact_element(12, gen.coin());
    const Rational c = gen.rational(9, 9);
    const Element sum = add(f, g);
    const Element prod = mul(f, g);
    const Element scaled = scale(c, f);
    for (Index n = 1; n <= 16; ++n) {
      const Point p = Point::at(n);
      CHECK(eval(sum, p) == eval(f, p) + eval(g, p));
      CHECK(eval(prod, p) == eval(f, p) * eval(g, p));
      CHECK(eval(scaled, p) == c * eval(f, p));
    }
    const std::size_t longest = std::max(f.exact().prefix.size(), g.exact().prefix.size());
    CHECK(sum.exact().prefix.size() <= longest);
    CHECK(prod.exact().prefix.size() <= longest);
  }
}

TEST_CASE("sup_norm") {
  CHECK(sup_norm(ec({Rational(1), Rational(1, 2)}, 0)) == NormResult::exact(1));
  CHECK(sup_norm(Element::constant(1)) == NormResult::exact(1));
  CHECK(sup_norm(ec({Rational(-3)}, 2)) == NormResult::exact(3));

  // Oracle: scan the block definition up to 2^20.
  Rational brute(0);
  for (Index j = 1; j <= (Index{1} << 20); j = j * 2) brute = std::max(brute, block_value(j));
  for (Index j = 1; j <= 4096; ++j) brute = std::max(brute, block_value(j));
  CHECK(sup_norm(Element::dyadic_decay()) == NormResult::exact(brute));
  CHECK(brute == Rational(1, 2));
}

TEST_CASE("dyadic values match the block definition") {
  for (Index j = 1; j <= 5000; ++j) CHECK(dyadic_value(j) == block_value(j));
}

TEST_CASE("weighted_variation") {
  const Element f = ec({Rational(1), Rational(1, 2)}, 0);
  // 1 * |1/2 - 1| + 2 * |0 - 1/2|
  CHECK(weighted_variation(f, WeightFamily::linear(0, 1)) == NormResult::exact(Rational(3, 2)));
  CHECK(weighted_variation(f, WeightFamily::linear(0, 1)).value() ==
        direct_norm(sample(f.exact()), WeightFamily::linear(0, 1)) - Rational(1));
  // Sum over k of 2^(-k-1).
  CHECK(weighted_variation(Element::dyadic_decay(), odd_even_family()) == NormResult::exact(Rational(1, 2)));
  CHECK(weighted_variation(Element::constant(7), odd_even_family()) == NormResult::exact(0));
  CHECK(weighted_variation(Element::dyadic_decay(), WeightFamily::constant(3)) ==
        NormResult::exact(Rational(3, 2)));
}

TEST_CASE("dyadic element is not in A_alpha for a linear ramp") {
  CHECK(code_of([] { weighted_variation(Element::dyadic_decay(), WeightFamily::linear(0, 1)); }) ==
        ErrorCode::kNotInAlgebra);
  CHECK(code_of([] { norm(Element::dyadic_decay(), WeightFamily::linear(2, 1)); }) == ErrorCode::kNotInAlgebra);
  // Even-index ramp never touches the jumps at 2^k - 1: still finite.
  CHECK(weighted_variation(Element::dyadic_decay(), odd_even_family()).is_exact());
}

TEST_CASE("dyadic closed-form tail agrees with brute-force partial sums") {
  Gen gen(22);
  constexpr Index kScan = Index{1} << 14;
  for (int trial = 0; trial < 25; ++trial) {
    const WeightFamily w = trial == 0 ? odd_even_family() : gen.bounded_family();
    Rational partial(0);
    for (Index j = 1; j <= kScan; ++j) {
      partial += direct_weight(w, j) * (block_value(j + 1) - block_value(j)).abs();
    }
    const Rational total = dyadic_variation_tail(w, 1);
    const Rational rest = dyadic_variation_tail(w, kScan + 1);
    CHECK(total == partial + rest);
    // Remaining jumps sit at 2^k - 1 for k >= 15, each weighted by at most sup alpha
    // (1 for the counterexample family, whose odd-index weights are all 1).
    const Rational sup = trial == 0 ? Rational(1) : *classify_weights(w).sup;
    CHECK(rest.sign() >= 0);
    CHECK(rest <= sup * Rational::pow2(-15));
  }
}

TEST_CASE("norm") {
  Gen gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightFamily w = gen.family();
    const Index k = gen.index(1, 200);
    CHECK(norm(make_e(k), w) == NormResult::exact(Rational(1) + direct_weight(w, k)));
    CHECK(norm(Element::constant(1), w) == NormResult::exact(1));
  }
  CHECK(norm(Element::dyadic_decay(), odd_even_family()) == NormResult::exact(1));
}

TEST_CASE("norm axioms on the exact tier") {
  Gen gen(24);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightFamily w = gen.family();
    const Element f = gen.exact_element(20, gen.coin());
    const Element g = gen.exact_element(20, gen.coin());
    const Rational c = gen.rational(20, 20);
    const Rational nf = norm(f, w).value();
    const Rational ng = norm(g, w).value();
    CHECK(nf == direct_norm(sample(f.exact()), w));
    CHECK(norm(add(f, g), w).value() <= nf + ng);
    CHECK(norm(scale(c, f), w).value() == c.abs() * nf);
    CHECK(norm(mul(f, g), w).value() <= nf * ng);
    CHECK(nf >= sup_norm(f).value());
    CHECK((nf.is_zero()) == (f == Element::zero()));
  }
}

TEST_CASE("rule-based elements give certified intervals") {
  const Element g = geometric();
  const WeightFamily w = WeightFamily::constant(3);
  const NormResult coarse = norm(g, w, EvalOptions{4});
  const NormResult fine = norm(g, w, EvalOptions{16});
  REQUIRE_FALSE(coarse.is_exact());
  CHECK(coarse.horizon() == Index{4});
  // True value: sup 1/2, variation 3 * sum_{j>=1} 2^(-j-1) = 3/2.
  CHECK(coarse.lo() <= Rational(2));
  CHECK(coarse.hi() >= Rational(2));
  CHECK(fine.lo() >= coarse.lo());
  CHECK(fine.hi() <= coarse.hi());
  CHECK(fine.lo() <= Rational(2));
  CHECK(fine.hi() >= Rational(2));

  CHECK(code_of([&] { weighted_variation(g, WeightFamily::linear(0, 1), EvalOptions{8}); }) ==
        ErrorCode::kMissingTailBound);
  RuleBased no_sup;
  no_sup.label = "bare";
  no_sup.value_at = [](Index) { return Rational(0); };
  CHECK(code_of([&] { sup_norm(Element::rule_based(no_sup), EvalOptions{8}); }) == ErrorCode::kMissingTailBound);
}

TEST_CASE("interval soundness under horizon refinement") {
  const Element half_dyadic = scale(Rational(1, 2), Element::dyadic_decay());
  const WeightFamily w = odd_even_family();
  NormResult previous = norm(half_dyadic, w, EvalOptions{1});
  for (Index h = 2; h <= 4096; h *= 2) {
    const NormResult next = norm(half_dyadic, w, EvalOptions{h});
    CHECK(next.lo() >= previous.lo());
    CHECK(next.hi() <= previous.hi());
    CHECK(next.lo() <= Rational(1, 2));
    CHECK(next.hi() >= Rational(1, 2));
    previous = next;
  }
  // Scaling by c scales both endpoints.
  const NormResult doubled = norm(scale(Rational(-2), Element::dyadic_decay()), w, EvalOptions{64});
  CHECK(doubled.lo() <= Rational(2));
  CHECK(doubled.hi() >= Rational(2));
}

TEST_CASE("ideal membership") {
  CHECK(in_ideal(make_e(5), IdealSpec::j_at(Point::infinity())));
  CHECK(in_ideal(Element::dyadic_decay(), IdealSpec::m_at(Point::infinity())));
  CHECK_FALSE(in_ideal(Element::dyadic_decay(), IdealSpec::j_at(Point::infinity())));
  const Element f = ec({Rational(1), Rational(1), Rational(0), Rational(1)}, 1);
  CHECK(in_ideal(f, IdealSpec::m_at(Point::at(3))));
  CHECK(in_ideal(f, IdealSpec::j_at(Point::at(3))));
  CHECK_FALSE(in_ideal(f, IdealSpec::m_at(Point::at(2))));
  CHECK_FALSE(in_ideal(f, IdealSpec::m_at(Point::infinity())));

  const Element g = ec({Rational(0), Rational(5), Rational(0)}, 0);
  CHECK(in_ideal(g, IdealSpec::i_of(ClosedSet::with_infinity({1, 3}))));
  CHECK(in_ideal(g, IdealSpec::j_of(ClosedSet::with_infinity({1, 3}))));
  CHECK_FALSE(in_ideal(g, IdealSpec::i_of(ClosedSet::finite({1, 2}))));

  CHECK(in_ideal(geometric(), IdealSpec::m_at(Point::infinity())));
  CHECK_FALSE(in_ideal(geometric(), IdealSpec::m_at(Point::at(1))));
  CHECK(code_of([] { in_ideal(geometric(), IdealSpec::j_at(Point::infinity())); }) ==
        ErrorCode::kUndecidableMembership);
  CHECK_THROWS_AS(ClosedSet::finite({3, 2}), Error);
}

TEST_CASE("J membership implies M membership, and they agree on N") {
  Gen gen(25);
  for (int trial = 0; trial < 300; ++trial) {
    const Element f = gen.exact_element(8, gen.coin());
    const Point p = gen.integer(0, 4) == 0 ? Point::infinity() : Point::at(gen.index(1, 10));
    const bool in_j = in_ideal(f, IdealSpec::j_at(p));
    const bool in_m = in_ideal(f, IdealSpec::m_at(p));
    if (in_j) CHECK(in_m);
    if (!p.is_infinity()) CHECK(in_j == in_m);
  }
}
