#include <doctest.h>

#include "ditkin/classifier.hpp"
#include "ditkin/errors.hpp"
#include "ditkin/weights.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ditkin;
using ditkin::testing::direct_weight;
using ditkin::testing::Gen;
using ditkin::testing::scan_min;

namespace {

WeightFamily odd_even_family() { return dyadic_counterexample().weights; }

Index structural_span(const WeightFamily& w) {
  return w.normal_form().explicit_until() + 2 * w.normal_form().period() + 2;
}

}  // namespace

TEST_CASE("weight_at") {
  CHECK(weight_at(odd_even_family(), 4) == Rational(2));
  CHECK(weight_at(odd_even_family(), 5) == Rational(1));
  CHECK(weight_at(WeightFamily::constant(1), 1000000) == Rational(1));
  CHECK(weight_at(WeightFamily::linear(0, 1), 7) == Rational(7));
  const auto w = WeightFamily::prefixed({Rational(9), Rational(8)}, WeightFamily::linear(0, 1));
  CHECK(weight_at(w, 1) == Rational(9));
  CHECK(weight_at(w, 2) == Rational(8));
  CHECK(weight_at(w, 3) == Rational(3));
  CHECK_THROWS_AS(weight_at(w, 0), Error);
}

TEST_CASE("construction enforces positivity") {
  CHECK_THROWS_AS(WeightFamily::constant(0), Error);
  CHECK_THROWS_AS(WeightFamily::constant(-1), Error);
  CHECK_THROWS_AS(WeightFamily::linear(0, 0), Error);
  CHECK_THROWS_AS(WeightFamily::linear(-1, 2), Error);
  CHECK_THROWS_AS(WeightFamily::interleave({WeightFamily::constant(1)}), Error);
  CHECK_THROWS_AS(WeightFamily::prefixed({Rational(0)}, WeightFamily::constant(1)), Error);
}

TEST_CASE("tail_infimum examples") {
  const TailInf odd_even = tail_infimum(odd_even_family(), 3);
  CHECK(odd_even.value == Rational(1));
  CHECK(odd_even.attained_at == Index{3});
  // Brute-force scan to 100 agrees.
  CHECK(scan_min(odd_even_family(), 3, 100) == std::make_pair(Rational(1), Index{3}));

  const TailInf c = tail_infimum(WeightFamily::constant(Rational(5, 2)), 17);
  CHECK(c.value == Rational(5, 2));
  CHECK(c.attained_at == Index{17});

  const TailInf l = tail_infimum(WeightFamily::linear(0, 1), 5);
  CHECK(l.value == Rational(5));
  CHECK(l.attained_at == Index{5});

  // A small prefix entry wins over the tail rule.
  const auto pre = WeightFamily::prefixed({Rational(3), Rational(1, 2), Rational(4)}, WeightFamily::linear(1, 1));
  CHECK(tail_infimum(pre, 1).attained_at == Index{2});
  CHECK(tail_infimum(pre, 3).value == Rational(4));
  CHECK(tail_infimum(pre, 3).attained_at == Index{3});
}

TEST_CASE("classify_weights examples") {
  const auto odd_even = classify_weights(odd_even_family());
  CHECK_FALSE(odd_even.bounded());
  CHECK(odd_even.liminf == Rational(1));
  CHECK_FALSE(odd_even.nondecreasing);
  CHECK_FALSE(odd_even.diverges_to_infinity);

  const auto one = classify_weights(WeightFamily::constant(1));
  CHECK(one.sup == Rational(1));
  CHECK(one.liminf == Rational(1));
  CHECK(one.nondecreasing);
  CHECK_FALSE(one.diverges_to_infinity);

  const auto lin = classify_weights(WeightFamily::linear(0, 1));
  CHECK_FALSE(lin.bounded());
  CHECK_FALSE(lin.liminf.has_value());
  CHECK(lin.nondecreasing);
  CHECK(lin.diverges_to_infinity);

  // Interleaved ramps are not monotone when the odd ramp starts higher.
  const auto ramps = WeightFamily::interleave({WeightFamily::linear(0, 1), WeightFamily::linear(100, 1)});
  CHECK_FALSE(classify_weights(ramps).nondecreasing);
  // ... but are when they interlock.
  const auto interlocked = WeightFamily::interleave({WeightFamily::linear(0, 1), WeightFamily::linear(0, 1)});
  CHECK(classify_weights(interlocked).nondecreasing);
  // Eventually decreasing gap far beyond the first period.
  const auto slow = WeightFamily::interleave({WeightFamily::linear(0, 2), WeightFamily::linear(50, 1)});
  CHECK_FALSE(classify_weights(slow).nondecreasing);
}

TEST_CASE("nested interleaves only count reachable parts") {
  // Inner parts are indexed by n mod 2 on odd n only, so the ramp is never used.
  const auto inner = WeightFamily::interleave({WeightFamily::linear(0, 1), WeightFamily::constant(3)});
  const auto w = WeightFamily::interleave({WeightFamily::constant(5), inner});
  const auto cls = classify_weights(w);
  CHECK(cls.sup == Rational(5));
  CHECK(cls.liminf == Rational(3));
  CHECK(tail_lower_bound(w, 1) == Rational(3));
  CHECK(tail_infimum(w, 10).value == Rational(3));
}

TEST_CASE("tail_infimum invariants on random families") {
  Gen gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightFamily w = gen.family();
    const auto cls = classify_weights(w);
    Rational previous(0);
    for (Index n = 1; n <= 200; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      const TailInf inf = tail_infimum(w, n);
      const Rational alpha = weight_at(w, n);
      REQUIRE(inf.attained());
      CHECK(alpha == direct_weight(w, n));
      CHECK(alpha >= inf.value);
      CHECK((alpha == inf.value) == (inf.attained_at == n));
      CHECK(inf.value >= previous);
      previous = inf.value;
      if (cls.liminf) CHECK(inf.value <= *cls.liminf);

      // Brute-force oracle up to the certified horizon.
      REQUIRE(inf.certified_horizon >= *inf.attained_at);
      REQUIRE(inf.certified_horizon - n < 100000);
      const auto [brute, brute_at] = scan_min(w, n, inf.certified_horizon);
      CHECK(brute == inf.value);
      CHECK(brute_at == *inf.attained_at);
    }
  }
}

TEST_CASE("tail_lower_bound is a sound, nondecreasing bound") {
  Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightFamily w = gen.family();
    Rational previous(0);
    for (Index n = 1; n <= 80; n += 3) {
      const Rational bound = tail_lower_bound(w, n);
      CHECK(bound >= previous);
      previous = bound;
      CHECK(bound <= scan_min(w, n, n + 120).first);
    }
  }
}

TEST_CASE("liminf is approached infinitely often") {
  Gen gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightFamily w = gen.mixed_family();
    const auto cls = classify_weights(w);
    REQUIRE(cls.liminf);
    CHECK_FALSE(cls.bounded());
    CHECK(liminf_attained_infinitely_often(w));
    const Rational target = *cls.liminf + Rational(1, gen.integer(1, 1000));
    // Every window of one period past the explicit part meets the liminf.
    const Index span = structural_span(w);
    for (Index start : {Index{1}, Index{200}, Index{5000}}) {
      bool hit = false;
      for (Index n = start; n <= start + span && !hit; ++n) hit = direct_weight(w, n) <= target;
      CHECK(hit);
    }
  }
}

TEST_CASE("classification agrees with how families were built") {
  Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightFamily b = gen.bounded_family();
    const auto cb = classify_weights(b);
    REQUIRE(cb.bounded());
    const Index span = structural_span(b);
    Rational brute_sup(0);
    for (Index n = 1; n <= span; ++n) brute_sup = std::max(brute_sup, direct_weight(b, n));
    CHECK(*cb.sup == brute_sup);
    CHECK(cb.liminf.has_value());
    CHECK(*cb.liminf <= *cb.sup);

    const auto cd = classify_weights(gen.divergent_family());
    CHECK_FALSE(cd.bounded());
    CHECK(cd.diverges_to_infinity);
    CHECK_FALSE(cd.liminf.has_value());

    const WeightFamily nd = gen.nondecreasing_family();
    const auto cn = classify_weights(nd);
    CHECK(cn.nondecreasing);
    if (cn.nondecreasing && !cn.bounded()) CHECK(cn.diverges_to_infinity);
  }
}

TEST_CASE("nondecreasing flag is never wrong on a finite window") {
  Gen gen(15);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightFamily w = gen.family();
    if (!classify_weights(w).nondecreasing) continue;
    for (Index n = 1; n <= 300; ++n) CHECK(direct_weight(w, n) <= direct_weight(w, n + 1));
  }
}

TEST_CASE("first_index_exceeding matches a scan") {
  Gen gen(16);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightFamily w = trial % 2 == 0 ? gen.mixed_family() : gen.bounded_family();
    const Rational threshold = gen.positive(40, 3);
    const auto hit = first_index_exceeding(w, threshold);
    const auto cls = classify_weights(w);
    if (cls.bounded() && *cls.sup <= threshold) {
      CHECK_FALSE(hit.has_value());
      continue;
    }
    REQUIRE(hit.has_value());
    CHECK(direct_weight(w, *hit) > threshold);
    for (Index n = 1; n < *hit; ++n) CHECK(direct_weight(w, n) <= threshold);
  }
}
