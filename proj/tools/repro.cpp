#include "ditkin/approx_identity.hpp"
#include "ditkin/classifier.hpp"
#include "ditkin/errors.hpp"
#include "cli.hpp"

namespace ditkin::cli {

namespace {

template <class F>
ReproCheck check(std::string name, std::string expected, F&& compute) {
  ReproCheck c{std::move(name), std::move(expected), {}, false};
  try {
    auto [computed, pass] = compute();
    c.computed = std::move(computed);
    c.pass = pass;
  } catch (const Error& e) {
    c.computed = std::string("error: ") + e.what();
  }
  return c;
}

}  // namespace

std::vector<ReproCheck> repro_checks(const WeightFamily& w, const EvalOptions& options) {
  const Element f = Element::dyadic_decay();
  std::vector<ReproCheck> checks;

  // Jumps of f sit at j = 2^k - 1, each weighted term equal to 2^(-k-1).
  for (long k = 1; k <= 20; ++k) {
    const Index j = (Index{1} << k) - 1;
    const Rational expected = Rational::pow2(-k - 1);
    checks.push_back(check("jump_term[k=" + std::to_string(k) + "]", expected.str(), [&] {
      const Rational term = weight_at(w, j) * (eval(f, Point::at(j + 1)) - eval(f, Point::at(j))).abs();
      return std::make_pair(term.str(), term == expected);
    }));
  }

  // alpha_{2^k} f(2^k) stays at 1/4, so alpha_n f(n) does not tend to 0.
  for (long k = 1; k <= 20; ++k) {
    const Index n = Index{1} << k;
    checks.push_back(check("alpha_f[k=" + std::to_string(k) + "]", "1/4", [&] {
      const Rational value = weight_at(w, n) * eval(f, Point::at(n));
      return std::make_pair(value.str(), value == Rational(1, 4));
    }));
  }

  for (long m = 1; m <= 12; ++m) {
    const Index k = Index{1} << m;
    checks.push_back(check("residual_lower[k=2^" + std::to_string(m) + "]", ">= 1/4", [&] {
      const NormResult r = residual_norm(f, w, k, options);
      return std::make_pair(r.str(), r.lo() >= Rational(1, 4));
    }));
  }

  checks.push_back(check("norm", "1", [&] {
    const NormResult r = norm(f, w, options);
    return std::make_pair(r.str(), r.is_exact() && r.value() == Rational(1));
  }));

  checks.push_back(check("in_M_inf", "true", [&] {
    const bool in = in_ideal(f, IdealSpec::m_at(Point::infinity()));
    return std::make_pair(std::string(in ? "true" : "false"), in);
  }));
  checks.push_back(check("in_J_inf", "false", [&] {
    const bool in = in_ideal(f, IdealSpec::j_at(Point::infinity()));
    return std::make_pair(std::string(in ? "true" : "false"), !in);
  }));

  checks.push_back(check("strong_ditkin_not_dales", "strong_ditkin=true bru_dales=false", [&] {
    const PropertyReport report = property_report(w);
    std::string computed = std::string("strong_ditkin=") + (report.strong_ditkin ? "true" : "false") +
                           " bru_dales=" + (report.bru_dales ? "true" : "false");
    return std::make_pair(std::move(computed), report.strong_ditkin && !report.bru_dales);
  }));

  return checks;
}

}  // namespace ditkin::cli
