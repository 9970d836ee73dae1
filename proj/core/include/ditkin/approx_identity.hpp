#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ditkin/element.hpp"
#include "ditkin/weights.hpp"

namespace ditkin {

/// e_k: 1 on {1, ..., k}, 0 elsewhere. Lies in J_infinity.
Element make_e(Index k);

/// ||f - e_k f|| computed term by term:
///   sup_{j > k} |f(j)| + sum_{j > k} alpha_j |f(j+1) - f(j)| + alpha_k |f(k+1)|.
/// Exact for eventually constant f; a certified interval over the window
/// k+1 .. k+horizon otherwise. Requires f(infinity) = 0.
NormResult residual_norm(const Element& f, const WeightFamily& w, Index k, const EvalOptions& options = {});

/// norm(f - e_k * f) through the generic element arithmetic. Eventually constant f only.
NormResult residual_oracle(const Element& f, const WeightFamily& w, Index k);

struct DiagnosticRow {
  Index n_k = 0;
  NormResult residual = NormResult::exact(Rational(0));
  Rational alpha_next;  // alpha_{n_k} |f(n_k + 1)|
  Rational alpha_self;  // alpha_{n_k} |f(n_k)|
};

/// The three quantities whose vanishing along (n_k) is equivalent for f in M_infinity.
std::vector<DiagnosticRow> truncation_diagnostics(const Element& f, const WeightFamily& w,
                                                  std::span<const Index> indices,
                                                  const EvalOptions& options = {});

enum class SelectionKind { kBoundedBai, kRunningMin };

std::string_view to_string(SelectionKind kind);

/// Which indices n of (e_n) are kept in a subsequence that is an approximate
/// identity for M_infinity.
class SelectionRule {
 public:
  /// liminf finite: keep n with alpha_n <= liminf + slack (bounded approximate identity).
  /// liminf infinite: keep n where inf { alpha_j : j >= n } is attained at n itself.
  /// Default slack: sup - liminf for bounded weights (every index qualifies),
  /// else 0 when the liminf is attained infinitely often, else 1.
  static SelectionRule for_weights(const WeightFamily& w, std::optional<Rational> slack = std::nullopt);

  SelectionKind kind() const { return kind_; }
  const std::optional<Rational>& liminf() const { return liminf_; }
  const std::optional<Rational>& slack() const { return slack_; }

  bool selects(Index n) const;
  /// Smallest selected index >= n.
  Index next_from(Index n) const;

 private:
  SelectionRule(WeightFamily w, SelectionKind kind) : weights_(std::move(w)), kind_(kind) {}

  WeightFamily weights_;
  SelectionKind kind_;
  std::optional<Rational> liminf_;
  std::optional<Rational> slack_;
};

struct AiSelection {
  SelectionKind kind = SelectionKind::kBoundedBai;
  std::vector<Index> indices;
  std::vector<Rational> norms;  // norms[i] = 1 + alpha_{indices[i]}
  std::optional<Rational> liminf;
  std::optional<Rational> slack;
};

AiSelection select_ai_subsequence(const WeightFamily& w, Index count,
                                  std::optional<Rational> slack = std::nullopt);

struct DitkinOptions {
  EvalOptions eval;
  std::optional<Rational> slack;
  /// Largest candidate index examined before giving up.
  Index search_bound = Index{1} << 40;
};

struct DitkinApproximation {
  Index k = 0;
  NormResult residual = NormResult::exact(Rational(0));
};

/// Finds k in the selected subsequence with ||f - e_k f|| <= tol. Since
/// e_k f lies in J_infinity * M_infinity, this is a finite-stage witness that
/// J_infinity * M_infinity is dense in M_infinity.
DitkinApproximation ditkin_approximation(const Element& f, const WeightFamily& w, const Rational& tol,
                                         const DitkinOptions& options = {});

}  // namespace ditkin
