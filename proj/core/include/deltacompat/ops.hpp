#pragma once

#include <cstdint>
#include <string>

#include "deltacompat/ratfunc.hpp"

namespace deltacompat {

/// One operator of the set Delta: the derivation d/dt_i, the shift
/// x_j -> x_j + 1, or the q-shift y_k -> q_k y_k. Indices are 0-based.
struct OpRef {
  enum class Kind : unsigned char { Delta, Sigma, Tau };
  Kind kind;
  std::size_t index;

  static OpRef delta(std::size_t i) { return {Kind::Delta, i}; }
  static OpRef sigma(std::size_t j) { return {Kind::Sigma, j}; }
  static OpRef tau(std::size_t k) { return {Kind::Tau, k}; }

  /// The variable the operator acts on.
  std::size_t variable(const VarContext& ctx) const;
  /// Checks the index against the context; throws InvalidVariable.
  void validate(const VarContext& ctx) const;

  /// "delta_1", "sigma_2", "tau_1" (1-based, for reports).
  std::string label() const;

  auto operator<=>(const OpRef&) const = default;
};

/// Delta: derivative (power must be 1). Sigma: x_j -> x_j + power.
/// Tau: y_k -> q_k^power y_k.
RatFunc apply(OpRef op, const RatFunc& f, long power = 1);

/// Delta: d(f)/f. Sigma and Tau: phi(f)/f. Throws ZeroInput on zero.
RatFunc log_quotient(OpRef op, const RatFunc& f);

/// Polynomial-level shift / q-shift (Delta rejected). For Tau with a
/// negative power the result is scaled by a power of q_k to stay polynomial.
MultiPoly apply_poly(OpRef op, const MultiPoly& p, long power = 1);

struct EvalOptions {
  std::uint64_t seed = 1;
  unsigned retry_budget = 64;
};

/// Rational points for `kill_vars` (in the given order) at which none of
/// `nonvanishing` becomes zero. Points spiral outward through 0, 1, -1, 2,
/// -2, ...; attempt k assigns to the r-th variable the spiral entry with
/// index seed + k * (r + 1). Throws RetryBudgetExhausted.
std::vector<mpq_class> proper_point(const std::vector<MultiPoly>& nonvanishing,
                                    const std::vector<std::size_t>& kill_vars,
                                    const EvalOptions& options = {});

/// Substitutes a proper point for kill_vars: the result is well-defined and
/// nonzero whenever f is nonzero. q-parameters cannot be killed.
RatFunc proper_evaluate(const RatFunc& f, const std::vector<std::size_t>& kill_vars,
                        const EvalOptions& options = {});

/// Evaluates num and den of f at the given point (same order as vars).
RatFunc evaluate_at(const RatFunc& f, const std::vector<std::size_t>& vars,
                    const std::vector<mpq_class>& point);

}  // namespace deltacompat
