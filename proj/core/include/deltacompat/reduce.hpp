#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deltacompat/ops.hpp"

namespace deltacompat {

/// Nonnegative integers i for which a and phi^i(b) share a factor that
/// moves under phi (positive degree in the operator variable; for q-shifts
/// powers of y are ignored). `max` is 0 when there are no hits.
struct DispersionResult {
  OpRef op;
  std::vector<long> hits;
  long max = 0;
};

DispersionResult dispersion(const MultiPoly& a, const MultiPoly& b, OpRef op);

/// The common factor of a and phi^i(b) that moves under phi, monic; 1 when
/// there is none. This is the exact test that confirms a dispersion hit.
MultiPoly moving_gcd(const MultiPoly& a, const MultiPoly& b, OpRef op, long i);

enum class ReduceMode { Reduced, Standard };

/// f = log_quotient(op, shell) * core.
struct ReducedDecomposition {
  RatFunc shell;
  RatFunc core;
  OpRef op;
  ReduceMode mode;
};

ReducedDecomposition reduced_decompose(const RatFunc& f, OpRef op,
                                       ReduceMode mode = ReduceMode::Reduced);

/// A z with log_quotient(op, z) = r that is free of `forbidden_vars`, or
/// nullopt when none exists. z is monic over F.
std::optional<RatFunc> solve_quotient(OpRef op, const RatFunc& r,
                                      const std::vector<std::size_t>& forbidden_vars,
                                      const EvalOptions& options = {});

/// Decides whether beta = d(g)/dt_i / g for some g in F(t). On success the
/// witness lists pairs (d, c) with g = prod d^c and integer c.
using LogWitness = std::vector<std::pair<MultiPoly, long>>;
std::optional<LogWitness> is_log_derivative(std::size_t i, const RatFunc& beta);

/// g = prod d^c for a witness list (1 for an empty one).
RatFunc witness_product(const ContextPtr& ctx, const LogWitness& w);

/// A common f with log_quotient(op, f) = log_quotient(op, g) for every
/// target (op, g). Only shifts and q-shifts; operators pairwise distinct.
/// Throws NotCompatible naming the operator whose equation fails.
RatFunc merge_rational_solution(const ContextPtr& ctx,
                                const std::vector<std::pair<OpRef, RatFunc>>& targets,
                                const EvalOptions& options = {});

/// A common z with log_quotient(op, z) = r for every (op, r), or nullopt.
/// Same operator restrictions as merge_rational_solution.
std::optional<RatFunc> solve_certificates(const ContextPtr& ctx,
                                          const std::vector<std::pair<OpRef, RatFunc>>& certs,
                                          const EvalOptions& options = {});

}  // namespace deltacompat
