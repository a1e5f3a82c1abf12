#pragma once

#include <random>
#include <vector>

#include "deltacompat/compat.hpp"
#include "deltacompat/structure.hpp"

namespace dc_test {

using namespace deltacompat;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  long nonzero(long lo, long hi) {
    for (;;)
      if (long v = uniform(lo, hi); v != 0) return v;
  }
  bool chance(int num, int den) { return uniform(1, den) <= num; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

 private:
  std::mt19937_64 gen_;
};

/// Sparse polynomial in `vars` with 1..max_terms terms of total degree at
/// most max_deg, coefficients in [-9, 9]. When q_var is given, some terms
/// pick up a factor q. Never constant when nonconstant is set and vars is
/// nonempty.
MultiPoly random_poly(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars, unsigned max_deg,
                      unsigned max_terms, std::optional<std::size_t> q_var = {}, bool nonconstant = true);

/// num/den, both random_poly; den may be 1.
RatFunc random_ratfunc(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars, unsigned max_deg,
                       unsigned max_terms, std::optional<std::size_t> q_var = {});

/// A context with l, m, n variables named t1.., x1.., y1.., q1.. (plain t, x,
/// y, q when the block has one variable).
ContextPtr make_context(std::size_t l, std::size_t m, std::size_t n);

/// A representation whose residual part (beta, lambda, mu) is compatible by
/// construction: beta_i = d_i P + r_i(t_i), lambda_j = c_j r_j(x_j) times a
/// shared rising factorial in a linear form of x, mu_k = c_k r_k(y_k).
Representation random_representation(Rng& rng, const ContextPtr& ctx);

// ---- independent oracles ----

/// Value of f at a point (one rational per context variable); nullopt when
/// the denominator vanishes there.
std::optional<mpq_class> value_at(const RatFunc& f, const std::vector<mpq_class>& point);
/// d f / d var at the point via dual numbers.
std::optional<mpq_class> derivative_at(const RatFunc& f, std::size_t var, const std::vector<mpq_class>& point);

/// Checks conditions (2)-(8) by exact evaluation at `points` random points
/// (shifts move the point, derivatives use dual numbers). True means every
/// condition held at every point.
bool pointwise_compatible(const CertificateSystem& sys, Rng& rng, int points = 3);

/// i in [0, bound] such that a and phi^i(b) share a factor that moves
/// under phi, by direct gcd at each i.
std::vector<long> brute_dispersion(const MultiPoly& a, const MultiPoly& b, OpRef op, long bound);

/// True when gcd(den, phi^i(num)) has no moving factor for every i in [-B, B].
bool coprime_scan(const RatFunc& core, OpRef op, long bound);

/// phi(f)/f computed by substitution (no operator engine).
RatFunc quotient_by_substitution(OpRef op, const RatFunc& f);

}  // namespace dc_test
