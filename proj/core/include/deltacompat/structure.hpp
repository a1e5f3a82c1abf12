#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltacompat/compat.hpp"
#include "deltacompat/lattice.hpp"
#include "deltacompat/reduce.hpp"

namespace deltacompat {

/// (f, alpha, beta, lambda, mu) with
///   u_i = d_i(f)/f + sum_j x_j d_i(alpha_j)/alpha_j + beta_i,
///   v_j = sigma_j(f)/f * alpha_j * lambda_j,
///   w_k = tau_k(f)/f * mu_k.
/// alpha_j, beta_i lie in F(t), lambda_j in F(x), mu_k in F(y).
struct Representation {
  ContextPtr ctx;
  RatFunc f;
  std::vector<RatFunc> alpha;
  std::vector<RatFunc> beta;
  std::vector<RatFunc> lambda;
  std::vector<RatFunc> mu;

  /// Block membership, lengths and nonvanishing.
  /// Throws StructureViolation("membership", ...).
  void validate() const;
  /// f nonsplit in every block and monic over F, alpha_j monic over F.
  bool is_standard() const;

  bool operator==(const Representation& o) const = default;
};

/// The certificate system a representation describes.
CertificateSystem build_system(const Representation& r);

/// The (beta, lambda, mu) part as a certificate system.
CertificateSystem residual_system(const Representation& r);

/// Runs the four-step construction. Throws NotCompatible when the system
/// fails the compatibility check and StructureViolation naming the step
/// when one of the membership claims fails.
Representation represent(const CertificateSystem& sys, const EvalOptions& options = {});

/// The unique standard representation with the same certificates.
Representation standardize(const Representation& r);

/// A decomposed H-solution: rational part times prod alpha_j^x_j times E-,
/// G- and Q-solutions given by their certificates.
struct HProduct {
  ContextPtr ctx;
  RatFunc rational_part;
  /// (alpha_j, j) for every alpha_j != 1.
  std::vector<std::pair<RatFunc, std::size_t>> powers;
  std::vector<RatFunc> e_certs;
  std::vector<RatFunc> g_certs;
  std::vector<RatFunc> q_certs;
};

HProduct decompose(const CertificateSystem& sys, const EvalOptions& options = {});

/// Human-readable product form, e.g. "f * (t+1)^x * E[1] * G[...] * Q[...]".
std::string render(const HProduct& p);

/// A rational g such that the non-rational factors of p multiply to g (up
/// to a constant), or nullopt when their product is irrational.
std::optional<RatFunc> is_rational_product(const HProduct& p, const EvalOptions& options = {});

/// Integers omega, not all zero, with prod H_i^omega_i rational.
struct DependenceWitness {
  IntVector omega;
  /// prod_i alpha_ij^omega_i for each j (all equal to 1).
  std::vector<RatFunc> power_products;
  /// Rational functions whose log-derivatives / quotients give the combined
  /// E-, G- and Q-certificates.
  RatFunc e_witness;
  RatFunc g_witness;
  RatFunc q_witness;
  /// prod_i f_i^omega_i * e_witness * g_witness * q_witness.
  RatFunc rational;
};

/// Decides algebraic dependence of the H-solutions of the given systems
/// over F(t, x, y). Throws CapacityError for more than 16 systems.
std::optional<DependenceWitness> algebraic_dependence(const std::vector<CertificateSystem>& systems,
                                                      const EvalOptions& options = {});

/// The relation lattice behind algebraic_dependence (every omega, including 0).
IntegerLattice dependence_lattice(const std::vector<HProduct>& parts);

}  // namespace deltacompat
