#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "deltacompat/context.hpp"

namespace deltacompat {

/// Exponent vector with one entry per context variable.
using Monomial = boost::container::small_vector<std::uint32_t, 10>;

struct Term {
  Monomial exps;
  mpq_class coef;
};

/// Lexicographic comparison along the context priority: negative, zero or
/// positive as a is smaller, equal or larger than b.
int compare_monomials(const VarContext& ctx, const Monomial& a, const Monomial& b);

/// Sparse polynomial over Q in the variables of a VarContext.
///
/// Terms are kept sorted from the leading term down, with no zero
/// coefficients, so equality is structural.
class MultiPoly {
 public:
  explicit MultiPoly(ContextPtr ctx);

  static MultiPoly constant(ContextPtr ctx, const mpq_class& c);
  static MultiPoly variable(ContextPtr ctx, std::size_t var, std::uint32_t exp = 1);
  static MultiPoly monomial(ContextPtr ctx, Monomial exps, const mpq_class& c);
  /// Sorts and merges arbitrary terms.
  static MultiPoly from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  /// Coefficient of the unit monomial.
  mpq_class constant_term() const;

  const Term& leading() const;
  const mpq_class& leading_coefficient() const { return leading().coef; }

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t min_degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool depends_on(std::size_t var) const;
  /// Per-variable flags of occurring variables.
  std::vector<bool> support() const;
  /// True when every occurring variable has its flag set in `allowed`.
  bool only_uses(const std::vector<bool>& allowed) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const mpq_class& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
  friend MultiPoly operator*(const mpq_class& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(std::uint32_t e) const;

  /// Multiply by a monomial with coefficient 1.
  MultiPoly shifted_by(const Monomial& m) const;

  /// Divides by lc, making the leading coefficient 1 (zero stays zero).
  MultiPoly monic() const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Re-home onto a context with the same leading variables and extra
  /// trailing (auxiliary) ones, or drop trailing variables that are unused.
  MultiPoly embed(ContextPtr target) const;

 private:
  friend class PolyBuilder;
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Accumulates terms, then canonicalizes once.
class PolyBuilder {
 public:
  explicit PolyBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void add(Monomial exps, mpq_class coef);
  MultiPoly build() &&;

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

void require_same_context(const MultiPoly& a, const MultiPoly& b);

}  // namespace deltacompat
