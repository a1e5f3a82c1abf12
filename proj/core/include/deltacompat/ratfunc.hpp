#pragma once

#include <initializer_list>
#include <utility>

#include "deltacompat/multipoly.hpp"

namespace deltacompat {

/// Reduced fraction num/den of polynomials.
///
/// Canonical form: gcd(num, den) = 1, the leading coefficient of den under
/// the context ordering is 1, and zero is 0/1. Two equal rational functions
/// are therefore structurally equal.
class RatFunc {
 public:
  explicit RatFunc(ContextPtr ctx);
  explicit RatFunc(MultiPoly num);
  /// Reduces num/den; throws DivisionByZero when den is zero.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(ContextPtr ctx, const mpq_class& c);
  static RatFunc variable(ContextPtr ctx, std::size_t var);

  const ContextPtr& context() const noexcept { return num_.context(); }
  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  /// Rational number (no variables at all).
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The value when is_constant().
  mpq_class constant_value() const;

  bool depends_on(std::size_t var) const { return num_.depends_on(var) || den_.depends_on(var); }
  std::vector<bool> support() const;
  bool only_uses(const std::vector<bool>& allowed) const {
    return num_.only_uses(allowed) && den_.only_uses(allowed);
  }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc embed(ContextPtr target) const;

 private:
  struct Reduced {};
  RatFunc(MultiPoly num, MultiPoly den, Reduced);
  void normalize_scalar();

  MultiPoly num_;
  MultiPoly den_;
};

/// Flags for every variable of the listed blocks.
std::vector<bool> block_mask(const VarContext& ctx, std::initializer_list<Block> blocks);

/// True when f lies in the coefficient field F = Q(q).
bool in_field(const RatFunc& f);

/// Splits f = c * g with c in F and g monic over F: the coefficient of the
/// leading non-parameter monomial agrees between num(g) and den(g).
/// Zero input throws ZeroInput.
std::pair<RatFunc, RatFunc> split_field_constant(const RatFunc& f);

/// f with var replaced by value, re-reduced. Throws EvaluationSingular when
/// the denominator vanishes identically.
RatFunc substitute(const RatFunc& f, std::size_t var, const RatFunc& value);

}  // namespace deltacompat
