#pragma once

#include <optional>
#include <span>
#include <vector>

#include "deltacompat/multipoly.hpp"

namespace deltacompat {

/// Coefficients of p read as a univariate polynomial in `var`; entry d
/// holds the coefficient of var^d (which is free of var).
std::vector<MultiPoly> coefficients(const MultiPoly& p, std::size_t var);
MultiPoly from_coefficients(const ContextPtr& ctx, std::size_t var,
                            const std::vector<MultiPoly>& coeffs);

/// Exact multivariate division; nullopt when b does not divide a.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
/// Exact division that throws when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

MultiPoly derivative(const MultiPoly& p, std::size_t var);

/// p with var replaced by a polynomial value.
MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value);
/// p with var replaced by a rational constant.
MultiPoly evaluate(const MultiPoly& p, std::size_t var, const mpq_class& value);
/// p with var replaced by var + k.
MultiPoly shift_variable(const MultiPoly& p, std::size_t var, const mpq_class& k);
/// p with var replaced by factor * var (factor a monomial-free polynomial
/// such as q^e); term-wise, no merging of unrelated terms needed.
MultiPoly scale_variable(const MultiPoly& p, std::size_t var, const MultiPoly& factor);

/// lc_var(b)^e * a = quotient * b + remainder with deg_var(remainder) < deg_var(b).
/// With a fixed exponent the map a -> (quotient, remainder) is linear.
struct PseudoDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};
PseudoDivision pseudo_divide(const MultiPoly& a, const MultiPoly& b, std::size_t var,
                             unsigned exponent);
/// Classic pseudo-remainder with exponent deg a - deg b + 1.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Rational scalar c with p = c * integer_primitive(p).
mpq_class rational_content(const MultiPoly& p);
/// p scaled to integer coefficients with gcd 1 and positive leading coefficient.
MultiPoly integer_primitive(const MultiPoly& p);

/// Greatest common divisor with leading coefficient 1; gcd(0, b) = monic(b).
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_gcd(std::span<const MultiPoly> polys);
/// True when a and b share a factor of positive degree in var.
bool share_factor_in(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Content of p read as a polynomial in the variables flagged in `main`,
/// with coefficients in the remaining ones. Monic; 1 for a zero polynomial.
MultiPoly content_wrt(const MultiPoly& p, const std::vector<bool>& main);

/// Sylvester resultant with respect to var. When one operand is free of var
/// the Sylvester convention applies (res(a, c) = c^deg a, res of two
/// var-free polynomials is 1).
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Coefficient of the leading monomial in the non-parameter variables,
/// as a polynomial in the q-block (an element of the coefficient field).
MultiPoly field_leading_coefficient(const MultiPoly& p);

/// Squarefree part of p with respect to var: p / gcd(p, dp/dvar),
/// keeping only the var-dependent part. Monic.
MultiPoly squarefree_part(const MultiPoly& p, std::size_t var);

/// Evaluate a polynomial free of every variable except `var` at a rational point.
mpq_class evaluate_univariate(const MultiPoly& p, std::size_t var, const mpq_class& value);

/// Distinct integer roots, in increasing order, of a nonzero polynomial in
/// `var` alone.
std::vector<mpz_class> integer_roots(const MultiPoly& p, std::size_t var);

}  // namespace deltacompat
