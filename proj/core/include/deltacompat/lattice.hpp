#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "deltacompat/ratfunc.hpp"

namespace deltacompat {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// Sublattice of Z^dimension given by basis rows in Hermite normal form:
/// row echelon, positive pivots, entries above each pivot in [0, pivot).
struct IntegerLattice {
  std::size_t dimension = 0;
  IntMatrix basis;

  std::size_t rank() const noexcept { return basis.size(); }
  bool is_zero() const noexcept { return basis.empty(); }
  bool contains(const IntVector& v) const;
  bool operator==(const IntegerLattice&) const = default;

  static IntegerLattice full(std::size_t dimension);
};

/// Hermite normal form of the lattice spanned by the rows (zero rows dropped).
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// The lattice spanned by arbitrary generating rows.
IntegerLattice lattice_from_generators(IntMatrix rows, std::size_t dimension);

/// {w in Z^columns : M w = 0}.
IntegerLattice integer_kernel(const IntMatrix& M, std::size_t columns);

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b);

/// A short nonzero vector (Euclidean norm) among the basis rows and their
/// pairwise sums and differences; first nonzero entry positive.
IntVector short_vector(const IntegerLattice& lattice);

/// Pairwise coprime nonconstant polynomials, monic, in canonical order, with
/// input i = unit_part[i] * prod basis[j]^exponents[i][j].
struct GcdFreeBasis {
  std::vector<MultiPoly> basis;
  std::vector<std::vector<long>> exponents;
  std::vector<mpq_class> unit_part;
};

GcdFreeBasis gcdfree_basis(std::span<const MultiPoly> inputs);

/// All w with prod elems[i]^w[i] = 1. Polynomial factors go through a
/// gcd-free basis, rational units through prime factorization, and the sign
/// through an order-two coordinate. Throws ZeroInput on a zero element and
/// CapacityError when a unit cannot be factored within the bound.
IntegerLattice multiplicative_relations(std::span<const RatFunc> elems);

}  // namespace deltacompat
