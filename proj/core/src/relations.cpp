#include <algorithm>
#include <map>

#include "deltacompat/error.hpp"
#include "deltacompat/lattice.hpp"
#include "deltacompat/polyalg.hpp"
#include "deltacompat/primes.hpp"

namespace deltacompat {

namespace {

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ctx = *a.context();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    int c = compare_monomials(ctx, ta.exps, tb.exps);
    if (c != 0) return c < 0;
    if (ta.coef != tb.coef) return ta.coef < tb.coef;
  }
  return a.size() < b.size();
}

// Splits the list until all elements are pairwise coprime.
std::vector<MultiPoly> refine(std::vector<MultiPoly> list) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        if (list[i] == list[j]) {
          list.erase(list.begin() + static_cast<long>(j));
          changed = true;
          break;
        }
        MultiPoly g = poly_gcd(list[i], list[j]);
        if (g.is_constant()) continue;
        MultiPoly a = divide_exact(list[i], g).monic();
        MultiPoly b = divide_exact(list[j], g).monic();
        list.erase(list.begin() + static_cast<long>(j));
        list.erase(list.begin() + static_cast<long>(i));
        for (auto* p : {&g, &a, &b})
          if (!p->is_constant()) list.push_back(*p);
        changed = true;
      }
    }
  }
  std::sort(list.begin(), list.end(), canonical_less);
  return list;
}

}  // namespace

GcdFreeBasis gcdfree_basis(std::span<const MultiPoly> inputs) {
  GcdFreeBasis out;
  std::vector<MultiPoly> seeds;
  for (const auto& p : inputs) {
    if (p.is_zero()) throw ZeroInput("gcd-free basis of a zero polynomial");
    if (!p.is_constant()) seeds.push_back(p.monic());
  }
  out.basis = refine(std::move(seeds));
  for (const auto& p : inputs) {
    std::vector<long> exps(out.basis.size(), 0);
    MultiPoly rest = p;
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      while (!rest.is_constant()) {
        auto q = try_divide(rest, out.basis[j]);
        if (!q) break;
        rest = std::move(*q);
        ++exps[j];
      }
    }
    if (!rest.is_constant()) throw Error("gcd-free basis does not cover an input");
    out.exponents.push_back(std::move(exps));
    out.unit_part.push_back(rest.leading_coefficient());
  }
  return out;
}

IntegerLattice multiplicative_relations(std::span<const RatFunc> elems) {
  const std::size_t s = elems.size();
  std::vector<MultiPoly> polys;
  for (const auto& e : elems) {
    if (e.is_zero()) throw ZeroInput("multiplicative relation of zero");
    polys.push_back(e.num());
    polys.push_back(e.den());
  }
  if (s == 0) return {0, {}};
  GcdFreeBasis gb = gcdfree_basis(polys);

  // Columns: the s unknowns, then one auxiliary for the sign parity.
  IntMatrix M;
  for (std::size_t j = 0; j < gb.basis.size(); ++j) {
    IntVector row(s + 1, 0);
    for (std::size_t i = 0; i < s; ++i) row[i] = gb.exponents[2 * i][j] - gb.exponents[2 * i + 1][j];
    M.push_back(std::move(row));
  }
  std::map<mpz_class, IntVector> primes;
  IntVector sign(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    mpq_class u = gb.unit_part[2 * i] / gb.unit_part[2 * i + 1];
    if (u < 0) sign[i] = 1;
    for (int side = 0; side < 2; ++side) {
      const mpz_class& n = side == 0 ? u.get_num() : u.get_den();
      if (abs(n) == 1) continue;
      for (const auto& [p, e] : factor_integer(n)) {
        auto& row = primes.try_emplace(p, IntVector(s + 1, 0)).first->second;
        row[i] += side == 0 ? mpz_class(e) : mpz_class(-static_cast<long>(e));
      }
    }
  }
  for (auto& [p, row] : primes) M.push_back(std::move(row));
  sign[s] = -2;
  M.push_back(std::move(sign));

  IntegerLattice K = integer_kernel(M, s + 1);
  IntMatrix projected;
  for (const auto& v : K.basis) projected.emplace_back(v.begin(), v.begin() + static_cast<long>(s));
  return lattice_from_generators(std::move(projected), s);
}

}  // namespace deltacompat
