#include "deltacompat/lattice.hpp"

#include <algorithm>

#include "deltacompat/error.hpp"

namespace deltacompat {

namespace {

bool is_zero_row(const IntVector& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
}

void axpy(IntVector& dst, const mpz_class& k, const IntVector& src) {
  if (k == 0) return;
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= k * src[c];
}

// Unimodular row reduction on the first `columns` columns: echelon form with
// positive pivots; above-pivot entries reduced when `reduce_above` is set.
// Returns the number of pivot rows (they come first).
std::size_t echelon(IntMatrix& rows, std::size_t columns, bool reduce_above) {
  std::size_t pivot_row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t c = 0; c < columns && pivot_row < rows.size(); ++c) {
    while (true) {
      // Row with the smallest nonzero entry in column c.
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        axpy(rows[r], k, rows[pivot_row]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        if (rows[pivot_row][c] < 0)
          for (auto& v : rows[pivot_row]) v = -v;
        pivots.emplace_back(pivot_row, c);
        ++pivot_row;
        break;
      }
    }
  }
  if (reduce_above) {
    for (auto [pr, pc] : pivots) {
      for (std::size_t r = 0; r < pr; ++r) {
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), rows[r][pc].get_mpz_t(), rows[pr][pc].get_mpz_t());
        axpy(rows[r], k, rows[pr]);
      }
    }
  }
  return pivot_row;
}

}  // namespace

bool IntegerLattice::contains(const IntVector& v) const {
  if (v.size() != dimension) return false;
  IntVector rest = v;
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (rest[p] == 0) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    mpz_class k = rest[p] / row[p];
    axpy(rest, k, row);
  }
  return is_zero_row(rest);
}

IntegerLattice IntegerLattice::full(std::size_t dimension) {
  IntegerLattice L{dimension, {}};
  for (std::size_t i = 0; i < dimension; ++i) {
    IntVector r(dimension, 0);
    r[i] = 1;
    L.basis.push_back(std::move(r));
  }
  return L;
}

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  for (const auto& r : rows)
    if (r.size() != columns) throw InvalidVariable("matrix row has the wrong length");
  const std::size_t rank = echelon(rows, columns, true);
  rows.resize(rank);
  return rows;
}

IntegerLattice lattice_from_generators(IntMatrix rows, std::size_t dimension) {
  return {dimension, hermite_normal_form(std::move(rows), dimension)};
}

IntegerLattice integer_kernel(const IntMatrix& M, std::size_t columns) {
  // Rows of [M^T | I]; rows whose left part vanishes carry kernel vectors.
  const std::size_t r = M.size();
  IntMatrix aug(columns, IntVector(r + columns, 0));
  for (std::size_t i = 0; i < r; ++i) {
    if (M[i].size() != columns) throw InvalidVariable("matrix row has the wrong length");
    for (std::size_t c = 0; c < columns; ++c) aug[c][i] = M[i][c];
  }
  for (std::size_t c = 0; c < columns; ++c) aug[c][r + c] = 1;
  const std::size_t rank = echelon(aug, r, false);
  IntMatrix kernel;
  for (std::size_t i = rank; i < aug.size(); ++i)
    kernel.emplace_back(aug[i].begin() + static_cast<long>(r), aug[i].end());
  return lattice_from_generators(std::move(kernel), columns);
}

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dimension != b.dimension) throw InvalidVariable("lattice dimensions differ");
  const std::size_t s = a.dimension;
  if (a.is_zero() || b.is_zero()) return {s, {}};
  const std::size_t ka = a.rank(), kb = b.rank();
  // Solve x A = y B through the kernel of [A^T | -B^T].
  IntMatrix M(s, IntVector(ka + kb, 0));
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t i = 0; i < ka; ++i) M[c][i] = a.basis[i][c];
    for (std::size_t i = 0; i < kb; ++i) M[c][ka + i] = -b.basis[i][c];
  }
  IntegerLattice K = integer_kernel(M, ka + kb);
  IntMatrix gens;
  for (const auto& k : K.basis) {
    IntVector v(s, 0);
    for (std::size_t i = 0; i < ka; ++i)
      for (std::size_t c = 0; c < s; ++c) v[c] += k[i] * a.basis[i][c];
    gens.push_back(std::move(v));
  }
  return lattice_from_generators(std::move(gens), s);
}

IntVector short_vector(const IntegerLattice& lattice) {
  if (lattice.is_zero()) throw ZeroInput("short vector of the zero lattice");
  std::vector<IntVector> candidates = lattice.basis;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    for (std::size_t j = i + 1; j < lattice.rank(); ++j) {
      IntVector sum(lattice.dimension), diff(lattice.dimension);
      for (std::size_t c = 0; c < lattice.dimension; ++c) {
        sum[c] = lattice.basis[i][c] + lattice.basis[j][c];
        diff[c] = lattice.basis[i][c] - lattice.basis[j][c];
      }
      candidates.push_back(std::move(sum));
      candidates.push_back(std::move(diff));
    }
  }
  auto norm = [](const IntVector& v) {
    mpz_class n = 0;
    for (const auto& x : v) n += x * x;
    return n;
  };
  for (auto& v : candidates) {
    auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (first != v.end() && *first < 0)
      for (auto& x : v) x = -x;
  }
  const IntVector* best = nullptr;
  mpz_class best_norm;
  for (const auto& v : candidates) {
    if (is_zero_row(v)) continue;
    mpz_class n = norm(v);
    if (!best || n < best_norm || (n == best_norm && v > *best)) {
      best = &v;
      best_norm = n;
    }
  }
  return *best;
}

}  // namespace deltacompat
