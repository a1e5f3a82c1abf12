#include <algorithm>
#include <cmath>

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"
#include "deltacompat/primes.hpp"

namespace deltacompat {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kModulus = (1ULL << 61) - 1;

std::uint64_t reduce_mod(const mpz_class& c) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), kModulus);
  return mpz_get_ui(r.get_mpz_t());
}

bool is_root(const std::vector<mpz_class>& c, const mpz_class& r) {
  mpz_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
  return acc == 0;
}

double log2_abs(const mpz_class& v) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

// Fujiwara's bound on the moduli of the roots, as log2.
double root_bound_log2(const std::vector<mpz_class>& c) {
  const std::size_t n = c.size() - 1;
  const double lead = log2_abs(c[n]);
  double best = -1e300;
  for (std::size_t k = 1; k <= n; ++k) {
    if (c[n - k] == 0) continue;
    double v = log2_abs(c[n - k]) - lead;
    if (k == n) v -= 1;
    best = std::max(best, v / static_cast<double>(k));
  }
  return best + 1;
}

void collect_divisors(const std::vector<std::pair<mpz_class, unsigned>>& f, std::size_t idx,
                      mpz_class cur, std::vector<mpz_class>& out) {
  if (idx == f.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= f[idx].second; ++e) {
    collect_divisors(f, idx + 1, cur, out);
    cur *= f[idx].first;
  }
}

}  // namespace

std::vector<mpz_class> integer_roots(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) throw ZeroInput("roots of the zero polynomial");
  MultiPoly pp = integer_primitive(p);
  std::vector<mpz_class> c(pp.degree(var) + 1, 0);
  for (const auto& t : pp.terms()) {
    for (std::size_t v = 0; v < t.exps.size(); ++v)
      if (v != var && t.exps[v] != 0) throw InvalidVariable("polynomial is not univariate");
    c[t.exps[var]] = t.coef.get_num();
  }
  std::vector<mpz_class> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() == 1) return roots;

  const double bound_log = root_bound_log2(c);
  std::vector<mpz_class> found;
  if (bound_log < 22) {
    const long bound = static_cast<long>(std::ceil(std::exp2(bound_log)));
    std::vector<std::uint64_t> cm;
    for (const auto& x : c) cm.push_back(reduce_mod(x));
    for (long r = -bound; r <= bound; ++r) {
      if (r == 0) continue;
      const std::uint64_t rm = r >= 0 ? static_cast<std::uint64_t>(r)
                                      : kModulus - static_cast<std::uint64_t>(-r);
      std::uint64_t acc = 0;
      for (std::size_t i = cm.size(); i-- > 0;)
        acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * rm + cm[i]) % kModulus);
      if (acc == 0 && is_root(c, mpz_class(r))) found.push_back(r);
    }
  } else {
    std::vector<mpz_class> divisors;
    collect_divisors(factor_integer(c.front()), 0, 1, divisors);
    for (const auto& d : divisors) {
      if (is_root(c, d)) found.push_back(d);
      if (is_root(c, -d)) found.push_back(-d);
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace deltacompat
