#include "deltacompat/primes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "deltacompat/error.hpp"

namespace deltacompat {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n, unsigned max_bits) {
  if (n == 0) throw ZeroInput("factorization of zero");
  mpz_class rest = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++found[mpz_class(p)];
    }
  }
  if (rest > 1) {
    const auto bits = mpz_sizeinbase(rest.get_mpz_t(), 2);
    if (bits > std::min(max_bits, 64u))
      throw CapacityError("integer cofactor of " + std::to_string(bits) +
                          " bits exceeds the factorization bound");
    std::map<u64, unsigned> small;
    factor_u64(mpz_get_ui(rest.get_mpz_t()), small);
    for (auto [p, e] : small) found[mpz_class(static_cast<unsigned long>(p))] += e;
  }
  return {found.begin(), found.end()};
}

}  // namespace deltacompat
