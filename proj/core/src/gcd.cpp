#include <algorithm>

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"

namespace deltacompat {

namespace {

using UPoly = std::vector<MultiPoly>;

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

void trim(UPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool upoly_zero(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

// Pseudo-remainder of univariate polynomials with polynomial coefficients.
UPoly upoly_prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const MultiPoly& lc = b.back();
  while (!upoly_zero(a) && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    MultiPoly c = a.back();
    for (std::size_t k = 0; k < da; ++k) a[k] = a[k] * lc;
    for (std::size_t j = 0; j < db; ++j) a[da - db + j] -= c * b[j];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  if (a.empty()) a.push_back(MultiPoly(lc.context()));
  return a;
}

MultiPoly content_of(const std::vector<const MultiPoly*>& coeffs, const ContextPtr& ctx) {
  std::vector<const MultiPoly*> nz;
  for (auto* c : coeffs)
    if (!c->is_zero()) nz.push_back(c);
  if (nz.empty()) return MultiPoly::constant(ctx, 1);
  std::sort(nz.begin(), nz.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  MultiPoly g = integer_primitive(*nz.front());
  for (std::size_t i = 1; i < nz.size(); ++i) {
    if (g.is_constant()) break;
    g = gcd_rec(g, *nz[i]);
  }
  if (g.is_constant()) return MultiPoly::constant(ctx, 1);
  return g;
}

MultiPoly upoly_content(const UPoly& p, const ContextPtr& ctx) {
  std::vector<const MultiPoly*> ptrs;
  for (const auto& c : p) ptrs.push_back(&c);
  return content_of(ptrs, ctx);
}

void upoly_divide(UPoly& p, const MultiPoly& c) {
  if (c.is_one()) return;
  for (auto& x : p)
    if (!x.is_zero()) x = divide_exact(x, c);
}

MultiPoly strip_monomial(const MultiPoly& p, const Monomial& m) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms)
    for (std::size_t v = 0; v < m.size(); ++v) t.exps[v] -= m[v];
  return MultiPoly::from_terms(p.context(), std::move(terms));
}

Monomial min_exponents(const MultiPoly& p) {
  Monomial m = p.terms().front().exps;
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], t.exps[v]);
  return m;
}

MultiPoly gcd_with_coefficients(const MultiPoly& b, const UPoly& coeffs) {
  std::vector<const MultiPoly*> ptrs{&b};
  for (const auto& c : coeffs) ptrs.push_back(&c);
  return content_of(ptrs, b.context());
}

// Gcd of two nonzero polynomials, integer-primitive with positive leading coefficient.
MultiPoly gcd_rec(const MultiPoly& a_in, const MultiPoly& b_in) {
  const auto& ctx = a_in.context();
  MultiPoly one = MultiPoly::constant(ctx, 1);
  if (a_in.is_constant() || b_in.is_constant()) return one;
  MultiPoly a = integer_primitive(a_in);
  MultiPoly b = integer_primitive(b_in);
  if (a == b) return a;

  Monomial ma = min_exponents(a), mb = min_exponents(b);
  Monomial common(ma.size(), 0);
  bool any_a = false, any_b = false;
  for (std::size_t v = 0; v < ma.size(); ++v) {
    common[v] = std::min(ma[v], mb[v]);
    any_a = any_a || ma[v] != 0;
    any_b = any_b || mb[v] != 0;
  }
  if (any_a) a = strip_monomial(a, ma);
  if (any_b) b = strip_monomial(b, mb);
  MultiPoly mono = MultiPoly::monomial(ctx, common, 1);
  if (a.is_constant() || b.is_constant()) return mono;

  const auto sa = a.support(), sb = b.support();
  for (std::size_t v = 0; v < sa.size(); ++v) {
    if (sa[v] && !sb[v]) return mono * gcd_with_coefficients(b, coefficients(a, v));
    if (sb[v] && !sa[v]) return mono * gcd_with_coefficients(a, coefficients(b, v));
  }

  std::size_t main = sa.size();
  std::uint32_t best = 0;
  for (std::size_t v = 0; v < sa.size(); ++v) {
    if (!sa[v]) continue;
    std::uint32_t d = std::max(a.degree(v), b.degree(v));
    if (main == sa.size() || d < best) {
      main = v;
      best = d;
    }
  }

  UPoly A = coefficients(a, main);
  UPoly B = coefficients(b, main);
  MultiPoly ca = upoly_content(A, ctx);
  MultiPoly cb = upoly_content(B, ctx);
  MultiPoly c = gcd_rec(ca, cb);
  upoly_divide(A, ca);
  upoly_divide(B, cb);
  if (A.size() < B.size()) std::swap(A, B);

  // Quick exit when the smaller primitive part divides the larger one.
  {
    MultiPoly pb = from_coefficients(ctx, main, B);
    if (try_divide(from_coefficients(ctx, main, A), pb))
      return integer_primitive(mono * c * pb);
  }

  UPoly g;
  while (true) {
    UPoly R = upoly_prem(A, B);
    if (upoly_zero(R)) {
      g = std::move(B);
      break;
    }
    if (R.size() == 1) {
      g = UPoly{one};
      break;
    }
    MultiPoly cr = upoly_content(R, ctx);
    upoly_divide(R, cr);
    MultiPoly rp = integer_primitive(from_coefficients(ctx, main, R));
    A = std::move(B);
    B = coefficients(rp, main);
  }
  MultiPoly gp = from_coefficients(ctx, main, g);
  MultiPoly cg = upoly_content(g, ctx);
  if (!cg.is_one()) gp = divide_exact(gp, cg);
  return integer_primitive(mono * c * gp);
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_rec(a, b).monic();
}

MultiPoly poly_gcd(std::span<const MultiPoly> polys) {
  if (polys.empty()) throw ZeroInput("gcd of an empty list");
  MultiPoly g = polys.front().monic();
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (g.is_one()) break;
    g = poly_gcd(g, polys[i]);
  }
  if (g.is_zero()) return MultiPoly::constant(polys.front().context(), 1);
  return g;
}

bool share_factor_in(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  if (a.degree(var) == 0 || b.degree(var) == 0) return false;
  return poly_gcd(a, b).degree(var) > 0;
}

}  // namespace deltacompat
