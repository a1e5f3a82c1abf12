#include "deltacompat/polyalg.hpp"

#include <algorithm>

#include "deltacompat/error.hpp"

namespace deltacompat {

namespace {

mpq_class rational_pow(const mpq_class& base, std::uint32_t e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<MultiPoly> coefficients(const MultiPoly& p, std::size_t var) {
  const auto& ctx = p.context();
  std::vector<PolyBuilder> builders;
  const std::uint32_t d = p.degree(var);
  builders.reserve(d + 1);
  for (std::uint32_t i = 0; i <= d; ++i) builders.emplace_back(ctx);
  for (const auto& t : p.terms()) {
    Monomial m = t.exps;
    const auto e = m[var];
    m[var] = 0;
    builders[e].add(std::move(m), t.coef);
  }
  std::vector<MultiPoly> out;
  out.reserve(builders.size());
  for (auto& b : builders) out.push_back(std::move(b).build());
  return out;
}

MultiPoly from_coefficients(const ContextPtr& ctx, std::size_t var,
                            const std::vector<MultiPoly>& coeffs) {
  PolyBuilder b(ctx);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].terms()) {
      Monomial m = t.exps;
      m[var] += static_cast<std::uint32_t>(d);
      b.add(std::move(m), t.coef);
    }
  }
  return std::move(b).build();
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a, b);
  if (b.is_zero()) throw DivisionByZero();
  const auto& ctx = a.context();
  if (a.is_zero()) return MultiPoly(ctx);
  if (b.is_constant()) return a * mpq_class(1 / b.leading_coefficient());

  const std::size_t arity = ctx->arity();
  for (std::size_t v = 0; v < arity; ++v)
    if (b.degree(v) > a.degree(v)) return std::nullopt;

  const Term& lb = b.leading();
  std::vector<Term> quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    Monomial m(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
      if (lt.exps[v] < lb.exps[v]) return std::nullopt;
      m[v] = lt.exps[v] - lb.exps[v];
    }
    mpq_class c = lt.coef / lb.coef;
    MultiPoly step = b.shifted_by(m) * c;
    quotient.push_back({std::move(m), std::move(c)});
    rem -= step;
  }
  // Quotient terms were produced in strictly decreasing order.
  MultiPoly q(ctx);
  q = MultiPoly::from_terms(ctx, std::move(quotient));
  return q;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error("inexact polynomial division");
  return std::move(*q);
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  PolyBuilder b(p.context());
  for (const auto& t : p.terms()) {
    if (t.exps[var] == 0) continue;
    Monomial m = t.exps;
    mpq_class c = t.coef * m[var];
    m[var] -= 1;
    b.add(std::move(m), std::move(c));
  }
  return std::move(b).build();
}

MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value) {
  require_same_context(p, value);
  if (!p.depends_on(var)) return p;
  auto cs = coefficients(p, var);
  MultiPoly r = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) r = r * value + cs[i];
  return r;
}

MultiPoly evaluate(const MultiPoly& p, std::size_t var, const mpq_class& value) {
  PolyBuilder b(p.context());
  for (const auto& t : p.terms()) {
    Monomial m = t.exps;
    const auto e = m[var];
    m[var] = 0;
    b.add(std::move(m), e == 0 ? t.coef : mpq_class(t.coef * rational_pow(value, e)));
  }
  return std::move(b).build();
}

MultiPoly shift_variable(const MultiPoly& p, std::size_t var, const mpq_class& k) {
  if (k == 0 || !p.depends_on(var)) return p;
  const auto& ctx = p.context();
  return substitute(p, var, MultiPoly::variable(ctx, var) + MultiPoly::constant(ctx, k));
}

MultiPoly scale_variable(const MultiPoly& p, std::size_t var, const MultiPoly& factor) {
  require_same_context(p, factor);
  if (!p.depends_on(var)) return p;
  std::vector<MultiPoly> powers{MultiPoly::constant(p.context(), 1)};
  const auto d = p.degree(var);
  for (std::uint32_t e = 1; e <= d; ++e) powers.push_back(powers.back() * factor);
  PolyBuilder b(p.context());
  for (const auto& t : p.terms()) {
    for (const auto& f : powers[t.exps[var]].terms()) {
      Monomial m = t.exps;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += f.exps[v];
      b.add(std::move(m), t.coef * f.coef);
    }
  }
  return std::move(b).build();
}

PseudoDivision pseudo_divide(const MultiPoly& a, const MultiPoly& b, std::size_t var,
                             unsigned exponent) {
  require_same_context(a, b);
  if (b.is_zero()) throw DivisionByZero();
  const auto& ctx = a.context();
  auto A = coefficients(a, var);
  const auto B = coefficients(b, var);
  const std::size_t db = B.size() - 1;
  const MultiPoly& lcb = B[db];
  const std::size_t da = a.is_zero() ? 0 : A.size() - 1;

  unsigned steps = (a.is_zero() || da < db) ? 0 : static_cast<unsigned>(da - db + 1);
  if (exponent < steps) throw Error("pseudo-division exponent too small");

  std::vector<MultiPoly> Q(steps, MultiPoly(ctx));
  if (steps > 0) {
    for (std::size_t i = da + 1; i-- > db;) {
      MultiPoly c = A[i];
      for (auto& q : Q) q = q * lcb;
      for (std::size_t k = 0; k < i; ++k) A[k] = A[k] * lcb;
      A[i] = MultiPoly(ctx);
      Q[i - db] += c;
      if (!c.is_zero())
        for (std::size_t j = 0; j < db; ++j) A[i - db + j] -= c * B[j];
    }
  }
  MultiPoly scale = lcb.pow(exponent - steps);
  if (A.size() > db) A.erase(A.begin() + static_cast<long>(db), A.end());
  PseudoDivision out{from_coefficients(ctx, var, Q) * scale, from_coefficients(ctx, var, A) * scale};
  return out;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const auto da = a.degree(var);
  const auto db = b.degree(var);
  unsigned e = (a.is_zero() || da < db) ? 0 : da - db + 1;
  return pseudo_divide(a, b, var, e).remainder;
}

mpq_class rational_content(const MultiPoly& p) {
  if (p.is_zero()) return 0;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  if (p.leading_coefficient() < 0) c = -c;
  return c;
}

MultiPoly integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpq_class c = rational_content(p);
  if (c == 1) return p;
  return p * mpq_class(1 / c);
}

MultiPoly content_wrt(const MultiPoly& p, const std::vector<bool>& main) {
  const auto& ctx = p.context();
  if (p.is_zero()) return MultiPoly::constant(ctx, 1);
  // Group terms by their exponents in the main variables.
  std::vector<std::pair<Monomial, PolyBuilder>> groups;
  for (const auto& t : p.terms()) {
    Monomial key(ctx->arity(), 0);
    Monomial rest = t.exps;
    for (std::size_t v = 0; v < main.size(); ++v) {
      if (main[v]) {
        key[v] = t.exps[v];
        rest[v] = 0;
      }
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.emplace_back(std::move(key), PolyBuilder(ctx));
      it = groups.end() - 1;
    }
    it->second.add(std::move(rest), t.coef);
  }
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(groups.size());
  for (auto& g : groups) coeffs.push_back(std::move(g.second).build());
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.size() < b.size(); });
  return poly_gcd(coeffs);
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  require_same_context(a, b);
  const auto& ctx = a.context();
  if (var >= ctx->arity()) throw InvalidVariable("resultant variable out of range");
  if (a.is_zero() || b.is_zero()) return MultiPoly(ctx);
  const auto da = a.degree(var);
  const auto db = b.degree(var);
  if (da == 0 && db == 0) return MultiPoly::constant(ctx, 1);
  if (db == 0) return b.pow(da);
  if (da == 0) return a.pow(db);

  // Subresultant PRS (Collins), without content extraction.
  MultiPoly A = a, B = b;
  int sign = 1;
  if (da < db) {
    std::swap(A, B);
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
  }
  MultiPoly g = MultiPoly::constant(ctx, 1);
  MultiPoly h = MultiPoly::constant(ctx, 1);
  while (true) {
    const auto dA = A.degree(var);
    const auto dB = B.degree(var);
    const auto delta = dA - dB;
    if ((dA % 2 == 1) && (dB % 2 == 1)) sign = -sign;
    MultiPoly R = pseudo_remainder(A, B, var);
    A = std::move(B);
    B = divide_exact(R, g * h.pow(delta));
    g = coefficients(A, var).back();
    if (delta == 1) h = g;
    else if (delta > 1) h = divide_exact(g.pow(delta), h.pow(delta - 1));
    if (B.is_zero()) return MultiPoly(ctx);
    if (B.degree(var) == 0) break;
  }
  const auto dA = A.degree(var);
  MultiPoly res = divide_exact(B.pow(dA), h.pow(dA - 1));
  return sign == 1 ? res : -res;
}

MultiPoly field_leading_coefficient(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroInput("leading coefficient of zero");
  const auto& ctx = p.context();
  std::vector<bool> is_param(ctx->arity(), false);
  for (std::size_t v = 0; v < ctx->arity(); ++v) is_param[v] = ctx->block(v) == Block::Q;

  auto strip = [&](const Monomial& m) {
    Monomial r = m;
    for (std::size_t v = 0; v < r.size(); ++v)
      if (is_param[v]) r[v] = 0;
    return r;
  };
  Monomial best = strip(p.terms().front().exps);
  for (const auto& t : p.terms()) {
    Monomial s = strip(t.exps);
    if (compare_monomials(*ctx, s, best) > 0) best = std::move(s);
  }
  PolyBuilder b(ctx);
  for (const auto& t : p.terms()) {
    if (strip(t.exps) != best) continue;
    Monomial m(ctx->arity(), 0);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (is_param[v]) m[v] = t.exps[v];
    b.add(std::move(m), t.coef);
  }
  return std::move(b).build();
}

MultiPoly squarefree_part(const MultiPoly& p, std::size_t var) {
  const auto& ctx = p.context();
  if (p.degree(var) == 0) return MultiPoly::constant(ctx, 1);
  MultiPoly g = poly_gcd(p, derivative(p, var));
  MultiPoly r = divide_exact(p, g);
  std::vector<bool> main(ctx->arity(), false);
  main[var] = true;
  MultiPoly c = content_wrt(r, main);
  return divide_exact(r, c).monic();
}

mpq_class evaluate_univariate(const MultiPoly& p, std::size_t var, const mpq_class& value) {
  mpq_class acc = 0;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < t.exps.size(); ++v)
      if (v != var && t.exps[v] != 0) throw InvalidVariable("polynomial is not univariate");
    acc += t.coef * rational_pow(value, t.exps[var]);
  }
  return acc;
}

}  // namespace deltacompat
