#include <algorithm>

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"
#include "deltacompat/reduce.hpp"
#include "detail.hpp"

namespace deltacompat {

namespace {

// Removes factors that phi leaves fixed up to a constant: content free of
// the operator variable, and for q-shifts also powers of y.
MultiPoly moving_part(const MultiPoly& p, OpRef op) {
  const auto& ctx = *p.context();
  const std::size_t v = op.variable(ctx);
  MultiPoly r = p;
  if (op.kind == OpRef::Kind::Tau) {
    const auto low = r.min_degree(v);
    if (low > 0) {
      Monomial m(ctx.arity(), 0);
      m[v] = low;
      r = divide_exact(r, MultiPoly::monomial(p.context(), m, 1));
    }
  }
  if (r.degree(v) == 0) return MultiPoly::constant(p.context(), 1);
  std::vector<bool> main(ctx.arity(), false);
  main[v] = true;
  MultiPoly c = content_wrt(r, main);
  if (!c.is_one()) r = divide_exact(r, c);
  return r.monic();
}

// Copies the terms of p into a small context, mapping variables by index.
MultiPoly transplant(const MultiPoly& p, const ContextPtr& target,
                     const std::vector<std::pair<std::size_t, std::size_t>>& mapping) {
  PolyBuilder b(target);
  for (const auto& t : p.terms()) {
    Monomial m(target->arity(), 0);
    for (auto [from, to] : mapping) m[to] = t.exps[from];
    b.add(std::move(m), t.coef);
  }
  return std::move(b).build();
}

std::vector<long> sigma_candidates(const MultiPoly& a, const MultiPoly& b, std::size_t v,
                                   const std::vector<std::size_t>& others) {
  auto point = detail::specialization_point(
      {coefficients(a, v).back(), coefficients(b, v).back()}, others);
  MultiPoly as = detail::evaluate_point(a, others, point);
  MultiPoly bs = detail::evaluate_point(b, others, point);

  static const ContextPtr small = std::make_shared<const VarContext>(
      std::vector<std::string>{}, std::vector<std::string>{"x"}, std::vector<std::string>{},
      std::vector<std::string>{}, std::vector<std::string>{"s"});
  const std::size_t x = 0, s = 1;
  MultiPoly a1 = transplant(as, small, {{v, x}});
  MultiPoly b1 = transplant(bs, small, {{v, x}});
  MultiPoly shifted = substitute(b1, x, MultiPoly::variable(small, x) + MultiPoly::variable(small, s));
  MultiPoly R = resultant(a1, shifted, x);
  if (R.is_zero()) throw Error("degenerate specialization in dispersion");
  std::vector<long> out;
  for (const auto& r : integer_roots(R, s))
    if (r >= 0 && r.fits_slong_p()) out.push_back(r.get_si());
  return out;
}

std::vector<long> tau_candidates(const MultiPoly& a, const MultiPoly& b, std::size_t v,
                                 std::size_t qv, const std::vector<std::size_t>& others) {
  auto ca = coefficients(a, v), cb = coefficients(b, v);
  auto point = detail::specialization_point({ca.back(), cb.back(), ca.front(), cb.front()}, others);
  MultiPoly as = detail::evaluate_point(a, others, point);
  MultiPoly bs = detail::evaluate_point(b, others, point);

  static const ContextPtr small = std::make_shared<const VarContext>(
      std::vector<std::string>{}, std::vector<std::string>{}, std::vector<std::string>{"y"},
      std::vector<std::string>{"q"}, std::vector<std::string>{"z"});
  const std::size_t y = 0, q = 1, z = 2;
  MultiPoly a1 = transplant(as, small, {{v, y}, {qv, q}});
  MultiPoly b1 = transplant(bs, small, {{v, y}, {qv, q}});
  MultiPoly scaled = scale_variable(b1, y, MultiPoly::variable(small, z));
  MultiPoly R = resultant(a1, scaled, y);
  if (R.is_zero()) throw Error("degenerate specialization in q-dispersion");
  std::uint32_t spread = 0;
  for (const auto& c : coefficients(R, z)) spread = std::max(spread, c.degree(q));
  const long bound = static_cast<long>(R.degree(z) + spread);
  std::vector<long> out;
  for (long i = 0; i <= bound; ++i) {
    MultiPoly at = substitute(R, z, MultiPoly::variable(small, q, static_cast<std::uint32_t>(i)));
    if (at.is_zero()) out.push_back(i);
  }
  return out;
}

}  // namespace

MultiPoly moving_gcd(const MultiPoly& a, const MultiPoly& b, OpRef op, long i) {
  require_same_context(a, b);
  if (op.kind == OpRef::Kind::Delta) throw InvalidVariable("dispersion needs a shift or q-shift");
  MultiPoly g = poly_gcd(a, apply_poly(op, b, i));
  if (g.is_zero()) return MultiPoly::constant(a.context(), 1);
  return moving_part(g, op);
}

DispersionResult dispersion(const MultiPoly& a, const MultiPoly& b, OpRef op) {
  require_same_context(a, b);
  if (op.kind == OpRef::Kind::Delta) throw InvalidVariable("dispersion needs a shift or q-shift");
  if (a.is_zero() || b.is_zero()) throw ZeroInput("dispersion of zero");
  const auto& ctx = *a.context();
  const std::size_t v = op.variable(ctx);
  DispersionResult out{op, {}, 0};

  MultiPoly a1 = moving_part(a, op);
  MultiPoly b1 = moving_part(b, op);
  if (a1.is_constant() || b1.is_constant()) return out;

  std::size_t qv = ctx.arity();
  if (op.kind == OpRef::Kind::Tau) qv = ctx.q_of_y(v);
  std::vector<std::size_t> others;
  auto sa = a1.support(), sb = b1.support();
  for (std::size_t w = 0; w < ctx.arity(); ++w)
    if (w != v && w != qv && (sa[w] || sb[w])) others.push_back(w);

  std::vector<long> candidates = op.kind == OpRef::Kind::Sigma
                                     ? sigma_candidates(a1, b1, v, others)
                                     : tau_candidates(a1, b1, v, qv, others);
  for (long i : candidates)
    if (!moving_gcd(a1, b1, op, i).is_one()) out.hits.push_back(i);
  if (!out.hits.empty()) out.max = out.hits.back();
  return out;
}

}  // namespace deltacompat
