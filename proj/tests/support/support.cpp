#include "support.hpp"

#include "deltacompat/polyalg.hpp"

namespace dc_test {

namespace {

mpq_class power(const mpq_class& base, std::uint32_t e) {
  mpq_class r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// (p(P), dp/dvar(P)); var = npos gives derivative 0
std::pair<mpq_class, mpq_class> dual_value(const MultiPoly& p, std::size_t var, const std::vector<mpq_class>& point) {
  mpq_class value = 0, deriv = 0;
  for (const auto& term : p.terms()) {
    mpq_class v = term.coef;
    for (std::size_t i = 0; i < term.exps.size(); ++i)
      if (term.exps[i]) v *= power(point[i], term.exps[i]);
    value += v;
    if (var < term.exps.size() && term.exps[var]) {
      mpq_class d = term.coef * term.exps[var];
      for (std::size_t i = 0; i < term.exps.size(); ++i) {
        const std::uint32_t e = i == var ? term.exps[i] - 1 : term.exps[i];
        if (e) d *= power(point[i], e);
      }
      deriv += d;
    }
  }
  return {value, deriv};
}

mpq_class random_rational(Rng& rng, long bound) {
  mpq_class r(rng.uniform(-bound, bound), rng.uniform(1, 3));
  r.canonicalize();
  return r;
}

std::string indexed(const std::string& base, std::size_t count, std::size_t i) {
  return count == 1 ? base : base + std::to_string(i + 1);
}

}  // namespace

MultiPoly random_poly(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars, unsigned max_deg,
                      unsigned max_terms, std::optional<std::size_t> q_var, bool nonconstant) {
  if (vars.empty()) nonconstant = false;
  for (;;) {
    PolyBuilder b(ctx);
    const long terms = rng.uniform(1, max_terms);
    for (long k = 0; k < terms; ++k) {
      Monomial m(ctx->arity(), 0);
      const long deg = vars.empty() ? 0 : rng.uniform(0, max_deg);
      for (long d = 0; d < deg; ++d) ++m[rng.pick(vars)];
      if (q_var && rng.chance(1, 4)) ++m[*q_var];
      b.add(std::move(m), mpq_class(rng.nonzero(-9, 9)));
    }
    MultiPoly p = std::move(b).build();
    if (p.is_zero()) continue;
    if (nonconstant) {
      bool moves = false;
      for (auto v : vars) moves = moves || p.depends_on(v);
      if (!moves) continue;
    }
    return p;
  }
}

RatFunc random_ratfunc(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars, unsigned max_deg,
                       unsigned max_terms, std::optional<std::size_t> q_var) {
  MultiPoly num = random_poly(rng, ctx, vars, max_deg, max_terms, q_var, false);
  if (vars.empty() || rng.chance(1, 2)) return RatFunc(num);
  return RatFunc(num, random_poly(rng, ctx, vars, max_deg, max_terms, q_var, true));
}

ContextPtr make_context(std::size_t l, std::size_t m, std::size_t n) {
  std::vector<std::string> t, x, y, q;
  for (std::size_t i = 0; i < l; ++i) t.push_back(indexed("t", l, i));
  for (std::size_t i = 0; i < m; ++i) x.push_back(indexed("x", m, i));
  for (std::size_t i = 0; i < n; ++i) {
    y.push_back(indexed("y", n, i));
    q.push_back(indexed("q", n, i));
  }
  return VarContext::make(t, x, y, q);
}

Representation random_representation(Rng& rng, const ContextPtr& ctx) {
  const auto ts = ctx->block_vars(Block::T);
  const auto xs = ctx->block_vars(Block::X);
  const auto ys = ctx->block_vars(Block::Y);
  std::optional<std::size_t> q;
  if (ctx->n() > 0) q = ctx->q_var(0);
  std::vector<std::size_t> all = ts;
  all.insert(all.end(), xs.begin(), xs.end());
  all.insert(all.end(), ys.begin(), ys.end());

  const auto one = RatFunc::constant(ctx, 1);
  Representation r{ctx, one, {}, {}, {}, {}};

  MultiPoly num = random_poly(rng, ctx, all, 2, 3, q);
  if (rng.chance(1, 3)) num *= random_poly(rng, ctx, all, 1, 2, q);
  r.f = rng.chance(1, 3) ? RatFunc(num) : RatFunc(num, random_poly(rng, ctx, all, 2, 2, q));

  for (std::size_t j = 0; j < ctx->m(); ++j) {
    if (ts.empty() || rng.chance(1, 3)) {
      r.alpha.push_back(one);
      continue;
    }
    RatFunc a(random_poly(rng, ctx, ts, 2, 2, q));
    if (rng.chance(1, 3)) a /= RatFunc(random_poly(rng, ctx, ts, 1, 2, q));
    r.alpha.push_back(split_field_constant(a).second);
  }

  RatFunc P(ctx);
  if (!ts.empty() && rng.chance(1, 2)) P = random_ratfunc(rng, ctx, ts, 2, 2, q);
  for (std::size_t i = 0; i < ctx->l(); ++i) {
    RatFunc b = apply(OpRef::delta(i), P);
    if (rng.chance(2, 3)) b += random_ratfunc(rng, ctx, {ts[i]}, 2, 2, q);
    r.beta.push_back(b);
  }

  std::vector<RatFunc> scalars{one, RatFunc::constant(ctx, 2), RatFunc::constant(ctx, -3),
                               RatFunc::constant(ctx, mpq_class(1, 2))};
  if (q) scalars.push_back(RatFunc::variable(ctx, *q));
  std::vector<long> slope(ctx->m(), 0);
  long offset = 0;
  const bool rising = ctx->m() >= 2 && rng.chance(1, 2);
  if (rising) {
    for (auto& a : slope) a = rng.uniform(0, 2);
    offset = rng.uniform(-5, 5);
  }
  for (std::size_t j = 0; j < ctx->m(); ++j) {
    RatFunc lam = rng.pick(scalars) * random_ratfunc(rng, ctx, {xs[j]}, 2, 2, q);
    if (rising) {
      MultiPoly L = MultiPoly::constant(ctx, offset);
      for (std::size_t k = 0; k < xs.size(); ++k) L += MultiPoly::variable(ctx, xs[k]) * mpq_class(slope[k]);
      for (long k = 0; k < slope[j]; ++k) lam *= RatFunc(L + MultiPoly::constant(ctx, k));
    }
    r.lambda.push_back(lam);
  }

  for (std::size_t k = 0; k < ctx->n(); ++k) {
    const auto qk = RatFunc::variable(ctx, ctx->q_var(k));
    std::vector<RatFunc> c{one, qk, qk * qk, RatFunc::constant(ctx, 2), qk / RatFunc::constant(ctx, 3)};
    r.mu.push_back(rng.pick(c) * random_ratfunc(rng, ctx, {ys[k]}, 2, 2, ctx->q_var(k)));
  }
  return r;
}

std::optional<mpq_class> value_at(const RatFunc& f, const std::vector<mpq_class>& point) {
  const auto d = dual_value(f.den(), std::size_t(-1), point).first;
  if (d == 0) return std::nullopt;
  return dual_value(f.num(), std::size_t(-1), point).first / d;
}

std::optional<mpq_class> derivative_at(const RatFunc& f, std::size_t var, const std::vector<mpq_class>& point) {
  const auto [n, dn] = dual_value(f.num(), var, point);
  const auto [d, dd] = dual_value(f.den(), var, point);
  if (d == 0) return std::nullopt;
  return (dn * d - n * dd) / (d * d);
}

bool pointwise_compatible(const CertificateSystem& sys, Rng& rng, int points) {
  const auto& ctx = *sys.ctx;
  for (const auto& v : sys.v)
    if (v.is_zero()) return false;
  for (const auto& w : sys.w)
    if (w.is_zero()) return false;

  int done = 0;
  for (int attempt = 0; done < points && attempt < 400; ++attempt) {
    std::vector<mpq_class> P(ctx.arity());
    for (std::size_t i = 0; i < ctx.arity(); ++i) P[i] = random_rational(rng, 40);
    for (std::size_t k = 0; k < ctx.n(); ++k) {
      mpq_class qv(rng.uniform(2, 9), rng.uniform(1, 3));
      qv.canonicalize();
      if (qv == 1) qv = 5;
      P[ctx.q_var(k)] = qv;
    }
    auto shifted = [&](std::size_t j) {
      auto Q = P;
      Q[ctx.x_var(j)] += 1;
      return Q;
    };
    auto scaled = [&](std::size_t k) {
      auto Q = P;
      Q[ctx.y_var(k)] *= P[ctx.q_var(k)];
      return Q;
    };
    bool singular = false;
    auto val = [&](const RatFunc& f, const std::vector<mpq_class>& at) -> mpq_class {
      auto r = value_at(f, at);
      if (!r) singular = true;
      return r.value_or(0);
    };
    auto der = [&](const RatFunc& f, std::size_t var) -> mpq_class {
      auto r = derivative_at(f, var, P);
      if (!r) singular = true;
      return r.value_or(0);
    };

    bool ok = true;
    for (std::size_t i = 0; i < ctx.l(); ++i)
      for (std::size_t k = i + 1; k < ctx.l(); ++k)
        ok = ok && der(sys.u[k], ctx.t_var(i)) == der(sys.u[i], ctx.t_var(k));
    for (std::size_t j = 0; j < ctx.m(); ++j)
      for (std::size_t k = j + 1; k < ctx.m(); ++k)
        ok = ok && val(sys.v[k], shifted(j)) * val(sys.v[j], P) == val(sys.v[j], shifted(k)) * val(sys.v[k], P);
    for (std::size_t j = 0; j < ctx.n(); ++j)
      for (std::size_t k = j + 1; k < ctx.n(); ++k)
        ok = ok && val(sys.w[k], scaled(j)) * val(sys.w[j], P) == val(sys.w[j], scaled(k)) * val(sys.w[k], P);
    for (std::size_t i = 0; i < ctx.l(); ++i) {
      for (std::size_t j = 0; j < ctx.m(); ++j)
        ok = ok && der(sys.v[j], ctx.t_var(i)) ==
                       val(sys.v[j], P) * (val(sys.u[i], shifted(j)) - val(sys.u[i], P));
      for (std::size_t k = 0; k < ctx.n(); ++k)
        ok = ok && der(sys.w[k], ctx.t_var(i)) ==
                       val(sys.w[k], P) * (val(sys.u[i], scaled(k)) - val(sys.u[i], P));
    }
    for (std::size_t j = 0; j < ctx.m(); ++j)
      for (std::size_t k = 0; k < ctx.n(); ++k)
        ok = ok && val(sys.w[k], shifted(j)) * val(sys.v[j], P) == val(sys.v[j], scaled(k)) * val(sys.w[k], P);

    if (singular) continue;
    if (!ok) return false;
    ++done;
  }
  return done == points;
}

namespace {

MultiPoly power_of(OpRef op, const MultiPoly& p, long i) {
  const auto& ctx = p.context();
  const std::size_t var = op.variable(*ctx);
  if (op.kind == OpRef::Kind::Sigma) return shift_variable(p, var, i);
  return scale_variable(p, var, MultiPoly::variable(ctx, ctx->q_of_y(var), static_cast<std::uint32_t>(i)));
}

bool moving_common(const MultiPoly& a, const MultiPoly& b, OpRef op) {
  const std::size_t var = op.variable(*a.context());
  MultiPoly g = poly_gcd(a, b);
  return g.degree(var) > g.min_degree(var) || (op.kind == OpRef::Kind::Sigma && g.degree(var) > 0);
}

}  // namespace

std::vector<long> brute_dispersion(const MultiPoly& a, const MultiPoly& b, OpRef op, long bound) {
  std::vector<long> hits;
  for (long i = 0; i <= bound; ++i)
    if (moving_common(a, power_of(op, b, i), op)) hits.push_back(i);
  return hits;
}

bool coprime_scan(const RatFunc& core, OpRef op, long bound) {
  for (long i = 0; i <= bound; ++i) {
    if (moving_common(core.den(), power_of(op, core.num(), i), op)) return false;
    if (moving_common(core.num(), power_of(op, core.den(), i), op)) return false;
  }
  return true;
}

RatFunc quotient_by_substitution(OpRef op, const RatFunc& f) {
  const auto& ctx = f.context();
  const std::size_t var = op.variable(*ctx);
  switch (op.kind) {
    case OpRef::Kind::Delta:
      return RatFunc(derivative(f.num(), var), f.num()) - RatFunc(derivative(f.den(), var), f.den());
    case OpRef::Kind::Sigma:
      return substitute(f, var, RatFunc(MultiPoly::variable(ctx, var) + MultiPoly::constant(ctx, 1))) / f;
    case OpRef::Kind::Tau:
      return substitute(f, var,
                        RatFunc(MultiPoly::variable(ctx, var) * MultiPoly::variable(ctx, ctx->q_of_y(var)))) /
             f;
  }
  return f;
}

}  // namespace dc_test
