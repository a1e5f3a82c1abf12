#include "deltacompat/ops.hpp"

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"
#include "detail.hpp"

namespace deltacompat {

std::size_t OpRef::variable(const VarContext& ctx) const {
  switch (kind) {
    case Kind::Delta: return ctx.t_var(index);
    case Kind::Sigma: return ctx.x_var(index);
    case Kind::Tau: return ctx.y_var(index);
  }
  throw InvalidVariable("unknown operator kind");
}

void OpRef::validate(const VarContext& ctx) const { (void)variable(ctx); }

std::string OpRef::label() const {
  const char* base = kind == Kind::Delta ? "delta_" : kind == Kind::Sigma ? "sigma_" : "tau_";
  return base + std::to_string(index + 1);
}

MultiPoly apply_poly(OpRef op, const MultiPoly& p, long power) {
  const auto& ctx = *p.context();
  const std::size_t var = op.variable(ctx);
  switch (op.kind) {
    case OpRef::Kind::Delta:
      if (power != 1) throw InvalidVariable("derivations only take power 1");
      return derivative(p, var);
    case OpRef::Kind::Sigma:
      return shift_variable(p, var, mpq_class(power));
    case OpRef::Kind::Tau: {
      const std::size_t qv = ctx.q_of_y(var);
      if (power >= 0)
        return scale_variable(p, var, MultiPoly::variable(p.context(), qv, static_cast<std::uint32_t>(power)));
      // y -> y / q^e, cleared by q^(e * deg_y p).
      const auto e = static_cast<std::uint32_t>(-power);
      const auto d = p.degree(var);
      PolyBuilder b(p.context());
      for (const auto& t : p.terms()) {
        Monomial m = t.exps;
        m[qv] += e * (d - m[var]);
        b.add(std::move(m), t.coef);
      }
      return std::move(b).build();
    }
  }
  throw InvalidVariable("unknown operator kind");
}

RatFunc apply(OpRef op, const RatFunc& f, long power) {
  const auto& ctx = f.context();
  const std::size_t var = op.variable(*ctx);
  if (!f.depends_on(var) && op.kind != OpRef::Kind::Delta) return f;
  switch (op.kind) {
    case OpRef::Kind::Delta: {
      if (power != 1) throw InvalidVariable("derivations only take power 1");
      if (!f.depends_on(var)) return RatFunc(ctx);
      const MultiPoly& n = f.num();
      const MultiPoly& d = f.den();
      return RatFunc(derivative(n, var) * d - n * derivative(d, var), d * d);
    }
    case OpRef::Kind::Sigma:
      return RatFunc(apply_poly(op, f.num(), power), apply_poly(op, f.den(), power));
    case OpRef::Kind::Tau: {
      if (power >= 0) return RatFunc(apply_poly(op, f.num(), power), apply_poly(op, f.den(), power));
      // Bring both parts to a common power of q before dividing.
      const auto e = static_cast<std::uint32_t>(-power);
      const auto dn = f.num().degree(var), dd = f.den().degree(var);
      MultiPoly n = apply_poly(op, f.num(), power);
      MultiPoly d = apply_poly(op, f.den(), power);
      const std::size_t qv = ctx->q_of_y(var);
      if (dn > dd) d = d * MultiPoly::variable(ctx, qv, e * (dn - dd));
      else if (dd > dn) n = n * MultiPoly::variable(ctx, qv, e * (dd - dn));
      return RatFunc(std::move(n), std::move(d));
    }
  }
  throw InvalidVariable("unknown operator kind");
}

RatFunc log_quotient(OpRef op, const RatFunc& f) {
  if (f.is_zero()) throw ZeroInput("log quotient of zero");
  const auto& ctx = f.context();
  const std::size_t var = op.variable(*ctx);
  if (op.kind == OpRef::Kind::Delta) {
    if (!f.depends_on(var)) return RatFunc(ctx);
    const MultiPoly& n = f.num();
    const MultiPoly& d = f.den();
    return RatFunc(derivative(n, var) * d - n * derivative(d, var), n * d);
  }
  if (!f.depends_on(var)) return RatFunc::constant(ctx, 1);
  return apply(op, f, 1) / f;
}

namespace {

mpq_class spiral(std::uint64_t k) {
  if (k == 0) return 0;
  const auto half = static_cast<long>((k + 1) / 2);
  return (k % 2 == 1) ? mpq_class(half) : mpq_class(-half);
}

MultiPoly evaluate_poly(MultiPoly p, const std::vector<std::size_t>& vars,
                        const std::vector<mpq_class>& point) {
  for (std::size_t r = 0; r < vars.size(); ++r) p = evaluate(p, vars[r], point[r]);
  return p;
}

}  // namespace

namespace detail {

MultiPoly evaluate_point(MultiPoly p, const std::vector<std::size_t>& vars,
                         const std::vector<mpq_class>& point) {
  return evaluate_poly(std::move(p), vars, point);
}

std::vector<mpq_class> specialization_point(const std::vector<MultiPoly>& nonvanishing,
                                            const std::vector<std::size_t>& vars,
                                            const EvalOptions& options) {
  for (const auto& p : nonvanishing)
    if (p.is_zero()) throw ZeroInput("proper evaluation of zero");
  std::vector<mpq_class> point(vars.size());
  for (unsigned k = 0; k < options.retry_budget; ++k) {
    for (std::size_t r = 0; r < vars.size(); ++r) point[r] = spiral(options.seed + k * (r + 1));
    bool ok = true;
    for (const auto& p : nonvanishing) {
      if (evaluate_poly(p, vars, point).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) return point;
  }
  throw RetryBudgetExhausted("no proper evaluation point within " +
                             std::to_string(options.retry_budget) + " attempts");
}

}  // namespace detail

std::vector<mpq_class> proper_point(const std::vector<MultiPoly>& nonvanishing,
                                    const std::vector<std::size_t>& kill_vars,
                                    const EvalOptions& options) {
  for (const auto& p : nonvanishing)
    for (auto v : kill_vars)
      if (p.context()->block(v) == Block::Q)
        throw InvalidVariable("q-parameters cannot be evaluated: " + p.context()->name(v));
  return detail::specialization_point(nonvanishing, kill_vars, options);
}

RatFunc evaluate_at(const RatFunc& f, const std::vector<std::size_t>& vars,
                    const std::vector<mpq_class>& point) {
  MultiPoly d = evaluate_poly(f.den(), vars, point);
  if (d.is_zero()) throw EvaluationSingular("denominator vanishes at the evaluation point");
  return RatFunc(evaluate_poly(f.num(), vars, point), std::move(d));
}

RatFunc proper_evaluate(const RatFunc& f, const std::vector<std::size_t>& kill_vars,
                        const EvalOptions& options) {
  std::vector<std::size_t> used;
  for (auto v : kill_vars) {
    if (f.context()->block(v) == Block::Q)
      throw InvalidVariable("q-parameters cannot be evaluated: " + f.context()->name(v));
    if (f.depends_on(v)) used.push_back(v);
  }
  if (used.empty() || f.is_zero()) return f;
  auto point = proper_point({f.num(), f.den()}, kill_vars, options);
  return evaluate_at(f, kill_vars, point);
}

}  // namespace deltacompat
