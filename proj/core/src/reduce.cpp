#include "deltacompat/reduce.hpp"

#include <algorithm>

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"

namespace deltacompat {

namespace {

constexpr int kMaxRounds = 10000;

RatFunc ladder(const MultiPoly& g, OpRef op, long from, long to) {
  RatFunc out = RatFunc::constant(g.context(), 1);
  for (long k = from; k <= to; ++k) out *= RatFunc(apply_poly(op, g, k));
  return out;
}

// One pass over the num/den hits; returns false when nothing changed.
bool strip_num_den(MultiPoly& N, MultiPoly& D, RatFunc& shell, OpRef op) {
  bool changed = false;
  for (long h : dispersion(N, D, op).hits) {
    if (h == 0) continue;
    MultiPoly g = moving_gcd(N, D, op, h);
    if (g.is_one()) continue;
    // N = g N1, D = phi^-h(g) D1 and g / phi^-h(g) = l_phi(prod_{k=1..h} phi^-k g).
    N = divide_exact(N, g);
    D = divide_exact(D, moving_gcd(D, g, op, -h));
    shell *= ladder(g, op, -h, -1);
    changed = true;
  }
  for (long h : dispersion(D, N, op).hits) {
    if (h == 0) continue;
    MultiPoly p = moving_gcd(N, D, op, -h);
    if (p.is_one()) continue;
    // N = p N1, D = phi^h(p) D1 and p / phi^h(p) = 1 / l_phi(prod_{k=0..h-1} phi^k p).
    N = divide_exact(N, p);
    D = divide_exact(D, moving_gcd(D, p, op, h));
    shell /= ladder(p, op, 0, h - 1);
    changed = true;
  }
  return changed;
}

// Standard mode: factor pairs inside the numerator (or denominator) alone.
bool strip_self(MultiPoly& P, RatFunc& shell, OpRef op, bool numerator) {
  for (long h : dispersion(P, P, op).hits) {
    if (h == 0) continue;
    MultiPoly G = moving_gcd(P, P, op, h);
    if (G.is_one()) continue;
    // G | P and phi^-h(G) | P: trade G for phi^-h(G), the quotient going to the shell.
    MultiPoly back = moving_gcd(P, G, op, -h);
    P = divide_exact(P, G) * back;
    RatFunc step = ladder(G, op, -h, -1);
    if (numerator) shell *= step;
    else shell /= step;
    return true;
  }
  return false;
}

}  // namespace

ReducedDecomposition reduced_decompose(const RatFunc& f, OpRef op, ReduceMode mode) {
  if (f.is_zero()) throw ZeroInput("reduced decomposition of zero");
  if (op.kind == OpRef::Kind::Delta) throw InvalidVariable("reduction needs a shift or q-shift");
  const auto& ctx = f.context();
  op.validate(*ctx);
  MultiPoly N = f.num().monic();
  MultiPoly D = f.den().monic();
  RatFunc shell = RatFunc::constant(ctx, 1);
  for (int round = 0;; ++round) {
    if (round > kMaxRounds) throw Error("reduced decomposition did not converge");
    bool changed = strip_num_den(N, D, shell, op);
    if (mode == ReduceMode::Standard && !changed) {
      changed = strip_self(N, shell, op, true) || strip_self(D, shell, op, false);
    }
    if (!changed) break;
  }
  if (!shell.is_one()) shell = split_field_constant(shell).second;
  RatFunc core = f / log_quotient(op, shell);
  return {shell, core, op, mode};
}

std::optional<RatFunc> solve_quotient(OpRef op, const RatFunc& r,
                                      const std::vector<std::size_t>& forbidden_vars,
                                      const EvalOptions& options) {
  if (r.is_zero()) throw ZeroInput("quotient equation with zero right-hand side");
  const auto& ctx = r.context();
  for (auto v : forbidden_vars)
    if (r.depends_on(v)) return std::nullopt;
  auto rd = reduced_decompose(r, op, ReduceMode::Reduced);
  RatFunc z = rd.shell;
  if (!rd.core.is_one()) {
    if (op.kind != OpRef::Kind::Tau) return std::nullopt;
    // l_tau(y^e) = q^e: the core may be a power of the paired parameter.
    const std::size_t yv = op.variable(*ctx);
    const std::size_t qv = ctx->q_of_y(yv);
    const RatFunc& c = rd.core;
    auto is_q_power = [&](const MultiPoly& p) {
      if (p.size() != 1 || p.leading_coefficient() != 1) return false;
      const auto& exps = p.leading().exps;
      for (std::size_t w = 0; w < exps.size(); ++w)
        if (w != qv && exps[w] != 0) return false;
      return true;
    };
    if (!is_q_power(c.num()) || !is_q_power(c.den())) return std::nullopt;
    const long e = static_cast<long>(c.num().degree(qv)) - static_cast<long>(c.den().degree(qv));
    z *= RatFunc::variable(ctx, yv).pow(e);
  }
  z = proper_evaluate(z, forbidden_vars, options);
  return split_field_constant(z).second;
}

RatFunc witness_product(const ContextPtr& ctx, const LogWitness& w) {
  RatFunc g = RatFunc::constant(ctx, 1);
  for (const auto& [d, c] : w) g *= RatFunc(d).pow(c);
  return g;
}

std::optional<LogWitness> is_log_derivative(std::size_t i, const RatFunc& beta) {
  const auto& ctx = beta.context();
  const std::size_t v = ctx->t_var(i);
  if (!beta.only_uses(block_mask(*ctx, {Block::T, Block::Q})))
    throw InvalidVariable("is_log_derivative expects an element of F(t)");
  if (beta.is_zero()) return LogWitness{};
  const MultiPoly& N = beta.num();
  const MultiPoly& D = beta.den();
  // Nonzero polynomial part: the integral has an exponential part.
  if (N.degree(v) >= D.degree(v)) return std::nullopt;
  const MultiPoly dD = derivative(D, v);
  if (poly_gcd(D, dD).degree(v) > 0) return std::nullopt;

  // Residues are the roots c of res_t(D, N - c D').
  ContextPtr actx = ctx->with_aux("_c");
  const std::size_t cv = actx->arity() - 1;
  MultiPoly Na = N.embed(actx), Da = D.embed(actx), dDa = dD.embed(actx);
  MultiPoly R = resultant(Da, Na - MultiPoly::variable(actx, cv) * dDa, v);
  if (R.is_zero()) return std::nullopt;
  std::vector<bool> main(actx->arity(), false);
  main[cv] = true;
  MultiPoly pp = divide_exact(R, content_wrt(R, main));
  for (std::size_t w = 0; w < actx->arity(); ++w)
    if (w != cv && pp.depends_on(w)) return std::nullopt;

  LogWitness witness;
  MultiPoly rest = pp;
  for (const auto& c : integer_roots(pp, cv)) {
    MultiPoly lin = MultiPoly::variable(actx, cv) - MultiPoly::constant(actx, mpq_class(c));
    while (auto q = try_divide(rest, lin)) rest = std::move(*q);
    if (c == 0) continue;
    MultiPoly d = poly_gcd(D, N - dD * mpq_class(c));
    if (d.degree(v) == 0) continue;
    if (!c.fits_slong_p()) throw CapacityError("residue too large");
    witness.emplace_back(d, c.get_si());
  }
  // Every residue must be an integer.
  if (rest.degree(cv) > 0) return std::nullopt;

  RatFunc check(ctx);
  for (const auto& [d, c] : witness)
    check += RatFunc::constant(ctx, mpq_class(c)) * log_quotient(OpRef::delta(i), RatFunc(d));
  if (check != beta) return std::nullopt;
  return witness;
}

std::optional<RatFunc> solve_certificates(const ContextPtr& ctx,
                                          const std::vector<std::pair<OpRef, RatFunc>>& certs,
                                          const EvalOptions& options) {
  RatFunc f = RatFunc::constant(ctx, 1);
  std::vector<std::size_t> forbidden;
  for (const auto& [op, r] : certs) {
    if (op.kind == OpRef::Kind::Delta) throw InvalidVariable("certificate merge takes shifts only");
    RatFunc rho = r / log_quotient(op, f);
    auto h = solve_quotient(op, rho, forbidden, options);
    if (!h) return std::nullopt;
    f *= *h;
    forbidden.push_back(op.variable(*ctx));
  }
  if (f.is_one()) return f;
  return split_field_constant(f).second;
}

RatFunc merge_rational_solution(const ContextPtr& ctx,
                                const std::vector<std::pair<OpRef, RatFunc>>& targets,
                                const EvalOptions& options) {
  if (targets.empty()) return RatFunc::constant(ctx, 1);
  RatFunc f = targets.front().second;
  if (targets.front().first.kind == OpRef::Kind::Delta)
    throw InvalidVariable("certificate merge takes shifts only");
  std::vector<std::size_t> forbidden{targets.front().first.variable(*ctx)};
  for (std::size_t t = 1; t < targets.size(); ++t) {
    const auto& [op, g] = targets[t];
    if (op.kind == OpRef::Kind::Delta) throw InvalidVariable("certificate merge takes shifts only");
    RatFunc rho = log_quotient(op, g / f);
    auto h = solve_quotient(op, rho, forbidden, options);
    if (!h) throw NotCompatible("no common rational solution for " + op.label());
    f *= *h;
    forbidden.push_back(op.variable(*ctx));
  }
  if (f.is_zero()) throw ZeroInput("merge produced zero");
  return split_field_constant(f).second;
}

}  // namespace deltacompat
