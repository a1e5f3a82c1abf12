#include <algorithm>
#include <map>

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"
#include "deltacompat/structure.hpp"
#include "detail.hpp"

namespace deltacompat {

namespace {

constexpr std::size_t kMaxSystems = 16;
constexpr int kMaxRefineRounds = 1000;

using Entries = std::vector<std::pair<std::size_t, MultiPoly>>;

// Appends the rows of sum_a unknown[col_a] * poly_a = 0, one per monomial.
void add_linear_rows(IntMatrix& M, const Entries& entries, std::size_t columns) {
  std::map<std::vector<std::uint32_t>, std::vector<mpq_class>> rows;
  for (const auto& [col, p] : entries) {
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> key(t.exps.begin(), t.exps.end());
      auto& row = rows.try_emplace(std::move(key), std::vector<mpq_class>(columns, 0)).first->second;
      row[col] += t.coef;
    }
  }
  for (const auto& [key, row] : rows) {
    mpz_class l = 1;
    for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntVector r(columns);
    bool nonzero = false;
    for (std::size_t i = 0; i < columns; ++i) {
      mpq_class v = row[i] * l;
      r[i] = v.get_num();
      nonzero = nonzero || r[i] != 0;
    }
    if (nonzero) M.push_back(std::move(r));
  }
}

IntegerLattice project(const IntegerLattice& K, std::size_t s) {
  IntMatrix rows;
  for (const auto& v : K.basis) rows.emplace_back(v.begin(), v.begin() + static_cast<long>(s));
  return lattice_from_generators(std::move(rows), s);
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a * b, poly_gcd(a, b)); }

std::vector<bool> only(const VarContext& ctx, std::size_t v) {
  std::vector<bool> main(ctx.arity(), false);
  main[v] = true;
  return main;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t v) {
  return divide_exact(p, content_wrt(p, only(*p.context(), v))).monic();
}

std::vector<mpq_class> rational_roots(const MultiPoly& p, std::size_t var) {
  const auto cs = coefficients(integer_primitive(p), var);
  if (cs.size() < 2) return {};
  const std::size_t n = cs.size() - 1;
  const mpz_class lead = cs[n].constant_term().get_num();
  // z = lead * c turns p into a monic integer polynomial in z.
  std::vector<MultiPoly> monic(n + 1, MultiPoly(p.context()));
  monic[n] = MultiPoly::constant(p.context(), 1);
  mpz_class scale = 1;
  for (std::size_t k = n; k-- > 0;) {
    monic[k] = cs[k] * mpq_class(scale);
    scale *= lead;
  }
  std::vector<mpq_class> out;
  for (const auto& z : integer_roots(from_coefficients(p.context(), var, monic), var)) {
    mpq_class c(z, lead);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

// Factors of the denominator of beta on which its residue (in v) is one
// rational number. Skipped when beta has a polynomial part or multiple poles.
std::vector<MultiPoly> residue_pieces(const RatFunc& beta, std::size_t v) {
  const MultiPoly& N = beta.num();
  const MultiPoly& D = beta.den();
  if (D.degree(v) == 0 || N.degree(v) >= D.degree(v)) return {};
  const MultiPoly dD = derivative(D, v);
  if (poly_gcd(D, dD).degree(v) > 0) return {};
  const auto& ctx = beta.context();
  ContextPtr actx = ctx->with_aux("_c");
  const std::size_t cv = actx->arity() - 1;
  MultiPoly R = resultant(D.embed(actx), N.embed(actx) - MultiPoly::variable(actx, cv) * dD.embed(actx), v);
  if (R.is_zero()) return {};
  MultiPoly pp = divide_exact(R, content_wrt(R, only(*actx, cv)));
  for (std::size_t w = 0; w < actx->arity(); ++w)
    if (w != cv && pp.depends_on(w)) return {};
  std::vector<MultiPoly> out;
  for (const auto& c : rational_roots(pp, cv)) {
    MultiPoly d = poly_gcd(D, N - dD * c);
    if (d.degree(v) > 0) out.push_back(primitive_in(d, v));
  }
  return out;
}

// omega with sum_i omega_i beta_i a log-derivative in t_r.
IntegerLattice e_lattice(const std::vector<HProduct>& parts, std::size_t r) {
  const auto& ctx = parts.front().ctx;
  const std::size_t s = parts.size();
  const std::size_t v = ctx->t_var(r);
  std::vector<RatFunc> betas;
  for (const auto& p : parts) betas.push_back(p.e_certs[r]);

  MultiPoly D = MultiPoly::constant(ctx, 1);
  for (const auto& b : betas) D = lcm(D, b.den());
  std::vector<MultiPoly> P;
  for (const auto& b : betas) P.push_back(b.num() * divide_exact(D, b.den()));
  const MultiPoly kappa = content_wrt(D, only(*ctx, v));
  const MultiPoly Dv = divide_exact(D, kappa);
  const MultiPoly S = Dv.degree(v) == 0 ? MultiPoly::constant(ctx, 1) : squarefree_part(Dv, v);
  const MultiPoly A = divide_exact(Dv, S);

  // Poles of order two or more must cancel: A divides sum omega_i P_i.
  unsigned e = 0;
  for (const auto& p : P)
    if (p.degree(v) + 1 > A.degree(v)) e = std::max(e, p.degree(v) + 1 - A.degree(v));
  std::vector<MultiPoly> Q;
  IntMatrix M;
  Entries rem;
  for (std::size_t i = 0; i < s; ++i) {
    auto pd = pseudo_divide(P[i], A, v, e);
    rem.emplace_back(i, std::move(pd.remainder));
    Q.push_back(std::move(pd.quotient));
  }
  add_linear_rows(M, rem, s);
  // Now sum omega_i beta_i = sum omega_i Q_i / (c S); no polynomial part.
  const std::size_t dS = S.degree(v);
  for (std::size_t i = 0; i < s; ++i) {
    auto cs = coefficients(Q[i], v);
    for (std::size_t d = dS; d < cs.size(); ++d) {
      Entries one{{i, cs[d]}};
      add_linear_rows(M, one, s);
    }
  }
  if (dS == 0) return project(integer_kernel(M, s), s);

  // Simple poles: on every piece d_j the residue is one integer n_j.
  std::vector<MultiPoly> seeds{S};
  for (const auto& b : betas)
    for (auto& piece : residue_pieces(b, v)) seeds.push_back(std::move(piece));
  std::vector<MultiPoly> pieces;
  for (auto& b : gcdfree_basis(seeds).basis)
    if (b.degree(v) > 0) pieces.push_back(std::move(b));
  const std::size_t columns = s + pieces.size();
  for (auto& row : M) row.resize(columns, 0);

  const MultiPoly c = coefficients(A, v).back().pow(e) * kappa;
  const MultiPoly cdS = c * derivative(S, v);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const MultiPoly& d = pieces[j];
    auto need = [&](const MultiPoly& p) { return p.degree(v) + 1 > d.degree(v) ? p.degree(v) + 1 - d.degree(v) : 0u; };
    unsigned ed = need(cdS);
    for (const auto& q : Q) ed = std::max(ed, need(q));
    Entries entries;
    for (std::size_t i = 0; i < s; ++i) entries.emplace_back(i, pseudo_divide(Q[i], d, v, ed).remainder);
    entries.emplace_back(s + j, -pseudo_divide(cdS, d, v, ed).remainder);
    add_linear_rows(M, entries, columns);
  }
  return project(integer_kernel(M, columns), s);
}

bool is_y_power(const MultiPoly& p, OpRef op) {
  if (op.kind != OpRef::Kind::Tau || p.size() != 1) return false;
  return p.total_degree() == p.degree(op.variable(*p.context()));
}

bool moving(const MultiPoly& p, OpRef op) {
  return p.depends_on(op.variable(*p.context())) && !is_y_power(p, op);
}

// Seeds with the operator-free content and the y-power split off.
void push_seeds(std::vector<MultiPoly>& seeds, MultiPoly p, OpRef op) {
  if (p.is_constant()) return;
  const auto& ctx = p.context();
  const std::size_t v = op.variable(*ctx);
  if (op.kind == OpRef::Kind::Tau && p.min_degree(v) > 0) {
    const auto low = p.min_degree(v);
    seeds.push_back(MultiPoly::variable(ctx, v));
    p = divide_exact(p, MultiPoly::variable(ctx, v, low));
  }
  MultiPoly c = content_wrt(p, only(*ctx, v));
  if (!c.is_one()) {
    seeds.push_back(c);
    p = divide_exact(p, c);
  }
  if (!p.is_constant()) seeds.push_back(p.monic());
}

struct Relation {
  std::size_t a, b;
  long shift;
  RatFunc gamma;  // a = gamma * phi^shift(b)
};

// Gcd-free basis in which two moving elements are either coprime under all
// shifts or one is a constant multiple of a shift of the other.
std::vector<MultiPoly> shift_basis(std::vector<MultiPoly> seeds, OpRef op, std::vector<Relation>& rels) {
  for (int round = 0; round < kMaxRefineRounds; ++round) {
    std::vector<MultiPoly> basis = gcdfree_basis(seeds).basis;
    rels.clear();
    bool split = false;
    for (std::size_t a = 0; a < basis.size() && !split; ++a) {
      if (!moving(basis[a], op)) continue;
      for (std::size_t b = 0; b < basis.size() && !split; ++b) {
        if (!moving(basis[b], op)) continue;
        for (long h : dispersion(basis[a], basis[b], op).hits) {
          if (h == 0) continue;
          MultiPoly g = moving_gcd(basis[a], basis[b], op, h);
          if (g.is_one()) continue;
          if (a != b && g == basis[a] && apply_poly(op, basis[b], h).monic() == g) {
            RatFunc gamma = RatFunc(basis[a]) / apply(op, RatFunc(basis[b]), h);
            if (!in_field(gamma)) throw Error("shift relation with a non-constant factor");
            rels.push_back({a, b, h, gamma});
            continue;
          }
          seeds = basis;
          seeds.push_back(g);
          seeds.push_back(moving_gcd(basis[b], g, op, -h));
          split = true;
          break;
        }
      }
    }
    if (!split) return basis;
  }
  throw Error("shift refinement did not converge");
}

// omega with prod_i certs_i^omega_i = l_phi(z) for a rational z.
IntegerLattice shift_lattice(const std::vector<RatFunc>& certs, OpRef op) {
  const std::size_t s = certs.size();
  if (s == 0) return {0, {}};
  const auto& ctx = certs.front().context();
  std::vector<MultiPoly> seeds;
  for (const auto& c : certs) {
    push_seeds(seeds, c.num(), op);
    push_seeds(seeds, c.den(), op);
  }
  std::vector<Relation> rels;
  const std::vector<MultiPoly> basis = shift_basis(std::move(seeds), op, rels);
  const std::size_t nb = basis.size();

  // Exponent of basis element b in cert i, and the leftover rational unit.
  std::vector<std::vector<long>> ex(s, std::vector<long>(nb, 0));
  std::vector<RatFunc> consts;
  for (std::size_t i = 0; i < s; ++i) {
    mpq_class unit = 1;
    for (int side = 0; side < 2; ++side) {
      MultiPoly rest = side == 0 ? certs[i].num() : certs[i].den();
      for (std::size_t b = 0; b < nb; ++b) {
        while (!rest.is_constant()) {
          auto q = try_divide(rest, basis[b]);
          if (!q) break;
          rest = std::move(*q);
          ex[i][b] += side == 0 ? 1 : -1;
        }
      }
      if (!rest.is_constant()) throw Error("shift basis does not cover a certificate");
      if (side == 0) unit *= rest.leading_coefficient();
      else unit /= rest.leading_coefficient();
    }
    consts.push_back(RatFunc::constant(ctx, unit));
  }

  // Each shift class collapses onto one root: element = gamma * phi^k(root).
  std::vector<std::optional<std::pair<RatFunc, long>>> rel(nb);
  std::vector<std::size_t> cls(nb, nb);
  for (std::size_t root = 0; root < nb; ++root) {
    if (!moving(basis[root], op) || rel[root]) continue;
    rel[root] = std::make_pair(RatFunc::constant(ctx, 1), 0L);
    cls[root] = root;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& r : rels) {
        if (rel[r.b] && !rel[r.a]) {
          rel[r.a] = std::make_pair(r.gamma * rel[r.b]->first, r.shift + rel[r.b]->second);
          cls[r.a] = root;
          grew = true;
        } else if (rel[r.a] && !rel[r.b]) {
          rel[r.b] = std::make_pair(rel[r.a]->first / r.gamma, rel[r.a]->second - r.shift);
          cls[r.b] = root;
          grew = true;
        }
      }
    }
  }

  IntMatrix M;
  std::map<std::size_t, IntVector> class_rows;
  for (std::size_t b = 0; b < nb; ++b) {
    const bool field = basis[b].only_uses(block_mask(*ctx, {Block::Q}));
    for (std::size_t i = 0; i < s; ++i) {
      if (ex[i][b] == 0) continue;
      if (field) {
        consts[i] *= RatFunc(basis[b]).pow(ex[i][b]);
      } else if (cls[b] < nb) {
        consts[i] *= rel[b]->first.pow(ex[i][b]);
      }
    }
    if (field) continue;
    IntVector row(s, 0);
    for (std::size_t i = 0; i < s; ++i) row[i] = ex[i][b];
    if (cls[b] == nb) {
      M.push_back(std::move(row));
    } else {
      auto& acc = class_rows.try_emplace(cls[b], IntVector(s, 0)).first->second;
      for (std::size_t i = 0; i < s; ++i) acc[i] += row[i];
    }
  }
  for (auto& [root, row] : class_rows) M.push_back(std::move(row));
  IntegerLattice L = integer_kernel(M, s);

  // Leftover constants: 1 for shifts, a power of q_k for q-shifts.
  if (op.kind == OpRef::Kind::Tau)
    consts.push_back(RatFunc::variable(ctx, ctx->q_of_y(op.variable(*ctx))));
  return intersect(L, project(multiplicative_relations(consts), s));
}

IntVector normalized(IntVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const mpz_class& c) { return c != 0; });
  if (it != v.end() && *it < 0)
    for (auto& c : v) c = -c;
  return v;
}

}  // namespace

IntegerLattice dependence_lattice(const std::vector<HProduct>& parts) {
  const std::size_t s = parts.size();
  if (s == 0) return {0, {}};
  if (s > kMaxSystems) throw CapacityError("dependence search supports at most 16 systems");
  const auto& ctx = parts.front().ctx;
  for (const auto& p : parts)
    if (!same_context(p.ctx, ctx)) throw ContextMismatch();

  IntegerLattice L = IntegerLattice::full(s);
  for (std::size_t j = 0; j < ctx->m() && !L.is_zero(); ++j) {
    std::vector<RatFunc> bases(s, RatFunc::constant(ctx, 1));
    for (std::size_t i = 0; i < s; ++i)
      for (const auto& [base, idx] : parts[i].powers)
        if (idx == j) bases[i] = base;
    L = intersect(L, multiplicative_relations(bases));
  }
  for (std::size_t r = 0; r < ctx->l() && !L.is_zero(); ++r) L = intersect(L, e_lattice(parts, r));
  for (std::size_t j = 0; j < ctx->m() && !L.is_zero(); ++j) {
    std::vector<RatFunc> certs;
    for (const auto& p : parts) certs.push_back(p.g_certs[j]);
    L = intersect(L, shift_lattice(certs, OpRef::sigma(j)));
  }
  for (std::size_t k = 0; k < ctx->n() && !L.is_zero(); ++k) {
    std::vector<RatFunc> certs;
    for (const auto& p : parts) certs.push_back(p.q_certs[k]);
    L = intersect(L, shift_lattice(certs, OpRef::tau(k)));
  }
  return L;
}

std::optional<DependenceWitness> algebraic_dependence(const std::vector<CertificateSystem>& systems,
                                                      const EvalOptions& options) {
  if (systems.size() > kMaxSystems) throw CapacityError("dependence search supports at most 16 systems");
  if (systems.empty()) return std::nullopt;
  const auto& ctx = systems.front().ctx;
  for (const auto& sys : systems)
    if (!same_context(sys.ctx, ctx)) throw ContextMismatch();
  std::vector<HProduct> parts;
  for (const auto& sys : systems) parts.push_back(decompose(sys, options));
  const IntegerLattice L = dependence_lattice(parts);
  if (L.is_zero()) return std::nullopt;

  std::vector<IntVector> candidates{short_vector(L)};
  for (const auto& row : L.basis) candidates.push_back(normalized(row));
  for (const auto& omega : candidates) {
    std::vector<long> w;
    for (const auto& c : omega) {
      if (!c.fits_slong_p()) throw CapacityError("relation exponent too large");
      w.push_back(c.get_si());
    }
    HProduct combined{ctx, RatFunc::constant(ctx, 1), {}, std::vector<RatFunc>(ctx->l(), RatFunc(ctx)),
                      std::vector<RatFunc>(ctx->m(), RatFunc::constant(ctx, 1)),
                      std::vector<RatFunc>(ctx->n(), RatFunc::constant(ctx, 1))};
    std::vector<RatFunc> powers(ctx->m(), RatFunc::constant(ctx, 1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (w[i] == 0) continue;
      const auto& p = parts[i];
      combined.rational_part *= p.rational_part.pow(w[i]);
      for (const auto& [base, j] : p.powers) powers[j] *= base.pow(w[i]);
      for (std::size_t r = 0; r < ctx->l(); ++r)
        combined.e_certs[r] += RatFunc::constant(ctx, mpq_class(w[i])) * p.e_certs[r];
      for (std::size_t j = 0; j < ctx->m(); ++j) combined.g_certs[j] *= p.g_certs[j].pow(w[i]);
      for (std::size_t k = 0; k < ctx->n(); ++k) combined.q_certs[k] *= p.q_certs[k].pow(w[i]);
    }
    if (!std::all_of(powers.begin(), powers.end(), [](const RatFunc& f) { return f.is_one(); })) continue;
    auto wit = detail::rational_parts(combined, options);
    if (!wit) continue;
    const auto& [e, g, q] = *wit;
    return DependenceWitness{omega, powers, e, g, q, combined.rational_part * e * g * q};
  }
  throw Error("dependence relation failed verification");
}

}  // namespace deltacompat
