#include "deltacompat/block_split.hpp"
#include "deltacompat/error.hpp"
#include "deltacompat/structure.hpp"

namespace deltacompat {

namespace {

bool field_monic(const RatFunc& f) { return split_field_constant(f).first.is_one(); }

RatFunc sum_power_terms(const Representation& r, std::size_t i) {
  RatFunc acc(r.ctx);
  for (std::size_t j = 0; j < r.alpha.size(); ++j) {
    if (r.alpha[j].is_one()) continue;
    acc += log_quotient(OpRef::delta(i), r.alpha[j]) * RatFunc::variable(r.ctx, r.ctx->x_var(j));
  }
  return acc;
}

}  // namespace

void Representation::validate() const {
  auto fail = [](const std::string& what) { throw StructureViolation("membership", what); };
  if (!ctx) fail("representation without a context");
  if (alpha.size() != ctx->m() || lambda.size() != ctx->m() || beta.size() != ctx->l() ||
      mu.size() != ctx->n())
    fail("component counts do not match the variable blocks");
  const auto in_t = block_mask(*ctx, {Block::T, Block::Q});
  const auto in_x = block_mask(*ctx, {Block::X, Block::Q});
  const auto in_y = block_mask(*ctx, {Block::Y, Block::Q});
  if (f.is_zero()) fail("f is zero");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j].is_zero() || !alpha[j].only_uses(in_t)) fail("alpha_" + std::to_string(j + 1) + " not in F(t)^*");
    if (lambda[j].is_zero() || !lambda[j].only_uses(in_x))
      fail("lambda_" + std::to_string(j + 1) + " not in F(x)^*");
  }
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (!beta[i].only_uses(in_t)) fail("beta_" + std::to_string(i + 1) + " not in F(t)");
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (mu[k].is_zero() || !mu[k].only_uses(in_y)) fail("mu_" + std::to_string(k + 1) + " not in F(y)^*");
}

bool Representation::is_standard() const {
  if (!field_monic(f)) return false;
  for (const auto& a : alpha)
    if (!field_monic(a)) return false;
  for (auto b : {SplitBlock::T, SplitBlock::X, SplitBlock::Y})
    if (!in_field(block_split(f, b).pure_part)) return false;
  return true;
}

CertificateSystem build_system(const Representation& r) {
  r.validate();
  CertificateSystem sys{r.ctx, {}, {}, {}};
  for (std::size_t i = 0; i < r.ctx->l(); ++i)
    sys.u.push_back(log_quotient(OpRef::delta(i), r.f) + sum_power_terms(r, i) + r.beta[i]);
  for (std::size_t j = 0; j < r.ctx->m(); ++j)
    sys.v.push_back(log_quotient(OpRef::sigma(j), r.f) * r.alpha[j] * r.lambda[j]);
  for (std::size_t k = 0; k < r.ctx->n(); ++k)
    sys.w.push_back(log_quotient(OpRef::tau(k), r.f) * r.mu[k]);
  return sys;
}

CertificateSystem residual_system(const Representation& r) {
  return CertificateSystem{r.ctx, r.beta, r.lambda, r.mu};
}

Representation represent(const CertificateSystem& sys, const EvalOptions& options) {
  sys.validate();
  const auto report = check(sys);
  if (!report.ok) throw NotCompatible("certificate system is not compatible");
  const auto& ctx = sys.ctx;
  Representation r{ctx, RatFunc::constant(ctx, 1), {}, {}, {}, {}};
  std::vector<std::pair<OpRef, RatFunc>> sigma_targets, tau_targets;

  for (std::size_t k = 0; k < ctx->n(); ++k) {
    auto split = block_split(sys.w[k], SplitBlock::Y);
    auto rd = reduced_decompose(split.rest, OpRef::tau(k));
    if (!in_field(rd.core))
      throw StructureViolation("step 1", "reduced core of w_" + std::to_string(k + 1) + " is not constant");
    r.mu.push_back(rd.core * split.pure_part);
    tau_targets.emplace_back(OpRef::tau(k), rd.shell);
  }

  for (std::size_t j = 0; j < ctx->m(); ++j) {
    auto split = block_split(sys.v[j], SplitBlock::TX);
    auto rd = reduced_decompose(split.rest, OpRef::sigma(j));
    if (!in_field(rd.core))
      throw StructureViolation("step 2", "reduced core of v_" + std::to_string(j + 1) + " is not constant");
    r.alpha.push_back(split.t_part);
    r.lambda.push_back(rd.core * split.x_part);
    sigma_targets.emplace_back(OpRef::sigma(j), rd.shell);
  }

  std::vector<std::pair<OpRef, RatFunc>> targets = sigma_targets;
  targets.insert(targets.end(), tau_targets.begin(), tau_targets.end());
  try {
    r.f = merge_rational_solution(ctx, targets, options);
  } catch (const NotCompatible& e) {
    throw StructureViolation("step 3", e.what());
  }

  const auto in_t = block_mask(*ctx, {Block::T, Block::Q});
  for (std::size_t i = 0; i < ctx->l(); ++i) {
    RatFunc b = sys.u[i] - log_quotient(OpRef::delta(i), r.f) - sum_power_terms(r, i);
    if (!b.only_uses(in_t))
      throw StructureViolation("step 4", "beta_" + std::to_string(i + 1) + " is not in F(t)");
    r.beta.push_back(std::move(b));
  }
  return r;
}

Representation standardize(const Representation& r) {
  r.validate();
  Representation s = r;
  auto st = block_split(r.f, SplitBlock::T);
  auto sx = block_split(st.rest, SplitBlock::X);
  auto sy = block_split(sx.rest, SplitBlock::Y);
  s.f = sy.rest;
  for (std::size_t i = 0; i < s.beta.size(); ++i)
    s.beta[i] += log_quotient(OpRef::delta(i), st.pure_part);
  for (std::size_t j = 0; j < s.lambda.size(); ++j) {
    auto [c, monic_alpha] = split_field_constant(s.alpha[j]);
    s.alpha[j] = monic_alpha;
    s.lambda[j] *= log_quotient(OpRef::sigma(j), sx.pure_part) * c;
  }
  for (std::size_t k = 0; k < s.mu.size(); ++k) s.mu[k] *= log_quotient(OpRef::tau(k), sy.pure_part);
  return s;
}

}  // namespace deltacompat
