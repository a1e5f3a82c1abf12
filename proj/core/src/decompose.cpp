#include "deltacompat/error.hpp"
#include "deltacompat/expression.hpp"
#include "deltacompat/structure.hpp"
#include "detail.hpp"

namespace deltacompat {

HProduct decompose(const CertificateSystem& sys, const EvalOptions& options) {
  const Representation r = standardize(represent(sys, options));
  HProduct p{r.ctx, r.f, {}, r.beta, r.lambda, r.mu};
  for (std::size_t j = 0; j < r.alpha.size(); ++j)
    if (!r.alpha[j].is_one()) p.powers.emplace_back(r.alpha[j], j);
  return p;
}

std::string render(const HProduct& p) {
  const auto& ctx = *p.ctx;
  std::string out = "(" + to_string(p.rational_part) + ")";
  for (const auto& [base, j] : p.powers) out += " * (" + to_string(base) + ")^" + ctx.name(ctx.x_var(j));
  auto group = [&out](const char* tag, const std::vector<RatFunc>& certs) {
    if (certs.empty()) return;
    out += std::string(" * ") + tag + "[";
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (i) out += ", ";
      out += to_string(certs[i]);
    }
    out += "]";
  };
  group("E", p.e_certs);
  group("G", p.g_certs);
  group("Q", p.q_certs);
  return out;
}

namespace detail {

std::optional<std::array<RatFunc, 3>> rational_parts(const HProduct& p, const EvalOptions& options) {
  const auto& ctx = p.ctx;
  // E: one g in F(t) for all derivations, built one t-variable at a time.
  RatFunc e = RatFunc::constant(ctx, 1);
  std::vector<std::size_t> earlier;
  for (std::size_t i = 0; i < p.e_certs.size(); ++i) {
    RatFunc rho = p.e_certs[i] - log_quotient(OpRef::delta(i), e);
    auto w = is_log_derivative(i, rho);
    if (!w) return std::nullopt;
    RatFunc h = witness_product(ctx, *w);
    if (!earlier.empty() && !h.is_one()) h = proper_evaluate(h, earlier, options);
    e *= h;
    earlier.push_back(ctx->t_var(i));
  }
  for (std::size_t i = 0; i < p.e_certs.size(); ++i)
    if (log_quotient(OpRef::delta(i), e) != p.e_certs[i]) return std::nullopt;
  if (!e.is_one()) e = split_field_constant(e).second;

  std::vector<std::pair<OpRef, RatFunc>> gs, qs;
  for (std::size_t j = 0; j < p.g_certs.size(); ++j) gs.emplace_back(OpRef::sigma(j), p.g_certs[j]);
  for (std::size_t k = 0; k < p.q_certs.size(); ++k) qs.emplace_back(OpRef::tau(k), p.q_certs[k]);
  auto g = solve_certificates(ctx, gs, options);
  if (!g) return std::nullopt;
  auto q = solve_certificates(ctx, qs, options);
  if (!q) return std::nullopt;
  return std::array<RatFunc, 3>{e, *g, *q};
}

}  // namespace detail

std::optional<RatFunc> is_rational_product(const HProduct& p, const EvalOptions& options) {
  for (const auto& [base, j] : p.powers)
    if (!base.is_one()) return std::nullopt;
  auto parts = detail::rational_parts(p, options);
  if (!parts) return std::nullopt;
  return (*parts)[0] * (*parts)[1] * (*parts)[2];
}

}  // namespace deltacompat
