#include "deltacompat/compat.hpp"

#include <algorithm>

#include "deltacompat/error.hpp"

namespace deltacompat {

void CertificateSystem::validate() const {
  if (!ctx) throw InvalidVariable("certificate system without a context");
  if (u.size() != ctx->l() || v.size() != ctx->m() || w.size() != ctx->n())
    throw InvalidVariable("certificate counts do not match the declared variable blocks");
  for (const auto* list : {&u, &v, &w})
    for (const auto& f : *list)
      if (!same_context(f.context(), ctx)) throw ContextMismatch();
}

CertificateSystem CertificateSystem::trivial(ContextPtr ctx) {
  CertificateSystem s{ctx, {}, {}, {}};
  s.u.assign(ctx->l(), RatFunc(ctx));
  s.v.assign(ctx->m(), RatFunc::constant(ctx, 1));
  s.w.assign(ctx->n(), RatFunc::constant(ctx, 1));
  return s;
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::NONZERO: return "NONZERO";
    case Condition::DD: return "DD";
    case Condition::SS: return "SS";
    case Condition::QQ: return "QQ";
    case Condition::DS: return "DS";
    case Condition::DQ: return "DQ";
    case Condition::SQ: return "SQ";
  }
  return "?";
}

namespace {

RatFunc ratio_minus_one(const RatFunc& lhs, const RatFunc& rhs) {
  return lhs / rhs - RatFunc::constant(lhs.context(), 1);
}

}  // namespace

CompatReport check(const CertificateSystem& sys) {
  sys.validate();
  const auto& ctx = sys.ctx;
  const std::size_t l = ctx->l(), m = ctx->m(), n = ctx->n();
  CompatReport report;
  auto record = [&](Condition c, std::size_t i, std::size_t j, RatFunc residual) {
    if (!residual.is_zero()) report.violations.push_back({c, i, j, std::move(residual)});
  };

  std::vector<bool> v_zero(m), w_zero(n);
  for (std::size_t j = 0; j < m; ++j) {
    v_zero[j] = sys.v[j].is_zero();
    if (v_zero[j])
      report.violations.push_back({Condition::NONZERO, j, j, RatFunc::constant(ctx, 1), OpRef::Kind::Sigma});
  }
  for (std::size_t k = 0; k < n; ++k) {
    w_zero[k] = sys.w[k].is_zero();
    if (w_zero[k])
      report.violations.push_back({Condition::NONZERO, k, k, RatFunc::constant(ctx, 1), OpRef::Kind::Tau});
  }

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      record(Condition::DD, i, j,
             apply(OpRef::delta(i), sys.u[j]) - apply(OpRef::delta(j), sys.u[i]));

  // Quotients phi(v)/v are reused by several families.
  std::vector<std::vector<RatFunc>> sigma_of_v(m), tau_of_v(m), sigma_of_w(n), tau_of_w(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (v_zero[i]) continue;
    for (std::size_t j = 0; j < m; ++j) sigma_of_v[i].push_back(log_quotient(OpRef::sigma(j), sys.v[i]));
    for (std::size_t k = 0; k < n; ++k) tau_of_v[i].push_back(log_quotient(OpRef::tau(k), sys.v[i]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (w_zero[k]) continue;
    for (std::size_t j = 0; j < m; ++j) sigma_of_w[k].push_back(log_quotient(OpRef::sigma(j), sys.w[k]));
    for (std::size_t h = 0; h < n; ++h) tau_of_w[k].push_back(log_quotient(OpRef::tau(h), sys.w[k]));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!v_zero[i] && !v_zero[j])
        record(Condition::SS, i, j, ratio_minus_one(sigma_of_v[j][i], sigma_of_v[i][j]));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!w_zero[i] && !w_zero[j])
        record(Condition::QQ, i, j, ratio_minus_one(tau_of_w[j][i], tau_of_w[i][j]));

  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (v_zero[j]) continue;
      record(Condition::DS, i, j,
             log_quotient(OpRef::delta(i), sys.v[j]) - (apply(OpRef::sigma(j), sys.u[i]) - sys.u[i]));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (w_zero[k]) continue;
      record(Condition::DQ, i, k,
             log_quotient(OpRef::delta(i), sys.w[k]) - (apply(OpRef::tau(k), sys.u[i]) - sys.u[i]));
    }
  }

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!v_zero[j] && !w_zero[k])
        record(Condition::SQ, j, k, ratio_minus_one(sigma_of_w[k][j], tau_of_v[j][k]));

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.condition != b.condition) return a.condition < b.condition;
                     if (a.zero_kind != b.zero_kind) return a.zero_kind < b.zero_kind;
                     if (a.i != b.i) return a.i < b.i;
                     return a.j < b.j;
                   });
  report.ok = report.violations.empty();
  return report;
}

}  // namespace deltacompat
