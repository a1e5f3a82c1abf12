#include "deltacompat/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "deltacompat/error.hpp"

namespace deltacompat {

int compare_monomials(const VarContext& ctx, const Monomial& a, const Monomial& b) {
  for (auto v : ctx.priority()) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

void require_same_context(const MultiPoly& a, const MultiPoly& b) {
  if (!same_context(a.context(), b.context())) throw ContextMismatch();
}

namespace {

void canonicalize(const VarContext& ctx, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(ctx, a.exps, b.exps) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    mpq_class c = terms[i].coef;
    while (j < terms.size() && terms[j].exps == terms[i].exps) {
      c += terms[j].coef;
      ++j;
    }
    if (c != 0) {
      if (out != i) terms[out].exps = std::move(terms[i].exps);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge two sorted term lists: a + sign * b.
std::vector<Term> merge_add(const VarContext& ctx, const std::vector<Term>& a,
                            const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare_monomials(ctx, a[i].exps, b[j].exps);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].exps, subtract ? mpq_class(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].coef - b[j].coef) : mpq_class(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void PolyBuilder::add(Monomial exps, mpq_class coef) {
  if (coef != 0) terms_.push_back({std::move(exps), std::move(coef)});
}

MultiPoly PolyBuilder::build() && {
  MultiPoly p(ctx_);
  canonicalize(*ctx_, terms_);
  p.terms_ = std::move(terms_);
  return p;
}

MultiPoly::MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidVariable("null context");
}

MultiPoly MultiPoly::constant(ContextPtr ctx, const mpq_class& c) {
  Monomial zero(ctx->arity(), 0);
  return monomial(std::move(ctx), std::move(zero), c);
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::size_t var, std::uint32_t exp) {
  if (var >= ctx->arity()) throw InvalidVariable("variable index out of range");
  Monomial m(ctx->arity(), 0);
  m[var] = exp;
  return monomial(std::move(ctx), std::move(m), 1);
}

MultiPoly MultiPoly::monomial(ContextPtr ctx, Monomial exps, const mpq_class& c) {
  MultiPoly p(std::move(ctx));
  if (exps.size() != p.ctx_->arity()) throw InvalidVariable("monomial arity mismatch");
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  PolyBuilder b(std::move(ctx));
  for (auto& t : terms) b.add(std::move(t.exps), std::move(t.coef));
  return std::move(b).build();
}

bool MultiPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

bool MultiPoly::is_one() const { return is_constant() && !is_zero() && terms_[0].coef == 1; }

mpq_class MultiPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  bool unit = std::all_of(last.exps.begin(), last.exps.end(), [](auto e) { return e == 0; });
  return unit ? last.coef : mpq_class(0);
}

const Term& MultiPoly::leading() const {
  if (terms_.empty()) throw ZeroInput("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t MultiPoly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

std::uint32_t MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_[0].exps[var];
  for (const auto& t : terms_) d = std::min(d, t.exps[var]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, std::accumulate(t.exps.begin(), t.exps.end(), std::uint32_t{0}));
  return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exps[var] != 0; });
}

std::vector<bool> MultiPoly::support() const {
  std::vector<bool> s(ctx_->arity(), false);
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < s.size(); ++v)
      if (t.exps[v] != 0) s[v] = true;
  return s;
}

bool MultiPoly::only_uses(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < allowed.size(); ++v)
      if (t.exps[v] != 0 && !allowed[v]) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_context(*this, o);
  if (o.is_zero()) return *this;
  terms_ = merge_add(*ctx_, terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_context(*this, o);
  if (o.is_zero()) return *this;
  terms_ = merge_add(*ctx_, terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a, b);
  MultiPoly r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t arity = a.ctx_->arity();
  if (b.size() == 1) {
    // Monomial factor: order is preserved, no merging needed.
    r.terms_.reserve(a.size());
    for (const auto& t : a.terms_) {
      Term u{t.exps, t.coef * b.terms_[0].coef};
      for (std::size_t v = 0; v < arity; ++v) u.exps[v] += b.terms_[0].exps[v];
      r.terms_.push_back(std::move(u));
    }
    return r;
  }
  if (a.size() == 1) return b * a;

  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Term u{s.exps, s.coef * t.coef};
      for (std::size_t v = 0; v < arity; ++v) u.exps[v] += t.exps[v];
      prod.push_back(std::move(u));
    }
  }
  canonicalize(*a.ctx_, prod);
  r.terms_ = std::move(prod);
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(ctx_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shifted_by(const Monomial& m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t v = 0; v < m.size(); ++v) t.exps[v] += m[v];
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  mpq_class lc = leading_coefficient();
  if (lc == 1) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef /= lc;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_context(ctx_, o.ctx_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

MultiPoly MultiPoly::embed(ContextPtr target) const {
  const std::size_t from = ctx_->arity();
  const std::size_t to = target->arity();
  const std::size_t common = std::min(from, to);
  for (std::size_t v = 0; v < common; ++v)
    if (ctx_->name(v) != target->name(v)) throw ContextMismatch();
  PolyBuilder b(target);
  for (const auto& t : terms_) {
    Monomial m(to, 0);
    for (std::size_t v = 0; v < from; ++v) {
      if (v < to) m[v] = t.exps[v];
      else if (t.exps[v] != 0) throw InvalidVariable("cannot drop a variable that occurs");
    }
    b.add(std::move(m), t.coef);
  }
  return std::move(b).build();
}

}  // namespace deltacompat
