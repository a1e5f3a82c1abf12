#include "deltacompat/ratfunc.hpp"

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"

namespace deltacompat {

RatFunc::RatFunc(ContextPtr ctx) : num_(ctx), den_(MultiPoly::constant(ctx, 1)) {}

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.context(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_context(num_, den_);
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.context(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  normalize_scalar();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = MultiPoly::constant(num_.context(), 1);
  normalize_scalar();
}

void RatFunc::normalize_scalar() {
  const mpq_class lc = den_.leading_coefficient();
  if (lc == 1) return;
  mpq_class inv = 1 / lc;
  num_ *= inv;
  den_ *= inv;
}

RatFunc RatFunc::constant(ContextPtr ctx, const mpq_class& c) {
  return RatFunc(MultiPoly::constant(std::move(ctx), c));
}

RatFunc RatFunc::variable(ContextPtr ctx, std::size_t var) {
  return RatFunc(MultiPoly::variable(std::move(ctx), var));
}

bool RatFunc::is_one() const { return num_.is_one() && den_.is_one(); }

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw InvalidVariable("rational function is not a constant");
  return num_.is_zero() ? mpq_class(0) : mpq_class(num_.leading_coefficient());
}

std::vector<bool> RatFunc::support() const {
  auto s = num_.support();
  auto d = den_.support();
  for (std::size_t v = 0; v < s.size(); ++v) s[v] = s[v] || d[v];
  return s;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  require_same_context(num_, o.num_);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    *this = RatFunc(num_ + o.num_, den_, Reduced{});
    return *this;
  }
  MultiPoly g = poly_gcd(den_, o.den_);
  MultiPoly b1 = g.is_one() ? den_ : divide_exact(den_, g);
  MultiPoly d1 = g.is_one() ? o.den_ : divide_exact(o.den_, g);
  MultiPoly n = num_ * d1 + o.num_ * b1;
  MultiPoly d = b1 * o.den_;
  if (n.is_zero()) return *this = RatFunc(context());
  if (!g.is_one()) {
    MultiPoly g2 = poly_gcd(n, g);
    if (!g2.is_one()) {
      n = divide_exact(n, g2);
      d = divide_exact(d, g2);
    }
  }
  return *this = RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  require_same_context(num_, o.num_);
  if (is_zero() || o.is_zero()) return *this = RatFunc(context());
  MultiPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    MultiPoly g = poly_gcd(a, d);
    if (!g.is_one()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!b.is_constant()) {
    MultiPoly g = poly_gcd(c, b);
    if (!g.is_one()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  return *this = RatFunc(a * c, b * d, Reduced{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_, Reduced{});
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  auto ue = static_cast<std::uint32_t>(e);
  return RatFunc(num_.pow(ue), den_.pow(ue), Reduced{});
}

RatFunc RatFunc::embed(ContextPtr target) const {
  MultiPoly n = num_.embed(target);
  MultiPoly d = den_.embed(std::move(target));
  // Priority may differ in the target, so recompute the normalization.
  return RatFunc(std::move(n), std::move(d), Reduced{});
}

std::vector<bool> block_mask(const VarContext& ctx, std::initializer_list<Block> blocks) {
  std::vector<bool> mask(ctx.arity(), false);
  for (std::size_t v = 0; v < ctx.arity(); ++v)
    for (auto b : blocks)
      if (ctx.block(v) == b) mask[v] = true;
  return mask;
}

bool in_field(const RatFunc& f) { return f.only_uses(block_mask(*f.context(), {Block::Q})); }

std::pair<RatFunc, RatFunc> split_field_constant(const RatFunc& f) {
  if (f.is_zero()) throw ZeroInput("field constant of zero");
  MultiPoly ln = field_leading_coefficient(f.num());
  MultiPoly ld = field_leading_coefficient(f.den());
  RatFunc c(ln, ld);
  return {c, f / c};
}

namespace {

// sum_i c_i a^i b^(D-i) where c_i are the coefficients of p in var.
MultiPoly homogenized(const MultiPoly& p, std::size_t var, const MultiPoly& a, const MultiPoly& b,
                      std::uint32_t D) {
  auto cs = coefficients(p, var);
  std::vector<MultiPoly> apow{MultiPoly::constant(p.context(), 1)};
  std::vector<MultiPoly> bpow{MultiPoly::constant(p.context(), 1)};
  for (std::uint32_t i = 1; i <= D; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  MultiPoly out(p.context());
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) out += cs[i] * apow[i] * bpow[D - i];
  return out;
}

}  // namespace

RatFunc substitute(const RatFunc& f, std::size_t var, const RatFunc& value) {
  require_same_context(f.num(), value.num());
  if (!f.depends_on(var)) return f;
  if (value.is_polynomial()) {
    MultiPoly d = substitute(f.den(), var, value.num());
    if (d.is_zero()) throw EvaluationSingular("denominator vanishes under substitution");
    return RatFunc(substitute(f.num(), var, value.num()), d);
  }
  const std::uint32_t D = std::max(f.num().degree(var), f.den().degree(var));
  MultiPoly d = homogenized(f.den(), var, value.num(), value.den(), D);
  if (d.is_zero()) throw EvaluationSingular("denominator vanishes under substitution");
  return RatFunc(homogenized(f.num(), var, value.num(), value.den(), D), d);
}

}  // namespace deltacompat
