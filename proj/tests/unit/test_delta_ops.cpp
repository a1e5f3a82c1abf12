#include "printers.hpp"

#include "deltacompat/error.hpp"
#include "deltacompat/expression.hpp"
#include "deltacompat/polyalg.hpp"
#include "support.hpp"

using namespace dc_test;

namespace {

ContextPtr ctx() { return make_context(2, 2, 2); }

RatFunc rat(const ContextPtr& c, const std::string& s) { return parse_expression(s, c); }

std::vector<OpRef> all_ops(const ContextPtr& c) {
  std::vector<OpRef> ops;
  for (std::size_t i = 0; i < c->l(); ++i) ops.push_back(OpRef::delta(i));
  for (std::size_t j = 0; j < c->m(); ++j) ops.push_back(OpRef::sigma(j));
  for (std::size_t k = 0; k < c->n(); ++k) ops.push_back(OpRef::tau(k));
  return ops;
}

std::vector<std::size_t> movers(const ContextPtr& c) {
  auto v = c->block_vars(Block::T);
  for (auto b : {Block::X, Block::Y})
    for (auto x : c->block_vars(b)) v.push_back(x);
  return v;
}

}  // namespace

TEST_SUITE("delta_ops") {
  TEST_CASE("apply examples") {
    auto c = make_context(1, 1, 1);
    CHECK(apply(OpRef::sigma(0), rat(c, "x^2")) == rat(c, "x^2+2*x+1"));
    CHECK(apply(OpRef::tau(0), rat(c, "y^2+t"), 2) == rat(c, "q^4*y^2+t"));
    CHECK(apply(OpRef::delta(0), rat(c, "t*x")) == rat(c, "x"));
    CHECK(apply(OpRef::sigma(0), rat(c, "1/x"), -3) == rat(c, "1/(x-3)"));
    CHECK_THROWS(apply(OpRef::delta(0), rat(c, "t"), 2));
  }

  TEST_CASE("log quotient examples") {
    auto c = make_context(1, 1, 1);
    CHECK(log_quotient(OpRef::delta(0), rat(c, "t^2")) == rat(c, "2/t"));
    CHECK(log_quotient(OpRef::sigma(0), rat(c, "x")) == rat(c, "(x+1)/x"));
    CHECK(log_quotient(OpRef::tau(0), rat(c, "y")) == rat(c, "q"));
    CHECK_THROWS_AS(log_quotient(OpRef::sigma(0), RatFunc(c)), ZeroInput);
  }

  TEST_CASE("operators commute") {
    auto c = ctx();
    Rng rng(21);
    const auto ops = all_ops(c);
    for (int k = 0; k < 300; ++k) {
      const auto f = random_ratfunc(rng, c, movers(c), 2, 3, c->q_var(0));
      const auto a = rng.pick(ops), b = rng.pick(ops);
      CHECK(apply(a, apply(b, f)) == apply(b, apply(a, f)));
    }
  }

  TEST_CASE("shifts are invertible") {
    auto c = ctx();
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
      const auto f = random_ratfunc(rng, c, movers(c), 2, 3, c->q_var(1));
      for (auto op : {OpRef::sigma(k % 2), OpRef::tau(k % 2)}) {
        const long p = rng.uniform(-3, 3);
        CHECK(apply(op, apply(op, f, p), -p) == f);
      }
    }
  }

  TEST_CASE("log quotients match substitution and are logarithmic") {
    auto c = ctx();
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
      const auto r = random_ratfunc(rng, c, movers(c), 2, 3, c->q_var(0));
      const auto s = random_ratfunc(rng, c, movers(c), 2, 3, c->q_var(1));
      if (r.is_zero() || s.is_zero()) continue;
      const auto op = rng.pick(all_ops(c));
      CHECK(log_quotient(op, r) == quotient_by_substitution(op, r));
      if (op.kind == OpRef::Kind::Delta)
        CHECK(log_quotient(op, r * s) == log_quotient(op, r) + log_quotient(op, s));
      else
        CHECK(log_quotient(op, r * s) == log_quotient(op, r) * log_quotient(op, s));
    }
  }

  TEST_CASE("log derivatives have no polynomial part beyond degree zero") {
    auto c = ctx();
    Rng rng(24);
    for (int k = 0; k < 100; ++k) {
      const auto f = random_ratfunc(rng, c, movers(c), 3, 3, c->q_var(0));
      if (f.is_zero()) continue;
      const std::size_t i = static_cast<std::size_t>(k) % 2;
      const auto g = log_quotient(OpRef::delta(i), f);
      if (g.is_zero()) continue;
      for (auto z : movers(c)) {
        const auto dn = g.num().degree(z), dd = g.den().degree(z);
        CHECK(dn <= dd);
      }
    }
  }

  TEST_CASE("proper evaluation") {
    auto c = make_context(1, 1, 1);
    const auto x = c->x_var(0), y = c->y_var(0), t = c->t_var(0);
    CHECK(evaluate_at(rat(c, "(t+x)/(5*x+y)"), {x, y}, {1, 1}) == rat(c, "(t+1)/6"));
    const auto g = proper_evaluate(rat(c, "1/(x-1)"), {x});
    CHECK(g == RatFunc::constant(c, mpq_class(-1, 2)));
    const auto f = rat(c, "(t+x)/(5*x+y)");
    const auto e = proper_evaluate(f, {x, y});
    CHECK(!e.is_zero());
    CHECK(!e.depends_on(x));
    CHECK(!e.depends_on(y));
    CHECK(proper_evaluate(rat(c, "t^2+q"), {x, y}) == rat(c, "t^2+q"));
    CHECK(proper_evaluate(f, {x, y}) == e);
    EvalOptions tight{1, 1};
    CHECK_THROWS_AS(proper_evaluate(rat(c, "x-1"), {x}, tight), RetryBudgetExhausted);
    (void)t;
  }
}
