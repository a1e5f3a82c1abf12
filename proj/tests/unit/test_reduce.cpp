#include "printers.hpp"

#include "deltacompat/expression.hpp"
#include "support.hpp"

using namespace dc_test;

namespace {

RatFunc rat(const ContextPtr& c, const std::string& s) { return parse_expression(s, c); }
MultiPoly poly(const ContextPtr& c, const std::string& s) { return rat(c, s).num(); }

}  // namespace

TEST_SUITE("reduce") {
  TEST_CASE("dispersion examples") {
    auto c = make_context(1, 1, 1);
    auto d = dispersion(poly(c, "x*(x+3)"), poly(c, "x*(x+3)"), OpRef::sigma(0));
    CHECK(d.hits == std::vector<long>{0, 3});
    CHECK(d.max == 3);
    d = dispersion(poly(c, "(y-1)*(y-q^2)"), poly(c, "(y-1)*(y-q^2)"), OpRef::tau(0));
    CHECK(d.hits == std::vector<long>{0, 2});
    CHECK(d.max == 2);
    d = dispersion(poly(c, "y^3"), poly(c, "y^3"), OpRef::tau(0));
    CHECK(d.hits.empty());
    CHECK(d.max == 0);
    d = dispersion(poly(c, "(t+x)*(x+y+7)"), poly(c, "x+y"), OpRef::sigma(0));
    CHECK(d.hits == std::vector<long>{7});
    CHECK(moving_gcd(poly(c, "(t+x)*(x+y+7)"), poly(c, "x+y"), OpRef::sigma(0), 7) == poly(c, "x+y+7"));
  }

  TEST_CASE("dispersion agrees with a gcd scan") {
    auto c = make_context(1, 1, 1);
    Rng rng(41);
    const std::vector<std::size_t> vars{c->t_var(0), c->x_var(0), c->y_var(0)};
    for (int k = 0; k < 60; ++k) {
      const OpRef op = k % 2 ? OpRef::tau(0) : OpRef::sigma(0);
      const auto p = random_poly(rng, c, vars, 2, 3, c->q_var(0));
      const auto a = p * random_poly(rng, c, vars, 1, 2, c->q_var(0));
      const auto b = apply_poly(op, p, -rng.uniform(0, 6)) * random_poly(rng, c, vars, 1, 2);
      CHECK(dispersion(a, b, op).hits == brute_dispersion(a, b, op, 50));
    }
  }

  TEST_CASE("reduced decomposition examples") {
    auto c = make_context(1, 1, 1);
    auto rd = reduced_decompose(rat(c, "(x+2)/x"), OpRef::sigma(0));
    CHECK(rd.shell == rat(c, "x*(x+1)"));
    CHECK(rd.core.is_one());
    rd = reduced_decompose(rat(c, "x+1"), OpRef::sigma(0));
    CHECK(rd.shell.is_one());
    CHECK(rd.core == rat(c, "x+1"));
    rd = reduced_decompose(rat(c, "q"), OpRef::tau(0));
    CHECK(rd.shell.is_one());
    CHECK(rd.core == rat(c, "q"));
  }

  TEST_CASE("reduced decomposition contract") {
    auto c = make_context(1, 1, 1);
    Rng rng(42);
    const std::vector<std::size_t> vars{c->t_var(0), c->x_var(0), c->y_var(0)};
    for (int k = 0; k < 80; ++k) {
      const OpRef op = k % 2 ? OpRef::tau(0) : OpRef::sigma(0);
      const auto p = random_poly(rng, c, vars, 2, 2, c->q_var(0));
      const RatFunc f(p * random_poly(rng, c, vars, 1, 2), apply_poly(op, p, rng.uniform(-4, 4)));
      const auto rd = reduced_decompose(f, op);
      CHECK(quotient_by_substitution(op, rd.shell) * rd.core == f);
      CHECK(coprime_scan(rd.core, op, 25));
      const auto sd = reduced_decompose(f, op, ReduceMode::Standard);
      CHECK(quotient_by_substitution(op, sd.shell) * sd.core == f);
      CHECK(dispersion(sd.core.num() * sd.core.den(), sd.core.num() * sd.core.den(), op).max == 0);
    }
  }

  TEST_CASE("solve quotient") {
    auto c = make_context(1, 1, 1);
    auto z = solve_quotient(OpRef::sigma(0), rat(c, "(x+1)/x"), {});
    REQUIRE(z);
    CHECK(*z == rat(c, "x"));
    CHECK(!solve_quotient(OpRef::sigma(0), rat(c, "x+1"), {}));
    z = solve_quotient(OpRef::tau(0), rat(c, "q"), {});
    REQUIRE(z);
    CHECK(*z == rat(c, "y"));

    Rng rng(43);
    const std::vector<std::size_t> vars{c->t_var(0), c->x_var(0), c->y_var(0)};
    for (int k = 0; k < 40; ++k) {
      const OpRef op = k % 2 ? OpRef::tau(0) : OpRef::sigma(0);
      auto g = random_ratfunc(rng, c, {c->x_var(0), c->y_var(0)}, 2, 2, c->q_var(0));
      if (g.is_zero()) continue;
      g *= RatFunc(random_poly(rng, c, {c->t_var(0)}, 2, 2));
      const auto r = quotient_by_substitution(op, g);
      const auto sol = solve_quotient(op, r, {c->t_var(0)});
      REQUIRE(sol);
      CHECK(quotient_by_substitution(op, *sol) == r);
      CHECK(!sol->depends_on(c->t_var(0)));
    }
  }

  TEST_CASE("log derivative test") {
    auto c = VarContext::make({"t"}, {"x"}, {}, {});
    auto w = is_log_derivative(0, rat(c, "1/t"));
    REQUIRE(w);
    CHECK(witness_product(c, *w) == rat(c, "t"));
    CHECK(!is_log_derivative(0, rat(c, "1")));
    CHECK(!is_log_derivative(0, rat(c, "1/(2*t)")));
    w = is_log_derivative(0, rat(c, "(3*t^2-2)/(t^3-2*t)"));
    REQUIRE(w);
    CHECK(quotient_by_substitution(OpRef::delta(0), witness_product(c, *w)) == rat(c, "(3*t^2-2)/(t^3-2*t)"));
    w = is_log_derivative(0, rat(c, "-2/(t+1) + 1/t"));
    REQUIRE(w);
    CHECK(witness_product(c, *w) == rat(c, "t/(t+1)^2"));
  }

  TEST_CASE("merge rational solution") {
    auto c = make_context(1, 1, 1);
    const auto one = std::vector<std::pair<OpRef, RatFunc>>{{OpRef::sigma(0), rat(c, "x")}};
    CHECK(merge_rational_solution(c, one) == rat(c, "x"));
    const std::vector<std::pair<OpRef, RatFunc>> two{{OpRef::sigma(0), rat(c, "t+x")},
                                                     {OpRef::tau(0), rat(c, "2*t+y^2")}};
    const auto f = merge_rational_solution(c, two);
    CHECK(log_quotient(OpRef::sigma(0), f) == log_quotient(OpRef::sigma(0), rat(c, "t+x")));
    CHECK(log_quotient(OpRef::tau(0), f) == log_quotient(OpRef::tau(0), rat(c, "2*t+y^2")));
    CHECK(merge_rational_solution(c, {}).is_one());
  }
}
