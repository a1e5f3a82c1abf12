#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "deltacompat/cli.hpp"
#include "deltacompat/error.hpp"
#include "deltacompat/expression.hpp"
#include "deltacompat/polyalg.hpp"
#include "support.hpp"

using namespace dc_test;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RatFunc P(const ContextPtr& ctx, const std::string& s) { return parse_expression(s, ctx); }

// ---- 1 ----

ContextPtr example_context() { return VarContext::make({"t"}, {"x"}, {"y"}, {"q"}); }

CertificateSystem example_system(const ContextPtr& ctx) {
  return {ctx,
          {P(ctx, "((4*t+2*x+y^2)*(t+1) + (t+x+1)*(t+x)*(2*t+y^2))/((t+1)*(t+x)*(2*t+y^2))")},
          {P(ctx, "2*(2*x+3)*(x+1)*(t+1)*(t+x+1)*(5*x+y)/((5*x+y+5)*(t+x))")},
          {P(ctx, "(5*x+y)*(2*t+q^2*y^2)*(1+q*y)/((5*x+q*y)*(2*t+y^2))")}};
}

std::vector<Representation> produced;  // representations from criteria 1 and 2
bool example_done = false;

Outcome example_five() {
  const auto ctx = example_context();
  const auto start = Clock::now();
  const auto sys = example_system(ctx);
  const auto rep = standardize(represent(sys));
  const auto prod = decompose(sys);
  const double took = seconds_since(start);

  const auto f = P(ctx, "(2*t+y^2)*(t+x)/(5*x+y)");
  const auto alpha = P(ctx, "t+1");
  const auto beta = P(ctx, "1");
  const auto lambda = P(ctx, "2*(2*x+3)*(x+1)");
  const auto mu = P(ctx, "q*y+1");
  std::string bad;
  if (rep.f != f) bad += " f";
  if (rep.alpha != std::vector{alpha}) bad += " alpha";
  if (rep.beta != std::vector{beta}) bad += " beta";
  if (rep.lambda != std::vector{lambda}) bad += " lambda";
  if (rep.mu != std::vector{mu}) bad += " mu";
  if (prod.rational_part != f) bad += " rational_part";
  if (prod.powers.size() != 1 || prod.powers[0].first != alpha || prod.powers[0].second != 0) bad += " powers";
  if (prod.e_certs != std::vector{beta} || prod.g_certs != std::vector{lambda} || prod.q_certs != std::vector{mu})
    bad += " certs";
  if (took >= 5.0) bad += " slow";
  produced.push_back(rep);
  example_done = true;
  std::ostringstream d;
  d << "Example 5 represent/decompose in " << took << " s";
  if (!bad.empty()) d << ", mismatched:" << bad;
  return {bad.empty(), d.str()};
}

// ---- 2, 3, 4 ----

struct Instance {
  std::uint64_t seed;
  ContextPtr ctx;
  Representation seed_rep;
};

std::vector<Instance> round_trip_instances() {
  std::vector<std::array<std::size_t, 3>> shapes;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      for (std::size_t n = 0; n < 3; ++n)
        if (l + m + n > 0) shapes.push_back({l, m, n});
  std::vector<Instance> out;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto& [l, m, n] = shapes[s % shapes.size()];
    const auto ctx = make_context(l, m, n);
    Rng rng(1000 + s);
    out.push_back({s, ctx, random_representation(rng, ctx)});
  }
  return out;
}

std::string shape(const ContextPtr& ctx) {
  return "(" + std::to_string(ctx->l()) + "," + std::to_string(ctx->m()) + "," + std::to_string(ctx->n()) + ")";
}

bool round_trip_done = false;

Outcome round_trip() {
  const auto start = Clock::now();
  int failures = 0;
  std::string first;
  for (const auto& inst : round_trip_instances()) {
    std::string why;
    try {
      const auto sys = build_system(inst.seed_rep);
      if (!check(sys).ok) why = "check failed";
      else {
        const auto rep = standardize(represent(sys));
        produced.push_back(rep);
        if (rep != standardize(inst.seed_rep)) why = "representation differs";
      }
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!why.empty()) {
      ++failures;
      if (first.empty()) first = "seed " + std::to_string(inst.seed) + " " + shape(inst.ctx) + ": " + why;
    }
  }
  round_trip_done = true;
  const double took = seconds_since(start);
  std::ostringstream d;
  d << "round trip on 200 seeds, " << failures << " failures, " << took << " s";
  if (!first.empty()) d << "; first: " << first;
  return {failures == 0 && took < 600, d.str()};
}

Outcome falsification() {
  int tested = 0, false_passes = 0, exhausted = 0;
  std::string first;
  for (const auto& inst : round_trip_instances()) {
    const auto& ctx = inst.ctx;
    if (ctx->l() + ctx->m() + ctx->n() < 2) continue;
    const auto sys = build_system(inst.seed_rep);
    Rng rng(5000 + inst.seed);
    const auto all = [&] {
      std::vector<std::size_t> v(ctx->l() + ctx->m() + 2 * ctx->n());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
      return v;
    }();
    bool settled = false;
    for (int draw = 0; draw < 20 && !settled; ++draw) {
      auto bent = sys;
      const long which = rng.uniform(0, static_cast<long>(ctx->l() + ctx->m() + ctx->n()) - 1);
      RatFunc p(random_poly(rng, ctx, all, 2, 3));
      if (rng.chance(1, 2)) p /= RatFunc(random_poly(rng, ctx, all, 2, 2));
      if (p.is_constant()) continue;
      auto idx = static_cast<std::size_t>(which);
      if (idx < ctx->l()) bent.u[idx] *= p;
      else if ((idx -= ctx->l()) < ctx->m()) bent.v[idx] *= p;
      else bent.w[idx - ctx->m()] *= p;
      if (pointwise_compatible(bent, rng)) continue;
      settled = true;
      ++tested;
      if (check(bent).ok) {
        ++false_passes;
        if (first.empty()) first = "seed " + std::to_string(inst.seed);
      }
    }
    if (!settled) ++exhausted;
  }
  std::ostringstream d;
  d << tested << " perturbed systems, " << false_passes << " false passes";
  if (exhausted) d << ", " << exhausted << " instances without a breaking perturbation";
  if (!first.empty()) d << "; first: " << first;
  return {false_passes == 0 && exhausted == 0, d.str()};
}

Outcome residual() {
  if (!example_done) example_five();
  if (!round_trip_done) round_trip();
  int failures = 0;
  Rng rng(77);
  for (const auto& rep : produced) {
    const auto sys = residual_system(rep);
    if (!check(sys).ok || !pointwise_compatible(sys, rng)) ++failures;
  }
  return {failures == 0,
          std::to_string(produced.size()) + " residual systems, " + std::to_string(failures) + " not compatible"};
}

// ---- 5 ----

MultiPoly planted_factor(Rng& rng, const ContextPtr& ctx, OpRef op) {
  const std::size_t t = ctx->t_var(0), x = ctx->x_var(0), y = ctx->y_var(0), q = ctx->q_var(0);
  const std::size_t v = op.variable(*ctx);
  const std::vector<std::size_t> others = op.kind == OpRef::Kind::Sigma ? std::vector{t, y} : std::vector{t, x};
  MultiPoly V = MultiPoly::variable(ctx, v);
  switch (rng.uniform(0, 4)) {
    case 0:
      return MultiPoly::variable(ctx, t) + MultiPoly::constant(ctx, rng.uniform(-9, 9));
    case 1:
      return V * MultiPoly::variable(ctx, v, static_cast<std::uint32_t>(rng.uniform(0, 1))) +
             MultiPoly::constant(ctx, rng.nonzero(-9, 9));
    case 2:
      return V * V + V * mpq_class(rng.uniform(-5, 5)) + random_poly(rng, ctx, others, 1, 2, q, false);
    default: {
      MultiPoly lead = MultiPoly::constant(ctx, rng.pick(std::vector<long>{1, 2, -1, 3}));
      if (op.kind == OpRef::Kind::Tau && rng.chance(1, 3)) lead *= MultiPoly::variable(ctx, q);
      return lead * V + random_poly(rng, ctx, others, 1, 2, q, false);
    }
  }
}

Outcome dispersion_oracle() {
  const auto ctx = make_context(1, 1, 1);
  int mismatches = 0, cases = 0;
  std::string first;
  for (OpRef op : {OpRef::sigma(0), OpRef::tau(0)}) {
    const long reach = op.kind == OpRef::Kind::Sigma ? 30 : 8;
    for (int c = 0; c < 200; ++c) {
      Rng rng(9000 + static_cast<std::uint64_t>(c) + (op.kind == OpRef::Kind::Tau ? 100000 : 0));
      MultiPoly a = MultiPoly::constant(ctx, 1), b = MultiPoly::constant(ctx, 1);
      const long na = rng.uniform(1, 3);
      for (long k = 0; k < na; ++k) {
        const MultiPoly p = planted_factor(rng, ctx, op);
        a *= p;
        if (rng.chance(2, 3)) b *= apply_poly(op, p, -rng.uniform(0, reach));
      }
      if (rng.chance(1, 2) || b.is_constant()) b *= planted_factor(rng, ctx, op);
      ++cases;
      const auto fast = dispersion(a, b, op).hits;
      const auto slow = brute_dispersion(a, b, op, 50);
      if (fast != slow) {
        ++mismatches;
        if (first.empty()) first = op.label() + " a=" + to_string(a) + " b=" + to_string(b);
      }
    }
  }
  std::ostringstream d;
  d << cases << " planted cases, " << mismatches << " mismatches";
  if (!first.empty()) d << "; first: " << first;
  return {mismatches == 0, d.str()};
}

// ---- 6 ----

Outcome reduction_contract() {
  const auto ctx = make_context(1, 1, 1);
  const std::vector<std::size_t> all{ctx->t_var(0), ctx->x_var(0), ctx->y_var(0)};
  const std::size_t q = ctx->q_var(0);
  int failures = 0, cases = 0;
  std::string first;
  for (OpRef op : {OpRef::sigma(0), OpRef::tau(0)}) {
    const long reach = op.kind == OpRef::Kind::Sigma ? 5 : 3;
    for (int c = 0; c < 500; ++c) {
      Rng rng(20000 + static_cast<std::uint64_t>(c) + (op.kind == OpRef::Kind::Tau ? 100000 : 0));
      std::vector<MultiPoly> bases;
      const long nb = rng.uniform(1, 3);
      for (long k = 0; k < nb; ++k) bases.push_back(random_poly(rng, ctx, all, 2, 3, q));
      MultiPoly num = MultiPoly::constant(ctx, rng.nonzero(-9, 9)), den = MultiPoly::constant(ctx, 1);
      for (auto* side : {&num, &den}) {
        const long picks = rng.uniform(0, 3);
        for (long k = 0; k < picks; ++k) *side *= apply_poly(op, rng.pick(bases), rng.uniform(-reach, reach));
      }
      const RatFunc f(num, den);
      ++cases;
      std::string why;
      try {
        const auto rd = reduced_decompose(f, op);
        if (quotient_by_substitution(op, rd.shell) * rd.core != f) why = "reconstruction";
        else if (!coprime_scan(rd.core, op, 25)) why = "coprimality";
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (!why.empty()) {
        ++failures;
        if (first.empty()) first = op.label() + " " + why + " f=" + to_string(f);
      }
    }
  }
  std::ostringstream d;
  d << cases << " rational functions, " << failures << " failures";
  if (!first.empty()) d << "; first: " << first;
  return {failures == 0, d.str()};
}

// ---- 7 ----

CertificateSystem combine(const std::vector<CertificateSystem>& systems, const std::vector<long>& omega) {
  auto out = CertificateSystem::trivial(systems.front().ctx);
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto w = RatFunc::constant(out.ctx, omega[s]);
    for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] += w * systems[s].u[i];
    for (std::size_t j = 0; j < out.v.size(); ++j) out.v[j] *= systems[s].v[j].pow(omega[s]);
    for (std::size_t k = 0; k < out.w.size(); ++k) out.w[k] *= systems[s].w[k].pow(omega[s]);
  }
  return out;
}

// The rational function solves the combined system and the parts multiply back.
bool witness_holds(const std::vector<CertificateSystem>& systems, const DependenceWitness& w) {
  std::vector<long> omega;
  for (const auto& c : w.omega) omega.push_back(c.get_si());
  const auto ctx = systems.front().ctx;
  const auto comb = combine(systems, omega);
  for (const auto& p : w.power_products)
    if (!p.is_one()) return false;
  if (w.rational.is_zero()) return false;
  for (std::size_t i = 0; i < ctx->l(); ++i)
    if (quotient_by_substitution(OpRef::delta(i), w.rational) != comb.u[i]) return false;
  for (std::size_t j = 0; j < ctx->m(); ++j)
    if (quotient_by_substitution(OpRef::sigma(j), w.rational) != comb.v[j]) return false;
  for (std::size_t k = 0; k < ctx->n(); ++k)
    if (quotient_by_substitution(OpRef::tau(k), w.rational) != comb.w[k]) return false;

  std::vector<HProduct> parts;
  for (const auto& s : systems) parts.push_back(decompose(s));
  RatFunc f = RatFunc::constant(ctx, 1);
  for (std::size_t s = 0; s < parts.size(); ++s) f *= parts[s].rational_part.pow(omega[s]);
  if (f * w.e_witness * w.g_witness * w.q_witness != w.rational) return false;
  for (std::size_t i = 0; i < ctx->l(); ++i) {
    RatFunc e(ctx);
    for (std::size_t s = 0; s < parts.size(); ++s) e += RatFunc::constant(ctx, omega[s]) * parts[s].e_certs[i];
    if (quotient_by_substitution(OpRef::delta(i), w.e_witness) != e) return false;
  }
  for (std::size_t j = 0; j < ctx->m(); ++j) {
    RatFunc g = RatFunc::constant(ctx, 1);
    for (std::size_t s = 0; s < parts.size(); ++s) g *= parts[s].g_certs[j].pow(omega[s]);
    if (quotient_by_substitution(OpRef::sigma(j), w.g_witness) != g) return false;
  }
  for (std::size_t k = 0; k < ctx->n(); ++k) {
    RatFunc g = RatFunc::constant(ctx, 1);
    for (std::size_t s = 0; s < parts.size(); ++s) g *= parts[s].q_certs[k].pow(omega[s]);
    if (quotient_by_substitution(OpRef::tau(k), w.q_witness) != g) return false;
  }
  return true;
}

bool proportional(const IntVector& omega, long a, long b) {
  return omega.size() == 2 && omega[0] * b == omega[1] * a && (omega[0] != 0 || omega[1] != 0);
}

Outcome dependence_suite() {
  const auto ctx = VarContext::make({"t"}, {"x"}, {}, {});
  auto sys = [&](const std::string& u, const std::string& v) {
    return CertificateSystem{ctx, {P(ctx, u)}, {P(ctx, v)}, {}};
  };
  const auto fact = sys("0", "x+1");
  const auto fact2 = sys("0", "(x+1)^2");
  const auto expt = sys("1", "1");
  const auto pw = sys("x/(t+1)", "t+1");
  const auto pw2 = sys("2*x/(t+1)", "(t+1)^2");

  std::string bad;
  for (const auto& [name, pair, a, b] :
       std::vector<std::tuple<std::string, std::vector<CertificateSystem>, long, long>>{
           {"factorial", {fact, fact2}, 2, -1}, {"power", {pw, pw2}, 2, -1}}) {
    const auto w = algebraic_dependence(pair);
    if (!w) bad += " " + name + ":independent";
    else if (!proportional(w->omega, a, b)) bad += " " + name + ":omega";
    else if (!witness_holds(pair, *w)) bad += " " + name + ":witness";
  }

  const std::vector<CertificateSystem> mixed{fact, expt};
  if (algebraic_dependence(mixed)) bad += " mixed:dependent";
  int rational_hits = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      if (is_rational_product(decompose(combine(mixed, {a, b})))) ++rational_hits;
    }
  if (rational_hits) bad += " mixed:scan found " + std::to_string(rational_hits);
  return {bad.empty(), bad.empty() ? "factorial and power pairs dependent (2, -1), x! and exp(t) independent over [-3, 3]^2"
                                   : "failed:" + bad};
}

// ---- 8 ----

Outcome log_derivative_set() {
  const auto ctx = VarContext::make({"t"}, {}, {}, {});
  const std::vector<std::pair<std::string, bool>> table{
      {"1/t", true}, {"2/t", true}, {"1/(2*t)", false}, {"1", false}, {"t", false}, {"1/t + 1/(t+1)", true}};
  std::string bad;
  for (const auto& [text, expected] : table) {
    const auto beta = P(ctx, text);
    const auto w = is_log_derivative(0, beta);
    if (w.has_value() != expected) bad += " " + text;
    else if (w && quotient_by_substitution(OpRef::delta(0), witness_product(ctx, *w)) != beta)
      bad += " " + text + "(witness)";
  }
  return {bad.empty(), bad.empty() ? "6 of 6 classified, witnesses verified" : "wrong:" + bad};
}

// ---- 9 ----

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  std::string command;
  std::string fixture;
  bool json;
  int status;
};

Outcome cli_golden() {
  const std::string dir = DC_FIXTURE_DIR;
  const std::vector<Golden> cases{
      {"check", "example5", false, 0},      {"check", "example5", true, 0},
      {"represent", "example5", false, 0},  {"represent", "example5", true, 0},
      {"decompose", "example5", false, 0},  {"decompose", "example5", true, 0},
      {"rational", "example5", false, 0},   {"rational", "example5", true, 0},
      {"rational", "rational", false, 0},   {"rational", "rational", true, 0},
      {"check", "incompatible", false, 3},  {"check", "incompatible", true, 3},
      {"depend", "factorials", false, 0},   {"depend", "factorials", true, 0},
      {"depend", "independent", false, 0},  {"depend", "independent", true, 0},
  };
  std::string bad;
  for (const auto& g : cases) {
    std::vector<std::string> args{g.command, dir + "/" + g.fixture + ".dc"};
    if (g.json) args.push_back("--json");
    std::ostringstream out1, out2, err;
    const int s1 = deltacompat::cli::main_entry(args, out1, err);
    const int s2 = deltacompat::cli::main_entry(args, out2, err);
    const std::string golden = dir + "/golden/" + g.fixture + "." + g.command + (g.json ? ".json" : ".txt");
    const std::string label = g.fixture + "." + g.command + (g.json ? ".json" : "");
    if (s1 != g.status) bad += " " + label + "(exit " + std::to_string(s1) + ")";
    else if (out1.str() != slurp(golden)) bad += " " + label + "(output)";
    else if (out1.str() != out2.str() || s1 != s2) bad += " " + label + "(unstable)";
  }
  return {bad.empty(), bad.empty() ? std::to_string(cases.size()) + " golden outputs match, JSON stable" : "failed:" + bad};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "criteria to run (default all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example 5 golden", example_five},
      {"round-trip uniqueness", round_trip},
      {"compatibility falsification", falsification},
      {"residual compatibility", residual},
      {"dispersion oracle", dispersion_oracle},
      {"reduced decomposition", reduction_contract},
      {"dependence suite", dependence_suite},
      {"log-derivative set", log_derivative_set},
      {"cli golden files", cli_golden},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[c].first << "): " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
