#include "report.hpp"

#include "deltacompat/expression.hpp"

namespace deltacompat::cli {

namespace {

Json strings(const std::vector<RatFunc>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(to_string(f));
  return a;
}

Json names(const VarContext& ctx, Block b) {
  Json a = Json::array();
  for (auto v : ctx.block_vars(b)) a.push_back(ctx.name(v));
  return a;
}

std::string violation_label(const Violation& v) {
  if (v.condition == Condition::NONZERO)
    return std::string(v.zero_kind == OpRef::Kind::Tau ? "w" : "v") + std::to_string(v.i + 1) + " is zero";
  return condition_name(v.condition) + " (" + std::to_string(v.i + 1) + ", " + std::to_string(v.j + 1) +
         "): residual " + to_string(v.residual);
}

void list(std::string& out, const std::string& name, const std::vector<RatFunc>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    out += name + std::to_string(i + 1) + " = " + to_string(fs[i]) + "\n";
}

}  // namespace

Json context_json(const VarContext& ctx) {
  Json j;
  j["t"] = names(ctx, Block::T);
  j["x"] = names(ctx, Block::X);
  j["y"] = names(ctx, Block::Y);
  j["q"] = names(ctx, Block::Q);
  j["ordering"] = ctx.ordering_spec();
  return j;
}

Json report_json(const CompatReport& r) {
  Json j;
  j["compatible"] = r.ok;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["condition"] = condition_name(v.condition);
    e["i"] = v.i + 1;
    e["j"] = v.j + 1;
    e["residual"] = to_string(v.residual);
    if (v.condition == Condition::NONZERO) e["zero"] = v.zero_kind == OpRef::Kind::Tau ? "w" : "v";
    j["violations"].push_back(std::move(e));
  }
  return j;
}

Json representation_json(const Representation& r) {
  Json j;
  j["f"] = to_string(r.f);
  j["alpha"] = strings(r.alpha);
  j["beta"] = strings(r.beta);
  j["lambda"] = strings(r.lambda);
  j["mu"] = strings(r.mu);
  return j;
}

Json product_json(const HProduct& p) {
  Json j;
  j["rational_part"] = to_string(p.rational_part);
  j["powers"] = Json::array();
  for (const auto& [base, idx] : p.powers) {
    Json e;
    e["base"] = to_string(base);
    e["exponent"] = p.ctx->name(p.ctx->x_var(idx));
    e["index"] = idx + 1;
    j["powers"].push_back(std::move(e));
  }
  j["e_certs"] = strings(p.e_certs);
  j["g_certs"] = strings(p.g_certs);
  j["q_certs"] = strings(p.q_certs);
  j["rendered"] = render(p);
  return j;
}

Json witness_json(const DependenceWitness& w) {
  Json j;
  j["omega"] = Json::array();
  for (const auto& c : w.omega) j["omega"].push_back(c.get_si());
  j["power_products"] = strings(w.power_products);
  j["e_witness"] = to_string(w.e_witness);
  j["g_witness"] = to_string(w.g_witness);
  j["q_witness"] = to_string(w.q_witness);
  j["rational"] = to_string(w.rational);
  return j;
}

std::string report_text(const CompatReport& r) {
  std::string out = r.ok ? "compatible\n" : "incompatible\n";
  for (const auto& v : r.violations) out += "  " + violation_label(v) + "\n";
  return out;
}

std::string representation_text(const Representation& r) {
  std::string out = "f = " + to_string(r.f) + "\n";
  list(out, "alpha", r.alpha);
  list(out, "beta", r.beta);
  list(out, "lambda", r.lambda);
  list(out, "mu", r.mu);
  return out;
}

std::string product_text(const HProduct& p) {
  std::string out = "rational_part = " + to_string(p.rational_part) + "\n";
  for (const auto& [base, idx] : p.powers)
    out += "power = (" + to_string(base) + ")^" + p.ctx->name(p.ctx->x_var(idx)) + "\n";
  list(out, "e_cert", p.e_certs);
  list(out, "g_cert", p.g_certs);
  list(out, "q_cert", p.q_certs);
  out += "product = " + render(p) + "\n";
  return out;
}

std::string witness_text(const DependenceWitness& w) {
  std::string out = "dependent\nomega = [";
  for (std::size_t i = 0; i < w.omega.size(); ++i) out += (i ? ", " : "") + w.omega[i].get_str();
  out += "]\n";
  list(out, "power_product", w.power_products);
  out += "e_witness = " + to_string(w.e_witness) + "\n";
  out += "g_witness = " + to_string(w.g_witness) + "\n";
  out += "q_witness = " + to_string(w.q_witness) + "\n";
  out += "rational = " + to_string(w.rational) + "\n";
  return out;
}

}  // namespace deltacompat::cli
