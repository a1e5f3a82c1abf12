#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "deltacompat/cli.hpp"
#include "deltacompat/error.hpp"
#include "deltacompat/expression.hpp"
#include "report.hpp"

namespace deltacompat::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 5> kCommands{{
    {Command::Check, "check"},
    {Command::Represent, "represent"},
    {Command::Decompose, "decompose"},
    {Command::Rational, "rational"},
    {Command::Depend, "depend"},
}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First factor of an irrational product, or nullopt when all are rational.
std::optional<std::string> failing_part(const HProduct& p, const EvalOptions& eval) {
  if (!p.powers.empty()) return "symbolic power";
  const auto& ctx = p.ctx;
  auto ones = [&](std::size_t n) { return std::vector<RatFunc>(n, RatFunc::constant(ctx, 1)); };
  const auto one = RatFunc::constant(ctx, 1);
  HProduct e{ctx, one, {}, p.e_certs, ones(ctx->m()), ones(ctx->n())};
  if (!is_rational_product(e, eval)) return "E";
  HProduct g{ctx, one, {}, std::vector<RatFunc>(ctx->l(), RatFunc(ctx)), p.g_certs, ones(ctx->n())};
  if (!is_rational_product(g, eval)) return "G";
  HProduct q{ctx, one, {}, std::vector<RatFunc>(ctx->l(), RatFunc(ctx)), ones(ctx->m()), p.q_certs};
  if (!is_rational_product(q, eval)) return "Q";
  return std::nullopt;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return std::string(n);
  return "?";
}

int run(Command cmd, const InputDocument& doc, const RunOptions& options, std::ostream& out) {
  if (cmd != Command::Depend && doc.systems.size() != 1)
    throw UsageError(command_name(cmd) + " expects exactly one system");
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(cmd);
  j["context"] = context_json(*doc.ctx);
  std::string text;
  int status = 0;

  switch (cmd) {
    case Command::Check: {
      const auto report = check(doc.systems.front());
      j["result"] = report_json(report);
      text = report_text(report);
      status = report.ok ? 0 : 3;
      break;
    }
    case Command::Represent: {
      const auto r = standardize(represent(doc.systems.front(), options.eval));
      j["result"] = representation_json(r);
      text = representation_text(r);
      break;
    }
    case Command::Decompose: {
      const auto p = decompose(doc.systems.front(), options.eval);
      j["result"] = product_json(p);
      text = product_text(p);
      break;
    }
    case Command::Rational: {
      const auto p = decompose(doc.systems.front(), options.eval);
      Json r;
      if (auto g = is_rational_product(p, options.eval)) {
        const RatFunc whole = p.rational_part * *g;
        r["rational"] = true;
        r["witness"] = to_string(*g);
        r["solution"] = to_string(whole);
        text = "rational\nwitness = " + to_string(*g) + "\nsolution = " + to_string(whole) + "\n";
      } else {
        const std::string part = failing_part(p, options.eval).value_or("product");
        r["rational"] = false;
        r["failing_part"] = part;
        text = "irrational\nfailing_part = " + part + "\n";
      }
      j["result"] = std::move(r);
      break;
    }
    case Command::Depend: {
      const auto w = algebraic_dependence(doc.systems, options.eval);
      Json r;
      r["systems"] = doc.systems.size();
      if (w) {
        r["dependent"] = true;
        r["witness"] = witness_json(*w);
        text = witness_text(*w);
      } else {
        r["dependent"] = false;
        text = "independent\n";
      }
      j["result"] = std::move(r);
      break;
    }
  }
  if (options.json) out << j.dump(2) << "\n";
  else out << text;
  return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compatibility, structure and dependence of certificate systems", "deltacompat"};
  std::string command, path;
  std::optional<std::string> ordering;
  RunOptions options;
  std::vector<std::string> names;
  for (const auto& [c, n] : kCommands) names.emplace_back(n);
  app.add_option("command", command, "check | represent | decompose | rational | depend")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("file", path, "input document, - for stdin")->required();
  app.add_flag("--json", options.json, "machine-readable output");
  app.add_option("--ordering", ordering, "monomial ordering, e.g. lex:y,x,t,q");
  app.add_option("--seed", options.eval.seed, "first evaluation point index");
  app.add_option("--retry-budget", options.eval.retry_budget, "evaluation attempts");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const InputDocument doc = parse_document(read_input(path), ordering);
    return run(*command_from_name(command), doc, options, out);
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
    return 2;
  } catch (const NotCompatible& e) {
    err << "not compatible: " << e.what() << "\n";
    return 3;
  } catch (const StructureViolation& e) {
    err << e.what() << "\n";
    return 4;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 5;
  } catch (const RetryBudgetExhausted& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 5;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace deltacompat::cli
