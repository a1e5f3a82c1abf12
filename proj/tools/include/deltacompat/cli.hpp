#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltacompat/compat.hpp"

namespace deltacompat::cli {

/// A parsed input file: one variable context and one or more systems.
///
///   # comment
///   vars t: t; x: x; y: y; q: q
///   order lex:y,x,t,q          (optional)
///   u = ...                    (u1, u2, ... when a block has several variables)
///   v = ...
///   w = ...
///   ---                        (next system)
struct InputDocument {
  ContextPtr ctx;
  std::vector<CertificateSystem> systems;
};

/// Throws ParseError with the line and column of the offending text. A
/// non-empty `ordering` overrides the document's order line.
InputDocument parse_document(std::string_view text, const std::optional<std::string>& ordering = {});

enum class Command { Check, Represent, Decompose, Rational, Depend };

std::optional<Command> command_from_name(std::string_view name);
std::string command_name(Command c);

struct RunOptions {
  bool json = false;
  EvalOptions eval;
};

/// Runs one command and writes the report. Returns 0, or 3 when `check`
/// finds the system incompatible. Library errors propagate.
int run(Command cmd, const InputDocument& doc, const RunOptions& options, std::ostream& out);

/// Full command line handling: `<command> <file> [--json] [--ordering S]
/// [--seed N] [--retry-budget N]`, `-` reads stdin. Exit codes: 0 ok,
/// 1 usage or I/O, 2 parse, 3 incompatible, 4 structure violation,
/// 5 capacity.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltacompat::cli
