#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "deltacompat/structure.hpp"

namespace deltacompat::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json context_json(const VarContext& ctx);
Json report_json(const CompatReport& r);
Json representation_json(const Representation& r);
Json product_json(const HProduct& p);
Json witness_json(const DependenceWitness& w);

std::string report_text(const CompatReport& r);
std::string representation_text(const Representation& r);
std::string product_text(const HProduct& p);
std::string witness_text(const DependenceWitness& w);

}  // namespace deltacompat::cli
