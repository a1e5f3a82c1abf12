#pragma once

#include <array>
#include <optional>
#include <vector>

#include "deltacompat/ops.hpp"
#include "deltacompat/structure.hpp"

namespace deltacompat::detail {

// Like proper_point, but q-parameters may be specialized too. Used where a
// specialization only filters candidates that are later confirmed exactly.
std::vector<mpq_class> specialization_point(const std::vector<MultiPoly>& nonvanishing,
                                            const std::vector<std::size_t>& vars,
                                            const EvalOptions& options = {});

MultiPoly evaluate_point(MultiPoly p, const std::vector<std::size_t>& vars,
                         const std::vector<mpq_class>& point);

// The E-, G- and Q-witnesses of a product without symbolic powers, or
// nullopt when one of them is irrational.
std::optional<std::array<RatFunc, 3>> rational_parts(const HProduct& p, const EvalOptions& options);

}  // namespace deltacompat::detail
