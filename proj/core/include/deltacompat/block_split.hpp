#pragma once

#include "deltacompat/ratfunc.hpp"

namespace deltacompat {

enum class SplitBlock { T, X, Y, TX };

/// f = rest * pure_part. rest is nonsplit with respect to the block and monic
/// over F; every constant of F ends up in pure_part.
///
/// For SplitBlock::TX the pure part is further split as t_part * x_part,
/// where t_part lies in F(t) and is monic over F and x_part lies in F(x)
/// and carries the constant. Factors that mix t and x stay in rest. For
/// the other blocks t_part and x_part are left as 1.
struct BlockSplit {
  RatFunc pure_part;
  RatFunc rest;
  RatFunc t_part;
  RatFunc x_part;
};

BlockSplit block_split(const RatFunc& f, SplitBlock block);

/// Largest factor of p whose irreducible factors only involve the flagged
/// variables (the q-block always counts as allowed). Monic.
MultiPoly pure_factor(const MultiPoly& p, const std::vector<bool>& allowed);

}  // namespace deltacompat
