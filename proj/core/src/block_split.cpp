#include "deltacompat/block_split.hpp"

#include "deltacompat/error.hpp"
#include "deltacompat/polyalg.hpp"

namespace deltacompat {

MultiPoly pure_factor(const MultiPoly& p, const std::vector<bool>& allowed) {
  const auto& ctx = *p.context();
  std::vector<bool> main(ctx.arity(), false);
  bool any = false;
  for (std::size_t v = 0; v < ctx.arity(); ++v) {
    main[v] = !allowed[v] && ctx.block(v) != Block::Q && p.depends_on(v);
    any = any || main[v];
  }
  if (!any) return p.monic();
  return content_wrt(p, main);
}

namespace {

// Splits f into (pure, rest) for a variable mask, rest monic over F.
std::pair<RatFunc, RatFunc> split_mask(const RatFunc& f, const std::vector<bool>& allowed) {
  MultiPoly pn = pure_factor(f.num(), allowed);
  MultiPoly pd = pure_factor(f.den(), allowed);
  RatFunc rest(divide_exact(f.num(), pn), divide_exact(f.den(), pd));
  auto [c, monic_rest] = split_field_constant(rest);
  return {RatFunc(pn, pd) * c, monic_rest};
}

}  // namespace

BlockSplit block_split(const RatFunc& f, SplitBlock block) {
  if (f.is_zero()) throw ZeroInput("block_split of zero");
  const auto& ctx = f.context();
  RatFunc one = RatFunc::constant(ctx, 1);
  switch (block) {
    case SplitBlock::T: {
      auto [pure, rest] = split_mask(f, block_mask(*ctx, {Block::T}));
      return {pure, rest, one, one};
    }
    case SplitBlock::X: {
      auto [pure, rest] = split_mask(f, block_mask(*ctx, {Block::X}));
      return {pure, rest, one, one};
    }
    case SplitBlock::Y: {
      auto [pure, rest] = split_mask(f, block_mask(*ctx, {Block::Y}));
      return {pure, rest, one, one};
    }
    case SplitBlock::TX: {
      // Only t-pure and x-pure factors leave; mixed t-x factors stay in rest.
      auto mask_tx = block_mask(*ctx, {Block::T, Block::X});
      auto mask_t = block_mask(*ctx, {Block::T});
      auto mask_x = block_mask(*ctx, {Block::X});
      auto mask_q = block_mask(*ctx, {Block::Q});
      auto parts = [&](const MultiPoly& p) {
        MultiPoly both = pure_factor(p, mask_tx);
        MultiPoly tp = pure_factor(both, mask_t);
        tp = divide_exact(tp, pure_factor(tp, mask_q));
        MultiPoly xp = pure_factor(divide_exact(both, tp), mask_x);
        return std::pair{tp, xp};
      };
      auto [tn, xn] = parts(f.num());
      auto [td, xd] = parts(f.den());
      RatFunc rest(divide_exact(f.num(), tn * xn), divide_exact(f.den(), td * xd));
      auto [c, monic_rest] = split_field_constant(rest);
      auto [ct, t_part] = split_field_constant(RatFunc(tn, td));
      RatFunc x_part = RatFunc(xn, xd) * c * ct;
      return {t_part * x_part, monic_rest, t_part, x_part};
    }
  }
  throw InvalidVariable("unknown block");
}

}  // namespace deltacompat
