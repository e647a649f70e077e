#include "tradeforge/gf2span.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tradeforge {

namespace {

Block reduce_by_rows(const std::vector<Block>& rows, Block x) {
  for (Block r : rows) {
    Block lead = Block{1} << (std::bit_width(r) - 1);
    if (x & lead) x ^= r;
  }
  return x;
}

}  // namespace

bool Gf2Basis::contains_direction(Block x) const { return reduce_by_rows(rows, x) == 0; }

bool Gf2Basis::absorb(Block x) {
  x = reduce_by_rows(rows, x);
  if (x == 0) return false;
  rows.push_back(x);
  std::sort(rows.begin(), rows.end(), std::greater<Block>());
  return true;
}

Gf2Basis gf2_basis(std::span<const Block> blocks) {
  if (blocks.empty()) throw std::invalid_argument("gf2_basis: empty set");
  Gf2Basis b;
  b.origin = blocks.front();
  for (Block x : blocks) b.absorb(x ^ b.origin);
  return b;
}

int affine_rank(std::span<const Block> blocks) {
  if (blocks.empty()) return -1;
  return gf2_basis(blocks).rank();
}

int affine_rank(const Unitrade& u) { return affine_rank(std::span<const Block>(u.blocks)); }

int affine_rank(const SignedTrade& trade) {
  std::vector<Block> blocks;
  blocks.reserve(trade.coeffs.size());
  for (const auto& [m, c] : trade.coeffs) blocks.push_back(m);
  return affine_rank(std::span<const Block>(blocks));
}

std::vector<Block> affine_span(std::span<const Block> blocks) {
  if (blocks.empty()) throw std::invalid_argument("affine_span: empty set");
  const Gf2Basis b = gf2_basis(blocks);
  if (b.rank() > kSpanRankCap) throw std::length_error("affine span too large to materialize");
  std::vector<Block> out{b.origin};
  out.reserve(size_t{1} << b.rank());
  for (Block r : b.rows) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Unitrade span_complement(const Unitrade& u, int t) {
  if (u.blocks.empty()) throw std::domain_error("span_complement undefined on the empty unitrade");
  if (!is_unitrade(u, t)) throw std::invalid_argument("span_complement: input is not a [t]-unitrade");
  std::vector<Block> span = affine_span(std::span<const Block>(u.blocks));
  std::vector<Block> out;
  out.reserve(span.size() - u.blocks.size());
  std::set_difference(span.begin(), span.end(), u.blocks.begin(), u.blocks.end(),
                      std::back_inserter(out));
  return Unitrade{u.v, std::move(out)};
}

SignedTrade compress(const SignedTrade& trade) {
  SignedTrade cur = trade;
  (void)stats(cur);  // balance check
  while (!cur.is_void()) {
    std::vector<Block> blocks;
    blocks.reserve(cur.coeffs.size());
    for (const auto& [m, c] : cur.coeffs) blocks.push_back(m);
    const Gf2Basis basis = gf2_basis(std::span<const Block>(blocks));
    const Block found = foundation(cur);
    if (popcount(found) == basis.rank()) break;
    // i-projection is a bijection on the span iff e_i is not a direction of it
    int pick = 0;
    for (int i = 1; i <= cur.v && !pick; ++i)
      if ((found & bit_of(i)) && !basis.contains_direction(bit_of(i))) pick = i;
    if (!pick) break;  // span is the whole cube over found
    cur = projection(cur, pick);
  }
  return cur;
}

}  // namespace tradeforge
