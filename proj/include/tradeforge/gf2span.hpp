#pragma once

#include <span>
#include <vector>

#include "tradeforge/trade.hpp"

namespace tradeforge {

// Reduced row-echelon basis of the difference space of an affine set.
struct Gf2Basis {
  Block origin = 0;
  std::vector<Block> rows;  // nonzero, pairwise distinct leading bits

  int rank() const { return static_cast<int>(rows.size()); }
  bool contains_direction(Block x) const;  // x in the row space?
  // Inserts x into the row space, returns true if the rank grew.
  bool absorb(Block x);
};

Gf2Basis gf2_basis(std::span<const Block> blocks);  // requires nonempty

// Dimension of the affine span; 0 for a singleton, -1 (sentinel) for empty input.
int affine_rank(std::span<const Block> blocks);
int affine_rank(const Unitrade& u);
int affine_rank(const SignedTrade& trade);  // rank of the block set of both legs

inline constexpr int kSpanRankCap = 25;

// Materializes the affine span, sorted. Throws if the rank exceeds kSpanRankCap.
std::vector<Block> affine_span(std::span<const Block> blocks);

// <U> \ U; requires U nonempty and is_unitrade(U, t).
Unitrade span_complement(const Unitrade& u, int t);

// Repeatedly applies projections that act bijectively on the affine span until
// |found| == afrk. Preserves volume and affine rank.
SignedTrade compress(const SignedTrade& trade);

}  // namespace tradeforge
