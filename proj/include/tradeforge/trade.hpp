#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tradeforge/block.hpp"

namespace tradeforge {

// Integer-valued function on 2^V, stored sparsely. Positive coefficients are
// multiplicities in the leg T+, negative ones minus the multiplicities in T-.
struct SignedTrade {
  int v = 0;
  // sorted by mask, no zero coefficients
  std::vector<std::pair<Block, std::int32_t>> coeffs;

  bool is_void() const { return coeffs.empty(); }
  bool is_simple() const;

  bool operator==(const SignedTrade&) const = default;

  // Normalizes arbitrary terms: sorts, merges duplicate masks, drops zeros.
  static SignedTrade from_terms(int v, std::vector<std::pair<Block, std::int64_t>> terms);
};

// A plain set of blocks (the unsigned object).
struct Unitrade {
  int v = 0;
  std::vector<Block> blocks;  // sorted, distinct

  bool operator==(const Unitrade&) const = default;

  static Unitrade from_blocks(int v, std::vector<Block> blocks);
};

struct TradeStats {
  std::int64_t volume = 0;
  Block foundation = 0;
};

// Coefficient magnitudes are capped so sums can never overflow silently.
inline constexpr std::int64_t kCoeffLimit = 1 << 24;

bool is_trade(const SignedTrade& trade, int t);
bool is_unitrade(const Unitrade& u, int t);

// Requires the [0]-trade balance (positive sum == -negative sum); throws otherwise.
TradeStats stats(const SignedTrade& trade);

std::int64_t volume(const SignedTrade& trade);  // positive-coefficient sum, no balance check
Block foundation(const SignedTrade& trade);
Block foundation(const Unitrade& u);

// Replication r_{alpha,beta-bar}: blocks of the positive leg containing alpha
// and avoiding beta, counted with multiplicity. alpha and beta must be disjoint.
std::int64_t replication(const SignedTrade& trade, Block alpha, Block beta = 0);

SignedTrade negate(const SignedTrade& trade);
SignedTrade add(const SignedTrade& a, const SignedTrade& b);
SignedTrade subtract(const SignedTrade& a, const SignedTrade& b);

SignedTrade shift(const SignedTrade& trade, Block y);
SignedTrade projection(const SignedTrade& trade, int element);  // 1-based
SignedTrade multiply_block(const SignedTrade& trade, Block x);  // group-ring product by a single block

// True iff two elements have equal or complementary incidence over the blocks
// (excluding constant incidences), i.e. T is equivalent to a blow-up of a trade
// with a smaller foundation via x_k -> x_i x_j. Invariant under shifts,
// permutations, and the leg swap. Undefined (throws) on the void trade.
bool is_degenerate(const SignedTrade& trade);

// Keeps blocks containing alpha and disjoint from beta, unmodified.
SignedTrade restrict_trade(const SignedTrade& trade, Block alpha, Block beta);

// Shifts by {i : r_i > vol/2}; afterwards every r_i <= vol/2.
SignedTrade reduce(const SignedTrade& trade);

// Expands X0 * (X1 - Y1) * ... * (Xk - Yk) in the group ring. All of X0, Xi, Yi
// must be pairwise disjoint and each Xi | Yi nonempty.
SignedTrade product_expand(int v, Block x0, std::span<const std::pair<Block, Block>> factors);

Unitrade odd_support(int v, std::vector<Block> multiset);
// odd(T+ |+| T-): the unsigned shadow of a trade.
Unitrade unitrade_of(const SignedTrade& trade);

}  // namespace tradeforge
