#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tradeforge/trade.hpp"

namespace tradeforge {

// Equivalence-group element. Action, in order: shift by shiftY, then permute
// elements (old bit i -> new bit perm[i], 0-based), then optionally negate.
struct Transform {
  std::vector<int> perm;
  Block shiftY = 0;
  bool swap_legs = false;
};

SignedTrade apply_transform(const SignedTrade& trade, const Transform& g);

// 2 * 2^v * v!
std::uint64_t group_order(int v);

// Byte string: [v][n lo][n hi][masks, ascending, u32 LE][coeffs, i32 LE].
// The encoded trade minimizes (mask sequence, coeff sequence) over the whole
// group. Empty string for the void trade.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const SignedTrade& trade);
bool are_equivalent(const SignedTrade& a, const SignedTrade& b);

// Decodes a nonempty key back into its canonical representative.
SignedTrade trade_from_key(const CanonicalKey& key);

// |{g : g(T) = T}|; divides group_order(v). Void trade -> full group order.
std::uint64_t aut_size(const SignedTrade& trade);

// Key and stabilizer size from one group search.
struct CanonResult {
  CanonicalKey key;
  std::uint64_t aut = 0;
};
CanonResult canonicalize(const SignedTrade& trade);

}  // namespace tradeforge
