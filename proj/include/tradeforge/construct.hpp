#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "tradeforge/canon.hpp"
#include "tradeforge/trade.hpp"

namespace tradeforge {

// Legs partition the linear span of independent generators by weight parity.
struct ParityLegSpan {
  std::vector<Block> generators;
  bool odd_positive = true;  // odd-weight vectors go to T+
};

SignedTrade parity_span_trade(int v, const ParityLegSpan& span);

// X0 (X1-Y1)...(Xk-Yk): [k-1]-trade of volume 2^{k-1}.
SignedTrade minimal_trade(int v, Block x0, std::span<const std::pair<Block, Block>> pairs);

// Lemma-style merge of simple trades with disjoint like-sign legs:
// ((T1+ u T2+) \ (T1- u T2-), (T1- u T2-) \ (T1+ u T2+)).
SignedTrade merge_simple(const SignedTrade& t1, const SignedTrade& t2, int t);

enum class SpectrumFamily { FormII, FormIII };

// Simple [t]-trade of volume 2^{t+1}+2^{t-1}-2^i (FormII, 0 <= i <= t-2) or
// 2^{t+1}+2^{t-1}-3*2^i (FormIII, 0 <= i <= t-3), on 2t+3 elements.
SignedTrade spectrum_trade(int t, int i, SpectrumFamily family);

struct SimpleSpectrum {
  std::set<std::int64_t> exists;
  std::set<std::int64_t> not_exists;
  std::int64_t valid_below = 0;  // 2.5 * 2^t
};
SimpleSpectrum known_simple_spectrum(int t);

// ({Y1,Y2,Y3},{Z1,Z2,Z3}) shifted: Y's mutually disjoint, Z's mutually
// disjoint, Y1^Y2^Y3 == Z1^Z2^Z3, Yi != Zj. Volume-3 [1]-trade (legs are
// multisets when some Y's or Z's are empty).
SignedTrade vol3_template(int v, const std::array<Block, 3>& y, const std::array<Block, 3>& z,
                          Block shift_by);

enum class Vol6Kind { P33, P22, P13, P11 };

struct Vol6Params {
  Block x = 0;                 // P33, P11
  std::vector<Block> y;        // 3 blocks (P13: Y1,Y2,Y3)
  std::vector<Block> z;        // 3 blocks (P13: Z1,Z2 only)
};

// The four volume-6 [2]-trade forms; throws invalid_argument unless the
// expansion is a volume-6 [2]-trade under the per-kind side conditions.
SignedTrade vol6_template(int v, Vol6Kind kind, const Vol6Params& p);

// Canonical keys of every valid template instance over 2^[v].
std::set<CanonicalKey> vol3_class_keys(int v);
std::set<CanonicalKey> vol6_class_keys(int v);

}  // namespace tradeforge
