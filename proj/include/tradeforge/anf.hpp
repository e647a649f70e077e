#pragma once

#include <cstdint>
#include <vector>

#include "tradeforge/trade.hpp"

namespace tradeforge {

// Algebraic normal form over GF(2): coeffs[m] is the coefficient of the
// monomial prod_{i in m} y_i.
struct Anf {
  int v = 0;
  std::vector<std::uint8_t> coeffs;  // size 2^v, entries 0/1
};

inline constexpr int kAnfUniverseCap = 25;

Anf anf_from_set(const Unitrade& u);
Unitrade set_from_anf(const Anf& f);

// Max popcount of a monomial with nonzero coefficient; -1 for the zero polynomial.
int degree(const Anf& f);

enum class KasamiTag { MinAffine, TypeA, TypeB, OutOfRange };

struct KasamiClass {
  KasamiTag tag = KasamiTag::OutOfRange;
  int i = -1;             // volume exponent, vol = 2^{t+1} - 2^i (Types A/B)
  int expected_afrk = -1;
  std::int64_t volume = 0;
};

// Classifies a nonempty [t]-unitrade by the (volume, affine rank) invariants.
// Throws if the volume fits a recognized form but the rank matches neither type.
KasamiClass kasami_classify(const Unitrade& u, int t);

const char* to_string(KasamiTag tag);

}  // namespace tradeforge
