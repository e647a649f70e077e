#include "tradeforge/anf.hpp"

#include <bit>
#include <stdexcept>

#include "tradeforge/gf2span.hpp"

namespace tradeforge {

namespace {

void check_anf_universe(int v) {
  if (v < 0 || v > kAnfUniverseCap) throw std::invalid_argument("anf: universe size out of range");
}

// In-place Moebius/zeta butterfly over GF(2); self-inverse.
void moebius(std::vector<std::uint8_t>& a, int v) {
  for (int j = 0; j < v; ++j) {
    const size_t bit = size_t{1} << j;
    for (size_t m = 0; m < a.size(); ++m)
      if (m & bit) a[m] ^= a[m ^ bit];
  }
}

}  // namespace

Anf anf_from_set(const Unitrade& u) {
  check_anf_universe(u.v);
  Anf f;
  f.v = u.v;
  f.coeffs.assign(size_t{1} << u.v, 0);
  for (Block b : u.blocks) f.coeffs[b] = 1;
  moebius(f.coeffs, f.v);
  return f;
}

Unitrade set_from_anf(const Anf& f) {
  check_anf_universe(f.v);
  if (f.coeffs.size() != size_t{1} << f.v) throw std::invalid_argument("anf: bad table size");
  std::vector<std::uint8_t> a = f.coeffs;
  moebius(a, f.v);
  std::vector<Block> blocks;
  for (size_t m = 0; m < a.size(); ++m)
    if (a[m]) blocks.push_back(static_cast<Block>(m));
  return Unitrade::from_blocks(f.v, std::move(blocks));
}

int degree(const Anf& f) {
  int d = -1;
  for (size_t m = 0; m < f.coeffs.size(); ++m)
    if (f.coeffs[m]) d = std::max(d, std::popcount(m));
  return d;
}

const char* to_string(KasamiTag tag) {
  switch (tag) {
    case KasamiTag::MinAffine: return "min-affine";
    case KasamiTag::TypeA: return "type-A";
    case KasamiTag::TypeB: return "type-B";
    case KasamiTag::OutOfRange: return "out-of-range";
  }
  return "?";
}

KasamiClass kasami_classify(const Unitrade& u, int t) {
  if (u.blocks.empty()) throw std::domain_error("kasami_classify undefined on the empty set");
  if (!is_unitrade(u, t)) throw std::invalid_argument("kasami_classify: not a [t]-unitrade");
  KasamiClass out;
  // volume in trade units: a simple trade of volume w has 2w blocks in its unitrade
  out.volume = static_cast<std::int64_t>(u.blocks.size()) / 2;
  const int afrk = affine_rank(u);
  if (out.volume == std::int64_t{1} << t) {
    if (affine_span(std::span<const Block>(u.blocks)) != u.blocks || afrk != t + 1)
      throw std::domain_error("kasami_classify: minimum volume but not an affine subspace");
    out.tag = KasamiTag::MinAffine;
    out.expected_afrk = t + 1;
    return out;
  }
  // volumes 2^{t+1} - 2^i between 2^t and 2^{t+1}
  for (int i = t - 1; i >= 0; --i) {
    if (out.volume != (std::int64_t{1} << (t + 1)) - (std::int64_t{1} << i)) continue;
    out.i = i;
    if (afrk == 2 * t + 2 - i) {  // checked first: i = t-1 admits both rank forms
      out.tag = KasamiTag::TypeA;
      out.expected_afrk = afrk;
      return out;
    }
    if (afrk == t + 3 && 2 * i >= t - 1 && i <= t - 2) {
      out.tag = KasamiTag::TypeB;
      out.expected_afrk = afrk;
      return out;
    }
    throw std::domain_error("kasami_classify: rank matches no recognized type");
  }
  out.i = -1;
  out.tag = KasamiTag::OutOfRange;
  return out;
}

}  // namespace tradeforge
