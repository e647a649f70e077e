#include "tradeforge/trade.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace tradeforge {

namespace {

void check_universe(int v) {
  if (v < 0 || v > kMaxElements) throw std::invalid_argument("universe size out of range");
}

std::int32_t checked_coeff(std::int64_t c) {
  if (c > kCoeffLimit || c < -kCoeffLimit) throw std::overflow_error("trade coefficient overflow");
  return static_cast<std::int32_t>(c);
}

// Compacts the bits of `found` to positions 0..f-1.
int compact_index(Block mask, Block found) {
  int idx = 0, out = 0;
  for (Block rest = found; rest; rest &= rest - 1) {
    Block low = rest & (~rest + 1);
    if (mask & low) out |= 1 << idx;
    ++idx;
  }
  return out;
}

constexpr int kDenseCap = 22;  // dense superset-sum tables up to 2^22 entries

// Superset sums over the foundation-compressed cube: a[S] := sum over X >= S.
template <typename V>
void superset_zeta(std::vector<V>& a, int f) {
  for (int j = 0; j < f; ++j) {
    const int bit = 1 << j;
    for (int m = 0; m < static_cast<int>(a.size()); ++m)
      if (!(m & bit)) a[static_cast<size_t>(m)] += a[static_cast<size_t>(m | bit)];
  }
}

}  // namespace

bool SignedTrade::is_simple() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const auto& e) { return e.second == 1 || e.second == -1; });
}

SignedTrade SignedTrade::from_terms(int v, std::vector<std::pair<Block, std::int64_t>> terms) {
  check_universe(v);
  std::sort(terms.begin(), terms.end());
  SignedTrade out;
  out.v = v;
  const Block full = full_mask(v);
  for (size_t i = 0; i < terms.size();) {
    Block m = terms[i].first;
    if (m & ~full) throw std::invalid_argument("block mask outside universe");
    std::int64_t c = 0;
    for (; i < terms.size() && terms[i].first == m; ++i) c += terms[i].second;
    if (c != 0) out.coeffs.emplace_back(m, checked_coeff(c));
  }
  return out;
}

Unitrade Unitrade::from_blocks(int v, std::vector<Block> blocks) {
  check_universe(v);
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  const Block full = full_mask(v);
  for (Block b : blocks)
    if (b & ~full) throw std::invalid_argument("block mask outside universe");
  return Unitrade{v, std::move(blocks)};
}

Block foundation(const SignedTrade& trade) {
  Block f = 0;
  for (const auto& [m, c] : trade.coeffs) f |= m;
  return f;
}

Block foundation(const Unitrade& u) {
  Block f = 0;
  for (Block b : u.blocks) f |= b;
  return f;
}

std::int64_t volume(const SignedTrade& trade) {
  std::int64_t pos = 0;
  for (const auto& [m, c] : trade.coeffs)
    if (c > 0) pos += c;
  return pos;
}

TradeStats stats(const SignedTrade& trade) {
  std::int64_t pos = 0, neg = 0;
  Block found = 0;
  for (const auto& [m, c] : trade.coeffs) {
    found |= m;
    (c > 0 ? pos : neg) += c;
  }
  if (pos + neg != 0) throw std::domain_error("inconsistent trade: legs have unequal volume");
  return TradeStats{pos, found};
}

std::int64_t replication(const SignedTrade& trade, Block alpha, Block beta) {
  if (alpha & beta) throw std::invalid_argument("replication: alpha and beta overlap");
  std::int64_t r = 0;
  for (const auto& [m, c] : trade.coeffs)
    if (c > 0 && (m & alpha) == alpha && !(m & beta)) r += c;
  return r;
}

bool is_trade(const SignedTrade& trade, int t) {
  if (t < 0 || t > trade.v) throw std::invalid_argument("is_trade: t out of range");
  if (trade.coeffs.empty()) return true;
  const Block found = foundation(trade);
  const int f = popcount(found);
  const int tt = std::min(t, f);
  if (f <= kDenseCap) {
    std::vector<std::int64_t> a(size_t{1} << f, 0);
    for (const auto& [m, c] : trade.coeffs) a[static_cast<size_t>(compact_index(m, found))] += c;
    superset_zeta(a, f);
    for (size_t m = 0; m < a.size(); ++m)
      if (std::popcount(m) <= static_cast<unsigned>(tt) && a[m] != 0) return false;
    return true;
  }
  // large foundations: enumerate subsets S of found with |S| <= t directly
  std::vector<int> elems;
  for (int i = 0; i < kMaxElements; ++i)
    if (found >> i & 1) elems.push_back(i);
  // DFS over subsets by largest element, bounded depth
  struct Frame { Block s; int next; int size; };
  std::vector<Frame> st{{0, 0, 0}};
  while (!st.empty()) {
    Frame fr = st.back();
    st.pop_back();
    std::int64_t sum = 0;
    for (const auto& [m, c] : trade.coeffs)
      if ((m & fr.s) == fr.s) sum += c;
    if (sum != 0) return false;
    if (fr.size == tt) continue;
    for (int j = fr.next; j < static_cast<int>(elems.size()); ++j)
      st.push_back({fr.s | (Block{1} << elems[static_cast<size_t>(j)]), j + 1, fr.size + 1});
  }
  return true;
}

bool is_unitrade(const Unitrade& u, int t) {
  if (t < 0 || t > u.v) throw std::invalid_argument("is_unitrade: t out of range");
  if (u.blocks.empty()) return true;
  const Block found = foundation(u);
  const int f = popcount(found);
  const int tt = std::min(t, f);
  if (f > kDenseCap) throw std::invalid_argument("is_unitrade: foundation too large");
  std::vector<std::uint8_t> a(size_t{1} << f, 0);
  for (Block b : u.blocks) a[static_cast<size_t>(compact_index(b, found))] ^= 1;
  for (int j = 0; j < f; ++j) {
    const int bit = 1 << j;
    for (int m = 0; m < static_cast<int>(a.size()); ++m)
      if (!(m & bit)) a[static_cast<size_t>(m)] ^= a[static_cast<size_t>(m | bit)];
  }
  for (size_t m = 0; m < a.size(); ++m)
    if (std::popcount(m) <= static_cast<unsigned>(tt) && a[m]) return false;
  return true;
}

SignedTrade negate(const SignedTrade& trade) {
  SignedTrade out = trade;
  for (auto& [m, c] : out.coeffs) c = -c;
  return out;
}

SignedTrade add(const SignedTrade& a, const SignedTrade& b) {
  if (a.v != b.v) throw std::invalid_argument("add: universe mismatch");
  SignedTrade out;
  out.v = a.v;
  out.coeffs.reserve(a.coeffs.size() + b.coeffs.size());
  size_t i = 0, j = 0;
  while (i < a.coeffs.size() || j < b.coeffs.size()) {
    if (j == b.coeffs.size() || (i < a.coeffs.size() && a.coeffs[i].first < b.coeffs[j].first)) {
      out.coeffs.push_back(a.coeffs[i++]);
    } else if (i == a.coeffs.size() || b.coeffs[j].first < a.coeffs[i].first) {
      out.coeffs.push_back(b.coeffs[j++]);
    } else {
      std::int64_t c = std::int64_t{a.coeffs[i].second} + b.coeffs[j].second;
      if (c != 0) out.coeffs.emplace_back(a.coeffs[i].first, checked_coeff(c));
      ++i, ++j;
    }
  }
  return out;
}

SignedTrade subtract(const SignedTrade& a, const SignedTrade& b) { return add(a, negate(b)); }

SignedTrade shift(const SignedTrade& trade, Block y) {
  if (y & ~full_mask(trade.v)) throw std::invalid_argument("shift mask outside universe");
  SignedTrade out;
  out.v = trade.v;
  out.coeffs.reserve(trade.coeffs.size());
  for (const auto& [m, c] : trade.coeffs) out.coeffs.emplace_back(m ^ y, c);
  std::sort(out.coeffs.begin(), out.coeffs.end());
  return out;
}

SignedTrade projection(const SignedTrade& trade, int element) {
  if (element < 1 || element > trade.v) throw std::invalid_argument("projection element out of range");
  const Block bit = bit_of(element);
  std::vector<std::pair<Block, std::int64_t>> terms;
  terms.reserve(trade.coeffs.size());
  for (const auto& [m, c] : trade.coeffs) terms.emplace_back(m & ~bit, c);
  return SignedTrade::from_terms(trade.v, std::move(terms));
}

SignedTrade multiply_block(const SignedTrade& trade, Block x) { return shift(trade, x); }

bool is_degenerate(const SignedTrade& trade) {
  if (trade.is_void()) throw std::domain_error("is_degenerate undefined on the void trade");
  const size_t n = trade.coeffs.size();
  // incidence of element i over the blocks, as a bitset of block indices;
  // shifts complement some rows and permutations swap them, so the pair test
  // below is a class invariant
  std::vector<std::vector<std::uint64_t>> inc(
      static_cast<size_t>(trade.v), std::vector<std::uint64_t>((n + 63) / 64, 0));
  for (size_t j = 0; j < n; ++j)
    for (int e = 0; e < trade.v; ++e)
      if (trade.coeffs[j].first >> e & 1) inc[static_cast<size_t>(e)][j / 64] |= std::uint64_t{1} << (j % 64);
  const auto count = [&](const std::vector<std::uint64_t>& w) {
    size_t c = 0;
    for (std::uint64_t x : w) c += static_cast<size_t>(std::popcount(x));
    return c;
  };
  std::vector<std::uint64_t> buf(inc[0].size());
  for (int i = 0; i < trade.v; ++i) {
    const size_t ci = count(inc[static_cast<size_t>(i)]);
    if (ci == 0 || ci == n) continue;  // constant rows never witness a blow-up
    for (int j = i + 1; j < trade.v; ++j) {
      const auto& a = inc[static_cast<size_t>(i)];
      const auto& b = inc[static_cast<size_t>(j)];
      if (a == b) return true;
      for (size_t w = 0; w < buf.size(); ++w) buf[w] = a[w] ^ b[w];
      if (count(buf) == n) return true;  // complementary incidence
    }
  }
  return false;
}

SignedTrade restrict_trade(const SignedTrade& trade, Block alpha, Block beta) {
  if (alpha & beta) throw std::invalid_argument("restrict: alpha and beta overlap");
  SignedTrade out;
  out.v = trade.v;
  for (const auto& [m, c] : trade.coeffs)
    if ((m & alpha) == alpha && !(m & beta)) out.coeffs.emplace_back(m, c);
  return out;
}

SignedTrade reduce(const SignedTrade& trade) {
  if (trade.is_void()) throw std::domain_error("reduce undefined on the void trade");
  const TradeStats st = stats(trade);
  Block y = 0;
  for (int i = 1; i <= trade.v; ++i) {
    const Block bit = bit_of(i);
    if ((st.foundation & bit) && 2 * replication(trade, bit) > st.volume) y |= bit;
  }
  return shift(trade, y);
}

SignedTrade product_expand(int v, Block x0, std::span<const std::pair<Block, Block>> factors) {
  check_universe(v);
  const Block full = full_mask(v);
  Block used = x0;
  if (x0 & ~full) throw std::invalid_argument("invalid minimal form: X0 outside universe");
  for (const auto& [x, y] : factors) {
    if ((x | y) & ~full) throw std::invalid_argument("invalid minimal form: factor outside universe");
    if (!(x | y)) throw std::invalid_argument("invalid minimal form: empty factor");
    if ((x & y) || (used & (x | y))) throw std::invalid_argument("invalid minimal form: overlapping sets");
    used |= x | y;
  }
  std::vector<std::pair<Block, std::int64_t>> terms{{x0, 1}};
  for (const auto& [x, y] : factors) {
    std::vector<std::pair<Block, std::int64_t>> next;
    next.reserve(terms.size() * 2);
    for (const auto& [m, c] : terms) {
      next.emplace_back(m ^ x, c);
      next.emplace_back(m ^ y, -c);
    }
    terms = std::move(next);
  }
  return SignedTrade::from_terms(v, std::move(terms));
}

Unitrade odd_support(int v, std::vector<Block> multiset) {
  std::sort(multiset.begin(), multiset.end());
  std::vector<Block> out;
  for (size_t i = 0; i < multiset.size();) {
    size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    if ((j - i) % 2) out.push_back(multiset[i]);
    i = j;
  }
  return Unitrade::from_blocks(v, std::move(out));
}

Unitrade unitrade_of(const SignedTrade& trade) {
  std::vector<Block> out;
  for (const auto& [m, c] : trade.coeffs)
    if (std::abs(c) % 2) out.push_back(m);
  return Unitrade::from_blocks(trade.v, std::move(out));
}

}  // namespace tradeforge
