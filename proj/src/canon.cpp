#include "tradeforge/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace tradeforge {

namespace {

Block permute_mask(Block m, const std::vector<int>& perm) {
  Block out = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if (m >> i & 1) out |= Block{1} << perm[i];
  return out;
}

CanonicalKey serialize(int v, const std::vector<Block>& masks,
                       const std::vector<std::int32_t>& coeffs) {
  CanonicalKey s;
  s.reserve(3 + 8 * masks.size());
  s.push_back(static_cast<char>(v));
  const size_t n = masks.size();
  s.push_back(static_cast<char>(n & 0xff));
  s.push_back(static_cast<char>(n >> 8 & 0xff));
  for (Block m : masks)
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>(m >> (8 * b) & 0xff));
  for (std::int32_t c : coeffs) {
    const auto u = static_cast<std::uint32_t>(c);
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>(u >> (8 * b) & 0xff));
  }
  return s;
}

// Branch-and-bound over the whole group: for each shift by a block of T and
// each leg swap, assign element images to bit positions from v-1 down, pruning
// whenever the sorted high-bit prefixes already exceed the best image found.
// Elements outside the foundation act trivially, so one "filler" branch stands
// in for all of them and leaves weigh (v - |found|)!.
struct Searcher {
  int v = 0;
  size_t n = 0;
  std::vector<Block> omask;  // masks after the current shift (fixed entry order)
  std::vector<std::int32_t> ocoef;
  std::vector<int> felems;  // foundation bit indices, rarest-first
  int nfree = 0;
  std::uint64_t filler_weight = 1;

  bool has_best = false;
  std::vector<Block> best_masks;
  std::vector<std::int32_t> best_coeffs;
  std::uint64_t ties = 0;

  std::vector<std::vector<Block>> prefix;  // per depth, per entry
  std::vector<Block> sortbuf;
  std::vector<size_t> idx;

  void prepare(int v_, size_t n_) {
    v = v_;
    n = n_;
    omask.resize(n);
    ocoef.resize(n);
    prefix.assign(static_cast<size_t>(v) + 1, std::vector<Block>(n, 0));
    sortbuf.resize(n);
    idx.resize(n);
  }

  void leaf() {
    const std::vector<Block>& fin = prefix[static_cast<size_t>(v)];
    for (size_t j = 0; j < n; ++j) idx[j] = j;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fin[a] < fin[b]; });
    if (has_best) {
      int cmp = 0;
      for (size_t j = 0; j < n && !cmp; ++j)
        cmp = fin[idx[j]] < best_masks[j] ? -1 : fin[idx[j]] > best_masks[j] ? 1 : 0;
      for (size_t j = 0; j < n && !cmp; ++j)
        cmp = ocoef[idx[j]] < best_coeffs[j] ? -1 : ocoef[idx[j]] > best_coeffs[j] ? 1 : 0;
      if (cmp > 0) return;
      if (cmp == 0) {
        ties += filler_weight;
        return;
      }
    }
    for (size_t j = 0; j < n; ++j) {
      best_masks[j] = fin[idx[j]];
      best_coeffs[j] = ocoef[idx[j]];
    }
    has_best = true;
    ties = filler_weight;
  }

  void dfs(int depth, Block used_found) {
    if (depth == v) {
      leaf();
      return;
    }
    const int pos = v - 1 - depth;
    const std::vector<Block>& cur = prefix[static_cast<size_t>(depth)];
    std::vector<Block>& next = prefix[static_cast<size_t>(depth) + 1];
    const int fillers_used = depth - popcount(used_found);
    auto descend = [&](Block new_used) {
      if (has_best) {
        // Sorted prefixes (low bits zero) lower-bound every completion, so
        // they are compared against the full best values, not a truncation.
        sortbuf = next;
        std::sort(sortbuf.begin(), sortbuf.end());
        for (size_t j = 0; j < n; ++j) {
          if (sortbuf[j] > best_masks[j]) return;
          if (sortbuf[j] < best_masks[j]) break;
        }
      }
      dfs(depth + 1, new_used);
    };
    if (fillers_used < nfree) {
      next = cur;
      descend(used_found);
    }
    for (int e : felems) {
      const Block ebit = Block{1} << e;
      if (used_found & ebit) continue;
      for (size_t j = 0; j < n; ++j) next[j] = cur[j] | (omask[j] & ebit ? Block{1} << pos : 0);
      descend(used_found | ebit);
    }
  }

  void search(const SignedTrade& trade) {
    const Block found = foundation(trade);
    const int f = popcount(found);
    prepare(trade.v, trade.coeffs.size());
    nfree = v - f;
    filler_weight = 1;
    for (int k = 2; k <= nfree; ++k) filler_weight *= static_cast<std::uint64_t>(k);
    felems.clear();
    std::vector<int> cnt(static_cast<size_t>(v), 0);
    for (int e = 0; e < v; ++e)
      if (found >> e & 1) {
        felems.push_back(e);
        for (const auto& [m, c] : trade.coeffs)
          if (m >> e & 1) ++cnt[static_cast<size_t>(e)];
      }
    std::sort(felems.begin(), felems.end(),
              [&](int a, int b) { return cnt[static_cast<size_t>(a)] < cnt[static_cast<size_t>(b)]; });
    has_best = false;
    ties = 0;
    best_masks.assign(n, 0);
    best_coeffs.assign(n, 0);
    for (int swap = 0; swap < 2; ++swap) {
      const std::int32_t s = swap ? -1 : 1;
      for (const auto& [y, cy] : trade.coeffs) {
        for (size_t j = 0; j < n; ++j) {
          omask[j] = trade.coeffs[j].first ^ y;
          ocoef[j] = s * trade.coeffs[j].second;
        }
        std::fill(prefix[0].begin(), prefix[0].end(), 0);
        dfs(0, 0);
      }
    }
  }
};

}  // namespace

SignedTrade apply_transform(const SignedTrade& trade, const Transform& g) {
  if (static_cast<int>(g.perm.size()) != trade.v) throw std::invalid_argument("transform: bad permutation size");
  std::vector<std::pair<Block, std::int64_t>> terms;
  terms.reserve(trade.coeffs.size());
  const std::int64_t s = g.swap_legs ? -1 : 1;
  for (const auto& [m, c] : trade.coeffs) terms.emplace_back(permute_mask(m ^ g.shiftY, g.perm), s * c);
  return SignedTrade::from_terms(trade.v, std::move(terms));
}

std::uint64_t group_order(int v) {
  std::uint64_t out = std::uint64_t{2} << v;
  for (int k = 2; k <= v; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

CanonResult canonicalize(const SignedTrade& trade) {
  if (trade.is_void()) return CanonResult{CanonicalKey{}, group_order(trade.v)};
  Searcher s;
  s.search(trade);
  return CanonResult{serialize(trade.v, s.best_masks, s.best_coeffs), s.ties};
}

CanonicalKey canonical_key(const SignedTrade& trade) { return canonicalize(trade).key; }

SignedTrade trade_from_key(const CanonicalKey& key) {
  if (key.size() < 3) throw std::invalid_argument("trade_from_key: key too short");
  const auto byte = [&](size_t i) { return static_cast<std::uint8_t>(key[i]); };
  const int v = byte(0);
  const size_t n = byte(1) | static_cast<size_t>(byte(2)) << 8;
  if (key.size() != 3 + 8 * n) throw std::invalid_argument("trade_from_key: bad key length");
  std::vector<std::pair<Block, std::int64_t>> terms;
  terms.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    Block m = 0;
    std::uint32_t c = 0;
    for (int b = 0; b < 4; ++b) m |= static_cast<Block>(byte(3 + 4 * j + static_cast<size_t>(b))) << (8 * b);
    for (int b = 0; b < 4; ++b)
      c |= static_cast<std::uint32_t>(byte(3 + 4 * (n + j) + static_cast<size_t>(b))) << (8 * b);
    terms.emplace_back(m, static_cast<std::int32_t>(c));
  }
  return SignedTrade::from_terms(v, std::move(terms));
}

bool are_equivalent(const SignedTrade& a, const SignedTrade& b) {
  if (a.v != b.v) throw std::invalid_argument("are_equivalent: universe mismatch");
  return canonical_key(a) == canonical_key(b);
}

std::uint64_t aut_size(const SignedTrade& trade) { return canonicalize(trade).aut; }

}  // namespace tradeforge
