#include "tradeforge/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

namespace tradeforge {

namespace {

constexpr std::uint64_t kDefaultBudget = 100'000'000;

std::uint64_t env_budget() {
  if (const char* s = std::getenv("TRADEFORGE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long val = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && val > 0) return val;
  }
  return kDefaultBudget;
}

std::vector<std::vector<int>> all_permutations(int v) {
  std::vector<int> p(static_cast<size_t>(v));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Fixed-width labeled form for orbit dedup: (mask, coeff) byte pairs, sorted.
std::string pack_labeled(std::vector<std::pair<std::uint8_t, std::int8_t>>& terms) {
  std::sort(terms.begin(), terms.end());
  std::string s;
  s.reserve(terms.size() * 2);
  for (const auto& [m, c] : terms) {
    s.push_back(static_cast<char>(m));
    s.push_back(static_cast<char>(c));
  }
  return s;
}

std::int64_t positive_volume(const std::vector<std::pair<Block, std::int32_t>>& coeffs) {
  std::int64_t out = 0;
  for (const auto& [m, c] : coeffs)
    if (c > 0) out += c;
  return out;
}

}  // namespace

CellCounts ClassTable::cell(std::int64_t vol) const {
  CellCounts out;
  for (const auto& rec : classes) {
    if (rec.volume != vol) continue;
    ++out.all;
    if (!rec.degenerate) ++out.nondegenerate;
    if (rec.simple) ++out.simple;
    if (rec.simple && !rec.degenerate) ++out.nondegenerate_simple;
  }
  return out;
}

Enumerator::Enumerator(std::uint64_t labeled_budget, int jobs)
    : budget_(labeled_budget ? labeled_budget : env_budget()), jobs_(std::max(jobs, 1)) {}

void Enumerator::charge_labeled(std::uint64_t n) {
  labeled_count_ += n;
  if (labeled_count_ > budget_)
    throw EnumerationAborted("labeled-trade budget exceeded (" + std::to_string(labeled_count_) +
                             " > " + std::to_string(budget_) + ")");
}

const ClassTable& Enumerator::level(const LevelSpec& spec) {
  if (spec.t < 0 || spec.v < 0 || spec.v > kMaxElements || spec.vol_cap < 0)
    throw std::invalid_argument("enumerate: bad level spec");
  auto it = tables_.find(spec);
  if (it == tables_.end()) {
    build_level(spec);
    it = tables_.find(spec);
  }
  return it->second;
}

DoubleCount Enumerator::double_count(const LevelSpec& spec) {
  level(spec);
  return counts_.at(spec);
}

// ---- base level: t = 0, brute force over disjoint equal-size multiset pairs

namespace {

// Nondecreasing multisets of blocks from `universe`, emitted via callback as
// (mask, count) runs appended to `terms`.
template <typename F>
void multisets(const std::vector<Block>& universe, size_t start, std::int64_t max_size,
               std::vector<std::pair<Block, std::int32_t>>& terms, const F& emit) {
  emit(terms);
  if (max_size == 0) return;
  for (size_t i = start; i < universe.size(); ++i) {
    for (std::int32_t mult = 1; mult <= max_size; ++mult) {
      terms.emplace_back(universe[i], mult);
      multisets(universe, i + 1, max_size - mult, terms, emit);
      terms.pop_back();
    }
  }
}

}  // namespace

void Enumerator::build_zero_level(const LevelSpec& spec) {
  // generated labeled; classes by post-hoc canonical dedup
  std::map<CanonicalKey, std::uint64_t> found;
  std::uint64_t rhs = 0;
  std::vector<Block> universe;
  for (Block m = 0; m < (Block{1} << spec.v); ++m) universe.push_back(m);
  std::vector<std::pair<Block, std::int32_t>> pos, neg;
  multisets(universe, 0, spec.vol_cap, pos, [&](const auto& p) {
    std::int64_t volp = 0;
    for (const auto& [m, c] : p) volp += c;
    std::vector<Block> rest;
    for (Block m : universe)
      if (std::none_of(p.begin(), p.end(), [&](const auto& e) { return e.first == m; }))
        rest.push_back(m);
    std::vector<std::pair<Block, std::int32_t>> negbuf;
    multisets(rest, 0, volp, negbuf, [&](const auto& nn) {
      std::int64_t voln = 0;
      for (const auto& [m, c] : nn) voln += c;
      if (voln != volp) return;
      charge_labeled(1);
      ++rhs;
      std::vector<std::pair<Block, std::int64_t>> terms;
      for (const auto& [m, c] : p) terms.emplace_back(m, c);
      for (const auto& [m, c] : nn) terms.emplace_back(m, -static_cast<std::int64_t>(c));
      const SignedTrade trade = SignedTrade::from_terms(spec.v, std::move(terms));
      const CanonResult cr = canonicalize(trade);
      found.emplace(cr.key, cr.aut);
    });
  });
  ClassTable table;
  table.spec = spec;
  std::uint64_t lhs = 0;
  for (const auto& [key, aut] : found) {
    ClassRecord rec;
    rec.key = key;
    rec.aut = aut;
    rec.rep = key.empty() ? SignedTrade{spec.v, {}} : trade_from_key(key);
    rec.volume = stats(rec.rep).volume;
    rec.foundation_size = popcount(foundation(rec.rep));
    rec.simple = rec.rep.is_simple();
    rec.degenerate = rec.rep.is_void() ? false : is_degenerate(rec.rep);
    lhs += group_order(spec.v) / aut;
    table.classes.push_back(std::move(rec));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return std::tie(a.volume, a.key) < std::tie(b.volume, b.key);
            });
  counts_[spec] = DoubleCount{lhs, rhs, lhs == rhs};
  tables_[spec] = std::move(table);
}

// ---- labeled pools

const Enumerator::LabeledPool& Enumerator::pool(const LevelSpec& spec) {
  auto it = pools_.find(spec);
  if (it != pools_.end()) return it->second;
  if (spec.v > 8 || spec.vol_cap > 127)
    throw std::invalid_argument("labeled pool: out of packed capacity");
  LabeledPool pl;
  auto append = [&](const std::string& packed) {
    for (size_t i = 0; i < packed.size(); i += 2) {
      pl.masks.push_back(static_cast<std::uint8_t>(packed[i]));
      pl.coeffs.push_back(static_cast<std::int8_t>(packed[i + 1]));
    }
    pl.offsets.push_back(static_cast<std::uint32_t>(pl.masks.size()));
  };
  if (spec.t == 0) {
    // direct labeled generation, no canonicalization
    std::vector<Block> universe;
    for (Block m = 0; m < (Block{1} << spec.v); ++m) universe.push_back(m);
    std::vector<std::pair<Block, std::int32_t>> pos;
    std::vector<std::string> all;
    multisets(universe, 0, spec.vol_cap, pos, [&](const auto& p) {
      std::int64_t volp = 0;
      for (const auto& [m, c] : p) volp += c;
      std::vector<Block> rest;
      for (Block m : universe)
        if (std::none_of(p.begin(), p.end(), [&](const auto& e) { return e.first == m; }))
          rest.push_back(m);
      std::vector<std::pair<Block, std::int32_t>> negbuf;
      multisets(rest, 0, volp, negbuf, [&](const auto& nn) {
        std::int64_t voln = 0;
        for (const auto& [m, c] : nn) voln += c;
        if (voln != volp) return;
        charge_labeled(1);
        std::vector<std::pair<std::uint8_t, std::int8_t>> terms;
        for (const auto& [m, c] : p) terms.emplace_back(static_cast<std::uint8_t>(m), static_cast<std::int8_t>(c));
        for (const auto& [m, c] : nn)
          terms.emplace_back(static_cast<std::uint8_t>(m), static_cast<std::int8_t>(-c));
        all.push_back(pack_labeled(terms));
      });
    });
    std::sort(all.begin(), all.end());
    for (const auto& s : all) append(s);
  } else {
    const ClassTable& table = level(spec);
    const auto perms = all_permutations(spec.v);
    for (const auto& rec : table.classes) {
      std::vector<std::string> orbit;
      const size_t n = rec.rep.coeffs.size();
      std::vector<std::pair<std::uint8_t, std::int8_t>> terms(n);
      for (const auto& perm : perms) {
        // permuted-mask lookup for this permutation
        std::array<std::uint8_t, 256> tab{};
        for (Block m = 0; m < (Block{1} << spec.v); ++m) {
          Block out = 0;
          for (int i = 0; i < spec.v; ++i)
            if (m >> i & 1) out |= Block{1} << perm[static_cast<size_t>(i)];
          tab[m] = static_cast<std::uint8_t>(out);
        }
        for (Block y = 0; y < (Block{1} << spec.v); ++y) {
          for (int swap = 0; swap < 2; ++swap) {
            for (size_t j = 0; j < n; ++j) {
              terms[j].first = tab[rec.rep.coeffs[j].first ^ y];
              terms[j].second =
                  static_cast<std::int8_t>(swap ? -rec.rep.coeffs[j].second : rec.rep.coeffs[j].second);
            }
            orbit.push_back(pack_labeled(terms));
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      if (orbit.size() != group_order(spec.v) / rec.aut)
        throw std::logic_error("orbit size disagrees with the automorphism count");
      charge_labeled(orbit.size());
      for (const auto& s : orbit) append(s);
    }
  }
  return pools_.emplace(spec, std::move(pl)).first->second;
}

// ---- recursive step

void Enumerator::build_level(const LevelSpec& spec) {
  if (spec.t == 0) {
    build_zero_level(spec);
    return;
  }
  ClassTable table;
  table.spec = spec;
  std::uint64_t lhs = 0, rhs = 0;
  std::map<CanonicalKey, std::uint64_t> found;  // key -> aut

  if (spec.v == 0) {
    found.emplace(CanonicalKey{}, group_order(0));
    rhs = 1;
  } else {
    const ClassTable& prev = level({spec.t, spec.v - 1, spec.vol_cap});
    const LabeledPool& pl = pool({spec.t - 1, spec.v - 1, spec.vol_cap / 2});
    const Block xv = bit_of(spec.v);
    const std::int64_t half = spec.vol_cap / 2;
    const size_t nreps = prev.classes.size();
    const size_t npool = pl.size();

    struct Shard {
      std::map<CanonicalKey, std::uint64_t> found;
      std::uint64_t rhs = 0;
    };
    std::vector<Shard> shards(static_cast<size_t>(jobs_));

    auto worker = [&](size_t wid) {
      Shard& sh = shards[wid];
      std::vector<std::pair<Block, std::int32_t>> a, r;
      for (size_t ri = wid; ri < nreps; ri += static_cast<size_t>(jobs_)) {
        const ClassRecord& rep = prev.classes[ri];
        const std::uint64_t weight = group_order(spec.v - 1) / rep.aut;
        const auto& rc = rep.rep.coeffs;
        for (size_t li = 0; li < npool; ++li) {
          const std::uint32_t lo = pl.offsets[li], hi = pl.offsets[li + 1];
          // A = T' - T'' as a sorted merge; volumes in one pass
          a.clear();
          std::int64_t pos_a = 0, vol_l = 0;
          size_t i = 0;
          std::uint32_t j = lo;
          while (i < rc.size() || j < hi) {
            Block bm = j < hi ? pl.masks[j] : 0;
            if (j == hi || (i < rc.size() && rc[i].first < bm)) {
              a.push_back(rc[i]);
              if (rc[i].second > 0) pos_a += rc[i].second;
              ++i;
            } else if (i == rc.size() || bm < rc[i].first) {
              const std::int32_t c = -pl.coeffs[j];
              a.emplace_back(bm, c);
              if (c > 0) pos_a += c;
              if (c < 0) vol_l -= c;
              ++j;
            } else {
              const std::int32_t c = rc[i].second - pl.coeffs[j];
              if (c != 0) {
                a.emplace_back(bm, c);
                if (c > 0) pos_a += c;
              }
              if (pl.coeffs[j] > 0) vol_l += pl.coeffs[j];
              ++i, ++j;
            }
          }
          if (pos_a + vol_l > spec.vol_cap) continue;
          auto emit = [&](bool branch2) {
            r.clear();
            if (!branch2) {
              r = a;
              for (std::uint32_t k = lo; k < hi; ++k)
                r.emplace_back(static_cast<Block>(pl.masks[k]) | xv, pl.coeffs[k]);
            } else {
              for (std::uint32_t k = lo; k < hi; ++k)
                r.emplace_back(static_cast<Block>(pl.masks[k]), pl.coeffs[k]);
              for (const auto& [m, c] : a) r.emplace_back(m | xv, c);
            }
            SignedTrade trade;
            trade.v = spec.v;
            trade.coeffs = r;
            const CanonResult cr = canonicalize(trade);
            sh.found.emplace(cr.key, cr.aut);
            sh.rhs += weight;
          };
          emit(false);
          if (pos_a > half) emit(true);
        }
      }
    };
    if (jobs_ == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (size_t w = 0; w < static_cast<size_t>(jobs_); ++w) threads.emplace_back(worker, w);
      for (auto& th : threads) th.join();
    }
    for (auto& sh : shards) {
      rhs += sh.rhs;
      found.merge(sh.found);  // collisions carry identical aut values
    }
  }

  for (const auto& [key, aut] : found) {
    ClassRecord rec;
    rec.key = key;
    rec.aut = aut;
    rec.rep = key.empty() ? SignedTrade{spec.v, {}} : trade_from_key(key);
    rec.volume = stats(rec.rep).volume;
    rec.foundation_size = popcount(foundation(rec.rep));
    rec.simple = rec.rep.is_simple();
    rec.degenerate = rec.rep.is_void() ? false : is_degenerate(rec.rep);
    if (!is_trade(rec.rep, std::min(spec.t, spec.v)))
      throw std::logic_error("enumeration emitted a non-trade");
    lhs += group_order(spec.v) / aut;
    table.classes.push_back(std::move(rec));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const ClassRecord& x, const ClassRecord& y) {
              return std::tie(x.volume, x.key) < std::tie(y.volume, y.key);
            });
  counts_[spec] = DoubleCount{lhs, rhs, lhs == rhs};
  tables_[spec] = std::move(table);
}

const ClassTable& Enumerator::level_with_cap_at_least(int t, int v, std::int64_t vol_cap) {
  for (const auto& [spec, table] : tables_)
    if (spec.t == t && spec.v == v && spec.vol_cap >= vol_cap) return table;
  return level({t, v, vol_cap});
}

std::string Enumerator::table_report(int t, int v_max, std::int64_t vol_cap) {
  std::ostringstream os;
  std::vector<std::int64_t> vols;
  for (std::int64_t vol = std::int64_t{1} << t; vol <= vol_cap; ++vol) vols.push_back(vol);
  os << std::left << std::setw(6) << "v\\vol";
  for (std::int64_t vol : vols) os << std::setw(16) << vol;
  os << '\n';
  for (int v = t + 1; v <= v_max; ++v) {
    const ClassTable& table = level({t, v, vol_cap});
    os << std::setw(6) << v;
    for (std::int64_t vol : vols) {
      const CellCounts c = table.cell(vol);
      std::ostringstream cell;
      if (c.all == 0) {
        cell << "0";
      } else {
        cell << c.all << "(" << c.nondegenerate << ") " << c.simple << "("
             << c.nondegenerate_simple << ")";
      }
      os << std::setw(16) << cell.str();
    }
    os << '\n';
  }
  return os.str();
}

bool Enumerator::parity_audit(std::string* detail) {
  const ClassTable& table = level_with_cap_at_least(2, 5, 10);
  for (const auto& rec : table.classes) {
    if (!rec.simple) continue;
    if (rec.volume != 6 && rec.volume != 8 && rec.volume != 10) continue;
    for (Block y = 0; y < 32; ++y) {
      const SignedTrade m = shift(rec.rep, y);
      const Block found = foundation(m);
      if (popcount(found) != 5) continue;
      int odd_count = 0;
      bool values_ok = true;
      for (int e = 1; e <= 5; ++e) {
        if (!(found & bit_of(e))) continue;
        const std::int64_t r = replication(m, bit_of(e));
        if (r % 2 == 0) continue;
        ++odd_count;
        if (rec.volume == 6 && r != 3) values_ok = false;
        if (rec.volume == 8 && r != 3 && r != 5) values_ok = false;
        if (rec.volume == 10 && r != 5) values_ok = false;
      }
      const bool want_odd = rec.volume != 8;
      if (!values_ok || (odd_count % 2 == 1) != want_odd) {
        if (detail) {
          std::ostringstream os;
          os << "violation at volume " << rec.volume << ", shift " << y << ", odd count "
             << odd_count;
          *detail = os.str();
        }
        return false;
      }
    }
  }
  if (detail) *detail = "ok";
  return true;
}

}  // namespace tradeforge
