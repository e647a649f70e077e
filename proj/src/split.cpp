#include <algorithm>
#include <vector>

#include "tradeforge/enumerate.hpp"

namespace tradeforge {

namespace {

struct Constraint {
  std::vector<int> vars;  // indices of blocks covering the subset
  int sum = 0;            // signed sum over assigned vars
  int remaining = 0;
};

struct SplitSearch {
  const Unitrade* u = nullptr;
  int t = 0;
  std::uint64_t nodes = 0, budget = 0;
  bool aborted = false;
  std::vector<Constraint> cons;
  std::vector<std::vector<int>> var_cons;  // per variable, constraint indices
  std::vector<int> sign;

  bool assign(int var, int s) {
    sign[static_cast<size_t>(var)] = s;
    bool ok = true;  // apply every update so unassign can revert them all
    for (int ci : var_cons[static_cast<size_t>(var)]) {
      Constraint& c = cons[static_cast<size_t>(ci)];
      c.sum += s;
      --c.remaining;
      if (std::abs(c.sum) > c.remaining) ok = false;
    }
    return ok;
  }

  void unassign(int var) {
    const int s = sign[static_cast<size_t>(var)];
    sign[static_cast<size_t>(var)] = 0;
    for (int ci : var_cons[static_cast<size_t>(var)]) {
      Constraint& c = cons[static_cast<size_t>(ci)];
      c.sum -= s;
      ++c.remaining;
    }
  }

  bool dfs(int var) {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    const int n = static_cast<int>(u->blocks.size());
    if (var == n) return true;
    for (int s : {1, -1}) {
      const bool ok = assign(var, s);
      if (ok && dfs(var + 1)) return true;
      unassign(var);
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

SplitResult split_unitrade(const Unitrade& u, int t, std::uint64_t node_budget) {
  if (!is_unitrade(u, t)) throw std::invalid_argument("split: input is not a [t]-unitrade");
  if (u.blocks.empty()) return SplitResult{SplitStatus::Found, SignedTrade{u.v, {}}};
  if (u.blocks.size() % 2) return SplitResult{SplitStatus::None, {}};

  SplitSearch search;
  search.u = &u;
  search.t = t;
  search.budget = node_budget;
  search.sign.assign(u.blocks.size(), 0);
  search.var_cons.assign(u.blocks.size(), {});

  // one constraint per subset S of the foundation with |S| <= t: the blocks
  // containing S carry equally many +1 and -1 signs
  const Block found = foundation(u);
  std::vector<Block> subsets;
  for (Block s = found;; s = (s - 1) & found) {
    if (popcount(s) <= t) subsets.push_back(s);
    if (s == 0) break;
  }
  for (Block s : subsets) {
    Constraint c;
    for (size_t j = 0; j < u.blocks.size(); ++j)
      if ((u.blocks[j] & s) == s) c.vars.push_back(static_cast<int>(j));
    if (c.vars.size() % 2) return SplitResult{SplitStatus::None, {}};
    if (c.vars.empty()) continue;
    c.remaining = static_cast<int>(c.vars.size());
    const int ci = static_cast<int>(search.cons.size());
    for (int var : c.vars) search.var_cons[static_cast<size_t>(var)].push_back(ci);
    search.cons.push_back(std::move(c));
  }

  // the leg swap mirrors every signing, so the first block is pinned to +1
  if (!search.assign(0, 1)) return SplitResult{SplitStatus::None, {}};
  if (!search.dfs(1)) {
    if (search.aborted) return SplitResult{SplitStatus::Unknown, {}};
    return SplitResult{SplitStatus::None, {}};
  }
  std::vector<std::pair<Block, std::int64_t>> terms;
  for (size_t j = 0; j < u.blocks.size(); ++j)
    terms.emplace_back(u.blocks[j], search.sign[j]);
  SignedTrade out = SignedTrade::from_terms(u.v, std::move(terms));
  if (!is_trade(out, t) || unitrade_of(out) != u)
    throw std::logic_error("split: signing failed verification");
  return SplitResult{SplitStatus::Found, std::move(out)};
}

}  // namespace tradeforge
