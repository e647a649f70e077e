#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tradeforge/canon.hpp"
#include "tradeforge/trade.hpp"

namespace tradeforge {

struct LevelSpec {
  int t = 0;
  int v = 0;
  std::int64_t vol_cap = 0;

  auto operator<=>(const LevelSpec&) const = default;
};

struct ClassRecord {
  SignedTrade rep;  // the canonical representative (decoded from the key)
  CanonicalKey key;
  std::uint64_t aut = 0;
  std::int64_t volume = 0;
  int foundation_size = 0;
  bool simple = false;
  bool degenerate = false;
};

struct CellCounts {
  std::int64_t all = 0;
  std::int64_t nondegenerate = 0;
  std::int64_t simple = 0;
  std::int64_t nondegenerate_simple = 0;
};

struct ClassTable {
  LevelSpec spec;
  std::vector<ClassRecord> classes;  // sorted by (volume, key); includes the void class

  CellCounts cell(std::int64_t vol) const;
};

struct DoubleCount {
  std::uint64_t lhs = 0;  // sum over classes of group_order(v)/aut
  std::uint64_t rhs = 0;  // labeled trades counted during generation
  bool pass = false;
};

class EnumerationAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SplitStatus { Found, None, Unknown };

struct SplitResult {
  SplitStatus status = SplitStatus::Unknown;
  SignedTrade trade;  // valid when status == Found
};

// Exhaustive +/-1 signing search over the blocks of U subject to even
// coverage splitting equally on every subset of the foundation of size <= t.
SplitResult split_unitrade(const Unitrade& u, int t, std::uint64_t node_budget = 50'000'000);

class Enumerator {
 public:
  // budget caps the total number of labeled trades materialized; exceeded ->
  // EnumerationAborted. 0 means the TRADEFORGE_BUDGET env var or the default.
  explicit Enumerator(std::uint64_t labeled_budget = 0, int jobs = 1);

  const ClassTable& level(const LevelSpec& spec);
  DoubleCount double_count(const LevelSpec& spec);

  // Per-(v, volume) grid in the "a(b) c(d)" convention.
  std::string table_report(int t, int v_max, std::int64_t vol_cap);

  // Replication-parity audit over simple [2]-trades with foundation size 5.
  bool parity_audit(std::string* detail = nullptr);

  std::uint64_t labeled_generated() const { return labeled_count_; }

  static std::int64_t default_cap(int t) { return (std::int64_t{2} << t) - 1; }

 private:
  struct LabeledPool {
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint8_t> masks;
    std::vector<std::int8_t> coeffs;

    size_t size() const { return offsets.size() - 1; }
  };

  const LabeledPool& pool(const LevelSpec& spec);
  void build_level(const LevelSpec& spec);
  void build_zero_level(const LevelSpec& spec);
  const ClassTable& level_with_cap_at_least(int t, int v, std::int64_t vol_cap);
  void charge_labeled(std::uint64_t n);

  std::uint64_t budget_ = 0;
  int jobs_ = 1;
  std::uint64_t labeled_count_ = 0;
  std::map<LevelSpec, ClassTable> tables_;
  std::map<LevelSpec, DoubleCount> counts_;
  std::map<LevelSpec, LabeledPool> pools_;
};

}  // namespace tradeforge
