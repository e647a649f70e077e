#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "tradeforge/anf.hpp"
#include "tradeforge/enumerate.hpp"
#include "tradeforge/gf2span.hpp"

namespace tf = tradeforge;

namespace {

// Every signed trade over 2^[v] with volume <= cap, by exhaustive coefficient
// assignment; returns canonical keys per volume.
std::map<std::int64_t, std::set<tf::CanonicalKey>> brute_classes(int t, int v,
                                                                 std::int64_t cap) {
  std::map<std::int64_t, std::set<tf::CanonicalKey>> out;
  std::vector<std::pair<tf::Block, std::int64_t>> terms;
  const tf::Block last = tf::full_mask(v);

  auto rec = [&](auto&& self, tf::Block next, std::int64_t pos_left,
                 std::int64_t neg_left) -> void {
    if (next > last || (pos_left == 0 && neg_left == 0)) {
      const auto trade = tf::SignedTrade::from_terms(v, terms);
      if (!tf::is_trade(trade, 0)) return;
      if (tf::is_trade(trade, t))
        out[tf::stats(trade).volume].insert(tf::canonical_key(trade));
      return;
    }
    for (std::int64_t c = -neg_left; c <= pos_left; ++c) {
      if (c != 0) terms.emplace_back(next, c);
      self(self, next + 1, pos_left - std::max<std::int64_t>(c, 0),
           neg_left + std::min<std::int64_t>(c, 0));
      if (c != 0) terms.pop_back();
    }
  };
  rec(rec, 0, cap, cap);
  return out;
}

}  // namespace

TEST_CASE("level (1,3,3)") {
  tf::Enumerator en;
  const auto& table = en.level({1, 3, 3});
  CHECK(table.cell(0).all == 1);
  CHECK(table.cell(2).all == 2);
  CHECK(table.cell(2).simple == 2);
  CHECK(table.cell(2).nondegenerate == 1);
  CHECK(table.cell(3).all == 1);
  CHECK(table.cell(3).simple == 0);
  CHECK(table.cell(3).nondegenerate == 1);
  for (const auto& rec : table.classes) {
    CHECK(tf::is_trade(rec.rep, 1));
    CHECK(tf::canonical_key(rec.rep) == rec.key);
  }
}

TEST_CASE("level (1,4,3)") {
  tf::Enumerator en;
  const auto& table = en.level({1, 4, 3});
  CHECK(table.cell(2).all == 4);
  CHECK(table.cell(2).nondegenerate == 1);
  CHECK(table.cell(3).all == 5);
  CHECK(table.cell(3).nondegenerate == 4);
  CHECK(table.cell(3).simple == 3);
  CHECK(table.cell(3).nondegenerate_simple == 3);
}

TEST_CASE("level (2,4,7)") {
  tf::Enumerator en;
  const auto& table = en.level({2, 4, 7});
  CHECK(table.cell(4).all == 2);
  CHECK(table.cell(4).simple == 2);
  CHECK(table.cell(5).all == 0);
  CHECK(table.cell(6).all == 2);
  CHECK(table.cell(6).simple == 0);
  CHECK(table.cell(6).nondegenerate == 2);
  CHECK(table.cell(7).all == 0);
}

TEST_CASE("volume caps below 2^t leave only the void class") {
  tf::Enumerator en;
  CHECK(en.level({1, 3, 0}).classes.size() == 1);
  CHECK(en.level({2, 4, 3}).classes.size() == 1);
  CHECK(en.level({1, 3, 0}).classes[0].rep.is_void());
}

TEST_CASE("double count (1,2,2)") {
  tf::Enumerator en;
  const auto dc = en.double_count({1, 2, 2});
  CHECK(dc.lhs == 3);
  CHECK(dc.rhs == 3);
  CHECK(dc.pass);
}

TEST_CASE("double count passes on every small level") {
  tf::Enumerator en;
  for (const tf::LevelSpec spec :
       {tf::LevelSpec{1, 3, 3}, tf::LevelSpec{1, 4, 3}, tf::LevelSpec{2, 4, 7},
        tf::LevelSpec{2, 5, 7}, tf::LevelSpec{3, 5, 15}})
    CHECK(en.double_count(spec).pass);
}

TEST_CASE("enumeration matches exhaustive search") {
  for (const auto& [t, v, cap] :
       std::vector<std::tuple<int, int, std::int64_t>>{{1, 2, 3}, {1, 3, 3}, {2, 3, 4}}) {
    tf::Enumerator en;
    const auto& table = en.level({t, v, cap});
    const auto brute = brute_classes(t, v, cap);
    std::map<std::int64_t, std::set<tf::CanonicalKey>> got;
    for (const auto& rec : table.classes) got[rec.volume].insert(rec.key);
    CHECK(got == brute);
  }
}

TEST_CASE("projections of representatives stay in the level") {
  tf::Enumerator en;
  const auto& table = en.level({2, 5, 7});
  std::set<tf::CanonicalKey> keys;
  for (const auto& rec : table.classes) keys.insert(rec.key);
  for (const auto& rec : table.classes)
    for (int i = 1; i <= 5; ++i) {
      const auto p = tf::projection(rec.rep, i);
      CHECK(tf::is_trade(p, 2));
      CHECK(keys.count(tf::canonical_key(p)) == 1);
    }
}

TEST_CASE("table report") {
  tf::Enumerator en;
  const auto report = en.table_report(1, 3, 3);
  CHECK(report.find("2(1) 2(1)") != std::string::npos);
  CHECK(report.find("1(1) 0(0)") != std::string::npos);
}

TEST_CASE("budget aborts the walk") {
  tf::Enumerator en(5);
  CHECK_THROWS_AS(en.level({1, 4, 3}), tf::EnumerationAborted);
}

TEST_CASE("unitrade gap lemma on generated classes") {
  tf::Enumerator en;
  for (const auto& rec : en.level({2, 5, 7}).classes) {
    if (rec.rep.is_void()) continue;
    const auto u = tf::unitrade_of(rec.rep);
    const std::int64_t uvol = static_cast<std::int64_t>(u.blocks.size()) / 2;
    if (uvol == 0 || uvol >= 8) continue;
    CHECK((uvol == 4 || uvol == 6 || uvol == 7));  // 2^{t+1} - 2^i
  }
}

TEST_CASE("split of a splittable unitrade") {
  const auto u = tf::Unitrade::from_blocks(2, {0, 1, 2, 3});
  const auto res = tf::split_unitrade(u, 1);
  REQUIRE(res.status == tf::SplitStatus::Found);
  CHECK(tf::is_trade(res.trade, 1));
  CHECK(res.trade.is_simple());
  CHECK(tf::unitrade_of(res.trade) == u);
}

TEST_CASE("split recovers a volume-3 trade from its shadow") {
  const auto u = tf::Unitrade::from_blocks(
      5, {tf::parse_tuple("00111"), tf::parse_tuple("10011"), tf::parse_tuple("01011"),
          tf::parse_tuple("11001"), tf::parse_tuple("11100"), tf::parse_tuple("11010")});
  const auto res = tf::split_unitrade(u, 1);
  REQUIRE(res.status == tf::SplitStatus::Found);
  CHECK(res.trade.is_simple());
  CHECK(tf::is_trade(res.trade, 1));
  CHECK(tf::stats(res.trade).volume == 3);
  CHECK(tf::unitrade_of(res.trade) == u);
}

TEST_CASE("tiny split budget reports unknown") {
  tf::Anf f{6, std::vector<std::uint8_t>(64, 0)};
  f.coeffs[3] = f.coeffs[12] = f.coeffs[48] = 1;
  const auto u = tf::set_from_anf(f);
  CHECK(tf::split_unitrade(u, 3, 10).status == tf::SplitStatus::Unknown);
}
