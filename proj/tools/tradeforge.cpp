#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tradeforge/anf.hpp"
#include "tradeforge/canon.hpp"
#include "tradeforge/construct.hpp"
#include "tradeforge/enumerate.hpp"
#include "tradeforge/gf2span.hpp"
#include "tradeforge/io.hpp"

namespace tf = tradeforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

std::vector<tf::SignedTrade> load_trades(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return tf::read_trades(in);
}

std::string key_hex(const tf::CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out.empty() ? "void" : out;
}

int cmd_enumerate(int t, int v, std::int64_t max_vol, const std::string& out_path, int jobs,
                  std::uint64_t budget) {
  tf::Enumerator en(budget, jobs);
  if (max_vol < 0) max_vol = tf::Enumerator::default_cap(t);
  const tf::ClassTable& table = en.level({t, v, max_vol});
  const tf::DoubleCount dc = en.double_count({t, v, max_vol});
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitError;
    }
    os = &file;
  }
  for (const auto& rec : table.classes) *os << tf::to_json(rec.rep) << "\n";
  // sidecar summary
  json summary;
  summary["t"] = t;
  summary["v"] = v;
  summary["max_vol"] = max_vol;
  json cells = json::object();
  for (std::int64_t vol = 0; vol <= max_vol; ++vol) {
    const tf::CellCounts c = table.cell(vol);
    if (!c.all) continue;
    cells[std::to_string(vol)] = {{"all", c.all},
                                  {"nondegenerate", c.nondegenerate},
                                  {"simple", c.simple},
                                  {"nondegenerate_simple", c.nondegenerate_simple}};
  }
  summary["cells"] = cells;
  json auts = json::array();
  for (const auto& rec : table.classes) auts.push_back(rec.aut);
  summary["aut_sizes"] = auts;
  summary["double_count"] = {{"lhs", dc.lhs}, {"rhs", dc.rhs}, {"pass", dc.pass}};
  if (!out_path.empty()) {
    std::ofstream side(out_path + ".summary.json");
    side << summary.dump(2) << "\n";
  } else {
    std::cerr << summary.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_tables(int t, int v_max, std::int64_t max_vol, int jobs, std::uint64_t budget) {
  tf::Enumerator en(budget, jobs);
  if (max_vol < 0) max_vol = tf::Enumerator::default_cap(t);
  std::cout << en.table_report(t, v_max, max_vol);
  return kExitOk;
}

int cmd_verify(int t, const std::string& path) {
  bool ok = true;
  size_t idx = 0;
  for (const auto& trade : load_trades(path)) {
    ++idx;
    if (!tf::is_trade(trade, t)) {
      std::cout << "record " << idx << ": FAIL\n";
      ok = false;
    }
  }
  std::cout << (ok ? "all records pass" : "verification failed") << "\n";
  return ok ? kExitOk : kExitVerify;
}

int cmd_classify(int t, const std::string& path, bool pretty) {
  for (const auto& trade : load_trades(path)) {
    const tf::TradeStats st = tf::stats(trade);
    json rec;
    rec["volume"] = st.volume;
    rec["foundation_size"] = tf::popcount(st.foundation);
    rec["afrk"] = tf::affine_rank(trade);
    rec["simple"] = trade.is_simple();
    rec["degenerate"] = trade.is_void() ? false : tf::is_degenerate(trade);
    if (t >= 0 && !trade.is_void()) {
      const tf::Unitrade u = tf::unitrade_of(trade);
      if (!u.blocks.empty() && tf::is_unitrade(u, t)) {
        try {
          const tf::KasamiClass kc = tf::kasami_classify(u, t);
          rec["kasami"] = tf::to_string(kc.tag);
          if (kc.i >= 0) rec["kasami_i"] = kc.i;
        } catch (const std::exception& e) {
          rec["kasami"] = std::string("error: ") + e.what();
        }
      }
    }
    if (pretty) {
      json blocks = json::array();
      for (const auto& [m, c] : trade.coeffs)
        blocks.push_back(json::array({tf::format_tuple(m, trade.v), c}));
      rec["coeffs_pretty"] = blocks;
    }
    std::cout << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_canon(const std::string& path) {
  for (const auto& trade : load_trades(path)) {
    const tf::CanonResult cr = tf::canonicalize(trade);
    std::cout << key_hex(cr.key) << " aut=" << cr.aut << "\n";
  }
  return kExitOk;
}

int cmd_split(int t, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  for (const auto& u : tf::read_unitrades(in)) {
    const tf::SplitResult res = tf::split_unitrade(u, t);
    switch (res.status) {
      case tf::SplitStatus::Found: std::cout << tf::to_json(res.trade) << "\n"; break;
      case tf::SplitStatus::None: std::cout << "NONE\n"; break;
      case tf::SplitStatus::Unknown: std::cout << "UNKNOWN\n"; break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trade enumeration and construction toolkit"};
  app.require_subcommand(1);

  int t = 2, v = 5, v_max = 5, jobs = 1;
  std::int64_t max_vol = -1;
  std::uint64_t budget = 0;
  std::string file, out_path;
  bool pretty = false;

  auto* c_enum = app.add_subcommand("enumerate", "enumerate equivalence classes");
  c_enum->add_option("--t", t)->required();
  c_enum->add_option("--v", v)->required();
  c_enum->add_option("--max-vol", max_vol);
  c_enum->add_option("--out", out_path);
  c_enum->add_option("--jobs", jobs);
  c_enum->add_option("--budget", budget);

  auto* c_tables = app.add_subcommand("tables", "print the class-count grid");
  c_tables->add_option("--t", t)->required();
  c_tables->add_option("--v-max", v_max)->required();
  c_tables->add_option("--max-vol", max_vol);
  c_tables->add_option("--jobs", jobs);
  c_tables->add_option("--budget", budget);

  auto* c_verify = app.add_subcommand("verify", "check every record is a [t]-trade");
  c_verify->add_option("--t", t)->required();
  c_verify->add_option("file", file)->required();

  auto* c_classify = app.add_subcommand("classify", "per-record invariants");
  c_classify->add_option("file", file)->required();
  c_classify->add_option("--t", t)->default_val(-1);
  c_classify->add_flag("--pretty", pretty);

  auto* c_construct = app.add_subcommand("construct", "emit a trade family");
  std::string family = "minimal";
  int ci = 0;
  c_construct->add_option("family", family)
      ->check(CLI::IsMember({"minimal", "spectrum-ii", "spectrum-iii", "vol3", "vol6"}));
  c_construct->add_option("--t", t);
  c_construct->add_option("--i", ci);

  auto* c_canon = app.add_subcommand("canon", "canonical keys and aut sizes");
  c_canon->add_option("file", file)->required();

  auto* c_split = app.add_subcommand("split", "split unitrades into simple trades");
  c_split->add_option("--t", t)->required();
  c_split->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_enum->parsed()) return cmd_enumerate(t, v, max_vol, out_path, jobs, budget);
    if (c_tables->parsed()) return cmd_tables(t, v_max, max_vol, jobs, budget);
    if (c_verify->parsed()) return cmd_verify(t, file);
    if (c_classify->parsed()) return cmd_classify(t, file, pretty);
    if (c_canon->parsed()) return cmd_canon(file);
    if (c_split->parsed()) return cmd_split(t, file);
    if (c_construct->parsed()) {
      if (family == "minimal") {
        std::vector<std::pair<tf::Block, tf::Block>> pairs;
        for (int k = 0; k <= t; ++k)
          pairs.emplace_back(tf::bit_of(2 * k + 1), tf::bit_of(2 * k + 2));
        std::cout << tf::to_json(tf::minimal_trade(2 * t + 2, 0, pairs)) << "\n";
      } else if (family == "spectrum-ii" || family == "spectrum-iii") {
        const auto fam = family == "spectrum-ii" ? tf::SpectrumFamily::FormII
                                                 : tf::SpectrumFamily::FormIII;
        std::cout << tf::to_json(tf::spectrum_trade(t, ci, fam)) << "\n";
      } else if (family == "vol3") {
        std::cout << tf::to_json(tf::vol3_template(
                         4, {tf::Block{1}, tf::Block{2}, tf::Block{12}},
                         {tf::Block{4}, tf::Block{8}, tf::Block{3}}, 0))
                  << "\n";
      } else if (family == "vol6") {
        std::cout << tf::to_json(tf::vol6_template(
                         4, tf::Vol6Kind::P33,
                         {0, {tf::Block{1}, tf::Block{2}, tf::Block{12}},
                          {tf::Block{4}, tf::Block{8}, tf::Block{3}}}))
                  << "\n";
      }
      return kExitOk;
    }
  } catch (const tf::EnumerationAborted& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
