#include "tradeforge/io.hpp"

#include <istream>
#include <stdexcept>

#include "json.hpp"

namespace tradeforge {

using nlohmann::json;

std::string to_json(const SignedTrade& trade) {
  json coeffs = json::array();
  for (const auto& [m, c] : trade.coeffs) coeffs.push_back(json::array({m, c}));
  return json{{"v", trade.v}, {"coeffs", std::move(coeffs)}}.dump();
}

std::string to_json(const Unitrade& u) {
  return json{{"v", u.v}, {"blocks", u.blocks}}.dump();
}

SignedTrade trade_from_json(const std::string& line) {
  const json j = json::parse(line);
  std::vector<std::pair<Block, std::int64_t>> terms;
  for (const auto& e : j.at("coeffs")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("trade record: malformed coeff entry");
    const std::int64_t c = e.at(1).get<std::int64_t>();
    if (c == 0) throw std::invalid_argument("trade record: zero coefficient");
    terms.emplace_back(e.at(0).get<Block>(), c);
  }
  return SignedTrade::from_terms(j.at("v").get<int>(), std::move(terms));
}

Unitrade unitrade_from_json(const std::string& line) {
  const json j = json::parse(line);
  return Unitrade::from_blocks(j.at("v").get<int>(), j.at("blocks").get<std::vector<Block>>());
}

namespace {

template <typename T, T (*Parse)(const std::string&)>
std::vector<T> read_lines(std::istream& in) {
  std::vector<T> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Parse(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::vector<SignedTrade> read_trades(std::istream& in) {
  return read_lines<SignedTrade, trade_from_json>(in);
}

std::vector<Unitrade> read_unitrades(std::istream& in) {
  return read_lines<Unitrade, unitrade_from_json>(in);
}

}  // namespace tradeforge
