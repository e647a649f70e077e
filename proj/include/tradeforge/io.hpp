#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tradeforge/trade.hpp"

namespace tradeforge {

// JSON-Lines records: {"v":N,"coeffs":[[mask,coeff],...]} for signed trades,
// {"v":N,"blocks":[mask,...]} for unitrades. One record per line.
std::string to_json(const SignedTrade& trade);
std::string to_json(const Unitrade& u);

SignedTrade trade_from_json(const std::string& line);
Unitrade unitrade_from_json(const std::string& line);

std::vector<SignedTrade> read_trades(std::istream& in);
std::vector<Unitrade> read_unitrades(std::istream& in);

}  // namespace tradeforge
