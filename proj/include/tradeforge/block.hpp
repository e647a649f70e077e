#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tradeforge {

// A block is a subset of V = {1,...,v}, bit (i-1) set <=> element i in the block.
// XOR of masks is the symmetric difference of the sets.
using Block = std::uint32_t;

inline constexpr int kMaxElements = 32;

inline int popcount(Block m) { return std::popcount(m); }

inline Block bit_of(int element) {
  if (element < 1 || element > kMaxElements)
    throw std::invalid_argument("element out of range: " + std::to_string(element));
  return Block{1} << (element - 1);
}

inline Block full_mask(int v) {
  if (v < 0 || v > kMaxElements) throw std::invalid_argument("universe size out of range");
  return v == kMaxElements ? ~Block{0} : (Block{1} << v) - 1;
}

// "0110010" (v=7) <-> {2,3,6}: character j (0-based) is element j+1.
inline std::string format_tuple(Block m, int v) {
  std::string s(static_cast<size_t>(v), '0');
  for (int i = 0; i < v; ++i)
    if (m >> i & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

inline Block parse_tuple(const std::string& s) {
  if (s.size() > kMaxElements) throw std::invalid_argument("tuple string too long");
  Block m = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      m |= Block{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("tuple string must be 0/1");
  }
  return m;
}

}  // namespace tradeforge
