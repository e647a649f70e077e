#include "tradeforge/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "tradeforge/gf2span.hpp"

namespace tradeforge {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<Block> linear_span(const std::vector<Block>& gens) {
  std::vector<Block> out{0};
  for (Block g : gens) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Expands (1-A1)(1-A2)(1-A3) - (1-B1)(1-B2)(1-B3) term by term; blocks may
// overlap, so this cannot go through product_expand.
SignedTrade expand_3x3_difference(int v, const std::array<Block, 3>& a,
                                  const std::array<Block, 3>& b) {
  std::vector<std::pair<Block, std::int64_t>> terms;
  for (int side = 0; side < 2; ++side) {
    const std::array<Block, 3>& f = side ? b : a;
    const std::int64_t sign = side ? -1 : 1;
    for (int s = 0; s < 8; ++s) {
      Block m = 0;
      int bits = 0;
      for (int j = 0; j < 3; ++j)
        if (s >> j & 1) {
          m ^= f[static_cast<size_t>(j)];
          ++bits;
        }
      terms.emplace_back(m, sign * (bits % 2 ? -1 : 1));
    }
  }
  return SignedTrade::from_terms(v, std::move(terms));
}

bool pairwise_disjoint(std::span<const Block> blocks) {
  Block seen = 0;
  for (Block b : blocks) {
    if (seen & b) return false;
    seen |= b;
  }
  return true;
}

SignedTrade checked_vol6(SignedTrade trade) {
  require(volume(trade) == 6 && stats(trade).volume == 6, "vol6 template: expansion is not volume 6");
  require(is_trade(trade, 2), "vol6 template: expansion is not a [2]-trade");
  return trade;
}

// Sorted triples of pairwise disjoint subsets of `pool`; empties admitted only
// when allow_empty (then Y1 = Y2 = {} duplicates are the sole repeats).
std::vector<std::array<Block, 3>> disjoint_triples(Block pool, bool allow_empty) {
  std::vector<Block> subs;
  for (Block s = pool;; s = (s - 1) & pool) {
    subs.push_back(s);
    if (s == 0) break;
  }
  std::sort(subs.begin(), subs.end());
  std::vector<std::array<Block, 3>> out;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (!allow_empty && !subs[i]) continue;
    for (size_t j = i; j < subs.size(); ++j) {
      if (subs[i] & subs[j]) continue;
      if (subs[i] == subs[j] && subs[i]) continue;
      if (!allow_empty && !subs[j]) continue;
      for (size_t k = j; k < subs.size(); ++k) {
        if ((subs[i] | subs[j]) & subs[k]) continue;
        if ((subs[k] == subs[i] || subs[k] == subs[j]) && subs[k]) continue;
        if (!allow_empty && !subs[k]) continue;
        out.push_back({subs[i], subs[j], subs[k]});
      }
    }
  }
  return out;
}

bool no_common_block(const std::array<Block, 3>& y, const std::array<Block, 3>& z) {
  for (Block a : y)
    for (Block b : z)
      if (a == b) return false;
  return true;
}

bool all_distinct6(const std::array<Block, 3>& y, const std::array<Block, 3>& z) {
  std::array<Block, 6> a{y[0], y[1], y[2], z[0], z[1], z[2]};
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) == a.end();
}

}  // namespace

SignedTrade parity_span_trade(int v, const ParityLegSpan& span) {
  Gf2Basis basis;
  for (Block g : span.generators)
    require(basis.absorb(g), "parity span: generators must be linearly independent");
  std::vector<std::pair<Block, std::int64_t>> terms;
  for (Block m : linear_span(span.generators)) {
    const bool odd = popcount(m) % 2 != 0;
    terms.emplace_back(m, odd == span.odd_positive ? 1 : -1);
  }
  return SignedTrade::from_terms(v, std::move(terms));
}

SignedTrade minimal_trade(int v, Block x0, std::span<const std::pair<Block, Block>> pairs) {
  return product_expand(v, x0, pairs);
}

SignedTrade merge_simple(const SignedTrade& t1, const SignedTrade& t2, int t) {
  require(t1.is_simple() && t2.is_simple(), "merge: inputs must be simple");
  require(is_trade(t1, t) && is_trade(t2, t), "merge: inputs must be [t]-trades");
  SignedTrade out = add(t1, t2);
  require(out.is_simple(), "merge: like-sign legs overlap");
  return out;
}

SignedTrade spectrum_trade(int t, int i, SpectrumFamily family) {
  const bool form2 = family == SpectrumFamily::FormII;
  require(t >= (form2 ? 2 : 3), "spectrum: t too small for this family");
  require(i >= 0 && i <= (form2 ? t - 2 : t - 3), "spectrum: i out of range");
  const int v = 2 * t + 3;
  auto singles = [](std::vector<int> elems) {
    std::vector<Block> out;
    for (int e : elems) out.push_back(bit_of(e));
    return out;
  };
  std::vector<int> g1, g2, g4;
  for (int e = 1; e <= t + 1; ++e) g1.push_back(e);
  for (int e = 1; e <= t - 1; ++e) g2.push_back(e);
  g2.push_back(t + 2);
  g2.push_back(t + 3);
  for (int e = 1; e <= i; ++e) g4.push_back(e);
  g4.push_back(t);
  if (!form2) g4.push_back(t + 1);
  for (int e = t + 4; e <= (form2 ? 2 * t - i + 3 : 2 * t - i + 2); ++e) g4.push_back(e);

  const SignedTrade t1 = parity_span_trade(v, {singles(g1), true});
  const SignedTrade t2 = parity_span_trade(v, {singles(g2), false});
  const SignedTrade t4 = parity_span_trade(v, {singles(g4), false});

  // inclusion-exclusion of the three spans, checked against the claimed sizes
  const std::vector<Block> s1 = linear_span(singles(g1));
  const std::vector<Block> s2 = linear_span(singles(g2));
  const std::vector<Block> s4 = linear_span(singles(g4));
  auto isz = [](const std::vector<Block>& a, const std::vector<Block>& b) {
    std::vector<Block> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  const std::vector<Block> s12 = isz(s1, s2);
  require(static_cast<std::int64_t>(s12.size()) == std::int64_t{1} << (t - 1),
          "spectrum: |T1 n T2| mismatch");
  require(static_cast<std::int64_t>(isz(s1, s4).size()) == std::int64_t{1} << (i + (form2 ? 1 : 2)),
          "spectrum: |T1 n T4| mismatch");
  require(static_cast<std::int64_t>(isz(s2, s4).size()) == std::int64_t{1} << i,
          "spectrum: |T2 n T4| mismatch");
  require(static_cast<std::int64_t>(isz(s12, s4).size()) == std::int64_t{1} << i,
          "spectrum: |T1 n T2 n T4| mismatch");

  const SignedTrade t3 = merge_simple(t1, t2, t);
  SignedTrade t5 = merge_simple(t3, t4, t);
  const std::int64_t want = (std::int64_t{1} << (t + 1)) + (std::int64_t{1} << (t - 1)) -
                            (form2 ? 1 : 3) * (std::int64_t{1} << i);
  require(stats(t5).volume == want, "spectrum: volume mismatch");
  require(is_trade(t5, t), "spectrum: result fails the trade check");
  return t5;
}

SimpleSpectrum known_simple_spectrum(int t) {
  require(t >= 1, "spectrum: t >= 1 required");
  SimpleSpectrum out;
  out.valid_below = 5 * (std::int64_t{1} << t) / 2;
  out.exists.insert(0);
  for (int i = 0; i <= t; ++i) out.exists.insert((std::int64_t{2} << t) - (std::int64_t{1} << i));
  out.exists.insert(std::int64_t{2} << t);
  for (int i = 0; i <= t - 2; ++i)
    out.exists.insert((std::int64_t{2} << t) + (std::int64_t{1} << (t - 1)) - (std::int64_t{1} << i));
  for (int i = 0; i <= t - 3; ++i)
    out.exists.insert((std::int64_t{2} << t) + (std::int64_t{1} << (t - 1)) - 3 * (std::int64_t{1} << i));
  for (std::int64_t vol = 0; vol < out.valid_below; ++vol)
    if (!out.exists.count(vol)) out.not_exists.insert(vol);
  return out;
}

SignedTrade vol3_template(int v, const std::array<Block, 3>& y, const std::array<Block, 3>& z,
                          Block shift_by) {
  require(pairwise_disjoint(y) && pairwise_disjoint(z), "vol3 template: blocks must be disjoint");
  require((y[0] ^ y[1] ^ y[2]) == (z[0] ^ z[1] ^ z[2]), "vol3 template: XOR condition violated");
  require(no_common_block(y, z), "vol3 template: Yi == Zj");
  std::vector<std::pair<Block, std::int64_t>> terms;
  for (Block b : y) terms.emplace_back(b, 1);
  for (Block b : z) terms.emplace_back(b, -1);
  SignedTrade out = shift(SignedTrade::from_terms(v, std::move(terms)), shift_by);
  require(stats(out).volume == 3, "vol3 template: volume mismatch");
  require(is_trade(out, 1), "vol3 template: not a [1]-trade");
  return out;
}

SignedTrade vol6_template(int v, Vol6Kind kind, const Vol6Params& p) {
  require(p.y.size() == 3, "vol6 template: need three Y blocks");
  require(p.z.size() == (kind == Vol6Kind::P13 ? 2u : 3u), "vol6 template: wrong Z count");
  const std::array<Block, 3> y{p.y[0], p.y[1], p.y[2]};
  switch (kind) {
    case Vol6Kind::P33: {
      const std::array<Block, 3> z{p.z[0], p.z[1], p.z[2]};
      require(pairwise_disjoint(std::array<Block, 4>{p.x, y[0], y[1], y[2]}) &&
                  pairwise_disjoint(std::array<Block, 4>{p.x, z[0], z[1], z[2]}),
              "vol6 P33: disjointness violated");
      require(all_distinct6(y, z) && y[0] && y[1] && y[2] && z[0] && z[1] && z[2],
              "vol6 P33: blocks must be distinct and nonempty");
      require((y[0] ^ y[1] ^ y[2]) == (z[0] ^ z[1] ^ z[2]), "vol6 P33: XOR condition violated");
      return checked_vol6(expand_3x3_difference(
          v, {p.x ^ y[0], p.x ^ y[1], p.x ^ y[2]}, {p.x ^ z[0], p.x ^ z[1], p.x ^ z[2]}));
    }
    case Vol6Kind::P22: {
      const std::array<Block, 3> z{p.z[0], p.z[1], p.z[2]};
      require(pairwise_disjoint(y) && pairwise_disjoint(z), "vol6 P22: disjointness violated");
      require(all_distinct6(y, z) && y[0] && y[1] && y[2] && z[0] && z[1] && z[2],
              "vol6 P22: blocks must be distinct and nonempty");
      require((y[0] ^ y[1]) == (z[0] ^ z[1]), "vol6 P22: Y1Y2 != Z1Z2");
      return checked_vol6(expand_3x3_difference(v, y, z));
    }
    case Vol6Kind::P13: {
      const std::array<Block, 5> all{y[0], y[1], y[2], p.z[0], p.z[1]};
      require(pairwise_disjoint(all), "vol6 P13: disjointness violated");
      for (Block b : all) require(b != 0, "vol6 P13: blocks must be nonempty");
      return checked_vol6(
          expand_3x3_difference(v, y, {p.z[0], p.z[1], y[0] ^ y[1] ^ y[2]}));
    }
    case Vol6Kind::P11: {
      const std::array<Block, 3> z{p.z[0], p.z[1], p.z[2]};
      require(p.x != 0, "vol6 P11: X must be nonempty");
      require(pairwise_disjoint(std::array<Block, 4>{p.x, y[0], y[1], y[2]}) &&
                  pairwise_disjoint(std::array<Block, 4>{p.x, z[0], z[1], z[2]}),
              "vol6 P11: disjointness violated");
      require((y[0] ^ y[1] ^ y[2]) == (z[0] ^ z[1] ^ z[2]), "vol6 P11: XOR condition violated");
      require(no_common_block(y, z), "vol6 P11: Yi == Zj");
      std::vector<std::pair<Block, std::int64_t>> terms;
      for (Block b : y) terms.emplace_back(b, 1);
      for (Block b : z) terms.emplace_back(p.x ^ b, 1);
      for (Block b : z) terms.emplace_back(b, -1);
      for (Block b : y) terms.emplace_back(p.x ^ b, -1);
      return checked_vol6(SignedTrade::from_terms(v, std::move(terms)));
    }
  }
  throw std::invalid_argument("vol6 template: unknown kind");
}

std::set<CanonicalKey> vol3_class_keys(int v) {
  std::set<CanonicalKey> keys;
  const Block full = full_mask(v);
  for (const auto& y : disjoint_triples(full, true)) {
    const Block u = y[0] ^ y[1] ^ y[2];
    for (const auto& z : disjoint_triples(u, true)) {
      if ((z[0] ^ z[1] ^ z[2]) != u || !no_common_block(y, z)) continue;
      keys.insert(canonical_key(vol3_template(v, y, z, 0)));
    }
  }
  return keys;
}

std::set<CanonicalKey> vol6_class_keys(int v) {
  std::set<CanonicalKey> keys;
  const Block full = full_mask(v);
  auto try_insert = [&](Vol6Kind kind, const Vol6Params& p) {
    try {
      keys.insert(canonical_key(vol6_template(v, kind, p)));
    } catch (const std::invalid_argument&) {
      // parameter combination collapses below volume 6; not an instance
    }
  };
  for (Block x = 0; x <= full; ++x) {
    const Block rest = full & ~x;
    // P33 / P11 share the parameter shape; the per-kind preconditions (P33:
    // six nonempty blocks, P11: X nonempty, empty Y/Z admitted) are enforced
    // by the template itself.
    for (const auto& y : disjoint_triples(rest, true)) {
      const Block u = y[0] ^ y[1] ^ y[2];
      for (const auto& z : disjoint_triples(u, true)) {
        if ((z[0] ^ z[1] ^ z[2]) != u) continue;
        try_insert(Vol6Kind::P33, {x, {y[0], y[1], y[2]}, {z[0], z[1], z[2]}});
        if (x) try_insert(Vol6Kind::P11, {x, {y[0], y[1], y[2]}, {z[0], z[1], z[2]}});
      }
    }
  }
  for (const auto& y : disjoint_triples(full, false)) {
    // P22: Z3 ranges over everything disjoint from Z1, Z2; Z1^Z2 == Y1^Y2.
    // Each unordered {Y1,Y2} choice inside the triple matters, so permute roles.
    const std::array<std::array<int, 3>, 3> roles{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (const auto& r : roles) {
      const Block y1 = y[static_cast<size_t>(r[0])], y2 = y[static_cast<size_t>(r[1])],
                  y3 = y[static_cast<size_t>(r[2])];
      const Block u12 = y1 ^ y2;
      for (Block z1 = 0; z1 <= full; ++z1) {
        if (!z1 || (z1 & ~u12) || z1 == u12) continue;  // Z1, Z2 partition Y1Y2
        const Block z2 = u12 ^ z1;
        if (z1 > z2) continue;
        for (Block z3 = 1; z3 <= full; ++z3) {
          if (z3 & u12) continue;
          try_insert(Vol6Kind::P22, {0, {y1, y2, y3}, {z1, z2, z3}});
        }
      }
    }
    // P13: Z1, Z2 disjoint from the Y's and each other
    const Block rest = full & ~(y[0] | y[1] | y[2]);
    for (Block z1 = 1; z1 <= full; ++z1) {
      if (z1 & ~rest) continue;
      for (Block z2 = 1; z2 <= full; ++z2) {
        if ((z2 & ~rest) || (z1 & z2) || z2 < z1) continue;
        try_insert(Vol6Kind::P13, {0, {y[0], y[1], y[2]}, {z1, z2}});
      }
    }
  }
  return keys;
}

}  // namespace tradeforge
