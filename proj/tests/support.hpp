#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grac/bit_string.hpp"
#include "grac/error.hpp"
#include "grac/hard_instances.hpp"
#include "grac/range_grid.hpp"
#include "grac/slp.hpp"

#define EXPECT_ERRC(stmt, errc)                                  \
  do {                                                           \
    try {                                                        \
      stmt;                                                      \
      ADD_FAILURE() << "expected " << ::grac::to_string(errc);   \
    } catch (const ::grac::Error& e_) {                          \
      EXPECT_EQ(e_.code(), errc) << e_.what();                   \
    }                                                            \
  } while (0)

namespace grac::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BitString random_bits(Rng& rng, std::size_t len) {
  BitString s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng() & 1);
  return s;
}

// Skewed towards long runs so that repeats and BWT runs are exercised too.
inline BitString random_runny_bits(Rng& rng, std::size_t len) {
  BitString s;
  bool b = rng() & 1;
  while (s.size() < len) {
    std::size_t run = uniform(rng, 1, 8);
    for (std::size_t k = 0; k < run && s.size() < len; ++k) s.push_back(b);
    b = !b;
  }
  return s;
}

inline BitString bits_of(std::uint64_t value, std::size_t len) {
  BitString s;
  for (std::size_t i = 0; i < len; ++i) s.push_back((value >> i) & 1);
  return s;
}

inline hard::ElementSet random_subset(Rng& rng, std::size_t universe) {
  hard::ElementSet y;
  for (std::size_t e = 1; e <= universe; ++e)
    if (rng() & 1) y.push_back(e);
  return y;
}

// Random valid SLP with n >= 2 rules whose symbols all derive at most max_len bits.
inline slp::Slp random_slp(Rng& rng, std::size_t n, std::uint64_t max_len) {
  std::vector<slp::Rule> rules;
  std::vector<std::uint64_t> len;
  rules.push_back(slp::Rule::terminal(rng() & 1));
  len.push_back(1);
  while (rules.size() < n) {
    bool made = false;
    if (rules.size() >= 1 && uniform(rng, 0, 9) != 0) {
      for (int attempt = 0; attempt < 8 && !made; ++attempt) {
        std::size_t l = uniform(rng, 0, rules.size() - 1), r = uniform(rng, 0, rules.size() - 1);
        if (len[l] + len[r] <= max_len) {
          rules.push_back(slp::Rule::pair(l, r));
          len.push_back(len[l] + len[r]);
          made = true;
        }
      }
    }
    if (!made) {
      rules.push_back(slp::Rule::terminal(rng() & 1));
      len.push_back(1);
    }
  }
  return slp::Slp(std::move(rules));
}

// Naive recursive expansion, independent of slp::expand.
inline std::string naive_expand(const slp::Slp& g, slp::SymbolId s) {
  const auto& r = g[s];
  if (r.is_terminal()) return r.bit ? "1" : "0";
  return naive_expand(g, r.left) + naive_expand(g, r.right);
}

inline std::string naive_expand(const slp::Slp& g) { return naive_expand(g, g.start()); }

inline std::size_t naive_depth(const slp::Slp& g, slp::SymbolId s) {
  const auto& r = g[s];
  if (r.is_terminal()) return 0;
  return 1 + std::max(naive_depth(g, r.left), naive_depth(g, r.right));
}

// Colexicographic order: compare the largest element where the sets differ; the set lacking it is smaller.
inline bool colex_less(const hard::ElementSet& a, const hard::ElementSet& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

inline bool brute_disjoint(const hard::ElementSet& x, const hard::ElementSet& y) {
  for (auto a : x)
    for (auto b : y)
      if (a == b) return false;
  return true;
}

// Every subset of {1..m} listed in colex order.
inline std::vector<hard::ElementSet> colex_subsets(std::size_t m) {
  std::vector<hard::ElementSet> all{{}};
  for (std::size_t e = 1; e <= m; ++e) {
    std::size_t k = all.size();
    for (std::size_t i = 0; i < k; ++i) {
      auto s = all[i];
      s.push_back(e);
      all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end(), colex_less);
  return all;
}

// Every blocked set of [B*N] in colex order, built by filtering all subsets.
inline std::vector<hard::ElementSet> colex_blocked_sets(std::size_t B, std::size_t N) {
  std::vector<hard::ElementSet> out;
  for (const auto& s : colex_subsets(B * N)) {
    if (s.size() != N) continue;
    bool ok = true;
    for (std::size_t i = 0; i < N; ++i)
      ok = ok && s[i] > i * B && s[i] <= (i + 1) * B;
    if (ok) out.push_back(s);
  }
  return out;
}

inline grid::PointSet random_points(Rng& rng, std::size_t max_w, std::size_t max_h, std::size_t max_p) {
  grid::PointSet ps;
  ps.width = uniform(rng, 1, max_w);
  ps.height = uniform(rng, 1, max_h);
  std::size_t p = uniform(rng, 0, max_p);
  for (std::size_t i = 0; i < p; ++i) ps.points.push_back({uniform(rng, 1, ps.width), uniform(rng, 1, ps.height)});
  return ps;
}

// Row-major dominance parity via a 2D prefix sum.
inline std::string prefix_sum_answers(const grid::PointSet& ps) {
  std::vector<std::vector<int>> c(ps.height + 1, std::vector<int>(ps.width + 1, 0));
  for (const auto& p : ps.points) c[p.y][p.x] += 1;
  for (std::size_t y = 1; y <= ps.height; ++y)
    for (std::size_t x = 1; x <= ps.width; ++x) c[y][x] += c[y - 1][x] + c[y][x - 1] - c[y - 1][x - 1];
  std::string out;
  for (std::size_t y = 1; y <= ps.height; ++y)
    for (std::size_t x = 1; x <= ps.width; ++x) out.push_back(c[y][x] % 2 ? '1' : '0');
  return out;
}

// Rotation-sort BWT: sort all rotations of s$ and read the last column.
inline std::string rotation_bwt(const std::string& s) {
  std::string t = s + "$";
  std::size_t n = t.size();
  auto rank = [](char c) { return c == '$' ? 0 : c == '0' ? 1 : 2; };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) {
      int ra = rank(t[(a + k) % n]), rb = rank(t[(b + k) % n]);
      if (ra != rb) return ra < rb;
    }
    return false;
  });
  std::string out;
  for (auto i : idx) out.push_back(t[(i + n - 1) % n]);
  return out;
}

}  // namespace grac::testing
