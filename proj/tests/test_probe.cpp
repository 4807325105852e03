#include <gtest/gtest.h>

#include "grac/bwt.hpp"
#include "grac/hard_instances.hpp"
#include "grac/probe.hpp"
#include "support.hpp"

using namespace grac;
using namespace grac::probe;
namespace t = grac::testing;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Descent path length by direct recursion over the grammar.
std::size_t path_nodes(const slp::Slp& g, const slp::LengthTable& len, BigInt i) {
  std::size_t nodes = 1;
  slp::SymbolId s = g.start();
  while (!g[s].is_terminal()) {
    if (i < len[g[s].left]) {
      s = g[s].left;
    } else {
      i -= len[g[s].left];
      s = g[s].right;
    }
    ++nodes;
  }
  return nodes;
}

}  // namespace

TEST(CellMemory, ProbesAreCounted) {
  CellMemory mem(8, {1, 2, 3});
  ProbeSession a(mem), b(mem);
  EXPECT_EQ(a.probe(2), 3u);
  EXPECT_EQ(a.probe(0), 1u);
  EXPECT_EQ(a.probes(), 2u);
  EXPECT_EQ(b.probes(), 0u);
  EXPECT_ERRC(a.probe(3), Errc::out_of_range);
  EXPECT_ERRC(CellMemory(0, {}), Errc::invalid_argument);
  EXPECT_ERRC(CellMemory(65, {}), Errc::invalid_argument);
}

TEST(BitPacking, RoundTripAcrossCellBoundaries) {
  t::Rng rng(17);
  for (unsigned w : {1u, 3u, 7u, 20u, 63u, 64u}) {
    BitPacker p(w);
    std::vector<std::pair<std::uint64_t, std::size_t>> fields;
    for (int k = 0; k < 200; ++k) {
      std::size_t width = t::uniform(rng, 1, 64);
      std::uint64_t v = width == 64 ? rng() : rng() & ((std::uint64_t{1} << width) - 1);
      fields.emplace_back(v, width);
      p.put(v, width);
    }
    BigInt big = pow_big(3, 90);
    p.put(big, 150);
    CellMemory mem = std::move(p).finish();
    std::vector<std::uint64_t> cells;
    ProbeSession s(mem);
    for (std::size_t c = 0; c < mem.cell_count(); ++c) cells.push_back(s.probe(c));
    BitCursor cur(cells, w);
    for (auto [v, width] : fields) ASSERT_EQ(cur.get(width), v);
    ASSERT_EQ(cur.get_big(150), big);
  }
  BitPacker q(8);
  EXPECT_ERRC(q.put(std::uint64_t{4}, 2), Errc::invalid_argument);
}

TEST(PackedStore, Examples) {
  auto g = hard::build_sd_grammar({4, {1, 3}});
  auto store = pack_grammar(g, 4);
  EXPECT_EQ(store.bits_per_rule(), 9u);
  EXPECT_EQ(store.total_bits(), 81u);
  EXPECT_EQ(store.cell_count(), 21u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(probe_read_all(store, i).probes, 21u);
  EXPECT_ERRC(probe_read_all(store, 16), Errc::out_of_range);

  slp::Slp single({slp::Rule::terminal(true)});
  for (unsigned w : {3u, 8u, 64u}) {
    auto s = pack_grammar(single, w);
    EXPECT_EQ(s.cell_count(), 1u);
    auto a = probe_read_all(s, 0);
    EXPECT_TRUE(a.bit);
    EXPECT_EQ(a.probes, 1u);
  }
}

TEST(PackedStore, DecodeRoundTrip) {
  t::Rng rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = t::random_slp(rng, t::uniform(rng, 2, 60), 1'000'000);
    unsigned w = static_cast<unsigned>(t::uniform(rng, 1, 64));
    auto store = pack_grammar(g, w);
    ProbeSession s(store.memory());
    ASSERT_EQ(store.decode(s), g);
    ASSERT_EQ(s.probes(), store.cell_count());
  }
}

TEST(DescentStore, Examples) {
  slp::Slp single({slp::Rule::terminal(false)});
  auto d = build_descent_store(single, 8);
  auto a = probe_descent(d, 0);
  EXPECT_FALSE(a.bit);
  EXPECT_EQ(a.probes, d.cells_per_symbol());

  std::vector<slp::Rule> chain{slp::Rule::terminal(true)};
  for (std::size_t k = 1; k <= 12; ++k) chain.push_back(slp::Rule::pair(k - 1, k - 1));
  slp::Slp cg(chain);
  auto cd = build_descent_store(cg, 16);
  EXPECT_EQ(cd.length_bits(), ceil_log2(std::uint64_t{4097}));
  EXPECT_EQ(probe_descent(cd, 4095).probes, 13 * cd.cells_per_symbol());
  EXPECT_EQ(cd.memory().cell_count(), cg.size() * cd.cells_per_symbol());
}

TEST(DescentStore, Blsd333Sweep) {
  auto g = hard::build_blsd_grammar({3, 3, {1, 3, 5, 9}});
  auto len = slp::lengths(g);
  auto d = build_descent_store(g, 5);
  for (std::size_t i = 0; i < 27; ++i) {
    auto a = probe_descent(d, i);
    ASSERT_EQ(a.bit, slp::access(g, len, i));
    ASSERT_EQ(a.probes, path_nodes(g, len, i) * d.cells_per_symbol());
    ASSERT_LE(a.probes, (slp::depth(g) + 1) * d.cells_per_symbol());
  }
}

TEST(Hybrid, UnaryChoosesReadAll) {
  std::vector<slp::Rule> rules{slp::Rule::terminal(false)};
  for (std::size_t k = 1; k <= 20; ++k) rules.push_back(slp::Rule::pair(k - 1, k - 1));
  slp::Slp g(rules);
  ASSERT_EQ(g.size(), 21u);
  HybridStore h(g, 20);
  EXPECT_EQ(h.chosen(), Structure::read_all);
  auto a = h.access(12345);
  EXPECT_FALSE(a.bit);
  EXPECT_EQ(a.chosen, Structure::read_all);
  EXPECT_LE(a.probes, 12u);
  EXPECT_EQ(a.probes, ceil_div(21 * 11, 20));
}

TEST(Hybrid, ShallowWideGrammarChoosesDescent) {
  auto g = hard::build_blsd_grammar({6, 6, {}});
  HybridStore h(g, 16);
  EXPECT_LE(h.worst(), h.read_all_worst());
  EXPECT_LE(h.worst(), h.descent_worst());
  EXPECT_EQ(h.chosen(), h.descent_worst() < h.read_all_worst() ? Structure::descent : Structure::read_all);
}

TEST(ProbeProperty, AnswersMatchAccessAndCountsAreExact) {
  t::Rng rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = t::random_slp(rng, t::uniform(rng, 2, 40), 300);
    auto len = slp::lengths(g);
    unsigned w = static_cast<unsigned>(t::uniform(rng, 1, 64));
    HybridStore h(g, w);
    std::size_t n = g.size();
    ASSERT_EQ(h.read_all_worst(), ceil_div(n * (1 + 2 * ceil_log2(std::uint64_t{n})), w));
    for (std::size_t i = 0; i < static_cast<std::size_t>(len.back()); ++i) {
      bool want = slp::access(g, len, i);
      auto r = probe_read_all(h.packed(), i);
      auto d = probe_descent(h.descent(), i);
      auto y = h.access(i);
      ASSERT_EQ(r.bit, want);
      ASSERT_EQ(d.bit, want);
      ASSERT_EQ(y.bit, want);
      ASSERT_EQ(r.probes, h.read_all_worst());
      ASSERT_EQ(d.probes, path_nodes(g, len, i) * h.descent().cells_per_symbol());
      ASSERT_LE(y.probes, h.worst());
    }
  }
}

TEST(ProbeProperty, BwtHardGrammar) {
  auto g = bwt::build_bwt_hard_grammar({2, 2, {1, 4}});
  auto s = slp::expand(g);
  for (unsigned w : {1u, 4u, 9u}) {
    HybridStore h(g, w);
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(h.access(i).bit, s[i]);
  }
}
