#include <gtest/gtest.h>

#include <map>

#include "grac/hard_instances.hpp"
#include "grac/lz.hpp"
#include "grac/range_grid.hpp"
#include "support.hpp"

using namespace grac;
using namespace grac::lz;
namespace t = grac::testing;

namespace {

// Quadratic greedy parse: at each position take the longest (then leftmost) earlier-starting match.
std::size_t naive_lz77_count(const std::string& s) {
  std::size_t pos = 0, count = 0;
  while (pos < s.size()) {
    std::size_t best = 0;
    for (std::size_t src = 0; src < pos; ++src) {
      std::size_t k = 0;
      while (pos + k < s.size() && s[src + k] == s[pos + k]) ++k;
      best = std::max(best, k);
    }
    pos += std::max<std::size_t>(best, 1);
    ++count;
  }
  return count;
}

std::size_t naive_lz78_count(const std::string& s) {
  std::map<std::string, int> dict;
  std::string cur;
  std::size_t count = 0;
  for (char c : s) {
    cur.push_back(c);
    if (!dict.count(cur)) {
      dict[cur] = 1;
      ++count;
      cur.clear();
    }
  }
  return count + (cur.empty() ? 0 : 1);
}

slp::Slp zeros_grammar(std::size_t doublings) {
  std::vector<slp::Rule> rules{slp::Rule::terminal(false)};
  for (std::size_t i = 0; i < doublings; ++i) rules.push_back(slp::Rule::pair(i, i));
  return slp::Slp(rules);
}

}  // namespace

TEST(Lz77, Examples) {
  auto p = lz77_parse(BitString::from_text("0000"));
  EXPECT_EQ(p.factors, (std::vector<Lz77Factor>{Lz77Factor::literal(false), Lz77Factor::copy(0, 3)}));
  EXPECT_TRUE(lz77_parse(BitString{}).factors.empty());
  auto q = lz77_parse(BitString::from_text("010110"));
  EXPECT_EQ(q.factors, (std::vector<Lz77Factor>{Lz77Factor::literal(false), Lz77Factor::literal(true),
                                                 Lz77Factor::copy(0, 2), Lz77Factor::copy(1, 2)}));
}

TEST(Lz77, DecodeRejectsBadSource) {
  Lz77Parse bad{{Lz77Factor::copy(0, 2)}};
  EXPECT_ERRC(lz77_decode(bad), Errc::malformed_code);
}

TEST(Lz77Property, RoundTripAndNaiveCount) {
  t::Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t len = t::uniform(rng, 0, 300);
    BitString s = trial % 2 ? t::random_bits(rng, len) : t::random_runny_bits(rng, len);
    auto p = lz77_parse(s);
    ASSERT_EQ(lz77_decode(p), s);
    ASSERT_EQ(p.factors.size(), naive_lz77_count(s.to_text()));
    std::size_t pos = 0;
    for (const auto& f : p.factors) {
      if (f.kind == Lz77Factor::Kind::copy) ASSERT_LT(f.source, pos);
      pos += f.length;
    }
  }
}

TEST(Lz78, Examples) {
  auto p = lz78_parse(BitString::zeros(10));
  EXPECT_EQ(p.phrases.size(), 4u);
  EXPECT_EQ(p.complete_phrases(), 4u);
  EXPECT_TRUE(lz78_parse(BitString{}).phrases.empty());
  auto q = lz78_parse(BitString::zeros(2));
  ASSERT_EQ(q.phrases.size(), 2u);
  EXPECT_FALSE(q.phrases.back().extension.has_value());
  EXPECT_EQ(q.complete_phrases(), 1u);
}

TEST(Lz78, DecodeRejectsMalformed) {
  EXPECT_ERRC(lz78_decode({{{3, false}}}), Errc::malformed_code);
  EXPECT_ERRC(lz78_decode({{{0, std::nullopt}, {0, false}}}), Errc::malformed_code);
}

TEST(Lz78Property, RoundTripAndNaiveCount) {
  t::Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    BitString s = t::random_bits(rng, t::uniform(rng, 0, 500));
    auto p = lz78_parse(s);
    ASSERT_EQ(lz78_decode(p), s);
    ASSERT_EQ(p.phrases.size(), naive_lz78_count(s.to_text()));
  }
}

TEST(Lz78Property, UnaryBracket) {
  for (std::size_t n = 0; n <= 3000; ++n) {
    auto p = lz78_parse(BitString::zeros(n));
    std::size_t c = p.complete_phrases(), total = p.phrases.size();
    ASSERT_LE(c * (c + 1) / 2, n);
    ASSERT_LT(n, (c + 1) * (c + 2) / 2);
    ASSERT_LE(total, c + 1);
  }
}

TEST(LzReport, Examples) {
  auto r = lz_report(hard::build_sd_grammar({4, {1, 3}}));
  EXPECT_EQ(r.grammar_size, 9u);
  EXPECT_LE(r.lz77_factors, 9u);
  EXPECT_TRUE(r.lz77_bound_holds());
  auto z = lz_report(zeros_grammar(10));
  EXPECT_EQ(z.lz77_factors, 2u);
  EXPECT_EQ(z.grammar_size, 11u);
  EXPECT_EQ(z.string_length, 1024);
  auto b = lz_report(hard::build_blsd_grammar({3, 3, {1, 3, 5, 9}}));
  EXPECT_LE(b.lz77_factors, 19u);
}

TEST(LzReportProperty, FactorsBoundedByGrammarSize) {
  t::Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = t::random_slp(rng, t::uniform(rng, 2, 40), 2000);
    ASSERT_TRUE(lz_report(g).lz77_bound_holds());
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto ps = t::random_points(rng, 16, 16, 12);
    ASSERT_TRUE(lz_report(grid::compile_answer_grammar(ps).grammar).lz77_bound_holds());
  }
}
