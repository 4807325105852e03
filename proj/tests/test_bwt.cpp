#include <gtest/gtest.h>

#include <set>

#include "grac/bwt.hpp"
#include "grac/slp.hpp"
#include "support.hpp"

using namespace grac::bwt;
using grac::BigInt;
using grac::BitString;
using grac::Errc;
namespace hard = grac::hard;
namespace slp = grac::slp;
namespace t = grac::testing;

TEST(Bwt, Examples) {
  EXPECT_EQ(bwt(BitString::from_text("010110")).text(), "01$1100");
  EXPECT_EQ(bwt(BitString{}).text(), "$");
  EXPECT_EQ(bwt(BitString::from_text("0")).text(), "0$");
  EXPECT_EQ(bwt(BitString::from_text("010110")).sentinel_position(), 2u);
}

TEST(Bwt, MatchesRotationSortOracle) {
  t::Rng rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t len = t::uniform(rng, 0, 200);
    BitString s = trial % 2 ? t::random_bits(rng, len) : t::random_runny_bits(rng, len);
    ASSERT_EQ(bwt(s).text(), t::rotation_bwt(s.to_text())) << s.to_text();
  }
  for (std::size_t n : {1, 2, 17, 64}) {
    ASSERT_EQ(bwt(BitString::zeros(n)).text(), t::rotation_bwt(std::string(n, '0')));
    ASSERT_EQ(bwt(BitString::from_text(std::string(n, '1'))).text(), t::rotation_bwt(std::string(n, '1')));
  }
}

TEST(Ibwt, Examples) {
  EXPECT_EQ(ibwt(BwtText::from_text("01$1100")).to_text(), "010110");
  EXPECT_EQ(ibwt(BwtText::from_text("$")).to_text(), "");
  EXPECT_ERRC(BwtText::from_text("0101"), Errc::malformed_bwt);
  EXPECT_ERRC(BwtText::from_text("0$1$"), Errc::malformed_bwt);
  EXPECT_ERRC(BwtText::from_text("0a$"), Errc::malformed_bwt);
  // "1$0" is not the transform of any string: its LF cycle closes early
  EXPECT_ERRC(ibwt(BwtText::from_text("$10")), Errc::malformed_bwt);
}

TEST(Ibwt, RoundTripExhaustiveSmall) {
  for (std::size_t len = 0; len <= 10; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      BitString s = t::bits_of(v, len);
      ASSERT_EQ(ibwt(bwt(s)), s);
    }
}

TEST(Ibwt, RoundTripRandom) {
  t::Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    BitString s = t::random_runny_bits(rng, t::uniform(rng, 0, 4096));
    ASSERT_EQ(ibwt(bwt(s)), s);
  }
}

TEST(Runs, Examples) {
  EXPECT_EQ(runs("01$1100"), 3u);
  EXPECT_EQ(runs("0000"), 1u);
  EXPECT_EQ(runs("0101"), 4u);
  EXPECT_EQ(runs("$"), 0u);
  EXPECT_EQ(runs(""), 0u);
}

TEST(Rle, Examples) {
  auto code = rle_encode(BwtText::from_text("01$1100"));
  EXPECT_EQ(code.sentinel_position, 2u);
  EXPECT_EQ(code.runs, (std::vector<grac::bwt::Run>{{false, 1}, {true, 3}, {false, 2}}));
  EXPECT_EQ(rle_decode(code).text(), "01$1100");
  EXPECT_EQ(to_json(code), R"({"sentinel_position":2,"runs":[[0,1],[1,3],[0,2]]})");
  EXPECT_EQ(rle_from_json(to_json(code)), code);
  auto empty = rle_encode(BwtText::from_text("$"));
  EXPECT_TRUE(empty.runs.empty());
  EXPECT_EQ(empty.sentinel_position, 0u);
  EXPECT_EQ(rle_decode(empty).text(), "$");
}

TEST(Rle, Malformed) {
  EXPECT_ERRC(rle_decode({0, {{true, 1}, {true, 2}}, 4}), Errc::malformed_code);
  EXPECT_ERRC(rle_decode({0, {{true, 0}}, 1}), Errc::malformed_code);
  EXPECT_ERRC(rle_decode({5, {{true, 2}}, 3}), Errc::malformed_code);
  EXPECT_ERRC(rle_from_json("{\"runs\":[[2,1]],\"sentinel_position\":0}"), Errc::malformed_code);
  EXPECT_ERRC(rle_from_json("not json"), Errc::malformed_code);
}

TEST(Rle, RoundTripAndSize) {
  t::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    BitString s = t::random_runny_bits(rng, t::uniform(rng, 0, 1000));
    BwtText b = bwt(s);
    auto code = rle_encode(b);
    ASSERT_EQ(rle_decode(code), b);
    ASSERT_EQ(rle_from_json(to_json(code)), code);
    std::size_t L = s.size();
    std::size_t f = grac::ceil_log2(std::uint64_t{L} + 1);
    ASSERT_EQ(code.encoded_bits(), code.runs.size() * (1 + f) + f);
    std::size_t lg = grac::ceil_log2(std::uint64_t{std::max<std::size_t>(L, 1)});
    ASSERT_LE(code.encoded_bits(), code.runs.size() * (lg + 2) + lg + 1);
  }
}

TEST(HardString, Patterns) {
  EXPECT_EQ(widen_pattern("01"), "10111101");
  hard::BlockedInstance inst{1, 1, {}};
  EXPECT_EQ(block_pattern(inst, 1), "1");
  EXPECT_EQ(build_bwt_hard(inst).to_text(), "1101");
  hard::BlockedInstance ex2{3, 3, {1, 3, 5, 9}};
  EXPECT_EQ(block_pattern(ex2, 1), "010");
  EXPECT_EQ(block_pattern(ex2, 2), "101");
  EXPECT_EQ(block_pattern(ex2, 3), "110");
  EXPECT_ERRC(build_bwt_hard({4, 4, {}}, 1000), Errc::cap_exceeded);
}

TEST(Sigma, Examples) {
  // zero-based positions: each digit lands on the second character of its 4-character chunk
  EXPECT_EQ(sigma({1}, 1, 1), 1);
  EXPECT_EQ(sigma({2, 4, 7}, 3, 3), 161);
  EXPECT_TRUE(build_bwt_hard({3, 3, {1, 3, 5, 9}})[161]);
  EXPECT_ERRC(sigma({1, 2}, 3, 2), Errc::not_blocked);
}

TEST(Sigma, InjectiveAndMatchesDisjointness) {
  t::Rng rng(13);
  for (std::size_t B = 1; B <= 4; ++B)
    for (std::size_t N = 1; N <= 3; ++N) {
      std::set<BigInt> seen;
      hard::BlockedInstance inst{B, N, t::random_subset(rng, B * N)};
      BitString s = build_bwt_hard(inst);
      ASSERT_EQ(BigInt(s.size()), grac::pow_big(4 * B, N));
      for (const auto& x : t::colex_blocked_sets(B, N)) {
        BigInt p = sigma(x, B, N);
        ASSERT_TRUE(seen.insert(p).second);
        ASSERT_EQ(s[static_cast<std::size_t>(p)], t::brute_disjoint(x, inst.y));
      }
      ASSERT_EQ(slp::expand(build_bwt_hard_grammar(inst)), s);
      ASSERT_LE(runs(bwt(s)), 512 * B * N);
    }
}

TEST(HardString, Example2RunsAndCompressedSize) {
  BitString s = build_bwt_hard({3, 3, {1, 3, 5, 9}});
  auto code = rle_encode(bwt(s));
  EXPECT_EQ(code.runs.size(), 22u);
  std::size_t L = s.size();
  EXPECT_LE(code.encoded_bits(), (512 * 9 + 1) * (grac::ceil_log2(std::uint64_t{L}) + 1));
}
