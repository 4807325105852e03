#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/bit_string.hpp"
#include "grac/hard_instances.hpp"
#include "grac/slp.hpp"

namespace grac::bwt {

/// String over {0,1,$} with exactly one `$`, which sorts below 0 and 1.
class BwtText {
 public:
  /// Throws MalformedBwt on a foreign symbol or a sentinel count other than one.
  static BwtText from_text(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }
  std::size_t sentinel_position() const noexcept { return sentinel_; }

  friend bool operator==(const BwtText&, const BwtText&) = default;

 private:
  BwtText(std::string text, std::size_t sentinel) : text_(std::move(text)), sentinel_(sentinel) {}

  std::string text_;
  std::size_t sentinel_ = 0;
};

/// Last column of the sorted rotations of s$, via cyclic prefix doubling.
BwtText bwt(const BitString& s);

/// Inverse by LF-mapping.
BitString ibwt(const BwtText& t);

/// Maximal equal-bit blocks once every `$` is dropped.
std::size_t runs(std::string_view text);
std::size_t runs(const BwtText& t);

struct Run {
  bool bit = false;
  std::size_t length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

struct RunLengthCode {
  std::size_t sentinel_position = 0;
  std::vector<Run> runs;
  std::size_t total_length = 0;  // size of the BwtText, sentinel included

  /// Per run: one bit for the value and a length field; plus the sentinel
  /// position. Fields are ceil(log2(L+1)) bits for a source of length L.
  std::size_t encoded_bits() const;

  friend bool operator==(const RunLengthCode&, const RunLengthCode&) = default;
};

RunLengthCode rle_encode(const BwtText& t);
BwtText rle_decode(const RunLengthCode& code);

/// {"sentinel_position": p, "runs": [[bit, len], ...]}
std::string to_json(const RunLengthCode& code);
RunLengthCode rle_from_json(std::string_view json);

/// h_i: bit j (1..B) is 1 iff element B(i-1)+j is not in Y.
std::string block_pattern(const hard::BlockedInstance& inst, std::size_t block);

/// Replaces 0 by 1011 and 1 by 1101.
std::string widen_pattern(std::string_view h);

/// s'_Y of length (4B)^N, built by the replacement rules 0 -> 0^(4B),
/// 1 -> h'_i, with block N applied first so block 1 is the innermost digit.
BitString build_bwt_hard(const hard::BlockedInstance& inst, std::size_t cap = kDefaultExpandCap);

/// A grammar deriving s'_Y without materializing it (at most 8BN+1 rules).
slp::Slp build_bwt_hard_grammar(const hard::BlockedInstance& inst);

/// Zero-based position in s'_Y answering blocked set X: digit 4a_i+1 in base
/// 4B for block i, block 1 least significant. Offset 1 inside a 4-bit chunk
/// is where 1101 and 1011 differ in the right direction.
BigInt sigma(const hard::ElementSet& x, std::size_t block_size, std::size_t block_count);

}  // namespace grac::bwt
