#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/bit_string.hpp"
#include "grac/slp.hpp"

namespace grac::lz {

/// Literal bit, or a copy of `length` bits starting at `source`, which lies
/// strictly before the factor (the copy may overlap the factor itself).
struct Lz77Factor {
  enum class Kind : std::uint8_t { literal, copy };
  Kind kind = Kind::literal;
  bool bit = false;
  std::size_t source = 0;
  std::size_t length = 1;

  static Lz77Factor literal(bool b) { return {Kind::literal, b, 0, 1}; }
  static Lz77Factor copy(std::size_t src, std::size_t len) { return {Kind::copy, false, src, len}; }
  friend bool operator==(const Lz77Factor&, const Lz77Factor&) = default;
};

struct Lz77Parse {
  std::vector<Lz77Factor> factors;
};

/// Greedy leftmost-longest, self-referential, no trailing literal per factor.
Lz77Parse lz77_parse(const BitString& s);
BitString lz77_decode(const Lz77Parse& parse);

/// `prefix` is 0 for the empty phrase, otherwise a one-based phrase number.
/// Only the final phrase may lack an extension bit (input ended mid-match).
struct Lz78Phrase {
  std::size_t prefix = 0;
  std::optional<bool> extension;
  friend bool operator==(const Lz78Phrase&, const Lz78Phrase&) = default;
};

struct Lz78Parse {
  std::vector<Lz78Phrase> phrases;

  /// Phrases that carry an extension bit.
  std::size_t complete_phrases() const;
};

Lz78Parse lz78_parse(const BitString& s);
BitString lz78_decode(const Lz78Parse& parse);

struct LzReport {
  std::size_t grammar_size = 0;
  std::size_t lz77_factors = 0;
  std::size_t lz78_phrases = 0;
  BigInt string_length = 0;

  /// lz77_factors <= grammar_size.
  bool lz77_bound_holds() const { return lz77_factors <= grammar_size; }
};

inline constexpr const char* kLz77Variant = "greedy-leftmost-longest-self-referential-copy-or-literal";

/// Expands the grammar (subject to cap) and parses the text both ways.
LzReport lz_report(const slp::Slp& g, std::size_t cap = kDefaultExpandCap);

}  // namespace grac::lz
