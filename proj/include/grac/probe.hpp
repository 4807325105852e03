#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/slp.hpp"

namespace grac::probe {

/// Array of w-bit cells. Contents are fixed at construction and can only be
/// observed through a ProbeSession, which counts every read.
class CellMemory {
 public:
  CellMemory(unsigned word_bits, std::vector<std::uint64_t> cells);

  unsigned word_bits() const noexcept { return w_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

 private:
  friend class ProbeSession;
  unsigned w_;
  std::vector<std::uint64_t> cells_;
};

/// One query's view of a CellMemory. Sessions are cheap and independent, so
/// concurrent queries over one memory never share a counter.
class ProbeSession {
 public:
  explicit ProbeSession(const CellMemory& memory) : memory_(&memory) {}

  std::uint64_t probe(std::size_t index);
  std::size_t probes() const noexcept { return probes_; }

 private:
  const CellMemory* memory_;
  std::size_t probes_ = 0;
};

/// Appends little-endian bit fields into w-bit cells.
class BitPacker {
 public:
  explicit BitPacker(unsigned word_bits);

  void put(std::uint64_t value, std::size_t width);
  void put(const BigInt& value, std::size_t width);
  /// Pads to the next cell boundary.
  void align();
  std::size_t bit_size() const noexcept { return bits_; }
  CellMemory finish() &&;

 private:
  void put_bit(bool b);

  unsigned w_;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> cells_;
};

/// Reads fields back out of cell values that a session already fetched.
class BitCursor {
 public:
  BitCursor(const std::vector<std::uint64_t>& cells, unsigned word_bits, std::size_t offset = 0)
      : cells_(cells), w_(word_bits), pos_(offset) {}

  std::uint64_t get(std::size_t width);
  BigInt get_big(std::size_t width);

 private:
  bool get_bit();

  const std::vector<std::uint64_t>& cells_;
  unsigned w_;
  std::size_t pos_;
};

/// Width of one rule index; one bit minimum so a lone terminal still has room
/// for its value.
std::size_t index_bits(std::size_t rule_count);

/// Default cell width: ceil(log2 L), at least 1.
unsigned default_word_bits(const BigInt& text_length);

struct ProbeAnswer {
  bool bit = false;
  std::size_t probes = 0;
};

/// The grammar as n fixed-width records (tag, j, k) packed back to back.
class PackedStore {
 public:
  PackedStore(CellMemory memory, std::size_t rules, BigInt text_length);

  const CellMemory& memory() const noexcept { return memory_; }
  std::size_t rule_count() const noexcept { return rules_; }
  std::size_t bits_per_rule() const noexcept { return 1 + 2 * index_bits(rules_); }
  std::size_t total_bits() const noexcept { return rules_ * bits_per_rule(); }
  std::size_t cell_count() const noexcept { return memory_.cell_count(); }
  const BigInt& text_length() const noexcept { return text_length_; }

  /// Reads every cell through `session` and rebuilds the rule list.
  slp::Slp decode(ProbeSession& session) const;

 private:
  CellMemory memory_;
  std::size_t rules_;
  BigInt text_length_;
};

PackedStore pack_grammar(const slp::Slp& g, unsigned word_bits);

/// Reads the whole store, then answers with free computation.
ProbeAnswer probe_read_all(const PackedStore& store, const BigInt& i);

/// Per-symbol records (tag, j, k, left_length), each starting on a cell
/// boundary, walked from the start symbol.
class DescentStore {
 public:
  DescentStore(CellMemory memory, std::size_t rules, std::size_t length_bits, BigInt text_length);

  const CellMemory& memory() const noexcept { return memory_; }
  std::size_t rule_count() const noexcept { return rules_; }
  std::size_t length_bits() const noexcept { return length_bits_; }
  std::size_t record_bits() const noexcept { return 1 + 2 * index_bits(rules_) + length_bits_; }
  std::size_t cells_per_symbol() const noexcept;
  const BigInt& text_length() const noexcept { return text_length_; }

 private:
  CellMemory memory_;
  std::size_t rules_;
  std::size_t length_bits_;
  BigInt text_length_;
};

DescentStore build_descent_store(const slp::Slp& g, unsigned word_bits);

ProbeAnswer probe_descent(const DescentStore& store, const BigInt& i);

enum class Structure { read_all, descent, hybrid };

std::string_view to_string(Structure s) noexcept;

struct HybridAnswer {
  bool bit = false;
  std::size_t probes = 0;
  Structure chosen = Structure::read_all;
};

/// Both stores over one grammar; each query goes to whichever has the smaller
/// worst case (read-all on ties). The descent store stands in for the
/// O(log L) structure of Bille et al.
class HybridStore {
 public:
  HybridStore(const slp::Slp& g, unsigned word_bits);

  const PackedStore& packed() const noexcept { return packed_; }
  const DescentStore& descent() const noexcept { return descent_; }
  std::size_t depth() const noexcept { return depth_; }

  std::size_t read_all_worst() const noexcept { return packed_.cell_count(); }
  std::size_t descent_worst() const noexcept { return (depth_ + 1) * descent_.cells_per_symbol(); }
  std::size_t worst() const noexcept { return std::min(read_all_worst(), descent_worst()); }
  Structure chosen() const noexcept {
    return read_all_worst() <= descent_worst() ? Structure::read_all : Structure::descent;
  }

  HybridAnswer access(const BigInt& i) const;

 private:
  PackedStore packed_;
  DescentStore descent_;
  std::size_t depth_;
};

HybridAnswer hybrid_access(const slp::Slp& g, unsigned word_bits, const BigInt& i);

}  // namespace grac::probe
