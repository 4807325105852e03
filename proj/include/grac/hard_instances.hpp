#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/slp.hpp"

namespace grac::hard {

/// Sorted, duplicate-free set of one-based universe elements.
using ElementSet = std::vector<std::size_t>;

/// Sorts and rejects duplicates.
ElementSet make_set(std::vector<std::size_t> elements);

/// Parses "1,3,5" (empty text is the empty set).
ElementSet parse_set(std::string_view text);
std::string format_set(const ElementSet& s);

struct SetInstance {
  std::size_t m = 0;  // universe {1..m}
  ElementSet y;
};

struct BlockedInstance {
  std::size_t block_size = 1;   // B
  std::size_t block_count = 1;  // N
  ElementSet y;                 // subset of {1..B*N}

  std::size_t universe() const noexcept { return block_size * block_count; }
};

bool disjoint(const ElementSet& x, const ElementSet& y);

/// Characteristic-vector index: sum of 2^(e-1).
BigInt set_index(const ElementSet& x, std::size_t m);
ElementSet set_from_index(const BigInt& index, std::size_t m);

/// One offset per block, block 1 first: a_i = (element of X in block i) - B(i-1) - 1.
std::vector<std::size_t> block_offsets(const ElementSet& x, std::size_t block_size, std::size_t block_count);

/// Mixed-radix index with block 1 least significant.
BigInt blocked_index(const ElementSet& x, std::size_t block_size, std::size_t block_count);
ElementSet blocked_from_index(const BigInt& index, std::size_t block_size, std::size_t block_count);

/// All B^N blocked sets in index order.
std::vector<ElementSet> all_blocked_sets(std::size_t block_size, std::size_t block_count);

/// Grammar of exactly 2m+1 rules deriving s_Y of length 2^m with
/// s_Y[set_index(X)] = 1 iff X and Y are disjoint.
slp::Slp build_sd_grammar(const SetInstance& inst);

/// Grammar of at most 2BN+1 rules deriving s_Y of length B^N with
/// s_Y[blocked_index(X)] = 1 iff X and Y are disjoint.
slp::Slp build_blsd_grammar(const BlockedInstance& inst);

void check_instance(const SetInstance& inst);
void check_instance(const BlockedInstance& inst);

}  // namespace grac::hard
