#include "grac/hard_instances.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace grac::hard {

ElementSet make_set(std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw Error(Errc::invalid_argument, "set contains a duplicate element");
  return elements;
}

ElementSet parse_set(std::string_view text) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string_view::npos) continue;
      throw Error(Errc::parse_error, "empty element in set literal '" + std::string(text) + "'");
    }
    auto e = item.find_last_not_of(" \t");
    std::string tok = item.substr(b, e - b + 1);
    BigInt v = parse_decimal(tok);
    if (v < 1 || v > BigInt(1'000'000'000)) throw Error(Errc::element_out_of_universe, "element " + tok + " is not a valid one-based element");
    out.push_back(static_cast<std::size_t>(v));
  }
  return make_set(std::move(out));
}

std::string format_set(const ElementSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

bool disjoint(const ElementSet& x, const ElementSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

namespace {

void check_universe(const ElementSet& s, std::size_t universe) {
  for (std::size_t e : s) {
    if (e < 1 || e > universe)
      throw Error(Errc::element_out_of_universe, "element " + std::to_string(e) + " outside [1," + std::to_string(universe) + "]");
  }
  if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end())
    throw Error(Errc::invalid_argument, "set must be sorted and duplicate-free");
}

}  // namespace

void check_instance(const SetInstance& inst) {
  if (inst.m == 0) throw Error(Errc::invalid_argument, "universe size m must be positive");
  check_universe(inst.y, inst.m);
}

void check_instance(const BlockedInstance& inst) {
  if (inst.block_size == 0 || inst.block_count == 0)
    throw Error(Errc::invalid_argument, "B and N must be positive");
  check_universe(inst.y, inst.universe());
}

BigInt set_index(const ElementSet& x, std::size_t m) {
  check_universe(x, m);
  BigInt idx = 0;
  for (std::size_t e : x) boost::multiprecision::bit_set(idx, static_cast<unsigned>(e - 1));
  return idx;
}

ElementSet set_from_index(const BigInt& index, std::size_t m) {
  if (index < 0 || index >= pow_big(2, m))
    throw Error(Errc::out_of_range, "set index " + index.str() + " outside [0,2^" + std::to_string(m) + ")");
  ElementSet out;
  for (std::size_t e = 1; e <= m; ++e)
    if (boost::multiprecision::bit_test(index, static_cast<unsigned>(e - 1))) out.push_back(e);
  return out;
}

std::vector<std::size_t> block_offsets(const ElementSet& x, std::size_t block_size, std::size_t block_count) {
  check_universe(x, block_size * block_count);
  std::vector<std::size_t> offsets(block_count, 0);
  std::vector<std::size_t> hits(block_count, 0);
  for (std::size_t e : x) {
    std::size_t block = (e - 1) / block_size;
    offsets[block] = (e - 1) % block_size;
    ++hits[block];
  }
  for (std::size_t i = 0; i < block_count; ++i) {
    if (hits[i] != 1)
      throw Error(Errc::not_blocked, "block " + std::to_string(i + 1) + " holds " + std::to_string(hits[i]) + " elements");
  }
  return offsets;
}

BigInt blocked_index(const ElementSet& x, std::size_t block_size, std::size_t block_count) {
  auto a = block_offsets(x, block_size, block_count);
  BigInt idx = 0;
  for (std::size_t i = block_count; i-- > 0;) idx = idx * block_size + a[i];
  return idx;
}

ElementSet blocked_from_index(const BigInt& index, std::size_t block_size, std::size_t block_count) {
  if (index < 0 || index >= pow_big(block_size, block_count))
    throw Error(Errc::out_of_range, "blocked index " + index.str() + " outside [0,B^N)");
  ElementSet out;
  BigInt rest = index;
  for (std::size_t i = 0; i < block_count; ++i) {
    auto a = static_cast<std::size_t>(rest % block_size);
    rest /= block_size;
    out.push_back(i * block_size + a + 1);
  }
  return out;
}

std::vector<ElementSet> all_blocked_sets(std::size_t block_size, std::size_t block_count) {
  std::vector<ElementSet> out;
  std::vector<std::size_t> a(block_count, 0);
  while (true) {
    ElementSet x;
    for (std::size_t i = 0; i < block_count; ++i) x.push_back(i * block_size + a[i] + 1);
    out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < block_count && ++a[i] == block_size) a[i++] = 0;
    if (i == block_count) break;
  }
  return out;
}

slp::Slp build_sd_grammar(const SetInstance& inst) {
  check_instance(inst);
  const std::size_t m = inst.m;
  slp::Builder b;

  // zero[i] derives 0^(2^i), i < m.
  std::vector<slp::SymbolId> zero{b.terminal(false)};
  for (std::size_t i = 1; i < m; ++i) zero.push_back(b.pair(zero[i - 1], zero[i - 1]));

  slp::SymbolId g = b.terminal(true);
  for (std::size_t i = 1; i <= m; ++i) {
    bool in_y = std::binary_search(inst.y.begin(), inst.y.end(), i);
    g = b.pair(g, in_y ? zero[i - 1] : g);
  }
  return std::move(b).finish(g);
}

slp::Slp build_blsd_grammar(const BlockedInstance& inst) {
  check_instance(inst);
  const std::size_t B = inst.block_size;
  const std::size_t N = inst.block_count;
  slp::Builder b;

  // zero[i] derives 0^(B^i), i < N, each from B copies of the previous one.
  std::vector<slp::SymbolId> zero{b.terminal(false)};
  for (std::size_t i = 1; i < N; ++i) zero.push_back(b.concat(std::vector<slp::SymbolId>(B, zero[i - 1])));

  slp::SymbolId g = b.terminal(true);
  for (std::size_t i = 1; i <= N; ++i) {
    std::vector<slp::SymbolId> parts;
    parts.reserve(B);
    for (std::size_t j = 1; j <= B; ++j) {
      bool in_y = std::binary_search(inst.y.begin(), inst.y.end(), B * (i - 1) + j);
      parts.push_back(in_y ? zero[i - 1] : g);
    }
    g = b.concat(parts);
  }
  return std::move(b).finish(g);
}

}  // namespace grac::hard
