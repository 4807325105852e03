#include "grac/probe.hpp"

#include "grac/error.hpp"

namespace grac::probe {

namespace {

void check_word_bits(unsigned w) {
  if (w < 1 || w > 64) throw Error(Errc::invalid_argument, "cell width must be in [1,64], got " + std::to_string(w));
}

void check_index(const BigInt& i, const BigInt& text_length) {
  if (i < 0 || i >= text_length)
    throw Error(Errc::out_of_range, "index " + i.str() + " not below L=" + text_length.str());
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

CellMemory::CellMemory(unsigned word_bits, std::vector<std::uint64_t> cells) : w_(word_bits), cells_(std::move(cells)) {
  check_word_bits(w_);
}

std::uint64_t ProbeSession::probe(std::size_t index) {
  if (index >= memory_->cells_.size()) throw Error(Errc::out_of_range, "cell " + std::to_string(index) + " out of memory");
  ++probes_;
  return memory_->cells_[index];
}

BitPacker::BitPacker(unsigned word_bits) : w_(word_bits) { check_word_bits(w_); }

void BitPacker::put_bit(bool b) {
  std::size_t cell = bits_ / w_;
  if (cell == cells_.size()) cells_.push_back(0);
  if (b) cells_[cell] |= std::uint64_t{1} << (bits_ % w_);
  ++bits_;
}

void BitPacker::put(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) throw Error(Errc::invalid_argument, "value does not fit its field");
  for (std::size_t k = 0; k < width; ++k) put_bit(k < 64 && ((value >> k) & 1));
}

void BitPacker::put(const BigInt& value, std::size_t width) {
  if (value < 0 || (value != 0 && boost::multiprecision::msb(value) >= width))
    throw Error(Errc::invalid_argument, "value does not fit its field");
  for (std::size_t k = 0; k < width; ++k) put_bit(boost::multiprecision::bit_test(value, static_cast<unsigned>(k)));
}

void BitPacker::align() {
  while (bits_ % w_ != 0) put_bit(false);
}

CellMemory BitPacker::finish() && { return CellMemory(w_, std::move(cells_)); }

bool BitCursor::get_bit() {
  std::size_t cell = pos_ / w_;
  if (cell >= cells_.size()) throw Error(Errc::out_of_range, "read past the fetched cells");
  bool b = (cells_[cell] >> (pos_ % w_)) & 1;
  ++pos_;
  return b;
}

std::uint64_t BitCursor::get(std::size_t width) {
  if (width > 64) throw Error(Errc::invalid_argument, "field wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < width; ++k)
    if (get_bit()) v |= std::uint64_t{1} << k;
  return v;
}

BigInt BitCursor::get_big(std::size_t width) {
  BigInt v = 0;
  for (std::size_t k = 0; k < width; ++k)
    if (get_bit()) boost::multiprecision::bit_set(v, static_cast<unsigned>(k));
  return v;
}

std::size_t index_bits(std::size_t rule_count) { return std::max<std::size_t>(1, ceil_log2(std::uint64_t{rule_count})); }

unsigned default_word_bits(const BigInt& text_length) {
  return static_cast<unsigned>(std::max<std::size_t>(1, ceil_log2(text_length)));
}

PackedStore::PackedStore(CellMemory memory, std::size_t rules, BigInt text_length)
    : memory_(std::move(memory)), rules_(rules), text_length_(std::move(text_length)) {}

slp::Slp PackedStore::decode(ProbeSession& session) const {
  std::vector<std::uint64_t> cells(memory_.cell_count());
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = session.probe(c);
  BitCursor cur(cells, memory_.word_bits());
  const std::size_t ib = index_bits(rules_);
  std::vector<slp::Rule> rules;
  rules.reserve(rules_);
  for (std::size_t r = 0; r < rules_; ++r) {
    bool pair = cur.get(1) != 0;
    std::uint64_t j = cur.get(ib);
    std::uint64_t k = cur.get(ib);
    rules.push_back(pair ? slp::Rule::pair(j, k) : slp::Rule::terminal(j != 0));
  }
  return slp::Slp(std::move(rules));
}

PackedStore pack_grammar(const slp::Slp& g, unsigned word_bits) {
  auto len = slp::lengths(g);
  const std::size_t ib = index_bits(g.size());
  BitPacker packer(word_bits);
  for (const slp::Rule& r : g.rules()) {
    packer.put(r.is_terminal() ? 0u : 1u, 1);
    packer.put(r.is_terminal() ? std::uint64_t{r.bit} : std::uint64_t{r.left}, ib);
    packer.put(r.is_terminal() ? std::uint64_t{0} : std::uint64_t{r.right}, ib);
  }
  return PackedStore(std::move(packer).finish(), g.size(), len.back());
}

ProbeAnswer probe_read_all(const PackedStore& store, const BigInt& i) {
  check_index(i, store.text_length());
  ProbeSession session(store.memory());
  slp::Slp g = store.decode(session);
  return {slp::access(g, i), session.probes()};
}

DescentStore::DescentStore(CellMemory memory, std::size_t rules, std::size_t length_bits, BigInt text_length)
    : memory_(std::move(memory)), rules_(rules), length_bits_(length_bits), text_length_(std::move(text_length)) {}

std::size_t DescentStore::cells_per_symbol() const noexcept { return ceil_div(record_bits(), memory_.word_bits()); }

DescentStore build_descent_store(const slp::Slp& g, unsigned word_bits) {
  auto len = slp::lengths(g);
  const std::size_t ib = index_bits(g.size());
  // symbols unreachable from the start may derive more than L bits
  const BigInt longest = *std::max_element(len.begin(), len.end());
  const std::size_t lb = ceil_log2(longest + 1);
  BitPacker packer(word_bits);
  for (const slp::Rule& r : g.rules()) {
    packer.put(r.is_terminal() ? 0u : 1u, 1);
    packer.put(r.is_terminal() ? std::uint64_t{r.bit} : std::uint64_t{r.left}, ib);
    packer.put(r.is_terminal() ? std::uint64_t{0} : std::uint64_t{r.right}, ib);
    packer.put(r.is_terminal() ? BigInt(0) : len[r.left], lb);
    packer.align();
  }
  return DescentStore(std::move(packer).finish(), g.size(), lb, len.back());
}

ProbeAnswer probe_descent(const DescentStore& store, const BigInt& i) {
  check_index(i, store.text_length());
  ProbeSession session(store.memory());
  const std::size_t cps = store.cells_per_symbol();
  const std::size_t ib = index_bits(store.rule_count());
  std::vector<std::uint64_t> record(cps);

  BigInt pos = i;
  std::size_t sym = store.rule_count() - 1;
  while (true) {
    for (std::size_t c = 0; c < cps; ++c) record[c] = session.probe(sym * cps + c);
    BitCursor cur(record, store.memory().word_bits());
    bool pair = cur.get(1) != 0;
    std::uint64_t j = cur.get(ib);
    std::uint64_t k = cur.get(ib);
    if (!pair) return {j != 0, session.probes()};
    BigInt left_length = cur.get_big(store.length_bits());
    if (pos < left_length) {
      sym = j;
    } else {
      pos -= left_length;
      sym = k;
    }
  }
}

std::string_view to_string(Structure s) noexcept {
  switch (s) {
    case Structure::read_all: return "read-all";
    case Structure::descent: return "descent";
    case Structure::hybrid: return "hybrid";
  }
  return "?";
}

HybridStore::HybridStore(const slp::Slp& g, unsigned word_bits)
    : packed_(pack_grammar(g, word_bits)), descent_(build_descent_store(g, word_bits)), depth_(slp::depth(g)) {}

HybridAnswer HybridStore::access(const BigInt& i) const {
  Structure pick = chosen();
  ProbeAnswer a = pick == Structure::read_all ? probe_read_all(packed_, i) : probe_descent(descent_, i);
  return {a.bit, a.probes, pick};
}

HybridAnswer hybrid_access(const slp::Slp& g, unsigned word_bits, const BigInt& i) {
  return HybridStore(g, word_bits).access(i);
}

}  // namespace grac::probe
