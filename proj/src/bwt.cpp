#include "grac/bwt.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "grac/error.hpp"
#include "json.hpp"

namespace grac::bwt {

BwtText BwtText::from_text(std::string_view text) {
  std::size_t sentinel = text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '$') {
      if (sentinel != text.size()) throw Error(Errc::malformed_bwt, "more than one sentinel");
      sentinel = i;
    } else if (c != '0' && c != '1') {
      throw Error(Errc::malformed_bwt, "symbol '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
  }
  if (sentinel == text.size()) throw Error(Errc::malformed_bwt, "no sentinel");
  return BwtText(std::string(text), sentinel);
}

namespace {

/// Sorted order of the cyclic rotations of `t` (symbols 0..2).
std::vector<std::size_t> sort_rotations(const std::vector<std::uint8_t>& t) {
  const std::size_t n = t.size();
  constexpr std::size_t kAlphabet = 3;
  std::vector<std::size_t> p(n), c(n), pn(n), cn(n);

  std::vector<std::size_t> cnt(std::max(kAlphabet, n), 0);
  for (auto ch : t) ++cnt[ch];
  for (std::size_t i = 1; i < kAlphabet; ++i) cnt[i] += cnt[i - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[t[i]]] = i;
  c[p[0]] = 0;
  std::size_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (t[p[i]] != t[p[i - 1]]) ++classes;
    c[p[i]] = classes - 1;
  }

  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i) pn[i] = (p[i] + n - h % n) % n;
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t a = (p[i] + h) % n, b = (p[i - 1] + h) % n;
      if (c[p[i]] != c[p[i - 1]] || c[a] != c[b]) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }
  return p;
}

}  // namespace

BwtText bwt(const BitString& s) {
  const std::size_t n = s.size() + 1;
  std::vector<std::uint8_t> t(n);
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i] ? 2 : 1;
  t[n - 1] = 0;

  auto order = sort_rotations(t);
  std::string out(n, '?');
  for (std::size_t r = 0; r < n; ++r) out[r] = "$01"[t[(order[r] + n - 1) % n]];
  return BwtText::from_text(out);
}

BitString ibwt(const BwtText& t) {
  const std::string& L = t.text();
  const std::size_t n = L.size();
  auto sym = [](char c) -> std::size_t { return c == '$' ? 0 : (c == '0' ? 1 : 2); };

  std::array<std::size_t, 3> first{0, 0, 0};
  std::vector<std::size_t> rank(n);
  {
    std::array<std::size_t, 3> seen{0, 0, 0};
    for (std::size_t r = 0; r < n; ++r) rank[r] = seen[sym(L[r])]++;
    first[0] = 0;
    first[1] = seen[0];
    first[2] = seen[0] + seen[1];
  }

  std::vector<bool> bits(n - 1);
  std::size_t row = 0;  // the rotation that starts with `$`
  for (std::size_t k = n - 1; k-- > 0;) {
    char c = L[row];
    if (c == '$') throw Error(Errc::malformed_bwt, "LF cycle reached the sentinel early");
    bits[k] = c == '1';
    row = first[sym(c)] + rank[row];
  }
  if (L[row] != '$') throw Error(Errc::malformed_bwt, "LF cycle does not close at the sentinel");
  return BitString(std::move(bits));
}

std::size_t runs(std::string_view text) {
  std::size_t count = 0;
  char last = 0;
  for (char c : text) {
    if (c == '$') continue;
    if (c != last) ++count;
    last = c;
  }
  return count;
}

std::size_t runs(const BwtText& t) { return runs(t.text()); }

std::size_t RunLengthCode::encoded_bits() const {
  std::size_t source_length = total_length == 0 ? 0 : total_length - 1;
  std::size_t field = ceil_log2(std::uint64_t{source_length} + 1);
  return runs.size() * (1 + field) + field;
}

RunLengthCode rle_encode(const BwtText& t) {
  RunLengthCode code;
  code.sentinel_position = t.sentinel_position();
  code.total_length = t.size();
  for (char c : t.text()) {
    if (c == '$') continue;
    bool b = c == '1';
    if (!code.runs.empty() && code.runs.back().bit == b)
      ++code.runs.back().length;
    else
      code.runs.push_back({b, 1});
  }
  return code;
}

BwtText rle_decode(const RunLengthCode& code) {
  std::size_t body = 0;
  for (std::size_t i = 0; i < code.runs.size(); ++i) {
    if (code.runs[i].length == 0) throw Error(Errc::malformed_code, "run " + std::to_string(i) + " has length 0");
    if (i > 0 && code.runs[i].bit == code.runs[i - 1].bit)
      throw Error(Errc::malformed_code, "runs " + std::to_string(i - 1) + " and " + std::to_string(i) + " share a bit value");
    body += code.runs[i].length;
  }
  if (code.sentinel_position > body) throw Error(Errc::malformed_code, "sentinel position past the end");
  if (code.total_length != body + 1) throw Error(Errc::malformed_code, "total length disagrees with the runs");
  std::string out;
  out.reserve(body + 1);
  for (const Run& r : code.runs) out.append(r.length, r.bit ? '1' : '0');
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(code.sentinel_position), '$');
  return BwtText::from_text(out);
}

std::string to_json(const RunLengthCode& code) {
  nlohmann::ordered_json j;
  j["sentinel_position"] = code.sentinel_position;
  j["runs"] = nlohmann::json::array();
  for (const Run& r : code.runs) j["runs"].push_back({r.bit ? 1 : 0, r.length});
  return j.dump();
}

RunLengthCode rle_from_json(std::string_view text) {
  RunLengthCode code;
  try {
    auto j = nlohmann::json::parse(text);
    code.sentinel_position = j.at("sentinel_position").get<std::size_t>();
    std::size_t body = 0;
    for (const auto& r : j.at("runs")) {
      if (!r.is_array() || r.size() != 2) throw Error(Errc::malformed_code, "run must be [bit, length]");
      int bit = r[0].get<int>();
      if (bit != 0 && bit != 1) throw Error(Errc::malformed_code, "run bit must be 0 or 1");
      code.runs.push_back({bit == 1, r[1].get<std::size_t>()});
      body += code.runs.back().length;
    }
    code.total_length = body + 1;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_code, e.what());
  }
  return code;
}

std::string block_pattern(const hard::BlockedInstance& inst, std::size_t block) {
  std::string h;
  for (std::size_t j = 1; j <= inst.block_size; ++j) {
    std::size_t e = inst.block_size * (block - 1) + j;
    h.push_back(std::binary_search(inst.y.begin(), inst.y.end(), e) ? '0' : '1');
  }
  return h;
}

std::string widen_pattern(std::string_view h) {
  std::string out;
  out.reserve(4 * h.size());
  for (char c : h) out += c == '1' ? "1101" : "1011";
  return out;
}

BitString build_bwt_hard(const hard::BlockedInstance& inst, std::size_t cap) {
  hard::check_instance(inst);
  const std::size_t chunk = 4 * inst.block_size;
  BigInt total = pow_big(chunk, inst.block_count);
  if (total > cap) throw Error(Errc::cap_exceeded, "(4B)^N = " + total.str() + " above cap " + std::to_string(cap));

  std::vector<bool> cur{true};
  for (std::size_t block = inst.block_count; block >= 1; --block) {
    std::string wide = widen_pattern(block_pattern(inst, block));
    std::vector<bool> next;
    next.reserve(cur.size() * chunk);
    for (bool b : cur) {
      if (b)
        for (char c : wide) next.push_back(c == '1');
      else
        next.insert(next.end(), chunk, false);
    }
    cur.swap(next);
  }
  return BitString(std::move(cur));
}

slp::Slp build_bwt_hard_grammar(const hard::BlockedInstance& inst) {
  hard::check_instance(inst);
  const std::size_t chunk = 4 * inst.block_size;
  const std::size_t N = inst.block_count;
  slp::Builder b;

  std::vector<slp::SymbolId> zero{b.terminal(false)};
  for (std::size_t i = 1; i < N; ++i) zero.push_back(b.concat(std::vector<slp::SymbolId>(chunk, zero[i - 1])));

  slp::SymbolId g = b.terminal(true);
  for (std::size_t i = 1; i <= N; ++i) {
    std::string wide = widen_pattern(block_pattern(inst, i));
    std::vector<slp::SymbolId> parts;
    parts.reserve(chunk);
    for (char c : wide) parts.push_back(c == '1' ? g : zero[i - 1]);
    g = b.concat(parts);
  }
  return std::move(b).finish(g);
}

BigInt sigma(const hard::ElementSet& x, std::size_t block_size, std::size_t block_count) {
  auto a = hard::block_offsets(x, block_size, block_count);
  const std::size_t chunk = 4 * block_size;
  BigInt idx = 0;
  for (std::size_t i = block_count; i-- > 0;) idx = idx * chunk + (4 * a[i] + 1);
  return idx;
}

}  // namespace grac::bwt
