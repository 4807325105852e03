#include "grac/lz.hpp"

#include <array>

#include "grac/error.hpp"

namespace grac::lz {

namespace {

std::vector<std::size_t> z_function(const std::vector<std::uint8_t>& u) {
  const std::size_t n = u.size();
  std::vector<std::size_t> z(n, 0);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && u[z[i]] == u[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace

Lz77Parse lz77_parse(const BitString& s) {
  Lz77Parse parse;
  const std::size_t n = s.size();
  std::size_t pos = 0;
  std::vector<std::uint8_t> u;
  while (pos < n) {
    // u = s[pos..n) # s[0..n); z at the text offset q gives lcp(s[q..], s[pos..]).
    const std::size_t head = n - pos;
    u.assign(head + 1 + pos, 0);
    for (std::size_t i = 0; i < head; ++i) u[i] = s[pos + i] ? 2 : 1;
    u[head] = 3;
    for (std::size_t q = 0; q < pos; ++q) u[head + 1 + q] = s[q] ? 2 : 1;
    // Source text may run past pos (self-overlap), so append the tail too.
    for (std::size_t q = pos; q < n; ++q) u.push_back(s[q] ? 2 : 1);
    auto z = z_function(u);

    std::size_t best_len = 0, best_src = 0;
    for (std::size_t q = 0; q < pos; ++q) {
      std::size_t len = std::min(z[head + 1 + q], head);
      if (len > best_len) {
        best_len = len;
        best_src = q;
      }
    }
    if (best_len == 0) {
      parse.factors.push_back(Lz77Factor::literal(s[pos]));
      ++pos;
    } else {
      parse.factors.push_back(Lz77Factor::copy(best_src, best_len));
      pos += best_len;
    }
  }
  return parse;
}

BitString lz77_decode(const Lz77Parse& parse) {
  BitString out;
  for (const Lz77Factor& f : parse.factors) {
    if (f.kind == Lz77Factor::Kind::literal) {
      out.push_back(f.bit);
      continue;
    }
    if (f.length == 0 || f.source >= out.size()) throw Error(Errc::malformed_code, "copy source not before the factor");
    for (std::size_t k = 0; k < f.length; ++k) out.push_back(out[f.source + k]);
  }
  return out;
}

std::size_t Lz78Parse::complete_phrases() const {
  std::size_t c = 0;
  for (const auto& p : phrases)
    if (p.extension) ++c;
  return c;
}

Lz78Parse lz78_parse(const BitString& s) {
  Lz78Parse parse;
  std::vector<std::array<std::size_t, 2>> trie{{0, 0}};  // child 0 means absent
  std::size_t cur = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int b = s[i] ? 1 : 0;
    if (trie[cur][b] != 0) {
      cur = trie[cur][b];
      continue;
    }
    parse.phrases.push_back({cur, s[i]});
    trie.push_back({0, 0});
    trie[cur][b] = trie.size() - 1;
    cur = 0;
  }
  if (cur != 0) parse.phrases.push_back({cur, std::nullopt});
  return parse;
}

BitString lz78_decode(const Lz78Parse& parse) {
  // Each phrase is stored as (start, length) into the output.
  std::vector<std::pair<std::size_t, std::size_t>> spans{{0, 0}};
  BitString out;
  for (std::size_t k = 0; k < parse.phrases.size(); ++k) {
    const Lz78Phrase& p = parse.phrases[k];
    if (p.prefix >= spans.size()) throw Error(Errc::malformed_code, "phrase refers to a later phrase");
    if (!p.extension && k + 1 != parse.phrases.size())
      throw Error(Errc::malformed_code, "only the final phrase may lack an extension");
    auto [start, len] = spans[p.prefix];
    std::size_t begin = out.size();
    for (std::size_t i = 0; i < len; ++i) out.push_back(out[start + i]);
    if (p.extension) out.push_back(*p.extension);
    spans.emplace_back(begin, out.size() - begin);
  }
  return out;
}

LzReport lz_report(const slp::Slp& g, std::size_t cap) {
  BitString text = slp::expand(g, cap);
  LzReport r;
  r.grammar_size = g.size();
  r.lz77_factors = lz77_parse(text).factors.size();
  r.lz78_phrases = lz78_parse(text).phrases.size();
  r.string_length = text.size();
  return r;
}

}  // namespace grac::lz
