#include "grac/slp.hpp"

#include <algorithm>
#include <sstream>

namespace grac::slp {

ValidationReport validate(const Slp& g) {
  ValidationReport report;
  report.rule_count = g.size();
  if (g.empty()) {
    report.violations.push_back({Errc::empty_grammar, 0, "grammar has no rules"});
    return report;
  }
  for (SymbolId i = 0; i < g.size(); ++i) {
    const Rule& r = g[i];
    if (r.is_terminal()) continue;
    if (r.left >= i || r.right >= i) {
      std::ostringstream msg;
      msg << "rule " << i + 1 << " references " << std::max(r.left, r.right) + 1
          << " which is not an earlier rule";
      report.violations.push_back({Errc::forward_reference, i + 1, msg.str()});
    }
  }
  if (!report.ok()) return report;

  report.lengths = lengths(g);
  // Always true for well-ordered rules; kept as an explicit check of the bound.
  if (report.lengths.back() > pow_big(2, g.size())) {
    report.violations.push_back({Errc::invalid_argument, g.size(), "derived length exceeds 2^n"});
    report.lengths.clear();
  }
  return report;
}

void require_valid(const Slp& g) {
  if (g.empty()) throw Error(Errc::empty_grammar, "grammar has no rules");
  for (SymbolId i = 0; i < g.size(); ++i) {
    const Rule& r = g[i];
    if (!r.is_terminal() && (r.left >= i || r.right >= i)) {
      throw Error(Errc::forward_reference,
                  "rule " + std::to_string(i + 1) + " references " +
                      std::to_string(std::max(r.left, r.right) + 1));
    }
  }
}

namespace {

LengthTable lengths_unchecked(const Slp& g) {
  LengthTable len(g.size());
  for (SymbolId i = 0; i < g.size(); ++i) {
    const Rule& r = g[i];
    len[i] = r.is_terminal() ? BigInt(1) : len[r.left] + len[r.right];
  }
  return len;
}

}  // namespace

LengthTable lengths(const Slp& g) {
  require_valid(g);
  return lengths_unchecked(g);
}

BitString expand_symbol(const Slp& g, SymbolId s, std::size_t cap) {
  require_valid(g);
  if (s >= g.size()) throw Error(Errc::out_of_range, "symbol " + std::to_string(s + 1) + " does not exist");
  LengthTable len = lengths_unchecked(g);
  if (len[s] > cap) throw Error(Errc::cap_exceeded, "derived length " + len[s].str() + " above cap " + std::to_string(cap));

  BitString out;
  out.reserve(static_cast<std::size_t>(len[s]));
  std::vector<SymbolId> stack{s};
  while (!stack.empty()) {
    SymbolId top = stack.back();
    stack.pop_back();
    const Rule& r = g[top];
    if (r.is_terminal()) {
      out.push_back(r.bit);
    } else {
      stack.push_back(r.right);
      stack.push_back(r.left);
    }
  }
  return out;
}

BitString expand(const Slp& g, std::size_t cap) {
  if (g.empty()) throw Error(Errc::empty_grammar, "grammar has no rules");
  return expand_symbol(g, g.start(), cap);
}

bool access(const Slp& g, const LengthTable& len, const BigInt& i) {
  if (i < 0 || i >= len.back())
    throw Error(Errc::out_of_range, "index " + i.str() + " not below L=" + len.back().str());
  BigInt pos = i;
  SymbolId cur = g.start();
  while (!g[cur].is_terminal()) {
    const Rule& r = g[cur];
    if (pos < len[r.left]) {
      cur = r.left;
    } else {
      pos -= len[r.left];
      cur = r.right;
    }
  }
  return g[cur].bit;
}

bool access(const Slp& g, const BigInt& i) { return access(g, lengths(g), i); }

std::size_t depth(const Slp& g) {
  require_valid(g);
  std::vector<std::size_t> d(g.size(), 0);
  for (SymbolId i = 0; i < g.size(); ++i) {
    const Rule& r = g[i];
    if (!r.is_terminal()) d[i] = 1 + std::max(d[r.left], d[r.right]);
  }
  return d.back();
}

std::string encode(const Slp& g) {
  require_valid(g);
  std::ostringstream out;
  out << "SLPv1 " << g.size() << '\n';
  for (SymbolId i = 0; i < g.size(); ++i) {
    const Rule& r = g[i];
    out << i + 1;
    if (r.is_terminal())
      out << " T " << (r.bit ? 1 : 0) << '\n';
    else
      out << " N " << r.left + 1 << ' ' << r.right + 1 << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    parse_fail(line, "expected a decimal integer, got '" + tok + "'");
  if (tok.size() > 18) parse_fail(line, "integer too large: " + tok);
  return std::stoull(tok);
}

}  // namespace

Slp decode(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  auto next_nonblank = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_nonblank(line)) parse_fail(1, "missing SLPv1 header");
  std::istringstream header(line);
  std::string magic, count_tok, extra;
  header >> magic >> count_tok;
  if (magic != "SLPv1" || count_tok.empty() || (header >> extra))
    parse_fail(lineno, "expected header 'SLPv1 <n>'");
  std::size_t n = parse_count(count_tok, lineno);

  std::vector<Rule> rules;
  rules.reserve(n);
  while (rules.size() < n) {
    if (!next_nonblank(line)) parse_fail(lineno + 1, "expected " + std::to_string(n) + " rules, found " + std::to_string(rules.size()));
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    std::size_t idx = parse_count(tok[0], lineno);
    if (idx != rules.size() + 1)
      parse_fail(lineno, "rule index " + std::to_string(idx) + " out of order, expected " + std::to_string(rules.size() + 1));
    if (tok.size() == 3 && tok[1] == "T") {
      if (tok[2] != "0" && tok[2] != "1") parse_fail(lineno, "terminal must be 0 or 1");
      rules.push_back(Rule::terminal(tok[2] == "1"));
    } else if (tok.size() == 4 && tok[1] == "N") {
      std::size_t j = parse_count(tok[2], lineno);
      std::size_t k = parse_count(tok[3], lineno);
      if (j < 1 || k < 1 || j >= idx || k >= idx)
        parse_fail(lineno, "rule " + std::to_string(idx) + " must reference earlier rules");
      rules.push_back(Rule::pair(j - 1, k - 1));
    } else {
      parse_fail(lineno, "malformed rule '" + line + "'");
    }
  }
  if (next_nonblank(line)) parse_fail(lineno, "trailing content after " + std::to_string(n) + " rules");
  if (rules.empty()) throw Error(Errc::empty_grammar, "grammar has no rules");
  return Slp(std::move(rules));
}

SymbolId Builder::terminal(bool b) {
  rules_.push_back(Rule::terminal(b));
  return rules_.size() - 1;
}

SymbolId Builder::pair(SymbolId l, SymbolId r) {
  rules_.push_back(Rule::pair(l, r));
  return rules_.size() - 1;
}

SymbolId Builder::concat_range(const std::vector<SymbolId>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  SymbolId l = concat_range(parts, lo, mid);
  SymbolId r = concat_range(parts, mid, hi);
  return pair(l, r);
}

SymbolId Builder::concat(const std::vector<SymbolId>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "cannot concatenate zero symbols");
  return concat_range(parts, 0, parts.size());
}

Slp Builder::finish(SymbolId start) && {
  if (start >= rules_.size()) throw Error(Errc::out_of_range, "start symbol does not exist");
  if (start != rules_.size() - 1) rules_.push_back(rules_[start]);
  return Slp(std::move(rules_));
}

}  // namespace grac::slp
