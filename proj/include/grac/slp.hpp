#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/bit_string.hpp"
#include "grac/error.hpp"

namespace grac::slp {

/// Zero-based position of a rule in the rule list. The text format and
/// diagnostics use one-based rule numbers (id + 1).
using SymbolId = std::size_t;

/// A rule is either a terminal bit or the concatenation of two earlier
/// symbols.
struct Rule {
  enum class Kind : std::uint8_t { terminal, pair };

  Kind kind = Kind::terminal;
  bool bit = false;
  SymbolId left = 0;
  SymbolId right = 0;

  static Rule terminal(bool b) { return Rule{Kind::terminal, b, 0, 0}; }
  static Rule pair(SymbolId l, SymbolId r) { return Rule{Kind::pair, false, l, r}; }

  bool is_terminal() const noexcept { return kind == Kind::terminal; }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Straight-line program. The start symbol is always the last rule.
///
/// Construction does not validate; use validate() for a report or any of the
/// query functions, which refuse malformed grammars.
class Slp {
 public:
  Slp() = default;
  explicit Slp(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const Rule& operator[](SymbolId i) const { return rules_[i]; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  SymbolId start() const noexcept { return rules_.size() - 1; }

  friend bool operator==(const Slp&, const Slp&) = default;

 private:
  std::vector<Rule> rules_;
};

/// Per-symbol exact derived length.
using LengthTable = std::vector<BigInt>;

struct Violation {
  Errc code;
  std::size_t rule;  // one-based rule number, 0 for grammar-wide problems
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t rule_count = 0;
  LengthTable lengths;  // filled only when there are no violations

  bool ok() const noexcept { return violations.empty(); }
  const BigInt& text_length() const { return lengths.back(); }
};

ValidationReport validate(const Slp& g);

/// Throws the first violation as an Error.
void require_valid(const Slp& g);

LengthTable lengths(const Slp& g);

/// Unique derived string; refuses to materialize more than `cap` bits.
BitString expand(const Slp& g, std::size_t cap = kDefaultExpandCap);

/// Expansion of an arbitrary symbol (not just the start).
BitString expand_symbol(const Slp& g, SymbolId s, std::size_t cap = kDefaultExpandCap);

/// Zero-based random access by root-to-leaf descent.
bool access(const Slp& g, const BigInt& i);
bool access(const Slp& g, const LengthTable& len, const BigInt& i);

/// Edges on the longest path from the start symbol to a terminal.
std::size_t depth(const Slp& g);

/// SLPv1 text: header `SLPv1 <n>`, then `<i> T <bit>` or `<i> N <j> <k>`.
std::string encode(const Slp& g);
Slp decode(std::string_view text);

/// Appends rules to a grammar under construction; the helpers below keep the
/// start-symbol-last convention intact.
class Builder {
 public:
  SymbolId terminal(bool b);
  SymbolId pair(SymbolId l, SymbolId r);

  /// Balanced binary concatenation of `parts` in order; emits parts.size()-1
  /// rules and returns the lone element unchanged when there is one part.
  SymbolId concat(const std::vector<SymbolId>& parts);

  std::size_t size() const noexcept { return rules_.size(); }
  const Rule& rule(SymbolId s) const { return rules_[s]; }

  /// Finishes with `start` as the start symbol, duplicating its rule at the
  /// end when it is not already the last one.
  Slp finish(SymbolId start) &&;

 private:
  SymbolId concat_range(const std::vector<SymbolId>& parts, std::size_t lo, std::size_t hi);

  std::vector<Rule> rules_;
};

}  // namespace grac::slp
