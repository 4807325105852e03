#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "grac/bit_string.hpp"
#include "grac/slp.hpp"

namespace grac::grid {

struct Point {
  std::size_t x = 1;  // column, 1..W
  std::size_t y = 1;  // row, 1..H
  friend bool operator==(const Point&, const Point&) = default;
};

/// Multiset of grid points. Duplicates are meaningful under parity.
struct PointSet {
  std::size_t width = 1;
  std::size_t height = 1;
  std::vector<Point> points;
};

/// Throws OutOfGrid for points outside [1,W]x[1,H] or an empty grid.
void check_points(const PointSet& ps);

/// Points (px, py) with px <= x and py <= y, counting multiplicity.
std::size_t dominance_count(const PointSet& ps, std::size_t x, std::size_t y);

/// Row-major parity string: bit (y-1)*W + (x-1) = dominance_count mod 2.
BitString answer_oracle(const PointSet& ps, std::size_t cap = kDefaultExpandCap);

/// Extra rules allowed on top of the sweep budget (start duplication and
/// rounding slack).
inline constexpr std::size_t kAnswerGrammarSlack = 2;

/// 4W + 2*P*ceil(log2 W) + 2*(H-1) + 2*ceil(log2 H) + kAnswerGrammarSlack.
std::size_t answer_grammar_rule_bound(std::size_t width, std::size_t height, std::size_t points);

struct AnswerGrammar {
  slp::Slp grammar;
  std::size_t width = 0;           // padded to a power of two
  std::size_t original_width = 0;
  std::size_t height = 0;
  /// Every (symbol, negation) pair created for a tree node.
  std::vector<std::pair<slp::SymbolId, slp::SymbolId>> negations;
  /// Root symbol of each row's tree, bottom row first.
  std::vector<slp::SymbolId> row_roots;
};

/// Builds the answer-string grammar by sweeping rows bottom-up over a
/// persistent segment tree whose nodes carry negated twins, so a suffix flip
/// costs two new rules per tree level. Without auto_pad a width that is not a
/// power of two raises WidthNotPowerOfTwo.
AnswerGrammar compile_answer_grammar(const PointSet& ps, bool auto_pad = true);

/// The same point set on the next power-of-two width.
PointSet padded(const PointSet& ps);

/// CSV lines `x,y`, optional non-numeric header, blank lines ignored.
std::vector<Point> read_points_csv(std::istream& in);
std::string write_points_csv(const std::vector<Point>& points);

}  // namespace grac::grid
