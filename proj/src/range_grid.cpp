#include "grac/range_grid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "grac/error.hpp"

namespace grac::grid {

void check_points(const PointSet& ps) {
  if (ps.width == 0 || ps.height == 0) throw Error(Errc::out_of_grid, "grid must be at least 1x1");
  for (const Point& p : ps.points) {
    if (p.x < 1 || p.x > ps.width || p.y < 1 || p.y > ps.height)
      throw Error(Errc::out_of_grid, "point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") outside " +
                                         std::to_string(ps.width) + "x" + std::to_string(ps.height));
  }
}

std::size_t dominance_count(const PointSet& ps, std::size_t x, std::size_t y) {
  if (x < 1 || x > ps.width || y < 1 || y > ps.height)
    throw Error(Errc::out_of_grid, "query (" + std::to_string(x) + "," + std::to_string(y) + ") outside grid");
  return static_cast<std::size_t>(
      std::count_if(ps.points.begin(), ps.points.end(), [&](const Point& p) { return p.x <= x && p.y <= y; }));
}

BitString answer_oracle(const PointSet& ps, std::size_t cap) {
  check_points(ps);
  if (ps.width > cap / ps.height) throw Error(Errc::cap_exceeded, "answer string of W*H bits above cap");
  BitString out;
  out.reserve(ps.width * ps.height);
  for (std::size_t y = 1; y <= ps.height; ++y)
    for (std::size_t x = 1; x <= ps.width; ++x) out.push_back(dominance_count(ps, x, y) % 2 == 1);
  return out;
}

std::size_t answer_grammar_rule_bound(std::size_t width, std::size_t height, std::size_t points) {
  std::size_t w = std::bit_ceil(width);
  return 4 * w + 2 * points * ceil_log2(std::uint64_t{w}) + 2 * (height - 1) +
         2 * ceil_log2(std::uint64_t{height}) + kAnswerGrammarSlack;
}

PointSet padded(const PointSet& ps) {
  PointSet out = ps;
  out.width = std::bit_ceil(ps.width);
  return out;
}

namespace {

/// Heap-indexed complete binary tree over the leaves of one row. Each node
/// holds the symbol deriving its current segment and the symbol deriving the
/// complement; `flipped` marks subtrees whose descendants still hold the
/// pre-flip pair.
class SweepTree {
 public:
  SweepTree(slp::Builder& b, std::size_t width, AnswerGrammar& out)
      : b_(b), width_(width), sym_(2 * width), neg_(2 * width), flipped_(2 * width, false), out_(out) {
    slp::SymbolId zero = b_.terminal(false);
    slp::SymbolId one = b_.terminal(true);
    for (std::size_t v = width_; v < 2 * width_; ++v) {
      sym_[v] = zero;
      neg_[v] = one;
    }
    out_.negations.emplace_back(zero, one);
    for (std::size_t v = width_; v-- > 1;) rebuild(v);
  }

  slp::SymbolId root() const { return sym_[1]; }

  /// Negates every leaf at column >= col (zero-based).
  void flip_suffix(std::size_t col) {
    std::size_t leaf = width_ + col;
    // Push pending flips down along the root-to-leaf path.
    for (unsigned shift = std::countr_zero(width_); shift > 0; --shift) push(leaf >> shift);

    swap_node(leaf);
    for (std::size_t v = leaf; v > 1; v >>= 1) {
      std::size_t parent = v >> 1;
      if ((v & 1) == 0) toggle(v + 1);
      rebuild(parent);
    }
  }

 private:
  void swap_node(std::size_t v) { std::swap(sym_[v], neg_[v]); }

  void toggle(std::size_t v) {
    swap_node(v);
    if (v < width_) flipped_[v] = !flipped_[v];
  }

  void push(std::size_t v) {
    if (!flipped_[v]) return;
    toggle(2 * v);
    toggle(2 * v + 1);
    flipped_[v] = false;
  }

  void rebuild(std::size_t v) {
    // Negation first so that the latest node symbol is the last rule.
    neg_[v] = b_.pair(neg_[2 * v], neg_[2 * v + 1]);
    sym_[v] = b_.pair(sym_[2 * v], sym_[2 * v + 1]);
    out_.negations.emplace_back(sym_[v], neg_[v]);
  }

  slp::Builder& b_;
  std::size_t width_;
  std::vector<slp::SymbolId> sym_;
  std::vector<slp::SymbolId> neg_;
  std::vector<bool> flipped_;
  AnswerGrammar& out_;
};

}  // namespace

AnswerGrammar compile_answer_grammar(const PointSet& ps, bool auto_pad) {
  check_points(ps);
  if (!auto_pad && !std::has_single_bit(ps.width))
    throw Error(Errc::width_not_power_of_two, "width " + std::to_string(ps.width) + " is not a power of two");

  AnswerGrammar out;
  out.original_width = ps.width;
  out.width = std::bit_ceil(ps.width);
  out.height = ps.height;

  std::vector<std::vector<std::size_t>> by_row(ps.height + 1);
  for (const Point& p : ps.points) by_row[p.y].push_back(p.x);

  slp::Builder b;
  SweepTree tree(b, out.width, out);

  for (std::size_t y = 1; y <= ps.height; ++y) {
    for (std::size_t x : by_row[y]) tree.flip_suffix(x - 1);
    out.row_roots.push_back(tree.root());
  }
  slp::SymbolId start = b.concat(out.row_roots);
  out.grammar = std::move(b).finish(start);
  return out;
}

std::vector<Point> read_points_csv(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = line.find(',');
    auto field = [&](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string xs = comma == std::string::npos ? field(line) : field(line.substr(0, comma));
    std::string ys = comma == std::string::npos ? std::string() : field(line.substr(comma + 1));
    bool numeric = !xs.empty() && !ys.empty() &&
                   std::all_of(xs.begin(), xs.end(), ::isdigit) && std::all_of(ys.begin(), ys.end(), ::isdigit);
    if (!numeric) {
      if (out.empty() && lineno == 1) continue;  // header
      throw Error(Errc::parse_error, "points line " + std::to_string(lineno) + ": expected 'x,y'");
    }
    if (xs.size() > 18 || ys.size() > 18) throw Error(Errc::parse_error, "points line " + std::to_string(lineno) + ": coordinate too large");
    out.push_back({std::stoull(xs), std::stoull(ys)});
  }
  return out;
}

std::string write_points_csv(const std::vector<Point>& points) {
  std::ostringstream out;
  out << "x,y\n";
  for (const Point& p : points) out << p.x << ',' << p.y << '\n';
  return out.str();
}

}  // namespace grac::grid
