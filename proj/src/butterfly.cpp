#include "grac/butterfly.hpp"

#include <deque>

#include "grac/error.hpp"

namespace grac::grid {

namespace {

constexpr std::size_t kMaxEdges = std::size_t{1} << 26;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_endpoints(const ButterflyShape& s, const ButterflyVertex& u, const ButterflyVertex& v) {
  if (u.layer != 0) throw Error(Errc::bad_layer, "source must be on layer 0, got layer " + std::to_string(u.layer));
  if (v.layer != s.depth)
    throw Error(Errc::bad_layer, "target must be on layer " + std::to_string(s.depth) + ", got layer " + std::to_string(v.layer));
  if (u.label >= s.labels() || v.label >= s.labels() || v.copy >= s.copies)
    throw Error(Errc::invalid_argument, "vertex label or copy out of range");
}

}  // namespace

std::size_t ButterflyShape::labels() const { return ipow(degree, depth); }

std::size_t ButterflyShape::digit(std::size_t label, std::size_t j) const {
  return (label / ipow(degree, j - 1)) % degree;
}

std::size_t ButterflyShape::with_digit(std::size_t label, std::size_t j, std::size_t value) const {
  std::size_t w = ipow(degree, j - 1);
  return label - digit(label, j) * w + value * w;
}

EdgeId ButterflyGraph::id(const ButterflyEdge& e) const {
  const auto& s = shape_;
  if (e.copy >= s.copies || e.layer < 1 || e.layer > s.depth || e.from_label >= s.labels() || e.new_digit >= s.degree)
    throw Error(Errc::unknown_edge, "edge components out of range");
  return ((e.copy * s.depth + (e.layer - 1)) * s.labels() + e.from_label) * s.degree + e.new_digit;
}

ButterflyEdge ButterflyGraph::edge(EdgeId id) const {
  const auto& s = shape_;
  if (id >= s.edge_count()) throw Error(Errc::unknown_edge, "edge id " + std::to_string(id) + " not in graph");
  ButterflyEdge e;
  e.new_digit = id % s.degree;
  id /= s.degree;
  e.from_label = id % s.labels();
  id /= s.labels();
  e.layer = id % s.depth + 1;
  e.copy = id / s.depth;
  return e;
}

std::vector<EdgeId> ButterflyGraph::present_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < present_.size(); ++i)
    if (present_[i]) out.push_back(i);
  return out;
}

ButterflyGraph build_butterfly(std::size_t copies, std::size_t degree, std::size_t depth,
                               const std::vector<EdgeId>& deleted) {
  if (copies < 1 || degree < 1 || depth < 1) throw Error(Errc::invalid_argument, "H, B and D must be positive");
  ButterflyShape s{copies, degree, depth};
  // Overflow-safe size check before allocating.
  double approx = static_cast<double>(copies) * depth * degree;
  for (std::size_t i = 0; i < depth; ++i) approx *= degree;
  if (approx > static_cast<double>(kMaxEdges)) throw Error(Errc::invalid_argument, "butterfly graph too large");

  std::vector<bool> present(s.edge_count(), true);
  for (EdgeId id : deleted) {
    if (id >= present.size()) throw Error(Errc::unknown_edge, "edge id " + std::to_string(id) + " not in graph");
    present[id] = false;
  }
  return ButterflyGraph(s, std::move(present));
}

bool reach_oracle(const ButterflyGraph& g, const ButterflyVertex& u, const ButterflyVertex& v) {
  const auto& s = g.shape();
  check_endpoints(s, u, v);
  const std::size_t labels = s.labels();
  // Vertex slot: layer 0 -> label; layer i >= 1 -> labels + ((i-1)*H + h)*labels + label.
  auto slot = [&](std::size_t copy, std::size_t layer, std::size_t label) {
    return layer == 0 ? label : labels + ((layer - 1) * s.copies + copy) * labels + label;
  };
  std::vector<bool> seen(labels + s.depth * s.copies * labels, false);
  std::deque<ButterflyVertex> queue{{0, 0, u.label}};
  seen[slot(0, 0, u.label)] = true;
  while (!queue.empty()) {
    ButterflyVertex cur = queue.front();
    queue.pop_front();
    if (cur.layer == s.depth) continue;
    std::size_t next_layer = cur.layer + 1;
    std::size_t first_copy = cur.layer == 0 ? 0 : cur.copy;
    std::size_t last_copy = cur.layer == 0 ? s.copies : cur.copy + 1;
    for (std::size_t h = first_copy; h < last_copy; ++h) {
      for (std::size_t d = 0; d < s.degree; ++d) {
        if (!g.has(g.id({h, next_layer, cur.label, d}))) continue;
        std::size_t to = s.with_digit(cur.label, next_layer, d);
        std::size_t k = slot(h, next_layer, to);
        if (seen[k]) continue;
        seen[k] = true;
        queue.push_back({h, next_layer, to});
      }
    }
  }
  return seen[slot(v.copy, v.layer, v.label)];
}

std::size_t present_path_edges(const ButterflyGraph& g, const ButterflyVertex& u, const ButterflyVertex& v) {
  const auto& s = g.shape();
  check_endpoints(s, u, v);
  std::size_t label = u.label;
  std::size_t count = 0;
  for (std::size_t i = 1; i <= s.depth; ++i) {
    std::size_t d = s.digit(v.label, i);
    if (g.has(g.id({v.copy, i, label, d}))) ++count;
    label = s.with_digit(label, i, d);
  }
  return count;
}

std::size_t grid_column(const ButterflyShape&, const ButterflyVertex& u) { return u.label + 1; }

std::size_t grid_row(const ButterflyShape& s, const ButterflyVertex& v) {
  std::size_t lex = 0;
  for (std::size_t j = 1; j <= s.depth; ++j) lex = lex * s.degree + s.digit(v.label, j);
  return v.copy * s.labels() + lex + 1;
}

std::vector<Rectangle> edges_to_rectangles(const ButterflyGraph& g) {
  const auto& s = g.shape();
  std::vector<Rectangle> out;
  for (EdgeId id : g.present_edges()) {
    ButterflyEdge e = g.edge(id);
    const std::size_t i = e.layer;

    // Sources: digits i..D fixed, 1..i-1 free -> a block of B^(i-1) columns.
    std::size_t low_span = ipow(s.degree, i - 1);
    std::size_t x_base = e.from_label - e.from_label % low_span;

    // Sinks: digits 1..i fixed (a_1..a_{i-1}, new digit), i+1..D free.
    std::size_t prefix = 0;
    for (std::size_t j = 1; j < i; ++j) prefix = prefix * s.degree + s.digit(e.from_label, j);
    prefix = prefix * s.degree + e.new_digit;
    std::size_t high_span = ipow(s.degree, s.depth - i);
    std::size_t y_base = e.copy * s.labels() + prefix * high_span;

    out.push_back({x_base + 1, x_base + low_span, y_base + 1, y_base + high_span});
  }
  return out;
}

StabbingIndex::StabbingIndex(const std::vector<Rectangle>& rects, std::size_t columns, std::size_t rows) {
  for (PointSet* ps : {&lo_lo_, &hi_lo_, &lo_hi_, &hi_hi_}) {
    ps->width = columns + 1;
    ps->height = rows + 1;
  }
  for (const Rectangle& r : rects) {
    if (r.x_lo < 1 || r.x_lo > r.x_hi || r.x_hi > columns || r.y_lo < 1 || r.y_lo > r.y_hi || r.y_hi > rows)
      throw Error(Errc::out_of_grid, "rectangle outside the grid");
    lo_lo_.points.push_back({r.x_lo, r.y_lo});
    hi_lo_.points.push_back({r.x_hi + 1, r.y_lo});
    lo_hi_.points.push_back({r.x_lo, r.y_hi + 1});
    hi_hi_.points.push_back({r.x_hi + 1, r.y_hi + 1});
  }
}

std::size_t StabbingIndex::stab_count(std::size_t x, std::size_t y) const {
  return (dominance_count(lo_lo_, x, y) + dominance_count(hi_hi_, x, y)) -
         (dominance_count(hi_lo_, x, y) + dominance_count(lo_hi_, x, y));
}

bool reach_via_counting(const ButterflyShape& s, const StabbingIndex& index, const ButterflyVertex& u,
                        const ButterflyVertex& v) {
  check_endpoints(s, u, v);
  return index.stab_count(grid_column(s, u), grid_row(s, v)) == s.depth;
}

}  // namespace grac::grid
