#pragma once

#include <cstddef>
#include <vector>

#include "grac/range_grid.hpp"

namespace grac::grid {

/// H superposed butterflies of degree B and depth D sharing layer 0.
/// Labels are a_1..a_D packed as sum a_j * B^(j-1); the edge entering layer i
/// rewrites digit a_i.
struct ButterflyShape {
  std::size_t copies = 1;  // H
  std::size_t degree = 2;  // B
  std::size_t depth = 1;   // D

  std::size_t labels() const;  // B^D
  std::size_t n() const { return depth * labels(); }  // N = D * B^D
  std::size_t edge_count() const { return copies * n() * degree; }
  std::size_t digit(std::size_t label, std::size_t j) const;  // a_j, j = 1..D
  std::size_t with_digit(std::size_t label, std::size_t j, std::size_t value) const;
};

struct ButterflyVertex {
  std::size_t copy = 0;   // ignored on layer 0
  std::size_t layer = 0;  // 0..D
  std::size_t label = 0;
};

/// Edge from `from_label` on layer (layer-1) to the vertex on `layer` whose
/// digit `layer` is `new_digit`.
struct ButterflyEdge {
  std::size_t copy = 0;
  std::size_t layer = 1;  // 1..D
  std::size_t from_label = 0;
  std::size_t new_digit = 0;

  friend bool operator==(const ButterflyEdge&, const ButterflyEdge&) = default;
};

using EdgeId = std::size_t;

class ButterflyGraph {
 public:
  ButterflyGraph(ButterflyShape shape, std::vector<bool> present) : shape_(shape), present_(std::move(present)) {}

  const ButterflyShape& shape() const noexcept { return shape_; }
  EdgeId id(const ButterflyEdge& e) const;
  ButterflyEdge edge(EdgeId id) const;
  bool has(EdgeId id) const { return present_.at(id); }
  std::vector<EdgeId> present_edges() const;

  std::size_t layer0_vertex_count() const { return shape_.labels(); }
  std::size_t layer_vertex_count() const { return shape_.copies * shape_.labels(); }

 private:
  ButterflyShape shape_;
  std::vector<bool> present_;
};

/// Full graph minus `deleted`; an id outside the edge set is UnknownEdge.
ButterflyGraph build_butterfly(std::size_t copies, std::size_t degree, std::size_t depth,
                               const std::vector<EdgeId>& deleted = {});

/// Breadth-first search ground truth; u must be on layer 0, v on layer D.
bool reach_oracle(const ButterflyGraph& g, const ButterflyVertex& u, const ButterflyVertex& v);

/// Present edges on the unique u->v route (D of them iff reachable).
std::size_t present_path_edges(const ButterflyGraph& g, const ButterflyVertex& u, const ButterflyVertex& v);

/// Inclusive, one-based grid rectangle.
struct Rectangle {
  std::size_t x_lo, x_hi, y_lo, y_hi;
};

/// Grid column of a layer-0 vertex (a_D most significant) and row of a
/// last-layer vertex ((h, a_1..a_D) lexicographic), both one-based.
std::size_t grid_column(const ButterflyShape& s, const ButterflyVertex& u);
std::size_t grid_row(const ButterflyShape& s, const ButterflyVertex& v);

/// One rectangle per present edge: sources agreeing on a_i..a_D against sinks
/// of the same copy agreeing on a_1..a'_i.
std::vector<Rectangle> edges_to_rectangles(const ButterflyGraph& g);

/// Counts rectangles covering a cell using four corner point sets and
/// dominance counting.
class StabbingIndex {
 public:
  StabbingIndex(const std::vector<Rectangle>& rects, std::size_t columns, std::size_t rows);
  std::size_t stab_count(std::size_t x, std::size_t y) const;

 private:
  PointSet lo_lo_, hi_lo_, lo_hi_, hi_hi_;
};

bool reach_via_counting(const ButterflyShape& s, const StabbingIndex& index, const ButterflyVertex& u,
                        const ButterflyVertex& v);

}  // namespace grac::grid
