#pragma once

#include <vector>

namespace sosggm {

/// Finite radius-n ball of the Cayley tree of order k, rooted at vertex 0.
///
/// Vertices are indexed breadth-first from the root, so identical inputs
/// always yield identical indexing. Oriented edges point away from the root
/// and are identified by their child vertex: edge e (0-based, canonical
/// order) is parent(e+1) -> e+1. Immutable after construction.
struct TreeBall {
  int k = 2;
  int radius = 0;
  std::vector<int> parent;               // parent[0] == -1
  std::vector<int> depth;                // distance to root
  std::vector<std::vector<int>> children;

  int num_vertices() const { return static_cast<int>(parent.size()); }
  int num_edges() const { return num_vertices() - 1; }

  int edge_child(int e) const { return e + 1; }
  int edge_parent(int e) const { return parent[e + 1]; }

  /// Boundary shell W_radius (empty for radius 0).
  std::vector<int> boundary() const;
};

/// Per-edge integer height increments on a ball, canonical edge order.
using GradientAssignment = std::vector<int>;

TreeBall build_ball(int k, int radius);

/// Sum of increments along the unique root-to-y path; 0 for the root.
long path_sum(const TreeBall& ball, int y, const GradientAssignment& zeta);

}  // namespace sosggm
