#include "sosggm/cayley_tree.hpp"

#include <stdexcept>
#include <string>

namespace sosggm {

std::vector<int> TreeBall::boundary() const {
  std::vector<int> shell;
  if (radius == 0) return shell;
  for (int v = 0; v < num_vertices(); ++v) {
    if (depth[v] == radius) shell.push_back(v);
  }
  return shell;
}

TreeBall build_ball(int k, int radius) {
  if (k < 2) {
    throw std::invalid_argument("branching order k must be >= 2, got " +
                                std::to_string(k));
  }
  if (radius < 0) {
    throw std::invalid_argument("radius must be >= 0, got " +
                                std::to_string(radius));
  }

  TreeBall ball;
  ball.k = k;
  ball.radius = radius;
  ball.parent.push_back(-1);
  ball.depth.push_back(0);
  ball.children.emplace_back();

  // BFS layer by layer; the root has k+1 successors, everyone else k.
  std::vector<int> frontier{0};
  for (int d = 1; d <= radius; ++d) {
    std::vector<int> next;
    for (int v : frontier) {
      const int fanout = (v == 0) ? k + 1 : k;
      for (int c = 0; c < fanout; ++c) {
        const int id = ball.num_vertices();
        ball.parent.push_back(v);
        ball.depth.push_back(d);
        ball.children.emplace_back();
        ball.children[v].push_back(id);
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

long path_sum(const TreeBall& ball, int y, const GradientAssignment& zeta) {
  if (y < 0 || y >= ball.num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(y) +
                                " is not in the ball");
  }
  if (static_cast<int>(zeta.size()) != ball.num_edges()) {
    throw std::invalid_argument("assignment covers " +
                                std::to_string(zeta.size()) + " edges, ball has " +
                                std::to_string(ball.num_edges()));
  }
  long s = 0;
  for (int v = y; v != 0; v = ball.parent[v]) {
    s += zeta[v - 1];  // edge id of (parent(v) -> v) is v-1
  }
  return s;
}

}  // namespace sosggm
