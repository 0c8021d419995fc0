#include <random>
#include <stdexcept>

#include <doctest.h>

#include "sosggm/cayley_tree.hpp"

using sosggm::build_ball;
using sosggm::GradientAssignment;
using sosggm::path_sum;
using sosggm::TreeBall;

TEST_CASE("ball sizes") {
  const TreeBall b22 = build_ball(2, 2);
  CHECK(b22.num_vertices() == 10);
  CHECK(b22.num_edges() == 9);
  CHECK(b22.boundary().size() == 6);

  const TreeBall b31 = build_ball(3, 1);
  CHECK(b31.num_vertices() == 5);
  CHECK(b31.num_edges() == 4);
  CHECK(b31.boundary().size() == 4);

  const TreeBall b20 = build_ball(2, 0);
  CHECK(b20.num_vertices() == 1);
  CHECK(b20.num_edges() == 0);
  CHECK(b20.boundary().empty());
}

TEST_CASE("shell sizes follow (k+1) k^(n-1)") {
  for (int k = 2; k <= 4; ++k) {
    const TreeBall ball = build_ball(k, 3);
    std::vector<int> shell(4, 0);
    for (int v = 0; v < ball.num_vertices(); ++v) ++shell[ball.depth[v]];
    CHECK(shell[0] == 1);
    for (int n = 1; n <= 3; ++n) {
      int expect = k + 1;
      for (int i = 1; i < n; ++i) expect *= k;
      CHECK(shell[n] == expect);
    }
  }
}

TEST_CASE("degrees: root k+1 children, inner vertices k") {
  const TreeBall ball = build_ball(3, 3);
  CHECK(ball.children[0].size() == 4);
  for (int v = 1; v < ball.num_vertices(); ++v) {
    if (ball.depth[v] < ball.radius) {
      CHECK(ball.children[v].size() == 3);
    } else {
      CHECK(ball.children[v].empty());
    }
  }
}

TEST_CASE("tree structure invariants") {
  const TreeBall ball = build_ball(2, 3);
  CHECK(ball.parent[0] == -1);
  for (int v = 1; v < ball.num_vertices(); ++v) {
    CHECK(ball.parent[v] >= 0);
    CHECK(ball.parent[v] < v);  // BFS order
    CHECK(ball.depth[v] == ball.depth[ball.parent[v]] + 1);
  }
  // edge ids are child vertices shifted by one
  for (int e = 0; e < ball.num_edges(); ++e) {
    CHECK(ball.edge_child(e) == e + 1);
    CHECK(ball.edge_parent(e) == ball.parent[e + 1]);
  }
}

TEST_CASE("construction is deterministic") {
  const TreeBall a = build_ball(3, 3);
  const TreeBall b = build_ball(3, 3);
  CHECK(a.parent == b.parent);
  CHECK(a.depth == b.depth);
  CHECK(a.children == b.children);
}

TEST_CASE("path_sum basics") {
  const TreeBall ball = build_ball(2, 2);
  GradientAssignment zero(ball.num_edges(), 0);
  for (int v = 0; v < ball.num_vertices(); ++v) {
    CHECK(path_sum(ball, v, zero) == 0);
  }
  CHECK(path_sum(ball, 0, zero) == 0);

  // depth-2 vertex with increments +1, -3 along its path
  int y = -1;
  for (int v = 0; v < ball.num_vertices(); ++v) {
    if (ball.depth[v] == 2) {
      y = v;
      break;
    }
  }
  REQUIRE(y > 0);
  GradientAssignment zeta(ball.num_edges(), 0);
  zeta[y - 1] = -3;
  zeta[ball.parent[y] - 1] = +1;
  CHECK(path_sum(ball, y, zeta) == -2);
}

TEST_CASE("path_sum additivity property") {
  const TreeBall ball = build_ball(3, 3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> inc(-5, 5);
  GradientAssignment zeta(ball.num_edges());
  for (int& z : zeta) z = inc(rng);
  for (int v = 1; v < ball.num_vertices(); ++v) {
    CHECK(path_sum(ball, v, zeta) ==
          path_sum(ball, ball.parent[v], zeta) + zeta[v - 1]);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_ball(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_ball(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_ball(2, -1), std::invalid_argument);

  const TreeBall ball = build_ball(2, 1);
  GradientAssignment zeta(ball.num_edges(), 0);
  CHECK_THROWS_AS(path_sum(ball, -1, zeta), std::invalid_argument);
  CHECK_THROWS_AS(path_sum(ball, 99, zeta), std::invalid_argument);
  GradientAssignment wrong(ball.num_edges() + 1, 0);
  CHECK_THROWS_AS(path_sum(ball, 1, wrong), std::invalid_argument);
}
