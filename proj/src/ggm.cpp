#include "sosggm/ggm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "sosggm/errors.hpp"

namespace sosggm {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  double base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

// theta^|j| lookup for |j| <= M.
std::vector<double> weight_lut(double theta, int m) {
  std::vector<double> lut(m + 1);
  lut[0] = 1.0;
  for (int j = 1; j <= m; ++j) lut[j] = lut[j - 1] * theta;
  return lut;
}

// Class weights of the truncated alphabet: sum of theta^|i| over |i| <= M
// with i == d (mod 4).
Eigen::Array4d truncated_class_weights(double theta, int m) {
  Eigen::Array4d t = Eigen::Array4d::Zero();
  double w = 1.0;
  t(0) += 1.0;
  for (int i = 1; i <= m; ++i) {
    w *= theta;
    t(mod4(i)) += w;
    t(mod4(-i)) += w;
  }
  return t;
}

std::size_t checked_table_size(int num_edges, int truncation,
                               std::size_t budget) {
  const std::size_t base = 2 * static_cast<std::size_t>(truncation) + 1;
  std::size_t n = 1;
  for (int e = 0; e < num_edges; ++e) {
    if (n > budget / base) {
      throw BudgetExceeded(
          "joint table of " + std::to_string(num_edges) + " edges at |zeta| <= " +
          std::to_string(truncation) + " exceeds the entry budget of " +
          std::to_string(budget) + "; use edge_marginal_exact instead");
    }
    n *= base;
  }
  if (n > budget) {
    throw BudgetExceeded("joint table exceeds the entry budget; use "
                         "edge_marginal_exact instead");
  }
  return n;
}

// Edge lists of root-to-vertex paths for the boundary shell.
std::vector<std::vector<int>> boundary_paths(const TreeBall& ball) {
  std::vector<std::vector<int>> paths;
  for (int y : ball.boundary()) {
    std::vector<int> p;
    for (int v = y; v != 0; v = ball.parent[v]) p.push_back(v - 1);
    paths.push_back(std::move(p));
  }
  return paths;
}

// Upward class messages: W_v(m) = subtree weight below v given the shifted
// accumulated class at v equals m, boundary factor l at the leaves.
// Messages are rescaled per vertex and per child; the factors are global
// constants of the table, so they drop out of every normalized quantity
// while keeping the products in double range for any k.
std::vector<Eigen::Array4d> up_messages(const TreeBall& ball,
                                        const Eigen::Array4d& weights,
                                        const ClassWeightTable& cw) {
  std::vector<Eigen::Array4d> w(ball.num_vertices());
  for (int v = ball.num_vertices() - 1; v >= 0; --v) {
    if (ball.children[v].empty()) {
      w[v] = weights / weights.maxCoeff();
    } else {
      Eigen::Array4d acc = Eigen::Array4d::Ones();
      for (int c : ball.children[v]) {
        Eigen::Array4d in;
        for (int m = 0; m < 4; ++m) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d) s += cw.T(d) * w[c](mod4(m + d));
          in(m) = s;
        }
        acc *= in / in.maxCoeff();
      }
      w[v] = acc / acc.maxCoeff();
    }
  }
  return w;
}

double omitted_mass_bound(const ClassWeightTable& cw, int num_edges, int m) {
  const double tail = 2.0 * std::pow(cw.theta, m + 1) / (1.0 - cw.theta);
  return static_cast<double>(num_edges) * tail / cw.T.minCoeff();
}

}  // namespace

Eigen::Array4d law_weights(const PeriodicBoundaryLaw& law,
                           const Params& params) {
  return {1.0, ipow(law.b, params.k), 1.0, ipow(law.a, params.k)};
}

std::size_t MarginalTable::index_of(const GradientAssignment& zeta) const {
  if (static_cast<int>(zeta.size()) != num_edges()) {
    throw std::invalid_argument("assignment does not match the table's edges");
  }
  const std::size_t base = 2 * static_cast<std::size_t>(truncation) + 1;
  std::size_t idx = 0;
  for (int e = num_edges() - 1; e >= 0; --e) {
    const int digit = zeta[e] + truncation;
    if (digit < 0 || digit >= static_cast<int>(base)) {
      throw std::invalid_argument("assignment exceeds the truncation");
    }
    idx = idx * base + static_cast<std::size_t>(digit);
  }
  return idx;
}

GradientAssignment MarginalTable::assignment_at(std::size_t index) const {
  const std::size_t base = 2 * static_cast<std::size_t>(truncation) + 1;
  GradientAssignment zeta(edges.size());
  for (int e = 0; e < num_edges(); ++e) {
    zeta[e] = static_cast<int>(index % base) - truncation;
    index /= base;
  }
  return zeta;
}

double MarginalTable::prob(const GradientAssignment& zeta) const {
  return probs[index_of(zeta)];
}

MarginalTable marginal_table_with_weights(const TreeBall& ball,
                                          const Eigen::Array4d& weights,
                                          const Params& params, int truncation,
                                          std::size_t entry_budget) {
  if (ball.radius < 1) {
    throw std::invalid_argument("marginal table needs a ball of radius >= 1");
  }
  if (truncation < 1) {
    throw std::invalid_argument("truncation must be >= 1");
  }
  const int num_edges = ball.num_edges();
  const std::size_t size =
      checked_table_size(num_edges, truncation, entry_budget);

  MarginalTable table;
  table.truncation = truncation;
  for (int e = 0; e < num_edges; ++e) {
    table.edges.emplace_back(ball.edge_parent(e), ball.edge_child(e));
  }

  const auto paths = boundary_paths(ball);
  const auto lut = weight_lut(params.theta, truncation);
  const ClassWeightTable cw = ClassWeightTable::make(params.theta);
  table.tail_bound = omitted_mass_bound(cw, num_edges, truncation);

  table.probs.assign(size, 0.0);
  GradientAssignment zeta(num_edges, -truncation);
  double total = 0.0;
  for (std::size_t idx = 0;; ++idx) {
    double transfer = 1.0;
    for (int e = 0; e < num_edges; ++e) transfer *= lut[std::abs(zeta[e])];

    double bf = 0.0;
    for (int s = 0; s < 4; ++s) {
      double prod = 1.0;
      for (const auto& path : paths) {
        long c = s;
        for (int e : path) c += zeta[e];
        prod *= weights(mod4(c));
      }
      bf += prod;
    }
    const double w = bf * transfer;
    if (!std::isfinite(w)) {
      throw OracleFailure("marginal table weight overflowed; parameters out "
                          "of double range");
    }
    table.probs[idx] = w;
    total += w;

    int e = 0;
    while (e < num_edges && zeta[e] == truncation) zeta[e++] = -truncation;
    if (e == num_edges) break;
    ++zeta[e];
  }

  table.normalizer = total;
  for (double& p : table.probs) p /= total;
  return table;
}

MarginalTable marginal_table(const TreeBall& ball,
                             const PeriodicBoundaryLaw& law,
                             const Params& params, int truncation,
                             std::size_t entry_budget) {
  return marginal_table_with_weights(ball, law_weights(law, params), params,
                                     truncation, entry_budget);
}

double EdgeMarginal::prob(long j) const {
  const int d = mod4(j);
  return class_prob(d) * std::pow(theta, static_cast<double>(std::labs(j))) /
         class_mass(d);
}

EdgeMarginal edge_marginal_exact_with_weights(const Eigen::Array4d& weights,
                                              const Params& params,
                                              const TreeBall& ball, int edge) {
  if (ball.radius < 1) {
    throw std::invalid_argument("edge marginal needs a ball of radius >= 1");
  }
  if (edge < 0 || edge >= ball.num_edges()) {
    throw std::invalid_argument("edge " + std::to_string(edge) +
                                " is not in the ball");
  }
  const ClassWeightTable cw = ClassWeightTable::make(params.theta);
  const auto up = up_messages(ball, weights, cw);

  // Downward messages D_v(m): weight of everything outside the subtree of v
  // given the shifted accumulated class at v is m; root side carries the
  // uniform shift sum. Sibling products are formed by exclusion (no
  // division) and rescaled per step.
  const auto incoming = [&](int c) {
    Eigen::Array4d in;
    for (int m = 0; m < 4; ++m) {
      double s = 0.0;
      for (int d = 0; d < 4; ++d) s += cw.T(d) * up[c](mod4(m + d));
      in(m) = s;
    }
    return Eigen::Array4d(in / in.maxCoeff());
  };
  const auto sibling_context = [&](int v, int excluded,
                                   const Eigen::Array4d& from_above) {
    Eigen::Array4d ctx = from_above;
    for (int c : ball.children[v]) {
      if (c == excluded) continue;
      ctx *= incoming(c);
      ctx /= ctx.maxCoeff();
    }
    return ctx;
  };

  std::vector<Eigen::Array4d> down(ball.num_vertices());
  down[0] = Eigen::Array4d::Ones();
  for (int v = 0; v < ball.num_vertices(); ++v) {
    for (int c : ball.children[v]) {
      const Eigen::Array4d ctx = sibling_context(v, c, down[v]);
      Eigen::Array4d msg;
      for (int m = 0; m < 4; ++m) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d) s += cw.T(d) * ctx(mod4(m - d));
        msg(m) = s;
      }
      down[c] = msg / msg.maxCoeff();
    }
  }

  const int child = ball.edge_child(edge);
  const int parent = ball.edge_parent(edge);
  const Eigen::Array4d ctx = sibling_context(parent, child, down[parent]);

  EdgeMarginal em;
  em.theta = params.theta;
  em.class_mass = cw.T;
  for (int d = 0; d < 4; ++d) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += ctx(m) * up[child](mod4(m + d));
    em.class_prob(d) = cw.T(d) * s;
  }
  em.class_prob /= em.class_prob.sum();
  return em;
}

EdgeMarginal edge_marginal_exact(const PeriodicBoundaryLaw& law,
                                 const Params& params, const TreeBall& ball,
                                 int edge) {
  return edge_marginal_exact_with_weights(law_weights(law, params), params,
                                          ball, edge);
}

double consistency_check_with_weights(const Eigen::Array4d& weights,
                                      const Params& params, int radius_small,
                                      int radius_big, int truncation,
                                      std::size_t entry_budget) {
  if (radius_small < 1 || radius_small >= radius_big) {
    throw std::invalid_argument("need 1 <= radius_small < radius_big");
  }
  const TreeBall small = build_ball(params.k, radius_small);
  const TreeBall big = build_ball(params.k, radius_big);

  const MarginalTable direct = marginal_table_with_weights(
      small, weights, params, truncation, entry_budget);

  // Sum out the shells below radius_small of the big ball: a class DP with
  // the truncated alphabet. G_v(m) = summed weight of the subtree of v in
  // the big ball given shifted class m at v. Per-vertex rescaling is a
  // global constant of the marginalized table.
  const Eigen::Array4d tm = truncated_class_weights(params.theta, truncation);
  std::vector<Eigen::Array4d> g(big.num_vertices());
  for (int v = big.num_vertices() - 1; v >= 0; --v) {
    if (big.depth[v] < radius_small) break;  // BFS order: all deeper done
    if (big.children[v].empty()) {
      g[v] = weights / weights.maxCoeff();
    } else {
      Eigen::Array4d acc = Eigen::Array4d::Ones();
      for (int c : big.children[v]) {
        Eigen::Array4d in;
        for (int m = 0; m < 4; ++m) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d) s += tm(d) * g[c](mod4(m + d));
          in(m) = s;
        }
        acc *= in / in.maxCoeff();
      }
      g[v] = acc / acc.maxCoeff();
    }
  }

  // The first small.num_vertices() vertices of the big ball are the small
  // ball (identical BFS construction), so paths and edge ids coincide.
  const auto paths = boundary_paths(small);
  const auto shell = small.boundary();
  const auto lut = weight_lut(params.theta, truncation);

  const int num_edges = small.num_edges();
  GradientAssignment zeta(num_edges, -truncation);
  std::vector<double> marg(direct.size(), 0.0);
  double total = 0.0;
  for (std::size_t idx = 0;; ++idx) {
    double transfer = 1.0;
    for (int e = 0; e < num_edges; ++e) transfer *= lut[std::abs(zeta[e])];

    double bf = 0.0;
    for (int s = 0; s < 4; ++s) {
      double prod = 1.0;
      for (std::size_t yi = 0; yi < shell.size(); ++yi) {
        long c = s;
        for (int e : paths[yi]) c += zeta[e];
        prod *= g[shell[yi]](mod4(c));
      }
      bf += prod;
    }
    const double w = bf * transfer;
    marg[idx] = w;
    total += w;

    int e = 0;
    while (e < num_edges && zeta[e] == truncation) zeta[e++] = -truncation;
    if (e == num_edges) break;
    ++zeta[e];
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < marg.size(); ++i) {
    worst = std::max(worst, std::abs(marg[i] / total - direct.probs[i]));
  }
  return worst;
}

double consistency_check(const PeriodicBoundaryLaw& law, const Params& params,
                         int radius_small, int radius_big, int truncation,
                         std::size_t entry_budget) {
  return consistency_check_with_weights(law_weights(law, params), params,
                                        radius_small, radius_big, truncation,
                                        entry_budget);
}

SampleRun sample(const TreeBall& ball, const PeriodicBoundaryLaw& law,
                 const Params& params, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  if (ball.radius < 1) {
    throw std::invalid_argument("sampling needs a ball of radius >= 1");
  }

  const Eigen::Array4d weights = law_weights(law, params);
  const ClassWeightTable cw = ClassWeightTable::make(params.theta);
  const auto up = up_messages(ball, weights, cw);

  std::mt19937_64 eng(seed);
  // Canonical 53-bit uniform in [0,1); fully specified, so runs are
  // bit-reproducible across platforms.
  const auto uniform = [&eng]() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  };

  // Inverse CDF of the two-sided geometric law restricted to class d,
  // candidates ordered by |j| (positive arm first on ties).
  const auto draw_increment = [&](int d, double u) {
    double target = u * cw.T(d);
    long pos = (d == 0) ? 4 : d;
    long neg = (d == 0) ? -4 : d - 4;
    long j = 0;
    if (d != 0) {
      j = (std::labs(pos) <= std::labs(neg)) ? pos : neg;
      if (j == pos) pos += 4; else neg -= 4;
    }
    for (int guard = 0; guard < 4096; ++guard) {
      target -= std::pow(cw.theta, static_cast<double>(std::labs(j)));
      if (target <= 0.0) break;
      if (std::labs(pos) <= std::labs(neg)) {
        j = pos;
        pos += 4;
      } else {
        j = neg;
        neg -= 4;
      }
    }
    return j;
  };

  SampleRun run;
  run.samples.reserve(static_cast<std::size_t>(n));
  run.edge_frequency.assign(ball.num_edges(), {});
  std::vector<int> vertex_class(ball.num_vertices());

  for (int t = 0; t < n; ++t) {
    // Root class: prior weight 1 per shift, tilted by the subtree message.
    {
      const Eigen::Array4d p = up[0] / up[0].sum();
      double u = uniform();
      int m = 3;
      for (int c = 0; c < 3; ++c) {
        u -= p(c);
        if (u < 0.0) {
          m = c;
          break;
        }
      }
      vertex_class[0] = m;
    }

    GradientAssignment zeta(ball.num_edges());
    for (int v = 0; v < ball.num_vertices(); ++v) {
      const int mv = vertex_class[v];
      for (int c : ball.children[v]) {
        Eigen::Array4d p;
        for (int d = 0; d < 4; ++d) {
          p(d) = cw.T(d) * up[c](mod4(mv + d));
        }
        p /= p.sum();
        double u = uniform();
        int d = 3;
        for (int i = 0; i < 3; ++i) {
          u -= p(i);
          if (u < 0.0) {
            d = i;
            break;
          }
        }
        const long j = draw_increment(d, uniform());
        zeta[c - 1] = static_cast<int>(j);
        vertex_class[c] = mod4(mv + d);
        ++run.edge_frequency[c - 1][static_cast<int>(j)];
      }
    }
    run.samples.push_back(std::move(zeta));
  }
  return run;
}

}  // namespace sosggm
