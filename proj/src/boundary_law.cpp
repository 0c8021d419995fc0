#include "sosggm/boundary_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "double_double.hpp"
#include "sosggm/class_weights.hpp"
#include "sosggm/errors.hpp"

namespace sosggm {

namespace {

using detail::DD;
using detail::dd_add;
using detail::dd_div;
using detail::dd_mul;
using detail::dd_pow;
using detail::dd_sub;
using detail::to_double;
using detail::two_prod;
using detail::two_sum;

double ipow(double x, int n) {
  double r = 1.0;
  double base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

// Residual of one equation of the pair system,
//   (a + b - tau) a^k + tau a - 2,
// in double-double: the leading term grows like a^k while the tolerance is
// absolute, so the cancellation must be carried out beyond double.
double pair_eq(double a, double b, int k, double tau) {
  const DD d = dd_sub(two_sum(a, b), DD{tau, 0.0});
  DD acc = dd_mul(d, dd_pow(DD{a, 0.0}, k));
  acc = dd_add(acc, two_prod(tau, a));
  acc = dd_add(acc, -2.0);
  return to_double(acc);
}

// x + x^2 + ... + x^{k-1}
double power_sum(double x, int k) {
  double s = 0.0;
  for (int i = k - 1; i >= 1; --i) s = (s + 1.0) * x;
  return s;
}

struct Bracket {
  double lo, hi;
};

// Sign-change scan of f over n log-spaced points of [lo, hi].
template <typename F>
std::vector<Bracket> scan_sign_changes(const F& f, double lo, double hi,
                                       int n) {
  std::vector<Bracket> out;
  const double tlo = std::log(lo), thi = std::log(hi);
  double xprev = lo, fprev = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = std::exp(tlo + (thi - tlo) * i / n);
    const double fx = f(x);
    if (fprev == 0.0) {
      out.push_back({xprev, xprev});
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(fprev)) {
      out.push_back({xprev, x});
    }
    xprev = x;
    fprev = fx;
  }
  if (fprev == 0.0) out.push_back({xprev, xprev});
  return out;
}

template <typename F>
double bisect(const F& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Guarded Newton polish of a polynomial root; keeps the iterate positive
// and only accepts steps that reduce |P|.
double polish_root(const Polynomial& P, const Polynomial& Pd, double x) {
  double fx = std::abs(P(x));
  for (int it = 0; it < 4; ++it) {
    const double d = Pd(x);
    if (d == 0.0) break;
    const double xn = x - P(x) / d;
    if (!(xn > 0.0) || !std::isfinite(xn)) break;
    const double fn = std::abs(P(xn));
    if (fn >= fx) break;
    x = xn;
    fx = fn;
  }
  return x;
}

}  // namespace

std::string to_string(LawFamily f) {
  switch (f) {
    case LawFamily::trivial: return "trivial";
    case LawFamily::symmetric: return "symmetric";
    case LawFamily::asymmetric: return "asymmetric";
  }
  return "?";
}

LawFamily law_family_from_string(const std::string& s) {
  if (s == "trivial") return LawFamily::trivial;
  if (s == "symmetric") return LawFamily::symmetric;
  if (s == "asymmetric") return LawFamily::asymmetric;
  throw std::invalid_argument("unknown law family: " + s);
}

double PeriodicBoundaryLaw::u(long n) const {
  switch (mod4(n)) {
    case 1: return b;
    case 3: return a;
    default: return 1.0;
  }
}

PeriodicBoundaryLaw extend_periodic(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("boundary-law values must be positive");
  }
  PeriodicBoundaryLaw law;
  law.a = a;
  law.b = b;
  const double scale = std::max({1.0, a, b});
  if (std::abs(a - b) <= 1e-12 * scale) {
    law.family = (std::abs(a - 1.0) <= 1e-12) ? LawFamily::trivial
                                              : LawFamily::symmetric;
  } else {
    law.family = LawFamily::asymmetric;
  }
  return law;
}

PeriodicBoundaryLaw extend_periodic(double a, double b, const Params& params) {
  PeriodicBoundaryLaw law = extend_periodic(a, b);
  law.valid = (a + b < params.tau);
  return law;
}

Polynomial symmetric_polynomial(const Params& params) {
  Eigen::VectorXd c(params.k + 1);
  c.setConstant(2.0 - params.tau);
  c(0) = 2.0;
  c(params.k) = 2.0;
  return Polynomial(std::move(c));
}

std::vector<SymmetricRoot> solve_symmetric(const Params& params,
                                           const Tolerances& tol) {
  const Polynomial Q = symmetric_polynomial(params);
  const Polynomial Qm = Q.monic();
  const Polynomial Qd = Q.derivative();
  const double coef_scale = Q.coefficients().cwiseAbs().maxCoeff();
  const double deriv_scale = Qd.coefficients().cwiseAbs().maxCoeff();

  std::vector<SymmetricRoot> roots;

  // Tangency: the palindrome pins any double root of Q to a = 1, where it
  // merges with the trivial root into a triple root of the full equation.
  const double q1 = Q(1.0);
  if (std::abs(q1) <= 1e-11 * coef_scale) {
    roots.push_back({1.0, 3});
    return roots;
  }

  roots.push_back({1.0, 1});

  // Reciprocity makes (0,1] a complete search window: every root above 1
  // is the mirror of one below. Roots satisfy tau*a > 2, so Q stays
  // positive on (0, 2/tau] and the scan can start below that.
  const double lo = 1.0 / params.tau;
  const auto brackets =
      scan_sign_changes([&Q](double x) { return Q(x); }, lo, 1.0, 512);
  for (const auto& br : brackets) {
    double r = (br.lo == br.hi)
                   ? br.lo
                   : bisect([&Q](double x) { return Q(x); }, br.lo, br.hi);
    r = polish_root(Q, Qd, r);
    if (std::abs(Qm(r)) > tol.root_residual) {
      throw OracleFailure("symmetric root refinement stalled at a = " +
                          std::to_string(r));
    }
    if (std::abs(r - 1.0) <= 1e-9) continue;  // tangency already handled
    const int mult = (std::abs(Qd(r)) < 1e-7 * deriv_scale) ? 2 : 1;
    const double rm = polish_root(Q, Qd, 1.0 / r);
    roots.push_back({r, mult});
    roots.push_back({rm, mult});
  }

  std::sort(roots.begin(), roots.end(),
            [](const SymmetricRoot& x, const SymmetricRoot& y) {
              return x.a < y.a;
            });
  return roots;
}

double critical_tau(int k, const Tolerances& tol) {
  if (k < 2) {
    throw std::invalid_argument("critical_tau needs k >= 2, got " +
                                std::to_string(k));
  }

  // min_{a>0} Q for fixed tau; Q' has a single positive zero.
  const auto min_q = [k](double tau) {
    const Polynomial Q = symmetric_polynomial(Params::from_tau(k, tau));
    const Polynomial Qd = Q.derivative();
    double hi = 1.0;
    for (int guard = 0; Qd(hi) <= 0.0 && guard < 100; ++guard) hi *= 2.0;
    const double ac = bisect([&Qd](double x) { return Qd(x); }, 1e-12, hi);
    return Q(ac);
  };

  const double closed_form = 2.0 + 4.0 / (k - 1);
  double lo = 2.0 + 1e-9;  // min Q still positive here
  double hi = closed_form + 8.0;
  for (int guard = 0; min_q(hi) >= 0.0 && guard < 60; ++guard) hi *= 2.0;

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (min_q(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
  }
  const double tau_c = 0.5 * (lo + hi);

  if (std::abs(tau_c - closed_form) > tol.tauc_crosscheck) {
    throw OracleFailure("tangency tau mismatch at k=" + std::to_string(k) +
                        ": numeric " + std::to_string(tau_c) +
                        " vs closed form " + std::to_string(closed_form));
  }
  return tau_c;
}

std::vector<std::pair<double, double>> solve_asymmetric(
    const Params& params, const Tolerances& tol) {
  const int k = params.k;
  const double tau = params.tau;

  // Elimination in x = a/b < 1: the cross-combination of the pair system
  // forces (x^{k-1}+...+x)(tau*b - 2) = 2, so b is a function of x and one
  // original equation remains.
  const auto b_of_x = [&](double x) {
    return (2.0 + 2.0 / power_sum(x, k)) / tau;
  };
  const auto g = [&](double x) {
    const double b = b_of_x(x);
    return pair_eq(b, x * b, k, tau);
  };

  // Any solution component satisfies 2/tau < a,b < tau, so x > 2/tau^2.
  const double x_min = std::max(1e-300, (2.0 / (tau * tau)) * 0.5);
  const double x_max = 1.0 - 1e-7;

  std::vector<std::pair<double, double>> pairs;  // (a,b) with a < b

  // Near a degenerate double solution (a=b, e.g. k=2 at tau=4) the residual
  // valley |F| <= tol has width ~sqrt(tol) around the diagonal; points there
  // pass the residual test without being solutions. Genuine off-diagonal
  // pairs keep |a-b| of order (tau - tau_degenerate)^(1/4), which stays many
  // orders above sqrt(tol) for any representable tau, so a fixed exclusion
  // band is safe.
  constexpr double kDiagonalBand = 1e-4;

  const auto brackets = scan_sign_changes(g, x_min, x_max, 8192);
  for (const auto& br : brackets) {
    const double x0 = (br.lo == br.hi) ? br.lo : bisect(g, br.lo, br.hi);
    if (std::abs(x0 - 1.0) < kDiagonalBand) continue;  // a = b degeneracy

    // Damped Newton on the full system.
    double a = x0 * b_of_x(x0);
    double b = b_of_x(x0);
    const auto residual = [&](double aa, double bb) {
      return std::max(std::abs(pair_eq(aa, bb, k, tau)),
                      std::abs(pair_eq(bb, aa, k, tau)));
    };
    double res = residual(a, b);
    for (int it = 0; it < 60 && res > 1e-15; ++it) {
      const double d = (a + b) - tau;
      const double ak = ipow(a, k), bk = ipow(b, k);
      const double ak1 = ipow(a, k - 1), bk1 = ipow(b, k - 1);
      Eigen::Matrix2d J;
      J << ak + k * d * ak1 + tau, ak, bk, bk + k * d * bk1 + tau;
      const Eigen::Vector2d F(pair_eq(a, b, k, tau), pair_eq(b, a, k, tau));
      const Eigen::Vector2d step = J.fullPivLu().solve(F);
      double an = a, bn = b, rn = res;
      double lambda = 1.0;
      for (int h = 0; h < 12; ++h, lambda *= 0.5) {
        const double at = a - lambda * step(0);
        const double bt = b - lambda * step(1);
        if (!(at > 0.0) || !(bt > 0.0)) continue;
        const double rt = residual(at, bt);
        if (rt < rn) {
          an = at;
          bn = bt;
          rn = rt;
          break;
        }
      }
      if (rn >= res) break;
      a = an;
      b = bn;
      res = rn;
    }

    // Coordinate finisher: once the joint Newton step shrinks below one
    // ulp, the best representable pair may still be a few lattice moves of
    // a single variable away (the equations respond to a and b on very
    // different scales near an almost-singular pair). Single-variable
    // Newton moves find it.
    for (int it = 0; it < 16 && res > 1e-15; ++it) {
      const double d = (a + b) - tau;
      const double fa = pair_eq(a, b, k, tau);
      const double fb = pair_eq(b, a, k, tau);
      const double dFa_da = ipow(a, k) + k * d * ipow(a, k - 1) + tau;
      const double dFb_db = ipow(b, k) + k * d * ipow(b, k - 1) + tau;
      const double dFa_db = ipow(a, k);
      const double dFb_da = ipow(b, k);
      double best_a = a, best_b = b, best = res;
      const auto consider = [&](double at, double bt) {
        if (!(at > 0.0) || !(bt > 0.0)) return;
        const double rt = residual(at, bt);
        if (rt < best) {
          best = rt;
          best_a = at;
          best_b = bt;
        }
      };
      if (dFa_da != 0.0) consider(a - fa / dFa_da, b);
      if (dFa_db != 0.0) consider(a, b - fa / dFa_db);
      if (dFb_da != 0.0) consider(a - fb / dFb_da, b);
      if (dFb_db != 0.0) consider(a, b - fb / dFb_db);
      if (best >= res) break;
      a = best_a;
      b = best_b;
      res = best;
    }

    if (res > tol.asym_residual) {
      // One-ulp sensitivity of the residual: no representable pair can sit
      // closer to the exact solution than the finer of the two controls.
      const double floor_a =
          std::abs(residual(std::nextafter(a, 2.0 * a), b) - res);
      const double floor_b =
          std::abs(residual(a, std::nextafter(b, 2.0 * b)) - res);
      if (res > std::max(tol.asym_residual,
                         8.0 * std::min(floor_a, floor_b))) {
        throw OracleFailure("asymmetric pair refinement stalled near x = " +
                            std::to_string(x0) + " (residual " +
                            std::to_string(res) + ")");
      }
    }
    if (std::abs(a - b) <= kDiagonalBand * std::max({1.0, a, b})) continue;
    if (a > b) std::swap(a, b);

    bool duplicate = false;
    for (const auto& p : pairs) {
      if (std::abs(p.first - a) <= 1e-8 * (1.0 + std::abs(a)) &&
          std::abs(p.second - b) <= 1e-8 * (1.0 + std::abs(b))) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) pairs.emplace_back(a, b);
  }

  // Emit both orders; the swap is constructed exactly, so closure under
  // (a,b) -> (b,a) holds as a set identity.
  std::vector<std::pair<double, double>> ordered;
  ordered.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    ordered.emplace_back(p.first, p.second);
    ordered.emplace_back(p.second, p.first);
  }
  std::sort(ordered.begin(), ordered.end());
  return ordered;
}

double recursion_residual(const PeriodicBoundaryLaw& law, const Params& params,
                          int n_steps) {
  if (n_steps < 4) {
    throw std::invalid_argument("recursion check needs at least 4 steps");
  }
  const int k = params.k;
  const double tau = params.tau;
  const DD d = dd_sub(two_sum(law.a, law.b), DD{tau, 0.0});

  const auto defect = [&](long i) {
    const double ui = law.u(i);
    const long direction = (i > 0) ? 1 : -1;
    DD pred = dd_mul(d, dd_pow(DD{ui, 0.0}, k));
    pred = dd_add(pred, two_prod(tau, ui));
    pred = dd_add(pred, -law.u(i - direction));
    return std::abs(to_double(dd_sub(DD{law.u(i + direction), 0.0}, pred)));
  };

  double worst = 0.0;
  for (int i = 1; i <= n_steps; ++i) {
    worst = std::max(worst, defect(i));
    worst = std::max(worst, defect(-i));
  }
  return worst;
}

namespace {

struct SeriesSumsDD {
  DD l0, r0;
};

SeriesSumsDD series_sums_dd(const PeriodicBoundaryLaw& law,
                            const Params& params) {
  const DD th{params.theta, 0.0};
  const DD t2 = dd_mul(th, th);
  const DD t3 = dd_mul(t2, th);
  const DD t4 = dd_mul(t2, t2);
  const DD geom = dd_sub(DD{1.0, 0.0}, t4);
  const DD zk_a = dd_pow(DD{law.a, 0.0}, params.k);
  const DD zk_b = dd_pow(DD{law.b, 0.0}, params.k);
  SeriesSumsDD s;
  s.r0 = dd_div(
      dd_add(dd_add(dd_mul(zk_b, th), t2), dd_add(dd_mul(zk_a, t3), t4)),
      geom);
  s.l0 = dd_div(
      dd_add(dd_add(dd_mul(zk_a, th), t2), dd_add(dd_mul(zk_b, t3), t4)),
      geom);
  return s;
}

}  // namespace

SeriesSums series_sums(const PeriodicBoundaryLaw& law, const Params& params) {
  const SeriesSumsDD s = series_sums_dd(law, params);
  return {to_double(s.l0), to_double(s.r0)};
}

SeriesSums series_sums_direct(const PeriodicBoundaryLaw& law,
                              const Params& params, double tail_bound) {
  const double th = params.theta;
  const double z_max =
      std::max({1.0, ipow(law.a, params.k), ipow(law.b, params.k)});
  DD l0{0.0, 0.0}, r0{0.0, 0.0};
  DD w{1.0, 0.0};
  for (long j = 1; j < 20'000'000; ++j) {
    w = dd_mul(w, th);
    r0 = dd_add(r0, dd_mul(w, ipow(law.u(j), params.k)));
    l0 = dd_add(l0, dd_mul(w, ipow(law.u(-j), params.k)));
    if (w.hi * z_max * th / (1.0 - th) < tail_bound) {
      return {to_double(l0), to_double(r0)};
    }
  }
  throw OracleFailure("direct series summation did not reach the tail bound");
}

NormIdentityReport norm_identity_residual(const PeriodicBoundaryLaw& law,
                                          const Params& params) {
  NormIdentityReport rep;
  const DD denom = dd_sub(two_sum(law.a, law.b), DD{params.tau, 0.0});
  const SeriesSumsDD s = series_sums_dd(law, params);
  const DD lhs = dd_add(dd_add(s.l0, s.r0), 1.0);
  rep.lhs = to_double(lhs);
  if (std::abs(to_double(denom)) <= 1e-12 * std::max(1.0, params.tau)) {
    rep.status = NormIdentityStatus::singular;
    rep.rhs = std::numeric_limits<double>::quiet_NaN();
    rep.residual = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  const DD rhs = dd_div(
      dd_sub(DD{params.theta, 0.0}, dd_div(DD{1.0, 0.0}, DD{params.theta, 0.0})),
      denom);
  rep.rhs = to_double(rhs);
  if (to_double(denom) > 0.0) {
    // theta < 1 makes the right side negative while the left is a sum of
    // positive terms: the law cannot normalize a tree-indexed chain.
    rep.status = NormIdentityStatus::sign_contradiction;
    rep.residual = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.residual = std::abs(to_double(dd_sub(lhs, rhs)));
  return rep;
}

double fixed_point_residual(const PeriodicBoundaryLaw& law,
                            const Params& params) {
  const DD th{params.theta, 0.0};
  const DD t2 = dd_mul(th, th);
  const DD t3 = dd_mul(t2, th);
  const DD t4 = dd_mul(t2, t2);
  const DD geom = dd_sub(DD{1.0, 0.0}, t4);
  // Z4 class weights, same closed forms as ClassWeightTable but carried in
  // double-double so the fixed-point cancellation survives large u^k.
  const DD T[4] = {dd_add(dd_div(dd_mul(t4, 2.0), geom), 1.0),
                   dd_div(dd_add(th, t3), geom),
                   dd_div(dd_mul(t2, 2.0), geom),
                   dd_div(dd_add(th, t3), geom)};
  const DD z[4] = {DD{1.0, 0.0}, dd_pow(DD{law.b, 0.0}, params.k),
                   DD{1.0, 0.0}, dd_pow(DD{law.a, 0.0}, params.k)};

  DD den{0.0, 0.0};
  for (int m = 0; m < 4; ++m) den = dd_add(den, dd_mul(z[m], T[m]));

  double worst = 0.0;
  for (int i : {-2, -1, 1, 2}) {
    DD num{0.0, 0.0};
    for (int m = 0; m < 4; ++m) {
      num = dd_add(num, dd_mul(z[m], T[mod4(m - i)]));
    }
    const DD rhs = dd_pow(dd_div(num, den), params.k);
    worst = std::max(worst, std::abs(to_double(dd_sub(z[mod4(i)], rhs))));
  }
  return worst;
}

namespace {

// Representability floor of an oracle at a stored law: the residual change
// caused by one-ulp moves of the law's parameters. A double pair cannot sit
// closer to the exact root than one lattice step, so a residual within a
// small multiple of the coarsest unavoidable quantum is the best any solver
// can deliver. A spread counts as a control path only when it is
// commensurate with the residual itself; a variable the oracle barely sees
// offers no control, and a residual far above every spread is a solver bug,
// not a lattice effect.
template <typename F>
double representability_floor(const F& residual_of,
                              const PeriodicBoundaryLaw& law) {
  const double f0 = residual_of(law.a, law.b);
  const auto spread = [&](double aa, double bb) {
    return std::abs(residual_of(aa, bb) - f0);
  };
  std::vector<double> spreads;
  if (law.family == LawFamily::asymmetric) {
    spreads.push_back(std::max(
        spread(std::nextafter(law.a, 2.0 * law.a), law.b),
        spread(std::nextafter(law.a, 0.0), law.b)));
    spreads.push_back(std::max(
        spread(law.a, std::nextafter(law.b, 2.0 * law.b)),
        spread(law.a, std::nextafter(law.b, 0.0))));
  } else {
    spreads.push_back(std::max(
        spread(std::nextafter(law.a, 2.0 * law.a),
               std::nextafter(law.b, 2.0 * law.b)),
        spread(std::nextafter(law.a, 0.0), std::nextafter(law.b, 0.0))));
  }
  double floor = 0.0;
  for (double s : spreads) {
    if (s >= f0 / 16.0 && (floor == 0.0 || s < floor)) floor = s;
  }
  return floor;
}

}  // namespace

std::vector<LawRecord> enumerate_laws(const Params& params,
                                      const Tolerances& tol) {
  std::vector<LawRecord> records;

  const auto stamp = [&](const PeriodicBoundaryLaw& law, int multiplicity) {
    LawRecord rec;
    rec.k = params.k;
    rec.theta = params.theta;
    rec.tau = params.tau;
    rec.a = law.a;
    rec.b = law.b;
    rec.family = law.family;
    rec.multiplicity = multiplicity;
    rec.valid = law.valid;
    rec.residuals.recursion =
        recursion_residual(law, params, kRecordRecursionSteps);
    rec.residuals.fixed_point = fixed_point_residual(law, params);
    const NormIdentityReport norm = norm_identity_residual(law, params);
    rec.residuals.norm_identity = norm.residual;

    double gate_rec = tol.recursion;
    double gate_fp = tol.fixed_point;
    double gate_norm = tol.norm_identity;
    if (rec.residuals.recursion > gate_rec ||
        rec.residuals.fixed_point > gate_fp ||
        rec.residuals.norm_identity > gate_norm) {
      gate_rec = std::max(
          gate_rec,
          8.0 * representability_floor(
                    [&](double aa, double bb) {
                      return recursion_residual(extend_periodic(aa, bb),
                                                params, kRecordRecursionSteps);
                    },
                    law));
      gate_fp = std::max(
          gate_fp, 8.0 * representability_floor(
                             [&](double aa, double bb) {
                               return fixed_point_residual(
                                   extend_periodic(aa, bb), params);
                             },
                             law));
      gate_norm = std::max(
          gate_norm,
          8.0 * representability_floor(
                    [&](double aa, double bb) {
                      return norm_identity_residual(extend_periodic(aa, bb),
                                                    params)
                          .residual;
                    },
                    law));
    }

    if (rec.residuals.recursion > gate_rec ||
        rec.residuals.fixed_point > gate_fp ||
        norm.status != NormIdentityStatus::ok ||
        rec.residuals.norm_identity > gate_norm) {
      throw OracleFailure("solver output failed verification at k=" +
                          std::to_string(params.k) +
                          " tau=" + std::to_string(params.tau) +
                          " (a=" + std::to_string(law.a) +
                          ", b=" + std::to_string(law.b) + ")");
    }
    records.push_back(rec);
  };

  for (const SymmetricRoot& root : solve_symmetric(params, tol)) {
    stamp(extend_periodic(root.a, root.a, params), root.multiplicity);
  }
  for (const auto& [a, b] : solve_asymmetric(params, tol)) {
    stamp(extend_periodic(a, b, params), 1);
  }
  return records;
}

}  // namespace sosggm
