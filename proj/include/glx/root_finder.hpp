#pragma once

// Simultaneous root finding (Aberth-Ehrlich) and critical points of zero
// configurations with the trivial critical points divided out exactly.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "glx/complex_poly.hpp"

namespace glx {

inline constexpr int kMaxAberthIterations = 200;
inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kInitialPhaseOffset = 0.4;

template <typename Scalar>
struct RootSolveResult {
  CVector<Scalar> roots;
  Scalar max_residual = 0;  // max_r |p(r)| / condition(r)
  int iterations = 0;
  bool converged = false;
};

template <typename Scalar>
Scalar scaled_residual(const Polynomial<Scalar>& p, std::complex<Scalar> z) {
  const auto ev = p.eval_with_condition(z);
  if (ev.condition == Scalar(0)) return Scalar(0);
  return std::abs(ev.value) / ev.condition;
}

/// All deg(p) roots by Aberth-Ehrlich iteration from a circle of radius
/// 1 + max |c_i / c_n|, followed by one guarded Newton step per root.
template <typename Scalar>
RootSolveResult<Scalar> solve(const Polynomial<Scalar>& p) {
  using C = std::complex<Scalar>;
  RootSolveResult<Scalar> result;
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::InvalidInput, "polynomial must have degree >= 1");

  // Exact roots at the origin: the scaled residual of p = c z^m is 1 at any
  // z != 0, so the iteration below could never certify them.
  int at_origin = 0;
  while (at_origin < n && p[at_origin] == C(0)) ++at_origin;
  if (at_origin > 0) {
    result.roots = CVector<Scalar>::Zero(n);
    if (at_origin < n) {
      const auto rest = solve(Polynomial<Scalar>(p.coeffs().tail(n + 1 - at_origin)));
      result.roots.head(n - at_origin) = rest.roots;
      result.max_residual = rest.max_residual;
      result.iterations = rest.iterations;
      result.converged = rest.converged;
    } else {
      result.converged = true;
    }
    return result;
  }

  result.roots.resize(n);
  if (n == 1) {
    result.roots(0) = -p[0] / p[1];
    result.max_residual = scaled_residual(p, result.roots(0));
    result.converged = result.max_residual <= Scalar(kResidualTolerance);
    return result;
  }

  const Polynomial<Scalar> dp = derivative(p);
  const C lead = p.leading();
  Scalar radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i] / lead));
  radius += Scalar(1);

  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  for (int k = 0; k < n; ++k) {
    result.roots(k) = std::polar(radius, two_pi * Scalar(k) / Scalar(n) + Scalar(kInitialPhaseOffset));
  }

  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int iter = 0;
  for (; iter < kMaxAberthIterations; ++iter) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      const C z = result.roots(k);
      const auto ev = p.eval_with_condition(z);
      if (std::abs(ev.value) <= Scalar(4) * eps * ev.condition) {
        done[static_cast<std::size_t>(k)] = true;
        continue;
      }
      C repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += C(1) / (z - result.roots(j));
      }
      const C ratio = dp(z) / ev.value;
      const C denom = ratio - repulsion;
      if (denom == C(0)) {
        all_done = false;
        continue;
      }
      const C step = C(1) / denom;
      result.roots(k) = z - step;
      if (std::abs(step) <= eps * std::abs(result.roots(k))) {
        done[static_cast<std::size_t>(k)] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) {
      ++iter;
      break;
    }
  }
  result.iterations = iter;

  for (int k = 0; k < n; ++k) {
    const C z = result.roots(k);
    const C d = dp(z);
    if (d == C(0)) continue;
    const C polished = z - p(z) / d;
    if (is_finite(polished) && std::abs(p(polished)) <= std::abs(p(z))) result.roots(k) = polished;
  }

  Scalar worst = 0;
  for (int k = 0; k < n; ++k) worst = std::max(worst, scaled_residual(p, result.roots(k)));
  result.max_residual = worst;
  result.converged = worst <= Scalar(kResidualTolerance);
  return result;
}

template <typename Scalar>
struct TrivialCriticalPoint {
  std::complex<Scalar> location;
  int order;       // k_i - 1
  int zero_index;  // entry of the configuration it sits on
};

template <typename Scalar>
struct CriticalSet {
  std::vector<TrivialCriticalPoint<Scalar>> trivial;
  CVector<Scalar> nontrivial;
  Scalar max_residual = 0;
  int iterations = 0;

  int total_count() const {
    int n = static_cast<int>(nontrivial.size());
    for (const auto& t : trivial) n += t.order;
    return n;
  }

  /// Every critical point, trivial ones repeated by order.
  CVector<Scalar> all_points() const {
    CVector<Scalar> out(total_count());
    Eigen::Index at = 0;
    for (const auto& t : trivial) {
      for (int k = 0; k < t.order; ++k) out(at++) = t.location;
    }
    out.segment(at, nontrivial.size()) = nontrivial;
    return out;
  }
};

using CriticalSetXd = CriticalSet<double>;

/// Polynomial whose roots are the nontrivial critical points: p' with each
/// (z - z_i)^{k_i - 1} removed by synthetic division.
template <typename Scalar>
Polynomial<Scalar> deflated_derivative(const ZeroConfiguration<Scalar>& config) {
  Polynomial<Scalar> q = derivative(from_roots(config));
  for (const auto& e : config.entries()) {
    for (int k = 1; k < e.multiplicity; ++k) q = deflate(q, e.location);
  }
  return q;
}

template <typename Scalar>
CriticalSet<Scalar> critical_points(const ZeroConfiguration<Scalar>& config) {
  CriticalSet<Scalar> out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i].multiplicity > 1) {
      out.trivial.push_back({config[i].location, config[i].multiplicity - 1, static_cast<int>(i)});
    }
  }
  // Solve about the centroid of the zeros, which is also the centroid of the
  // critical points. Far from the origin the residual bound is loose enough
  // that a whole cluster of near-multiple roots could pass it in the wrong place.
  std::complex<Scalar> centroid(0);
  for (const auto& e : config.entries()) centroid += Scalar(e.multiplicity) * e.location;
  centroid /= Scalar(config.degree());
  const Polynomial<Scalar> q = deflated_derivative(config.transformed(std::complex<Scalar>(1), -centroid));
  if (q.degree() == 0) {
    out.nontrivial.resize(0);
    return out;
  }
  const auto solved = solve(q);
  if (!solved.converged) {
    throw Error(ErrorCode::NonConvergence,
                "critical point solve residual " + std::to_string(double(solved.max_residual)));
  }
  out.nontrivial = solved.roots.array() + centroid;
  out.max_residual = solved.max_residual;
  out.iterations = solved.iterations;
  return out;
}

}  // namespace glx
