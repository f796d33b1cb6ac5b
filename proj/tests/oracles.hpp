#pragma once

// Reference computations for the tests. Nothing here calls into the code
// path it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "glx/rng.hpp"

namespace glx::oracle {

using C = std::complex<double>;

/// Root of a real function on [lo, hi] with a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// The three roots of 4z^3 + 3z^2 - 2: the real one by bisection, the
/// conjugate pair from the Vieta sum (-3/4) and product (1/2).
inline std::vector<C> canonical_cubic_roots() {
  const double r = bisect([](double x) { return 4 * x * x * x + 3 * x * x - 2; }, 0.0, 1.0);
  const double s = -0.75 - r;
  const double q = 0.5 / r;
  const double im = std::sqrt(q - s * s / 4);
  return {C(r, 0), C(s / 2, im), C(s / 2, -im)};
}

/// Sign of the barycentric coordinates: +1 strictly inside, 0 on an edge
/// (within tol), -1 outside.
inline int barycentric_side(C p, C a, C b, C c, double tol = 1e-12) {
  const double det = (b.real() - a.real()) * (c.imag() - a.imag()) - (c.real() - a.real()) * (b.imag() - a.imag());
  const double l1 = ((b.real() - p.real()) * (c.imag() - p.imag()) - (c.real() - p.real()) * (b.imag() - p.imag())) / det;
  const double l2 = ((c.real() - p.real()) * (a.imag() - p.imag()) - (a.real() - p.real()) * (c.imag() - p.imag())) / det;
  const double l3 = 1 - l1 - l2;
  const double m = std::min({l1, l2, l3});
  if (m > tol) return 1;
  if (m < -tol) return -1;
  return 0;
}

/// Exact-arithmetic-free brute force: proper or touching segment crossing
/// decided by parametric solve.
inline bool segments_cross(C p1, C p2, C q1, C q2) {
  const C r = p2 - p1, s = q2 - q1;
  const double denom = r.real() * s.imag() - r.imag() * s.real();
  const C qp = q1 - p1;
  if (std::abs(denom) < 1e-15) {
    const double col = qp.real() * r.imag() - qp.imag() * r.real();
    if (std::abs(col) > 1e-12) return false;
    const double rr = std::norm(r);
    const double t0 = (qp.real() * r.real() + qp.imag() * r.imag()) / rr;
    const double t1 = t0 + (s.real() * r.real() + s.imag() * r.imag()) / rr;
    return std::max(t0, t1) >= 0 && std::min(t0, t1) <= 1;
  }
  const double t = (qp.real() * s.imag() - qp.imag() * s.real()) / denom;
  const double u = (qp.real() * r.imag() - qp.imag() * r.real()) / denom;
  return t >= 0 && t <= 1 && u >= 0 && u <= 1;
}

/// Simple iff non-adjacent edges never meet and adjacent ones meet only at
/// their shared vertex (checked by testing the far endpoints).
inline bool polygon_is_simple(const std::vector<C>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const C a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
      if (!adjacent) {
        if (segments_cross(a, b, c, d)) return false;
      } else {
        const C shared = (j == i + 1) ? b : a;
        const C far1 = (j == i + 1) ? a : b;
        const C far2 = (j == i + 1) ? d : c;
        if (segments_cross(shared + 1e-9 * (far1 - shared), far1, shared + 1e-9 * (far2 - shared), far2)) return false;
      }
    }
  }
  return true;
}

/// Hull vertex set by the O(n^3) supporting-line test.
inline std::vector<int> brute_force_hull_vertices(const std::vector<C>& pts) {
  std::vector<int> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    // i is a vertex iff it is not inside or on any triangle of other points
    // and not on a segment between two others
    bool vertex = true;
    for (std::size_t a = 0; a < n && vertex; ++a) {
      for (std::size_t b = a + 1; b < n && vertex; ++b) {
        if (a == i || b == i) continue;
        for (std::size_t c = b + 1; c < n && vertex; ++c) {
          if (c == i) continue;
          const double det = (pts[b] - pts[a]).real() * (pts[c] - pts[a]).imag() -
                             (pts[c] - pts[a]).real() * (pts[b] - pts[a]).imag();
          if (std::abs(det) < 1e-14) continue;
          if (barycentric_side(pts[i], pts[a], pts[b], pts[c], 1e-12) >= 0) vertex = false;
        }
      }
    }
    if (vertex) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Greedy nearest matching of two point multisets; returns the worst
/// distance, or infinity when sizes differ.
inline double multiset_distance(std::vector<C> a, std::vector<C> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (const C& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](C u, C v) { return std::abs(u - x) < std::abs(v - x); });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

/// Compare a critical set against the raw roots of p'. Each multiple root
/// of order m shows up as m nearby roots; they are clustered (the m nearest)
/// and the cluster mean is compared. A nearby root can bias that mean, so it
/// is first refined by Newton on dp^(m-1), where the point is a simple root.
/// Returns the worst mismatch.
template <typename Crit, typename Poly>
double cluster_match(const Crit& crit, std::vector<C> raw, const Poly& dp) {
  double worst = 0;
  for (const auto& t : crit.trivial) {
    if (static_cast<int>(raw.size()) < t.order) return std::numeric_limits<double>::infinity();
    std::sort(raw.begin(), raw.end(), [&](C u, C v) { return std::abs(u - t.location) < std::abs(v - t.location); });
    C mean = 0;
    for (int k = 0; k < t.order; ++k) mean += raw[static_cast<std::size_t>(k)];
    mean /= double(t.order);
    Poly f = dp;
    for (int k = 1; k < t.order; ++k) f = derivative(f);
    const Poly df = derivative(f);
    for (int it = 0; it < 3; ++it) {
      const C d = df(mean);
      if (d == C(0)) break;
      mean -= f(mean) / d;
    }
    worst = std::max(worst, std::abs(mean - t.location));
    raw.erase(raw.begin(), raw.begin() + t.order);
  }
  std::vector<C> rest(crit.nontrivial.data(), crit.nontrivial.data() + crit.nontrivial.size());
  return std::max(worst, multiset_distance(rest, raw));
}

struct RandomZero {
  C z;
  int k;
};

/// Random zeros in the unit disk with pairwise separation >= sep.
inline std::vector<RandomZero> random_zeros(TrialRng& rng, int max_degree, double sep, int max_mult) {
  const int n = rng.uniform_int(2, std::min(8, max_degree));
  std::vector<RandomZero> out;
  int degree = 0;
  while (static_cast<int>(out.size()) < n) {
    const double r = std::sqrt(rng.uniform());
    const C z = std::polar(r, 2 * M_PI * rng.uniform());
    bool ok = true;
    for (const auto& e : out) ok = ok && std::abs(e.z - z) >= sep;
    if (!ok) continue;
    const int remaining = max_degree - degree - (n - static_cast<int>(out.size()) - 1);
    const int k = std::min(rng.uniform_int(1, max_mult), std::max(1, remaining));
    out.push_back({z, k});
    degree += k;
  }
  return out;
}

}  // namespace glx::oracle
