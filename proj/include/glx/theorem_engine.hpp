#pragma once

// Checkable verdicts for one zero configuration: hull classification, the
// centroid / product / argument identities between zeros and critical
// points, the empty-triangle and empty-sector theorems, Gauss-Lucas
// containment and the Steiner inellipse foci for triangles.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glx/complex_poly.hpp"
#include "glx/plane_geometry.hpp"
#include "glx/root_finder.hpp"

namespace glx {

inline constexpr double kCentroidTolerance = 1e-9;
inline constexpr double kProductTolerance = 1e-8;
inline constexpr double kAngleIdentityTolerance = 1e-7;
inline constexpr double kFocusTolerance = 1e-9;
inline constexpr double kTangencyTolerance = 1e-8;

struct Tolerances {
  double geo = kGeoEps;
  double angle = kAngleEps;
};

struct Classification {
  std::vector<int> hull_vertex_indices;  // CCW
  std::vector<int> inner_indices;
  std::vector<int> hull_boundary_indices;
  int d() const { return static_cast<int>(inner_indices.size()); }
};

Classification classify(const ZeroConfigurationXd& config, const Tolerances& tol = {});

/// |mean of critical points (trivial counted with order) - mean of zeros
/// (counted with multiplicity)|.
double check_centroid(const ZeroConfigurationXd& config, const CriticalSetXd& crit);

/// Relative residual of deg(p) * prod(c - z0) = k0 * prod(z_i - z0)^{k_i},
/// where c runs over the critical points away from the designated zero z0
/// (of multiplicity k0) and i over the other zeros.
double check_product_identity(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                              int designated);

/// Distance to 2pi*Z of sum arg(z_i - z0) - sum arg(w_j - z0) over the other
/// distinct zeros and the nontrivial critical points.
double check_angle_identity(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                            int designated);

struct IdentityEntry {
  int zero_index;
  double product_residual;
  double angle_residual;
};

struct IdentityReport {
  double centroid_residual = 0;
  double vieta_product_residual = 0;  // max over designated zeros
  double angle_sum_residual = 0;      // max over designated zeros
  std::vector<IdentityEntry> per_zero;

  bool within_tolerance() const {
    return centroid_residual <= kCentroidTolerance && vieta_product_residual <= kProductTolerance &&
           angle_sum_residual <= kAngleIdentityTolerance;
  }
};

IdentityReport check_identities(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                const std::vector<int>& designated);

struct TriangleVerdict {
  std::array<int, 3> vertices;  // inner zero first
  int interior_count = 0;
  int boundary_count = 0;
};

struct TheoremOneVerdict {
  std::array<TriangleVerdict, 3> triangles;
  std::vector<int> empty_triangle_indices;
  bool pass = false;
};

TheoremOneVerdict verify_theorem1(const ZeroConfigurationXd& config, const Tolerances& tol = {});
TheoremOneVerdict verify_theorem1(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                  const Tolerances& tol = {});

struct SectorVerdict {
  Sector sector;
  int interior_count = 0;
  int boundary_count = 0;
};

struct InnerZeroVerdict {
  int zero_index = -1;
  bool skipped_collinear = false;
  std::optional<Sector> empty_sector;
  std::vector<SectorVerdict> sectors;
  std::vector<std::vector<int>> collinear_ray_groups;
};

std::vector<InnerZeroVerdict> verify_theorem2(const ZeroConfigurationXd& config, const Tolerances& tol = {});
std::vector<InnerZeroVerdict> verify_theorem2(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                              const std::vector<int>& inner_indices,
                                              const Tolerances& tol = {});

struct GaussLucasVerdict {
  bool pass = false;
  std::vector<Containment> placements;  // one per entry of crit.all_points()
};

GaussLucasVerdict gauss_lucas(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                              const Tolerances& tol = {});
bool gauss_lucas_check(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                       const Tolerances& tol = {});

/// Roots of p'/3 for p with the three given zeros, in closed form.
std::pair<Complex, Complex> steiner_foci(Complex z1, Complex z2, Complex z3);

struct MardenReport {
  Complex focus1;
  Complex focus2;
  double focus_residual = 0;     // solver critical points vs closed-form foci
  double tangency_residual = 0;  // focal-distance sums at the side midpoints
  bool within_tolerance() const {
    return focus_residual <= kFocusTolerance && tangency_residual <= kTangencyTolerance;
  }
};

MardenReport marden_check(Complex z1, Complex z2, Complex z3);

/// Everything the front ends report for one configuration.
struct Analysis {
  ZeroConfigurationXd config;
  CriticalSetXd critical;
  std::optional<Classification> classification;
  std::string classification_note;
  IdentityReport identities;
  std::optional<TheoremOneVerdict> theorem1;
  std::string theorem1_note;
  std::vector<InnerZeroVerdict> theorem2;
  GaussLucasVerdict gauss_lucas;
  std::optional<MardenReport> marden;

  bool theorem2_pass() const;
  bool all_passed() const;
};

/// Throws NonConvergence when the critical points cannot be trusted.
Analysis analyze(const ZeroConfigurationXd& config, const Tolerances& tol = {});

}  // namespace glx
