#pragma once

// Planar predicates on complex points. Every containment test is ternary and
// reports BOUNDARY inside an explicit band so open-interior statements are
// never decided by rounding noise.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "glx/complex_poly.hpp"

namespace glx {

inline constexpr double kGeoEps = 1e-9;
inline constexpr double kAngleEps = 1e-9;

enum class Orientation { CCW, CW, Collinear };
enum class Containment { Interior, Boundary, Exterior };

std::string_view to_string(Containment c);
std::string_view to_string(Orientation o);

inline std::span<const Complex> as_span(const CVectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Diagonal of the axis-aligned bounding box; the length scale for bands.
double length_scale(std::span<const Complex> points);

double point_segment_distance(Complex p, Complex a, Complex b);

/// Sign of (b - a) x (c - a); collinear when |cross| <= eps * scale^2 with
/// scale the largest pairwise distance of the three points.
Orientation orientation(Complex a, Complex b, Complex c, double eps = kGeoEps);
/// Same predicate against a caller-supplied length scale.
Orientation orientation_scaled(Complex a, Complex b, Complex c, double scale, double eps = kGeoEps);

struct Hull {
  std::vector<int> vertices;  // CCW
  std::vector<int> on_edges;  // on a hull edge but not a vertex
  std::vector<int> interior;  // strictly inside
};

/// Andrew's monotone chain. Throws AllCollinear when fewer than three
/// vertices survive.
Hull convex_hull(std::span<const Complex> points, double eps = kGeoEps);

std::vector<Complex> gather(std::span<const Complex> points, const std::vector<int>& indices);

Containment point_in_triangle(Complex p, Complex a, Complex b, Complex c, double eps = kGeoEps);
/// Winding-number test; the result is meaningful for simple polygons only.
Containment point_in_polygon(Complex p, std::span<const Complex> cycle, double eps = kGeoEps);

double normalize_angle(double radians);
/// arg(to - from) in [0, 2pi).
double direction_angle(Complex from, Complex to);
/// Distance from x to the nearest multiple of 2pi, in [0, pi].
double distance_to_full_turns(double x);

struct Sector {
  Complex apex;
  double lo_angle = 0;
  double hi_angle = 0;
  int lo_zero_index = -1;
  int hi_zero_index = -1;

  double width() const;
};

struct SectorFan {
  int apex_index = -1;
  std::vector<Sector> sectors;
  std::vector<std::vector<int>> collinear_ray_groups;
};

/// Rays from points[apex_index] toward every other point, sorted cyclically.
/// Points whose directions agree within angle_eps share one ray.
SectorFan sector_fan(std::span<const Complex> points, int apex_index, double eps = kGeoEps,
                     double angle_eps = kAngleEps);
SectorFan sector_fan(const ZeroConfigurationXd& config, int apex_index, double eps = kGeoEps,
                     double angle_eps = kAngleEps);

Containment point_in_sector(Complex p, const Sector& sector, double angle_eps = kAngleEps);

bool segments_intersect(Complex a, Complex b, Complex c, Complex d, double band);
bool is_simple_polygon(std::span<const Complex> cycle, double eps = kGeoEps);

}  // namespace glx
