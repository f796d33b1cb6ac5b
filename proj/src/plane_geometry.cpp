#include "glx/plane_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace glx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::Interior: return "INTERIOR";
    case Containment::Boundary: return "BOUNDARY";
    case Containment::Exterior: return "EXTERIOR";
  }
  return "?";
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::CCW: return "CCW";
    case Orientation::CW: return "CW";
    case Orientation::Collinear: return "COLLINEAR";
  }
  return "?";
}

double length_scale(std::span<const Complex> points) {
  if (points.empty()) return 0.0;
  double xmin = points[0].real(), xmax = xmin, ymin = points[0].imag(), ymax = ymin;
  for (const auto& p : points) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

Orientation orientation_scaled(Complex a, Complex b, Complex c, double scale, double eps) {
  const double x = cross(b - a, c - a);
  if (std::abs(x) <= eps * scale * scale) return Orientation::Collinear;
  return x > 0 ? Orientation::CCW : Orientation::CW;
}

Orientation orientation(Complex a, Complex b, Complex c, double eps) {
  const double scale = std::max({std::abs(b - a), std::abs(c - a), std::abs(c - b)});
  return orientation_scaled(a, b, c, scale, eps);
}

std::vector<Complex> gather(std::span<const Complex> points, const std::vector<int>& indices) {
  std::vector<Complex> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(points[static_cast<std::size_t>(i)]);
  return out;
}

Hull convex_hull(std::span<const Complex> points, double eps) {
  if (points.size() < 3) throw Error(ErrorCode::AllCollinear, "need at least three points for a hull");
  const double scale = length_scale(points);

  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const Complex a = points[static_cast<std::size_t>(i)], b = points[static_cast<std::size_t>(j)];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return i < j;
  });

  auto at = [&](int i) { return points[static_cast<std::size_t>(i)]; };
  std::vector<int> chain;
  chain.reserve(2 * points.size());
  for (int idx : order) {
    while (chain.size() >= 2 &&
           orientation_scaled(at(chain[chain.size() - 2]), at(chain.back()), at(idx), scale, eps) !=
               Orientation::CCW) {
      chain.pop_back();
    }
    chain.push_back(idx);
  }
  const std::size_t lower = chain.size() + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (chain.size() >= lower &&
           orientation_scaled(at(chain[chain.size() - 2]), at(chain.back()), at(*it), scale, eps) !=
               Orientation::CCW) {
      chain.pop_back();
    }
    chain.push_back(*it);
  }
  chain.pop_back();

  if (chain.size() < 3) throw Error(ErrorCode::AllCollinear, "points are collinear");

  Hull hull;
  hull.vertices = chain;
  const std::vector<Complex> cycle = gather(points, hull.vertices);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::find(chain.begin(), chain.end(), static_cast<int>(i)) != chain.end()) continue;
    switch (point_in_polygon(points[i], cycle, eps)) {
      case Containment::Interior: hull.interior.push_back(static_cast<int>(i)); break;
      case Containment::Boundary: hull.on_edges.push_back(static_cast<int>(i)); break;
      case Containment::Exterior:
        // within the collinear band of a popped vertex; it lies on the hull
        hull.on_edges.push_back(static_cast<int>(i));
        break;
    }
  }
  return hull;
}

Containment point_in_triangle(Complex p, Complex a, Complex b, Complex c, double eps) {
  const Orientation o = orientation(a, b, c, eps);
  if (o == Orientation::Collinear) throw Error(ErrorCode::DegenerateShape, "triangle is degenerate");
  if (o == Orientation::CW) std::swap(b, c);
  const double scale = std::max({std::abs(b - a), std::abs(c - a), std::abs(c - b)});
  const double band = eps * scale;
  const Complex verts[3] = {a, b, c};
  double nearest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const Complex u = verts[i], v = verts[(i + 1) % 3];
    const double d = cross(v - u, p - u) / std::abs(v - u);
    if (d < -band) return Containment::Exterior;
    nearest = std::min(nearest, d);
  }
  return nearest <= band ? Containment::Boundary : Containment::Interior;
}

Containment point_in_polygon(Complex p, std::span<const Complex> cycle, double eps) {
  if (cycle.size() < 3) throw Error(ErrorCode::DegenerateShape, "polygon needs at least three vertices");
  const double band = eps * length_scale(cycle);
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, cycle[i], cycle[(i + 1) % n]) <= band) return Containment::Boundary;
  }
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = cycle[i], b = cycle[(i + 1) % n];
    const double side = cross(b - a, p - a);
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && side > 0) ++winding;
    } else if (b.imag() <= p.imag() && side < 0) {
      --winding;
    }
  }
  return winding != 0 ? Containment::Interior : Containment::Exterior;
}

double normalize_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double direction_angle(Complex from, Complex to) {
  const Complex d = to - from;
  return normalize_angle(std::atan2(d.imag(), d.real()));
}

double distance_to_full_turns(double x) {
  const double r = normalize_angle(x);
  return std::min(r, kTwoPi - r);
}

double Sector::width() const {
  const double w = normalize_angle(hi_angle - lo_angle);
  return w == 0.0 ? kTwoPi : w;
}

SectorFan sector_fan(std::span<const Complex> points, int apex_index, double eps, double angle_eps) {
  const std::size_t n = points.size();
  if (apex_index < 0 || static_cast<std::size_t>(apex_index) >= n) {
    throw Error(ErrorCode::InvalidInput, "apex index out of range");
  }
  const Complex apex = points[static_cast<std::size_t>(apex_index)];

  std::vector<Complex> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) != apex_index) others.push_back(points[i]);
  }
  Hull others_hull;
  try {
    others_hull = convex_hull(others, eps);
  } catch (const Error&) {
    throw Error(ErrorCode::ApexOnHull, "remaining zeros are collinear");
  }
  if (point_in_polygon(apex, gather(others, others_hull.vertices), eps) != Containment::Interior) {
    throw Error(ErrorCode::ApexOnHull, "apex is not strictly inside the hull of the other zeros");
  }

  struct Direction {
    double angle;
    int index;
  };
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == apex_index) continue;
    dirs.push_back({direction_angle(apex, points[i]), static_cast<int>(i)});
  }
  std::sort(dirs.begin(), dirs.end(), [](const Direction& a, const Direction& b) {
    return a.angle != b.angle ? a.angle < b.angle : a.index < b.index;
  });

  struct Ray {
    double angle;       // first member, in sorted order
    double last_angle;  // most recent member, for chained grouping
    std::vector<int> members;
  };
  std::vector<Ray> rays;
  for (const auto& d : dirs) {
    if (!rays.empty() && d.angle - rays.back().last_angle <= angle_eps) {
      rays.back().members.push_back(d.index);
      rays.back().last_angle = d.angle;
    } else {
      rays.push_back({d.angle, d.angle, {d.index}});
    }
  }
  if (rays.size() > 1 && rays.front().angle + kTwoPi - rays.back().last_angle <= angle_eps) {
    // directions straddling angle zero
    auto& back = rays.back();
    back.members.insert(back.members.end(), rays.front().members.begin(), rays.front().members.end());
    rays.erase(rays.begin());
  }

  auto nearest_member = [&](const Ray& r) {
    int best = r.members.front();
    for (int m : r.members) {
      if (std::abs(points[static_cast<std::size_t>(m)] - apex) <
          std::abs(points[static_cast<std::size_t>(best)] - apex)) {
        best = m;
      }
    }
    return best;
  };

  SectorFan fan;
  fan.apex_index = apex_index;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Ray& lo = rays[i];
    const Ray& hi = rays[(i + 1) % rays.size()];
    fan.sectors.push_back({apex, lo.angle, hi.angle, nearest_member(lo), nearest_member(hi)});
    if (lo.members.size() > 1) {
      std::vector<int> group = lo.members;
      std::sort(group.begin(), group.end());
      fan.collinear_ray_groups.push_back(std::move(group));
    }
  }
  return fan;
}

SectorFan sector_fan(const ZeroConfigurationXd& config, int apex_index, double eps, double angle_eps) {
  const CVectorXd locs = config.locations();
  return sector_fan(as_span(locs), apex_index, eps, angle_eps);
}

Containment point_in_sector(Complex p, const Sector& sector, double angle_eps) {
  if (p == sector.apex) return Containment::Boundary;
  const double offset = normalize_angle(direction_angle(sector.apex, p) - sector.lo_angle);
  const double width = sector.width();
  if (offset <= angle_eps || offset >= kTwoPi - angle_eps) return Containment::Boundary;
  if (std::abs(offset - width) <= angle_eps) return Containment::Boundary;
  return offset < width ? Containment::Interior : Containment::Exterior;
}

bool segments_intersect(Complex a, Complex b, Complex c, Complex d, double band) {
  if (point_segment_distance(c, a, b) <= band || point_segment_distance(d, a, b) <= band ||
      point_segment_distance(a, c, d) <= band || point_segment_distance(b, c, d) <= band) {
    return true;
  }
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool is_simple_polygon(std::span<const Complex> cycle, double eps) {
  const std::size_t n = cycle.size();
  if (n < 3) return false;
  const double scale = length_scale(cycle);
  const double band = eps * scale;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(cycle[i] - cycle[j]) <= band) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = cycle[i], b = cycle[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex c = cycle[j], d = cycle[(j + 1) % n];
      const bool next = (j == i + 1);
      const bool wrap = (i == 0 && j == n - 1);
      if (next || wrap) {
        // shared vertex v; the two far endpoints must not fold back onto a common line
        const Complex v = next ? b : a;
        const Complex far1 = next ? a : b;
        const Complex far2 = next ? d : c;
        if (orientation_scaled(far1, v, far2, scale, eps) == Orientation::Collinear &&
            dot(far1 - v, far2 - v) > 0) {
          return false;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d, band)) return false;
    }
  }
  return true;
}

}  // namespace glx
