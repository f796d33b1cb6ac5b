#include "glx/theorem_engine.hpp"

#include <algorithm>
#include <cmath>

namespace glx {

namespace {

const ZeroEntry<double>& entry_at(const ZeroConfigurationXd& config, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= config.size()) {
    throw Error(ErrorCode::InvalidInput, "zero index " + std::to_string(index) + " out of range");
  }
  return config[static_cast<std::size_t>(index)];
}

void require_nonzero_offsets(const ZeroConfigurationXd& config, int designated) {
  const Complex origin = entry_at(config, designated).location;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (static_cast<int>(i) == designated) continue;
    if (std::abs(config[i].location - origin) <= kMinZeroSeparation) {
      throw Error(ErrorCode::RightSideZero, "another zero coincides with the translated origin");
    }
  }
}

int count_matching(const std::vector<Containment>& v, Containment c) {
  return static_cast<int>(std::count(v.begin(), v.end(), c));
}

}  // namespace

Classification classify(const ZeroConfigurationXd& config, const Tolerances& tol) {
  const CVectorXd locs = config.locations();
  const Hull hull = convex_hull(as_span(locs), tol.geo);
  return {hull.vertices, hull.interior, hull.on_edges};
}

double check_centroid(const ZeroConfigurationXd& config, const CriticalSetXd& crit) {
  Complex zero_sum(0);
  for (const auto& e : config.entries()) zero_sum += double(e.multiplicity) * e.location;
  const CVectorXd all = crit.all_points();
  if (all.size() == 0) return 0.0;
  const Complex crit_mean = all.sum() / double(all.size());
  return std::abs(crit_mean - zero_sum / double(config.degree()));
}

double check_product_identity(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                              int designated) {
  const auto& origin = entry_at(config, designated);
  require_nonzero_offsets(config, designated);

  Complex rhs(double(origin.multiplicity));
  Complex lhs(double(config.degree()));
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (static_cast<int>(i) == designated) continue;
    const Complex u = config[i].location - origin.location;
    rhs *= std::pow(u, config[i].multiplicity);
  }
  for (const auto& t : crit.trivial) {
    if (t.zero_index == designated) continue;
    lhs *= std::pow(t.location - origin.location, t.order);
  }
  for (Eigen::Index j = 0; j < crit.nontrivial.size(); ++j) lhs *= crit.nontrivial(j) - origin.location;
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double check_angle_identity(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                            int designated) {
  const auto& origin = entry_at(config, designated);
  require_nonzero_offsets(config, designated);
  double diff = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (static_cast<int>(i) == designated) continue;
    diff += std::arg(config[i].location - origin.location);
  }
  for (Eigen::Index j = 0; j < crit.nontrivial.size(); ++j) {
    diff -= std::arg(crit.nontrivial(j) - origin.location);
  }
  return distance_to_full_turns(diff);
}

IdentityReport check_identities(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                const std::vector<int>& designated) {
  IdentityReport report;
  report.centroid_residual = check_centroid(config, crit);
  for (int idx : designated) {
    IdentityEntry e{idx, check_product_identity(config, crit, idx), check_angle_identity(config, crit, idx)};
    report.vieta_product_residual = std::max(report.vieta_product_residual, e.product_residual);
    report.angle_sum_residual = std::max(report.angle_sum_residual, e.angle_residual);
    report.per_zero.push_back(e);
  }
  return report;
}

TheoremOneVerdict verify_theorem1(const ZeroConfigurationXd& config, const Tolerances& tol) {
  // preconditions first so a bad shape never reaches the solver
  if (config.size() != 4 || !config.all_simple()) {
    throw Error(ErrorCode::NotConcaveQuadrilateral, "need exactly four distinct simple zeros");
  }
  return verify_theorem1(config, critical_points(config), tol);
}

TheoremOneVerdict verify_theorem1(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                  const Tolerances& tol) {
  if (config.size() != 4 || !config.all_simple()) {
    throw Error(ErrorCode::NotConcaveQuadrilateral, "need exactly four distinct simple zeros");
  }
  Classification cls;
  try {
    cls = classify(config, tol);
  } catch (const Error&) {
    throw Error(ErrorCode::NotConcaveQuadrilateral, "zeros are collinear");
  }
  if (cls.d() != 1 || cls.hull_vertex_indices.size() != 3 || !cls.hull_boundary_indices.empty()) {
    throw Error(ErrorCode::NotConcaveQuadrilateral, "zeros do not form a concave quadrilateral");
  }

  const int inner = cls.inner_indices.front();
  const auto& hv = cls.hull_vertex_indices;
  TheoremOneVerdict verdict;
  for (int t = 0; t < 3; ++t) {
    TriangleVerdict& tri = verdict.triangles[static_cast<std::size_t>(t)];
    tri.vertices = {inner, hv[static_cast<std::size_t>(t)], hv[static_cast<std::size_t>((t + 1) % 3)]};
    const Complex a = config[static_cast<std::size_t>(tri.vertices[0])].location;
    const Complex b = config[static_cast<std::size_t>(tri.vertices[1])].location;
    const Complex c = config[static_cast<std::size_t>(tri.vertices[2])].location;
    for (Eigen::Index j = 0; j < crit.nontrivial.size(); ++j) {
      switch (point_in_triangle(crit.nontrivial(j), a, b, c, tol.geo)) {
        case Containment::Interior: ++tri.interior_count; break;
        case Containment::Boundary: ++tri.boundary_count; break;
        case Containment::Exterior: break;
      }
    }
    if (tri.interior_count == 0) verdict.empty_triangle_indices.push_back(t);
  }
  verdict.pass = !verdict.empty_triangle_indices.empty();
  return verdict;
}

std::vector<InnerZeroVerdict> verify_theorem2(const ZeroConfigurationXd& config, const Tolerances& tol) {
  Classification cls;
  try {
    cls = classify(config, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AllCollinear) return {};
    throw;
  }
  if (cls.d() == 0) return {};
  return verify_theorem2(config, critical_points(config), cls.inner_indices, tol);
}

std::vector<InnerZeroVerdict> verify_theorem2(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                                              const std::vector<int>& inner_indices, const Tolerances& tol) {
  const CVectorXd locs = config.locations();
  const CVectorXd points = crit.all_points();
  const double apex_band = tol.geo * length_scale(as_span(locs));

  std::vector<InnerZeroVerdict> out;
  for (int idx : inner_indices) {
    InnerZeroVerdict v;
    v.zero_index = idx;
    SectorFan fan;
    try {
      fan = sector_fan(as_span(locs), idx, tol.geo, tol.angle);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ApexOnHull) throw;
      // classification and fan disagree inside the band; nothing to certify
      v.skipped_collinear = true;
      out.push_back(std::move(v));
      continue;
    }
    v.collinear_ray_groups = fan.collinear_ray_groups;
    v.skipped_collinear = !fan.collinear_ray_groups.empty();

    const Complex apex = locs(idx);
    for (const Sector& s : fan.sectors) {
      SectorVerdict sv{s, 0, 0};
      for (Eigen::Index j = 0; j < points.size(); ++j) {
        if (std::abs(points(j) - apex) <= apex_band) continue;
        switch (point_in_sector(points(j), s, tol.angle)) {
          case Containment::Interior: ++sv.interior_count; break;
          case Containment::Boundary: ++sv.boundary_count; break;
          case Containment::Exterior: break;
        }
      }
      if (sv.interior_count == 0 && !v.empty_sector) v.empty_sector = s;
      v.sectors.push_back(sv);
    }
    out.push_back(std::move(v));
  }
  return out;
}

GaussLucasVerdict gauss_lucas(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                              const Tolerances& tol) {
  const CVectorXd locs = config.locations();
  const CVectorXd points = crit.all_points();
  GaussLucasVerdict verdict;
  verdict.placements.reserve(static_cast<std::size_t>(points.size()));

  std::optional<Hull> hull;
  if (locs.size() >= 3) {
    try {
      hull = convex_hull(as_span(locs), tol.geo);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllCollinear) throw;
    }
  }

  if (hull) {
    const std::vector<Complex> cycle = gather(as_span(locs), hull->vertices);
    for (Eigen::Index j = 0; j < points.size(); ++j) {
      verdict.placements.push_back(point_in_polygon(points(j), cycle, tol.geo));
    }
  } else {
    // degenerate hull: the segment between the two farthest zeros
    Eigen::Index ia = 0, ib = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < locs.size(); ++i) {
      for (Eigen::Index j = i + 1; j < locs.size(); ++j) {
        if (std::abs(locs(i) - locs(j)) > best) {
          best = std::abs(locs(i) - locs(j));
          ia = i;
          ib = j;
        }
      }
    }
    const double band = tol.geo * std::max(best, 0.0);
    for (Eigen::Index j = 0; j < points.size(); ++j) {
      const bool on = point_segment_distance(points(j), locs(ia), locs(ib)) <= band;
      verdict.placements.push_back(on ? Containment::Boundary : Containment::Exterior);
    }
  }
  verdict.pass = count_matching(verdict.placements, Containment::Exterior) == 0;
  return verdict;
}

bool gauss_lucas_check(const ZeroConfigurationXd& config, const CriticalSetXd& crit, const Tolerances& tol) {
  return gauss_lucas(config, crit, tol).pass;
}

std::pair<Complex, Complex> steiner_foci(Complex z1, Complex z2, Complex z3) {
  if (orientation(z1, z2, z3) == Orientation::Collinear) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
  const Complex g = (z1 + z2 + z3) / 3.0;
  const Complex s = std::sqrt(z1 * z1 + z2 * z2 + z3 * z3 - z1 * z2 - z2 * z3 - z3 * z1) / 3.0;
  return {g + s, g - s};
}

MardenReport marden_check(Complex z1, Complex z2, Complex z3) {
  const auto [f1, f2] = steiner_foci(z1, z2, z3);
  MardenReport report{f1, f2};

  const CriticalSetXd crit = critical_points(ZeroConfigurationXd::simple({z1, z2, z3}));
  const Complex w1 = crit.nontrivial(0), w2 = crit.nontrivial(1);
  const double straight = std::max(std::abs(w1 - f1), std::abs(w2 - f2));
  const double swapped = std::max(std::abs(w1 - f2), std::abs(w2 - f1));
  report.focus_residual = std::min(straight, swapped);

  const std::array<Complex, 3> midpoints = {(z1 + z2) / 2.0, (z2 + z3) / 2.0, (z3 + z1) / 2.0};
  std::array<double, 3> sums{};
  for (std::size_t i = 0; i < 3; ++i) sums[i] = std::abs(midpoints[i] - f1) + std::abs(midpoints[i] - f2);
  const double mean = (sums[0] + sums[1] + sums[2]) / 3.0;
  for (double s : sums) report.tangency_residual = std::max(report.tangency_residual, std::abs(s - mean));
  return report;
}

bool Analysis::theorem2_pass() const {
  return std::all_of(theorem2.begin(), theorem2.end(),
                     [](const InnerZeroVerdict& v) { return v.skipped_collinear || v.empty_sector.has_value(); });
}

bool Analysis::all_passed() const {
  if (!identities.within_tolerance()) return false;
  if (theorem1 && !theorem1->pass) return false;
  if (!theorem2_pass()) return false;
  if (!gauss_lucas.pass) return false;
  if (marden && !marden->within_tolerance()) return false;
  return true;
}

Analysis analyze(const ZeroConfigurationXd& config, const Tolerances& tol) {
  CriticalSetXd crit = critical_points(config);
  Analysis out{.config = config, .critical = std::move(crit), .classification = std::nullopt, .classification_note = {},
               .identities = {}, .theorem1 = std::nullopt, .theorem1_note = {}, .theorem2 = {}, .gauss_lucas = {},
               .marden = std::nullopt};

  try {
    out.classification = classify(config, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllCollinear) throw;
    out.classification_note = "zeros are collinear; hull is degenerate";
  }

  std::vector<int> designated;
  if (out.classification && out.classification->d() > 0) {
    designated = out.classification->inner_indices;
  } else {
    for (std::size_t i = 0; i < config.size(); ++i) designated.push_back(static_cast<int>(i));
  }
  out.identities = check_identities(config, out.critical, designated);

  try {
    out.theorem1 = verify_theorem1(config, out.critical, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotConcaveQuadrilateral) throw;
    out.theorem1_note = e.what();
  }

  if (out.classification && out.classification->d() > 0) {
    out.theorem2 = verify_theorem2(config, out.critical, out.classification->inner_indices, tol);
  }

  out.gauss_lucas = gauss_lucas(config, out.critical, tol);

  if (config.size() == 3 && config.all_simple() && out.classification) {
    out.marden = marden_check(config[0].location, config[1].location, config[2].location);
  }
  return out;
}

}  // namespace glx
