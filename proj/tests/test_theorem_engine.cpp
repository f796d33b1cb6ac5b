#include <doctest.h>

#include "glx/conjecture_lab.hpp"
#include "glx/theorem_engine.hpp"
#include "oracles.hpp"

using namespace glx;
using C = Complex;

namespace {

constexpr double kDeg = M_PI / 180.0;

const ZeroConfigurationXd kCanonical = ZeroConfigurationXd::simple({C(0), C(1), C(-1, 1), C(-1, -1)});

ZeroConfigurationXd from_random(const std::vector<oracle::RandomZero>& zs) {
  std::vector<ZeroEntry<double>> entries;
  for (const auto& z : zs) entries.push_back({z.z, z.k});
  return ZeroConfigurationXd(entries);
}

std::vector<C> to_vec(const CVectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const TriangleVerdict* find_triangle(const TheoremOneVerdict& v, std::vector<int> vertices) {
  for (const auto& t : v.triangles) {
    if (sorted({t.vertices[0], t.vertices[1], t.vertices[2]}) == sorted(vertices)) return &t;
  }
  return nullptr;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("classify") {
  auto c = classify(kCanonical);
  CHECK(c.inner_indices == std::vector<int>{0});
  CHECK(c.d() == 1);
  CHECK(sorted(c.hull_vertex_indices) == std::vector<int>{1, 2, 3});

  CHECK(classify(ZeroConfigurationXd::simple({C(0), C(1), C(0, 1)})).d() == 0);

  // 1 is the centre of the diamond 0, 1+i, 2, 1-i
  c = classify(ZeroConfigurationXd::simple({C(0), C(2), C(1, 1), C(1, -1), C(1)}));
  CHECK(c.d() == 1);
  CHECK(c.inner_indices == std::vector<int>{4});

  // a zero on a hull edge is neither a vertex nor inner
  c = classify(ZeroConfigurationXd::simple({C(0), C(2), C(1, 2), C(1)}));
  CHECK(c.d() == 0);
  CHECK(c.hull_boundary_indices == std::vector<int>{3});

  CHECK(code_of([] { classify(ZeroConfigurationXd::simple({C(0), C(1), C(3)})); }) == ErrorCode::AllCollinear);
}

TEST_CASE("centroid identity") {
  auto crit = critical_points(kCanonical);
  CHECK(check_centroid(kCanonical, crit) < 1e-9);
  // oracle: both means are -1/4
  CHECK(std::abs(crit.nontrivial.mean() - C(-0.25)) < 1e-9);

  const C c(0.3, -2.0);
  const auto two = ZeroConfigurationXd::simple({C(0), c});
  CHECK(check_centroid(two, critical_points(two)) < 1e-15);

  const auto cube = ZeroConfigurationXd::simple({std::polar(1.0, 0.0), std::polar(1.0, 2 * M_PI / 3), std::polar(1.0, 4 * M_PI / 3)});
  CHECK(check_centroid(cube, critical_points(cube)) < 1e-12);
}

TEST_CASE("product identity") {
  // 4 w1 w2 w3 = 2 from the constant term of 4z^3 + 3z^2 - 2
  const auto crit = critical_points(kCanonical);
  CHECK(std::abs(4.0 * crit.nontrivial.prod() - C(2)) < 1e-9);
  CHECK(check_product_identity(kCanonical, crit, 0) < 1e-9);

  // p' = 4z^3 - 2iz + (i - 1): 4 prod w = 1 - i = i(-1-i)
  const auto skew = ZeroConfigurationXd::simple({C(0), C(1), C(0, 1), C(-1, -1)});
  const auto dp = derivative(from_roots(skew));
  CHECK(std::abs(dp[0] - C(-1, 1)) < 1e-15);
  CHECK(std::abs(dp[1] - C(0, -2)) < 1e-15);
  CHECK(std::abs(dp[2]) < 1e-15);
  const auto skew_crit = critical_points(skew);
  CHECK(std::abs(4.0 * skew_crit.nontrivial.prod() - C(1, -1)) < 1e-9);
  CHECK(check_product_identity(skew, skew_crit, 0) < 1e-9);

  // double inner zero: p' = 5z^4 + 4z^3 - 4z, deflated 5z^3 + 4z^2 - 4
  const ZeroConfigurationXd dbl({{C(0), 2}, {C(1), 1}, {C(-1, 1), 1}, {C(-1, -1), 1}});
  const auto dbl_crit = critical_points(dbl);
  CHECK(std::abs(dbl_crit.nontrivial.prod() - C(0.8)) < 1e-12);
  CHECK(check_product_identity(dbl, dbl_crit, 0) < 1e-9);

  CHECK(code_of([&] { check_product_identity(kCanonical, crit, 7); }) == ErrorCode::InvalidInput);
}

TEST_CASE("angle identity") {
  const auto crit = critical_points(kCanonical);
  CHECK(check_angle_identity(kCanonical, crit, 0) < 1e-6);
  // oracle: atan2 on the cubic's roots, 135 + 225 vs 0 + 138.38 + 221.62
  double lhs = 0, rhs = 0;
  for (C z : {C(1), C(-1, 1), C(-1, -1)}) lhs += normalize_angle(std::arg(z));
  for (C w : oracle::canonical_cubic_roots()) rhs += normalize_angle(std::arg(w));
  CHECK(distance_to_full_turns(lhs - rhs) < 1e-6);
  CHECK(lhs / kDeg == doctest::Approx(360.0));

  const auto two = ZeroConfigurationXd::simple({C(0), C(-2, 1)});
  CHECK(check_angle_identity(two, critical_points(two), 0) < 1e-15);

  const auto line = ZeroConfigurationXd::simple({C(0), C(1), C(2), C(3)});
  CHECK(check_angle_identity(line, critical_points(line), 0) < 1e-9);
}

TEST_CASE("theorem 1 on the canonical quadrilateral") {
  const auto v = verify_theorem1(kCanonical);
  CHECK(v.pass);
  REQUIRE(v.triangles.size() == 3);
  for (const auto& t : v.triangles) CHECK(t.vertices[0] == 0);
  const auto* upper = find_triangle(v, {0, 1, 2});
  const auto* lower = find_triangle(v, {0, 3, 1});
  const auto* left = find_triangle(v, {0, 2, 3});
  REQUIRE(upper);
  REQUIRE(lower);
  REQUIRE(left);
  CHECK(upper->interior_count == 0);
  CHECK(lower->interior_count == 0);
  CHECK(upper->boundary_count == 1);
  CHECK(lower->boundary_count == 1);
  CHECK(left->interior_count == 2);
  CHECK(v.empty_triangle_indices.size() == 2);

  CHECK(code_of([] { verify_theorem1(ZeroConfigurationXd::simple({C(0), C(1), C(0, 1)})); }) ==
        ErrorCode::NotConcaveQuadrilateral);
  CHECK(code_of([] { verify_theorem1(ZeroConfigurationXd({{C(0), 2}, {C(1), 1}, {C(-1, 1), 1}, {C(-1, -1), 1}})); }) ==
        ErrorCode::NotConcaveQuadrilateral);

  TrialRng rng(42, 0);
  CHECK(verify_theorem1(sample_concave_quadrilateral(rng)).pass);
}

TEST_CASE("theorem 2") {
  auto v = verify_theorem2(kCanonical);
  REQUIRE(v.size() == 1);
  CHECK(v[0].zero_index == 0);
  CHECK_FALSE(v[0].skipped_collinear);
  REQUIRE(v[0].empty_sector.has_value());
  std::vector<std::pair<double, double>> empty;
  for (const auto& s : v[0].sectors) {
    if (s.interior_count == 0) empty.emplace_back(s.sector.lo_angle / kDeg, s.sector.hi_angle / kDeg);
  }
  REQUIRE(empty.size() == 2);
  CHECK(empty[0].first == doctest::Approx(0.0));
  CHECK(empty[0].second == doctest::Approx(135.0));
  CHECK(empty[1].first == doctest::Approx(225.0));
  CHECK(std::abs(std::remainder(empty[1].second - 360.0, 360.0)) < 1e-9);

  CHECK(verify_theorem2(ZeroConfigurationXd::simple({C(0), C(1), C(0, 1)})).empty());

  TrialRng rng(7);
  const auto cfg = sample_general(rng, 7, 2);
  CHECK(cfg.degree() == 7);
  v = verify_theorem2(cfg);
  REQUIRE(v.size() == 2);
  for (const auto& z : v) CHECK((z.skipped_collinear || z.empty_sector.has_value()));

  // 0 and 1 are both inner; from 0, zeros 1 and 2 share a ray, from 1 the
  // rays to 0 and 2 are opposite and do not count
  v = verify_theorem2(ZeroConfigurationXd::simple({C(0), C(1), C(2), C(-1, 1), C(-1, -1)}));
  REQUIRE(v.size() == 2);
  CHECK(v[0].zero_index == 0);
  CHECK(v[0].skipped_collinear);
  CHECK(v[1].zero_index == 1);
  CHECK_FALSE(v[1].skipped_collinear);
  CHECK(v[1].empty_sector.has_value());
}

TEST_CASE("Gauss-Lucas") {
  auto crit = critical_points(kCanonical);
  const auto v = gauss_lucas(kCanonical, crit);
  CHECK(v.pass);
  for (auto c : v.placements) CHECK(c == Containment::Interior);

  const auto line = ZeroConfigurationXd::simple({C(0), C(1), C(3)});
  crit = critical_points(line);
  const auto lv = gauss_lucas(line, crit);
  CHECK(lv.pass);
  for (auto c : lv.placements) CHECK(c == Containment::Boundary);
  CHECK(gauss_lucas_check(line, crit));
}

TEST_CASE("Steiner foci and Marden") {
  const C w = std::polar(1.0, 2 * M_PI / 3);
  auto [f1, f2] = steiner_foci(C(1), w, w * w);
  // a double root: the square root turns rounding dust into ~sqrt(eps)
  CHECK(std::abs(f1) < 1e-7);
  CHECK(std::abs(f2) < 1e-7);

  // oracle: quadratic formula on 3z^2 - 2(1+i)z + i
  const C b = C(-2, -2), disc = std::sqrt(b * b - 12.0 * C(0, 1));
  const std::vector<C> expected{(-b + disc) / 6.0, (-b - disc) / 6.0};
  std::tie(f1, f2) = steiner_foci(C(0), C(1), C(0, 1));
  CHECK(oracle::multiset_distance({f1, f2}, expected) < 1e-15);
  CHECK(oracle::multiset_distance({f1, f2}, {C(0.56903559, 0.09763107), C(0.09763107, 0.56903559)}) < 1e-8);

  TrialRng rng(1);
  const auto tri = sample_triangle(rng);
  const auto m = marden_check(tri[0].location, tri[1].location, tri[2].location);
  CHECK(m.focus_residual < 1e-9);
  CHECK(m.tangency_residual <= 1e-8);
  CHECK(m.within_tolerance());

  CHECK(code_of([] { steiner_foci(C(0), C(1), C(2)); }) == ErrorCode::DegenerateTriangle);
}

TEST_CASE("analyze bundles every verdict") {
  const auto a = analyze(kCanonical);
  REQUIRE(a.classification.has_value());
  REQUIRE(a.theorem1.has_value());
  CHECK(a.theorem1->pass);
  CHECK(a.theorem2_pass());
  CHECK(a.gauss_lucas.pass);
  CHECK_FALSE(a.marden.has_value());
  CHECK(a.all_passed());

  const auto tri = analyze(ZeroConfigurationXd::simple({C(0), C(1), C(0, 1)}));
  CHECK(tri.marden.has_value());
  CHECK_FALSE(tri.theorem1.has_value());
  CHECK(tri.all_passed());

  const auto line = analyze(ZeroConfigurationXd::simple({C(0), C(1), C(3)}));
  CHECK_FALSE(line.classification.has_value());
  CHECK_FALSE(line.classification_note.empty());
  CHECK(line.all_passed());
}

TEST_CASE("property: identities hold on random configurations") {
  TrialRng rng(1001);
  for (int t = 0; t < 1000; ++t) {
    const auto cfg = from_random(oracle::random_zeros(rng, 12, 0.1, 3));
    const auto crit = critical_points(cfg);
    std::vector<int> all;
    for (std::size_t i = 0; i < cfg.size(); ++i) all.push_back(static_cast<int>(i));
    const auto rep = check_identities(cfg, crit, all);
    CHECK(rep.centroid_residual <= kCentroidTolerance);
    CHECK(rep.vieta_product_residual <= kProductTolerance);
    CHECK(rep.angle_sum_residual <= kAngleIdentityTolerance);
  }
}

TEST_CASE("property: product identity matches the lowest nonvanishing coefficient") {
  // p = u^k0 q(u) gives [u^(k0-1)] p' = k0 q(0), independent of any root solve
  TrialRng rng(2002);
  for (int t = 0; t < 300; ++t) {
    const auto cfg = from_random(oracle::random_zeros(rng, 12, 0.1, 3));
    const auto crit = critical_points(cfg);
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      const C z0 = cfg[i].location;
      const int k0 = cfg[i].multiplicity;
      std::vector<ZeroEntry<double>> moved;
      for (const auto& e : cfg.entries()) moved.push_back({e.location - z0, e.multiplicity});
      const auto dp = derivative(from_roots(ZeroConfigurationXd(moved)));
      const auto low = lowest_nonvanishing_coefficient(dp);
      CHECK(low.order == k0 - 1);

      C lhs = double(cfg.degree());
      for (C w : to_vec(crit.all_points())) {
        if (std::abs(w - z0) > 1e-12) lhs *= (w - z0);
      }
      const double sign = ((cfg.degree() - k0) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(lhs - sign * low.value) <= 1e-8 * std::abs(low.value));
      CHECK(check_product_identity(cfg, crit, static_cast<int>(i)) <= kProductTolerance);
    }
  }
}

TEST_CASE("property: theorem 1 on sampled concave quadrilaterals") {
  for (long t = 0; t < 1000; ++t) {
    TrialRng rng(42, static_cast<std::uint64_t>(t));
    const auto cfg = sample_concave_quadrilateral(rng);
    CHECK(verify_theorem1(cfg).pass);
  }
}

TEST_CASE("property: theorem 2 on sampled configurations") {
  for (auto [n, d] : {std::pair{5, 1}, {6, 2}, {8, 3}}) {
    for (long t = 0; t < 200; ++t) {
      TrialRng rng(11, static_cast<std::uint64_t>(t));
      const auto cfg = sample_general(rng, n, d);
      for (const auto& z : verify_theorem2(cfg)) CHECK((z.skipped_collinear || z.empty_sector.has_value()));
    }
  }
}

TEST_CASE("property: sector and triangle verdicts agree for quadrilaterals") {
  int checked = 0;
  for (long t = 0; t < 500; ++t) {
    TrialRng rng(3, static_cast<std::uint64_t>(t));
    const auto cfg = sample_concave_quadrilateral(rng);
    const auto crit = critical_points(cfg);
    const auto locs = cfg.locations();
    const auto fan = sector_fan(cfg, 0);
    const auto hull = gather(as_span(locs), classify(cfg).hull_vertex_indices);
    for (C w : to_vec(crit.nontrivial)) {
      if (point_in_polygon(w, hull) != Containment::Interior) continue;
      for (const auto& s : fan.sectors) {
        if (point_in_sector(w, s) != Containment::Interior) continue;
        CHECK(point_in_triangle(w, locs(0), locs(s.lo_zero_index), locs(s.hi_zero_index)) == Containment::Interior);
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("property: Marden residual on sampled triangles") {
  for (long t = 0; t < 1000; ++t) {
    TrialRng rng(1, static_cast<std::uint64_t>(t));
    const auto tri = sample_triangle(rng);
    const auto m = marden_check(tri[0].location, tri[1].location, tri[2].location);
    CHECK(m.focus_residual <= kFocusTolerance);
    CHECK(m.tangency_residual <= kTangencyTolerance);
  }
}

TEST_CASE("property: rotation covariance") {
  TrialRng rng(909);
  for (int t = 0; t < 300; ++t) {
    const auto cfg = from_random(oracle::random_zeros(rng, 12, 0.1, 3));
    const C rot = std::polar(1.0, rng.uniform(0, 2 * M_PI));
    const auto turned = cfg.transformed(rot, C(0));
    std::vector<C> expected;
    for (C w : to_vec(critical_points(cfg).all_points())) expected.push_back(rot * w);
    CHECK(oracle::multiset_distance(to_vec(critical_points(turned).all_points()), expected) < 1e-9);
  }
}

TEST_CASE("property: sector interiors survive affine maps") {
  int compared = 0;
  for (long t = 0; t < 300; ++t) {
    TrialRng rng(17, static_cast<std::uint64_t>(t));
    const auto cfg = sample_general(rng, 6, 1);
    const C u = std::polar(rng.uniform(0.2, 5), rng.uniform(0, 2 * M_PI));
    const C v(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const auto moved = cfg.transformed(u, v);
    const auto a = sector_fan(cfg, 0), b = sector_fan(moved, 0);
    REQUIRE(a.sectors.size() == b.sectors.size());
    for (int k = 0; k < 20; ++k) {
      const C p = cfg[0].location + std::polar(rng.uniform(0.05, 1), rng.uniform(0, 2 * M_PI));
      for (std::size_t s = 0; s < a.sectors.size(); ++s) {
        // sectors are matched by their bounding zeros, not by position in the list
        for (const auto& bs : b.sectors) {
          if (bs.lo_zero_index != a.sectors[s].lo_zero_index) continue;
          if (point_in_sector(p, a.sectors[s], 10 * kAngleEps) == Containment::Interior) {
            CHECK(point_in_sector(u * p + v, bs) == Containment::Interior);
            ++compared;
          }
        }
      }
    }
  }
  CHECK(compared > 1000);
}
