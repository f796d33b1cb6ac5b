#include "glx/conjecture_lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <thread>

namespace glx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class RejectionBudget {
 public:
  explicit RejectionBudget(const char* what) : what_(what) {}
  void reject() {
    if (++count_ > kMaxRejections) {
      throw Error(ErrorCode::InfeasibleSpec,
                  std::string(what_) + ": no valid sample after " + std::to_string(kMaxRejections) + " rejections");
    }
  }

 private:
  const char* what_;
  int count_ = 0;
};

Complex uniform_disk(TrialRng& rng, double radius = 1.0) {
  const double r = radius * std::sqrt(rng.uniform());
  return std::polar(r, kTwoPi * rng.uniform());
}

double min_distance_to_boundary(Complex p, std::span<const Complex> cycle) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    best = std::min(best, point_segment_distance(p, cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return best;
}

bool has_near_collinear_triple(std::span<const Complex> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const double longest = std::max({std::abs(pts[j] - pts[i]), std::abs(pts[k] - pts[i]),
                                         std::abs(pts[k] - pts[j])});
        const double height = std::abs(cross(pts[j] - pts[i], pts[k] - pts[i])) / longest;
        if (height < kMinTripleHeight) return true;
      }
    }
  }
  return false;
}

double inner_angle(Complex apex, Complex a, Complex b) {
  const Complex u = a - apex, v = b - apex;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

ZeroConfigurationXd sample_concave_quadrilateral(TrialRng& rng) {
  RejectionBudget budget("concave quadrilateral");
  Complex a, b, c;
  for (;;) {
    a = uniform_disk(rng);
    b = uniform_disk(rng);
    c = uniform_disk(rng);
    if (std::abs(cross(b - a, c - a)) / 2.0 >= kQuadMinArea) break;
    budget.reject();
  }
  const std::array<Complex, 3> tri = {a, b, c};
  for (;;) {
    const double u = rng.uniform(), v = rng.uniform();
    const double s1 = std::min(u, v), s2 = std::max(u, v);
    const Complex p = s1 * a + (s2 - s1) * b + (1.0 - s2) * c;
    if (min_distance_to_boundary(p, tri) >= kQuadMargin) return ZeroConfigurationXd::simple({p, a, b, c});
    budget.reject();
  }
}

ZeroConfigurationXd sample_general(TrialRng& rng, int n, int inner_count) {
  if (n < 4 || inner_count < 1 || inner_count > n - 3) {
    throw Error(ErrorCode::InfeasibleSpec, "need n >= 4 and 1 <= inner_count <= n - 3 (n=" + std::to_string(n) +
                                               ", inner=" + std::to_string(inner_count) + ")");
  }
  const int hull_count = n - inner_count;
  RejectionBudget budget("general configuration");

  for (;;) {
    std::vector<double> angles(static_cast<std::size_t>(hull_count));
    for (auto& t : angles) t = kTwoPi * rng.uniform();
    std::sort(angles.begin(), angles.end());
    bool gaps_ok = kTwoPi - angles.back() + angles.front() >= kMinAngularGap;
    for (std::size_t i = 1; i < angles.size() && gaps_ok; ++i) gaps_ok = angles[i] - angles[i - 1] >= kMinAngularGap;
    if (!gaps_ok) {
      budget.reject();
      continue;
    }
    std::vector<Complex> hull_pts;
    for (double t : angles) hull_pts.push_back(std::polar(rng.uniform(kAnnulusInner, kAnnulusOuter), t));

    Hull hull;
    try {
      hull = convex_hull(hull_pts);
    } catch (const Error&) {
      budget.reject();
      continue;
    }
    if (static_cast<int>(hull.vertices.size()) != hull_count) {
      budget.reject();
      continue;
    }

    double xmin = hull_pts[0].real(), xmax = xmin, ymin = hull_pts[0].imag(), ymax = ymin;
    for (const auto& p : hull_pts) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
    // a thin hull may have no room for the inner zeros; give up on it after
    // a bounded number of draws rather than spending the whole budget
    std::vector<Complex> all;
    for (int draws = 0; static_cast<int>(all.size()) < inner_count && draws < kInnerDrawsPerHull; ++draws) {
      const Complex p(rng.uniform(xmin, xmax), rng.uniform(ymin, ymax));
      bool ok = point_in_polygon(p, hull_pts) == Containment::Interior &&
                min_distance_to_boundary(p, hull_pts) >= kQuadMargin;
      for (const auto& q : all) ok = ok && std::abs(p - q) >= kQuadMargin;
      if (ok) all.push_back(p);
    }
    if (static_cast<int>(all.size()) < inner_count) {
      budget.reject();
      continue;
    }
    all.insert(all.end(), hull_pts.begin(), hull_pts.end());
    if (has_near_collinear_triple(all)) {
      budget.reject();
      continue;
    }
    ZeroConfigurationXd config = ZeroConfigurationXd::simple(all);
    const Classification cls = classify(config);
    if (cls.d() != inner_count || static_cast<int>(cls.hull_vertex_indices.size()) != hull_count) {
      budget.reject();
      continue;
    }
    return config;
  }
}

ZeroConfigurationXd sample_mixed(TrialRng& rng, int max_degree) {
  if (max_degree < 2) throw Error(ErrorCode::InfeasibleSpec, "max_degree must be at least 2");
  const int n = rng.uniform_int(2, std::min(8, max_degree));
  std::vector<int> mult(static_cast<std::size_t>(n));
  for (auto& k : mult) k = rng.uniform() < 0.6 ? 1 : rng.uniform_int(2, 3);
  int total = std::accumulate(mult.begin(), mult.end(), 0);
  for (std::size_t i = mult.size(); total > max_degree && i-- > 0;) {
    const int cut = std::min(mult[i] - 1, total - max_degree);
    mult[i] -= cut;
    total -= cut;
  }

  RejectionBudget budget("mixed configuration");
  std::vector<ZeroEntry<double>> entries;
  while (entries.size() < mult.size()) {
    const Complex z = uniform_disk(rng);
    const bool ok = std::all_of(entries.begin(), entries.end(),
                                [&](const ZeroEntry<double>& e) { return std::abs(e.location - z) >= kMixedSeparation; });
    if (ok) {
      entries.push_back({z, mult[entries.size()]});
    } else {
      budget.reject();
    }
  }
  return ZeroConfigurationXd(std::move(entries));
}

ZeroConfigurationXd sample_triangle(TrialRng& rng) {
  RejectionBudget budget("triangle");
  for (;;) {
    const Complex a = uniform_disk(rng, 2.5), b = uniform_disk(rng, 2.5), c = uniform_disk(rng, 2.5);
    const double ab = std::abs(b - a), bc = std::abs(c - b), ca = std::abs(a - c);
    const double shortest = std::min({ab, bc, ca}), longest = std::max({ab, bc, ca});
    const double flatness = std::abs(cross(b - a, c - a)) / (longest * longest);
    if (shortest >= 0.1 && longest <= 10.0 && flatness >= 1e-3) return ZeroConfigurationXd::simple({a, b, c});
    budget.reject();
  }
}

ZeroConfigurationXd sample_conjugate_quadrilateral(TrialRng& rng) {
  RejectionBudget budget("conjugate quadrilateral");
  for (;;) {
    const Complex c(rng.uniform(-1.5, 0.6), rng.uniform(0.1, 1.5));
    const double x = rng.uniform(c.real(), 1.0);
    const std::array<Complex, 3> tri = {Complex(1.0), c, std::conj(c)};
    if (min_distance_to_boundary(Complex(x), tri) >= kQuadMargin) {
      return ZeroConfigurationXd::simple({Complex(x), Complex(1.0), c, std::conj(c)});
    }
    budget.reject();
  }
}

bool is_rehr_polygon(const ZeroConfigurationXd& config, const CriticalSetXd& crit, const std::vector<int>& cycle,
                     const Tolerances& tol) {
  if (cycle.size() != config.size() || cycle.size() < 3) return false;
  std::vector<bool> seen(config.size(), false);
  std::vector<Complex> poly;
  for (int v : cycle) {
    if (v < 0 || static_cast<std::size_t>(v) >= config.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
    poly.push_back(config[static_cast<std::size_t>(v)].location);
  }
  if (!is_simple_polygon(poly, tol.geo)) return false;
  for (Eigen::Index j = 0; j < crit.nontrivial.size(); ++j) {
    if (point_in_polygon(crit.nontrivial(j), poly, tol.geo) == Containment::Exterior) return false;
  }
  return true;
}

namespace {

void require_rehr_size(const ZeroConfigurationXd& config) {
  if (static_cast<int>(config.size()) > kMaxRehrZeros) {
    throw Error(ErrorCode::InvalidInput, "Rehr search supports at most " + std::to_string(kMaxRehrZeros) + " zeros");
  }
}

}  // namespace

RehrResult rehr_search(const ZeroConfigurationXd& config, const CriticalSetXd& crit, const Tolerances& tol) {
  require_rehr_size(config);
  const int n = static_cast<int>(config.size());
  RehrResult result;
  if (n < 3) return result;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  cycle[0] = 0;
  do {
    if (rest.front() > rest.back()) continue;  // reversed duplicate
    std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
    ++result.cycles_checked;
    if (is_rehr_polygon(config, crit, cycle, tol)) {
      result.cycle = cycle;
      return result;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return result;
}

std::optional<std::vector<int>> rehr_search(const ZeroConfigurationXd& config, const Tolerances& tol) {
  require_rehr_size(config);
  return rehr_search(config, critical_points(config), tol).cycle;
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::LargestAngle: return "largest-angle";
    case Criterion::SmallestArea: return "smallest-area";
  }
  return "?";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  if (name == "largest-angle" || name == "LARGEST_ANGLE") return Criterion::LargestAngle;
  if (name == "smallest-area" || name == "SMALLEST_AREA") return Criterion::SmallestArea;
  return std::nullopt;
}

CriterionCheck evaluate_criterion(const ZeroConfigurationXd& config, Criterion criterion, const Tolerances& tol) {
  CriterionCheck check;
  check.verdict = verify_theorem1(config, tol);
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& v = check.verdict.triangles[t].vertices;
    const Complex inner = config[static_cast<std::size_t>(v[0])].location;
    const Complex a = config[static_cast<std::size_t>(v[1])].location;
    const Complex b = config[static_cast<std::size_t>(v[2])].location;
    check.scores[t] = criterion == Criterion::LargestAngle ? inner_angle(inner, a, b)
                                                           : std::abs(cross(a - inner, b - inner)) / 2.0;
  }
  // rank so that index 0 is the criterion's pick
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const double si = check.scores[static_cast<std::size_t>(i)], sj = check.scores[static_cast<std::size_t>(j)];
    return criterion == Criterion::LargestAngle ? si > sj : si < sj;
  });
  const double best = check.scores[static_cast<std::size_t>(order[0])];
  const double second = check.scores[static_cast<std::size_t>(order[1])];
  check.predicted = order[0];
  check.decisive = std::abs(best - second) > 1e-9 * std::max(std::abs(best), std::abs(second));
  check.violated = check.decisive && check.verdict.triangles[static_cast<std::size_t>(check.predicted)].interior_count > 0;
  return check;
}

FalsifyHit falsify_criterion(Criterion criterion, long budget, std::uint64_t seed, const Tolerances& tol) {
  for (long t = 0; t < budget; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    try {
      ZeroConfigurationXd config =
          t % 4 != 3 ? sample_conjugate_quadrilateral(rng) : sample_concave_quadrilateral(rng);
      CriterionCheck check = evaluate_criterion(config, criterion, tol);
      if (check.violated) return {std::move(config), t, std::move(check)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonConvergence && e.code() != ErrorCode::InfeasibleSpec) throw;
    }
  }
  throw Error(ErrorCode::BudgetExhausted, "no counterexample for " + std::string(to_string(criterion)) + " in " +
                                              std::to_string(budget) + " trials");
}

std::string_view to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::Theorem1: return "THEOREM1";
    case CampaignKind::Theorem2: return "THEOREM2";
    case CampaignKind::Marden: return "MARDEN";
    case CampaignKind::GaussLucas: return "GAUSS_LUCAS";
    case CampaignKind::Identities: return "IDENTITIES";
    case CampaignKind::Rehr: return "REHR";
    case CampaignKind::FalsifyCriterion: return "FALSIFY_CRITERION";
  }
  return "?";
}

std::string_view to_string(TrialVerdict v) {
  switch (v) {
    case TrialVerdict::Pass: return "pass";
    case TrialVerdict::Violation: return "violation";
    case TrialVerdict::Skipped: return "skipped";
  }
  return "?";
}

std::vector<const TrialRecord*> CampaignReport::violations() const {
  std::vector<const TrialRecord*> out;
  for (const auto& t : trials) {
    if (t.verdict == TrialVerdict::Violation) out.push_back(&t);
  }
  return out;
}

std::vector<std::pair<std::string, double>> CampaignReport::max_residuals() const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& t : trials) {
    if (t.verdict == TrialVerdict::Skipped) continue;
    for (const auto& [name, value] : t.residuals) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == name; });
      if (it == out.end()) {
        out.emplace_back(name, value);
      } else {
        it->second = std::max(it->second, value);
      }
    }
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("GLX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string instance_hash(const ZeroConfigurationXd& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& e : config.entries()) {
    mix(std::bit_cast<std::uint64_t>(e.location.real()));
    mix(std::bit_cast<std::uint64_t>(e.location.imag()));
    mix(static_cast<std::uint64_t>(e.multiplicity));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void validate(const CampaignSpec& spec) {
  if (spec.trials < 1) throw Error(ErrorCode::InvalidInput, "trials must be at least 1");
  switch (spec.kind) {
    case CampaignKind::Theorem2:
      if (spec.n < 4 || spec.inner_count < 1 || spec.inner_count > spec.n - 3) {
        throw Error(ErrorCode::InfeasibleSpec, "THEOREM2 needs n >= 4 and 1 <= inner <= n - 3");
      }
      break;
    case CampaignKind::Rehr:
      if (spec.n < 3 || spec.n > kMaxRehrZeros) {
        throw Error(ErrorCode::InvalidInput, "REHR needs 3 <= n <= " + std::to_string(kMaxRehrZeros));
      }
      if (spec.n >= 5 && (spec.inner_count < 1 || spec.inner_count > spec.n - 3)) {
        throw Error(ErrorCode::InfeasibleSpec, "REHR needs 1 <= inner <= n - 3");
      }
      break;
    case CampaignKind::FalsifyCriterion:
      if (!spec.criterion) throw Error(ErrorCode::InvalidInput, "FALSIFY_CRITERION needs a criterion");
      break;
    default:
      break;
  }
}

ZeroConfigurationXd sample_for(const CampaignSpec& spec, long index, TrialRng& rng) {
  switch (spec.kind) {
    case CampaignKind::Theorem1: return sample_concave_quadrilateral(rng);
    case CampaignKind::Theorem2: return sample_general(rng, spec.n, spec.inner_count);
    case CampaignKind::Marden: return sample_triangle(rng);
    case CampaignKind::GaussLucas:
    case CampaignKind::Identities: return sample_mixed(rng);
    case CampaignKind::Rehr:
      if (spec.n == 3) return sample_triangle(rng);
      if (spec.n == 4) return sample_concave_quadrilateral(rng);
      return sample_general(rng, spec.n, spec.inner_count);
    case CampaignKind::FalsifyCriterion:
      return index % 4 != 3 ? sample_conjugate_quadrilateral(rng) : sample_concave_quadrilateral(rng);
  }
  throw Error(ErrorCode::InvalidInput, "unknown campaign kind");
}

TrialVerdict pass_if(bool ok) { return ok ? TrialVerdict::Pass : TrialVerdict::Violation; }

void evaluate(const CampaignSpec& spec, const ZeroConfigurationXd& config, TrialRecord& rec) {
  const Tolerances& tol = spec.tolerances;
  auto& res = rec.residuals;
  switch (spec.kind) {
    case CampaignKind::Theorem1: {
      const CriticalSetXd crit = critical_points(config);
      const TheoremOneVerdict v = verify_theorem1(config, crit, tol);
      const IdentityReport ids = check_identities(config, crit, {v.triangles[0].vertices[0]});
      res = {{"empty_triangles", double(v.empty_triangle_indices.size())},
             {"centroid", ids.centroid_residual},
             {"product", ids.vieta_product_residual},
             {"angle", ids.angle_sum_residual}};
      rec.boundary_flagged = std::any_of(v.triangles.begin(), v.triangles.end(),
                                         [](const TriangleVerdict& t) { return t.boundary_count > 0; });
      rec.verdict = pass_if(v.pass);
      if (!v.pass) rec.note = "no triangle with an empty interior";
      break;
    }
    case CampaignKind::Theorem2: {
      const CriticalSetXd crit = critical_points(config);
      const Classification cls = classify(config, tol);
      const auto verdicts = verify_theorem2(config, crit, cls.inner_indices, tol);
      int skipped = 0, empty = 0;
      bool ok = true;
      for (const auto& v : verdicts) {
        if (v.skipped_collinear) {
          ++skipped;
          continue;
        }
        ok = ok && v.empty_sector.has_value();
        for (const auto& s : v.sectors) {
          if (s.interior_count == 0) ++empty;
          if (s.boundary_count > 0) rec.boundary_flagged = true;
        }
      }
      res = {{"inner_zeros", double(verdicts.size())}, {"skipped_inner", double(skipped)}, {"empty_sectors", double(empty)}};
      if (skipped == static_cast<int>(verdicts.size())) {
        rec.verdict = TrialVerdict::Skipped;
        rec.note = "every inner zero shares a ray with other zeros";
      } else {
        rec.verdict = pass_if(ok);
        if (!ok) rec.note = "inner zero without an empty sector";
      }
      break;
    }
    case CampaignKind::Marden: {
      const MardenReport m = marden_check(config[0].location, config[1].location, config[2].location);
      res = {{"focus", m.focus_residual}, {"tangency", m.tangency_residual}};
      rec.verdict = pass_if(m.within_tolerance());
      if (!m.within_tolerance()) rec.note = "critical points differ from the inellipse foci";
      break;
    }
    case CampaignKind::GaussLucas: {
      const CriticalSetXd crit = critical_points(config);
      const GaussLucasVerdict gl = gauss_lucas(config, crit, tol);
      const std::size_t first_nontrivial = gl.placements.size() - static_cast<std::size_t>(crit.nontrivial.size());
      for (std::size_t i = first_nontrivial; i < gl.placements.size(); ++i) {
        if (gl.placements[i] == Containment::Boundary) rec.boundary_flagged = true;
      }
      res = {{"solver_residual", crit.max_residual}};
      rec.verdict = pass_if(gl.pass);
      if (!gl.pass) rec.note = "critical point outside the hull";
      break;
    }
    case CampaignKind::Identities: {
      const CriticalSetXd crit = critical_points(config);
      std::vector<int> all(config.size());
      std::iota(all.begin(), all.end(), 0);
      const IdentityReport ids = check_identities(config, crit, all);
      res = {{"centroid", ids.centroid_residual},
             {"product", ids.vieta_product_residual},
             {"angle", ids.angle_sum_residual}};
      rec.verdict = pass_if(ids.within_tolerance());
      if (!ids.within_tolerance()) rec.note = "identity residual above tolerance";
      break;
    }
    case CampaignKind::Rehr: {
      const CriticalSetXd crit = critical_points(config);
      const RehrResult rr = rehr_search(config, crit, tol);
      res = {{"cycles_checked", double(rr.cycles_checked)}};
      rec.verdict = pass_if(rr.cycle.has_value());
      if (!rr.cycle) rec.note = "counterexample candidate: no admissible polygon; quarantined for review";
      break;
    }
    case CampaignKind::FalsifyCriterion: {
      const CriterionCheck c = evaluate_criterion(config, *spec.criterion, tol);
      res = {{"predicted", double(c.predicted)}, {"decisive", c.decisive ? 1.0 : 0.0}};
      rec.verdict = c.violated ? TrialVerdict::Violation : TrialVerdict::Pass;
      if (c.violated) rec.note = "criterion picks a triangle that holds a critical point";
      break;
    }
  }
}

}  // namespace

TrialRecord run_trial(const CampaignSpec& spec, long index) {
  TrialRecord rec;
  rec.index = index;
  TrialRng rng(spec.seed, static_cast<std::uint64_t>(index));
  try {
    rec.instance = sample_for(spec, index, rng);
    rec.instance_hash = instance_hash(*rec.instance);
    evaluate(spec, *rec.instance, rec);
  } catch (const Error& e) {
    rec.verdict = TrialVerdict::Skipped;
    rec.residuals.clear();
    rec.nonconvergent = e.code() == ErrorCode::NonConvergence;
    rec.note = e.what();
  }
  return rec;
}

CampaignReport run_campaign(const CampaignSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();

  CampaignReport report;
  report.spec = spec;
  report.trials.resize(static_cast<std::size_t>(spec.trials));

  const long workers = std::min<long>(spec.threads > 0 ? spec.threads : default_thread_count(), spec.trials);
  std::atomic<long> next{0};
  auto work = [&] {
    for (long i = next++; i < spec.trials; i = next++) report.trials[static_cast<std::size_t>(i)] = run_trial(spec, i);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& t : report.trials) {
    ++report.trials_run;
    switch (t.verdict) {
      case TrialVerdict::Pass: ++report.passes; break;
      case TrialVerdict::Violation: ++report.violation_count; break;
      case TrialVerdict::Skipped: ++report.skipped; break;
    }
    if (t.boundary_flagged) ++report.boundary_flagged;
    if (t.nonconvergent) ++report.nonconvergent;
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace glx
