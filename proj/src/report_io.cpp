#include "glx/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace glx {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.10g %c %.10gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

json verdict_to_json(const InnerZeroVerdict& v) {
  json sectors = json::array();
  for (const auto& s : v.sectors) {
    sectors.push_back({{"sector", sector_to_json(s.sector)},
                       {"interior_count", s.interior_count},
                       {"boundary_count", s.boundary_count}});
  }
  return {{"zero_index", v.zero_index},
          {"skipped_collinear", v.skipped_collinear},
          {"empty_sector", v.empty_sector ? sector_to_json(*v.empty_sector) : json(nullptr)},
          {"sectors", sectors},
          {"collinear_ray_groups", v.collinear_ray_groups}};
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::InvalidInput, "complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json config_to_json(const ZeroConfigurationXd& config) {
  json out = json::array();
  for (const auto& e : config.entries()) out.push_back({{"z", complex_to_json(e.location)}, {"k", e.multiplicity}});
  return out;
}

ZeroConfigurationXd config_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("zeros")) throw Error(ErrorCode::InvalidInput, "object has no \"zeros\" field");
    list = &j.at("zeros");
  }
  if (!list->is_array()) throw Error(ErrorCode::InvalidInput, "zeros must be a list");
  std::vector<ZeroEntry<double>> entries;
  for (const auto& item : *list) {
    if (!item.is_object() || !item.contains("z")) {
      throw Error(ErrorCode::InvalidInput, "each zero must be an object {\"z\": [re, im], \"k\": k}");
    }
    int k = 1;
    if (item.contains("k")) {
      const json& kj = item.at("k");
      if (!kj.is_number_integer()) throw Error(ErrorCode::InvalidInput, "multiplicity k must be an integer");
      const auto kv = kj.get<long long>();
      if (kv < 1 || kv > kMaxDegree) throw Error(ErrorCode::InvalidInput, "multiplicity k out of range");
      k = static_cast<int>(kv);
    }
    entries.push_back({complex_from_json(item.at("z")), k});
  }
  return ZeroConfigurationXd(std::move(entries));
}

ZeroConfigurationXd parse_zeros(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

PolynomialXd polynomial_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "coefficients must be a non-empty list");
  CVectorXd c(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) c(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  PolynomialXd p(std::move(c));
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "polynomial must have degree >= 1");
  if (p.degree() > kMaxDegree) throw Error(ErrorCode::InvalidInput, "degree exceeds cap");
  return p;
}

json sector_to_json(const Sector& s) {
  return {{"apex", complex_to_json(s.apex)},
          {"lo_angle", s.lo_angle},
          {"hi_angle", s.hi_angle},
          {"width", s.width()},
          {"lo_zero_index", s.lo_zero_index},
          {"hi_zero_index", s.hi_zero_index}};
}

json analysis_to_json(const Analysis& a) {
  json out;
  out["zeros"] = config_to_json(a.config);
  out["degree"] = a.config.degree();

  if (a.classification) {
    out["classification"] = {{"hull_vertex_indices", a.classification->hull_vertex_indices},
                             {"inner_indices", a.classification->inner_indices},
                             {"hull_boundary_indices", a.classification->hull_boundary_indices},
                             {"d", a.classification->d()}};
  } else {
    out["classification"] = nullptr;
    out["classification_note"] = a.classification_note;
  }

  json per_zero = json::array();
  for (const auto& e : a.identities.per_zero) {
    per_zero.push_back({{"zero_index", e.zero_index},
                        {"product_residual", e.product_residual},
                        {"angle_residual", e.angle_residual}});
  }
  out["identities"] = {{"centroid_residual", a.identities.centroid_residual},
                       {"vieta_product_residual", a.identities.vieta_product_residual},
                       {"angle_sum_residual", a.identities.angle_sum_residual},
                       {"per_zero", per_zero},
                       {"within_tolerance", a.identities.within_tolerance()}};

  if (a.theorem1) {
    json tris = json::array();
    for (const auto& t : a.theorem1->triangles) {
      tris.push_back({{"vertices", t.vertices}, {"interior_count", t.interior_count}, {"boundary_count", t.boundary_count}});
    }
    out["theorem1"] = {{"applicable", true},
                       {"triangles", tris},
                       {"empty_triangle_indices", a.theorem1->empty_triangle_indices},
                       {"pass", a.theorem1->pass}};
  } else {
    out["theorem1"] = {{"applicable", false}, {"reason", a.theorem1_note}};
  }

  json t2 = json::array();
  json fans = json::array();
  json empty = json::array();
  for (const auto& v : a.theorem2) {
    t2.push_back(verdict_to_json(v));
    json sectors = json::array();
    for (const auto& s : v.sectors) sectors.push_back(sector_to_json(s.sector));
    fans.push_back({{"apex_index", v.zero_index}, {"sectors", sectors}, {"collinear_ray_groups", v.collinear_ray_groups}});
    if (v.skipped_collinear) continue;
    for (const auto& s : v.sectors) {
      if (s.interior_count == 0) empty.push_back({{"zero_index", v.zero_index}, {"sector", sector_to_json(s.sector)}});
    }
  }
  out["theorem2"] = t2;

  json placements = json::array();
  for (auto c : a.gauss_lucas.placements) placements.push_back(std::string(to_string(c)));
  out["gauss_lucas"] = {{"pass", a.gauss_lucas.pass}, {"placements", placements}};

  if (a.marden) {
    out["marden"] = {{"foci", {complex_to_json(a.marden->focus1), complex_to_json(a.marden->focus2)}},
                     {"focus_residual", a.marden->focus_residual},
                     {"tangency_residual", a.marden->tangency_residual},
                     {"within_tolerance", a.marden->within_tolerance()}};
  } else {
    out["marden"] = nullptr;
  }

  json trivial = json::array();
  for (const auto& t : a.critical.trivial) {
    trivial.push_back({{"z", complex_to_json(t.location)}, {"order", t.order}, {"zero_index", t.zero_index}});
  }
  json nontrivial = json::array();
  for (Eigen::Index j = 0; j < a.critical.nontrivial.size(); ++j) nontrivial.push_back(complex_to_json(a.critical.nontrivial(j)));
  out["critical"] = {{"trivial", trivial},
                     {"nontrivial", nontrivial},
                     {"max_residual", a.critical.max_residual},
                     {"iterations", a.critical.iterations}};

  out["hull"] = a.classification ? json(a.classification->hull_vertex_indices) : json::array();
  out["inner"] = a.classification ? json(a.classification->inner_indices) : json::array();
  out["sector_fans"] = fans;
  out["empty_sectors"] = empty;
  if (a.marden) out["steiner_foci"] = {complex_to_json(a.marden->focus1), complex_to_json(a.marden->focus2)};
  out["all_passed"] = a.all_passed();
  return out;
}

std::string analysis_to_human(const Analysis& a) {
  std::ostringstream os;
  os << "degree " << a.config.degree() << ", " << a.config.size() << " distinct zeros\n";
  for (std::size_t i = 0; i < a.config.size(); ++i) {
    os << "  z" << i << " = " << complex_text(a.config[i].location) << "  (k=" << a.config[i].multiplicity << ")\n";
  }
  os << "critical points\n";
  for (const auto& t : a.critical.trivial) {
    os << "  trivial   " << complex_text(t.location) << "  order " << t.order << "\n";
  }
  for (Eigen::Index j = 0; j < a.critical.nontrivial.size(); ++j) {
    os << "  w" << j << "        " << complex_text(a.critical.nontrivial(j)) << "\n";
  }
  if (a.classification) {
    os << "hull vertices:";
    for (int i : a.classification->hull_vertex_indices) os << ' ' << i;
    os << "\ninner zeros:";
    for (int i : a.classification->inner_indices) os << ' ' << i;
    os << "  (d=" << a.classification->d() << ")\n";
  } else {
    os << "classification: " << a.classification_note << "\n";
  }
  os << "identities: centroid " << fmt("%.3e", a.identities.centroid_residual) << ", product "
     << fmt("%.3e", a.identities.vieta_product_residual) << ", angle "
     << fmt("%.3e", a.identities.angle_sum_residual) << " rad\n";
  if (a.theorem1) {
    os << "theorem 1: " << (a.theorem1->pass ? "PASS" : "FAIL") << "\n";
    for (std::size_t t = 0; t < 3; ++t) {
      const auto& tri = a.theorem1->triangles[t];
      os << "  triangle (" << tri.vertices[0] << ", " << tri.vertices[1] << ", " << tri.vertices[2]
         << ")  interior " << tri.interior_count << "  boundary " << tri.boundary_count
         << (tri.interior_count == 0 ? "  empty" : "") << "\n";
    }
  } else {
    os << "theorem 1: not applicable (" << a.theorem1_note << ")\n";
  }
  for (const auto& v : a.theorem2) {
    os << "theorem 2, inner zero " << v.zero_index << ": "
       << (v.skipped_collinear ? "skipped (collinear rays)" : v.empty_sector ? "empty sector found" : "FAIL") << "\n";
    os << "  " << std::setw(10) << "lo deg" << std::setw(10) << "hi deg" << std::setw(10) << "width"
       << std::setw(10) << "interior" << std::setw(10) << "boundary" << "\n";
    for (const auto& s : v.sectors) {
      os << "  " << std::setw(10) << fmt("%.4f", degrees(s.sector.lo_angle)) << std::setw(10)
         << fmt("%.4f", degrees(s.sector.hi_angle)) << std::setw(10) << fmt("%.4f", degrees(s.sector.width()))
         << std::setw(10) << s.interior_count << std::setw(10) << s.boundary_count << "\n";
    }
  }
  os << "gauss-lucas: " << (a.gauss_lucas.pass ? "PASS" : "FAIL") << "\n";
  if (a.marden) {
    os << "steiner foci: " << complex_text(a.marden->focus1) << ", " << complex_text(a.marden->focus2)
       << "  (focus residual " << fmt("%.3e", a.marden->focus_residual) << ", tangency "
       << fmt("%.3e", a.marden->tangency_residual) << ")\n";
  }
  os << (a.all_passed() ? "all checks passed\n" : "VIOLATION\n");
  return os.str();
}

json root_result_to_json(const RootSolveResult<double>& result) {
  json roots = json::array();
  for (Eigen::Index i = 0; i < result.roots.size(); ++i) roots.push_back(complex_to_json(result.roots(i)));
  return {{"roots", roots},
          {"max_residual", result.max_residual},
          {"iterations", result.iterations},
          {"converged", result.converged}};
}

json campaign_to_json(const CampaignReport& r, bool include_wall_time) {
  json out;
  out["kind"] = std::string(to_string(r.spec.kind));
  out["seed"] = r.spec.seed;
  out["trials"] = r.spec.trials;
  out["n"] = r.spec.n;
  out["inner_count"] = r.spec.inner_count;
  out["criterion"] = r.spec.criterion ? json(std::string(to_string(*r.spec.criterion))) : json(nullptr);
  out["trials_run"] = r.trials_run;
  out["passes"] = r.passes;
  out["violation_count"] = r.violation_count;
  out["skipped"] = r.skipped;
  out["boundary_flagged"] = r.boundary_flagged;
  out["nonconvergent"] = r.nonconvergent;
  const long evaluated = r.trials_run - r.skipped;
  out["pass_rate"] = evaluated > 0 ? double(r.passes) / double(evaluated) : 0.0;

  json maxes = json::object();
  for (const auto& [name, value] : r.max_residuals()) maxes[name] = value;
  out["max_residuals"] = maxes;

  json violations = json::array();
  for (const TrialRecord* t : r.violations()) {
    json res = json::object();
    for (const auto& [name, value] : t->residuals) res[name] = value;
    violations.push_back({{"index", t->index},
                          {"instance_hash", t->instance_hash},
                          {"instance_hash", t->instance_hash},
                    {"note", t->note},
                          {"residuals", res},
                          {"zeros", t->instance ? config_to_json(*t->instance) : json(nullptr)}});
  }
  out["violations"] = violations;

  json skipped = json::array();
  for (const auto& t : r.trials) {
    if (t.verdict == TrialVerdict::Skipped) skipped.push_back({{"index", t.index}, {"note", t.note}});
  }
  out["skipped_trials"] = skipped;
  if (include_wall_time) out["wall_time_s"] = r.wall_time_s;
  return out;
}

std::string campaign_to_csv(const CampaignReport& r) {
  std::vector<std::string> columns;
  for (const auto& [name, value] : r.max_residuals()) columns.push_back(name);
  std::ostringstream os;
  os << "index,verdict,boundary_flagged";
  for (const auto& c : columns) os << ',' << c;
  os << ",instance_hash\n";
  for (const auto& t : r.trials) {
    os << t.index << ',' << to_string(t.verdict) << ',' << (t.boundary_flagged ? 1 : 0);
    for (const auto& c : columns) {
      os << ',';
      for (const auto& [name, value] : t.residuals) {
        if (name == c) os << fmt("%.17g", value);
      }
    }
    os << ',' << t.instance_hash << '\n';
  }
  return os.str();
}

std::string campaign_to_human(const CampaignReport& r) {
  std::ostringstream os;
  os << to_string(r.spec.kind) << " campaign, seed " << r.spec.seed << "\n";
  os << "  trials run        " << r.trials_run << "\n";
  os << "  passes            " << r.passes << "\n";
  os << "  violations        " << r.violation_count << "\n";
  os << "  skipped           " << r.skipped << "\n";
  os << "  boundary flagged  " << r.boundary_flagged << "\n";
  for (const auto& [name, value] : r.max_residuals()) os << "  max " << std::left << std::setw(14) << name << fmt("%.3e", value) << "\n";
  for (const TrialRecord* t : r.violations()) os << "  violation at trial " << t->index << ": " << t->note << "\n";
  return os.str();
}

json falsify_hit_to_json(const FalsifyHit& hit, Criterion criterion, std::uint64_t seed) {
  json tris = json::array();
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& tri = hit.check.verdict.triangles[t];
    tris.push_back({{"vertices", tri.vertices},
                    {"interior_count", tri.interior_count},
                    {"boundary_count", tri.boundary_count},
                    {"score", hit.check.scores[t]}});
  }
  return {{"criterion", std::string(to_string(criterion))},
          {"seed", seed},
          {"found", true},
          {"trial_index", hit.trial_index},
          {"predicted_triangle", hit.check.predicted},
          {"empty_triangle_indices", hit.check.verdict.empty_triangle_indices},
          {"triangles", tris},
          {"zeros", config_to_json(hit.config)}};
}

std::vector<std::filesystem::path> write_replay_files(const CampaignReport& report, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  const auto violations = report.violations();
  if (violations.empty()) return written;
  std::filesystem::create_directories(dir);
  for (const TrialRecord* t : violations) {
    if (!t->instance) continue;
    const std::string kind(to_string(report.spec.kind));
    const auto path = dir / (kind + "_" + std::to_string(report.spec.seed) + "_" + std::to_string(t->index) + "_" +
                             t->instance_hash + ".json");
    const json j = {{"kind", kind},
                    {"seed", report.spec.seed},
                    {"trial_index", t->index},
                    {"instance_hash", t->instance_hash},
                    {"note", t->note},
                    {"zeros", config_to_json(*t->instance)}};
    std::ofstream(path) << j.dump(2) << '\n';
    written.push_back(path);
  }
  return written;
}

}  // namespace glx
