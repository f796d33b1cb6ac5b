#include "glx/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "glx/conjecture_lab.hpp"
#include "glx/report_io.hpp"

namespace glx {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NonConvergence: return kExitNonConvergence;
    case ErrorCode::BudgetExhausted: return kExitViolation;
    default: return kExitInvalidInput;
  }
}

struct CampaignFlags {
  long trials = 100;
  std::uint64_t seed = 0;
  int n = -1;
  int inner = -1;
  int threads = 0;
  double tolerance = kGeoEps;
  std::string format = "json";
  std::string replay_dir;
};

void add_campaign_flags(CLI::App* sub, CampaignFlags& f) {
  sub->add_option("--trials", f.trials, "number of trials")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "campaign seed");
  sub->add_option("--threads", f.threads, "worker threads (default: GLX_THREADS or all cores)")->check(CLI::NonNegativeNumber);
  sub->add_option("--tolerance", f.tolerance, "geometric boundary band")->check(CLI::PositiveNumber);
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv", "human"}));
  sub->add_option("--replay-dir", f.replay_dir, "write one replay file per violation here");
}

int emit_campaign(const CampaignReport& report, const CampaignFlags& f, std::ostream& out, std::ostream& err) {
  if (f.format == "csv") {
    out << campaign_to_csv(report);
  } else if (f.format == "human") {
    out << campaign_to_human(report);
  } else {
    out << campaign_to_json(report, false).dump(2) << '\n';
  }
  err << "wall time " << report.wall_time_s << " s\n";
  if (!f.replay_dir.empty()) {
    for (const auto& p : write_replay_files(report, f.replay_dir)) err << "replay file " << p.string() << '\n';
  }
  if (report.violation_count > 0) return kExitViolation;
  if (report.nonconvergent > 0) return kExitNonConvergence;
  return kExitOk;
}

CampaignSpec spec_from(const CampaignFlags& f, CampaignKind kind) {
  CampaignSpec spec;
  spec.kind = kind;
  spec.trials = f.trials;
  spec.seed = f.seed;
  spec.threads = f.threads;
  spec.tolerances.geo = f.tolerance;
  return spec;
}

}  // namespace

std::string read_inline_or_file(std::string_view arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (arg[first] == '[' || arg[first] == '{')) return std::string(arg);
  std::ifstream in{std::string(arg)};
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read file '" + std::string(arg) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical points of complex polynomials: theorem checks and conjecture search", "glx"};
  app.require_subcommand(1);

  std::string zeros_arg;
  double analyze_tol = kGeoEps;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "full verdict report for one configuration");
  analyze->add_option("--zeros", zeros_arg, "zeros as JSON or a path to a JSON file")->required();
  analyze->add_option("--tolerance", analyze_tol, "geometric boundary band")->check(CLI::PositiveNumber);
  analyze->add_option("--format", analyze_format, "output format")->check(CLI::IsMember({"json", "human"}));

  std::string which;
  CampaignFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "seeded verification campaign");
  verify->add_option("theorem", which, "t1 | t2 | marden | gauss-lucas | identities")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "marden", "gauss-lucas", "identities"}));
  add_campaign_flags(verify, verify_flags);
  verify->add_option("--n", verify_flags.n, "zeros per configuration (t2)");
  verify->add_option("--inner", verify_flags.inner, "inner zeros per configuration (t2)");

  CampaignFlags rehr_flags;
  auto* rehr = app.add_subcommand("rehr", "search polygons through all zeros that hold every critical point");
  rehr->add_option("--n", rehr_flags.n, "zeros per configuration")->required();
  rehr->add_option("--inner", rehr_flags.inner, "inner zeros for n >= 5 (default n - 3)");
  add_campaign_flags(rehr, rehr_flags);

  std::string criterion_name;
  long budget = 100000;
  std::uint64_t falsify_seed = 0;
  std::string falsify_format = "json";
  auto* falsify = app.add_subcommand("falsify", "look for a counterexample to an empty-triangle criterion");
  falsify->add_option("--criterion", criterion_name, "largest-angle | smallest-area")
      ->required()
      ->check(CLI::IsMember({"largest-angle", "smallest-area"}));
  falsify->add_option("--budget", budget, "maximum number of sampled configurations")->check(CLI::NonNegativeNumber);
  falsify->add_option("--seed", falsify_seed, "search seed");
  falsify->add_option("--format", falsify_format, "output format")->check(CLI::IsMember({"json", "human"}));

  std::string poly_arg;
  auto* roots = app.add_subcommand("roots", "all roots of a polynomial");
  roots->add_option("--poly", poly_arg, "ascending coefficients [[re, im], ...] as JSON or a file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*analyze) {
      const ZeroConfigurationXd config = parse_zeros(read_inline_or_file(zeros_arg));
      Tolerances tol;
      tol.geo = analyze_tol;
      const Analysis a = glx::analyze(config, tol);
      if (analyze_format == "human") {
        out << analysis_to_human(a);
      } else {
        out << analysis_to_json(a).dump(2) << '\n';
      }
      return a.all_passed() ? kExitOk : kExitViolation;
    }

    if (*verify) {
      CampaignKind kind = CampaignKind::Theorem1;
      if (which == "t2") kind = CampaignKind::Theorem2;
      if (which == "marden") kind = CampaignKind::Marden;
      if (which == "gauss-lucas") kind = CampaignKind::GaussLucas;
      if (which == "identities") kind = CampaignKind::Identities;
      CampaignSpec spec = spec_from(verify_flags, kind);
      if (kind == CampaignKind::Theorem2) {
        spec.n = verify_flags.n > 0 ? verify_flags.n : 5;
        spec.inner_count = verify_flags.inner > 0 ? verify_flags.inner : 1;
      }
      return emit_campaign(run_campaign(spec), verify_flags, out, err);
    }

    if (*rehr) {
      CampaignSpec spec = spec_from(rehr_flags, CampaignKind::Rehr);
      spec.n = rehr_flags.n;
      spec.inner_count = rehr_flags.inner > 0 ? rehr_flags.inner : std::max(1, rehr_flags.n - 3);
      return emit_campaign(run_campaign(spec), rehr_flags, out, err);
    }

    if (*falsify) {
      const Criterion criterion = *parse_criterion(criterion_name);
      const FalsifyHit hit = falsify_criterion(criterion, budget, falsify_seed);
      if (falsify_format == "human") {
        out << "counterexample to " << to_string(criterion) << " at trial " << hit.trial_index << "\n"
            << "  predicted triangle " << hit.check.predicted << " holds "
            << hit.check.verdict.triangles[static_cast<std::size_t>(hit.check.predicted)].interior_count
            << " critical point(s) in its interior\n"
            << "  zeros " << config_to_json(hit.config).dump() << "\n";
      } else {
        out << falsify_hit_to_json(hit, criterion, falsify_seed).dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*roots) {
      json j;
      try {
        j = json::parse(read_inline_or_file(poly_arg));
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
      }
      const auto result = solve(polynomial_from_json(j));
      out << root_result_to_json(result).dump(2) << '\n';
      if (!result.converged) {
        err << "root solve did not reach the residual bound\n";
        return kExitNonConvergence;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitInvalidInput;
}

}  // namespace glx
