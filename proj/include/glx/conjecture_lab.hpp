#pragma once

// Seeded campaigns over random zero configurations: theorem verification at
// scale, Rehr polygon search and falsification of candidate criteria for
// which triangle of a concave quadrilateral is empty.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glx/rng.hpp"
#include "glx/theorem_engine.hpp"

namespace glx {

inline constexpr int kMaxRejections = 10000;
inline constexpr int kMaxRehrZeros = 10;

// Sampler constants.
inline constexpr double kQuadMinArea = 0.05;
inline constexpr double kQuadMargin = 0.02;
inline constexpr double kAnnulusInner = 0.8;
inline constexpr double kAnnulusOuter = 1.2;
inline constexpr double kMinAngularGap = 0.15;
inline constexpr double kMinTripleHeight = 1e-4;
inline constexpr double kMixedSeparation = 0.1;
inline constexpr int kInnerDrawsPerHull = 1000;

/// Three hull points uniform on the unit disk (area >= 0.05) and an inner
/// point from uniform barycentric weights kept 0.02 away from every edge and
/// vertex. The inner zero is entry 0.
ZeroConfigurationXd sample_concave_quadrilateral(TrialRng& rng);

/// n - inner_count hull points on the annulus 0.8 <= r <= 1.2 in convex
/// position, then inner_count points uniform inside the hull. Inner zeros
/// come first. Throws InfeasibleSpec for impossible requests or after
/// kMaxRejections failed draws.
ZeroConfigurationXd sample_general(TrialRng& rng, int n, int inner_count);

/// Random distinct zeros in the unit disk with multiplicities 1..3, total
/// degree in [2, max_degree], pairwise separation >= 0.1.
ZeroConfigurationXd sample_mixed(TrialRng& rng, int max_degree = 12);

/// Triangle with side lengths in [0.1, 10].
ZeroConfigurationXd sample_triangle(TrialRng& rng);

/// Inner real zero x, real hull zero 1 and a conjugate pair c, conj(c).
ZeroConfigurationXd sample_conjugate_quadrilateral(TrialRng& rng);

// --- Rehr polygons --------------------------------------------------------

/// Simple polygon through every zero whose closed region holds every
/// nontrivial critical point.
bool is_rehr_polygon(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                     const std::vector<int>& cycle, const Tolerances& tol = {});

struct RehrResult {
  std::optional<std::vector<int>> cycle;
  long cycles_checked = 0;
};

/// Undirected Hamiltonian cycles starting at zero 0 in lexicographic order;
/// the first admissible one wins.
RehrResult rehr_search(const ZeroConfigurationXd& config, const CriticalSetXd& crit,
                       const Tolerances& tol = {});
std::optional<std::vector<int>> rehr_search(const ZeroConfigurationXd& config, const Tolerances& tol = {});

// --- Empty-triangle criteria ----------------------------------------------

enum class Criterion { LargestAngle, SmallestArea };

std::string_view to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view name);

struct CriterionCheck {
  TheoremOneVerdict verdict;
  std::array<double, 3> scores{};  // angle at the inner zero, or area
  int predicted = -1;              // triangle index the criterion picks
  bool decisive = false;           // prediction is unique
  bool violated = false;           // decisive and the predicted triangle is not empty
};

CriterionCheck evaluate_criterion(const ZeroConfigurationXd& config, Criterion criterion,
                                  const Tolerances& tol = {});

struct FalsifyHit {
  ZeroConfigurationXd config;
  long trial_index;
  CriterionCheck check;
};

/// Searches concave quadrilaterals (three in four from the conjugate family)
/// for a configuration where the criterion picks a non-empty triangle.
/// Throws BudgetExhausted when none is found in budget trials.
FalsifyHit falsify_criterion(Criterion criterion, long budget, std::uint64_t seed,
                             const Tolerances& tol = {});

// --- Campaigns ------------------------------------------------------------

enum class CampaignKind { Theorem1, Theorem2, Marden, GaussLucas, Identities, Rehr, FalsifyCriterion };

std::string_view to_string(CampaignKind kind);

struct CampaignSpec {
  CampaignKind kind = CampaignKind::Theorem1;
  long trials = 1;
  std::uint64_t seed = 0;
  int n = 4;
  int inner_count = 1;
  std::optional<Criterion> criterion;
  Tolerances tolerances;
  int threads = 0;  // 0: GLX_THREADS or hardware concurrency
};

enum class TrialVerdict { Pass, Violation, Skipped };

std::string_view to_string(TrialVerdict v);

struct TrialRecord {
  long index = 0;
  TrialVerdict verdict = TrialVerdict::Skipped;
  bool boundary_flagged = false;
  bool nonconvergent = false;
  std::vector<std::pair<std::string, double>> residuals;
  std::string instance_hash;
  std::optional<ZeroConfigurationXd> instance;
  std::string note;
};

struct CampaignReport {
  CampaignSpec spec;
  long trials_run = 0;
  long passes = 0;
  long violation_count = 0;
  long skipped = 0;
  long boundary_flagged = 0;
  long nonconvergent = 0;
  std::vector<TrialRecord> trials;  // ordered by index
  double wall_time_s = 0;

  std::vector<const TrialRecord*> violations() const;
  /// Max of each residual column over all non-skipped trials.
  std::vector<std::pair<std::string, double>> max_residuals() const;
};

/// Worker count from GLX_THREADS, else the hardware concurrency.
int default_thread_count();

std::string instance_hash(const ZeroConfigurationXd& config);

/// Runs one trial in isolation; identical to the campaign's record at index.
TrialRecord run_trial(const CampaignSpec& spec, long index);

CampaignReport run_campaign(const CampaignSpec& spec);

}  // namespace glx
