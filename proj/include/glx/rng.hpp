#pragma once

#include <cstdint>
#include <random>

namespace glx {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for one trial of a campaign; depends only on (seed, index) so trials
/// can run in any order on any thread.
inline constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

/// mt19937_64 with bit-exact conversions to doubles and integers (the
/// standard distributions are implementation-defined).
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}
  TrialRng(std::uint64_t seed, std::uint64_t index) : engine_(trial_seed(seed, index)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace glx
