#ifndef SCENERY_WALK_HPP
#define SCENERY_WALK_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "scenery/errors.hpp"
#include "scenery/group.hpp"
#include "scenery/representation.hpp"
#include "scenery/scenery.hpp"

namespace scenery {

// Law of a single step Z_t. Validated on construction: length |G|,
// non-negative, sums to 1 within 1e-12.
class StepDistribution {
 public:
  StepDistribution(const FiniteGroup& g, std::vector<double> probs);

  static StepDistribution uniform(const FiniteGroup& g);
  static StepDistribution point_mass(const FiniteGroup& g, Element x);
  // Normalized squared standard normals from a seeded generator.
  static StepDistribution random(const FiniteGroup& g, std::uint64_t seed);

  std::span<const double> probs() const { return probs_; }
  double operator()(Element x) const { return probs_[x]; }
  int order() const { return static_cast<int>(probs_.size()); }

 private:
  std::vector<double> probs_;
};

// Seeded generator shared by everything random in the library. The engine is
// std::mt19937_64; the conversions to doubles are spelled out here so that
// results do not depend on the standard library's distribution classes.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform();  // [0, 1) with 53 random bits
  double normal();   // Box-Muller

 private:
  std::mt19937_64 engine_;
};

// b_f(l) = (1/|G|) sum_k sum_x f(k) gamma^{*l}(x) f(x k).
double temporal_autocorrelation_direct(const FiniteGroup& g, const Scenery& f,
                                       const StepDistribution& gamma, unsigned l);

// b_f(l) = (1/|G|^2) sum_rho d_rho Tr(gammahat(rho)^l hhat(rho)), h(s) = a_f(s^-1).
double temporal_autocorrelation_spectral(const FiniteGroup& g, const IrrepSet& irreps,
                                         const Scenery& f, const StepDistribution& gamma,
                                         unsigned l);

// B_f(l_1..l_n) = (1/|G|) sum_x A_f(x) gamma^{*l_1}(x_1) ... gamma^{*l_n}(x_n).
double temporal_multispectrum_direct(const FiniteGroup& g, const Scenery& f,
                                     const StepDistribution& gamma,
                                     std::span<const unsigned> lags,
                                     std::size_t max_entries = kDefaultMaxEntries);

// Same value as (1/|G|^{n+1}) sum over irrep tuples of
// (prod d) Tr((gammahat^l_1 (x) ... (x) gammahat^l_n) Hhat_n), H_n(x) = A_f(x^-1).
double temporal_multispectrum_spectral(const FiniteGroup& g, const IrrepSet& irreps,
                                       const Scenery& f, const StepDistribution& gamma,
                                       std::span<const unsigned> lags,
                                       std::size_t max_entries = kDefaultMaxEntries);

// Exact law of (f(v(1)), ..., f(v(T))) with v(1) uniform. The pattern with
// bit b_t at time t has index sum_t b_t 2^(T-t), so the string "b_1...b_T"
// read as binary is the index.
struct ObservationDistribution {
  int horizon = 0;
  std::vector<double> probs;

  double pattern(std::string_view bits) const;
  // P(observation = 1 at every listed time); times are 1-based.
  double all_ones(std::span<const int> times) const;
  // Law of the first t observations.
  ObservationDistribution truncate(int t) const;
};

ObservationDistribution observation_distribution(const FiniteGroup& g, const Scenery& f,
                                                 const StepDistribution& gamma, int horizon,
                                                 std::size_t max_entries = kDefaultMaxEntries);

// Probability of all ones at the given 1-based times when the walk starts
// from the uniform law at time 1. Runs the same forward recursion without
// enumerating patterns.
double all_ones_probability(const FiniteGroup& g, const Scenery& f,
                            const StepDistribution& gamma, std::span<const int> times);

struct DistinguishVerdict {
  bool distinguished = false;
  int horizon = 0;  // first differing horizon, or the tested bound
  int order_bound = 0;
  int lag_bound = 0;
  double max_pattern_difference = 0.0;
  // moments_equal_by_order[n] compares B at order n over lags in
  // [1, lag_bound]^n; index 0 compares the support sizes.
  std::vector<bool> moments_equal_by_order;
  bool moments_equal = true;
};

inline constexpr double kPatternTol = 1e-12;
inline constexpr double kMomentTol = 1e-10;

// Compares the observation laws up to `horizon` and the temporal multispectra
// up to `order_bound` with lags in [1, lag_bound]. lag_bound <= 0 means |G|.
DistinguishVerdict distinguishability_oracle(const FiniteGroup& g, const Scenery& f1,
                                             const Scenery& f2,
                                             const StepDistribution& gamma, int horizon,
                                             int order_bound, int lag_bound = 0,
                                             std::size_t max_entries = kDefaultMaxEntries);

// One run of the walk: v(1) uniform, v(t+1) = Z_t v(t), returning f(v(t)).
std::vector<std::uint8_t> sample_trajectory(const FiniteGroup& g, const Scenery& f,
                                            const StepDistribution& gamma, int horizon,
                                            std::uint64_t seed);

// Same walk, continuing from an existing generator.
std::vector<std::uint8_t> sample_trajectory(const FiniteGroup& g, const Scenery& f,
                                            const StepDistribution& gamma, int horizon,
                                            SeededRng& rng);

}  // namespace scenery

#endif  // SCENERY_WALK_HPP
