#include "scenery/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scenery/fourier.hpp"

namespace scenery {

StepDistribution::StepDistribution(const FiniteGroup& g, std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (static_cast<int>(probs_.size()) != g.order())
    throw ValidationError("step distribution has " + std::to_string(probs_.size()) +
                          " entries, group " + g.name() + " has order " +
                          std::to_string(g.order()));
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw ValidationError("step distribution has a negative or non-finite entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("step distribution sums to " + std::to_string(sum));
}

StepDistribution StepDistribution::uniform(const FiniteGroup& g) {
  return StepDistribution(g, std::vector<double>(g.order(), 1.0 / g.order()));
}

StepDistribution StepDistribution::point_mass(const FiniteGroup& g, Element x) {
  if (x < 0 || x >= g.order())
    throw ValidationError("point mass at element " + std::to_string(x) +
                          " outside group " + g.name());
  std::vector<double> p(g.order(), 0.0);
  p[x] = 1.0;
  return StepDistribution(g, std::move(p));
}

StepDistribution StepDistribution::random(const FiniteGroup& g, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<double> p(g.order());
  double sum = 0.0;
  for (auto& v : p) {
    const double z = rng.normal();
    v = z * z;
    sum += v;
  }
  for (auto& v : p) v /= sum;
  return StepDistribution(g, std::move(p));
}

double SeededRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SeededRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

void require_group(const FiniteGroup& g, const Scenery& f, const StepDistribution& gamma) {
  if (f.order() != g.order() || gamma.order() != g.order())
    throw ValidationError("scenery or step distribution does not match group " + g.name());
}

// One step of the walk: out(y) = sum_x mass(x) gamma(y x^-1).
std::vector<double> step(const FiniteGroup& g, const StepDistribution& gamma,
                         const std::vector<double>& mass) {
  std::vector<double> out(g.order(), 0.0);
  for (int x = 0; x < g.order(); ++x) {
    if (mass[x] == 0.0) continue;
    for (int s = 0; s < g.order(); ++s)
      if (gamma(s) != 0.0) out[g.mul(s, x)] += mass[x] * gamma(s);
  }
  return out;
}

// (1/|G|) sum_x A(x) prod_i powers[lags[i]-1](x_i).
double contract(const FiniteGroup& g, const IntTensor& a,
                const std::vector<RealGFunction>& powers, std::span<const unsigned> lags) {
  double acc = 0.0;
  std::size_t flat = 0;
  const std::size_t n = lags.size();
  for_each_tuple(static_cast<std::size_t>(g.order()), n,
                 [&](const std::vector<std::size_t>& x) {
                   const std::int64_t av = a.values[flat++];
                   if (av == 0) return;
                   double w = static_cast<double>(av);
                   for (std::size_t i = 0; i < n; ++i) w *= powers[lags[i] - 1][x[i]];
                   acc += w;
                 });
  return acc / g.order();
}

}  // namespace

double temporal_autocorrelation_direct(const FiniteGroup& g, const Scenery& f,
                                       const StepDistribution& gamma, unsigned l) {
  require_group(g, f, gamma);
  const RealGFunction gl = convolution_power(g, gamma.probs(), l);
  double acc = 0.0;
  for (int k = 0; k < g.order(); ++k) {
    if (!f(k)) continue;
    for (int x = 0; x < g.order(); ++x) acc += gl[x] * f(g.mul(x, k));
  }
  return acc / g.order();
}

double temporal_autocorrelation_spectral(const FiniteGroup& g, const IrrepSet& irreps,
                                         const Scenery& f, const StepDistribution& gamma,
                                         unsigned l) {
  require_group(g, f, gamma);
  const IntTensor h = flip_arguments(g, spatial_autocorrelation(g, f));
  const std::vector<double> h_real(h.values.begin(), h.values.end());
  Complex acc{};
  for (const auto& rho : irreps.reps) {
    const ComplexMatrix gamma_hat = fourier_transform(gamma.probs(), rho);
    const ComplexMatrix h_hat = fourier_transform(h_real, rho);
    acc += static_cast<double>(rho.degree) *
           trace_of_product(mat_power(gamma_hat, l), h_hat);
  }
  const double n = g.order();
  return acc.real() / (n * n);
}

double temporal_multispectrum_direct(const FiniteGroup& g, const Scenery& f,
                                     const StepDistribution& gamma,
                                     std::span<const unsigned> lags,
                                     std::size_t max_entries) {
  require_group(g, f, gamma);
  const int n = static_cast<int>(lags.size());
  if (n < 1) throw std::invalid_argument("temporal multispectrum needs at least one lag");
  for (unsigned l : lags)
    if (l < 1) throw std::invalid_argument("lags must be >= 1");
  const IntTensor a = multispectrum(g, f, n, max_entries);
  const unsigned max_lag = *std::max_element(lags.begin(), lags.end());
  return contract(g, a, convolution_powers(g, gamma.probs(), max_lag), lags);
}

double temporal_multispectrum_spectral(const FiniteGroup& g, const IrrepSet& irreps,
                                       const Scenery& f, const StepDistribution& gamma,
                                       std::span<const unsigned> lags,
                                       std::size_t max_entries) {
  require_group(g, f, gamma);
  const int n = static_cast<int>(lags.size());
  if (n < 1) throw std::invalid_argument("temporal multispectrum needs at least one lag");
  const ComplexTensor h = to_complex(flip_arguments(g, multispectrum(g, f, n, max_entries)));

  // gammahat(rho_r)^l for each lag position i.
  std::vector<std::vector<ComplexMatrix>> powered(n);
  for (int i = 0; i < n; ++i)
    for (const auto& rho : irreps.reps)
      powered[i].push_back(mat_power(fourier_transform(gamma.probs(), rho), lags[i]));

  Complex acc{};
  for_each_tuple(irreps.size(), static_cast<std::size_t>(n),
                 [&](const std::vector<std::size_t>& r) {
                   double dprod = 1.0;
                   ComplexMatrix p = powered[0][r[0]];
                   dprod *= static_cast<double>(irreps[r[0]].degree);
                   for (int i = 1; i < n; ++i) {
                     p = kron(p, powered[i][r[i]]);
                     dprod *= static_cast<double>(irreps[r[i]].degree);
                   }
                   const ComplexMatrix h_hat = tensor_fourier_transform(irreps, n, h.values, r);
                   acc += dprod * trace_of_product(p, h_hat);
                 });
  return acc.real() / std::pow(static_cast<double>(g.order()), n + 1);
}

double ObservationDistribution::pattern(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != horizon)
    throw ValidationError("pattern length does not match horizon");
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("pattern must be a 0/1 string");
    idx = idx * 2 + static_cast<std::size_t>(c - '0');
  }
  return probs[idx];
}

double ObservationDistribution::all_ones(std::span<const int> times) const {
  std::size_t need = 0;
  for (int t : times) {
    if (t < 1 || t > horizon) throw ValidationError("time outside observation horizon");
    need |= std::size_t{1} << (horizon - t);
  }
  double s = 0.0;
  for (std::size_t idx = 0; idx < probs.size(); ++idx)
    if ((idx & need) == need) s += probs[idx];
  return s;
}

ObservationDistribution ObservationDistribution::truncate(int t) const {
  if (t < 1 || t > horizon) throw ValidationError("truncation outside horizon");
  ObservationDistribution out{t, std::vector<double>(std::size_t{1} << t, 0.0)};
  const int drop = horizon - t;
  for (std::size_t idx = 0; idx < probs.size(); ++idx) out.probs[idx >> drop] += probs[idx];
  return out;
}

ObservationDistribution observation_distribution(const FiniteGroup& g, const Scenery& f,
                                                 const StepDistribution& gamma, int horizon,
                                                 std::size_t max_entries) {
  require_group(g, f, gamma);
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const std::size_t patterns = checked_power(2, static_cast<std::size_t>(horizon),
                                             max_entries / g.order(), "observation patterns");
  // masses[p] is the sub-probability over positions at the current time
  // jointly with observed prefix p.
  std::vector<std::vector<double>> masses(2, std::vector<double>(g.order(), 0.0));
  for (int x = 0; x < g.order(); ++x) masses[f(x)][x] = 1.0 / g.order();
  for (int t = 2; t <= horizon; ++t) {
    std::vector<std::vector<double>> next(masses.size() * 2);
    for (std::size_t p = 0; p < masses.size(); ++p) {
      const std::vector<double> moved = step(g, gamma, masses[p]);
      next[2 * p].assign(g.order(), 0.0);
      next[2 * p + 1].assign(g.order(), 0.0);
      for (int y = 0; y < g.order(); ++y) next[2 * p + f(y)][y] = moved[y];
    }
    masses = std::move(next);
  }
  ObservationDistribution out{horizon, std::vector<double>(patterns, 0.0)};
  for (std::size_t p = 0; p < patterns; ++p)
    for (double m : masses[p]) out.probs[p] += m;
  return out;
}

double all_ones_probability(const FiniteGroup& g, const Scenery& f,
                            const StepDistribution& gamma, std::span<const int> times) {
  require_group(g, f, gamma);
  std::vector<int> sorted(times.begin(), times.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return 1.0;
  if (sorted.front() < 1) throw ValidationError("times are 1-based");
  std::vector<double> mass(g.order(), 1.0 / g.order());
  int t = 1;
  for (int target : sorted) {
    for (; t < target; ++t) mass = step(g, gamma, mass);
    for (int x = 0; x < g.order(); ++x)
      if (!f(x)) mass[x] = 0.0;
  }
  double s = 0.0;
  for (double m : mass) s += m;
  return s;
}

DistinguishVerdict distinguishability_oracle(const FiniteGroup& g, const Scenery& f1,
                                             const Scenery& f2,
                                             const StepDistribution& gamma, int horizon,
                                             int order_bound, int lag_bound,
                                             std::size_t max_entries) {
  require_group(g, f1, gamma);
  require_group(g, f2, gamma);
  if (order_bound < 0) throw std::invalid_argument("order bound must be >= 0");
  DistinguishVerdict v;
  v.order_bound = order_bound;
  v.lag_bound = lag_bound > 0 ? lag_bound : g.order();

  const ObservationDistribution d1 = observation_distribution(g, f1, gamma, horizon, max_entries);
  const ObservationDistribution d2 = observation_distribution(g, f2, gamma, horizon, max_entries);
  v.horizon = horizon;
  for (int t = 1; t <= horizon; ++t) {
    const auto a = d1.truncate(t), b = d2.truncate(t);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i)
      diff = std::max(diff, std::abs(a.probs[i] - b.probs[i]));
    v.max_pattern_difference = diff;
    if (diff > kPatternTol) {
      v.distinguished = true;
      v.horizon = t;
      break;
    }
  }

  v.moments_equal_by_order.push_back(f1.support_size() == f2.support_size());
  const auto powers = convolution_powers(g, gamma.probs(), static_cast<unsigned>(v.lag_bound));
  for (int n = 1; n <= order_bound; ++n) {
    checked_power(static_cast<std::size_t>(v.lag_bound), static_cast<std::size_t>(n),
                  max_entries, "lag tuples");
    const IntTensor a1 = multispectrum(g, f1, n, max_entries);
    const IntTensor a2 = multispectrum(g, f2, n, max_entries);
    bool equal = true;
    std::vector<unsigned> lags(n);
    for_each_tuple(static_cast<std::size_t>(v.lag_bound), static_cast<std::size_t>(n),
                   [&](const std::vector<std::size_t>& l) {
                     if (!equal) return;
                     for (int i = 0; i < n; ++i) lags[i] = static_cast<unsigned>(l[i] + 1);
                     const double b1 = contract(g, a1, powers, lags);
                     const double b2 = contract(g, a2, powers, lags);
                     if (std::abs(b1 - b2) > kMomentTol) equal = false;
                   });
    v.moments_equal_by_order.push_back(equal);
  }
  v.moments_equal = std::all_of(v.moments_equal_by_order.begin(),
                                v.moments_equal_by_order.end(), [](bool b) { return b; });
  return v;
}

std::vector<std::uint8_t> sample_trajectory(const FiniteGroup& g, const Scenery& f,
                                            const StepDistribution& gamma, int horizon,
                                            std::uint64_t seed) {
  SeededRng rng(seed);
  return sample_trajectory(g, f, gamma, horizon, rng);
}

std::vector<std::uint8_t> sample_trajectory(const FiniteGroup& g, const Scenery& f,
                                            const StepDistribution& gamma, int horizon,
                                            SeededRng& rng) {
  require_group(g, f, gamma);
  auto draw_step = [&] {
    const double u = rng.uniform();
    double cum = 0.0;
    int last_positive = 0;
    for (int s = 0; s < g.order(); ++s) {
      if (gamma(s) <= 0.0) continue;
      last_positive = s;
      cum += gamma(s);
      if (u < cum) return s;
    }
    return last_positive;
  };
  std::vector<std::uint8_t> out;
  out.reserve(horizon);
  Element v = std::min(static_cast<int>(rng.uniform() * g.order()), g.order() - 1);
  for (int t = 1; t <= horizon; ++t) {
    out.push_back(static_cast<std::uint8_t>(f(v)));
    if (t < horizon) v = g.mul(draw_step(), v);
  }
  return out;
}

}  // namespace scenery
