#include "scenery/condition.hpp"

#include <algorithm>
#include <limits>

#include "scenery/fourier.hpp"

namespace scenery {

std::vector<unsigned> CoefficientMatrix::lags(std::size_t row) const {
  std::vector<unsigned> l(n);
  for (int i = n; i-- > 0;) {
    l[i] = static_cast<unsigned>(row % lag_bound) + 1;
    row /= lag_bound;
  }
  return l;
}

CoefficientMatrix build_coefficient_matrix(const FiniteGroup& g, const IrrepSet& irreps,
                                           const StepDistribution& gamma, int n,
                                           int lag_bound, std::size_t max_entries) {
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
  if (lag_bound < 1) throw std::invalid_argument("lag bound must be >= 1");
  if (gamma.order() != g.order())
    throw ValidationError("step distribution does not match group " + g.name());
  const auto order = static_cast<std::size_t>(g.order());
  const std::size_t rows = checked_power(static_cast<std::size_t>(lag_bound),
                                         static_cast<std::size_t>(n), max_entries,
                                         "coefficient matrix rows");
  const std::size_t cols =
      checked_power(order, static_cast<std::size_t>(n), max_entries, "coefficient matrix columns");
  if (cols != 0 && rows > max_entries / cols)
    throw CapExceeded("coefficient matrix: " + std::to_string(rows) + " x " +
                      std::to_string(cols) + " exceeds cap of " +
                      std::to_string(max_entries) + " entries");

  CoefficientMatrix out{g.order(), n, lag_bound, ComplexMatrix(rows, cols)};

  // gammahat(rho)^l for every irrep and every l in [1, L].
  std::vector<std::vector<ComplexMatrix>> powers(irreps.size());
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const ComplexMatrix hat = fourier_transform(gamma.probs(), irreps[r]);
    ComplexMatrix p = hat;
    for (int l = 1; l <= lag_bound; ++l) {
      powers[r].push_back(p);
      p = matmul(p, hat);
    }
  }

  for_each_tuple(irreps.size(), static_cast<std::size_t>(n),
                 [&](const std::vector<std::size_t>& rt) {
                   double dprod = 1.0;
                   for (auto r : rt) dprod *= static_cast<double>(irreps[r].degree);

                   // (x) rho_i(x_i) for every column.
                   std::vector<ComplexMatrix> images;
                   images.reserve(cols);
                   for_each_tuple(order, static_cast<std::size_t>(n),
                                  [&](const std::vector<std::size_t>& x) {
                                    ComplexMatrix m = irreps[rt[0]].matrices[x[0]];
                                    for (int i = 1; i < n; ++i)
                                      m = kron(m, irreps[rt[i]].matrices[x[i]]);
                                    images.push_back(std::move(m));
                                  });

                   std::size_t row = 0;
                   for_each_tuple(static_cast<std::size_t>(lag_bound),
                                  static_cast<std::size_t>(n),
                                  [&](const std::vector<std::size_t>& l) {
                                    ComplexMatrix p = powers[rt[0]][l[0]];
                                    for (int i = 1; i < n; ++i)
                                      p = kron(p, powers[rt[i]][l[i]]);
                                    for (std::size_t c = 0; c < cols; ++c)
                                      out.matrix(row, c) += dprod * trace_of_product(p, images[c]);
                                    ++row;
                                  });
                 });
  return out;
}

std::uint64_t theoretical_rank_bound(const IrrepSet& irreps, int n) {
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
  std::uint64_t bound = 0;
  for_each_tuple(irreps.size(), static_cast<std::size_t>(n),
                 [&](const std::vector<std::size_t>& rt) {
                   std::uint64_t d = 1;
                   for (auto r : rt) d *= irreps[r].degree;
                   bound += d * (d + 1) / 2;
                 });
  return bound;
}

namespace {

ComplexTensor as_tensor(const FiniteGroup& g, int n, const std::vector<Complex>& v) {
  return ComplexTensor{g.order(), n, v};
}

}  // namespace

double equation_residual(const FiniteGroup& g, const IrrepSet& irreps,
                         const StepDistribution& gamma, const ComplexTensor& j,
                         int lag_bound, std::size_t max_entries) {
  const CoefficientMatrix m =
      build_coefficient_matrix(g, irreps, gamma, j.order, lag_bound, max_entries);
  double r = 0.0;
  for (const auto& v : matvec(m.matrix, j.values)) r = std::max(r, std::abs(v));
  return r;
}

ConditionReport condition_report(const FiniteGroup& g, const IrrepSet& irreps,
                                 const StepDistribution& gamma, int n, int lag_bound,
                                 double tol, std::size_t max_entries) {
  const int L = lag_bound > 0 ? lag_bound : g.order();
  const CoefficientMatrix m = build_coefficient_matrix(g, irreps, gamma, n, L, max_entries);
  const RankResult rr = rank_nullspace(m.matrix, tol);

  ConditionReport rep;
  rep.group = g.name();
  rep.n = n;
  rep.lag_bound = L;
  rep.tol = tol;
  rep.unknowns = m.matrix.cols();
  rep.rank = rr.rank;
  rep.nullity = m.matrix.cols() - rr.rank;
  rep.rank_bound = theoretical_rank_bound(irreps, n);
  rep.condition_holds = rep.nullity == 0;
  if (!rep.condition_holds) {
    rep.witness = as_tensor(g, n, rr.null_basis.front());
    rep.witness_residual = equation_residual(g, irreps, gamma, *rep.witness, 2 * L, max_entries);
  }
  return rep;
}

std::optional<ComplexTensor> null_witness(const FiniteGroup& g, const IrrepSet& irreps,
                                          const StepDistribution& gamma, int n,
                                          int lag_bound, double tol,
                                          std::size_t max_entries) {
  const int L = lag_bound > 0 ? lag_bound : g.order();
  const CoefficientMatrix m = build_coefficient_matrix(g, irreps, gamma, n, L, max_entries);
  const RankResult rr = rank_nullspace(m.matrix, tol);
  if (rr.null_basis.empty()) return std::nullopt;
  return as_tensor(g, n, rr.null_basis.front());
}

RankDeficitSummary verify_theorem2(const FiniteGroup& g, const IrrepSet& irreps, int trials,
                                std::uint64_t seed, double tol) {
  if (g.is_abelian())
    throw ValidationError("theorem2 check needs a non-abelian group; " + g.name() +
                          " is abelian");
  if (trials < 0) throw std::invalid_argument("trial count must be >= 0");
  RankDeficitSummary s;
  s.group = g.name();
  s.seed = seed;
  s.random_trials = trials;
  s.rank_bound = theoretical_rank_bound(irreps, 1);
  s.min_rank = std::numeric_limits<std::size_t>::max();
  s.min_nullity = std::numeric_limits<std::size_t>::max();
  s.all_ok = true;

  std::vector<std::pair<std::string, StepDistribution>> steps;
  SeededRng rng(seed);
  for (int t = 0; t < trials; ++t)
    steps.emplace_back("random:" + std::to_string(t),
                       StepDistribution::random(g, rng.next()));
  steps.emplace_back("uniform", StepDistribution::uniform(g));
  for (int x = 0; x < g.order(); ++x)
    steps.emplace_back("point:" + std::to_string(x), StepDistribution::point_mass(g, x));

  for (const auto& [label, gamma] : steps) {
    const ConditionReport rep = condition_report(g, irreps, gamma, 1, 0, tol);
    RankDeficitTrial t;
    t.label = label;
    t.gamma.assign(gamma.probs().begin(), gamma.probs().end());
    t.rank = rep.rank;
    t.nullity = rep.nullity;
    t.witness_residual = rep.witness_residual.value_or(0.0);
    t.ok = !rep.condition_holds && rep.rank <= s.rank_bound && rep.nullity >= 1 &&
           rep.witness_residual.has_value() && t.witness_residual < kWitnessResidualTol;
    s.min_rank = std::min(s.min_rank, t.rank);
    s.max_rank = std::max(s.max_rank, t.rank);
    s.min_nullity = std::min(s.min_nullity, t.nullity);
    s.max_witness_residual = std::max(s.max_witness_residual, t.witness_residual);
    s.all_ok = s.all_ok && t.ok;
    s.trials.push_back(std::move(t));
  }
  return s;
}

}  // namespace scenery
