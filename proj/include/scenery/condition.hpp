#ifndef SCENERY_CONDITION_HPP
#define SCENERY_CONDITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scenery/errors.hpp"
#include "scenery/group.hpp"
#include "scenery/linalg.hpp"
#include "scenery/representation.hpp"
#include "scenery/scenery.hpp"
#include "scenery/walk.hpp"

namespace scenery {

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kWitnessResidualTol = 1e-8;

// The homogeneous system whose unknowns are the values J(x_1, ..., x_n).
// Row (l_1, ..., l_n) in [1, L]^n (l_1 most significant), column x in G^n
// (x_1 most significant). Entry:
//   sum over irrep tuples of (prod_i d_i) Tr((gammahat(rho_1)^l_1 (x) ...)
//                                            (rho_1(x_1) (x) ... (x) rho_n(x_n))).
struct CoefficientMatrix {
  int group_order = 0;
  int n = 0;
  int lag_bound = 0;
  ComplexMatrix matrix;

  std::vector<unsigned> lags(std::size_t row) const;
};

// Throws CapExceeded when L^n * |G|^n exceeds max_entries.
CoefficientMatrix build_coefficient_matrix(const FiniteGroup& g, const IrrepSet& irreps,
                                           const StepDistribution& gamma, int n,
                                           int lag_bound,
                                           std::size_t max_entries = kDefaultMaxEntries);

// sum over irrep tuples of D(D+1)/2 with D = prod_i d_{rho_i}. Equals |G|^n
// exactly when every degree is 1.
std::uint64_t theoretical_rank_bound(const IrrepSet& irreps, int n);

struct ConditionReport {
  std::string group;
  int n = 0;
  int lag_bound = 0;
  double tol = 0.0;
  std::size_t unknowns = 0;  // |G|^n
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::uint64_t rank_bound = 0;
  bool condition_holds = false;
  // Present iff the condition fails: a null vector with max |entry| = 1,
  // and max_l |M_{2L} J| over lags up to 2L.
  std::optional<ComplexTensor> witness;
  std::optional<double> witness_residual;
};

// lag_bound <= 0 means |G|.
ConditionReport condition_report(const FiniteGroup& g, const IrrepSet& irreps,
                                 const StepDistribution& gamma, int n, int lag_bound = 0,
                                 double tol = kDefaultRankTol,
                                 std::size_t max_entries = kDefaultMaxEntries);

// Nonzero J in the null space of the order-n system, or nothing when the
// system has full column rank.
std::optional<ComplexTensor> null_witness(const FiniteGroup& g, const IrrepSet& irreps,
                                          const StepDistribution& gamma, int n,
                                          int lag_bound = 0, double tol = kDefaultRankTol,
                                          std::size_t max_entries = kDefaultMaxEntries);

// max over rows of |M J| for the order-J.order system with the given lag bound.
double equation_residual(const FiniteGroup& g, const IrrepSet& irreps,
                         const StepDistribution& gamma, const ComplexTensor& j,
                         int lag_bound, std::size_t max_entries = kDefaultMaxEntries);

struct RankDeficitTrial {
  std::string label;  // "random:<k>", "uniform" or "point:<x>"
  std::vector<double> gamma;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  double witness_residual = 0.0;
  bool ok = false;
};

struct RankDeficitSummary {
  std::string group;
  std::uint64_t seed = 0;
  int random_trials = 0;
  std::uint64_t rank_bound = 0;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  std::size_t min_nullity = 0;
  double max_witness_residual = 0.0;
  bool all_ok = false;
  std::vector<RankDeficitTrial> trials;
};

// For `trials` seeded random steps plus the uniform step plus every point
// mass: the order-1 system has rank <= theoretical_rank_bound(1), nullity
// >= 1, and a witness with residual below kWitnessResidualTol on lags up to
// 2|G|. Throws ValidationError for abelian groups.
RankDeficitSummary verify_theorem2(const FiniteGroup& g, const IrrepSet& irreps, int trials,
                                std::uint64_t seed, double tol = kDefaultRankTol);

}  // namespace scenery

#endif  // SCENERY_CONDITION_HPP
