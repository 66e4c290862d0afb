#ifndef SCENERY_EXPLORER_HPP
#define SCENERY_EXPLORER_HPP

#include <optional>
#include <string>
#include <vector>

#include "scenery/condition.hpp"
#include "scenery/representation.hpp"
#include "scenery/scenery.hpp"
#include "scenery/walk.hpp"

namespace scenery {

struct ExploreOptions {
  int order_bound = 3;
  int horizon = 8;
  int lag_bound = 0;  // <= 0 means |G|
  std::size_t max_entries = kDefaultMaxEntries;
};

// Per-order facts about J = H_{f1} - H_{f2}, H_f(x) = A_f(x^-1).
struct OrderFinding {
  int n = 0;
  bool delta_zero = false;
  bool in_null_space = false;  // residual < kWitnessResidualTol
  double residual = 0.0;       // max |M J| over lags in [1, L]^n
};

struct PairFinding {
  Scenery f1;
  Scenery f2;
  bool shift_equivalent = false;
  std::vector<OrderFinding> orders;
  DistinguishVerdict verdict;
  bool consistent = false;
  std::vector<std::string> inconsistencies;

  bool indistinguishable() const { return !verdict.distinguished; }
  bool nonzero_null_difference() const;
};

struct ExplorationReport {
  std::string group;
  std::vector<double> gamma;
  ExploreOptions options;
  int lag_bound = 0;
  std::vector<Scenery> class_representatives;
  std::vector<PairFinding> pairs;
  // Indices into pairs.
  std::vector<std::size_t> indistinguishable_non_shift;
  std::vector<std::size_t> null_space_differences;
  bool all_consistent = false;
};

// Shared state for analysing many pairs over one (G, gamma): the order-n
// coefficient matrices for n <= order_bound.
class PairAnalyzer {
 public:
  PairAnalyzer(const FiniteGroup& g, const IrrepSet& irreps, const StepDistribution& gamma,
               ExploreOptions options);

  PairFinding analyze(const Scenery& f1, const Scenery& f2) const;
  int lag_bound() const { return lag_bound_; }

 private:
  const FiniteGroup& g_;
  StepDistribution gamma_;
  ExploreOptions options_;
  int lag_bound_;
  std::vector<CoefficientMatrix> systems_;  // [n-1]
};

// J = H_{f1} - H_{f2} at order n.
IntTensor multispectrum_difference_flipped(const FiniteGroup& g, const Scenery& f1,
                                           const Scenery& f2, int n,
                                           std::size_t max_entries = kDefaultMaxEntries);

// One representative (lexicographically smallest shift) per shift class,
// sorted.
std::vector<Scenery> shift_class_representatives(const FiniteGroup& g);

inline constexpr int kMaxExploreOrder = 8;

// Scans every unordered pair of distinct shift classes. Throws CapExceeded
// for |G| > kMaxExploreOrder.
ExplorationReport explore_open_question(const FiniteGroup& g, const IrrepSet& irreps,
                                        const StepDistribution& gamma,
                                        ExploreOptions options = {});

}  // namespace scenery

#endif  // SCENERY_EXPLORER_HPP
