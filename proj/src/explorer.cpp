#include "scenery/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scenery {

bool PairFinding::nonzero_null_difference() const {
  return std::any_of(orders.begin(), orders.end(), [](const OrderFinding& o) {
    return !o.delta_zero && o.in_null_space;
  });
}

IntTensor multispectrum_difference_flipped(const FiniteGroup& g, const Scenery& f1,
                                           const Scenery& f2, int n,
                                           std::size_t max_entries) {
  IntTensor a = multispectrum(g, f1, n, max_entries);
  const IntTensor b = multispectrum(g, f2, n, max_entries);
  for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
  return flip_arguments(g, a);
}

std::vector<Scenery> shift_class_representatives(const FiniteGroup& g) {
  std::set<Scenery> reps;
  for (const Scenery& f : enumerate_sceneries(g)) reps.insert(shift_class_representative(g, f));
  return {reps.begin(), reps.end()};
}

PairAnalyzer::PairAnalyzer(const FiniteGroup& g, const IrrepSet& irreps,
                           const StepDistribution& gamma, ExploreOptions options)
    : g_(g), gamma_(gamma), options_(options),
      lag_bound_(options.lag_bound > 0 ? options.lag_bound : g.order()) {
  if (options_.order_bound < 1) throw std::invalid_argument("order bound must be >= 1");
  if (options_.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  for (int n = 1; n <= options_.order_bound; ++n)
    systems_.push_back(
        build_coefficient_matrix(g, irreps, gamma, n, lag_bound_, options_.max_entries));
}

PairFinding PairAnalyzer::analyze(const Scenery& f1, const Scenery& f2) const {
  PairFinding p;
  p.f1 = f1;
  p.f2 = f2;
  p.shift_equivalent = shift_equivalent(g_, f1, f2).has_value();
  for (int n = 1; n <= options_.order_bound; ++n) {
    const IntTensor j = multispectrum_difference_flipped(g_, f1, f2, n, options_.max_entries);
    OrderFinding o;
    o.n = n;
    o.delta_zero = std::all_of(j.values.begin(), j.values.end(),
                               [](std::int64_t v) { return v == 0; });
    const ComplexTensor jc = to_complex(j);
    for (const auto& v : matvec(systems_[n - 1].matrix, jc.values))
      o.residual = std::max(o.residual, std::abs(v));
    o.in_null_space = o.residual < kWitnessResidualTol;
    p.orders.push_back(o);
  }
  p.verdict = distinguishability_oracle(g_, f1, f2, gamma_, options_.horizon,
                                        options_.order_bound, lag_bound_,
                                        options_.max_entries);

  const bool all_zero = std::all_of(p.orders.begin(), p.orders.end(),
                                    [](const OrderFinding& o) { return o.delta_zero; });
  if (p.shift_equivalent && !all_zero)
    p.inconsistencies.push_back("shift-equivalent pair with nonzero multispectrum difference");
  if (all_zero && p.verdict.distinguished)
    p.inconsistencies.push_back("equal multispectra but distinguished observations");
  if (f1.support_size() != f2.support_size() &&
      !(p.verdict.distinguished && p.verdict.horizon == 1))
    p.inconsistencies.push_back("different support sizes not distinguished at horizon 1");
  // M J = |G|^{n+1} (B_{f1} - B_{f2}) row by row, so null membership at order
  // n and equality of the order-n temporal multispectra must agree.
  for (const auto& o : p.orders)
    if (o.in_null_space != static_cast<bool>(p.verdict.moments_equal_by_order[o.n]))
      p.inconsistencies.push_back("order " + std::to_string(o.n) +
                                  ": null-space membership disagrees with moment comparison");
  p.consistent = p.inconsistencies.empty();
  return p;
}

ExplorationReport explore_open_question(const FiniteGroup& g, const IrrepSet& irreps,
                                        const StepDistribution& gamma,
                                        ExploreOptions options) {
  if (g.order() > kMaxExploreOrder)
    throw CapExceeded("explore is limited to groups of order <= " +
                      std::to_string(kMaxExploreOrder));
  const PairAnalyzer analyzer(g, irreps, gamma, options);

  ExplorationReport rep;
  rep.group = g.name();
  rep.gamma.assign(gamma.probs().begin(), gamma.probs().end());
  rep.options = options;
  rep.lag_bound = analyzer.lag_bound();
  rep.class_representatives = shift_class_representatives(g);
  const auto& reps = rep.class_representatives;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      PairFinding p = analyzer.analyze(reps[a], reps[b]);
      const std::size_t idx = rep.pairs.size();
      if (!p.shift_equivalent && p.indistinguishable())
        rep.indistinguishable_non_shift.push_back(idx);
      if (p.nonzero_null_difference()) rep.null_space_differences.push_back(idx);
      rep.pairs.push_back(std::move(p));
    }
  rep.all_consistent = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                   [](const PairFinding& p) { return p.consistent; });
  return rep;
}

}  // namespace scenery
