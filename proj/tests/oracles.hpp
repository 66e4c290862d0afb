// Brute-force reference computations used only by the tests. Each one
// avoids the library code path it is compared against.
#ifndef SCENERY_TESTS_ORACLES_HPP
#define SCENERY_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <vector>

#include "scenery/group.hpp"
#include "scenery/linalg.hpp"
#include "scenery/representation.hpp"
#include "scenery/scenery.hpp"
#include "scenery/walk.hpp"

namespace oracle {

using scenery::Complex;
using scenery::Element;
using scenery::FiniteGroup;

// All n-tuples over [0, base) with x_1 most significant.
inline std::vector<std::vector<int>> tuples(int base, int n) {
  std::vector<std::vector<int>> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(base);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> t(n);
    std::size_t r = idx;
    for (int i = n; i-- > 0;) {
      t[i] = static_cast<int>(r % base);
      r /= base;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// A_f(x) = sum_k f(k) f(x_1 k) f(x_2 x_1 k) ..., one product per base point.
inline std::vector<std::int64_t> multispectrum(const FiniteGroup& g, const scenery::Scenery& f,
                                               int n) {
  std::vector<std::int64_t> out;
  for (const auto& x : tuples(g.order(), n)) {
    std::int64_t s = 0;
    for (int k = 0; k < g.order(); ++k) {
      int y = k;
      std::int64_t p = f(k);
      for (int xi : x) {
        y = g.compose(xi, y);
        p *= f(y);
      }
      s += p;
    }
    out.push_back(s);
  }
  return out;
}

// Law of Z_l ... Z_1 by pushing a point mass at the identity forward l times.
inline std::vector<double> step_law(const FiniteGroup& g, std::span<const double> gamma,
                                    unsigned l) {
  std::vector<double> p(g.order(), 0.0);
  p[0] = 1.0;
  for (unsigned t = 0; t < l; ++t) {
    std::vector<double> q(g.order(), 0.0);
    for (int z = 0; z < g.order(); ++z)
      for (int y = 0; y < g.order(); ++y) q[g.compose(z, y)] += gamma[z] * p[y];
    p = std::move(q);
  }
  return p;
}

// Entry (l, x) = prod_i |G| gamma^{*l_i}(x_i^-1): the coefficient matrix in
// factorized form, obtained by collapsing the irrep sum with Fourier inversion.
inline Eigen::MatrixXd factorized_coefficients(const FiniteGroup& g,
                                               std::span<const double> gamma, int n, int L) {
  std::vector<std::vector<double>> laws;
  for (int l = 1; l <= L; ++l) laws.push_back(step_law(g, gamma, l));
  const auto rows = tuples(L, n);
  const auto cols = tuples(g.order(), n);
  Eigen::MatrixXd m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      double v = 1.0;
      for (int i = 0; i < n; ++i) v *= g.order() * laws[rows[r][i]][g.inverse(cols[c][i])];
      m(r, c) = v;
    }
  return m;
}

// P(f(v(t)) = 1 for every t in `times`), summing over every path of the walk.
inline double all_ones_by_paths(const FiniteGroup& g, const scenery::Scenery& f,
                                std::span<const double> gamma, std::span<const int> times) {
  int horizon = 1;
  for (int t : times) horizon = std::max(horizon, t);
  double total = 0.0;
  for (int v1 = 0; v1 < g.order(); ++v1)
    for (const auto& steps : tuples(g.order(), horizon - 1)) {
      double p = 1.0 / g.order();
      std::vector<int> path{v1};
      for (int z : steps) {
        p *= gamma[z];
        path.push_back(g.compose(z, path.back()));
      }
      if (p == 0.0) continue;
      bool ones = true;
      for (int t : times) ones = ones && f(path[t - 1]) == 1;
      if (ones) total += p;
    }
  return total;
}

// Probability of every observation pattern of length T, indexed with b_1 as
// the most significant bit.
inline std::vector<double> pattern_law_by_paths(const FiniteGroup& g, const scenery::Scenery& f,
                                                std::span<const double> gamma, int T) {
  std::vector<double> law(std::size_t{1} << T, 0.0);
  for (int v1 = 0; v1 < g.order(); ++v1)
    for (const auto& steps : tuples(g.order(), T - 1)) {
      double p = 1.0 / g.order();
      int v = v1;
      std::size_t idx = static_cast<std::size_t>(f(v));
      for (int z : steps) {
        p *= gamma[z];
        v = g.compose(z, v);
        idx = idx * 2 + static_cast<std::size_t>(f(v));
      }
      law[idx] += p;
    }
  return law;
}

inline Eigen::MatrixXcd to_eigen(const scenery::ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

// Numerical rank from singular values relative to the largest one.
template <class Mat>
std::size_t svd_rank(const Mat& m, double rel_tol = 1e-9) {
  if (m.size() == 0) return 0;
  const auto sv = m.jacobiSvd().singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

// max ||rho(a) rho(b) - rho(ab)|| with an explicit triple loop.
inline double homomorphism_residual(const FiniteGroup& g, const scenery::Representation& rho) {
  const std::size_t d = rho.degree;
  double worst = 0.0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const auto& ab = rho.matrices[g.compose(a, b)];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Complex s{};
          for (std::size_t k = 0; k < d; ++k) s += rho.matrices[a](i, k) * rho.matrices[b](k, j);
          worst = std::max(worst, std::abs(s - ab(i, j)));
        }
    }
  return worst;
}

inline std::vector<double> random_real_function(scenery::SeededRng& rng, int n) {
  std::vector<double> u(n);
  for (auto& x : u) x = 2.0 * rng.uniform() - 1.0;
  return u;
}

inline std::vector<Complex> random_complex_function(scenery::SeededRng& rng, int n) {
  std::vector<Complex> u(n);
  for (auto& x : u) x = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  return u;
}

inline scenery::Scenery random_scenery(scenery::SeededRng& rng, int n) {
  std::vector<std::uint8_t> b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng.next() & 1u);
  return scenery::Scenery(std::move(b));
}

}  // namespace oracle

#endif  // SCENERY_TESTS_ORACLES_HPP
