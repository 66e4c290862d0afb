#ifndef SCENERY_FOURIER_HPP
#define SCENERY_FOURIER_HPP

#include <span>
#include <vector>

#include "scenery/group.hpp"
#include "scenery/linalg.hpp"
#include "scenery/representation.hpp"

namespace scenery {

// A function on a group, stored by element index.
using GFunction = std::vector<Complex>;
using RealGFunction = std::vector<double>;

GFunction to_complex(std::span<const double> u);

// sum_s u(s) rho(s). Throws ValidationError if u.size() != number of matrices.
ComplexMatrix fourier_transform(std::span<const Complex> u, const Representation& rho);
ComplexMatrix fourier_transform(std::span<const double> u, const Representation& rho);

// One coefficient per member of the set.
std::vector<ComplexMatrix> fourier_transform_all(std::span<const Complex> u,
                                                 const IrrepSet& set);
std::vector<ComplexMatrix> fourier_transform_all(std::span<const double> u,
                                                 const IrrepSet& set);

// u(s) = (1/|G|) sum_rho d_rho Tr(rho(s^-1) uhat(rho)).
GFunction inverse_fourier(const FiniteGroup& g, const IrrepSet& set,
                          std::span<const ComplexMatrix> coeffs);

// Spectral side of sum_x u(x^-1) v(x), i.e. (1/|G|) sum_rho d_rho Tr(uhat vhat).
Complex plancherel_pair(const IrrepSet& set, std::span<const Complex> u,
                        std::span<const Complex> v);
// The same quantity summed directly over the group.
Complex plancherel_direct(const FiniteGroup& g, std::span<const Complex> u,
                          std::span<const Complex> v);

// (u * v)(k) = sum_s u(s) v(s^-1 k); the transform is uhat * vhat.
RealGFunction convolve(const FiniteGroup& g, std::span<const double> u,
                       std::span<const double> v);

// gamma^{*l}: law of Z_{t+l-1} ... Z_t when each Z has law gamma. Throws
// std::invalid_argument for l == 0.
RealGFunction convolution_power(const FiniteGroup& g, std::span<const double> gamma,
                                unsigned l);

// gamma^{*1}, ..., gamma^{*max_l}; element [l-1] holds gamma^{*l}.
std::vector<RealGFunction> convolution_powers(const FiniteGroup& g,
                                              std::span<const double> gamma,
                                              unsigned max_l);

// Transform of a function J on G^n at rho_{i_1} (x) ... (x) rho_{i_n}:
// sum over x of J(x) rho_{i_1}(x_1) (x) ... (x) rho_{i_n}(x_n). values uses
// the x_1-most-significant flat layout of GTensor.
ComplexMatrix tensor_fourier_transform(const IrrepSet& set, int n,
                                       std::span<const Complex> values,
                                       std::span<const std::size_t> irrep_indices);

// Calls fn(indices) for every n-tuple over [0, base), last index fastest.
template <class Fn>
void for_each_tuple(std::size_t base, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> idx(n, 0);
  if (base == 0) return;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < base) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace scenery

#endif  // SCENERY_FOURIER_HPP
