#include "scenery/fourier.hpp"

#include <stdexcept>

#include "scenery/errors.hpp"

namespace scenery {

namespace {

template <class T>
ComplexMatrix transform_impl(std::span<const T> u, const Representation& rho) {
  if (u.size() != rho.matrices.size())
    throw ValidationError("fourier_transform: function length " +
                          std::to_string(u.size()) + " does not match group order " +
                          std::to_string(rho.matrices.size()));
  ComplexMatrix out(rho.degree, rho.degree);
  for (std::size_t s = 0; s < u.size(); ++s) {
    const Complex c = u[s];
    if (c == Complex{}) continue;
    const auto& m = rho.matrices[s];
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += c * m.data()[i];
  }
  return out;
}

}  // namespace

GFunction to_complex(std::span<const double> u) { return GFunction(u.begin(), u.end()); }

ComplexMatrix fourier_transform(std::span<const Complex> u, const Representation& rho) {
  return transform_impl(u, rho);
}

ComplexMatrix fourier_transform(std::span<const double> u, const Representation& rho) {
  return transform_impl(u, rho);
}

std::vector<ComplexMatrix> fourier_transform_all(std::span<const Complex> u,
                                                 const IrrepSet& set) {
  std::vector<ComplexMatrix> out;
  for (const auto& rho : set.reps) out.push_back(fourier_transform(u, rho));
  return out;
}

std::vector<ComplexMatrix> fourier_transform_all(std::span<const double> u,
                                                 const IrrepSet& set) {
  std::vector<ComplexMatrix> out;
  for (const auto& rho : set.reps) out.push_back(fourier_transform(u, rho));
  return out;
}

GFunction inverse_fourier(const FiniteGroup& g, const IrrepSet& set,
                          std::span<const ComplexMatrix> coeffs) {
  if (coeffs.size() != set.size())
    throw ValidationError("inverse_fourier: expected " + std::to_string(set.size()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
  const int n = g.order();
  GFunction u(n);
  for (int s = 0; s < n; ++s) {
    Complex acc{};
    for (std::size_t r = 0; r < set.size(); ++r) {
      const double d = static_cast<double>(set[r].degree);
      acc += d * trace_of_product(set[r](g.inv(s)), coeffs[r]);
    }
    u[s] = acc / static_cast<double>(n);
  }
  return u;
}

Complex plancherel_pair(const IrrepSet& set, std::span<const Complex> u,
                        std::span<const Complex> v) {
  if (u.size() != v.size())
    throw ValidationError("plancherel_pair: functions live on different groups");
  Complex acc{};
  for (const auto& rho : set.reps)
    acc += static_cast<double>(rho.degree) *
           trace_of_product(fourier_transform(u, rho), fourier_transform(v, rho));
  return acc / static_cast<double>(u.size());
}

Complex plancherel_direct(const FiniteGroup& g, std::span<const Complex> u,
                          std::span<const Complex> v) {
  const auto n = static_cast<std::size_t>(g.order());
  if (u.size() != n || v.size() != n)
    throw ValidationError("plancherel_direct: function length does not match group");
  Complex acc{};
  for (int x = 0; x < g.order(); ++x) acc += u[g.inv(x)] * v[x];
  return acc;
}

RealGFunction convolve(const FiniteGroup& g, std::span<const double> u,
                       std::span<const double> v) {
  const int n = g.order();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw ValidationError("convolve: function length does not match group");
  RealGFunction out(n, 0.0);
  for (int s = 0; s < n; ++s) {
    if (u[s] == 0.0) continue;
    const Element s_inv = g.inv(s);
    for (int k = 0; k < n; ++k) out[k] += u[s] * v[g.mul(s_inv, k)];
  }
  return out;
}

RealGFunction convolution_power(const FiniteGroup& g, std::span<const double> gamma,
                                unsigned l) {
  if (l == 0) throw std::invalid_argument("convolution_power: l must be >= 1");
  return convolution_powers(g, gamma, l).back();
}

std::vector<RealGFunction> convolution_powers(const FiniteGroup& g,
                                              std::span<const double> gamma,
                                              unsigned max_l) {
  if (static_cast<int>(gamma.size()) != g.order())
    throw ValidationError("step distribution length does not match group order");
  std::vector<RealGFunction> out;
  if (max_l == 0) return out;
  out.emplace_back(gamma.begin(), gamma.end());
  for (unsigned l = 2; l <= max_l; ++l) out.push_back(convolve(g, gamma, out.back()));
  return out;
}

ComplexMatrix tensor_fourier_transform(const IrrepSet& set, int n,
                                       std::span<const Complex> values,
                                       std::span<const std::size_t> irrep_indices) {
  if (static_cast<int>(irrep_indices.size()) != n)
    throw ValidationError("tensor_fourier_transform: need one irrep per argument");
  const std::size_t order = set[0].matrices.size();
  std::size_t dim = 1;
  for (auto r : irrep_indices) dim *= set[r].degree;
  ComplexMatrix out(dim, dim);
  std::size_t flat = 0;
  for_each_tuple(order, static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& x) {
    const Complex c = values[flat++];
    if (c == Complex{}) return;
    ComplexMatrix term = set[irrep_indices[0]].matrices[x[0]];
    for (int i = 1; i < n; ++i) term = kron(term, set[irrep_indices[i]].matrices[x[i]]);
    term *= c;
    out += term;
  });
  if (flat != values.size())
    throw ValidationError("tensor_fourier_transform: tensor size does not match |G|^n");
  return out;
}

}  // namespace scenery
