#include "scenery/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scenery {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::scalar(Complex c) {
  ComplexMatrix m(1, 1);
  m(0, 0) = c;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix mat_power(const ComplexMatrix& a, unsigned exponent) {
  if (!a.square()) throw std::invalid_argument("mat_power: matrix not square");
  if (exponent == 0) throw std::invalid_argument("mat_power: exponent must be >= 1");
  ComplexMatrix result = ComplexMatrix::identity(a.rows());
  ComplexMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = matmul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = matmul(base, base);
  }
  return result;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace: matrix not square");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("trace_of_product: shape mismatch");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  ComplexMatrix work = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(piv, col))) piv = r;
    if (std::abs(work(piv, col)) == 0.0)
      throw std::invalid_argument("inverse: matrix is singular");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(work(col, c), work(piv, c));
      std::swap(inv(col, c), inv(piv, c));
    }
    const Complex p = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = work(r, col);
      if (factor == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

RankResult rank_nullspace(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("rank_nullspace: tol must be > 0");
  const std::size_t rows = m.rows(), cols = m.cols();
  ComplexMatrix u = m;
  std::vector<std::size_t> colperm(cols);
  std::iota(colperm.begin(), colperm.end(), std::size_t{0});

  const double threshold = tol * max_abs(m);
  std::size_t rank = 0;
  const std::size_t steps = std::min(rows, cols);
  if (threshold > 0.0) {
    for (; rank < steps; ++rank) {
      std::size_t pr = rank, pc = rank;
      double best = -1.0;
      for (std::size_t r = rank; r < rows; ++r)
        for (std::size_t c = rank; c < cols; ++c) {
          const double v = std::abs(u(r, c));
          if (v > best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (best <= threshold) break;
      if (pr != rank)
        for (std::size_t c = 0; c < cols; ++c) std::swap(u(rank, c), u(pr, c));
      if (pc != rank) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(u(r, rank), u(r, pc));
        std::swap(colperm[rank], colperm[pc]);
      }
      const Complex pivot = u(rank, rank);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        const Complex factor = u(r, rank) / pivot;
        if (factor == Complex{}) continue;
        u(r, rank) = 0.0;
        for (std::size_t c = rank + 1; c < cols; ++c) u(r, c) -= factor * u(rank, c);
      }
    }
  }

  RankResult result;
  result.rank = rank;
  for (std::size_t f = rank; f < cols; ++f) {
    std::vector<Complex> x(cols);  // in permuted coordinates
    x[f] = 1.0;
    for (std::size_t ii = rank; ii-- > 0;) {
      Complex s = u(ii, f);
      for (std::size_t c = ii + 1; c < rank; ++c) s += u(ii, c) * x[c];
      x[ii] = -s / u(ii, ii);
    }
    double scale = 0.0;
    for (const auto& v : x) scale = std::max(scale, std::abs(v));
    std::vector<Complex> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[colperm[c]] = x[c] / scale;
    result.null_basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace scenery
