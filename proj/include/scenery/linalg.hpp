#ifndef SCENERY_LINALG_HPP
#define SCENERY_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace scenery {

using Complex = std::complex<double>;

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix scalar(Complex c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

// All shape errors throw std::invalid_argument.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_power(const ComplexMatrix& a, unsigned exponent);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
// Tr(a*b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

// Largest entry modulus of a - b; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);

struct RankResult {
  std::size_t rank = 0;
  // Each vector has m.cols() entries and satisfies m*v ~ 0.
  std::vector<std::vector<Complex>> null_basis;
};

// Gaussian elimination with full (row and column) pivoting. A pivot is
// accepted while its modulus exceeds tol times the largest entry of the
// input. The null basis comes from back substitution on the reduced form,
// one vector per free column, normalized so its largest entry has modulus 1.
RankResult rank_nullspace(const ComplexMatrix& m, double tol = 1e-9);

}  // namespace scenery

#endif  // SCENERY_LINALG_HPP
