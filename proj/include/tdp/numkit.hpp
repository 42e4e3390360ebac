// Dense and tridiagonal complex linear algebra.
//
// This is the brute-force side of every cross-check in the library: plain
// row-major storage, O(n^3) products, Gauss-Jordan inversion with partial
// pivoting and a forward determinant recurrence for tridiagonal matrices.
// Nothing here knows about the closed-form spectra.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdp {

using Complex = std::complex<double>;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad order, parity, index, b = 0).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Inverse or negative power requested for a (numerically) singular matrix.
class SingularMatrix : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A parameter sits exactly on a pole of the requested formula.
class DegenerateParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A NaN or Inf was produced (overflow in a large power, for instance).
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// |x - y| / max(|x|, |y|); zero when both are zero.
inline double relative_difference(Complex x, Complex y) noexcept {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

/// Integer power by repeated squaring. Negative exponents invert first.
inline Complex ipow(Complex base, long long exponent) {
  if (exponent < 0) {
    if (base == Complex{}) throw SingularMatrix("zero raised to a negative power");
    base = Complex{1.0} / base;
    exponent = -exponent;
  }
  Complex result{1.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw PreconditionError("matrix order must be at least 1");
  }

  DenseMatrix(std::size_t n, std::vector<Complex> row_major) : n_(n), data_(std::move(row_major)) {
    if (n == 0) throw PreconditionError("matrix order must be at least 1");
    if (data_.size() != n * n) throw DimensionMismatch("entry count is not n*n");
  }

  /// Build from nested rows; every row must have as many entries as there are rows.
  static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    DenseMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must form a square");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
    }
    return m;
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const Complex> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const Complex> entries() const noexcept { return data_; }

  bool all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Complex z) { return is_finite(z); });
  }

  double max_abs_entry() const noexcept {
    double best = 0.0;
    for (Complex z : data_) best = std::max(best, std::abs(z));
    return best;
  }

  /// Maximum absolute row sum.
  double norm_inf() const noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double sum = 0.0;
      for (Complex z : row(i)) sum += std::abs(z);
      best = std::max(best, sum);
    }
    return best;
  }

  Complex trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  DenseMatrix& operator*=(Complex s) noexcept {
    for (Complex& z : data_) z *= s;
    return *this;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

/// Tridiagonal storage: sub[i] = m(i+1, i), diag[i] = m(i, i), sup[i] = m(i, i+1).
struct TridiagonalMatrix {
  std::vector<Complex> sub;
  std::vector<Complex> diag;
  std::vector<Complex> sup;

  TridiagonalMatrix(std::vector<Complex> sub_, std::vector<Complex> diag_, std::vector<Complex> sup_)
      : sub(std::move(sub_)), diag(std::move(diag_)), sup(std::move(sup_)) {
    if (diag.empty()) throw PreconditionError("tridiagonal order must be at least 1");
    if (sub.size() + 1 != diag.size() || sup.size() + 1 != diag.size())
      throw DimensionMismatch("tridiagonal bands must have lengths n-1, n, n-1");
  }

  /// Constant-band matrix tridiag_n(lower, main, upper).
  static TridiagonalMatrix constant(std::size_t n, Complex lower, Complex main, Complex upper) {
    if (n == 0) throw PreconditionError("tridiagonal order must be at least 1");
    return {std::vector<Complex>(n - 1, lower), std::vector<Complex>(n, main),
            std::vector<Complex>(n - 1, upper)};
  }

  std::size_t order() const noexcept { return diag.size(); }

  /// Same diagonal, every off-diagonal entry negated.
  TridiagonalMatrix sign_flipped() const {
    TridiagonalMatrix out = *this;
    for (Complex& z : out.sub) z = -z;
    for (Complex& z : out.sup) z = -z;
    return out;
  }

  DenseMatrix to_dense() const {
    const std::size_t n = order();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag[i];
      if (i + 1 < n) {
        m(i, i + 1) = sup[i];
        m(i + 1, i) = sub[i];
      }
    }
    return m;
  }
};

inline DenseMatrix mat_mul(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  const std::size_t n = lhs.order();
  if (rhs.order() != n) throw DimensionMismatch("mat_mul: orders differ");
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

inline double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.order() != rhs.order()) throw DimensionMismatch("max_abs_diff: orders differ");
  double best = 0.0;
  auto a = lhs.entries();
  auto b = rhs.entries();
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

/// Relative pivot threshold below which a matrix is reported singular.
inline constexpr double kSingularPivotTolerance = 1e-12;

/// Gauss-Jordan elimination with partial pivoting.
inline DenseMatrix mat_inverse(const DenseMatrix& m) {
  const std::size_t n = m.order();
  DenseMatrix work = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  const double threshold = kSingularPivotTolerance * m.max_abs_entry();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double pivot_mag = std::abs(work(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(work(r, col));
      if (mag > pivot_mag) {
        pivot = r;
        pivot_mag = mag;
      }
    }
    if (!(pivot_mag > threshold)) throw SingularMatrix("mat_inverse: pivot below singularity threshold");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Complex scale = Complex{1.0} / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = work(r, col);
      if (factor == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

/// m^r by binary exponentiation; r < 0 inverts m first.
inline DenseMatrix mat_pow_oracle(const DenseMatrix& m, long long r) {
  DenseMatrix base = r < 0 ? mat_inverse(m) : m;
  unsigned long long e = r < 0 ? static_cast<unsigned long long>(-(r + 1)) + 1ULL : static_cast<unsigned long long>(r);
  DenseMatrix result = DenseMatrix::identity(m.order());
  while (e > 0) {
    if (e & 1ULL) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  if (!result.all_finite()) throw NonFiniteValue("mat_pow_oracle: result overflowed");
  return result;
}

/// Determinant through |H(k)| = h_kk |H(k-1)| - h_{k-1,k} h_{k,k-1} |H(k-2)|.
inline Complex tridiag_det(const TridiagonalMatrix& t) {
  const std::size_t n = t.order();
  Complex prev{1.0};          // |H(0)|
  Complex curr = t.diag[0];   // |H(1)|
  for (std::size_t k = 1; k < n; ++k) {
    const Complex next = t.diag[k] * curr - t.sup[k - 1] * t.sub[k - 1] * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace tdp
