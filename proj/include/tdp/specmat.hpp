// The two special tridiagonal families and their closed-form spectra.
//
// Family A (order n >= 3):
//
//     | a   2b                |
//     | b   a   -b            |
//     |    -b   a   -b        |
//     |         ..  ..  ..    |
//     |            -b   a   b |
//     |                 2b  a |
//
// Family A-dagger (order n >= 2) has plain b corners and a + b in the two
// corner diagonal slots. For n <= 4 the corner entries cover every
// off-diagonal slot, so no -b appears.
//
// Eigenvalues are lambda_k = a + 2b m_k with real nodes
//   A:        m_k = cos((k-1) pi / (n-1))
//   A-dagger: m_k = -cos(k pi / n)
// and eigenvector component j is a signed Chebyshev value T_{j-1}(m_k)
// (family A) or T_{(2j-1)/2}(m_k) (family A-dagger); see component_sign().
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "tdp/chebyshev.hpp"
#include "tdp/numkit.hpp"

namespace tdp {

enum class Family { A, ADagger };

inline std::string_view to_string(Family f) noexcept { return f == Family::A ? "A" : "A_DAGGER"; }

class FamilySpec {
 public:
  FamilySpec(Family family, std::size_t n, Complex a, Complex b) : family_(family), n_(n), a_(a), b_(b) {
    if (n < 2) throw PreconditionError("family order n must be at least 2");
    if (b == Complex{}) throw PreconditionError("off-diagonal parameter b must be nonzero");
    if (!is_finite(a) || !is_finite(b)) throw PreconditionError("parameters a and b must be finite");
  }

  Family family() const noexcept { return family_; }
  std::size_t n() const noexcept { return n_; }
  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  Family family_;
  std::size_t n_;
  Complex a_;
  Complex b_;
};

/// Eigenvalues, nodes and the modal pair P, P^-1 for one concrete matrix.
struct SpectralData {
  std::vector<Complex> eigenvalues;
  std::vector<double> nodes;
  DenseMatrix modal;
  DenseMatrix modal_inv;
};

namespace detail {

inline void require_spectral_order(const FamilySpec& spec) {
  if (spec.family() == Family::A && spec.n() < 3)
    throw PreconditionError("family A spectrum needs n >= 3 (node grid divides by n-1)");
}

inline void require_index(const FamilySpec& spec, std::size_t k) {
  if (k < 1 || k > spec.n()) throw PreconditionError("eigen index k must lie in 1..n");
}

}  // namespace detail

inline TridiagonalMatrix build(const FamilySpec& spec) {
  const std::size_t n = spec.n();
  const Complex a = spec.a();
  const Complex b = spec.b();
  const Complex interior = n <= 4 ? b : -b;

  std::vector<Complex> sub(n - 1, interior);
  std::vector<Complex> sup(n - 1, interior);
  std::vector<Complex> diag(n, a);

  if (spec.family() == Family::A) {
    sup.front() = 2.0 * b;
    sub.front() = b;
    sup.back() = b;
    sub.back() = 2.0 * b;
    if (n == 2) {
      // Both corner rules land on the same slots; the first row/last row patterns win.
      sup.front() = 2.0 * b;
      sub.front() = 2.0 * b;
    }
  } else {
    sup.front() = sub.front() = b;
    sup.back() = sub.back() = b;
    diag.front() += b;
    diag.back() += b;
  }
  return {std::move(sub), std::move(diag), std::move(sup)};
}

/// Nodes m_k in k = 1..n order. Evaluated through sin of the complementary
/// angle so that the middle node is exactly zero and the grid is exactly
/// antisymmetric.
inline std::vector<double> nodes(const FamilySpec& spec) {
  detail::require_spectral_order(spec);
  const std::size_t n = spec.n();
  std::vector<double> m(n);
  const double pi = std::numbers::pi;
  if (spec.family() == Family::A) {
    const double grid = static_cast<double>(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
      const double num = grid - 2.0 * static_cast<double>(k - 1);
      m[k - 1] = std::sin(pi * num / (2.0 * grid));
    }
  } else {
    const double grid = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const double num = 2.0 * static_cast<double>(k) - grid;
      m[k - 1] = std::sin(pi * num / (2.0 * grid));
    }
  }
  return m;
}

inline std::vector<Complex> eigenvalues(const FamilySpec& spec) {
  const std::vector<double> m = nodes(spec);
  std::vector<Complex> lambda(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) lambda[k] = spec.a() + 2.0 * spec.b() * m[k];
  return lambda;
}

/// Sign applied to eigenvector component j (1-based) for order n.
///
/// Components 1, 2 are unsigned, interior components 3..n-2 carry (-1)^j, and
/// the last two carry (-1)^(n+1) once an interior band exists (n >= 5). For odd
/// n that last sign is +1. Even n >= 6 needs the -1 for the eigen-equations to
/// hold.
inline int component_sign(std::size_t n, std::size_t j) noexcept {
  if (j <= 2) return 1;
  if (j + 2 <= n) return (j % 2 == 0) ? 1 : -1;
  if (n >= 5) return (n % 2 == 1) ? 1 : -1;
  return 1;
}

inline ChebDegree component_degree(Family family, std::size_t j) {
  return family == Family::A ? ChebDegree::integer(static_cast<std::uint32_t>(j - 1))
                             : ChebDegree::half_odd(static_cast<std::uint32_t>(j));
}

/// Unnormalised eigenvector for eigenvalue k (first component T_0 = 1 or T_{1/2}).
inline std::vector<Complex> eigenvector(const FamilySpec& spec, std::size_t k) {
  detail::require_spectral_order(spec);
  detail::require_index(spec, k);
  const std::size_t n = spec.n();
  const double m = nodes(spec)[k - 1];
  std::vector<Complex> v(n);
  for (std::size_t j = 1; j <= n; ++j)
    v[j - 1] = static_cast<double>(component_sign(n, j)) * cheb_T(component_degree(spec.family(), j), m);
  return v;
}

/// Column k holds eigenvector(spec, k).
inline DenseMatrix eigenvector_matrix(const FamilySpec& spec) {
  const std::size_t n = spec.n();
  DenseMatrix p(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::vector<Complex> v = eigenvector(spec, k);
    for (std::size_t j = 0; j < n; ++j) p(j, k - 1) = v[j];
  }
  return p;
}

namespace detail {

inline std::vector<Complex> tridiag_apply(const TridiagonalMatrix& t, const std::vector<Complex>& v) {
  const std::size_t n = t.order();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = t.diag[i] * v[i];
    if (i > 0) acc += t.sub[i - 1] * v[i - 1];
    if (i + 1 < n) acc += t.sup[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

inline double tridiag_norm_inf(const TridiagonalMatrix& t) {
  const std::size_t n = t.order();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = std::abs(t.diag[i]);
    if (i > 0) sum += std::abs(t.sub[i - 1]);
    if (i + 1 < n) sum += std::abs(t.sup[i]);
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace detail

/// ||M v - lambda v||_inf / (||M||_inf ||v||_inf) for an explicit lambda.
inline double eigen_residual(const FamilySpec& spec, std::size_t k, Complex lambda) {
  const TridiagonalMatrix m = build(spec);
  const std::vector<Complex> v = eigenvector(spec, k);
  const std::vector<Complex> mv = detail::tridiag_apply(m, v);
  double num = 0.0;
  double vnorm = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num = std::max(num, std::abs(mv[i] - lambda * v[i]));
    vnorm = std::max(vnorm, std::abs(v[i]));
  }
  return num / (detail::tridiag_norm_inf(m) * vnorm);
}

inline double eigen_residual(const FamilySpec& spec, std::size_t k) {
  detail::require_spectral_order(spec);
  detail::require_index(spec, k);
  return eigen_residual(spec, k, eigenvalues(spec)[k - 1]);
}

}  // namespace tdp
