// Integer powers of family A through its spectral decomposition.
//
// For odd n the modal matrix P has entries s_j T_{j-1}(m_k) with the nodes on
// the Chebyshev-Lobatto grid, so P^-1 follows from the discrete cosine
// (endpoint-halved) orthogonality
//
//   sum_k c_k T_i(m_k) T_j(m_k) = (n-1)/2 * delta_ij * (2 if j in {0, n-1})
//
// with c_1 = c_n = 1/2 and c_k = 1 otherwise. That gives
//
//   P^-1[k][j] = 2/(n-1) * c_k * w_j * s_j * T_{j-1}(m_k),   w_1 = w_n = 1/2.
//
// A^r is then P diag(lambda_k^r) P^-1, evaluated entry by entry.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tdp/chebyshev.hpp"
#include "tdp/numkit.hpp"
#include "tdp/specmat.hpp"

namespace tdp {

enum class PowerMethod { ClosedForm, Oracle };

inline std::string_view to_string(PowerMethod m) noexcept {
  return m == PowerMethod::ClosedForm ? "closed_form" : "oracle";
}

struct PowerRequest {
  FamilySpec spec;
  long long r = 1;
};

struct PowerResult {
  DenseMatrix value;
  PowerMethod method;
  /// max_abs_diff against the oracle when both paths ran.
  std::optional<double> cross_check_residual;
  /// Tolerance the residual was held to (1e-8 x max entry magnitude, floored at 1e-8).
  std::optional<double> cross_check_tolerance;
};

struct PowerOptions {
  std::size_t crosscheck_max_n = 64;
  double crosscheck_relative_tolerance = 1e-8;
};

/// Raised by power() when the closed form and the oracle disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require_closed_form(const FamilySpec& spec) {
  if (spec.family() != Family::A) throw PreconditionError("closed-form powers are defined for family A only");
  if (spec.n() < 3 || spec.n() % 2 == 0) throw PreconditionError("closed-form powers need odd n >= 3");
}

/// Eigenvalues smaller than this (relative to |a| + 2|b|) count as zero.
inline constexpr double kZeroEigenvalueTolerance = 1e-12;

inline bool has_zero_eigenvalue(const FamilySpec& spec, const std::vector<Complex>& lambda) {
  const double scale = std::abs(spec.a()) + 2.0 * std::abs(spec.b());
  return std::any_of(lambda.begin(), lambda.end(),
                     [&](Complex l) { return std::abs(l) <= kZeroEigenvalueTolerance * scale; });
}

}  // namespace detail

inline DenseMatrix modal_matrix(const FamilySpec& spec) {
  detail::require_closed_form(spec);
  return eigenvector_matrix(spec);
}

inline DenseMatrix modal_inverse(const FamilySpec& spec) {
  detail::require_closed_form(spec);
  const std::size_t n = spec.n();
  const std::vector<double> m = nodes(spec);
  const double prefactor = 2.0 / static_cast<double>(n - 1);
  DenseMatrix inv(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double ck = (k == 1 || k == n) ? 0.5 : 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double wj = (j == 1 || j == n) ? 0.5 : 1.0;
      const double sj = component_sign(n, j);
      inv(k - 1, j - 1) = prefactor * ck * wj * sj * cheb_T(static_cast<std::uint32_t>(j - 1), m[k - 1]);
    }
  }
  return inv;
}

/// Eigenvalues, nodes and modal pair. Odd-order family A uses the closed-form
/// inverse; everything else inverts the eigenvector matrix numerically.
inline SpectralData spectral_data(const FamilySpec& spec) {
  const bool closed = spec.family() == Family::A && spec.n() % 2 == 1;
  DenseMatrix p = eigenvector_matrix(spec);
  DenseMatrix p_inv = closed ? modal_inverse(spec) : mat_inverse(p);
  return {eigenvalues(spec), nodes(spec), std::move(p), std::move(p_inv)};
}

/// A^r = P diag(lambda^r) P^-1 for odd-order family A.
inline DenseMatrix power_closed(const PowerRequest& req) {
  const FamilySpec& spec = req.spec;
  detail::require_closed_form(spec);
  const std::size_t n = spec.n();
  const std::vector<Complex> lambda = eigenvalues(spec);
  if (req.r < 0 && detail::has_zero_eigenvalue(spec, lambda))
    throw SingularMatrix("negative power of a matrix with a zero eigenvalue");

  const DenseMatrix p = modal_matrix(spec);
  const DenseMatrix p_inv = modal_inverse(spec);
  std::vector<Complex> lambda_r(n);
  for (std::size_t k = 0; k < n; ++k) lambda_r[k] = ipow(lambda[k], req.r);

  // Rows are independent; each entry is a fixed-order sum over k.
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += p(i, k) * lambda_r[k] * p_inv(k, j);
      out(i, j) = acc;
    }
  }
  if (!out.all_finite()) throw NonFiniteValue("power_closed: result overflowed");
  return out;
}

/// Dispatches odd n to the closed form (cross-checked against the oracle up to
/// options.crosscheck_max_n) and even n to the oracle.
inline PowerResult power(const PowerRequest& req, const PowerOptions& options = {}) {
  const FamilySpec& spec = req.spec;
  if (spec.family() != Family::A) throw PreconditionError("powers are defined for family A only");

  if (spec.n() % 2 == 0 || spec.n() < 3) {
    DenseMatrix value = mat_pow_oracle(build(spec).to_dense(), req.r);
    return {std::move(value), PowerMethod::Oracle, std::nullopt, std::nullopt};
  }

  DenseMatrix value = power_closed(req);
  PowerResult result{std::move(value), PowerMethod::ClosedForm, std::nullopt, std::nullopt};
  if (spec.n() <= options.crosscheck_max_n) {
    const DenseMatrix oracle = mat_pow_oracle(build(spec).to_dense(), req.r);
    const double residual = max_abs_diff(result.value, oracle);
    const double tolerance = options.crosscheck_relative_tolerance * std::max(1.0, oracle.max_abs_entry());
    result.cross_check_residual = residual;
    result.cross_check_tolerance = tolerance;
    if (!(residual <= tolerance)) throw CrossCheckFailure("closed-form power disagrees with the oracle");
  }
  return result;
}

}  // namespace tdp
