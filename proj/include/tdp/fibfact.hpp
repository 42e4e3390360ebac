// Fibonacci polynomials, Fibonacci and Pell numbers, and the determinant
// factorizations obtained from the families A (a = x, b = i) and A-dagger
// (a = 1 or 2, b = i).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "tdp/numkit.hpp"
#include "tdp/specmat.hpp"

namespace tdp {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr Complex kI{0.0, 1.0};

/// lhs and rhs of an identity together with |lhs - rhs| / max(1, |rhs|).
struct IdentityCheck {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
};

inline IdentityCheck make_check(Complex lhs, Complex rhs) {
  return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))};
}

/// F_n(x) with F_0 = 0, F_1 = 1, F_n = x F_{n-1} + F_{n-2}.
template <typename Scalar>
Scalar fib_poly_generic(std::uint32_t n, const Scalar& x) {
  Scalar prev{0};
  Scalar curr{1};
  if (n == 0) return prev;
  for (std::uint32_t s = 1; s < n; ++s) {
    Scalar next = x * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

inline Complex fib_poly(std::uint32_t n, Complex x) { return fib_poly_generic<Complex>(n, x); }

/// Exact lane for integer arguments.
inline BigInt fib_poly(std::uint32_t n, const BigInt& x) { return fib_poly_generic<BigInt>(n, x); }

inline BigInt fib(std::uint32_t n) { return fib_poly(n, BigInt{1}); }
inline BigInt pell(std::uint32_t n) { return fib_poly(n, BigInt{2}); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// det(A) with a = x, b = i against (x^2 + 4) F_{n-1}(x).
inline IdentityCheck detA_fibpoly_check(std::size_t n, Complex x) {
  if (n < 3) throw PreconditionError("detA_fibpoly_check needs n >= 3");
  const Complex lhs = tridiag_det(build(FamilySpec(Family::A, n, x, kI)));
  const Complex rhs = (x * x + 4.0) * fib_poly(static_cast<std::uint32_t>(n - 1), x);
  return make_check(lhs, rhs);
}

/// cos(k pi / d) via sin of the complementary angle; exactly 0 when 2k = d
/// and exactly antisymmetric under k -> d - k.
inline double cos_pi_ratio(std::size_t k, std::size_t d) {
  const double num = static_cast<double>(d) - 2.0 * static_cast<double>(k);
  return std::sin(std::numbers::pi * num / (2.0 * static_cast<double>(d)));
}

/// (1 / (x^2 + 4)) * prod_{k=1..n} (x + 2i cos((k-1) pi / (n-1))); equals F_{n-1}(x).
inline Complex fibpoly_factor_product(std::size_t n, Complex x) {
  if (n < 3) throw PreconditionError("fibpoly_factor_product needs n >= 3");
  const Complex denom = x * x + 4.0;
  if (std::abs(denom) <= 1e-12 * std::max(1.0, std::norm(x)))
    throw DegenerateParameter("x^2 + 4 vanishes (x = +-2i)");
  Complex prod{1.0};
  for (std::size_t k = 1; k <= n; ++k) prod *= x + 2.0 * kI * cos_pi_ratio(k - 1, n - 1);
  return prod / denom;
}

enum class DaggerVariant { Fib, Pell };

inline std::string_view to_string(DaggerVariant v) noexcept { return v == DaggerVariant::Fib ? "fib" : "pell"; }

inline Complex dagger_variant_a(DaggerVariant v) noexcept { return v == DaggerVariant::Fib ? 1.0 : 2.0; }

/// det(A-dagger) with b = i and a = 1 (Fib) or a = 2 (Pell) against
/// (1 + 2i) F_n or (2 + 2i) P_n.
inline IdentityCheck detA_dagger_check(std::size_t n, DaggerVariant variant) {
  if (n < 2) throw PreconditionError("detA_dagger_check needs n >= 2");
  const Complex a = dagger_variant_a(variant);
  const Complex lhs = tridiag_det(build(FamilySpec(Family::ADagger, n, a, kI)));
  const auto nn = static_cast<std::uint32_t>(n);
  const Complex rhs = variant == DaggerVariant::Fib ? Complex{1.0, 2.0} * to_double(fib(nn))
                                                    : Complex{2.0, 2.0} * to_double(pell(nn));
  return make_check(lhs, rhs);
}

/// Three-term Laplace expansion of det(A-dagger) over the first two and last
/// two rows:
///   (a+b)^2 D_{n-2} - 2 b^2 (a+b) D_{n-3} + b^4 D_{n-4},
/// with D_m = det tridiag_m(-b, a, -b), D_0 = 1 and D_{-1} = 0.
inline Complex dagger_laplace_det(std::size_t n, Complex a, Complex b) {
  if (n < 3) throw PreconditionError("dagger_laplace_det needs n >= 3");
  auto inner = [&](long m) -> Complex {
    if (m < 0) return 0.0;
    if (m == 0) return 1.0;
    return tridiag_det(TridiagonalMatrix::constant(static_cast<std::size_t>(m), -b, a, -b));
  };
  const auto nl = static_cast<long>(n);
  const Complex ab = a + b;
  return ab * ab * inner(nl - 2) - 2.0 * b * b * ab * inner(nl - 3) + b * b * b * b * inner(nl - 4);
}

/// prod_{k=1..n-1} (c - 2i cos(k pi / n)).
inline Complex dagger_factor_product(std::size_t n, double c) {
  if (n < 1) throw PreconditionError("factor product needs n >= 1");
  Complex prod{1.0};
  for (std::size_t k = 1; k < n; ++k) prod *= c - 2.0 * kI * cos_pi_ratio(k, n);
  return prod;
}

/// Approximates F_n.
inline Complex fib_factor_product(std::size_t n) { return dagger_factor_product(n, 1.0); }
/// Approximates P_n.
inline Complex pell_factor_product(std::size_t n) { return dagger_factor_product(n, 2.0); }

}  // namespace tdp
