// Chebyshev polynomials at complex arguments.
#pragma once

#include <complex>
#include <cstdint>

#include "tdp/numkit.hpp"

namespace tdp {

/// Degree stored doubled so that both s and s + 1/2 are representable.
class ChebDegree {
 public:
  constexpr ChebDegree() = default;

  static constexpr ChebDegree integer(std::uint32_t degree) { return ChebDegree(2 * degree); }
  /// Degree (2 * half_steps - 1) / 2, i.e. 1/2, 3/2, 5/2, ... for half_steps = 1, 2, 3, ...
  static constexpr ChebDegree half_odd(std::uint32_t half_steps) {
    if (half_steps == 0) throw PreconditionError("half_odd degree needs half_steps >= 1");
    return ChebDegree(2 * half_steps - 1);
  }
  static constexpr ChebDegree from_twice(std::uint32_t twice_degree) { return ChebDegree(twice_degree); }

  constexpr std::uint32_t twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr double value() const noexcept { return twice_ / 2.0; }

  friend constexpr bool operator==(ChebDegree, ChebDegree) = default;

 private:
  constexpr explicit ChebDegree(std::uint32_t twice) : twice_(twice) {}
  std::uint32_t twice_ = 0;
};

namespace detail {

inline Complex cheb_T_recurrence(std::uint32_t degree, Complex x) {
  if (degree == 0) return 1.0;
  Complex prev{1.0};
  Complex curr = x;
  for (std::uint32_t s = 1; s < degree; ++s) {
    const Complex next = 2.0 * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace detail

/// First kind. Integer degrees use the three-term recurrence; half-integer
/// degrees use cos(s * acos(x)) on the principal branch of the complex acos.
inline Complex cheb_T(ChebDegree deg, Complex x) {
  if (deg.is_integer()) return detail::cheb_T_recurrence(deg.twice() / 2, x);
  if (x.imag() == 0.0 && x.real() >= -1.0 && x.real() <= 1.0)
    return std::cos(deg.value() * std::acos(x.real()));
  return std::cos(deg.value() * std::acos(x));
}

inline Complex cheb_T(std::uint32_t degree, Complex x) { return cheb_T(ChebDegree::integer(degree), x); }

/// Second kind: U0 = 1, U1 = 2x, U_{n+1} = 2x U_n - U_{n-1}.
inline Complex cheb_U(std::uint32_t n, Complex x) {
  if (n == 0) return 1.0;
  Complex prev{1.0};
  Complex curr = 2.0 * x;
  for (std::uint32_t s = 1; s < n; ++s) {
    const Complex next = 2.0 * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Delta_n(t) = t Delta_{n-1}(t) - Delta_{n-2}(t), Delta_0 = 1, Delta_1 = t.
/// Characteristic-polynomial factor of the scaled family-A matrix; equals U_n(t/2).
inline Complex delta_poly(std::uint32_t n, Complex t) {
  if (n == 0) return 1.0;
  Complex prev{1.0};
  Complex curr = t;
  for (std::uint32_t s = 1; s < n; ++s) {
    const Complex next = t * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace tdp
