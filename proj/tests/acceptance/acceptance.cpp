// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tdp/chebyshev.hpp"
#include "tdp/cli.hpp"
#include "tdp/errata.hpp"
#include "tdp/fibfact.hpp"
#include "tdp/numkit.hpp"
#include "tdp/powers.hpp"
#include "tdp/specmat.hpp"
#include "tdp/verify.hpp"

namespace {

using tdp::Complex;
using tdp::DenseMatrix;
using tdp::Family;
using tdp::FamilySpec;

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Tracks the worst deviation against one tolerance.
struct Worst {
  double tolerance;
  double value = 0.0;
  bool ok = true;
  std::size_t cases = 0;
  void add(double d) {
    ++cases;
    if (!(d <= tolerance)) ok = false;
    if (std::isnan(d) || d > value) value = d;
  }
  std::string str() const {
    std::ostringstream s;
    s << "worst=" << value << " tol=" << tolerance << " cases=" << cases;
    return s.str();
  }
};

DenseMatrix integer_matrix(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<Complex>> c;
  for (const auto& r : rows) c.emplace_back(r.begin(), r.end());
  return DenseMatrix::from_rows(c);
}

DenseMatrix naive_power(const FamilySpec& spec, unsigned r) {
  oracle::Grid g(spec.n(), std::vector<oracle::C>(spec.n()));
  const DenseMatrix d = tdp::build(spec).to_dense();
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j) g[i][j] = d(i, j);
  return DenseMatrix::from_rows(oracle::naive_power(g, r));
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

Outcome example1_spectrum() {
  const auto l = tdp::eigenvalues(FamilySpec(Family::A, 3, 1.0, 3.0));
  std::vector<Complex> remaining = l;
  bool ok = l.size() == 3;
  for (double want : {1.0, 7.0, -5.0}) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](Complex g) { return std::abs(g - want) <= 1e-12; });
    if (it == remaining.end()) {
      ok = false;
      break;
    }
    remaining.erase(it);
  }
  std::ostringstream s;
  s << "eigenvalues {" << l[0].real() << ", " << l[1].real() << ", " << l[2].real() << "} vs {1, 7, -5}";
  return {ok, s.str()};
}

Outcome example1_power() {
  const FamilySpec spec(Family::A, 3, 1.0, 3.0);
  const DenseMatrix closed = tdp::power_closed({spec, 3});
  const DenseMatrix oracle = tdp::mat_pow_oracle(tdp::build(spec).to_dense(), 3);
  const DenseMatrix printed = integer_matrix({{55, 234, 54}, {117, 109, 117}, {54, 234, 55}});
  const double d_oracle = tdp::max_abs_diff(closed, oracle);
  const double d_printed = tdp::max_abs_diff(closed, printed);
  const bool naive_exact = naive_power(spec, 3) == printed;
  const tdp::cli::Report rep = tdp::cli::run_power(spec, 3, 64);
  const bool note = has_note(rep.errata_notes, "1/4");
  std::ostringstream s;
  s << "closed-vs-oracle=" << d_oracle << " (tol 1e-9) closed-vs-printed=" << d_printed
    << " naive-exact=" << naive_exact << " errata-note=" << note;
  return {d_oracle <= 1e-9 && d_printed <= 1e-9 && naive_exact && note, s.str()};
}

Outcome example2_power() {
  const FamilySpec spec(Family::A, 5, 1.0, 3.0);
  const DenseMatrix closed = tdp::power_closed({spec, 4});
  const DenseMatrix oracle = tdp::mat_pow_oracle(tdp::build(spec).to_dense(), 4);
  const DenseMatrix printed = integer_matrix({{595, 672, -756, 216, 162},
                                              {336, 973, -444, 540, 108},
                                              {-378, -444, 757, -444, -378},
                                              {108, 540, -444, 973, 336},
                                              {162, 216, -756, 672, 595}});
  const double d_oracle = tdp::max_abs_diff(closed, oracle);
  const double d_printed = tdp::max_abs_diff(closed, printed);
  const bool corner = std::abs(closed(0, 0) - 595.0) <= 1e-8;
  const tdp::cli::Report rep = tdp::cli::run_power(spec, 4, 64);
  const bool note = has_note(rep.errata_notes, "1/8");
  std::ostringstream s;
  s << "closed-vs-oracle=" << d_oracle << " (tol 1e-8) closed-vs-printed=" << d_printed
    << " entry(1,1)=" << closed(0, 0).real() << " errata-note=" << note;
  return {d_oracle <= 1e-8 && d_printed <= 1e-8 && corner && note, s.str()};
}

Outcome eigen_residual_sweep() {
  Worst w{1e-10};
  const auto grid = tdp::verify::parameter_grid();
  std::size_t imaginary_b = 0;
  for (auto [a, b] : grid) {
    if (b.real() == 0.0) ++imaginary_b;
    for (std::size_t n = 3; n <= 11; n += 2) {
      const FamilySpec spec(Family::A, n, a, b);
      for (std::size_t k = 1; k <= n; ++k) w.add(tdp::eigen_residual(spec, k));
    }
    for (std::size_t n = 2; n <= 12; ++n) {
      const FamilySpec spec(Family::ADagger, n, a, b);
      for (std::size_t k = 1; k <= n; ++k) w.add(tdp::eigen_residual(spec, k));
    }
  }
  std::ostringstream s;
  s << w.str() << " pairs=" << grid.size() << " imaginary-b=" << imaginary_b;
  return {w.ok && grid.size() >= 9 && imaginary_b >= 1, s.str()};
}

Outcome modal_inverse() {
  Worst inv{1e-10}, ident{1e-10};
  for (auto [a, b] : tdp::verify::parameter_grid())
    for (std::size_t n = 3; n <= 21; n += 2) {
      const FamilySpec spec(Family::A, n, a, b);
      const DenseMatrix p = tdp::modal_matrix(spec);
      const DenseMatrix p_inv = tdp::modal_inverse(spec);
      inv.add(tdp::max_abs_diff(p_inv, tdp::mat_inverse(p)));
      ident.add(tdp::max_abs_diff(tdp::mat_mul(p, p_inv), DenseMatrix::identity(n)));
    }
  return {inv.ok && ident.ok, "vs-numeric " + inv.str() + "; P*Pinv " + ident.str()};
}

Outcome power_oracle_equivalence() {
  Worst eq{1e-8}, group{1e-8};
  for (auto [a, b] : tdp::verify::parameter_grid())
    for (std::size_t n = 3; n <= 11; n += 2) {
      const FamilySpec spec(Family::A, n, a, b);
      const bool invertible = tdp::verify::well_invertible(spec);
      const DenseMatrix dense = tdp::build(spec).to_dense();
      for (long long r = invertible ? -3 : 0; r <= 6; ++r) {
        const DenseMatrix oracle = tdp::mat_pow_oracle(dense, r);
        eq.add(tdp::max_abs_diff(tdp::power_closed({spec, r}), oracle) / oracle.max_abs_entry());
      }
      if (!invertible) continue;
      for (long long r = -2; r <= 3; ++r)
        for (long long s = -2; s <= 3; ++s) {
          const DenseMatrix ref = tdp::power_closed({spec, r + s});
          const DenseMatrix prod = tdp::mat_mul(tdp::power_closed({spec, r}), tdp::power_closed({spec, s}));
          group.add(tdp::max_abs_diff(prod, ref) / ref.max_abs_entry());
        }
    }
  return {eq.ok && group.ok, "oracle " + eq.str() + "; group-law " + group.str()};
}

Outcome theorem_det_a() {
  Worst det{1e-10}, prod{1e-9};
  for (Complex x : {Complex{1}, Complex{2}, Complex{3}, Complex{1.5}, Complex{-1}})
    for (std::size_t n = 3; n <= 15; ++n) {
      det.add(tdp::detA_fibpoly_check(n, x).residual);
      prod.add(tdp::relative_difference(tdp::fibpoly_factor_product(n, x),
                                        tdp::fib_poly(static_cast<std::uint32_t>(n - 1), x)));
    }
  return {det.ok && prod.ok, "det " + det.str() + "; product " + prod.str()};
}

Outcome theorem_det_a_dagger() {
  Worst det{1e-10}, prod{1e-9}, imag{1e-8};
  for (std::size_t n = 2; n <= 20; ++n)
    for (tdp::DaggerVariant v : {tdp::DaggerVariant::Fib, tdp::DaggerVariant::Pell})
      det.add(tdp::detA_dagger_check(n, v).residual);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto nn = static_cast<std::uint32_t>(n);
    const double f = static_cast<double>(oracle::fib_u64(nn));
    const double p = static_cast<double>(oracle::pell_u64(nn));
    const Complex fp = tdp::fib_factor_product(n), pp = tdp::pell_factor_product(n);
    prod.add(std::abs(fp.real() - f) / f);
    prod.add(std::abs(pp.real() - p) / p);
    imag.add(std::abs(fp.imag()) / fp.real());
    imag.add(std::abs(pp.imag()) / pp.real());
  }
  const bool f40 = tdp::fib(40) == 102334155;
  return {det.ok && prod.ok && imag.ok && f40,
          "det " + det.str() + "; products " + prod.str() + "; imag/real " + imag.str() +
              (f40 ? "; F40=102334155" : "; F40 mismatch")};
}

Outcome determinant_sign_flip() {
  Worst w{1e-12};
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = order(rng);
    std::vector<Complex> sub(n - 1), diag(n), sup(n - 1);
    for (auto& z : sub) z = oracle::random_complex(rng, 3.0);
    for (auto& z : diag) z = oracle::random_complex(rng, 3.0);
    for (auto& z : sup) z = oracle::random_complex(rng, 3.0);
    const tdp::TridiagonalMatrix t(sub, diag, sup);
    w.add(tdp::relative_difference(tdp::tridiag_det(t), tdp::tridiag_det(t.sign_flipped())));
  }
  return {w.ok, w.str()};
}

Outcome delta_chebyshev_bridge() {
  Worst w{1e-12};
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    Complex t = oracle::random_complex(rng, 4.0);
    if (std::abs(t) > 4.0) t *= 4.0 / std::abs(t);
    for (std::uint32_t n = 0; n <= 30; ++n) w.add(tdp::relative_difference(tdp::delta_poly(n, t), tdp::cheb_U(n, t / 2.0)));
  }
  return {w.ok, w.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1  example 1 eigenvalue set {1, 7, -5}", 1.0, example1_spectrum},
      {"AC2  example 1 power A^3 (closed form, oracle, printed integers, errata)", 1.0, example1_power},
      {"AC3  example 2 power A^4 (closed form, oracle, printed integers, errata)", 1.0, example2_power},
      {"AC4  eigen residual sweep, A odd n 3..11, A_DAGGER n 2..12", 5.0, eigen_residual_sweep},
      {"AC5  modal inverse vs numeric inverse, odd n <= 21", 5.0, modal_inverse},
      {"AC6  powers vs oracle r in -3..6, group law", 10.0, power_oracle_equivalence},
      {"AC7  det(A) = (x^2+4) F_{n-1}(x) and eigenvalue product", 2.0, theorem_det_a},
      {"AC8  det(A_DAGGER) = (1+2i)F_n, (2+2i)P_n; factor products n <= 40", 2.0, theorem_det_a_dagger},
      {"AC9  determinant sign-flip invariance, 200 random tridiagonals", 1.0, determinant_sign_flip},
      {"AC10 delta_n(t) == U_n(t/2), n <= 30", 1.0, delta_chebyshev_bridge},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_seconds;
    const bool pass = o.passed && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %s | %s | %.3fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.label, o.detail.c_str(), secs,
                c.budget_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
