#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <set>

#include "tdp/verify.hpp"

namespace {

TEST(Verify, DefaultSweepPasses) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = tdp::verify::run_all();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 60.0);
  std::set<std::string> modules;
  for (const auto& r : results) {
    modules.insert(r.module);
    EXPECT_TRUE(r.passed) << r.module << ": " << r.name << " worst=" << r.worst << " tol=" << r.tolerance;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
  EXPECT_EQ(modules, (std::set<std::string>{"numkit", "chebyshev", "specmat", "powers", "fibfact"}));
}

TEST(Verify, GridHasImaginaryOffDiagonals) {
  const auto grid = tdp::verify::parameter_grid();
  EXPECT_GE(grid.size(), 9u);
  int imaginary = 0;
  for (auto [a, b] : grid)
    if (b.real() == 0.0 && b.imag() != 0.0) ++imaginary;
  EXPECT_GE(imaginary, 1);
}

TEST(Verify, MaxNExtendsBounds) {
  const auto c = tdp::verify::Config::with_max_n(25);
  EXPECT_EQ(c.max_n_family_a, 25u);
  EXPECT_EQ(c.max_n_dagger, 25u);
  EXPECT_EQ(c.max_n_modal, 25u);
  EXPECT_EQ(c.max_n_sequence, 40u);
  const auto small = tdp::verify::Config::with_max_n(5);
  EXPECT_EQ(small.max_n_family_a, 11u);
}

TEST(Verify, EnvironmentOverride) {
  ::setenv("VERIFY_MAX_N", "30", 1);
  EXPECT_EQ(tdp::verify::Config::from_environment().max_n_det, 30u);
  ::setenv("VERIFY_MAX_N", "junk", 1);
  EXPECT_EQ(tdp::verify::Config::from_environment().max_n_det, 15u);
  ::unsetenv("VERIFY_MAX_N");
  EXPECT_EQ(tdp::verify::Config::from_environment().max_n_det, 15u);
}

TEST(Verify, ExtendedSweepStillPasses) {
  for (const auto& r : tdp::verify::run_all(tdp::verify::Config::with_max_n(25)))
    EXPECT_TRUE(r.passed) << r.module << ": " << r.name << " worst=" << r.worst;
}

}  // namespace
