#pragma once

#include <vector>

#include "oracle.hpp"
#include "tdp/numkit.hpp"

namespace testing_support {

inline oracle::Grid to_grid(const tdp::DenseMatrix& m) {
  oracle::Grid g(m.order(), std::vector<oracle::C>(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) g[i][j] = m(i, j);
  return g;
}

inline tdp::DenseMatrix from_grid(const oracle::Grid& g) { return tdp::DenseMatrix::from_rows(g); }

inline tdp::DenseMatrix real_matrix(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<tdp::Complex>> c(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) c[i].assign(rows[i].begin(), rows[i].end());
  return tdp::DenseMatrix::from_rows(c);
}

}  // namespace testing_support
