#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor::testing {

using DenseRat = std::vector<std::vector<Rational>>;

inline DenseRat to_dense_rat(const SparseMatrix& m) {
  DenseRat out(static_cast<std::size_t>(m.rows()),
               std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (const auto& e : m.entries()) {
    out[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
  }
  return out;
}

inline SparseMatrix from_dense_rat(const DenseRat& d) {
  std::vector<SparseMatrix::Entry> es;
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < d[r].size(); ++c) {
      if (d[r][c] != 0) {
        es.push_back({static_cast<std::int64_t>(r), static_cast<std::int64_t>(c), d[r][c]});
      }
    }
  }
  return SparseMatrix::from_triplets(static_cast<std::int64_t>(d.size()),
                                     d.empty() ? 0 : static_cast<std::int64_t>(d[0].size()),
                                     std::move(es));
}

// Independent dense triple-loop product; deliberately not routed through
// SparseMatrix::matmul so it can serve as its oracle.
inline DenseRat dense_matmul(const DenseRat& a, const DenseRat& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  DenseRat out(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// The factorization oracle: J0 A J0 == J, checked with exact arithmetic.
inline bool is_exact_factor(const SparseMatrix& a, const Partition& p) {
  const SparseMatrix j0 = block_diag_j(p);
  return max_abs_diff(matmul(matmul(j0, a), j0), ones_j(p.n())) == 0;
}

// Partitions exercised by the acceptance criteria.
inline std::vector<Partition> acceptance_sweep() {
  std::vector<Partition> sweep{
      Partition::from_parts({2, 1}),        Partition::from_parts({1, 1}),
      Partition::from_parts({3, 2}),        Partition::from_parts({3, 2, 1}),
      Partition::from_parts({8, 4, 2, 1}),  Partition::from_parts({16, 8, 4, 2, 1}),
  };
  for (std::int64_t n = 2; n <= 64; ++n) sweep.push_back(Partition::from_base(n, 2));
  for (std::int64_t n = 2; n <= 64; ++n) sweep.push_back(Partition::from_base(n, 3));
  return sweep;
}

// Larger cases for the exact-identity property tests (n up to 200).
inline std::vector<Partition> large_sweep() {
  return {
      Partition::from_base(100, 2),
      Partition::from_base(200, 2),
      Partition::from_base(200, 3),
      Partition::from_parts({100, 50, 30, 20}),
      Partition::from_parts({64, 32, 16, 8, 4, 2, 1}),
      Partition::from_parts({50, 25, 13, 8, 4}),
  };
}

inline SparseMatrix random_sparse(std::mt19937& rng, std::int64_t rows, std::int64_t cols,
                                  double density = 0.3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> numerator(-5, 5);
  std::uniform_int_distribution<int> denominator(1, 5);
  std::vector<SparseMatrix::Entry> es;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      if (coin(rng) < density) {
        es.push_back({r, c, Rational(numerator(rng), denominator(rng))});
      }
    }
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(es));
}

}  // namespace jfactor::testing
