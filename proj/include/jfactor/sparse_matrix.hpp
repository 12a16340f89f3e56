#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/rational.hpp"

namespace jfactor {

// Coordinate-format sparse matrix over exact rationals. Entries are kept
// sorted row-major with no explicit zeros and no duplicate coordinates, so
// nnz and equality are well defined. Instances are immutable values.
class SparseMatrix {
 public:
  struct Entry {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Rational value;

    bool operator==(const Entry&) const = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::int64_t rows, std::int64_t cols);

  // Sums duplicate coordinates and drops exact zeros.
  static SparseMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                    std::vector<Entry> triplets);
  static SparseMatrix identity(std::int64_t n);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Zero for coordinates without a stored entry.
  Rational at(std::int64_t row, std::int64_t col) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Rational& factor) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Entry> entries_;
};

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix submatrix(const SparseMatrix& m, std::int64_t row0, std::int64_t col0,
                       std::int64_t rows, std::int64_t cols);

// J of order n: every entry 1/n.
SparseMatrix ones_j(std::int64_t n);

// J_0 = J_1 (+) ... (+) J_tau for the given partition.
SparseMatrix block_diag_j(const Partition& partition);

std::int64_t nnz(const SparseMatrix& m);

// Largest node degree: maximum row nonzero count, diagonal included.
std::int64_t d_max(const SparseMatrix& m);

bool is_symmetric(const SparseMatrix& m);

// Nonnegative with every row sum and column sum exactly one.
bool is_doubly_stochastic(const SparseMatrix& m);

// Exact max over coordinates of |a - b|; shapes must agree.
Rational max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);

// Row-major doubles (rows*cols), nearest-double conversion per entry.
std::vector<double> to_dense(const SparseMatrix& m);

// Chain A^(1) .. A^(tau) of trailing principal submatrices; A^(1) is the
// full matrix and A^(k) has order m_{k-1}.
struct HBSequence {
  std::vector<SparseMatrix> matrices;
  Partition partition;
};

// Checks the hierarchically banded structure against the partition: the
// matrix is symmetric, each level's leading block of order n_k is diagonal,
// the coupling band holds nonzeros only at equal local indices, and the
// final trailing block is diagonal. Returns the sequence on success.
std::optional<HBSequence> extract_hb_sequence(const SparseMatrix& m, const Partition& partition);
bool is_hierarchically_banded(const SparseMatrix& m, const Partition& partition);

}  // namespace jfactor
