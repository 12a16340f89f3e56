#pragma once

#include <cstdint>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor {

// Sparsest hierarchically banded factor of J: per level one non-unit
// diagonal entry alpha_k and a single coupling entry per later cluster.
// Entries may be negative; the factor is not stochastic in general.
struct RhbFactorization {
  SparseMatrix A;
  HBSequence sequence;
  Partition partition;
  std::vector<Rational> alphas;              // alpha_1 .. alpha_tau
  std::vector<std::vector<Rational>> betas;  // betas[k-1][j-k-1] couples clusters k and j
};

// Closed form for tau = 2 (requires n1 >= n2 >= 1).
RhbFactorization rhb_two_block(std::int64_t n1, std::int64_t n2);

// General construction; tau = 1 yields the identity.
RhbFactorization rhb_factorize(const Partition& partition);

}  // namespace jfactor
