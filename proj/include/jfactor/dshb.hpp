#pragma once

#include <cstdint>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor {

// Doubly stochastic hierarchically banded factor of J. The raw trailing
// blocks A^(k) are not doubly stochastic, but the scaled sequence
// Atilde^(k) = (n / m_{k-1}) A^(k) is, level by level.
struct DshbFactorization {
  SparseMatrix A;
  HBSequence sequence;                       // A^(1) .. A^(tau)
  std::vector<SparseMatrix> scaled_sequence; // Atilde^(1) .. Atilde^(tau)
  Partition partition;
};

// Closed form for tau = 2 (requires n1 >= n2 >= 1).
DshbFactorization dshb_two_block(std::int64_t n1, std::int64_t n2);

// General construction; tau = 1 yields the identity.
DshbFactorization dshb_factorize(const Partition& partition);

}  // namespace jfactor
