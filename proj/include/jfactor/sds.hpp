#pragma once

#include <cstdint>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor {

// Sequential doubly stochastic factorization: the Phase-2 factor written as
// an ordered product of symmetric doubly stochastic one-peer factors.
// a_left = That^(1) ... That^(tau), a_right is the reversed product and
// equals a_left transposed.
struct SdsFactorization {
  std::vector<SparseMatrix> t_factors;    // T^(1) .. T^(tau), T^(k) of order m_{k-1}
  std::vector<SparseMatrix> hat_factors;  // That^(k) = I_{n - m_{k-1}} (+) T^(k), order n
  SparseMatrix a_left;
  SparseMatrix a_right;
  Partition partition;
};

// T^(k) built from the DSHB scaled sequence: the level-k blocks with the
// trailing part replaced by (m_k/m_{k-1}) I. T^(tau) is the identity.
// The level is 1-based.
SparseMatrix t_factor(const Partition& partition, std::int64_t level);

SdsFactorization sds_factorize(const Partition& partition);

// V^(tau) = I, V^(k) = T^(k) (I_{n_k} (+) V^(k+1)); V^(1) reproduces a_left
// through an independent association order, which makes it a useful oracle.
std::vector<SparseMatrix> v_recursion(const Partition& partition);

}  // namespace jfactor
