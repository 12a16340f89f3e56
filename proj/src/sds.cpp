#include "jfactor/sds.hpp"

#include <stdexcept>

#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"

namespace jfactor {

namespace {

// T^(k) keeps the level-k blocks of Atilde^(k) and replaces the trailing
// block with (m_k/m_{k-1}) I, which restores double stochasticity with at
// most two nonzeros per row.
SparseMatrix t_from_scaled(const SparseMatrix& scaled_k, const Partition& p, std::int64_t k) {
  const std::int64_t nk = p.part(k);
  const std::int64_t mk = p.m(k);
  const std::int64_t mk_prev = p.m(k - 1);

  std::vector<SparseMatrix::Entry> es;
  for (const auto& e : scaled_k.entries()) {
    if (e.row < nk || e.col < nk) es.push_back(e);
  }
  const Rational tail(mk, mk_prev);
  for (std::int64_t i = 0; i < mk; ++i) es.push_back({nk + i, nk + i, tail});
  return SparseMatrix::from_triplets(mk_prev, mk_prev, std::move(es));
}

std::vector<SparseMatrix> build_t_factors(const Partition& p) {
  const auto dshb = dshb_factorize(p);
  const std::int64_t tau = p.tau();
  std::vector<SparseMatrix> ts(static_cast<std::size_t>(tau));
  for (std::int64_t k = 1; k < tau; ++k) {
    ts[static_cast<std::size_t>(k - 1)] =
        t_from_scaled(dshb.scaled_sequence[static_cast<std::size_t>(k - 1)], p, k);
  }
  ts[static_cast<std::size_t>(tau - 1)] = SparseMatrix::identity(p.part(tau));
  return ts;
}

}  // namespace

SparseMatrix t_factor(const Partition& partition, std::int64_t level) {
  if (level < 1 || level > partition.tau()) {
    throw std::out_of_range("t_factor level " + std::to_string(level) + " outside [1, " +
                            std::to_string(partition.tau()) + "]");
  }
  if (level == partition.tau()) return SparseMatrix::identity(partition.part(level));
  const auto dshb = dshb_factorize(partition);
  return t_from_scaled(dshb.scaled_sequence[static_cast<std::size_t>(level - 1)], partition, level);
}

SdsFactorization sds_factorize(const Partition& partition) {
  const std::int64_t n = partition.n();
  const std::int64_t tau = partition.tau();

  std::vector<SparseMatrix> ts = build_t_factors(partition);
  std::vector<SparseMatrix> hats;
  hats.reserve(ts.size());
  for (std::int64_t k = 1; k <= tau; ++k) {
    hats.push_back(direct_sum(SparseMatrix::identity(n - partition.m(k - 1)),
                              ts[static_cast<std::size_t>(k - 1)]));
  }

  SparseMatrix a_left = SparseMatrix::identity(n);
  for (const auto& hat : hats) a_left = matmul(a_left, hat);

  SparseMatrix a_right = SparseMatrix::identity(n);
  for (auto it = hats.rbegin(); it != hats.rend(); ++it) a_right = matmul(a_right, *it);

  return SdsFactorization{std::move(ts), std::move(hats), std::move(a_left), std::move(a_right),
                          partition};
}

std::vector<SparseMatrix> v_recursion(const Partition& partition) {
  const std::int64_t tau = partition.tau();
  std::vector<SparseMatrix> ts = build_t_factors(partition);

  std::vector<SparseMatrix> vs(static_cast<std::size_t>(tau));
  vs[static_cast<std::size_t>(tau - 1)] = SparseMatrix::identity(partition.part(tau));
  for (std::int64_t k = tau - 1; k >= 1; --k) {
    vs[static_cast<std::size_t>(k - 1)] =
        matmul(ts[static_cast<std::size_t>(k - 1)],
               direct_sum(SparseMatrix::identity(partition.part(k)), vs[static_cast<std::size_t>(k)]));
  }
  return vs;
}

}  // namespace jfactor
