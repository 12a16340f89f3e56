#include "jfactor/dshb.hpp"

#include <stdexcept>

#include "jfactor/errors.hpp"

namespace jfactor {

namespace {

DshbFactorization finish(const Partition& p, std::vector<SparseMatrix> scaled) {
  const std::int64_t n = p.n();
  SparseMatrix a = scaled.front();
  auto seq = extract_hb_sequence(a, p);
  if (!seq) throw std::logic_error("dshb factor lost the hierarchically banded structure");
  // The raw sequence relates to the scaled one by A^(k) = (m_{k-1}/n) Atilde^(k).
  for (std::int64_t k = 1; k <= p.tau(); ++k) {
    seq->matrices[static_cast<std::size_t>(k - 1)] =
        scaled[static_cast<std::size_t>(k - 1)].scaled(Rational(p.m(k - 1), n));
  }
  return DshbFactorization{std::move(a), std::move(*seq), std::move(scaled), p};
}

}  // namespace

DshbFactorization dshb_factorize(const Partition& partition) {
  const std::int64_t tau = partition.tau();

  std::vector<SparseMatrix> scaled(static_cast<std::size_t>(tau));
  scaled[static_cast<std::size_t>(tau - 1)] = SparseMatrix::identity(partition.part(tau));

  // Bottom-up: Atilde^(k) wraps Atilde^(k+1), rescaled by m_k/m_{k-1}, with
  // a uniform (m_k/m_{k-1}, ..., 1, ...) diagonal and an n_k/m_{k-1} band of
  // width m_k. Every Atilde^(k) is doubly stochastic.
  for (std::int64_t k = tau - 1; k >= 1; --k) {
    const std::int64_t nk = partition.part(k);
    const std::int64_t mk = partition.m(k);
    const std::int64_t mk_prev = partition.m(k - 1);

    std::vector<SparseMatrix::Entry> es;
    const Rational diag(mk, mk_prev);
    const Rational band(nk, mk_prev);
    for (std::int64_t i = 0; i < mk; ++i) {
      es.push_back({i, i, diag});
      es.push_back({i, nk + i, band});
      es.push_back({nk + i, i, band});
    }
    for (std::int64_t i = mk; i < nk; ++i) es.push_back({i, i, Rational(1)});

    const Rational scale(mk, mk_prev);
    for (const auto& e : scaled[static_cast<std::size_t>(k)].entries()) {
      es.push_back({nk + e.row, nk + e.col, e.value * scale});
    }
    scaled[static_cast<std::size_t>(k - 1)] = SparseMatrix::from_triplets(mk_prev, mk_prev, std::move(es));
  }

  return finish(partition, std::move(scaled));
}

DshbFactorization dshb_two_block(std::int64_t n1, std::int64_t n2) {
  const Partition p = Partition::from_parts({n1, n2});
  const std::int64_t n = n1 + n2;

  // diag((n2/n) 1_{n2}) (+) I_{n1-n2} on top, an (n1/n) I_{n2} band, and
  // (n2/n) I_{n2} in the trailing corner.
  std::vector<SparseMatrix::Entry> es;
  const Rational small(n2, n);
  const Rational big(n1, n);
  for (std::int64_t i = 0; i < n2; ++i) {
    es.push_back({i, i, small});
    es.push_back({i, n1 + i, big});
    es.push_back({n1 + i, i, big});
    es.push_back({n1 + i, n1 + i, small});
  }
  for (std::int64_t i = n2; i < n1; ++i) es.push_back({i, i, Rational(1)});

  std::vector<SparseMatrix> scaled(2);
  scaled[0] = SparseMatrix::from_triplets(n, n, std::move(es));
  scaled[1] = SparseMatrix::identity(n2);
  return finish(p, std::move(scaled));
}

}  // namespace jfactor
