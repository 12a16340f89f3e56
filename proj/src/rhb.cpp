#include "jfactor/rhb.hpp"

#include <stdexcept>

#include "jfactor/errors.hpp"

namespace jfactor {

namespace {

std::vector<std::int64_t> cluster_starts(const Partition& p) {
  std::vector<std::int64_t> starts(static_cast<std::size_t>(p.tau()));
  std::int64_t off = 0;
  for (std::int64_t k = 1; k <= p.tau(); ++k) {
    starts[static_cast<std::size_t>(k - 1)] = off;
    off += p.part(k);
  }
  return starts;
}

RhbFactorization assemble(const Partition& p, std::vector<Rational> alphas,
                          std::vector<std::vector<Rational>> betas) {
  const std::int64_t n = p.n();
  const std::int64_t tau = p.tau();
  const auto starts = cluster_starts(p);

  std::vector<SparseMatrix::Entry> es;
  for (std::int64_t k = 1; k <= tau; ++k) {
    const std::int64_t start_k = starts[static_cast<std::size_t>(k - 1)];
    es.push_back({start_k, start_k, alphas[static_cast<std::size_t>(k - 1)]});
    for (std::int64_t i = 1; i < p.part(k); ++i) {
      es.push_back({start_k + i, start_k + i, Rational(1)});
    }

    // Coupling entries sit on the diagonal of the level-k band: the slot for
    // cluster j is offset by the sizes of the clusters between k and j.
    std::int64_t offset = 0;
    for (std::int64_t j = k + 1; j <= tau; ++j) {
      const Rational& beta = betas[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - k - 1)];
      const std::int64_t row = start_k + offset;
      const std::int64_t col = starts[static_cast<std::size_t>(j - 1)];
      es.push_back({row, col, beta});
      es.push_back({col, row, beta});
      offset += p.part(j);
    }
  }

  SparseMatrix a = SparseMatrix::from_triplets(n, n, std::move(es));
  auto seq = extract_hb_sequence(a, p);
  if (!seq) throw std::logic_error("rhb factor lost the hierarchically banded structure");
  return RhbFactorization{std::move(a), std::move(*seq), p, std::move(alphas), std::move(betas)};
}

}  // namespace

RhbFactorization rhb_factorize(const Partition& partition) {
  const std::int64_t n = partition.n();
  const std::int64_t tau = partition.tau();

  // alpha_k = n_k^2/n - n_k + 1 and beta couplings n_k n_j / n make every
  // level's block product against J_0 collapse to 1/n exactly; with tau = 1
  // the formula degenerates to the identity.
  std::vector<Rational> alphas;
  alphas.reserve(static_cast<std::size_t>(tau));
  for (std::int64_t k = 1; k <= tau; ++k) {
    const std::int64_t nk = partition.part(k);
    alphas.push_back(Rational(nk * nk, n) - nk + 1);
  }

  std::vector<std::vector<Rational>> betas(static_cast<std::size_t>(tau > 0 ? tau - 1 : 0));
  for (std::int64_t k = 1; k < tau; ++k) {
    auto& level = betas[static_cast<std::size_t>(k - 1)];
    level.reserve(static_cast<std::size_t>(tau - k));
    for (std::int64_t j = k + 1; j <= tau; ++j) {
      level.push_back(Rational(partition.part(k) * partition.part(j), n));
    }
  }

  return assemble(partition, std::move(alphas), std::move(betas));
}

RhbFactorization rhb_two_block(std::int64_t n1, std::int64_t n2) {
  const Partition p = Partition::from_parts({n1, n2});
  const std::int64_t n = n1 + n2;

  std::vector<Rational> alphas{Rational(n1 * n1, n) - n1 + 1, Rational(n2 * n2, n) - n2 + 1};
  std::vector<std::vector<Rational>> betas{{Rational(n1 * n2, n)}};
  return assemble(p, std::move(alphas), std::move(betas));
}

}  // namespace jfactor
