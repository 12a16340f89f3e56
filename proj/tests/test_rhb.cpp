#include <doctest.h>

#include "helpers.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/rhb.hpp"

using namespace jfactor;
using namespace jfactor::testing;

TEST_CASE("two-block closed form") {
  SUBCASE("(2,1)") {
    const auto f = rhb_two_block(2, 1);
    CHECK(f.alphas == std::vector<Rational>{rat(1, 3), rat(1, 3)});
    CHECK(f.betas[0][0] == rat(2, 3));
    const DenseRat expected{{rat(1, 3), Rational(0), rat(2, 3)},
                            {Rational(0), Rational(1), Rational(0)},
                            {rat(2, 3), Rational(0), rat(1, 3)}};
    CHECK(f.A == from_dense_rat(expected));
    CHECK(is_exact_factor(f.A, f.partition));
  }
  SUBCASE("(1,1)") {
    // J_0 is the identity here, so the factor must equal J itself; the
    // closed form gives alpha = beta = 1/2.
    const auto f = rhb_two_block(1, 1);
    CHECK(f.alphas == std::vector<Rational>{rat(1, 2), rat(1, 2)});
    CHECK(f.betas[0][0] == rat(1, 2));
    CHECK(f.A == ones_j(2));
    CHECK(is_exact_factor(f.A, f.partition));
  }
  SUBCASE("(5,4) has a negative alpha") {
    const auto f = rhb_two_block(5, 4);
    CHECK(f.alphas[0] == rat(-11, 9));
    CHECK(is_exact_factor(f.A, f.partition));
    CHECK_FALSE(is_doubly_stochastic(f.A));
  }
  SUBCASE("rejects bad orders") {
    CHECK_THROWS_AS(rhb_two_block(1, 2), DominanceViolation);
    CHECK_THROWS_AS(rhb_two_block(2, 0), NonPositivePart);
  }
}

TEST_CASE("rhb_factorize handles the degenerate cases") {
  CHECK(rhb_factorize(Partition::from_parts({7})).A == SparseMatrix::identity(7));
  CHECK(rhb_factorize(Partition::from_parts({2, 1})).A == rhb_two_block(2, 1).A);
}

TEST_CASE("rhb on (8,4,2,1)") {
  const Partition p = Partition::from_parts({8, 4, 2, 1});
  const auto f = rhb_factorize(p);
  CHECK(nnz(f.A) == 27);
  CHECK(d_max(f.A) == 4);
  CHECK(is_exact_factor(f.A, p));
  CHECK(is_symmetric(f.A));
  CHECK(is_hierarchically_banded(f.A, p));
}

TEST_CASE("rhb structure across the sweep") {
  for (const Partition& p : acceptance_sweep()) {
    const auto f = rhb_factorize(p);
    const std::int64_t n = p.n();
    const std::int64_t tau = p.tau();

    REQUIRE(is_exact_factor(f.A, p));
    REQUIRE(is_symmetric(f.A));
    REQUIRE(is_hierarchically_banded(f.A, p));
    REQUIRE(nnz(f.A) == n + tau * (tau - 1));
    if (tau >= 2) REQUIRE(d_max(f.A) == tau);

    // Per level: tau-k band entries at the slots offset by the sizes of the
    // clusters in between, each equal to n_k n_j / n.
    const auto seq = extract_hb_sequence(f.A, p);
    REQUIRE(seq.has_value());
    for (std::int64_t k = 1; k < tau; ++k) {
      const SparseMatrix band = submatrix(seq->matrices[static_cast<std::size_t>(k - 1)], 0,
                                          p.part(k), p.part(k), p.m(k));
      REQUIRE(nnz(band) == tau - k);
      std::int64_t offset = 0;
      for (std::int64_t j = k + 1; j <= tau; ++j) {
        REQUIRE(band.at(offset % p.part(k), offset) == Rational(p.part(k) * p.part(j), n));
        offset += p.part(j);
      }
      REQUIRE(f.betas[static_cast<std::size_t>(k - 1)].size() ==
              static_cast<std::size_t>(tau - k));
    }

    // Alphas land on the first diagonal slot of each cluster.
    std::int64_t start = 0;
    for (std::int64_t k = 1; k <= tau; ++k) {
      REQUIRE(f.A.at(start, start) == f.alphas[static_cast<std::size_t>(k - 1)]);
      REQUIRE(f.alphas[static_cast<std::size_t>(k - 1)] ==
              Rational(p.part(k) * p.part(k), n) - p.part(k) + 1);
      start += p.part(k);
    }
  }
}

TEST_CASE("rhb exact identity for larger partitions") {
  for (const Partition& p : large_sweep()) {
    REQUIRE(is_exact_factor(rhb_factorize(p).A, p));
  }
}

TEST_CASE("tail levels reuse the same denominator as the top level") {
  // The trailing two-block of (3,2,1) keeps denominator n = 6; a variant
  // built with the tail solved against 1/(n_2+n_3) breaks the identity.
  const Partition p = Partition::from_parts({3, 2, 1});
  const auto f = rhb_factorize(p);
  const SparseMatrix tail = submatrix(f.A, 3, 3, 3, 3);
  const DenseRat expected{{rat(-1, 3), Rational(0), rat(1, 3)},
                          {Rational(0), Rational(1), Rational(0)},
                          {rat(1, 3), Rational(0), rat(1, 6)}};
  CHECK(tail == from_dense_rat(expected));

  SUBCASE("the per-level rescaled variant fails the exact identity") {
    std::vector<SparseMatrix::Entry> es;
    for (const auto& e : f.A.entries()) {
      if (e.row < 3 || e.col < 3) es.push_back(e);
    }
    // Tail replaced by the two-block closed form of order 3 (denominator 3).
    const auto local = rhb_two_block(2, 1);
    for (const auto& e : local.A.entries()) es.push_back({e.row + 3, e.col + 3, e.value});
    const SparseMatrix variant = SparseMatrix::from_triplets(6, 6, std::move(es));
    CHECK(is_hierarchically_banded(variant, p));
    CHECK_FALSE(is_exact_factor(variant, p));
  }
}
