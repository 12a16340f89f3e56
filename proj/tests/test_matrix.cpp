#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/rhb.hpp"
#include "jfactor/sparse_matrix.hpp"

using namespace jfactor;
using namespace jfactor::testing;

TEST_CASE("ones_j") {
  CHECK(ones_j(1) == SparseMatrix::from_triplets(1, 1, {{0, 0, Rational(1)}}));
  const SparseMatrix j2 = ones_j(2);
  CHECK(j2.at(0, 0) == rat(1, 2));
  CHECK(j2.at(1, 0) == rat(1, 2));
  CHECK(nnz(ones_j(3)) == 9);
  CHECK(d_max(ones_j(3)) == 3);
  CHECK_THROWS_AS(ones_j(0), ShapeError);

  SUBCASE("J is idempotent") {
    const SparseMatrix j3 = ones_j(3);
    CHECK(matmul(j3, j3) == j3);
  }
}

TEST_CASE("block_diag_j") {
  const Partition p = Partition::from_parts({2, 1});
  const SparseMatrix j0 = block_diag_j(p);
  const DenseRat expected{{rat(1, 2), rat(1, 2), Rational(0)},
                          {rat(1, 2), rat(1, 2), Rational(0)},
                          {Rational(0), Rational(0), Rational(1)}};
  CHECK(j0 == from_dense_rat(expected));

  SUBCASE("tau = 1 degenerates to J") {
    CHECK(block_diag_j(Partition::from_parts({5})) == ones_j(5));
  }
  SUBCASE("blocks carry 1/n_k") {
    const SparseMatrix big = block_diag_j(Partition::from_parts({8, 4, 2, 1}));
    CHECK(big.at(0, 0) == rat(1, 8));
    CHECK(big.at(8, 8) == rat(1, 4));
    CHECK(big.at(12, 13) == rat(1, 2));
    CHECK(big.at(14, 14) == 1);
    CHECK(big.at(0, 8) == 0);
    CHECK(nnz(big) == 64 + 16 + 4 + 1);
  }
  SUBCASE("blockwise idempotence") { CHECK(matmul(j0, j0) == j0); }
}

TEST_CASE("matmul matches a dense triple-loop oracle") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::int64_t> dims(1, 20);
  for (int rep = 0; rep < 60; ++rep) {
    const std::int64_t r = dims(rng), k = dims(rng), c = dims(rng);
    const SparseMatrix a = random_sparse(rng, r, k);
    const SparseMatrix b = random_sparse(rng, k, c);
    const SparseMatrix fast = matmul(a, b);
    const SparseMatrix slow = from_dense_rat(dense_matmul(to_dense_rat(a), to_dense_rat(b)));
    REQUIRE(fast == slow);
  }
}

TEST_CASE("matmul basics") {
  std::mt19937 rng(3);
  const SparseMatrix a = random_sparse(rng, 4, 4);
  CHECK(matmul(SparseMatrix::identity(4), a) == a);
  CHECK(matmul(a, SparseMatrix::identity(4)) == a);
  CHECK_THROWS_AS(matmul(SparseMatrix(2, 3), SparseMatrix(2, 3)), ShapeError);
}

TEST_CASE("from_triplets canonicalizes") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      2, 2, {{0, 0, rat(1, 2)}, {0, 0, rat(1, 2)}, {1, 1, rat(1, 3)}, {1, 1, rat(-1, 3)}});
  CHECK(nnz(m) == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 0);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(1, 1, {{0, 1, Rational(1)}}), ShapeError);
}

TEST_CASE("is_doubly_stochastic") {
  CHECK(is_doubly_stochastic(ones_j(4)));
  CHECK(is_doubly_stochastic(SparseMatrix::identity(3)));
  // The two-block factor for (5,4) carries a negative diagonal entry.
  const auto rhb54 = rhb_two_block(5, 4);
  CHECK(rhb54.alphas[0] == rat(-11, 9));
  CHECK_FALSE(is_doubly_stochastic(rhb54.A));
  CHECK_FALSE(is_doubly_stochastic(SparseMatrix(2, 3)));
  CHECK_FALSE(is_doubly_stochastic(SparseMatrix(2, 2)));
  CHECK_FALSE(is_doubly_stochastic(SparseMatrix::identity(2).scaled(rat(1, 2))));
}

TEST_CASE("hierarchically banded predicate") {
  const Partition p21 = Partition::from_parts({2, 1});
  CHECK(is_hierarchically_banded(SparseMatrix::identity(3), p21));
  CHECK(is_hierarchically_banded(SparseMatrix(3, 3), p21));
  CHECK_FALSE(is_hierarchically_banded(ones_j(3), p21));

  const Partition p = Partition::from_parts({8, 4, 2, 1});
  CHECK(is_hierarchically_banded(rhb_factorize(p).A, p));

  SUBCASE("asymmetry fails") {
    const SparseMatrix skew = SparseMatrix::from_triplets(3, 3, {{0, 2, Rational(1)}});
    CHECK_FALSE(is_hierarchically_banded(skew, p21));
  }
  SUBCASE("off-band coupling fails") {
    // Nonzero at (0, n_1 + 1) is off the band diagonal for parts (2,1,1).
    const SparseMatrix m = SparseMatrix::from_triplets(
        4, 4, {{0, 3, Rational(1)}, {3, 0, Rational(1)}});
    CHECK_FALSE(is_hierarchically_banded(m, Partition::from_parts({2, 1, 1})));
  }
  SUBCASE("order mismatch is a usage error") {
    CHECK_THROWS_AS(is_hierarchically_banded(SparseMatrix::identity(4), p21), ShapeError);
  }
}

TEST_CASE("hb sequence reassembles level by level") {
  const Partition p = Partition::from_parts({3, 2, 1});
  const auto seq = extract_hb_sequence(dshb_factorize(p).A, p);
  REQUIRE(seq.has_value());
  REQUIRE(seq->matrices.size() == 3);
  for (std::int64_t k = 1; k < p.tau(); ++k) {
    const SparseMatrix& level = seq->matrices[static_cast<std::size_t>(k - 1)];
    const std::int64_t nk = p.part(k);
    const std::int64_t mk = p.m(k);
    const SparseMatrix a11 = submatrix(level, 0, 0, nk, nk);
    const SparseMatrix a12 = submatrix(level, 0, nk, nk, mk);
    const SparseMatrix& a22 = seq->matrices[static_cast<std::size_t>(k)];

    std::vector<SparseMatrix::Entry> es;
    for (const auto& e : a11.entries()) es.push_back(e);
    for (const auto& e : a12.entries()) {
      es.push_back({e.row, e.col + nk, e.value});
      es.push_back({e.col + nk, e.row, e.value});
    }
    for (const auto& e : a22.entries()) es.push_back({e.row + nk, e.col + nk, e.value});
    CHECK(SparseMatrix::from_triplets(level.rows(), level.cols(), std::move(es)) == level);
  }
}

TEST_CASE("nnz and d_max") {
  CHECK(nnz(SparseMatrix::identity(7)) == 7);
  CHECK(d_max(SparseMatrix::identity(7)) == 1);
  CHECK(nnz(ones_j(5)) == 25);
  CHECK(d_max(ones_j(5)) == 5);
  CHECK(d_max(SparseMatrix(4, 4)) == 0);

  const auto rhb = rhb_factorize(Partition::from_parts({8, 4, 2, 1}));
  CHECK(nnz(rhb.A) == 27);
  CHECK(nnz(rhb.A) == 15 + 4 * 3);  // n + tau(tau-1)
  CHECK(d_max(rhb.A) == 4);
}

TEST_CASE("structural properties over random matrices") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const SparseMatrix a = random_sparse(rng, 12, 12);
    CHECK(d_max(a) <= nnz(a));
    CHECK(nnz(a.transpose()) == nnz(a));
    CHECK(a.transpose().transpose() == a);

    // Symmetrize, then the max column count must equal d_max.
    std::vector<SparseMatrix::Entry> es;
    for (const auto& e : a.entries()) {
      es.push_back(e);
      if (e.row != e.col) es.push_back({e.col, e.row, e.value});
    }
    const SparseMatrix sym = SparseMatrix::from_triplets(12, 12, std::move(es));
    if (is_symmetric(sym)) {
      std::vector<std::int64_t> col_count(12, 0);
      for (const auto& e : sym.entries()) col_count[static_cast<std::size_t>(e.col)]++;
      CHECK(*std::max_element(col_count.begin(), col_count.end()) == d_max(sym));
    }
  }
}

TEST_CASE("max_abs_diff") {
  const SparseMatrix a = ones_j(2);
  CHECK(max_abs_diff(a, a) == 0);
  CHECK(max_abs_diff(ones_j(2), SparseMatrix::identity(2)) == rat(1, 2));
  CHECK_THROWS_AS(max_abs_diff(ones_j(2), ones_j(3)), ShapeError);

  SUBCASE("entries present on one side only count") {
    const SparseMatrix b = SparseMatrix::from_triplets(2, 2, {{0, 1, rat(3, 4)}});
    CHECK(max_abs_diff(b, SparseMatrix(2, 2)) == rat(3, 4));
  }
}

TEST_CASE("at and submatrix guard their ranges") {
  const SparseMatrix m = ones_j(3);
  CHECK_THROWS_AS(m.at(3, 0), ShapeError);
  CHECK_THROWS_AS(submatrix(m, 1, 1, 3, 3), ShapeError);
  CHECK(submatrix(m, 1, 1, 2, 2) == submatrix(m, 0, 0, 2, 2));
}
