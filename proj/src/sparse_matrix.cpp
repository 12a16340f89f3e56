#include "jfactor/sparse_matrix.hpp"

#include <algorithm>

#include "jfactor/errors.hpp"

namespace jfactor {

namespace {

bool coord_less(const SparseMatrix::Entry& a, const SparseMatrix::Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

SparseMatrix::SparseMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

SparseMatrix SparseMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Entry> triplets) {
  SparseMatrix m(rows, cols);
  for (const Entry& e : triplets) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw ShapeError("triplet coordinate out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(), coord_less);

  m.entries_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    Entry e = std::move(triplets[i]);
    ++i;
    while (i < triplets.size() && triplets[i].row == e.row && triplets[i].col == e.col) {
      e.value += triplets[i].value;
      ++i;
    }
    if (e.value != 0) m.entries_.push_back(std::move(e));
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::int64_t n) {
  SparseMatrix m(n, n);
  m.entries_.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) m.entries_.push_back({i, i, Rational(1)});
  return m;
}

Rational SparseMatrix::at(std::int64_t row, std::int64_t col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw ShapeError("coordinate out of range");
  }
  const Entry probe{row, col, Rational()};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, coord_less);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix m(cols_, rows_);
  m.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) m.entries_.push_back({e.col, e.row, e.value});
  std::sort(m.entries_.begin(), m.entries_.end(), coord_less);
  return m;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  SparseMatrix m(rows_, cols_);
  if (factor == 0) return m;
  m.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) m.entries_.push_back({e.row, e.col, e.value * factor});
  return m;
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul shape mismatch: " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  }

  // Row offsets into b's sorted entry list.
  std::vector<std::size_t> b_row_begin(static_cast<std::size_t>(b.rows()) + 1, 0);
  for (const auto& e : b.entries()) b_row_begin[static_cast<std::size_t>(e.row) + 1]++;
  for (std::size_t i = 1; i < b_row_begin.size(); ++i) b_row_begin[i] += b_row_begin[i - 1];

  std::vector<Rational> acc(static_cast<std::size_t>(b.cols()));
  std::vector<char> used(static_cast<std::size_t>(b.cols()), 0);
  std::vector<std::int64_t> touched;

  std::vector<SparseMatrix::Entry> out;
  const auto& ae = a.entries();
  std::size_t i = 0;
  while (i < ae.size()) {
    const std::int64_t row = ae[i].row;
    for (; i < ae.size() && ae[i].row == row; ++i) {
      const std::int64_t k = ae[i].col;
      const Rational& v = ae[i].value;
      const std::size_t begin = b_row_begin[static_cast<std::size_t>(k)];
      const std::size_t end = b_row_begin[static_cast<std::size_t>(k) + 1];
      for (std::size_t idx = begin; idx < end; ++idx) {
        const auto& be = b.entries()[idx];
        const std::size_t c = static_cast<std::size_t>(be.col);
        if (!used[c]) {
          used[c] = 1;
          acc[c] = v * be.value;
          touched.push_back(be.col);
        } else {
          acc[c] += v * be.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::int64_t c : touched) {
      const std::size_t ci = static_cast<std::size_t>(c);
      if (acc[ci] != 0) out.push_back({row, c, std::move(acc[ci])});
      used[ci] = 0;
      acc[ci] = Rational();
    }
    touched.clear();
  }

  return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseMatrix::Entry> es;
  es.reserve(a.entries().size() + b.entries().size());
  for (const auto& e : a.entries()) es.push_back(e);
  for (const auto& e : b.entries()) es.push_back({e.row + a.rows(), e.col + a.cols(), e.value});
  return SparseMatrix::from_triplets(a.rows() + b.rows(), a.cols() + b.cols(), std::move(es));
}

SparseMatrix submatrix(const SparseMatrix& m, std::int64_t row0, std::int64_t col0,
                       std::int64_t rows, std::int64_t cols) {
  if (row0 < 0 || col0 < 0 || rows < 0 || cols < 0 || row0 + rows > m.rows() ||
      col0 + cols > m.cols()) {
    throw ShapeError("submatrix range out of bounds");
  }
  std::vector<SparseMatrix::Entry> es;
  for (const auto& e : m.entries()) {
    if (e.row >= row0 && e.row < row0 + rows && e.col >= col0 && e.col < col0 + cols) {
      es.push_back({e.row - row0, e.col - col0, e.value});
    }
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(es));
}

SparseMatrix ones_j(std::int64_t n) {
  if (n < 1) throw ShapeError("ones_j needs n >= 1");
  std::vector<SparseMatrix::Entry> es;
  es.reserve(static_cast<std::size_t>(n * n));
  const Rational v(1, n);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c) es.push_back({r, c, v});
  }
  return SparseMatrix::from_triplets(n, n, std::move(es));
}

SparseMatrix block_diag_j(const Partition& partition) {
  SparseMatrix out(0, 0);
  for (std::int64_t k = 1; k <= partition.tau(); ++k) {
    out = direct_sum(out, ones_j(partition.part(k)));
  }
  return out;
}

std::int64_t nnz(const SparseMatrix& m) { return static_cast<std::int64_t>(m.entries().size()); }

std::int64_t d_max(const SparseMatrix& m) {
  std::int64_t best = 0;
  std::int64_t row = -1;
  std::int64_t count = 0;
  for (const auto& e : m.entries()) {
    if (e.row != row) {
      row = e.row;
      count = 0;
    }
    ++count;
    best = std::max(best, count);
  }
  return best;
}

bool is_symmetric(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return m == m.transpose();
}

bool is_doubly_stochastic(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = static_cast<std::size_t>(m.rows());
  std::vector<Rational> row_sum(n), col_sum(n);
  for (const auto& e : m.entries()) {
    if (e.value < 0) return false;
    row_sum[static_cast<std::size_t>(e.row)] += e.value;
    col_sum[static_cast<std::size_t>(e.col)] += e.value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sum[i] != 1 || col_sum[i] != 1) return false;
  }
  return true;
}

Rational max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("max_abs_diff shape mismatch");
  }
  Rational best(0);
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  auto consider = [&best](const Rational& v) {
    Rational mag = boost::multiprecision::abs(v);
    if (mag > best) best = std::move(mag);
  };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && coord_less(ea[i], eb[j]))) {
      consider(ea[i].value);
      ++i;
    } else if (i == ea.size() || coord_less(eb[j], ea[i])) {
      consider(eb[j].value);
      ++j;
    } else {
      consider(ea[i].value - eb[j].value);
      ++i;
      ++j;
    }
  }
  return best;
}

std::vector<double> to_dense(const SparseMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.rows() * m.cols()), 0.0);
  for (const auto& e : m.entries()) {
    out[static_cast<std::size_t>(e.row * m.cols() + e.col)] = to_double(e.value);
  }
  return out;
}

std::optional<HBSequence> extract_hb_sequence(const SparseMatrix& m, const Partition& partition) {
  if (m.rows() != m.cols() || m.rows() != partition.n()) {
    throw ShapeError("hierarchically banded check needs a square matrix of order n");
  }
  if (!is_symmetric(m)) return std::nullopt;

  std::vector<SparseMatrix> seq;
  SparseMatrix cur = m;
  const std::int64_t tau = partition.tau();
  for (std::int64_t k = 1; k < tau; ++k) {
    const std::int64_t nk = partition.part(k);
    const std::int64_t mk = partition.m(k);
    for (const auto& e : cur.entries()) {
      if (e.row < nk && e.col < nk && e.row != e.col) return std::nullopt;
      if (e.row < nk && e.col >= nk && e.col - nk != e.row) return std::nullopt;
    }
    seq.push_back(cur);
    cur = submatrix(cur, nk, nk, mk, mk);
  }
  for (const auto& e : cur.entries()) {
    if (e.row != e.col) return std::nullopt;
  }
  seq.push_back(std::move(cur));
  return HBSequence{std::move(seq), partition};
}

bool is_hierarchically_banded(const SparseMatrix& m, const Partition& partition) {
  return extract_hb_sequence(m, partition).has_value();
}

}  // namespace jfactor
