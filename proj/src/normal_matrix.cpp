#include "trop/normal_matrix.hpp"

#include <bit>

#include "trop/error.hpp"

namespace trop {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidArgument("matrix order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxOrder) + "]");
  }
}

void check_off_diagonal(int n, int i, int j) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) {
    throw InvalidArgument("diagonal position (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") cannot be -1 in a normal matrix");
  }
}

}  // namespace

void check_index(int n, int i) {
  if (i < 0 || i >= n) {
    throw InvalidArgument("index " + std::to_string(i + 1) + " outside [1, " + std::to_string(n) +
                          "]");
  }
}

void check_same_order(const NormalMatrix& a, const NormalMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatch(a.order(), b.order());
}

NormalMatrix::NormalMatrix(int n) : n_(n) {
  check_order(n);
  for (int i = 0; i < n; ++i) set_zero(i, i);
}

void NormalMatrix::set_zero(int i, int j) {
  rows_[i] |= static_cast<LineMask>(1u << j);
  cols_[j] |= static_cast<LineMask>(1u << i);
}

void NormalMatrix::clear_zero(int i, int j) {
  rows_[i] &= static_cast<LineMask>(~(1u << j));
  cols_[j] &= static_cast<LineMask>(~(1u << i));
}

NormalMatrix NormalMatrix::identity(int n) { return NormalMatrix(n); }

NormalMatrix NormalMatrix::all_zero(int n) {
  NormalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.rows_[i] = full_line(n);
    m.cols_[i] = full_line(n);
  }
  return m;
}

NormalMatrix NormalMatrix::single_minus(int n, int i, int j) {
  check_order(n);
  check_off_diagonal(n, i, j);
  NormalMatrix m = all_zero(n);
  m.clear_zero(i, j);
  return m;
}

NormalMatrix NormalMatrix::single_zero(int n, int i, int j) {
  check_order(n);
  check_off_diagonal(n, i, j);
  NormalMatrix m(n);
  m.set_zero(i, j);
  return m;
}

NormalMatrix NormalMatrix::from_rows(std::span<const LineMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  NormalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~full_line(n)) != 0) {
      throw InvalidArgument("row " + std::to_string(i + 1) + " has bits beyond column " +
                            std::to_string(n));
    }
    if (!((rows[i] >> i) & 1u)) {
      throw InvalidArgument("diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 0");
    }
    for (int j = 0; j < n; ++j) {
      if ((rows[i] >> j) & 1u) m.set_zero(i, j);
    }
  }
  return m;
}

NormalMatrix NormalMatrix::with_zero(int i, int j) const {
  check_index(n_, i);
  check_index(n_, j);
  NormalMatrix m = *this;
  m.set_zero(i, j);
  return m;
}

NormalMatrix NormalMatrix::with_minus_one(int i, int j) const {
  check_off_diagonal(n_, i, j);
  NormalMatrix m = *this;
  m.clear_zero(i, j);
  return m;
}

bool NormalMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] != (1u << i)) return false;
  }
  return true;
}

bool NormalMatrix::is_all_zero() const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] != full_line(n_)) return false;
  }
  return true;
}

NormalMatrix oplus(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < a.order(); ++i) rows[i] = a.row(i) | b.row(i);
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(a.order())});
}

// Entry (i, j) of the product is 0 iff some t has a_it = 0 and b_tj = 0, so
// row i of the product is the union of the rows of b indexed by row i of a.
NormalMatrix odot(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  const int n = a.order();
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < n; ++i) {
    LineMask acc = 0;
    for (LineMask r = a.row(i); r != 0; r &= static_cast<LineMask>(r - 1)) {
      acc |= b.row(std::countr_zero(r));
    }
    rows[i] = acc;
  }
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

NormalMatrix transpose(const NormalMatrix& a) {
  std::array<LineMask, kMaxOrder> rows{};
  for (int j = 0; j < a.order(); ++j) rows[j] = a.col(j);
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(a.order())});
}

NormalMatrix conjugate_by_transposition(const NormalMatrix& a, int i, int j) {
  const int n = a.order();
  check_index(n, i);
  check_index(n, j);
  auto relabel = [i, j](int x) { return x == i ? j : (x == j ? i : x); };
  std::array<LineMask, kMaxOrder> rows{};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (a.is_zero_at(r, c)) rows[relabel(r)] |= static_cast<LineMask>(1u << relabel(c));
    }
  }
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

int zero_count(const NormalMatrix& a) {
  int count = 0;
  for (LineMask r : a.rows()) count += std::popcount(r);
  return count;
}

int row_zero_count(const NormalMatrix& a, int i) {
  check_index(a.order(), i);
  return std::popcount(a.row(i));
}

int pair_row_weight(const NormalMatrix& a, const NormalMatrix& b, int i) {
  check_same_order(a, b);
  return row_zero_count(a, i) + row_zero_count(b, i) - 2;
}

int pair_weight(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  return zero_count(a) + zero_count(b) - 2 * a.order();
}

int offdiag_cell_count(int n) { return n * (n - 1); }

NormalMatrix from_offdiag_mask(int n, std::uint64_t mask) {
  std::array<LineMask, kMaxOrder> rows{};
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    rows[i] = static_cast<LineMask>(1u << i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> bit) & 1u) rows[i] |= static_cast<LineMask>(1u << j);
      ++bit;
    }
  }
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::uint64_t offdiag_mask(const NormalMatrix& a) {
  const int n = a.order();
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.is_zero_at(i, j)) mask |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return mask;
}

}  // namespace trop
