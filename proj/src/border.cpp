#include "trop/border.hpp"

#include "trop/error.hpp"
#include "trop/ortho.hpp"

namespace trop {

namespace {

void check_vector(const BorderVector& v, int size, const char* what) {
  if (v.size != size) throw DimensionMismatch(size, v.size);
  if ((v.zeros & ~full_line(size)) != 0) {
    throw InvalidArgument(std::string(what) + " has bits beyond its size");
  }
}

}  // namespace

NormalMatrix border_compose(const BorderedBlocks& blocks) {
  const int m = blocks.inner.order();
  if (m < 1 || m + 1 > kMaxOrder) {
    throw InvalidArgument("bordered order " + std::to_string(m + 1) + " outside [2, " +
                          std::to_string(kMaxOrder) + "]");
  }
  check_vector(blocks.column, m, "column vector");
  check_vector(blocks.row, m, "row vector");
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < m; ++i) {
    rows[i] = blocks.inner.row(i);
    if (blocks.column.is_zero_at(i)) rows[i] |= static_cast<LineMask>(1u << m);
  }
  rows[m] = static_cast<LineMask>(blocks.row.zeros | (1u << m));
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(m + 1)});
}

BorderedBlocks border_split(const NormalMatrix& a) {
  const int n = a.order();
  if (n < 2) throw InvalidArgument("splitting needs order >= 2");
  const int m = n - 1;
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < m; ++i) rows[i] = static_cast<LineMask>(a.row(i) & full_line(m));
  BorderedBlocks out;
  out.inner = NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(m)});
  out.column = {m, static_cast<LineMask>(a.col(m) & full_line(m))};
  out.row = {m, static_cast<LineMask>(a.row(m) & full_line(m))};
  return out;
}

BorderVector times_vector(const NormalMatrix& b, const BorderVector& v) {
  if (v.size != b.order()) throw DimensionMismatch(b.order(), v.size);
  BorderVector out{v.size, 0};
  for (int i = 0; i < b.order(); ++i) {
    if (b.row(i) & v.zeros) out.zeros |= static_cast<LineMask>(1u << i);
  }
  return out;
}

BorderVector vector_times(const BorderVector& w, const NormalMatrix& b) {
  if (w.size != b.order()) throw DimensionMismatch(b.order(), w.size);
  BorderVector out{w.size, 0};
  for (int j = 0; j < b.order(); ++j) {
    if (b.col(j) & w.zeros) out.zeros |= static_cast<LineMask>(1u << j);
  }
  return out;
}

BorderVector oplus(const BorderVector& x, const BorderVector& y) {
  if (x.size != y.size) throw DimensionMismatch(x.size, y.size);
  return {x.size, static_cast<LineMask>(x.zeros | y.zeros)};
}

bool bordered_pair_condition(const BorderedBlocks& first, const BorderedBlocks& second) {
  check_same_order(first.inner, second.inner);
  if (!is_orthogonal(first.inner, second.inner)) {
    throw PreconditionError("inner blocks are not orthogonal");
  }
  const auto& [b1, v1, w1] = first;
  const auto& [b2, v2, w2] = second;
  return oplus(times_vector(b1, v2), v1).is_all_zero() &&
         oplus(times_vector(b2, v1), v2).is_all_zero() &&
         oplus(vector_times(w1, b2), w2).is_all_zero() &&
         oplus(vector_times(w2, b1), w1).is_all_zero();
}

bool bordered_self_condition(const BorderedBlocks& blocks) {
  if (!is_self_orthogonal(blocks.inner)) {
    throw PreconditionError("inner block is not self-orthogonal");
  }
  return times_vector(blocks.inner, blocks.column).is_all_zero() &&
         vector_times(blocks.row, blocks.inner).is_all_zero();
}

NormalMatrix reduce_order(const NormalMatrix& a, int i) {
  const int n = a.order();
  if (n < 2) throw InvalidArgument("reduction needs order >= 2");
  check_index(n, i);
  const LineMask diag = static_cast<LineMask>(1u << i);
  if (a.row(i) != diag || a.col(i) != diag) {
    throw PreconditionError("row and column " + std::to_string(i + 1) +
                            " must have no off-diagonal zeros");
  }
  return border_split(conjugate_by_transposition(a, n - 1, i)).inner;
}

}  // namespace trop
