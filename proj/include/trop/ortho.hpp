#pragma once

// Orthogonality, indicator matrices and the classification of indicator zeros.

#include <optional>
#include <utility>
#include <vector>

#include "trop/normal_matrix.hpp"

namespace trop {

// A and B are orthogonal iff A*B = Z = B*A.
bool is_orthogonal(const NormalMatrix& a, const NormalMatrix& b);
bool is_self_orthogonal(const NormalMatrix& a);

enum class ZeroKind { diagonal, propagation, cost, gift, nonzero };

const char* to_string(ZeroKind kind);

// Classification of one cell of the indicator matrix. Witness lists are
// complete: every k (cost) or ordered pair (k, m) (gift) that explains the
// zero is recorded, in increasing order.
struct CellClass {
  ZeroKind kind = ZeroKind::nonzero;
  std::vector<int> cost_witnesses;
  std::vector<std::pair<int, int>> gift_witnesses;
};

struct IndicatorReport {
  NormalMatrix first;      // A
  NormalMatrix second;     // B
  NormalMatrix left;       // A*B
  NormalMatrix right;      // B*A
  NormalMatrix indicator;  // zeros of left and right together
  bool same_matrices = false;
  std::vector<CellClass> cells;  // row-major, n*n entries
  int prop_count = 0;
  int cost_count = 0;
  int gift_count = 0;
  int duplicate_count = 0;  // 0 when A == B

  int order() const { return indicator.order(); }
  const CellClass& cell(int s, int t) const { return cells[s * order() + t]; }
};

// Precedence per cell: diagonal, propagation, cost, gift.
IndicatorReport indicator(const NormalMatrix& a, const NormalMatrix& b);

enum class RowKind { cost, gift, other };

struct RowType {
  RowKind kind = RowKind::other;
  int k = -1;
  int m = -1;

  friend bool operator==(const RowType&, const RowType&) = default;
};

// A cost row holds n-2 cost zeros and one propagation zero, all cost zeros
// sharing the witness k. A gift row holds n-3 gift zeros, two propagation
// zeros and has row weight 2, all gifts sharing the witness (k, m).
RowType row_type(const IndicatorReport& report, int i);

enum class VertexSet {
  all_normal,    // every normal matrix
  ortho,         // all normal matrices except I and Z
  vnl,           // members of some V(p;q), p != q, except Z
  wnl,           // members of some W(p;q), p != q, except Z
};

const char* to_string(VertexSet set);
bool in_vertex_set(VertexSet set, const NormalMatrix& a);

inline constexpr int kMaxEnumerationOrder = 5;

// Every member of the selected set orthogonal to A, in increasing order.
// Throws PreconditionError for orders above kMaxEnumerationOrder.
std::vector<NormalMatrix> orth_set(const NormalMatrix& a, VertexSet set = VertexSet::all_normal);

// Every row and column of both matrices has more than n/2 zeros.
bool majority_zero_condition(const NormalMatrix& a, const NormalMatrix& b);

// The residue pair: a_ij = 0 iff i = j or i + j = 2 mod 3, b_ij = 0 iff i + j
// is even (1-based). Orthogonal for n = 4 and n >= 6; at n = 5 row 5 has zeros
// only in odd columns and A*B fails in that row.
std::pair<NormalMatrix, NormalMatrix> residue_pair(int n);

// Z with the off-diagonal part of column n set to -1: every row has n-1 zeros
// but the matrix is not self-orthogonal.
NormalMatrix sparse_last_column(int n);

// For even n, the matrix [[Z, U], [U, Z]] with all-(-1) off-diagonal blocks:
// exactly half of every row and column is zero, not self-orthogonal.
NormalMatrix half_zero_blocks(int n);

}  // namespace trop
