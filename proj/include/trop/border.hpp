#pragma once

// Bordered matrices [[B, v], [w^T, 0]] and how orthogonality transfers from
// the inner block to the bordered matrix.

#include "trop/normal_matrix.hpp"

namespace trop {

struct BorderedBlocks {
  NormalMatrix inner;   // order n-1
  BorderVector column;  // v: last column without the corner
  BorderVector row;     // w: last row without the corner

  friend bool operator==(const BorderedBlocks&, const BorderedBlocks&) = default;
};

// Requires inner order + 1 <= kMaxOrder and both vectors of the inner order.
NormalMatrix border_compose(const BorderedBlocks& blocks);
// Requires order >= 2.
BorderedBlocks border_split(const NormalMatrix& a);

// B v (column vector) and w^T B (row vector).
BorderVector times_vector(const NormalMatrix& b, const BorderVector& v);
BorderVector vector_times(const BorderVector& w, const NormalMatrix& b);
BorderVector oplus(const BorderVector& x, const BorderVector& y);

// For orthogonal inner blocks, the bordered matrices are orthogonal iff
// B1 v2 + v1, B2 v1 + v2, w1^T B2 + w2^T and w2^T B1 + w1^T are all zero.
// Throws PreconditionError if the inner blocks are not orthogonal.
bool bordered_pair_condition(const BorderedBlocks& first, const BorderedBlocks& second);

// For a self-orthogonal inner block, the bordered matrix is self-orthogonal
// iff B v and w^T B are zero. Throws PreconditionError otherwise.
bool bordered_self_condition(const BorderedBlocks& blocks);

// Row and column i must have no off-diagonal zeros. Swaps labels i and n and
// drops the last row and column. Throws PreconditionError otherwise.
NormalMatrix reduce_order(const NormalMatrix& a, int i);

}  // namespace trop
