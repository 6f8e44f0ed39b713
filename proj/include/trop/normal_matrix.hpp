#pragma once

// Normal matrices over the two-element max-plus semiring {0, -1}.
//
// A normal matrix has a zero diagonal and entries in {0, -1}; it is stored as
// its set of zero positions, one bit mask per row and per column. Bit j of
// row(i) is set iff entry (i, j) is 0. All indices in the C++ API are 0-based;
// text I/O and error messages are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace trop {

inline constexpr int kMaxOrder = 12;

using LineMask = std::uint16_t;

enum class Scalar : std::int8_t { minus_one = -1, zero = 0 };

constexpr Scalar oplus(Scalar a, Scalar b) {
  return (a == Scalar::zero || b == Scalar::zero) ? Scalar::zero : Scalar::minus_one;
}

constexpr Scalar odot(Scalar a, Scalar b) {
  return (a == Scalar::zero && b == Scalar::zero) ? Scalar::zero : Scalar::minus_one;
}

constexpr LineMask full_line(int n) { return static_cast<LineMask>((1u << n) - 1u); }

class NormalMatrix {
 public:
  static NormalMatrix identity(int n);
  static NormalMatrix all_zero(int n);
  // E_ij: every entry 0 except a -1 at (i, j). Requires i != j.
  static NormalMatrix single_minus(int n, int i, int j);
  // U_ij: the diagonal plus one zero at (i, j), -1 elsewhere. Requires i != j.
  static NormalMatrix single_zero(int n, int i, int j);
  // Zero masks per row; the diagonal bits must be set.
  static NormalMatrix from_rows(std::span<const LineMask> rows);

  NormalMatrix() = default;

  int order() const { return n_; }
  bool is_zero_at(int i, int j) const { return (rows_[i] >> j) & 1u; }
  Scalar entry(int i, int j) const { return is_zero_at(i, j) ? Scalar::zero : Scalar::minus_one; }
  LineMask row(int i) const { return rows_[i]; }
  LineMask col(int j) const { return cols_[j]; }
  std::span<const LineMask> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  // Returns a copy with (i, j) set to 0 (resp. -1). Setting a diagonal cell to
  // -1 throws InvalidArgument.
  NormalMatrix with_zero(int i, int j) const;
  NormalMatrix with_minus_one(int i, int j) const;

  bool is_identity() const;
  bool is_all_zero() const;

  friend bool operator==(const NormalMatrix& a, const NormalMatrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const NormalMatrix& a, const NormalMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  explicit NormalMatrix(int n);
  void set_zero(int i, int j);
  void clear_zero(int i, int j);

  int n_ = 0;
  std::array<LineMask, kMaxOrder> rows_{};
  std::array<LineMask, kMaxOrder> cols_{};
};

// A vector over {0, -1}; bit t of `zeros` is set iff coordinate t is 0.
struct BorderVector {
  int size = 0;
  LineMask zeros = 0;

  static BorderVector all_zero(int size) { return {size, full_line(size)}; }
  static BorderVector all_minus_one(int size) { return {size, 0}; }
  bool is_zero_at(int t) const { return (zeros >> t) & 1u; }
  bool is_all_zero() const { return zeros == full_line(size); }
  friend bool operator==(const BorderVector&, const BorderVector&) = default;
};

void check_index(int n, int i);
void check_same_order(const NormalMatrix& a, const NormalMatrix& b);

NormalMatrix oplus(const NormalMatrix& a, const NormalMatrix& b);
NormalMatrix odot(const NormalMatrix& a, const NormalMatrix& b);
NormalMatrix transpose(const NormalMatrix& a);
// P^{ij} A P^{ij}: swaps the labels i and j on both axes.
NormalMatrix conjugate_by_transposition(const NormalMatrix& a, int i, int j);

// Number of zero entries, diagonal included (always >= n).
int zero_count(const NormalMatrix& a);
int row_zero_count(const NormalMatrix& a, int i);
// Off-diagonal zeros of row i in both matrices: row counts of a and b minus 2.
int pair_row_weight(const NormalMatrix& a, const NormalMatrix& b, int i);
// Off-diagonal zeros of the pair: zero_count(a) + zero_count(b) - 2n.
int pair_weight(const NormalMatrix& a, const NormalMatrix& b);

// Off-diagonal cells in row-major order; bit c of an off-diagonal mask refers
// to the c-th such cell. There are n*(n-1) cells.
int offdiag_cell_count(int n);
NormalMatrix from_offdiag_mask(int n, std::uint64_t mask);
std::uint64_t offdiag_mask(const NormalMatrix& a);

// Matrix text: n lines of n glyphs, '0' for 0 and '-' for -1. The trailing
// newline is optional; a trailing '\r' on each line is tolerated.
NormalMatrix parse_matrix(std::string_view text);
std::string format_matrix(const NormalMatrix& a);

}  // namespace trop
