#pragma once

// Required-zero families built from V(p;q), W(p;q) and Z(p;q), their generic
// matrices, and the four-variant minimal generic pairs.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trop/normal_matrix.hpp"
#include "trop/ortho.hpp"

namespace trop {

// V(p;q): row p and column q zero. W(p;q): the same without the cell (p, q).
// Z(p;q): the cell (p, q) zero.
enum class AtomKind { cross, punctured_cross, cell };

struct FamilyAtom {
  AtomKind kind;
  int p;
  int q;

  friend bool operator==(const FamilyAtom&, const FamilyAtom&) = default;
};

class FamilySpec {
 public:
  explicit FamilySpec(int n);

  static FamilySpec cross(int n, int p, int q);
  static FamilySpec punctured_cross(int n, int p, int q);
  static FamilySpec cell(int n, int p, int q);

  // Parses atoms such as "V:1,2&W:2,1&Z:1,2" (1-based indices).
  static FamilySpec parse(int n, std::string_view text);

  FamilySpec& add(AtomKind kind, int p, int q);
  // Intersection of the two families: the union of their atoms.
  FamilySpec operator&(const FamilySpec& other) const;

  int order() const { return n_; }
  const std::vector<FamilyAtom>& atoms() const { return atoms_; }
  // The matrix whose zeros are exactly the required ones.
  NormalMatrix generic() const { return generic_; }
  bool contains(const NormalMatrix& a) const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<FamilyAtom> atoms_;
  NormalMatrix generic_;
};

// Indicator function of an index pair: 0 if p != q, -1 if p == q.
int pair_indicator(int p, int q);

// Index pair (k, m) and a variant 0..3 selecting the generic pair:
//   0: A = V(m;k),              B = V(k;m)
//   1: A = W(m;k) & Z(k;m),     B = W(k;m) & Z(m;k)
//   2: A = W(m;k),              B = W(k;m) & Z(m;k) & Z(k;m)
//   3: A = W(m;k) & Z(m;k) & Z(k;m), B = W(k;m)
struct MinimalVariant {
  int k = 0;
  int m = 0;
  int variant = 0;

  friend bool operator==(const MinimalVariant&, const MinimalVariant&) = default;
};

std::pair<FamilySpec, FamilySpec> minimal_family_specs(int n, const MinimalVariant& v);
std::pair<NormalMatrix, NormalMatrix> minimal_family_pair(int n, const MinimalVariant& v);

// Matches (A, B) against every generic pair, (k, m) in lexicographic order
// (k == m included), variants ascending; returns the first match.
std::optional<MinimalVariant> classify_minimal_family(const NormalMatrix& a, const NormalMatrix& b);

// Reads (k, m), k != m, off an indicator report: every off-diagonal (s, t) with
// s, t outside {k, m} is a gift with witness (k, m), (k, m) and (m, k) are
// propagation zeros, and the pair has no duplicates. Requires A != B;
// returns nullopt otherwise.
std::optional<std::pair<int, int>> recover_minimal_family(const IndicatorReport& report);

}  // namespace trop
