#pragma once

// Exhaustive and branch-and-bound searches for minimal orthogonal pairs and
// minimal self-orthogonal matrices.
//
// The bounded engine treats the second matrix as a hitting set: for a fixed A,
// every off-diagonal (i, j) with a_ij = -1 requires B to have a zero in
// {(t, j) : a_it = 0} (for A*B) and in {(i, t) : a_tj = 0} (for B*A).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/normal_matrix.hpp"

namespace trop {

using MatrixPair = std::pair<NormalMatrix, NormalMatrix>;

inline constexpr std::size_t kWitnessCap = 10000;

enum class ThetaKind { pair, self };
enum class Completeness { exhaustive, bounded_proof, upper_bound_only };

const char* to_string(ThetaKind kind);
const char* to_string(Completeness c);

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct ThetaCertificate {
  int n = 0;
  ThetaKind kind = ThetaKind::pair;
  // Pair searches: minimal weight of the pair. Self searches: zeros of A
  // minus n.
  int value = 0;
  // For self searches both members of each witness are the same matrix.
  // Sorted; at most kWitnessCap entries are kept.
  std::vector<MatrixPair> witnesses;
  std::uint64_t witness_total = 0;
  Completeness completeness = Completeness::exhaustive;
  int budget = -1;              // set for bounded_proof
  int proven_lower_bound = 0;   // every orthogonal pair has weight >= this
  bool symmetry_reduced = false;
  SearchStats stats;
};

// Zero values mean "no limit" (threads: default worker count).
struct SearchLimits {
  std::uint64_t node_limit = 0;
  double time_limit_seconds = 0.0;
  int threads = 0;
};

inline constexpr int kMaxExhaustivePairOrder = 4;
inline constexpr int kMaxExhaustiveSelfOrder = 5;
inline constexpr int kMaxBoundedOrder = 6;

// Brute force over all ordered pairs. Lists every minimal pair.
ThetaCertificate exhaustive_pair_minimum(int n, const SearchLimits& limits = {});

// Decides whether an orthogonal pair of weight <= budget exists, up to the
// symmetries (A, B) -> (B, A), (A, B) -> (A^T, B^T) and simultaneous
// conjugation by permutations. Requires n <= 6 and budget <= 4n - 7.
//   - if one exists, value is the true minimum and all minimal pairs are
//     listed (completeness exhaustive);
//   - otherwise, if a pair of weight budget + 1 exists, the certificate is a
//     bounded proof with such witnesses;
//   - otherwise only the generic upper bound 4n - 6 is attached.
// Throws ResourceExhausted when a limit is hit.
ThetaCertificate bounded_pair_minimum(int n, int budget, const SearchLimits& limits = {});

// Brute force over all matrices A with A*A = Z.
ThetaCertificate exhaustive_self_minimum(int n, const SearchLimits& limits = {});

// Every orthogonal pair with weight <= max_weight, each exactly once, sorted.
// Requires n <= 6 and max_weight <= 4n - 6.
std::vector<MatrixPair> enumerate_orthogonal_pairs(int n, int max_weight,
                                                   const SearchLimits& limits = {});

struct TheoremCheck {
  int n = 0;
  int minimum = 0;                   // minimal weight (exhaustive orders) or 4n - 6
  std::uint64_t minimal_pairs = 0;   // exhaustive orders only
  std::uint64_t family_pairs = 0;    // generic pairs with A != B, k != m
  // n = 2, 3, 4: whether minimal pairs are exactly the family pairs.
  std::optional<bool> equivalence;
  // Every family pair is orthogonal with weight 4n-6, 4n-6 propagation zeros
  // and (n-2)(n-3) gift zeros.
  bool forward = false;
  std::vector<MatrixPair> minimal_outside_family;  // sorted
  std::vector<MatrixPair> family_not_minimal;      // sorted
};

// n in {2, 3, 4} (exhaustive comparison) or 7..10 (forward direction only).
TheoremCheck check_minimality_theorem(int n, const SearchLimits& limits = {});

// Symmetry group used by the bounded search: for each permutation p and each
// transpose flag, the map sending A to the matrix with a zero at (p(i), p(j))
// (or (p(j), p(i))) for every zero (i, j) of A.
class PairSymmetry {
 public:
  explicit PairSymmetry(int n);
  int order() const { return n_; }
  int size() const { return static_cast<int>(tables_.size() / (n_ * (1u << n_))); }
  std::uint64_t apply(int g, const NormalMatrix& a) const;
  // True iff no image of `a` has a smaller off-diagonal mask.
  bool is_canonical(const NormalMatrix& a) const;

 private:
  int n_;
  std::vector<std::uint64_t> tables_;  // [g][row][row mask]
};

}  // namespace trop
