#include "trop/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>

#include "trop/error.hpp"
#include "trop/families.hpp"
#include "trop/ortho.hpp"
#include "trop/parallel.hpp"

namespace trop {

const char* to_string(ThetaKind kind) { return kind == ThetaKind::pair ? "pair" : "self"; }

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::exhaustive: return "exhaustive";
    case Completeness::bounded_proof: return "bounded_proof";
    case Completeness::upper_bound_only: return "upper_bound_only";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  explicit Meter(const SearchLimits& limits) : limits_(limits), start_(Clock::now()) {}

  void add(std::uint64_t k) {
    const std::uint64_t total = nodes_.fetch_add(k, std::memory_order_relaxed) + k;
    if (limits_.node_limit != 0 && total > limits_.node_limit) {
      throw ResourceExhausted("node limit " + std::to_string(limits_.node_limit) +
                              " exceeded; result inconclusive");
    }
    if (limits_.time_limit_seconds > 0 && elapsed() > limits_.time_limit_seconds) {
      throw ResourceExhausted("time limit exceeded; result inconclusive");
    }
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  int threads() const { return limits_.threads; }

 private:
  SearchLimits limits_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Batches node counts so the shared counter is touched rarely.
class LocalMeter {
 public:
  explicit LocalMeter(Meter& meter) : meter_(meter) {}
  LocalMeter(const LocalMeter&) = delete;
  LocalMeter& operator=(const LocalMeter&) = delete;

  void tick() {
    if (++pending_ == 4096) flush();
  }
  void flush() {
    if (pending_ == 0) return;
    const std::uint64_t k = pending_;
    pending_ = 0;
    meter_.add(k);
  }

 private:
  Meter& meter_;
  std::uint64_t pending_ = 0;
};

void check_pair_order(int n, int max_order, const char* what) {
  if (n < 1 || n > max_order) {
    throw PreconditionError(std::string(what) + " supports order in [1, " +
                            std::to_string(max_order) + "], got " + std::to_string(n));
  }
}

std::vector<NormalMatrix> all_matrices(int n) {
  const std::uint64_t total = std::uint64_t{1} << offdiag_cell_count(n);
  std::vector<NormalMatrix> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(from_offdiag_mask(n, mask));
  return out;
}

int offdiag_zeros(const NormalMatrix& a) { return zero_count(a) - a.order(); }

void finish_witnesses(ThetaCertificate& cert, std::vector<MatrixPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  cert.witness_total = pairs.size();
  if (pairs.size() > kWitnessCap) pairs.resize(kWitnessCap);
  cert.witnesses = std::move(pairs);
}

// ---------------------------------------------------------------------------
// Hitting sets over off-diagonal cells.

int cell_index(int n, int i, int j) { return i * (n - 1) + (j < i ? j : j - 1); }

struct HitProblem {
  int cells = 0;
  std::vector<std::uint64_t> sets;  // sorted by size, no set contains another
};

HitProblem constraints_for(const NormalMatrix& a) {
  const int n = a.order();
  HitProblem p;
  p.cells = offdiag_cell_count(n);
  std::vector<std::uint64_t> raw;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || a.is_zero_at(i, j)) continue;
      std::uint64_t col_set = 0, row_set = 0;
      for (int t = 0; t < n; ++t) {
        if (t != j && a.is_zero_at(i, t)) col_set |= std::uint64_t{1} << cell_index(n, t, j);
        if (t != i && a.is_zero_at(t, j)) row_set |= std::uint64_t{1} << cell_index(n, i, t);
      }
      raw.push_back(col_set);
      raw.push_back(row_set);
    }
  }
  std::sort(raw.begin(), raw.end(), [](std::uint64_t x, std::uint64_t y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (std::uint64_t s : raw) {
    bool redundant = false;
    for (std::uint64_t kept : p.sets) {
      if ((kept & s) == kept) {
        redundant = true;
        break;
      }
    }
    if (!redundant) p.sets.push_back(s);
  }
  return p;
}

// Branches on the smallest unhit constraint: the i-th child takes its i-th
// free cell and forbids the earlier ones, so every hitting set descends from
// exactly one leaf, as the leaf's cells plus any cells not forbidden there.
class HitSearch {
 public:
  HitSearch(const HitProblem& problem, LocalMeter& meter)
      : p_(problem), meter_(meter), all_((problem.cells == 64) ? ~std::uint64_t{0}
                                                             : (std::uint64_t{1} << problem.cells) - 1) {}

  // All minimum hitting sets of size <= cap. Returns the minimum or -1.
  int minimum(int cap, std::vector<std::uint64_t>& out) {
    mode_ = Mode::minimum;
    best_ = cap;
    found_ = false;
    out_ = &out;
    out.clear();
    recurse(0, 0, 0);
    return found_ ? best_ : -1;
  }

  // Every hitting set with lo <= size <= hi.
  void enumerate(int lo, int hi, std::vector<std::uint64_t>& out) {
    mode_ = Mode::enumerate;
    lo_ = lo;
    best_ = hi;
    out_ = &out;
    recurse(0, 0, 0);
  }

 private:
  enum class Mode { minimum, enumerate };

  void recurse(std::uint64_t chosen, std::uint64_t forbidden, int size) {
    meter_.tick();
    std::uint64_t branch = 0;
    int branch_size = 65;
    int lower = 0;
    std::uint64_t packed = 0;
    for (std::uint64_t s : p_.sets) {
      if (s & chosen) continue;
      const std::uint64_t avail = s & ~forbidden;
      if (avail == 0) return;
      const int c = std::popcount(avail);
      if (c < branch_size) {
        branch_size = c;
        branch = avail;
      }
      if ((avail & packed) == 0) {
        packed |= avail;
        ++lower;
      }
    }
    if (size + lower > best_) return;
    if (branch_size == 65) {
      leaf(chosen, forbidden, size);
      return;
    }
    std::uint64_t earlier = 0;
    for (std::uint64_t rest = branch; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      recurse(chosen | bit, forbidden | earlier, size + 1);
      earlier |= bit;
      if (mode_ == Mode::minimum && size + 1 > best_) return;
    }
  }

  void leaf(std::uint64_t chosen, std::uint64_t forbidden, int size) {
    if (mode_ == Mode::minimum) {
      if (!found_ || size < best_) {
        best_ = size;
        found_ = true;
        out_->clear();
      }
      out_->push_back(chosen);
      return;
    }
    const std::uint64_t free = all_ & ~forbidden & ~chosen;
    extend(chosen, free, size);
  }

  void extend(std::uint64_t chosen, std::uint64_t free, int size) {
    if (size >= lo_) out_->push_back(chosen);
    if (size == best_) return;
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      // Only higher cells remain free below, so each superset appears once.
      extend(chosen | bit, rest & ~bit, size + 1);
    }
  }

  const HitProblem& p_;
  LocalMeter& meter_;
  std::uint64_t all_;
  Mode mode_ = Mode::minimum;
  int best_ = 0;
  int lo_ = 0;
  bool found_ = false;
  std::vector<std::uint64_t>* out_ = nullptr;
};

// Masks over `cells` bits with popcount exactly k, in increasing order, fed to
// `sink` in blocks.
template <typename Sink>
void for_each_combination_block(int cells, int k, std::size_t block, Sink&& sink) {
  std::vector<std::uint64_t> buf;
  buf.reserve(block);
  if (k == 0) {
    buf.push_back(0);
    sink(buf);
    return;
  }
  if (k > cells) return;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  while (v < limit) {
    buf.push_back(v);
    if (buf.size() == block) {
      sink(buf);
      buf.clear();
    }
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  if (!buf.empty()) sink(buf);
}

struct AResult {
  NormalMatrix a;
  int best = -1;  // minimum |B|, -1 if none within cap
  std::vector<std::uint64_t> solutions;
};

// For every canonical A with |A| <= budget / 2, the minimum hitting sets of
// size <= budget - |A|.
std::vector<AResult> solve_canonical(int n, int budget, const PairSymmetry& sym, Meter& meter) {
  const int cells = offdiag_cell_count(n);
  std::vector<NormalMatrix> canonical;
  for (int k = 0; k <= budget / 2 && k <= cells; ++k) {
    for_each_combination_block(cells, k, 1 << 16, [&](const std::vector<std::uint64_t>& block) {
      std::vector<char> keep(block.size(), 0);
      parallel_for(block.size(), meter.threads(), [&](std::size_t i) {
        keep[i] = sym.is_canonical(from_offdiag_mask(n, block[i])) ? 1 : 0;
      });
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (keep[i]) canonical.push_back(from_offdiag_mask(n, block[i]));
      }
    });
  }

  std::vector<AResult> results(canonical.size());
  parallel_for(canonical.size(), meter.threads(), [&](std::size_t idx) {
    LocalMeter local(meter);
    AResult& r = results[idx];
    r.a = canonical[idx];
    const HitProblem problem = constraints_for(r.a);
    HitSearch search(problem, local);
    r.best = search.minimum(budget - offdiag_zeros(r.a), r.solutions);
    local.flush();
  });
  return results;
}

// All images of the base pairs under the symmetry group and the swap.
std::vector<MatrixPair> expand_orbits(const std::vector<MatrixPair>& base, const PairSymmetry& sym) {
  const int n = sym.order();
  std::set<MatrixPair> seen;
  for (const auto& [a, b] : base) {
    for (int g = 0; g < sym.size(); ++g) {
      NormalMatrix ga = from_offdiag_mask(n, sym.apply(g, a));
      NormalMatrix gb = from_offdiag_mask(n, sym.apply(g, b));
      seen.emplace(ga, gb);
      seen.emplace(gb, ga);
    }
  }
  return {seen.begin(), seen.end()};
}

// Minimum pair weight <= budget with all minimal pairs, or -1.
int bounded_minimum(int n, int budget, const PairSymmetry& sym, Meter& meter,
                    std::vector<MatrixPair>& pairs) {
  const auto results = solve_canonical(n, budget, sym, meter);
  int best = -1;
  for (const AResult& r : results) {
    if (r.best < 0) continue;
    const int w = offdiag_zeros(r.a) + r.best;
    if (best < 0 || w < best) best = w;
  }
  pairs.clear();
  if (best < 0) return -1;
  std::vector<MatrixPair> base;
  for (const AResult& r : results) {
    if (r.best < 0 || offdiag_zeros(r.a) + r.best != best) continue;
    for (std::uint64_t mask : r.solutions) base.emplace_back(r.a, from_offdiag_mask(n, mask));
  }
  pairs = expand_orbits(base, sym);
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------

PairSymmetry::PairSymmetry(int n) : n_(n) {
  if (n < 1 || n > kMaxBoundedOrder) {
    throw PreconditionError("symmetry tables support order in [1, " +
                            std::to_string(kMaxBoundedOrder) + "], got " + std::to_string(n));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t row_masks = std::size_t{1} << n;
  do {
    for (int flip = 0; flip < 2; ++flip) {
      for (int i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < row_masks; ++r) {
          std::uint64_t image = 0;
          for (int j = 0; j < n; ++j) {
            if (j == i || !((r >> j) & 1u)) continue;
            const int pi = perm[i], pj = perm[j];
            image |= std::uint64_t{1} << (flip ? cell_index(n, pj, pi) : cell_index(n, pi, pj));
          }
          tables_.push_back(image);
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t PairSymmetry::apply(int g, const NormalMatrix& a) const {
  const std::size_t row_masks = std::size_t{1} << n_;
  const std::uint64_t* base = tables_.data() + static_cast<std::size_t>(g) * n_ * row_masks;
  std::uint64_t image = 0;
  for (int i = 0; i < n_; ++i) image |= base[i * row_masks + a.row(i)];
  return image;
}

bool PairSymmetry::is_canonical(const NormalMatrix& a) const {
  const std::uint64_t mask = offdiag_mask(a);
  for (int g = 1; g < size(); ++g) {
    if (apply(g, a) < mask) return false;
  }
  return true;
}

ThetaCertificate exhaustive_pair_minimum(int n, const SearchLimits& limits) {
  check_pair_order(n, kMaxExhaustivePairOrder, "exhaustive pair search");
  Meter meter(limits);
  auto mats = all_matrices(n);
  std::stable_sort(mats.begin(), mats.end(), [](const NormalMatrix& x, const NormalMatrix& y) {
    return zero_count(x) < zero_count(y);
  });

  struct Local {
    int best = -1;
    std::vector<std::size_t> partners;
  };
  std::vector<Local> local(mats.size());
  parallel_for(mats.size(), limits.threads, [&](std::size_t ia) {
    LocalMeter lm(meter);
    Local& res = local[ia];
    const NormalMatrix& a = mats[ia];
    for (std::size_t ib = 0; ib < mats.size(); ++ib) {
      const int w = pair_weight(a, mats[ib]);
      if (res.best >= 0 && w > res.best) break;
      lm.tick();
      if (is_orthogonal(a, mats[ib])) {
        res.best = w;
        res.partners.push_back(ib);
      }
    }
    lm.flush();
  });

  ThetaCertificate cert;
  cert.n = n;
  cert.kind = ThetaKind::pair;
  int best = -1;
  for (const Local& l : local) {
    if (l.best >= 0 && (best < 0 || l.best < best)) best = l.best;
  }
  std::vector<MatrixPair> pairs;
  for (std::size_t ia = 0; ia < mats.size(); ++ia) {
    if (local[ia].best != best) continue;
    for (std::size_t ib : local[ia].partners) pairs.emplace_back(mats[ia], mats[ib]);
  }
  cert.value = best;
  cert.proven_lower_bound = best;
  cert.completeness = Completeness::exhaustive;
  finish_witnesses(cert, std::move(pairs));
  cert.stats = {meter.nodes(), meter.elapsed()};
  return cert;
}

ThetaCertificate bounded_pair_minimum(int n, int budget, const SearchLimits& limits) {
  check_pair_order(n, kMaxBoundedOrder, "bounded pair search");
  if (budget < 0 || budget > 4 * n - 7) {
    throw PreconditionError("budget must lie in [0, " + std::to_string(4 * n - 7) +
                            "] for order " + std::to_string(n) + ", got " +
                            std::to_string(budget));
  }
  Meter meter(limits);
  const PairSymmetry sym(n);
  ThetaCertificate cert;
  cert.n = n;
  cert.kind = ThetaKind::pair;
  cert.symmetry_reduced = true;

  std::vector<MatrixPair> pairs;
  const int found = bounded_minimum(n, budget, sym, meter, pairs);
  if (found >= 0) {
    cert.value = found;
    cert.proven_lower_bound = found;
    cert.completeness = Completeness::exhaustive;
    finish_witnesses(cert, std::move(pairs));
  } else {
    cert.proven_lower_bound = budget + 1;
    const auto generic = minimal_family_pair(n, MinimalVariant{0, 1, 0});
    if (budget + 1 == 4 * n - 6) {
      cert.value = budget + 1;
      cert.budget = budget;
      cert.completeness = Completeness::bounded_proof;
      finish_witnesses(cert, {generic});
    } else {
      const int next = bounded_minimum(n, budget + 1, sym, meter, pairs);
      if (next >= 0) {
        cert.value = next;
        cert.budget = budget;
        cert.completeness = Completeness::bounded_proof;
        finish_witnesses(cert, std::move(pairs));
      } else {
        cert.proven_lower_bound = budget + 2;
        cert.value = 4 * n - 6;
        cert.completeness = Completeness::upper_bound_only;
        finish_witnesses(cert, {generic});
      }
    }
  }
  cert.stats = {meter.nodes(), meter.elapsed()};
  return cert;
}

ThetaCertificate exhaustive_self_minimum(int n, const SearchLimits& limits) {
  check_pair_order(n, kMaxExhaustiveSelfOrder, "exhaustive self-orthogonal search");
  Meter meter(limits);
  const int cells = offdiag_cell_count(n);
  const std::uint64_t total = std::uint64_t{1} << cells;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1 << 14);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);

  struct Local {
    int best = -1;
    std::vector<std::uint64_t> masks;
  };
  std::vector<Local> local(chunks);
  parallel_for(chunks, limits.threads, [&](std::size_t c) {
    LocalMeter lm(meter);
    Local& res = local[c];
    const std::uint64_t end = std::min(total, (c + 1) * chunk);
    for (std::uint64_t mask = c * chunk; mask < end; ++mask) {
      lm.tick();
      const int w = std::popcount(mask);
      if (res.best >= 0 && w > res.best) continue;
      if (!is_self_orthogonal(from_offdiag_mask(n, mask))) continue;
      if (res.best < 0 || w < res.best) {
        res.best = w;
        res.masks.clear();
      }
      res.masks.push_back(mask);
    }
    lm.flush();
  });

  int best = -1;
  for (const Local& l : local) {
    if (l.best >= 0 && (best < 0 || l.best < best)) best = l.best;
  }
  std::vector<MatrixPair> witnesses;
  for (const Local& l : local) {
    if (l.best != best) continue;
    for (std::uint64_t mask : l.masks) {
      NormalMatrix a = from_offdiag_mask(n, mask);
      witnesses.emplace_back(a, a);
    }
  }
  ThetaCertificate cert;
  cert.n = n;
  cert.kind = ThetaKind::self;
  cert.value = best;
  cert.proven_lower_bound = best;
  cert.completeness = Completeness::exhaustive;
  finish_witnesses(cert, std::move(witnesses));
  cert.stats = {meter.nodes(), meter.elapsed()};
  return cert;
}

std::vector<MatrixPair> enumerate_orthogonal_pairs(int n, int max_weight,
                                                   const SearchLimits& limits) {
  check_pair_order(n, kMaxBoundedOrder, "pair enumeration");
  if (max_weight < 0 || max_weight > 4 * n - 6) {
    throw PreconditionError("maximum weight must lie in [0, " + std::to_string(4 * n - 6) +
                            "] for order " + std::to_string(n) + ", got " +
                            std::to_string(max_weight));
  }
  Meter meter(limits);
  const int cells = offdiag_cell_count(n);
  std::vector<MatrixPair> out;
  for (int k = 0; k <= max_weight / 2 && k <= cells; ++k) {
    for_each_combination_block(cells, k, 1 << 12, [&](const std::vector<std::uint64_t>& block) {
      std::vector<std::vector<MatrixPair>> found(block.size());
      parallel_for(block.size(), limits.threads, [&](std::size_t i) {
        LocalMeter lm(meter);
        const NormalMatrix a = from_offdiag_mask(n, block[i]);
        const HitProblem problem = constraints_for(a);
        HitSearch search(problem, lm);
        std::vector<std::uint64_t> sols;
        search.enumerate(k, max_weight - k, sols);
        for (std::uint64_t mask : sols) {
          NormalMatrix b = from_offdiag_mask(n, mask);
          found[i].emplace_back(a, b);
          if (std::popcount(mask) > k) found[i].emplace_back(b, a);
        }
        lm.flush();
      });
      for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

TheoremCheck check_minimality_theorem(int n, const SearchLimits& limits) {
  const bool exhaustive = n >= 2 && n <= kMaxExhaustivePairOrder;
  const bool forward_only = n >= 7 && n <= 10;
  if (!exhaustive && !forward_only) {
    throw PreconditionError("theorem check supports n in {2, 3, 4} or 7..10, got " +
                            std::to_string(n));
  }
  TheoremCheck check;
  check.n = n;
  check.minimum = 4 * n - 6;

  std::set<MatrixPair> family;
  check.forward = true;
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (k == m) continue;
      for (int variant = 0; variant < 4; ++variant) {
        auto pair = minimal_family_pair(n, MinimalVariant{k, m, variant});
        if (pair.first == pair.second) continue;
        const IndicatorReport rep = indicator(pair.first, pair.second);
        const bool ok = rep.indicator.is_all_zero() &&
                        pair_weight(pair.first, pair.second) == 4 * n - 6 &&
                        rep.prop_count == 4 * n - 6 && rep.gift_count == (n - 2) * (n - 3);
        check.forward = check.forward && ok;
        family.insert(std::move(pair));
      }
    }
  }
  check.family_pairs = family.size();

  if (exhaustive) {
    const ThetaCertificate cert = exhaustive_pair_minimum(n, limits);
    if (cert.witness_total != cert.witnesses.size()) {
      throw PreconditionError("minimal pair list truncated; cannot compare sets");
    }
    check.minimum = cert.value;
    check.minimal_pairs = cert.witness_total;
    const std::set<MatrixPair> minimal(cert.witnesses.begin(), cert.witnesses.end());
    std::set_difference(minimal.begin(), minimal.end(), family.begin(), family.end(),
                        std::back_inserter(check.minimal_outside_family));
    std::set_difference(family.begin(), family.end(), minimal.begin(), minimal.end(),
                        std::back_inserter(check.family_not_minimal));
    check.equivalence = check.minimal_outside_family.empty() && check.family_not_minimal.empty();
  }
  return check;
}

}  // namespace trop
