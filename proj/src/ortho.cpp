#include "trop/ortho.hpp"

#include <algorithm>
#include <bit>

#include "trop/error.hpp"

namespace trop {

bool is_orthogonal(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  return odot(a, b).is_all_zero() && odot(b, a).is_all_zero();
}

bool is_self_orthogonal(const NormalMatrix& a) { return odot(a, a).is_all_zero(); }

const char* to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::diagonal: return "diagonal";
    case ZeroKind::propagation: return "propagation";
    case ZeroKind::cost: return "cost";
    case ZeroKind::gift: return "gift";
    case ZeroKind::nonzero: return "nonzero";
  }
  return "?";
}

IndicatorReport indicator(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  const int n = a.order();
  IndicatorReport rep;
  rep.first = a;
  rep.second = b;
  rep.left = odot(a, b);
  rep.right = odot(b, a);
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < n; ++i) rows[i] = rep.left.row(i) & rep.right.row(i);
  rep.indicator = NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n)});
  rep.same_matrices = (a == b);
  rep.cells.resize(static_cast<std::size_t>(n * n));

  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      CellClass& cell = rep.cells[s * n + t];
      if (s == t) {
        cell.kind = ZeroKind::diagonal;
        continue;
      }
      if (!rep.indicator.is_zero_at(s, t)) {
        cell.kind = ZeroKind::nonzero;
        continue;
      }
      if (a.is_zero_at(s, t) || b.is_zero_at(s, t)) {
        cell.kind = ZeroKind::propagation;
        ++rep.prop_count;
        if (!rep.same_matrices && a.is_zero_at(s, t) && b.is_zero_at(s, t)) ++rep.duplicate_count;
        continue;
      }
      // L-witnesses k: a_sk = b_kt = 0. R-witnesses m: b_sm = a_mt = 0.
      const LineMask others = static_cast<LineMask>(full_line(n) & ~(1u << s) & ~(1u << t));
      const LineMask lw = static_cast<LineMask>(a.row(s) & b.col(t) & others);
      const LineMask rw = static_cast<LineMask>(b.row(s) & a.col(t) & others);
      if (const LineMask both = lw & rw; both != 0) {
        cell.kind = ZeroKind::cost;
        ++rep.cost_count;
        for (int k = 0; k < n; ++k) {
          if ((both >> k) & 1u) cell.cost_witnesses.push_back(k);
        }
        continue;
      }
      cell.kind = ZeroKind::gift;
      ++rep.gift_count;
      for (int k = 0; k < n; ++k) {
        if (!((lw >> k) & 1u)) continue;
        for (int m = 0; m < n; ++m) {
          if ((rw >> m) & 1u) cell.gift_witnesses.emplace_back(k, m);
        }
      }
    }
  }
  return rep;
}

namespace {

std::vector<int> common_cost_witnesses(const IndicatorReport& rep, int s) {
  std::vector<int> common;
  bool first = true;
  for (int t = 0; t < rep.order(); ++t) {
    const CellClass& c = rep.cell(s, t);
    if (c.kind != ZeroKind::cost) continue;
    if (first) {
      common = c.cost_witnesses;
      first = false;
    } else {
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), c.cost_witnesses.begin(),
                            c.cost_witnesses.end(), std::back_inserter(next));
      common = std::move(next);
    }
  }
  return common;
}

std::vector<std::pair<int, int>> common_gift_witnesses(const IndicatorReport& rep, int s) {
  std::vector<std::pair<int, int>> common;
  bool first = true;
  for (int t = 0; t < rep.order(); ++t) {
    const CellClass& c = rep.cell(s, t);
    if (c.kind != ZeroKind::gift) continue;
    if (first) {
      common = c.gift_witnesses;
      first = false;
    } else {
      std::vector<std::pair<int, int>> next;
      std::set_intersection(common.begin(), common.end(), c.gift_witnesses.begin(),
                            c.gift_witnesses.end(), std::back_inserter(next));
      common = std::move(next);
    }
  }
  return common;
}

}  // namespace

RowType row_type(const IndicatorReport& report, int i) {
  const int n = report.order();
  check_index(n, i);
  int prop = 0, cost = 0, gift = 0;
  for (int t = 0; t < n; ++t) {
    switch (report.cell(i, t).kind) {
      case ZeroKind::propagation: ++prop; break;
      case ZeroKind::cost: ++cost; break;
      case ZeroKind::gift: ++gift; break;
      default: break;
    }
  }
  const int weight = pair_row_weight(report.first, report.second, i);

  if (n >= 3 && cost == n - 2 && prop == 1) {
    const auto common = common_cost_witnesses(report, i);
    if (common.size() == 1) return {RowKind::cost, common.front(), -1};
  }
  if (n >= 4 && !report.same_matrices && gift == n - 3 && prop == 2 && weight == 2) {
    const auto common = common_gift_witnesses(report, i);
    if (common.size() == 1) return {RowKind::gift, common.front().first, common.front().second};
  }
  return {};
}

const char* to_string(VertexSet set) {
  switch (set) {
    case VertexSet::all_normal: return "all";
    case VertexSet::ortho: return "ortho";
    case VertexSet::vnl: return "vnl";
    case VertexSet::wnl: return "wnl";
  }
  return "?";
}

bool in_vertex_set(VertexSet set, const NormalMatrix& a) {
  const int n = a.order();
  const LineMask full = full_line(n);
  switch (set) {
    case VertexSet::all_normal: return true;
    case VertexSet::ortho: return !a.is_identity() && !a.is_all_zero();
    case VertexSet::vnl:
      if (a.is_all_zero()) return false;
      for (int p = 0; p < n; ++p) {
        if (a.row(p) != full) continue;
        for (int q = 0; q < n; ++q) {
          if (q != p && a.col(q) == full) return true;
        }
      }
      return false;
    case VertexSet::wnl:
      if (a.is_all_zero()) return false;
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          if (q == p) continue;
          const LineMask row_need = static_cast<LineMask>(full & ~(1u << q));
          const LineMask col_need = static_cast<LineMask>(full & ~(1u << p));
          if ((a.row(p) & row_need) == row_need && (a.col(q) & col_need) == col_need) return true;
        }
      }
      return false;
  }
  return false;
}

std::vector<NormalMatrix> orth_set(const NormalMatrix& a, VertexSet set) {
  const int n = a.order();
  if (n > kMaxEnumerationOrder) {
    throw PreconditionError("orthogonal-set enumeration supports order <= " +
                            std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
  std::vector<NormalMatrix> out;
  const std::uint64_t total = std::uint64_t{1} << offdiag_cell_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    NormalMatrix b = from_offdiag_mask(n, mask);
    if (in_vertex_set(set, b) && is_orthogonal(a, b)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool majority_zero_condition(const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  const int n = a.order();
  for (const NormalMatrix* m : {&a, &b}) {
    for (int i = 0; i < n; ++i) {
      if (2 * std::popcount(m->row(i)) <= n || 2 * std::popcount(m->col(i)) <= n) return false;
    }
  }
  return true;
}

std::pair<NormalMatrix, NormalMatrix> residue_pair(int n) {
  if (n < 4 || n > kMaxOrder) {
    throw InvalidArgument("residue pair needs order in [4, " + std::to_string(kMaxOrder) +
                          "], got " + std::to_string(n));
  }
  std::array<LineMask, kMaxOrder> ra{}, rb{};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || (i + j) % 3 == 2) ra[i - 1] |= static_cast<LineMask>(1u << (j - 1));
      if ((i + j) % 2 == 0) rb[i - 1] |= static_cast<LineMask>(1u << (j - 1));
    }
  }
  const auto sz = static_cast<std::size_t>(n);
  return {NormalMatrix::from_rows({ra.data(), sz}), NormalMatrix::from_rows({rb.data(), sz})};
}

NormalMatrix sparse_last_column(int n) {
  if (n < 2) throw InvalidArgument("sparse_last_column needs order >= 2");
  NormalMatrix a = NormalMatrix::all_zero(n);
  for (int i = 0; i + 1 < n; ++i) a = a.with_minus_one(i, n - 1);
  return a;
}

NormalMatrix half_zero_blocks(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxOrder) {
    throw InvalidArgument("half_zero_blocks needs an even order, got " + std::to_string(n));
  }
  const int h = n / 2;
  std::array<LineMask, kMaxOrder> rows{};
  const LineMask low = full_line(h);
  const LineMask high = static_cast<LineMask>(low << h);
  for (int i = 0; i < n; ++i) rows[i] = i < h ? low : high;
  return NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

}  // namespace trop
