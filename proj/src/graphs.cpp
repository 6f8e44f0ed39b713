#include "trop/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "trop/error.hpp"
#include "trop/ortho.hpp"
#include "trop/parallel.hpp"

namespace trop {

namespace {

// Bit p*n+q of a pair mask refers to the index pair (p, q).
std::uint32_t transpose_pairs(std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if ((mask >> (p * n + q)) & 1u) out |= 1u << (q * n + p);
    }
  }
  return out;
}

std::uint32_t cross_pairs(const NormalMatrix& a) {
  const int n = a.order();
  const LineMask full = full_line(n);
  std::uint32_t out = 0;
  for (int p = 0; p < n; ++p) {
    if (a.row(p) != full) continue;
    for (int q = 0; q < n; ++q) {
      if (a.col(q) == full) out |= 1u << (p * n + q);
    }
  }
  return out;
}

std::uint32_t punctured_cross_pairs(const NormalMatrix& a) {
  const int n = a.order();
  const LineMask full = full_line(n);
  std::uint32_t out = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const LineMask row_need = static_cast<LineMask>(full & ~(1u << q));
      const LineMask col_need = static_cast<LineMask>(full & ~(1u << p));
      if ((a.row(p) & row_need) == row_need && (a.col(q) & col_need) == col_need) {
        out |= 1u << (p * n + q);
      }
    }
  }
  return out;
}

std::uint32_t zero_pairs(const NormalMatrix& a) {
  const int n = a.order();
  std::uint32_t out = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (a.is_zero_at(p, q)) out |= 1u << (p * n + q);
    }
  }
  return out;
}

// What a class contributes to the WNL conditions, indexed by (k, m).
struct WnlMasks {
  std::uint32_t lhs[3];  // A side of conditions 1, 2, 3
  std::uint32_t rhs[3];  // B side
};

WnlMasks wnl_masks(std::uint32_t w, std::uint32_t z, int n) {
  const std::uint32_t wt = transpose_pairs(w, n);
  const std::uint32_t zt = transpose_pairs(z, n);
  return {{w & z & zt, w & zt, w}, {wt, wt & z, wt & z & zt}};
}

bool wnl_related(const WnlMasks& x, const WnlMasks& y) {
  return ((x.lhs[0] & y.rhs[0]) | (x.lhs[1] & y.rhs[1]) | (x.lhs[2] & y.rhs[2])) != 0;
}

// Zeros that matter for WNL: cells (k, m) with A in W(k;m) or W(m;k).
std::uint32_t relevant_zeros(const NormalMatrix& a, std::uint32_t w) {
  const int n = a.order();
  return zero_pairs(a) & (w | transpose_pairs(w, n));
}

VertexSet vertex_set_of(GraphKind kind) {
  switch (kind) {
    case GraphKind::ortho: return VertexSet::ortho;
    case GraphKind::vnl: return VertexSet::vnl;
    case GraphKind::wnl: return VertexSet::wnl;
  }
  return VertexSet::ortho;
}

bool related(GraphKind kind, const NormalMatrix& a, const NormalMatrix& b) {
  const int n = a.order();
  switch (kind) {
    case GraphKind::ortho: return is_orthogonal(a, b);
    case GraphKind::vnl: return (cross_pairs(a) & transpose_pairs(cross_pairs(b), n)) != 0;
    case GraphKind::wnl: {
      const std::uint32_t wa = punctured_cross_pairs(a), wb = punctured_cross_pairs(b);
      return wnl_related(wnl_masks(wa, zero_pairs(a), n), wnl_masks(wb, zero_pairs(b), n));
    }
  }
  return false;
}

}  // namespace

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::ortho: return "ortho";
    case GraphKind::vnl: return "vnl";
    case GraphKind::wnl: return "wnl";
  }
  return "?";
}

GraphKind parse_graph_kind(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ortho") return GraphKind::ortho;
  if (lower == "vnl") return GraphKind::vnl;
  if (lower == "wnl") return GraphKind::wnl;
  throw InvalidArgument("unknown graph kind '" + text + "', expected ortho, vnl or wnl");
}

bool is_vertex(GraphKind kind, const NormalMatrix& a) {
  return in_vertex_set(vertex_set_of(kind), a);
}

bool adjacent(GraphKind kind, const NormalMatrix& a, const NormalMatrix& b) {
  check_same_order(a, b);
  for (const NormalMatrix* m : {&a, &b}) {
    if (!is_vertex(kind, *m)) {
      throw InvalidArgument(std::string("matrix is not a vertex of ") + to_string(kind) + ":\n" +
                            format_matrix(*m));
    }
  }
  return related(kind, a, b);
}

RelationGraph RelationGraph::build(GraphKind kind, int n, int threads) {
  const int max_order = kind == GraphKind::ortho ? kMaxOrthoGraphOrder : kMaxFamilyGraphOrder;
  if (n < 1 || n > max_order) {
    throw PreconditionError(std::string(to_string(kind)) + " graph supports order in [1, " +
                            std::to_string(max_order) + "], got " + std::to_string(n));
  }
  RelationGraph g;
  g.kind_ = kind;
  g.n_ = n;
  const VertexSet set = vertex_set_of(kind);
  const std::uint64_t total = std::uint64_t{1} << offdiag_cell_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    NormalMatrix a = from_offdiag_mask(n, mask);
    if (in_vertex_set(set, a)) g.vertices_.push_back(a);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());

  // Group vertices by signature; class ids follow first appearance.
  std::map<std::uint64_t, std::uint32_t> class_ids;
  std::vector<std::uint64_t> keys;
  g.class_of_.resize(g.vertices_.size());
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    const NormalMatrix& a = g.vertices_[v];
    std::uint64_t key = v;
    if (kind == GraphKind::vnl) {
      key = cross_pairs(a);
    } else if (kind == GraphKind::wnl) {
      const std::uint32_t w = punctured_cross_pairs(a);
      key = (std::uint64_t{w} << 32) | relevant_zeros(a, w);
    }
    auto [it, inserted] = class_ids.emplace(key, static_cast<std::uint32_t>(keys.size()));
    if (inserted) {
      keys.push_back(key);
      g.class_size_.push_back(0);
      g.class_members_.emplace_back();
    }
    g.class_of_[v] = it->second;
    ++g.class_size_[it->second];
    g.class_members_[it->second].push_back(v);
  }

  const std::size_t classes = keys.size();
  g.words_ = (classes + 63) / 64;
  g.adj_.assign(classes * g.words_, 0);
  std::vector<WnlMasks> wnl;
  std::vector<std::uint32_t> vnl_t;
  if (kind == GraphKind::wnl) {
    for (std::uint64_t key : keys) {
      wnl.push_back(wnl_masks(static_cast<std::uint32_t>(key >> 32),
                              static_cast<std::uint32_t>(key & 0xffffffffu), n));
    }
  } else if (kind == GraphKind::vnl) {
    for (std::uint64_t key : keys) vnl_t.push_back(transpose_pairs(static_cast<std::uint32_t>(key), n));
  }
  parallel_for(classes, threads, [&](std::size_t x) {
    std::uint64_t* row = g.adj_.data() + x * g.words_;
    for (std::size_t y = 0; y < classes; ++y) {
      bool rel = false;
      switch (kind) {
        case GraphKind::ortho:
          rel = is_orthogonal(g.vertices_[g.class_members_[x][0]], g.vertices_[g.class_members_[y][0]]);
          break;
        case GraphKind::vnl: rel = (keys[x] & vnl_t[y]) != 0; break;
        case GraphKind::wnl: rel = wnl_related(wnl[x], wnl[y]); break;
      }
      if (rel) row[y / 64] |= std::uint64_t{1} << (y % 64);
    }
  });
  return g;
}

std::size_t RelationGraph::index_of(const NormalMatrix& a) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), a);
  if (it == vertices_.end() || !(*it == a)) {
    throw InvalidArgument(std::string("matrix is not a vertex of ") + to_string(kind_) + ":\n" +
                          format_matrix(a));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool RelationGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) throw InvalidArgument("vertex index out of range");
  return class_adjacent(class_of_[u], class_of_[v]);
}

std::vector<int> RelationGraph::class_bfs(std::size_t x) const {
  const std::size_t classes = class_size_.size();
  std::vector<int> dist(classes, -1);
  std::vector<std::uint64_t> visited(words_, 0), frontier(words_, 0), next(words_);
  dist[x] = 0;
  visited[x / 64] |= std::uint64_t{1} << (x % 64);
  frontier[x / 64] |= std::uint64_t{1} << (x % 64);
  for (int level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const std::size_t c = w * 64 + std::countr_zero(bits);
        const std::uint64_t* row = adj_.data() + c * words_;
        for (std::size_t k = 0; k < words_; ++k) next[k] |= row[k];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words_; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      any = any || next[w] != 0;
      for (std::uint64_t bits = next[w]; bits != 0; bits &= bits - 1) {
        dist[w * 64 + std::countr_zero(bits)] = level;
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
  return dist;
}

std::uint64_t RelationGraph::outside_neighbour_vertices(std::size_t x) const {
  std::uint64_t total = 0;
  for (std::size_t y = 0; y < class_size_.size(); ++y) {
    if (y != x && class_adjacent(x, y)) total += class_size_[y];
  }
  return total;
}

std::optional<int> RelationGraph::distance(std::size_t u, std::size_t v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) throw InvalidArgument("vertex index out of range");
  if (u == v) return 0;
  const std::size_t x = class_of_[u], y = class_of_[v];
  if (x == y) {
    if (class_adjacent(x, x)) return 1;
    if (outside_neighbour_vertices(x) > 0) return 2;
    return std::nullopt;
  }
  const int d = class_bfs(x)[y];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> RelationGraph::diameter() const {
  const std::size_t classes = class_size_.size();
  std::vector<int> worst(classes, 0);
  parallel_for(classes, 0, [&](std::size_t x) {
    int best = 0;
    if (class_size_[x] >= 2) {
      if (class_adjacent(x, x)) {
        best = 1;
      } else if (outside_neighbour_vertices(x) > 0) {
        best = 2;
      } else {
        worst[x] = -1;
        return;
      }
    }
    for (int d : class_bfs(x)) {
      if (d < 0) {
        worst[x] = -1;
        return;
      }
      best = std::max(best, d);
    }
    worst[x] = best;
  });
  int out = 0;
  for (int w : worst) {
    if (w < 0) return std::nullopt;
    out = std::max(out, w);
  }
  return out;
}

std::optional<int> RelationGraph::girth() const {
  const std::size_t classes = class_size_.size();
  // Triangles.
  for (std::size_t x = 0; x < classes; ++x) {
    if (!class_adjacent(x, x) || class_size_[x] < 2) continue;
    if (class_size_[x] >= 3 || outside_neighbour_vertices(x) > 0) return 3;
  }
  for (std::size_t x = 0; x < classes; ++x) {
    const std::uint64_t* rx = adj_.data() + x * words_;
    for (std::size_t y = x + 1; y < classes; ++y) {
      if (!class_adjacent(x, y)) continue;
      const std::uint64_t* ry = adj_.data() + y * words_;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t common = rx[w] & ry[w];
        if (w == x / 64) common &= ~(std::uint64_t{1} << (x % 64));
        if (w == y / 64) common &= ~(std::uint64_t{1} << (y % 64));
        if (common != 0) return 3;
      }
    }
  }
  // Two vertices of one class sharing two neighbours.
  for (std::size_t x = 0; x < classes; ++x) {
    if (class_size_[x] >= 2 && outside_neighbour_vertices(x) >= 2) return 4;
  }
  // Otherwise vertices of larger classes have degree <= 1 or form an isolated
  // edge, so every cycle runs through singleton classes.
  std::vector<std::size_t> single;
  for (std::size_t x = 0; x < classes; ++x) {
    if (class_size_[x] == 1) single.push_back(x);
  }
  int best = -1;
  const std::size_t s = single.size();
  for (std::size_t root = 0; root < s; ++root) {
    std::vector<int> dist(s, -1), parent(s, -1);
    std::vector<std::size_t> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (std::size_t v = 0; v < s; ++v) {
        if (v == u || !class_adjacent(single[u], single[v])) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int>(u);
          queue.push_back(v);
        } else if (parent[u] != static_cast<int>(v)) {
          const int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::uint64_t RelationGraph::edge_count() const {
  std::uint64_t total = 0;
  const std::size_t classes = class_size_.size();
  for (std::size_t x = 0; x < classes; ++x) {
    if (class_adjacent(x, x)) total += class_size_[x] * (class_size_[x] - 1) / 2;
    for (std::size_t y = x + 1; y < classes; ++y) {
      if (class_adjacent(x, y)) total += class_size_[x] * class_size_[y];
    }
  }
  return total;
}

std::uint64_t RelationGraph::loop_count() const {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < class_size_.size(); ++x) {
    if (class_adjacent(x, x)) total += class_size_[x];
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> RelationGraph::edges(std::uint64_t max_edges) const {
  const std::uint64_t count = edge_count();
  if (count > max_edges) {
    throw PreconditionError("graph has " + std::to_string(count) + " edges, above the export cap of " +
                            std::to_string(max_edges));
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(count);
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices_.size(); ++v) {
      if (class_adjacent(class_of_[u], class_of_[v])) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace trop
