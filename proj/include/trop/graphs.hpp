#pragma once

// Relation graphs on normal matrices.
//
// ORTHO joins orthogonal matrices. VNL joins A and B when A is in V(p;q) and
// B in V(q;p) for some p, q. WNL joins A and B when, for some k, m, one of
//   1. A in W(k;m) & Z(k;m) & Z(m;k), B in W(m;k)
//   2. A in W(k;m) & Z(m;k),          B in W(m;k) & Z(k;m)
//   3. A in W(k;m),                   B in W(m;k) & Z(k;m) & Z(m;k)
// holds. Loops mark matrices related to themselves.
//
// Vertices with the same family signature have the same neighbours, so a graph
// is stored as a quotient: vertex classes plus class adjacency. Distances,
// girth and edge counts are exact for the full vertex set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/normal_matrix.hpp"

namespace trop {

enum class GraphKind { ortho, vnl, wnl };

const char* to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& text);

inline constexpr int kMaxOrthoGraphOrder = 4;
inline constexpr int kMaxFamilyGraphOrder = 5;

bool is_vertex(GraphKind kind, const NormalMatrix& a);
// Throws InvalidArgument if either matrix is not a vertex of the kind.
bool adjacent(GraphKind kind, const NormalMatrix& a, const NormalMatrix& b);

class RelationGraph {
 public:
  // ORTHO needs n <= 4, VNL and WNL n <= 5; otherwise PreconditionError.
  static RelationGraph build(GraphKind kind, int n, int threads = 0);

  GraphKind kind() const { return kind_; }
  int order() const { return n_; }
  // Sorted; indices below refer to this list.
  const std::vector<NormalMatrix>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t class_count() const { return class_size_.size(); }

  // Throws InvalidArgument for a matrix outside the vertex set.
  std::size_t index_of(const NormalMatrix& a) const;

  bool adjacent(std::size_t u, std::size_t v) const;
  bool has_loop(std::size_t u) const { return adjacent(u, u); }

  // nullopt stands for an infinite value. Loops never shorten paths or count
  // as cycles.
  std::optional<int> distance(std::size_t u, std::size_t v) const;
  std::optional<int> diameter() const;
  std::optional<int> girth() const;
  bool is_connected() const { return vertex_count() <= 1 || diameter().has_value(); }

  std::uint64_t edge_count() const;  // loops excluded
  std::uint64_t loop_count() const;

  // Non-loop edges (u, v) with u < v, in increasing order. Throws
  // PreconditionError above max_edges.
  std::vector<std::pair<std::size_t, std::size_t>> edges(std::uint64_t max_edges) const;

 private:
  RelationGraph() = default;

  bool class_adjacent(std::size_t x, std::size_t y) const {
    return (adj_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }
  // Distances from class x to every class, -1 when unreachable.
  std::vector<int> class_bfs(std::size_t x) const;
  std::uint64_t outside_neighbour_vertices(std::size_t x) const;

  GraphKind kind_ = GraphKind::ortho;
  int n_ = 0;
  std::vector<NormalMatrix> vertices_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> class_size_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;  // class adjacency rows, self-adjacency included
};

}  // namespace trop
