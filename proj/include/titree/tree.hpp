#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace titree {

using Vertex = std::int32_t;

/// Largest order accepted by the tree constructor. The Wiener index of the
/// path on this many vertices still fits a signed 64-bit integer.
inline constexpr Vertex kMaxTreeOrder = 3'000'000;

/// An undirected edge; `Tree` stores edges normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labeled tree on vertices 0..n-1 with CSR adjacency.
///
/// Construction validates the tree property: n-1 edges, no loops, no
/// duplicate edges, and connectivity. Neighbor lists are sorted.
class Tree {
 public:
  /// Throws Error{BadLabel} for labels outside 0..n-1 and Error{NotATree}
  /// for any other violation of the tree property.
  Tree(Vertex n, std::span<const Edge> edges);

  /// Tree from a parent array; exactly one entry must be -1 (the root).
  static Tree from_parents(std::span<const Vertex> parent);

  Vertex order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> adjacency_;
};

inline Tree new_tree(Vertex n, std::span<const Edge> edges) { return Tree(n, edges); }

/// Per-vertex transmissions with the aggregates derived from them.
struct TransmissionProfile {
  std::vector<std::int64_t> tr;
  std::int64_t wiener = 0;
  bool is_ti = false;
  Vertex min_vertex = 0;
};

enum class TransmissionMethod {
  /// One breadth-first search per vertex; the Wiener index is accumulated
  /// independently as a sum over unordered pairs. O(n^2) time, O(n) memory.
  Bfs,
  /// Rerooting along edges with Tr(child) = Tr(parent) + n - 2*size(child);
  /// the Wiener index is accumulated as the edge sum of s*(n-s). O(n).
  EdgeLaw,
};

/// Tree rooted at a vertex: BFS order, parent links, depths and subtree sizes.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> order;
  std::vector<Vertex> parent;  // parent[root] == -1
  std::vector<std::int32_t> depth;
  std::vector<std::int32_t> size;
};

RootedTree root_at(const Tree& t, Vertex root);

std::vector<std::int32_t> distances_from(const Tree& t, Vertex v);

/// Both Wiener routes are computed and must agree; a mismatch is a bug and
/// raises std::logic_error.
TransmissionProfile transmission_profile(const Tree& t,
                                         TransmissionMethod method = TransmissionMethod::Bfs);

/// Number of vertices closer to u than to v, for an edge uv.
std::int64_t split_count(const Tree& t, Vertex u, Vertex v);

int degree(const Tree& t, Vertex v);
std::vector<Vertex> leaves(const Tree& t);
std::vector<Vertex> branching_vertices(const Tree& t);

/// Orders of the components of t - v, descending.
std::vector<std::int64_t> decompose_at(const Tree& t, Vertex v);

/// One or two center vertices, ascending.
std::vector<Vertex> centers(const Tree& t);

/// Parenthesis encoding of the tree rooted at its center, children in
/// canonical order; for bicentral trees the smaller of the two encodings.
/// Equal codes iff the trees are isomorphic.
std::string canonical_code(const Tree& t);

/// Relabel vertices: vertex v of t becomes perm[v].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

}  // namespace titree
