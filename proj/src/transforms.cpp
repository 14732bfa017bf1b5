#include "titree/transforms.hpp"

#include <string>

#include "titree/error.hpp"

namespace titree {
namespace {

void require_vertex(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order()) {
    throw Error(Errc::BadLabel, "vertex " + std::to_string(v) + " not in tree of order " +
                                    std::to_string(t.order()));
  }
}

}  // namespace

Tree fuse(const Tree& t1, Vertex v1, const Tree& t2, Vertex v2) {
  require_vertex(t1, v1);
  require_vertex(t2, v2);
  const Vertex n1 = t1.order();
  auto map2 = [&](Vertex x) -> Vertex {
    if (x == v2) return v1;
    return n1 + (x < v2 ? x : x - 1);
  };
  std::vector<Edge> edges(t1.edges().begin(), t1.edges().end());
  for (const Edge& e : t2.edges()) edges.push_back({map2(e.u), map2(e.v)});
  return Tree(n1 + t2.order() - 1, edges);
}

std::optional<std::vector<Vertex>> pendent_path(const Tree& t, Vertex v, Vertex first) {
  require_vertex(t, v);
  require_vertex(t, first);
  if (!t.has_edge(v, first)) return std::nullopt;
  std::vector<Vertex> path{first};
  Vertex prev = v;
  Vertex cur = first;
  while (true) {
    const int d = t.degree(cur);
    if (d == 1) return path;
    if (d > 2) return std::nullopt;
    auto nb = t.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
}

RelabeledTree arm_straighten(const Tree& t, Vertex v, Vertex branch_root) {
  require_vertex(t, v);
  require_vertex(t, branch_root);
  if (!t.has_edge(v, branch_root)) {
    throw Error(Errc::NotAnEdge, "branch root " + std::to_string(branch_root) +
                                     " is not adjacent to " + std::to_string(v));
  }
  if (pendent_path(t, v, branch_root)) {
    throw Error(Errc::BranchIsAlreadyPath, "branch at " + std::to_string(branch_root) +
                                               " is already a pendent path");
  }

  const Vertex n = t.order();
  std::vector<char> in_branch(n, 0);
  std::vector<Vertex> stack{branch_root};
  in_branch[branch_root] = 1;
  Vertex branch_order = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++branch_order;
    for (Vertex y : t.neighbors(x)) {
      if (y != v && !in_branch[y]) {
        in_branch[y] = 1;
        stack.push_back(y);
      }
    }
  }

  RelabeledTree out{Tree(1, {}), std::vector<Vertex>(n, -1)};
  Vertex next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (!in_branch[x]) out.old_to_new[x] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (const Edge& e : t.edges()) {
    if (!in_branch[e.u] && !in_branch[e.v]) {
      edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v]});
    }
  }
  Vertex prev = out.old_to_new[v];
  for (Vertex i = 0; i < branch_order; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  out.tree = Tree(n, edges);
  return out;
}

Tree majorize(const Tree& t, Vertex v, Vertex long_arm, Vertex short_arm) {
  require_vertex(t, v);
  if (t.degree(v) < 3) {
    throw Error(Errc::NotPendentPaths, "vertex " + std::to_string(v) + " has degree < 3");
  }
  if (long_arm == short_arm) throw Error(Errc::NotPendentPaths, "arms must be distinct");
  auto long_path = pendent_path(t, v, long_arm);
  auto short_path = pendent_path(t, v, short_arm);
  if (!long_path || !short_path) {
    throw Error(Errc::NotPendentPaths, "arms must start pendent paths at " + std::to_string(v));
  }
  if (short_path->size() > long_path->size()) {
    throw Error(Errc::LengthOrderViolated,
                "short arm has length " + std::to_string(short_path->size()) +
                    " > long arm length " + std::to_string(long_path->size()));
  }
  const Vertex moved = short_path->back();
  const Vertex old_parent = short_path->size() == 1 ? v : (*short_path)[short_path->size() - 2];
  const Edge removed = moved < old_parent ? Edge{moved, old_parent} : Edge{old_parent, moved};
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) {
    if (e != removed) edges.push_back(e);
  }
  edges.push_back({long_path->back(), moved});
  return Tree(t.order(), edges);
}

}  // namespace titree
