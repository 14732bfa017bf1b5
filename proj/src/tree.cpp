#include "titree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "titree/error.hpp"

namespace titree {
namespace {

void check_label(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order()) {
    throw Error(Errc::BadLabel, "vertex " + std::to_string(v) + " not in 0.." +
                                    std::to_string(t.order() - 1));
  }
}

}  // namespace

Tree::Tree(Vertex n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw Error(Errc::NotATree, "a tree needs at least one vertex");
  if (n > kMaxTreeOrder) {
    throw Error(Errc::Overflow, "order " + std::to_string(n) + " exceeds the supported maximum");
  }
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(Errc::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                    std::to_string(edges.size()));
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(Errc::BadLabel, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      ") has a label outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(Errc::NotATree, "self-loop at " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(Errc::NotATree, "duplicate edge (" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + ")");
  }

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  // Edges are sorted by (u, v), so each list is already ascending except for
  // the interleaving of lower and higher neighbors.
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw Error(Errc::NotATree, "graph is disconnected");
}

Tree Tree::from_parents(std::span<const Vertex> parent) {
  std::vector<Edge> edges;
  edges.reserve(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] >= 0) edges.push_back({static_cast<Vertex>(i), parent[i]});
  }
  return Tree(static_cast<Vertex>(parent.size()), edges);
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  check_label(*this, v);
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

int Tree::degree(Vertex v) const {
  check_label(*this, v);
  return offsets_[v + 1] - offsets_[v];
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_label(*this, v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

RootedTree root_at(const Tree& t, Vertex root) {
  check_label(t, root);
  const Vertex n = t.order();
  RootedTree r;
  r.root = root;
  r.parent.assign(n, -1);
  r.depth.assign(n, 0);
  r.size.assign(n, 1);
  r.order.reserve(n);
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex x = r.order[head];
    for (Vertex y : t.neighbors(x)) {
      if (y != r.parent[x]) {
        r.parent[y] = x;
        r.depth[y] = r.depth[x] + 1;
        r.order.push_back(y);
      }
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (r.parent[*it] >= 0) r.size[r.parent[*it]] += r.size[*it];
  }
  return r;
}

std::vector<std::int32_t> distances_from(const Tree& t, Vertex v) {
  check_label(t, v);
  std::vector<std::int32_t> dist(t.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(t.order());
  queue.push_back(v);
  dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

void finish_profile(TransmissionProfile& p, std::int64_t direct_wiener) {
  const std::int64_t total = std::accumulate(p.tr.begin(), p.tr.end(), std::int64_t{0});
  if (total % 2 != 0 || total / 2 != direct_wiener) {
    throw std::logic_error("transmission sum and pair-sum Wiener index disagree");
  }
  p.wiener = direct_wiener;
  p.min_vertex = static_cast<Vertex>(std::min_element(p.tr.begin(), p.tr.end()) - p.tr.begin());
  if (p.tr.size() > 1) {
    std::vector<std::int64_t> sorted = p.tr;
    std::sort(sorted.begin(), sorted.end());
    p.is_ti = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
}

}  // namespace

TransmissionProfile transmission_profile(const Tree& t, TransmissionMethod method) {
  const Vertex n = t.order();
  TransmissionProfile p;
  p.tr.assign(n, 0);
  std::int64_t direct = 0;

  if (method == TransmissionMethod::Bfs) {
    std::vector<std::int32_t> dist(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      dist[s] = 0;
      std::int64_t sum = 0;
      std::int64_t upper = 0;
      while (head < tail) {
        Vertex x = queue[head++];
        sum += dist[x];
        if (x > s) upper += dist[x];
        for (Vertex y : t.neighbors(x)) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue[tail++] = y;
          }
        }
      }
      p.tr[s] = sum;
      direct += upper;
    }
  } else {
    const RootedTree r = root_at(t, 0);
    std::int64_t root_tr = 0;
    for (Vertex v = 0; v < n; ++v) root_tr += r.depth[v];
    p.tr[0] = root_tr;
    for (std::size_t i = 1; i < r.order.size(); ++i) {
      Vertex v = r.order[i];
      const std::int64_t s = r.size[v];
      p.tr[v] = p.tr[r.parent[v]] + n - 2 * s;
      direct += s * (n - s);
    }
  }
  finish_profile(p, direct);
  return p;
}

std::int64_t split_count(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_edge(u, v)) {
    throw Error(Errc::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) +
                                     ") is not an edge");
  }
  // Component of t - uv containing u.
  std::int64_t count = 0;
  std::vector<std::pair<Vertex, Vertex>> stack{{u, v}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex y : t.neighbors(x)) {
      if (y != from) stack.push_back({y, x});
    }
  }
  return count;
}

int degree(const Tree& t, Vertex v) { return t.degree(v); }

std::vector<Vertex> leaves(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> branching_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> decompose_at(const Tree& t, Vertex v) {
  const RootedTree r = root_at(t, v);
  std::vector<std::int64_t> sizes;
  for (Vertex c : t.neighbors(v)) sizes.push_back(r.size[c]);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<Vertex> centers(const Tree& t) {
  const Vertex n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex y : t.neighbors(leaf)) {
        if (deg[y] > 0 && --deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// Rooted canonical encoding via level-wise ranking (AHU): nodes at equal
// depth get equal ranks iff their rooted subtrees are isomorphic.
std::string rooted_code(const Tree& t, Vertex root) {
  const RootedTree r = root_at(t, root);
  const Vertex n = t.order();
  std::int32_t max_depth = 0;
  for (Vertex v = 0; v < n; ++v) max_depth = std::max(max_depth, r.depth[v]);

  std::vector<std::vector<Vertex>> by_depth(max_depth + 1);
  for (Vertex v : r.order) by_depth[r.depth[v]].push_back(v);

  std::vector<std::int32_t> rank(n, 0);
  std::vector<std::vector<std::int32_t>> child_ranks(n);
  for (std::int32_t d = max_depth; d >= 0; --d) {
    auto& nodes = by_depth[d];
    for (Vertex v : nodes) std::sort(child_ranks[v].begin(), child_ranks[v].end());
    std::sort(nodes.begin(), nodes.end(),
              [&](Vertex a, Vertex b) { return child_ranks[a] < child_ranks[b]; });
    std::int32_t current = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i > 0 && child_ranks[nodes[i]] != child_ranks[nodes[i - 1]]) ++current;
      rank[nodes[i]] = current;
    }
    for (Vertex v : nodes) {
      if (r.parent[v] >= 0) child_ranks[r.parent[v]].push_back(rank[v]);
    }
  }

  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : r.order) {
    if (r.parent[v] >= 0) children[r.parent[v]].push_back(v);
  }
  for (auto& c : children) {
    std::stable_sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }

  std::string code;
  code.reserve(2 * static_cast<std::size_t>(n));
  // Iterative DFS: (vertex, next child index).
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  code.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      Vertex c = children[v][next++];
      code.push_back('(');
      stack.push_back({c, 0});
    } else {
      code.push_back(')');
      stack.pop_back();
    }
  }
  return code;
}

}  // namespace

std::string canonical_code(const Tree& t) {
  const auto c = centers(t);
  std::string best = rooted_code(t, c.front());
  if (c.size() == 2) best = std::min(best, rooted_code(t, c.back()));
  return best;
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(t.order())) {
    throw Error(Errc::BadLabel, "relabeling must cover every vertex");
  }
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree(t.order(), edges);
}

}  // namespace titree
