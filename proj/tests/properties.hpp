#pragma once

// Randomized and exhaustive property suites shared by property_test and the
// acceptance binary. Each suite returns how many cases ran and how many failed.

#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "titree/formulas.hpp"
#include "titree/search.hpp"
#include "titree/transforms.hpp"

namespace props {

using namespace titree;

struct Result {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && cases > 0; }
};

inline int random_order(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// W equals half the transmission sum, by both methods; the oracle is
/// consulted for small orders.
inline Result half_sum_identity(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (int i = 0; i < cases; ++i) {
    const int n = random_order(rng, 1, 80);
    const Tree t = oracle::random_tree(n, rng);
    const auto bfs = transmission_profile(t, TransmissionMethod::Bfs);
    const auto edge = transmission_profile(t, TransmissionMethod::EdgeLaw);
    std::int64_t sum = 0;
    for (auto x : bfs.tr) sum += x;
    bool ok = sum % 2 == 0 && bfs.wiener == sum / 2 && edge.wiener == bfs.wiener &&
              edge.tr == bfs.tr && edge.is_ti == bfs.is_ti;
    if (ok && n <= 24) {
      const auto o = oracle::profile(t);
      ok = o.wiener == bfs.wiener && o.tr == bfs.tr && o.ti == bfs.is_ti;
    }
    r.check(ok, "half-sum identity, n=" + std::to_string(n));
  }
  return r;
}

/// Tr(u) - Tr(v) = n_v - n_u across every edge uv, and n_u + n_v = n.
inline Result edge_law(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (int i = 0; i < cases; ++i) {
    const int n = random_order(rng, 2, 80);
    const Tree t = oracle::random_tree(n, rng);
    const auto p = transmission_profile(t, TransmissionMethod::Bfs);
    bool ok = true;
    for (const Edge& e : t.edges()) {
      const auto nu = split_count(t, e.u, e.v);
      const auto nv = split_count(t, e.v, e.u);
      ok = ok && nu + nv == n && p.tr[e.u] - p.tr[e.v] == nv - nu;
    }
    r.check(ok, "edge law, n=" + std::to_string(n));
  }
  return r;
}

/// W(T) <= C(n+1,3) with equality exactly for paths.
inline Result path_bound(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (int i = 0; i < cases; ++i) {
    const int n = random_order(rng, 1, 40);
    // Mix in paths so the equality branch is exercised.
    Tree t = (i % 10 == 0) ? relabel(build_tree(PathSpec{n}), oracle::random_permutation(n, rng))
                           : oracle::random_tree(n, rng);
    const auto w = transmission_profile(t, TransmissionMethod::EdgeLaw).wiener;
    const bool is_path = branching_vertices(t).empty();
    const bool ok = w <= wiener_path(n) && (w == wiener_path(n)) == is_path;
    r.check(ok, "path bound, n=" + std::to_string(n));
  }
  return r;
}

inline Result fusion_law(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (int i = 0; i < cases; ++i) {
    const int n1 = random_order(rng, 1, 40);
    const int n2 = random_order(rng, 1, 40);
    const Tree a = oracle::random_tree(n1, rng);
    const Tree b = oracle::random_tree(n2, rng);
    const Vertex v1 = random_order(rng, 0, n1 - 1);
    const Vertex v2 = random_order(rng, 0, n2 - 1);
    const auto pa = transmission_profile(a, TransmissionMethod::EdgeLaw);
    const auto pb = transmission_profile(b, TransmissionMethod::EdgeLaw);
    const Tree f = fuse(a, v1, b, v2);
    const auto direct = transmission_profile(f, TransmissionMethod::Bfs).wiener;
    const bool ok = f.order() == n1 + n2 - 1 &&
                    direct == wiener_fusion(pa.wiener, pb.wiener, n1, n2, pa.tr[v1], pb.tr[v2]);
    r.check(ok, "fusion, n1=" + std::to_string(n1) + " n2=" + std::to_string(n2));
  }
  return r;
}

/// Straightening a non-path branch of a random order-12 tree raises W.
inline Result arm_straighten_increases(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  while (r.cases < cases) {
    const int n = 12;
    const Tree t = oracle::random_tree(n, rng);
    const Vertex v = random_order(rng, 0, n - 1);
    const auto nb = t.neighbors(v);
    const Vertex x = nb[random_order(rng, 0, static_cast<int>(nb.size()) - 1)];
    if (pendent_path(t, v, x)) continue;
    const auto out = arm_straighten(t, v, x);
    const auto before = oracle::profile(t).wiener;
    const auto after = oracle::profile(out.tree).wiener;
    // The new path is appended last, starting next to v.
    const auto size = split_count(t, x, v);
    const auto arm = pendent_path(out.tree, out.old_to_new[v], static_cast<Vertex>(n - size));
    const bool ok = out.tree.order() == n && after > before && arm &&
                    static_cast<std::int64_t>(arm->size()) == size;
    r.check(ok, "arm_straighten");
  }
  return r;
}

/// Moving a leaf from a shorter pendent path to a longer one raises W; the
/// degree drops by one exactly when the short arm was a single leaf.
inline Result majorize_increases(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  while (r.cases < cases) {
    const int n = random_order(rng, 4, 30);
    const Tree t = oracle::random_tree(n, rng);
    const Vertex v = random_order(rng, 0, n - 1);
    if (t.degree(v) < 3) continue;
    std::vector<std::vector<Vertex>> arms;
    for (Vertex x : t.neighbors(v))
      if (auto p = pendent_path(t, v, x)) arms.push_back(*p);
    if (arms.size() < 2) continue;
    std::shuffle(arms.begin(), arms.end(), rng);
    auto lng = arms[0], sht = arms[1];
    if (lng.size() < sht.size()) std::swap(lng, sht);
    const Tree m = majorize(t, v, lng[0], sht[0]);
    const auto before = transmission_profile(t, TransmissionMethod::Bfs).wiener;
    const auto after = transmission_profile(m, TransmissionMethod::Bfs).wiener;
    const int drop = t.degree(v) - m.degree(v);
    const bool ok = m.order() == n && after > before && drop == (sht.size() == 1 ? 1 : 0);
    r.check(ok, "majorize, n=" + std::to_string(n));
  }
  return r;
}

/// Every tree of order <= max_n: both transmission methods agree with the
/// oracle, half-sum identity, edge law and the path bound.
inline Result exhaustive_small(int max_n) {
  Result r;
  for (int n = 1; n <= max_n; ++n) {
    enumerate_trees(n, [&](const Tree& t) {
      const auto o = oracle::profile(t);
      const auto bfs = transmission_profile(t, TransmissionMethod::Bfs);
      const auto edge = transmission_profile(t, TransmissionMethod::EdgeLaw);
      bool ok = o.tr == bfs.tr && o.tr == edge.tr && o.wiener == bfs.wiener &&
                o.wiener == edge.wiener && o.ti == bfs.is_ti;
      std::int64_t sum = 0;
      for (auto x : o.tr) sum += x;
      ok = ok && 2 * o.wiener == sum;
      for (const Edge& e : t.edges()) {
        const auto nu = split_count(t, e.u, e.v);
        const auto nv = split_count(t, e.v, e.u);
        ok = ok && nu + nv == n && o.tr[e.u] - o.tr[e.v] == nv - nu;
      }
      const bool is_path = branching_vertices(t).empty();
      ok = ok && o.wiener <= wiener_path(n) && (o.wiener == wiener_path(n)) == is_path;
      if (!is_path) ok = ok && wiener_branching(n, branch_data_of(t)) == o.wiener;
      r.check(ok, "exhaustive, n=" + std::to_string(n));
    });
  }
  return r;
}

/// Over every TI tree of the given orders: the minimum-transmission vertex
/// has degree >= 3 and no vertex deletion leaves two equal components.
inline Result ti_structure(int lo, int hi) {
  Result r;
  for (int n = lo; n <= hi; ++n) {
    for_each_ti_tree(n, [&](const FreeTreeGenerator& gen, const TransmissionScanner& scan) {
      const Tree t = gen.tree();
      const auto tr = scan.transmissions();
      Vertex m = 0;
      for (Vertex v = 1; v < n; ++v)
        if (tr[v] < tr[m]) m = v;
      bool ok = t.degree(m) >= 3;
      const auto p = transmission_profile(t, TransmissionMethod::EdgeLaw);
      ok = ok && p.is_ti && p.min_vertex == m &&
           std::equal(p.tr.begin(), p.tr.end(), tr.begin(), tr.end());
      for (Vertex v = 0; v < n && ok; ++v) {
        const auto sizes = decompose_at(t, v);
        ok = std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end();
      }
      r.check(ok, "TI structure, n=" + std::to_string(n));
    });
  }
  return r;
}

}  // namespace props
