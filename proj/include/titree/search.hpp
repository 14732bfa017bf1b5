#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "titree/extremal.hpp"
#include "titree/tree.hpp"

namespace titree {

/// Largest order enumerate/search accept unless told otherwise: the value of
/// TITREE_MAX_ORDER when set to a positive integer, else 32.
int default_order_cap();

/// Free trees of order n, one per isomorphism class, as level sequences of
/// the tree rooted at its center (or centroid pair), in constant amortized
/// time per tree.
///
///   FreeTreeGenerator gen(n);
///   while (gen.next()) use(gen.parents());
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Advance to the next tree; false once every tree has been produced.
  bool next();

  int order() const { return n_; }
  /// parents()[0] == -1; every other parent precedes its child.
  std::span<const Vertex> parents() const { return parent_; }
  /// Depths in preorder, root depth 0.
  std::span<const std::int32_t> depths() const { return depth_; }
  Tree tree() const { return Tree::from_parents(parent_); }

 private:
  void emit();
  void step();

  int n_;
  bool started_ = false;
  bool done_ = false;
  // 1-based state of the successor algorithm.
  std::vector<int> L_, W_;
  int p_ = 0, q_ = 0, h1_ = 0, h2_ = 0, r_ = 0, c_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::int32_t> depth_;
};

/// Calls f(tree) for every free tree of order n. Throws CapExceeded above cap.
void enumerate_trees(int n, const std::function<void(const Tree&)>& f,
                     int cap = default_order_cap());

/// A cursor over the trees whose position in the full enumeration is
/// congruent to `index` modulo `count`.
class Shard {
 public:
  Shard(int n, int index, int count);

  bool next();
  const FreeTreeGenerator& generator() const { return gen_; }
  int index() const { return index_; }
  int count() const { return count_; }

 private:
  FreeTreeGenerator gen_;
  int index_;
  int count_;
  std::int64_t position_ = -1;
};

/// shard_count independent cursors whose union is the full enumeration.
/// Throws CapExceeded above cap and PreconditionFailed for shard_count < 1.
std::vector<Shard> enumerate_shards(int n, int shard_count, int cap = default_order_cap());

/// Transmissions and Wiener index of a tree given in parent form (parents
/// before children), with an early exit on the first repeated transmission.
class TransmissionScanner {
 public:
  /// Returns is_ti. wiener() and transmissions() are complete only when it
  /// returns true or when `full` is set.
  bool scan(std::span<const Vertex> parent, bool full = false);

  std::int64_t wiener() const { return wiener_; }
  std::span<const std::int64_t> transmissions() const { return tr_; }

 private:
  std::vector<std::int32_t> size_;
  std::vector<std::int64_t> tr_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::int64_t wiener_ = 0;
};

struct Maximizer {
  std::string code;     // canonical_code
  std::string sparse6;  // labels as produced by the generator
  friend bool operator==(const Maximizer&, const Maximizer&) = default;
};

struct SearchReport {
  int order = 0;
  std::int64_t total_trees = 0;
  std::int64_t ti_trees = 0;
  std::optional<std::int64_t> max_wiener;
  std::vector<Maximizer> maximizers;  // sorted by code
  double elapsed_seconds = 0;         // not part of equality

  /// Everything but the timing.
  bool same_result(const SearchReport& other) const;
};

/// Combine reports of disjoint parts of one order's enumeration.
SearchReport merge(const SearchReport& a, const SearchReport& b);

struct SearchOptions {
  int shards = 1;
  int cap = default_order_cap();
  /// Run shards on separate threads (otherwise one after another).
  bool threads = true;
};

SearchReport search_shard(Shard& shard);
SearchReport search_max_ti(int n, const SearchOptions& options = {});

/// Calls f(generator) for each TI tree of order n with transmissions filled.
void for_each_ti_tree(int n,
                      const std::function<void(const FreeTreeGenerator&,
                                               const TransmissionScanner&)>& f,
                      int cap = default_order_cap());

struct VerifyRow {
  int order = 0;
  SearchReport report;
  ExtremalOutcome expected;
  bool pass = false;
  std::string message;
};

struct VerifyTable {
  std::vector<VerifyRow> rows;
  bool all_pass() const;
};

/// Exhaustive check of every order in [lo, hi] against the dispatcher:
/// orders without a TI tree must enumerate none; solved orders must have a
/// unique maximizer isomorphic to the dispatcher's tree, with its Wiener
/// index. `progress` is called after each order.
VerifyTable verify_appendix(int lo, int hi, const SearchOptions& options = {},
                            const std::function<void(const VerifyRow&)>& progress = {});

/// Throws VerificationFailed naming the first failing order.
void require_pass(const VerifyTable& table);

}  // namespace titree
