#include "titree/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "titree/error.hpp"
#include "titree/sparse6.hpp"

namespace titree {
namespace {

constexpr int kInf = 1 << 30;

void check_order(int n, int cap) {
  if (n < 1) throw Error(Errc::PreconditionFailed, "order must be >= 1");
  if (n > cap) {
    throw Error(Errc::CapExceeded, "order " + std::to_string(n) + " exceeds the enumeration cap " +
                                       std::to_string(cap) + " (set TITREE_MAX_ORDER to raise it)");
  }
}

}  // namespace

int default_order_cap() {
  if (const char* env = std::getenv("TITREE_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 32;
}

// ---------------------------------------------------------------------------
// Level-sequence successor for free trees (Wright, Richmond, Odlyzko and
// McKay). L holds levels (root = 1), W the parent index, both 1-based.

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw Error(Errc::PreconditionFailed, "order must be >= 1");
  parent_.assign(n, -1);
  depth_.assign(n, 0);
  L_.assign(n + 2, 0);
  W_.assign(n + 2, 0);
}

void FreeTreeGenerator::emit() {
  parent_[0] = -1;
  depth_[0] = 0;
  for (int i = 2; i <= n_; ++i) {
    parent_[i - 1] = W_[i] - 1;
    depth_[i - 1] = L_[i] - 1;
  }
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ <= 3) {
      // The single tree: P_1, P_2 or P_3 rooted at its middle.
      for (int i = 1; i < n_; ++i) {
        parent_[i] = 0;
        depth_[i] = 1;
      }
      done_ = true;
      return true;
    }
    const int n = n_;
    const int k = n / 2 + 1;
    p_ = n == 4 ? 3 : n;
    q_ = n - 1;
    h1_ = k;
    h2_ = n;
    r_ = k;
    c_ = n % 2 != 0 ? kInf : n + 1;
    for (int i = 1; i <= k; ++i) {
      W_[i] = i - 1;
      L_[i] = i;
    }
    for (int i = k + 1; i <= n; ++i) {
      L_[i] = i - k + 1;
      W_[i] = i - 1;
    }
    W_[1] = 0;
    W_[k + 1] = 1;
    emit();
    return true;
  }
  if (q_ == 0) {
    done_ = true;
    return false;
  }
  step();
  emit();
  return true;
}

void FreeTreeGenerator::step() {
  const int n = n_;
  auto& L = L_;
  auto& W = W_;
  int &p = p_, &q = q_, &h1 = h1_, &h2 = h2_, &r = r_, &c = c_;

  bool fixit = false;
  if (c == n + 1 || (p == h2 && ((L[h1] == L[h2] + 1 && n - h2 > r - h1) ||
                                 (L[h1] == L[h2] && n - h2 + 1 < r - h1)))) {
    if (L[r] > 3) {
      p = r;
      q = W[r];
      if (h1 == r) h1 = h1 - 1;
      fixit = true;
    } else {
      p = r;
      r = r - 1;
      q = 2;
    }
  }

  bool needr = false, needc = false, needh2 = false;
  if (p <= h1) h1 = p - 1;
  if (p <= r) {
    needr = true;
  } else if (p <= h2) {
    needh2 = true;
  } else if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
    if (p <= c) needc = true;
  } else {
    c = kInf;
  }

  const int oldp = p;
  const int delta = q - p;
  const int oldlq = L[q];
  const int oldwq = W[q];
  p = kInf;
  for (int i = oldp; i <= n; ++i) {
    L[i] = L[i + delta];
    if (L[i] == 2) {
      W[i] = 1;
    } else {
      p = i;
      q = L[i] == oldlq ? oldwq : W[i + delta] - delta;
      W[i] = q;
    }
    if (needr && L[i] == 2) {
      needr = false;
      needh2 = true;
      r = i - 1;
    }
    if (needh2 && L[i] <= L[i - 1] && i > r + 1) {
      needh2 = false;
      h2 = i - 1;
      if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
        needc = true;
      } else {
        c = kInf;
      }
    }
    if (needc) {
      if (L[i] != L[h1 - h2 + i] - 1) {
        needc = false;
        c = i;
      } else {
        c = i + 1;
      }
    }
  }

  if (fixit) {
    r = n - h1 + 1;
    for (int i = r + 1; i <= n; ++i) {
      L[i] = i - r + 1;
      W[i] = i - 1;
    }
    W[r + 1] = 1;
    h2 = n;
    p = n;
    q = p - 1;
    c = kInf;
  } else {
    if (p == kInf) {
      p = L[oldp - 1] != 2 ? oldp - 1 : oldp - 2;
      q = W[p];
    }
    if (needh2) {
      h2 = n;
      c = (L[h2] == L[h1] - 1 && h1 == r) ? n + 1 : kInf;
    }
  }
}

void enumerate_trees(int n, const std::function<void(const Tree&)>& f, int cap) {
  check_order(n, cap);
  FreeTreeGenerator gen(n);
  while (gen.next()) f(gen.tree());
}

// ---------------------------------------------------------------------------

Shard::Shard(int n, int index, int count) : gen_(n), index_(index), count_(count) {}

bool Shard::next() {
  while (gen_.next()) {
    ++position_;
    if (position_ % count_ == index_) return true;
  }
  return false;
}

std::vector<Shard> enumerate_shards(int n, int shard_count, int cap) {
  check_order(n, cap);
  if (shard_count < 1) throw Error(Errc::PreconditionFailed, "shard count must be >= 1");
  std::vector<Shard> shards;
  shards.reserve(shard_count);
  for (int i = 0; i < shard_count; ++i) shards.emplace_back(n, i, shard_count);
  return shards;
}

// ---------------------------------------------------------------------------

bool TransmissionScanner::scan(std::span<const Vertex> parent, bool full) {
  const auto n = static_cast<std::int32_t>(parent.size());
  size_.assign(n, 1);
  tr_.resize(n);
  for (std::int32_t i = n - 1; i > 0; --i) size_[parent[i]] += size_[i];

  // Tr(root) is the sum of depths, which equals the sum of the sizes of all
  // non-root subtrees.
  std::int64_t root = 0;
  for (std::int32_t i = 1; i < n; ++i) root += size_[i];
  tr_[0] = root;

  const std::size_t range = static_cast<std::size_t>(n) * (n - 1) / 2 + 1;
  if (seen_.size() < range) seen_.assign(range, 0);
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  bool ti = n > 1;
  seen_[root] = stamp_;
  for (std::int32_t i = 1; i < n; ++i) {
    const std::int64_t t = tr_[parent[i]] + n - 2 * size_[i];
    tr_[i] = t;
    if (seen_[t] == stamp_) {
      ti = false;
      if (!full) return false;
    }
    seen_[t] = stamp_;
  }

  std::int64_t w = 0;
  for (std::int32_t i = 1; i < n; ++i) w += std::int64_t{size_[i]} * (n - size_[i]);
  wiener_ = w;
  return ti;
}

// ---------------------------------------------------------------------------

bool SearchReport::same_result(const SearchReport& o) const {
  return order == o.order && total_trees == o.total_trees && ti_trees == o.ti_trees &&
         max_wiener == o.max_wiener && maximizers == o.maximizers;
}

namespace {

void normalize(std::vector<Maximizer>& m) {
  std::sort(m.begin(), m.end(), [](const Maximizer& a, const Maximizer& b) {
    return a.code != b.code ? a.code < b.code : a.sparse6 < b.sparse6;
  });
  m.erase(std::unique(m.begin(), m.end(),
                      [](const Maximizer& a, const Maximizer& b) { return a.code == b.code; }),
          m.end());
}

}  // namespace

SearchReport merge(const SearchReport& a, const SearchReport& b) {
  if (a.order != b.order) throw Error(Errc::PreconditionFailed, "cannot merge different orders");
  SearchReport out;
  out.order = a.order;
  out.total_trees = a.total_trees + b.total_trees;
  out.ti_trees = a.ti_trees + b.ti_trees;
  out.elapsed_seconds = std::max(a.elapsed_seconds, b.elapsed_seconds);
  if (a.max_wiener || b.max_wiener) {
    out.max_wiener = std::max(a.max_wiener.value_or(-1), b.max_wiener.value_or(-1));
  }
  for (const auto* r : {&a, &b}) {
    if (r->max_wiener && r->max_wiener == out.max_wiener) {
      out.maximizers.insert(out.maximizers.end(), r->maximizers.begin(), r->maximizers.end());
    }
  }
  normalize(out.maximizers);
  return out;
}

SearchReport search_shard(Shard& shard) {
  const auto start = std::chrono::steady_clock::now();
  const int n = shard.generator().order();
  SearchReport report;
  report.order = n;
  TransmissionScanner scanner;
  std::int64_t best = -1;
  std::vector<std::vector<Vertex>> best_trees;
  while (shard.next()) {
    ++report.total_trees;
    const auto parents = shard.generator().parents();
    if (!scanner.scan(parents)) continue;
    ++report.ti_trees;
    const std::int64_t w = scanner.wiener();
    if (w > best) {
      best = w;
      best_trees.clear();
    }
    if (w == best) best_trees.emplace_back(parents.begin(), parents.end());
  }
  if (best >= 0) report.max_wiener = best;
  for (const auto& p : best_trees) {
    const Tree t = Tree::from_parents(p);
    report.maximizers.push_back({canonical_code(t), encode_sparse6(t)});
  }
  normalize(report.maximizers);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport search_max_ti(int n, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto shards = enumerate_shards(n, options.shards, options.cap);
  std::vector<SearchReport> parts(shards.size());
  if (options.threads && shards.size() > 1) {
    std::vector<std::thread> workers;
    workers.reserve(shards.size());
    for (std::size_t i = 0; i < shards.size(); ++i) {
      workers.emplace_back([&, i] { parts[i] = search_shard(shards[i]); });
    }
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t i = 0; i < shards.size(); ++i) parts[i] = search_shard(shards[i]);
  }
  SearchReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = merge(out, parts[i]);
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void for_each_ti_tree(
    int n, const std::function<void(const FreeTreeGenerator&, const TransmissionScanner&)>& f,
    int cap) {
  check_order(n, cap);
  FreeTreeGenerator gen(n);
  TransmissionScanner scanner;
  while (gen.next()) {
    if (scanner.scan(gen.parents())) f(gen, scanner);
  }
}

// ---------------------------------------------------------------------------

bool VerifyTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

namespace {

void check_row(VerifyRow& row) {
  const SearchReport& rep = row.report;
  const ExtremalOutcome& exp = row.expected;
  switch (exp.verdict) {
    case Verdict::NoTITree:
      row.pass = rep.ti_trees == 0;
      row.message = row.pass ? "no TI tree"
                             : "expected no TI tree, found " + std::to_string(rep.ti_trees);
      return;
    case Verdict::Unresolved:
      row.pass = true;
      row.message = "unresolved order (" + exp.reason + "); nothing to compare";
      return;
    case Verdict::Solved:
      break;
  }
  if (rep.maximizers.size() != 1) {
    row.pass = false;
    row.message = "expected a unique maximizer, found " + std::to_string(rep.maximizers.size());
    return;
  }
  const std::string code = canonical_code(build_tree(*exp.spec));
  if (rep.maximizers.front().code != code) {
    row.pass = false;
    row.message = "maximizer is not isomorphic to the " + exp.case_label + " tree";
    return;
  }
  if (rep.max_wiener != exp.predicted_wiener) {
    row.pass = false;
    row.message = "maximum Wiener index " + std::to_string(rep.max_wiener.value_or(-1)) +
                  " differs from predicted " + std::to_string(exp.predicted_wiener);
    return;
  }
  row.pass = true;
  row.message = "unique maximizer matches " + exp.case_label;
}

}  // namespace

VerifyTable verify_appendix(int lo, int hi, const SearchOptions& options,
                            const std::function<void(const VerifyRow&)>& progress) {
  if (lo < 1 || hi < lo) throw Error(Errc::PreconditionFailed, "bad order range");
  check_order(hi, options.cap);
  VerifyTable table;
  for (int n = lo; n <= hi; ++n) {
    VerifyRow row;
    row.order = n;
    row.report = search_max_ti(n, options);
    row.expected = extremal(n);
    check_row(row);
    if (progress) progress(row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

void require_pass(const VerifyTable& table) {
  for (const auto& row : table.rows) {
    if (!row.pass) {
      throw Error(Errc::VerificationFailed,
                  "order " + std::to_string(row.order) + ": " + row.message);
    }
  }
}

}  // namespace titree
