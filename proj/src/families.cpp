#include "titree/families.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "titree/checked.hpp"
#include "titree/error.hpp"

namespace titree {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::BadFamilyParams, what); }

void check(const PathSpec& s) {
  if (s.n < 1) bad("path order must be >= 1");
}

void check(const StarlikeSpec& s) {
  if (s.lengths.size() < 3) bad("starlike tree needs k >= 3 pendent paths");
  for (auto a : s.lengths) {
    if (a < 1) bad("starlike arm lengths must be >= 1");
  }
}

void check_spine_position(std::int64_t spine, std::int64_t a) {
  if (a < 2 || a > spine - 1) {
    bad("attachment position " + std::to_string(a) + " outside 2.." + std::to_string(spine - 1));
  }
}

void check(const OrdinaryCaterpillarSpec& s) {
  if (s.spine < 3) bad("caterpillar spine must have n >= 3");
  if (s.positions.size() < 2) bad("ordinary caterpillar needs k >= 2 positions");
  for (auto a : s.positions) check_spine_position(s.spine, a);
  auto sorted = s.positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    bad("ordinary caterpillar positions must be distinct");
  }
}

void check(const VariantCaterpillarSpec& s) {
  if (s.spine < 3) bad("caterpillar spine must have n >= 3");
  if (s.attachments.size() < 2) bad("variant caterpillar needs k >= 2 attachments");
  std::int64_t longest = 0;
  for (const auto& at : s.attachments) {
    check_spine_position(s.spine, at.position);
    if (at.length < 1) bad("pendent path lengths must be >= 1");
    longest = std::max(longest, at.length);
  }
  if (longest < 2) bad("variant caterpillar needs max b_i >= 2");
}

std::int64_t order(const PathSpec& s) { return s.n; }
std::int64_t order(const StarlikeSpec& s) {
  std::int64_t total = 1;
  for (auto a : s.lengths) total = checked::add(total, a, "starlike order");
  return total;
}
std::int64_t order(const OrdinaryCaterpillarSpec& s) {
  return checked::add(s.spine, static_cast<std::int64_t>(s.positions.size()), "caterpillar order");
}
std::int64_t order(const VariantCaterpillarSpec& s) {
  std::int64_t total = s.spine;
  for (const auto& at : s.attachments) total = checked::add(total, at.length, "caterpillar order");
  return total;
}

class Builder {
 public:
  explicit Builder(std::int64_t order) {
    if (order > kMaxTreeOrder) throw Error(Errc::Overflow, "family order too large");
    edges_.reserve(static_cast<std::size_t>(order));
  }

  Vertex add_vertex() { return next_++; }

  void add_path(std::int64_t count, LabelMap& labels) {
    for (std::int64_t i = 0; i < count; ++i) {
      Vertex v = add_vertex();
      if (i > 0) edges_.push_back({v - 1, v});
      labels.spine.push_back(v);
    }
  }

  void hang_path(Vertex from, std::int64_t length, LabelMap& labels) {
    auto& arm = labels.arms.emplace_back();
    Vertex prev = from;
    for (std::int64_t i = 0; i < length; ++i) {
      Vertex v = add_vertex();
      edges_.push_back({prev, v});
      arm.push_back(v);
      prev = v;
    }
  }

  Tree finish() const { return Tree(next_, edges_); }

 private:
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit([](const auto& s) { check(s); }, spec);
}

std::int64_t order_of(const FamilySpec& spec) {
  validate(spec);
  return std::visit([](const auto& s) { return order(s); }, spec);
}

BuiltTree build(const FamilySpec& spec) {
  Builder b(order_of(spec));
  LabelMap labels;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PathSpec>) {
          b.add_path(s.n, labels);
        } else if constexpr (std::is_same_v<S, StarlikeSpec>) {
          b.add_path(1, labels);
          for (auto a : s.lengths) b.hang_path(labels.spine[0], a, labels);
        } else if constexpr (std::is_same_v<S, OrdinaryCaterpillarSpec>) {
          b.add_path(s.spine, labels);
          for (auto a : s.positions) b.hang_path(labels.spine[a - 1], 1, labels);
        } else {
          b.add_path(s.spine, labels);
          for (const auto& at : s.attachments) {
            b.hang_path(labels.spine[at.position - 1], at.length, labels);
          }
        }
      },
      spec);
  return BuiltTree{b.finish(), std::move(labels)};
}

}  // namespace titree
