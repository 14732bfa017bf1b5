#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "titree/tree.hpp"

namespace titree {

/// P_n.
struct PathSpec {
  std::int64_t n = 0;
  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

/// S(a_1, ..., a_k): a center with k >= 3 pendent paths of the given lengths.
struct StarlikeSpec {
  std::vector<std::int64_t> lengths;
  friend bool operator==(const StarlikeSpec&, const StarlikeSpec&) = default;
};

/// C_n(a_1, ..., a_k): spine v_1..v_n with one leaf on each listed position.
struct OrdinaryCaterpillarSpec {
  std::int64_t spine = 0;
  std::vector<std::int64_t> positions;
  friend bool operator==(const OrdinaryCaterpillarSpec&, const OrdinaryCaterpillarSpec&) = default;
};

struct Attachment {
  std::int64_t position = 0;  // spine index a_i, 1-based
  std::int64_t length = 0;    // pendent path length b_i
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// C_n(a_1, b_1; ...; a_k, b_k): spine v_1..v_n with a pendent path of length
/// b_i hanging from v_{a_i}. Positions may repeat.
struct VariantCaterpillarSpec {
  std::int64_t spine = 0;
  std::vector<Attachment> attachments;
  friend bool operator==(const VariantCaterpillarSpec&, const VariantCaterpillarSpec&) = default;
};

using FamilySpec =
    std::variant<PathSpec, StarlikeSpec, OrdinaryCaterpillarSpec, VariantCaterpillarSpec>;

/// Maps the 1-based positional coordinates of a family onto vertex labels.
///
/// `spine[i-1]` is v_i (for a starlike tree the spine is just the center;
/// for a path it is the whole path). `arms[j][d-1]` is the vertex at
/// distance d from the spine along the j-th attachment, in declaration order.
struct LabelMap {
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> arms;
};

struct BuiltTree {
  Tree tree;
  LabelMap labels;
};

/// Throws Error{BadFamilyParams} naming the first violated constraint.
void validate(const FamilySpec& spec);

std::int64_t order_of(const FamilySpec& spec);

/// Labels: spine first in order, then attachment vertices in declaration
/// order, each arm listed outward from the spine.
BuiltTree build(const FamilySpec& spec);

inline Tree build_tree(const FamilySpec& spec) { return build(spec).tree; }

}  // namespace titree
