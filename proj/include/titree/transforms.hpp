#pragma once

#include <optional>
#include <vector>

#include "titree/tree.hpp"

namespace titree {

/// Identify v1 of t1 with v2 of t2. Labels of t1 are kept; the remaining
/// vertices of t2 follow in their original order, starting at |t1|.
Tree fuse(const Tree& t1, Vertex v1, const Tree& t2, Vertex v2);

struct RelabeledTree {
  Tree tree;
  /// old label -> new label, or -1 for vertices that were replaced.
  std::vector<Vertex> old_to_new;
};

/// Replace the branch of t - v containing branch_root by a pendent path of
/// the same order hanging at v. Surviving vertices keep their relative
/// order; the new path vertices are appended, outward from v.
///
/// Throws NotAnEdge if branch_root is not adjacent to v and
/// BranchIsAlreadyPath if the branch already hangs as a path.
RelabeledTree arm_straighten(const Tree& t, Vertex v, Vertex branch_root);

/// Move the leaf of the pendent path starting at short_arm to the end of the
/// pendent path starting at long_arm. Labels are unchanged.
///
/// Throws NotPendentPaths unless degree(v) >= 3 and both arms are distinct
/// pendent paths at v; LengthOrderViolated if the short arm is longer.
Tree majorize(const Tree& t, Vertex v, Vertex long_arm, Vertex short_arm);

/// Vertices of the pendent path at v that starts at `first`, outward, or
/// nullopt if that branch is not a pendent path.
std::optional<std::vector<Vertex>> pendent_path(const Tree& t, Vertex v, Vertex first);

}  // namespace titree
