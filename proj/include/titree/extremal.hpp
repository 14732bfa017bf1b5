#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "titree/families.hpp"
#include "titree/formulas.hpp"

namespace titree {

enum class Verdict { NoTITree, Solved, Unresolved };

std::string_view name_of(Verdict v);

/// Recomputed from the built tree, never taken from a formula.
struct Certificate {
  std::optional<Spectrum> spectrum;       // generator used, when the case has one
  SpectrumOffsets generated;              // empty without a generator
  SpectrumOffsets direct;                 // Tr(v) - Tr(z0) from the tree
  std::int64_t tree_order = 0;
  std::int64_t direct_wiener = 0;
  bool direct_ti = false;
  bool spectrum_matches = false;          // generated == direct (true when no generator)
};

struct ExtremalOutcome {
  std::int64_t order = 0;
  Verdict verdict = Verdict::NoTITree;
  std::string case_label;                 // "odd-ii", "even-special-14", ...
  std::optional<FamilySpec> spec;
  std::int64_t predicted_wiener = 0;
  std::optional<Certificate> certificate;
  /// For Unresolved: which excluded condition fired.
  std::string reason;

  /// Solved, TI, right order, Wiener as predicted, spectrum consistent.
  bool certified() const;
};

/// Throws ParityError for even n (or n < 1).
ExtremalOutcome odd_extremal(std::int64_t n, bool with_certificate = true);

/// Throws ParityError for odd n (or n < 2).
ExtremalOutcome even_extremal(std::int64_t n, bool with_certificate = true);

/// Every case label whose hypotheses hold at n, including "no-ti-tree",
/// the special orders and "unresolved". The dispatcher requires exactly one.
std::vector<std::string> matching_cases(std::int64_t n);

/// Dispatches on parity.
ExtremalOutcome extremal(std::int64_t n, bool with_certificate = true);

struct ConditionResult {
  bool ti = false;
  std::string reason;
};

/// Perfect-square characterization of when the case's candidate tree is TI.
/// Labels: odd-i .. odd-iv, even-i .. even-iv. Throws PreconditionFailed
/// when n lacks the case's parity or square prerequisites.
ConditionResult ti_condition(std::string_view case_label, std::int64_t n);

/// The candidate tree of a case label at order n (same labels as above).
FamilySpec candidate_of(std::string_view case_label, std::int64_t n);

struct DichotomyResult {
  bool case_ii_ti = false;
  bool case_iii_ti = false;
};

/// For even n >= 34 with 4n-15 square, checks directly which of the case-ii
/// and case-iii trees is TI. Throws PreconditionFailed outside that domain
/// and DichotomyViolated if neither is.
DichotomyResult square_dichotomy(std::int64_t n);

enum class TreeType { A, B, Other };

std::string_view name_of(TreeType t);

/// Type of an odd-order TI tree from the components at its
/// minimum-transmission vertex. Throws NotTI or ParityError.
TreeType classify_type(const Tree& t);

}  // namespace titree
