#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "titree/families.hpp"

namespace titree {

// ---------------------------------------------------------------------------
// Perfect squares. Exact integer arithmetic only.

/// floor(sqrt(m)) for m >= 0.
std::int64_t integer_sqrt(std::int64_t m);

/// false for negative m.
bool is_perfect_square(std::int64_t m);

/// sqrt(m) when m is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t m);

// ---------------------------------------------------------------------------
// General Wiener identities.

/// C(n+1, 3), the Wiener index of P_n.
std::int64_t wiener_path(std::int64_t n);

/// Wiener index after identifying a vertex of G1 with a vertex of G2, given
/// the parts' Wiener indices, orders and the transmissions of the glued vertices.
std::int64_t wiener_fusion(std::int64_t w1, std::int64_t w2, std::int64_t n1, std::int64_t n2,
                           std::int64_t tr1, std::int64_t tr2);

/// C(n+1,3) minus, for every branching vertex, the sum of products of all
/// triples of its component sizes. Each size list must sum to n - 1.
std::int64_t wiener_branching(std::int64_t n, std::span<const std::vector<std::int64_t>> branch_data);

/// Component sizes at every branching vertex of t, suitable for wiener_branching.
std::vector<std::vector<std::int64_t>> branch_data_of(const Tree& t);

// ---------------------------------------------------------------------------
// Closed-form Wiener indices of the candidate families. Each throws
// PreconditionFailed when n violates its parity / square requirements.

std::int64_t odd_case_ii_wiener(std::int64_t n);     // S((n-1)/2, (n-5)/2, 2)
std::int64_t odd_s3_wiener(std::int64_t n);          // S((n-1)/2, (n-7)/2, 3)
std::int64_t odd_case_iii_wiener(std::int64_t n);    // C_{n-2}((n-1)/2, (n-3)/2 + sqrt(n-2))
std::int64_t odd_case_iv_wiener(std::int64_t n);     // C_{n-2}((n+1)/2, (n-3)/2 + sqrt(n-1))
std::int64_t even_s4_wiener(std::int64_t n);         // S(n/2-1, n/2-4, 4)
std::int64_t even_aux_cat_wiener(std::int64_t n);    // C_{n-4}(n/2-2, 3; n/2-1, 1)
std::int64_t even_case_ii_wiener(std::int64_t n);    // C_{n-3}(n/2-1, 2; n/2+k-2, 1)
std::int64_t even_case_iii_wiener(std::int64_t n);   // C_{n-3}(n/2-1, 2; n/2+k-3, 1)
std::int64_t even_double_b2_wiener(std::int64_t n);  // C_{n-4}(n/2-1, 2; n/2+k-2, 2)
std::int64_t even_case3_k_ell_wiener(std::int64_t n);
std::int64_t even_case3b_wiener(std::int64_t n);
std::int64_t even_case3c_wiener(std::int64_t n);
std::int64_t even_case_iv_wiener(std::int64_t n);    // k from 8n-23

enum class ClosedForm {
  OddCaseII,
  OddS3,
  OddCaseIII,
  OddCaseIV,
  EvenS4,
  EvenAuxCat,
  EvenCaseII,
  EvenCaseIII,
  EvenDoubleB2,
  EvenCase3KEll,
  EvenCase3b,
  EvenCase3c,
  EvenCaseIV,
};

std::span<const ClosedForm> all_closed_forms();
std::string_view name_of(ClosedForm f);
std::optional<ClosedForm> closed_form_by_name(std::string_view name);

/// Parity, square and family-validity preconditions all hold.
bool applies(ClosedForm f, std::int64_t n);
std::int64_t evaluate(ClosedForm f, std::int64_t n);
/// The tree whose Wiener index the closed form evaluates.
FamilySpec family_of(ClosedForm f, std::int64_t n);

/// k = (sqrt(4n-15)-1)/2 and the secondary parameter l of the three
/// double-attachment forms, exposed for auditing.
struct KEll {
  std::int64_t k = 0;
  std::int64_t ell = 0;
};
KEll case3_parameters(ClosedForm f, std::int64_t n);

// ---------------------------------------------------------------------------
// Transmission spectra: Tr(v) - Tr(z0) over all vertices, where z0 is the
// designated branching vertex of the candidate tree.

struct SpectrumOffsets {
  std::vector<std::int64_t> offsets;  // multiset, ascending
  std::int64_t k = 0;                 // square root parameter, when the family has one

  /// True iff no offset repeats, i.e. the tree is transmission irregular.
  bool distinct() const;
  friend bool operator==(const SpectrumOffsets&, const SpectrumOffsets&) = default;
};

SpectrumOffsets spectrum_odd_i(std::int64_t n);
SpectrumOffsets spectrum_odd_ii(std::int64_t n);
SpectrumOffsets spectrum_odd_iii(std::int64_t n);
SpectrumOffsets spectrum_odd_iv(std::int64_t n);
SpectrumOffsets spectrum_even_i(std::int64_t n);
SpectrumOffsets spectrum_even_ii(std::int64_t n);
SpectrumOffsets spectrum_even_iii(std::int64_t n);
SpectrumOffsets spectrum_even_iv(std::int64_t n);

enum class Spectrum { OddI, OddII, OddIII, OddIV, EvenI, EvenII, EvenIII, EvenIV };

std::span<const Spectrum> all_spectra();
std::string_view name_of(Spectrum s);
std::optional<Spectrum> spectrum_by_name(std::string_view name);

bool applies(Spectrum s, std::int64_t n);
SpectrumOffsets generate(Spectrum s, std::int64_t n);
FamilySpec family_of(Spectrum s, std::int64_t n);
/// Label of z0 in build(family_of(s, n)).
Vertex base_vertex(Spectrum s, std::int64_t n, const LabelMap& labels);

/// Offsets Tr(v) - Tr(base) computed from the tree itself, ascending.
SpectrumOffsets direct_offsets(const Tree& t, Vertex base,
                               TransmissionMethod method = TransmissionMethod::EdgeLaw);

}  // namespace titree
