#include "titree/extremal.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include "titree/checked.hpp"
#include "titree/error.hpp"
#include "titree/transforms.hpp"

namespace titree {
namespace {

using checked::add;
using checked::mul;
using checked::sub;

bool ps(std::int64_t m) { return is_perfect_square(m); }

/// Names of the expressions (given as "label", value) that are perfect squares.
std::string squares_among(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
  std::string out;
  for (const auto& [label, value] : items) {
    if (!ps(value)) continue;
    if (!out.empty()) out += ", ";
    out += std::string(label) + "=" + std::to_string(value);
  }
  return out;
}

bool any_square(std::initializer_list<std::int64_t> values) {
  return std::any_of(values.begin(), values.end(), ps);
}

[[noreturn]] void precondition(std::string_view label, std::int64_t n, std::string_view what) {
  throw Error(Errc::PreconditionFailed, std::string(label) + " at n = " + std::to_string(n) +
                                            ": " + std::string(what));
}

std::int64_t k_of(std::int64_t n) { return (integer_sqrt(4 * n - 15) - 1) / 2; }

bool general_even_range(std::int64_t n) { return n >= 16 && n != 22 && n != 24; }

std::optional<std::string> unresolved_reason(std::int64_t n) {
  if (!general_even_range(n)) return std::nullopt;
  if (ps(4 * n - 7)) return "4n-7 is a perfect square";
  if (!ps(4 * n - 15) && ps(8 * n - 15)) return "8n-15 is a perfect square";
  return std::nullopt;
}

FamilySpec special_spec(std::int64_t n) {
  switch (n) {
    case 14: return VariantCaterpillarSpec{9, {{3, 1}, {5, 1}, {5, 3}}};
    case 22: return VariantCaterpillarSpec{17, {{11, 2}, {13, 3}}};
    case 24: return VariantCaterpillarSpec{21, {{11, 2}, {12, 1}}};
    default: break;
  }
  throw std::logic_error("not a special order");
}

std::optional<Spectrum> spectrum_of(std::string_view label) {
  if (label == "odd-i") return Spectrum::OddI;
  if (label == "odd-ii") return Spectrum::OddII;
  if (label == "odd-iii") return Spectrum::OddIII;
  if (label == "odd-iv") return Spectrum::OddIV;
  if (label == "even-i") return Spectrum::EvenI;
  if (label == "even-ii") return Spectrum::EvenII;
  if (label == "even-iii") return Spectrum::EvenIII;
  if (label == "even-iv") return Spectrum::EvenIV;
  return std::nullopt;
}

/// Wiener index predicted without touching the built tree where a closed form
/// exists; otherwise from the branching formula on the component sizes.
std::int64_t predicted_wiener(std::string_view label, std::int64_t n, const Tree& tree) {
  if (label == "odd-ii") return odd_case_ii_wiener(n);
  if (label == "odd-iii") return odd_case_iii_wiener(n);
  if (label == "odd-iv") return odd_case_iv_wiener(n);
  if (label == "even-ii") return even_case_ii_wiener(n);
  if (label == "even-iii") return even_case_iii_wiener(n);
  if (label == "even-iv") return even_case_iv_wiener(n);
  if (label == "odd-i") {
    const std::vector<std::vector<std::int64_t>> sizes{{(n - 1) / 2, (n - 3) / 2, 1}};
    return wiener_branching(n, sizes);
  }
  if (label == "even-i") {
    const std::vector<std::vector<std::int64_t>> sizes{{n / 2 - 1, n / 2 - 2, 2}};
    return wiener_branching(n, sizes);
  }
  return wiener_branching(n, branch_data_of(tree));
}

Certificate certify(std::string_view label, std::int64_t n, const BuiltTree& built) {
  Certificate c;
  c.spectrum = spectrum_of(label);
  const auto profile = transmission_profile(built.tree, TransmissionMethod::EdgeLaw);
  c.tree_order = built.tree.order();
  c.direct_wiener = profile.wiener;
  c.direct_ti = profile.is_ti;
  Vertex base = profile.min_vertex;
  if (c.spectrum) {
    base = base_vertex(*c.spectrum, n, built.labels);
    c.generated = generate(*c.spectrum, n);
  }
  const std::int64_t beta = profile.tr[base];
  c.direct.offsets.reserve(profile.tr.size());
  for (auto tr : profile.tr) c.direct.offsets.push_back(tr - beta);
  std::sort(c.direct.offsets.begin(), c.direct.offsets.end());
  c.direct.k = c.generated.k;
  c.spectrum_matches = !c.spectrum || c.generated.offsets == c.direct.offsets;
  return c;
}

ExtremalOutcome dispatch(std::int64_t n, bool with_certificate) {
  const auto cases = matching_cases(n);
  if (cases.size() != 1) {
    std::string all;
    for (const auto& c : cases) all += " " + c;
    throw std::logic_error("order " + std::to_string(n) + " matches " +
                           std::to_string(cases.size()) + " cases:" + all);
  }
  ExtremalOutcome out;
  out.order = n;
  out.case_label = cases.front();
  if (out.case_label == "no-ti-tree") {
    out.verdict = Verdict::NoTITree;
    return out;
  }
  if (out.case_label == "unresolved") {
    out.verdict = Verdict::Unresolved;
    out.reason = *unresolved_reason(n);
    return out;
  }
  out.verdict = Verdict::Solved;
  out.spec = candidate_of(out.case_label, n);
  const BuiltTree built = build(*out.spec);
  out.predicted_wiener = predicted_wiener(out.case_label, n, built.tree);
  if (with_certificate) out.certificate = certify(out.case_label, n, built);
  return out;
}

}  // namespace

std::string_view name_of(Verdict v) {
  switch (v) {
    case Verdict::NoTITree: return "no-ti-tree";
    case Verdict::Solved: return "solved";
    case Verdict::Unresolved: return "unresolved";
  }
  return "";
}

std::string_view name_of(TreeType t) {
  switch (t) {
    case TreeType::A: return "A";
    case TreeType::B: return "B";
    case TreeType::Other: return "other";
  }
  return "";
}

bool ExtremalOutcome::certified() const {
  if (verdict != Verdict::Solved || !certificate) return false;
  const Certificate& c = *certificate;
  return c.tree_order == order && c.direct_ti && c.direct_wiener == predicted_wiener &&
         c.spectrum_matches && (!c.spectrum || c.generated.distinct());
}

std::vector<std::string> matching_cases(std::int64_t n) {
  std::vector<std::string> out;
  if (n < 1) return out;
  if (n % 2 != 0) {
    if (n < 7) return {"no-ti-tree"};
    const bool a = ps(n - 2), b = ps(n - 1);
    const bool c = ps(2 * n - 6), d = ps(2 * n - 2);
    if (!a && !b) out.push_back("odd-i");
    if ((a || b) && !c && !d) out.push_back("odd-ii");
    if (a && (c || d)) out.push_back("odd-iii");
    if (b && c) out.push_back("odd-iv");
    return out;
  }
  if (n < 14) return {"no-ti-tree"};
  if (n == 14 || n == 22 || n == 24) return {"even-special-" + std::to_string(n)};
  if (unresolved_reason(n)) out.push_back("unresolved");
  const bool s15 = ps(4 * n - 15), s7 = ps(4 * n - 7);
  const bool s23 = ps(8 * n - 23), s8_15 = ps(8 * n - 15);
  if (!s15 && !s7 && !s23 && !s8_15) out.push_back("even-i");
  if (s15) {
    const std::int64_t k = k_of(n);
    const bool secondary =
        any_square({8 * k * k + 17, 8 * k * k + 8 * k + 9, 8 * k * k + 16 * k + 9});
    out.push_back(secondary ? "even-iii" : "even-ii");
  }
  if (!s15 && !s7 && s23) out.push_back("even-iv");
  return out;
}

ExtremalOutcome odd_extremal(std::int64_t n, bool with_certificate) {
  if (n < 1 || n % 2 == 0) {
    throw Error(Errc::ParityError, "odd_extremal needs odd n >= 1, got " + std::to_string(n));
  }
  return dispatch(n, with_certificate);
}

ExtremalOutcome even_extremal(std::int64_t n, bool with_certificate) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::ParityError, "even_extremal needs even n >= 2, got " + std::to_string(n));
  }
  return dispatch(n, with_certificate);
}

ExtremalOutcome extremal(std::int64_t n, bool with_certificate) {
  return n % 2 != 0 ? odd_extremal(n, with_certificate) : even_extremal(n, with_certificate);
}

FamilySpec candidate_of(std::string_view label, std::int64_t n) {
  if (label.starts_with("even-special-")) {
    if (label != "even-special-" + std::to_string(n)) precondition(label, n, "wrong order");
    return special_spec(n);
  }
  auto s = spectrum_of(label);
  if (!s) throw Error(Errc::PreconditionFailed, "unknown case label " + std::string(label));
  return family_of(*s, n);
}

ConditionResult ti_condition(std::string_view label, std::int64_t n) {
  const bool odd = n % 2 != 0;
  auto require = [&](bool ok, std::string_view what) {
    if (!ok) precondition(label, n, what);
  };
  auto verdict = [](std::string squares) {
    ConditionResult r;
    r.ti = squares.empty();
    r.reason = r.ti ? "no listed expression is a perfect square" : squares + " is a perfect square";
    return r;
  };

  if (label == "odd-i") {
    require(odd && n >= 5, "requires odd n >= 5");
    return verdict(squares_among({{"n-2", n - 2}, {"n-1", n - 1}}));
  }
  if (label == "odd-ii") {
    require(odd && n >= 7, "requires odd n >= 7");
    return verdict(squares_among(
        {{"n-4", n - 4}, {"n", n}, {"2n-6", 2 * n - 6}, {"2n-2", 2 * n - 2}}));
  }
  if (label == "odd-iii") {
    require(odd && n >= 11 && ps(n - 2), "requires odd n >= 11 with n-2 square");
    return {true, "TI for every admissible n"};
  }
  if (label == "odd-iv") {
    require(odd && n >= 17 && ps(n - 1), "requires odd n >= 17 with n-1 square");
    return {true, "TI for every admissible n"};
  }
  if (label == "even-i") {
    require(!odd && n >= 14, "requires even n >= 14");
    return verdict(squares_among({{"4n-15", 4 * n - 15},
                                  {"4n-7", 4 * n - 7},
                                  {"8n-23", 8 * n - 23},
                                  {"8n-15", 8 * n - 15}}));
  }
  if (label == "even-ii" || label == "even-iii") {
    require(!odd && n >= 14 && ps(4 * n - 15), "requires even n >= 14 with 4n-15 square");
    const std::int64_t k = k_of(n);
    const std::int64_t k2 = mul(8, mul(k, k));
    if (label == "even-ii") {
      return verdict(squares_among({{"8k^2+17", add(k2, 17)},
                                    {"8k^2+8k+9", add(add(k2, 8 * k), 9)},
                                    {"8k^2+16k+9", add(add(k2, 16 * k), 9)}}));
    }
    return verdict(squares_among({{"8k^2-8k+25", add(sub(k2, 8 * k), 25)},
                                  {"8k^2+9", add(k2, 9)},
                                  {"8k^2+16k+1", add(add(k2, 16 * k), 1)}}));
  }
  if (label == "even-iv") {
    require(!odd && n >= 14 && ps(8 * n - 23), "requires even n >= 14 with 8n-23 square");
    // TI exactly when the case-(iv) hypotheses hold as well.
    return verdict(squares_among({{"4n-15", 4 * n - 15}, {"4n-7", 4 * n - 7}}));
  }
  throw Error(Errc::PreconditionFailed, "unknown case label " + std::string(label));
}

DichotomyResult square_dichotomy(std::int64_t n) {
  if (n % 2 != 0 || n < 34 || !ps(4 * n - 15)) {
    precondition("square_dichotomy", n, "requires even n >= 34 with 4n-15 square");
  }
  DichotomyResult r;
  r.case_ii_ti =
      transmission_profile(build_tree(family_of(Spectrum::EvenII, n)), TransmissionMethod::EdgeLaw)
          .is_ti;
  r.case_iii_ti = transmission_profile(build_tree(family_of(Spectrum::EvenIII, n)),
                                       TransmissionMethod::EdgeLaw)
                      .is_ti;
  if (!r.case_ii_ti && !r.case_iii_ti) {
    throw Error(Errc::DichotomyViolated,
                "neither candidate tree is TI at n = " + std::to_string(n));
  }
  return r;
}

TreeType classify_type(const Tree& t) {
  const std::int64_t n = t.order();
  if (n % 2 == 0) throw Error(Errc::ParityError, "classify_type needs odd order");
  const auto profile = transmission_profile(t, TransmissionMethod::EdgeLaw);
  if (!profile.is_ti) throw Error(Errc::NotTI, "tree is not transmission irregular");
  const Vertex v = profile.min_vertex;
  if (t.degree(v) != 3) return TreeType::Other;
  const auto sizes = decompose_at(t, v);
  auto sorted_desc = [](std::vector<std::int64_t> s) {
    std::sort(s.rbegin(), s.rend());
    return s;
  };
  const RootedTree r = root_at(t, v);
  auto has_branch = [&](std::int64_t size, std::size_t path_length) {
    for (Vertex c : t.neighbors(v)) {
      if (r.size[c] != size) continue;
      auto path = pendent_path(t, v, c);
      if (path && path->size() == path_length) return true;
    }
    return false;
  };
  if (sizes == sorted_desc({(n - 1) / 2, (n - 3) / 2, 1}) && has_branch(1, 1)) return TreeType::A;
  if (sizes == sorted_desc({(n - 1) / 2, (n - 5) / 2, 2}) && has_branch(2, 2)) return TreeType::B;
  return TreeType::Other;
}

}  // namespace titree
