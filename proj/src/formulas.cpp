#include "titree/formulas.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "titree/checked.hpp"
#include "titree/error.hpp"

namespace titree {
namespace {

using checked::add;
using checked::div_exact;
using checked::mul;
using checked::sub;

[[noreturn]] void precondition(std::string_view what, std::int64_t n) {
  throw Error(Errc::PreconditionFailed, std::string(what) + " (n = " + std::to_string(n) + ")");
}

bool odd(std::int64_t n) { return n % 2 != 0; }

/// c3*n^3 + c2*n^2 + c1*n + c0 with overflow checks.
std::int64_t cubic(std::int64_t n, std::int64_t c3, std::int64_t c2, std::int64_t c1,
                   std::int64_t c0) {
  std::int64_t acc = c3;
  acc = add(mul(acc, n), c2);
  acc = add(mul(acc, n), c1);
  acc = add(mul(acc, n), c0);
  return acc;
}

std::int64_t require_sqrt(std::int64_t m, std::string_view what, std::int64_t n) {
  auto r = exact_sqrt(m);
  if (!r) precondition(std::string(what) + " must be a perfect square", n);
  return *r;
}

void require_odd(std::int64_t n, std::int64_t min) {
  if (!odd(n) || n < min) precondition("requires odd n >= " + std::to_string(min), n);
}

void require_even(std::int64_t n, std::int64_t min) {
  if (odd(n) || n < min) precondition("requires even n >= " + std::to_string(min), n);
}

// k = (sqrt(4n-15) - 1) / 2 for even n >= 14.
std::int64_t k_from_4n_15(std::int64_t n) {
  require_even(n, 14);
  const std::int64_t s = require_sqrt(sub(mul(4, n), 15), "4n-15", n);
  return (s - 1) / 2;
}

// k = (sqrt(8n-23) - 1) / 2 for even n >= 14.
std::int64_t k_from_8n_23(std::int64_t n) {
  require_even(n, 14);
  const std::int64_t s = require_sqrt(sub(mul(8, n), 23), "8n-23", n);
  return (s - 1) / 2;
}

// l = (sqrt(q) - 3) / 2 for the secondary square q of a double-attachment form.
std::int64_t ell_from(std::int64_t q, std::string_view what, std::int64_t n) {
  const std::int64_t r = require_sqrt(q, what, n);
  return (r - 3) / 2;
}

std::int64_t secondary_square(ClosedForm f, std::int64_t k) {
  const std::int64_t k2 = mul(8, mul(k, k));
  switch (f) {
    case ClosedForm::EvenCase3KEll: return add(k2, 17);
    case ClosedForm::EvenCase3b: return add(add(k2, mul(8, k)), 9);
    case ClosedForm::EvenCase3c: return add(add(k2, mul(16, k)), 9);
    default: break;
  }
  throw std::logic_error("not a double-attachment form");
}

std::string_view secondary_name(ClosedForm f) {
  switch (f) {
    case ClosedForm::EvenCase3KEll: return "8k^2+17";
    case ClosedForm::EvenCase3b: return "8k^2+8k+9";
    default: return "8k^2+16k+9";
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::int64_t integer_sqrt(std::int64_t m) {
  if (m < 0) throw Error(Errc::PreconditionFailed, "integer_sqrt of a negative number");
  // Newton iteration on unsigned 64-bit values, started above the root.
  std::uint64_t x = static_cast<std::uint64_t>(m);
  if (x < 2) return m;
  std::uint64_t r = x;
  std::uint64_t y = (r + 1) / 2;
  while (y < r) {
    r = y;
    y = (r + x / r) / 2;
  }
  return static_cast<std::int64_t>(r);
}

std::optional<std::int64_t> exact_sqrt(std::int64_t m) {
  if (m < 0) return std::nullopt;
  const std::int64_t r = integer_sqrt(m);
  if (r * r != m) return std::nullopt;
  return r;
}

bool is_perfect_square(std::int64_t m) { return exact_sqrt(m).has_value(); }

std::int64_t wiener_path(std::int64_t n) {
  if (n < 1) precondition("path order must be >= 1", n);
  // C(n+1,3) = (n+1) n (n-1) / 6; divide early to delay overflow.
  std::int64_t a = n + 1, b = n, c = n - 1;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
  return mul(mul(a, b, "wiener_path"), c, "wiener_path");
}

std::int64_t wiener_fusion(std::int64_t w1, std::int64_t w2, std::int64_t n1, std::int64_t n2,
                           std::int64_t tr1, std::int64_t tr2) {
  if (w1 < 0 || w2 < 0 || n1 < 0 || n2 < 0 || tr1 < 0 || tr2 < 0) {
    throw Error(Errc::PreconditionFailed, "fusion inputs must be non-negative");
  }
  std::int64_t out = add(w1, w2);
  if (n1 > 0) out = add(out, mul(n1 - 1, tr2));
  if (n2 > 0) out = add(out, mul(n2 - 1, tr1));
  return out;
}

std::int64_t wiener_branching(std::int64_t n,
                              std::span<const std::vector<std::int64_t>> branch_data) {
  std::int64_t w = wiener_path(n);
  for (const auto& sizes : branch_data) {
    std::int64_t sum = 0;
    for (auto s : sizes) {
      if (s < 1) throw Error(Errc::InconsistentSizes, "component sizes must be positive");
      sum = add(sum, s);
    }
    if (sum != n - 1) {
      throw Error(Errc::InconsistentSizes, "component sizes sum to " + std::to_string(sum) +
                                               ", expected " + std::to_string(n - 1));
    }
    // Elementary symmetric polynomials e1, e2, e3 in one pass.
    std::int64_t e1 = 0, e2 = 0, e3 = 0;
    for (auto s : sizes) {
      e3 = add(e3, mul(e2, s));
      e2 = add(e2, mul(e1, s));
      e1 = add(e1, s);
    }
    w = sub(w, e3);
  }
  return w;
}

std::vector<std::vector<std::int64_t>> branch_data_of(const Tree& t) {
  std::vector<std::vector<std::int64_t>> out;
  for (Vertex v : branching_vertices(t)) out.push_back(decompose_at(t, v));
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms.

std::int64_t odd_case_ii_wiener(std::int64_t n) {
  require_odd(n, 7);
  return div_exact(cubic(n, 1, -3, 17, -15), 6, "odd_case_ii_W");
}

std::int64_t odd_s3_wiener(std::int64_t n) {
  require_odd(n, 9);
  return div_exact(cubic(n, 2, -9, 70, -63), 12, "odd_S3_W");
}

std::int64_t odd_case_iii_wiener(std::int64_t n) {
  require_odd(n, 11);
  const std::int64_t r = require_sqrt(n - 2, "n-2", n);
  return div_exact(sub(cubic(n, 1, -3, 17, -21), mul(6, r)), 6, "odd_case_iii_W");
}

std::int64_t odd_case_iv_wiener(std::int64_t n) {
  require_odd(n, 17);
  const std::int64_t r = require_sqrt(n - 1, "n-1", n);
  return div_exact(sub(cubic(n, 1, -3, 17, -15), mul(6, r)), 6, "odd_case_iv_W");
}

std::int64_t even_s4_wiener(std::int64_t n) {
  require_even(n, 14);
  return div_exact(cubic(n, 1, -6, 59, -96), 6, "even_S4_W");
}

std::int64_t even_aux_cat_wiener(std::int64_t n) {
  require_even(n, 14);
  return div_exact(cubic(n, 1, -6, 41, -36), 6, "even_aux_cat_W");
}

std::int64_t even_case_ii_wiener(std::int64_t n) {
  const std::int64_t s = 2 * k_from_4n_15(n) + 1;
  return div_exact(sub(cubic(n, 2, -9, 58, -102), mul(6, s)), 12, "even_case_ii_W");
}

std::int64_t even_case_iii_wiener(std::int64_t n) {
  const std::int64_t s = 2 * k_from_4n_15(n) + 1;
  return div_exact(sub(cubic(n, 2, -9, 58, -78), mul(18, s)), 12, "even_case_iii_W");
}

std::int64_t even_double_b2_wiener(std::int64_t n) {
  k_from_4n_15(n);
  return div_exact(cubic(n, 1, -6, 47, -96), 6, "even_double_b2_W");
}

std::int64_t even_case3_k_ell_wiener(std::int64_t n) {
  const auto [k, ell] = case3_parameters(ClosedForm::EvenCase3KEll, n);
  return div_exact(sub(sub(cubic(n, 1, -6, 47, -90), mul(18, k)), mul(6, ell)), 6,
                   "even_case3_k_ell_W");
}

std::int64_t even_case3b_wiener(std::int64_t n) {
  const auto [k, ell] = case3_parameters(ClosedForm::EvenCase3b, n);
  return div_exact(sub(sub(cubic(n, 1, -6, 47, -102), mul(6, k)), mul(6, ell)), 6,
                   "even_case3b_W");
}

std::int64_t even_case3c_wiener(std::int64_t n) {
  const auto [k, ell] = case3_parameters(ClosedForm::EvenCase3c, n);
  return div_exact(sub(add(cubic(n, 1, -6, 47, -102), mul(6, k)), mul(6, ell)), 6,
                   "even_case3c_W");
}

std::int64_t even_case_iv_wiener(std::int64_t n) {
  const std::int64_t s = 2 * k_from_8n_23(n) + 1;
  return div_exact(sub(cubic(n, 2, -9, 70, -126), mul(6, s)), 12, "even_case_iv_W");
}

KEll case3_parameters(ClosedForm f, std::int64_t n) {
  const std::int64_t k = k_from_4n_15(n);
  const std::int64_t ell = ell_from(secondary_square(f, k), secondary_name(f), n);
  return {k, ell};
}

namespace {

constexpr std::array kClosedForms = {
    ClosedForm::OddCaseII,    ClosedForm::OddS3,         ClosedForm::OddCaseIII,
    ClosedForm::OddCaseIV,    ClosedForm::EvenS4,        ClosedForm::EvenAuxCat,
    ClosedForm::EvenCaseII,   ClosedForm::EvenCaseIII,   ClosedForm::EvenDoubleB2,
    ClosedForm::EvenCase3KEll, ClosedForm::EvenCase3b,   ClosedForm::EvenCase3c,
    ClosedForm::EvenCaseIV,
};

FamilySpec starlike(std::initializer_list<std::int64_t> arms) { return StarlikeSpec{arms}; }

FamilySpec variant(std::int64_t spine, std::initializer_list<Attachment> at) {
  return VariantCaterpillarSpec{spine, at};
}

}  // namespace

std::span<const ClosedForm> all_closed_forms() { return kClosedForms; }

std::string_view name_of(ClosedForm f) {
  switch (f) {
    case ClosedForm::OddCaseII: return "odd_case_ii_W";
    case ClosedForm::OddS3: return "odd_S3_W";
    case ClosedForm::OddCaseIII: return "odd_case_iii_W";
    case ClosedForm::OddCaseIV: return "odd_case_iv_W";
    case ClosedForm::EvenS4: return "even_S4_W";
    case ClosedForm::EvenAuxCat: return "even_aux_cat_W";
    case ClosedForm::EvenCaseII: return "even_case_ii_W";
    case ClosedForm::EvenCaseIII: return "even_case_iii_W";
    case ClosedForm::EvenDoubleB2: return "even_double_b2_W";
    case ClosedForm::EvenCase3KEll: return "even_case3_k_ell_W";
    case ClosedForm::EvenCase3b: return "even_case3b_W";
    case ClosedForm::EvenCase3c: return "even_case3c_W";
    case ClosedForm::EvenCaseIV: return "even_case_iv_W";
  }
  return "";
}

std::optional<ClosedForm> closed_form_by_name(std::string_view name) {
  for (auto f : kClosedForms) {
    if (name_of(f) == name) return f;
  }
  return std::nullopt;
}

std::int64_t evaluate(ClosedForm f, std::int64_t n) {
  switch (f) {
    case ClosedForm::OddCaseII: return odd_case_ii_wiener(n);
    case ClosedForm::OddS3: return odd_s3_wiener(n);
    case ClosedForm::OddCaseIII: return odd_case_iii_wiener(n);
    case ClosedForm::OddCaseIV: return odd_case_iv_wiener(n);
    case ClosedForm::EvenS4: return even_s4_wiener(n);
    case ClosedForm::EvenAuxCat: return even_aux_cat_wiener(n);
    case ClosedForm::EvenCaseII: return even_case_ii_wiener(n);
    case ClosedForm::EvenCaseIII: return even_case_iii_wiener(n);
    case ClosedForm::EvenDoubleB2: return even_double_b2_wiener(n);
    case ClosedForm::EvenCase3KEll: return even_case3_k_ell_wiener(n);
    case ClosedForm::EvenCase3b: return even_case3b_wiener(n);
    case ClosedForm::EvenCase3c: return even_case3c_wiener(n);
    case ClosedForm::EvenCaseIV: return even_case_iv_wiener(n);
  }
  throw std::logic_error("unknown closed form");
}

FamilySpec family_of(ClosedForm f, std::int64_t n) {
  const std::int64_t h = n / 2;
  switch (f) {
    case ClosedForm::OddCaseII:
      require_odd(n, 7);
      return starlike({(n - 1) / 2, (n - 5) / 2, 2});
    case ClosedForm::OddS3:
      require_odd(n, 9);
      return starlike({(n - 1) / 2, (n - 7) / 2, 3});
    case ClosedForm::OddCaseIII: {
      require_odd(n, 11);
      const std::int64_t r = require_sqrt(n - 2, "n-2", n);
      return OrdinaryCaterpillarSpec{n - 2, {(n - 1) / 2, (n - 3) / 2 + r}};
    }
    case ClosedForm::OddCaseIV: {
      require_odd(n, 17);
      const std::int64_t r = require_sqrt(n - 1, "n-1", n);
      return OrdinaryCaterpillarSpec{n - 2, {(n + 1) / 2, (n - 3) / 2 + r}};
    }
    case ClosedForm::EvenS4:
      require_even(n, 14);
      return starlike({h - 1, h - 4, 4});
    case ClosedForm::EvenAuxCat:
      require_even(n, 14);
      return variant(n - 4, {{h - 2, 3}, {h - 1, 1}});
    case ClosedForm::EvenCaseII: {
      const std::int64_t k = k_from_4n_15(n);
      return variant(n - 3, {{h - 1, 2}, {h + k - 2, 1}});
    }
    case ClosedForm::EvenCaseIII: {
      const std::int64_t k = k_from_4n_15(n);
      return variant(n - 3, {{h - 1, 2}, {h + k - 3, 1}});
    }
    case ClosedForm::EvenDoubleB2: {
      const std::int64_t k = k_from_4n_15(n);
      return variant(n - 4, {{h - 1, 2}, {h + k - 2, 2}});
    }
    case ClosedForm::EvenCase3KEll: {
      const auto [k, ell] = case3_parameters(f, n);
      return variant(n - 4, {{h - 2, 2}, {h + k - 3, 1}, {h - ell - 1, 1}});
    }
    case ClosedForm::EvenCase3b:
    case ClosedForm::EvenCase3c: {
      const auto [k, ell] = case3_parameters(f, n);
      return variant(n - 4, {{h - 1, 2}, {h + k - 2, 1}, {h + ell - 2, 1}});
    }
    case ClosedForm::EvenCaseIV: {
      const std::int64_t k = k_from_8n_23(n);
      return variant(n - 3, {{h - 1, 2}, {h + k - 2, 1}});
    }
  }
  throw std::logic_error("unknown closed form");
}

bool applies(ClosedForm f, std::int64_t n) {
  try {
    validate(family_of(f, n));
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::PreconditionFailed || e.code() == Errc::BadFamilyParams) return false;
    throw;
  }
}

// ---------------------------------------------------------------------------
// Spectra.

bool SpectrumOffsets::distinct() const {
  return std::adjacent_find(offsets.begin(), offsets.end()) == offsets.end();
}

namespace {

class SpectrumBuilder {
 public:
  explicit SpectrumBuilder(std::int64_t k = 0) { out_.k = k; }

  SpectrumBuilder& value(std::int64_t v) {
    out_.offsets.push_back(v);
    return *this;
  }

  /// f(i) for i in [lo, hi]; empty when hi < lo.
  template <class F>
  SpectrumBuilder& range(std::int64_t lo, std::int64_t hi, F f) {
    for (std::int64_t i = lo; i <= hi; ++i) out_.offsets.push_back(f(i));
    return *this;
  }

  SpectrumOffsets done() {
    std::sort(out_.offsets.begin(), out_.offsets.end());
    return std::move(out_);
  }

 private:
  SpectrumOffsets out_;
};

}  // namespace

SpectrumOffsets spectrum_odd_i(std::int64_t n) {
  require_odd(n, 5);
  return SpectrumBuilder()
      .value(0)
      .value(n - 2)
      .range(1, (n - 1) / 2, [](auto i) { return i * i; })
      .range(1, (n - 3) / 2, [](auto j) { return j * (j + 2); })
      .done();
}

SpectrumOffsets spectrum_odd_ii(std::int64_t n) {
  require_odd(n, 7);
  return SpectrumBuilder()
      .value(0)
      .value(n - 4)
      .value(2 * n - 6)
      .range(1, (n - 1) / 2, [](auto i) { return i * i; })
      .range(1, (n - 5) / 2, [](auto j) { return j * (j + 4); })
      .done();
}

SpectrumOffsets spectrum_odd_iii(std::int64_t n) {
  require_odd(n, 11);
  const std::int64_t k = require_sqrt(n - 2, "n-2", n);
  const std::int64_t h = (n - 3) / 2;
  return SpectrumBuilder(k)
      .value(0)
      .value(k * k)                  // z1
      .value(2 * k * k - 2 * k + 1)  // w
      .range(1, h, [](auto i) { return i * (i + 2); })
      .range(1, k - 1, [](auto j) { return j * j; })
      .range(k, h, [k](auto j) { return j * (j + 2) - 2 * k + 2; })
      .done();
}

SpectrumOffsets spectrum_odd_iv(std::int64_t n) {
  require_odd(n, 17);
  const std::int64_t k = require_sqrt(n - 1, "n-1", n);
  return SpectrumBuilder(k)
      .value(0)
      .value(k * k - 1)              // z1
      .value(2 * k * k - 2 * k - 1)  // w
      .range(1, (n - 1) / 2, [](auto i) { return i * i; })
      .range(1, k - 2, [](auto j) { return j * (j + 2); })
      .range(k - 1, (n - 5) / 2, [k](auto j) { return j * (j + 4) - 2 * k + 4; })
      .done();
}

SpectrumOffsets spectrum_even_i(std::int64_t n) {
  require_even(n, 14);
  return SpectrumBuilder()
      .value(0)
      .value(n - 4)
      .value(2 * n - 6)
      .range(1, n / 2 - 2, [](auto x) { return x * x + 3 * x; })
      .range(1, n / 2 - 1, [](auto y) { return y * y + y; })
      .done();
}

SpectrumOffsets spectrum_even_ii(std::int64_t n) {
  const std::int64_t k = k_from_4n_15(n);
  return SpectrumBuilder(k)
      .value(0)
      .value(k * k + k)              // z1
      .value(2 * k * k + 2 * k + 2)  // z2
      .value(2 * k * k + 2)          // w
      .range(1, n / 2 - 2, [](auto i) { return i * (i + 3); })
      .range(1, k - 1, [](auto j) { return j * (j + 1); })
      .range(k, n / 2 - 2, [k](auto j) { return j * (j + 3) - 2 * k + 2; })
      .done();
}

SpectrumOffsets spectrum_even_iii(std::int64_t n) {
  const std::int64_t k = k_from_4n_15(n);
  return SpectrumBuilder(k)
      .value(0)
      .value(k * k + k)              // z1
      .value(2 * k * k + 2 * k + 2)  // z2
      .value(2 * k * k - 2 * k + 4)  // w
      .range(1, n / 2 - 2, [](auto i) { return i * (i + 3); })
      .range(1, k - 2, [](auto j) { return j * (j + 1); })
      .range(k - 1, n / 2 - 2, [k](auto j) { return j * (j + 3) - 2 * k + 4; })
      .done();
}

SpectrumOffsets spectrum_even_iv(std::int64_t n) {
  const std::int64_t k = k_from_8n_23(n);
  return SpectrumBuilder(k)
      .value(0)
      .value((k * k + k - 2) / 2)      // z1
      .value(k * k + k)                // z2
      .value((3 * k * k - k + 2) / 2)  // w
      .range(1, n / 2 - 2, [](auto i) { return i * (i + 3); })
      .range(1, k - 1, [](auto j) { return j * (j + 1); })
      .range(k, n / 2 - 2, [k](auto j) { return j * (j + 3) - 2 * k + 2; })
      .done();
}

namespace {

constexpr std::array kSpectra = {Spectrum::OddI,  Spectrum::OddII,  Spectrum::OddIII,
                                 Spectrum::OddIV, Spectrum::EvenI,  Spectrum::EvenII,
                                 Spectrum::EvenIII, Spectrum::EvenIV};

}  // namespace

std::span<const Spectrum> all_spectra() { return kSpectra; }

std::string_view name_of(Spectrum s) {
  switch (s) {
    case Spectrum::OddI: return "spectrum_odd_i";
    case Spectrum::OddII: return "spectrum_odd_ii";
    case Spectrum::OddIII: return "spectrum_odd_iii";
    case Spectrum::OddIV: return "spectrum_odd_iv";
    case Spectrum::EvenI: return "spectrum_even_i";
    case Spectrum::EvenII: return "spectrum_even_ii";
    case Spectrum::EvenIII: return "spectrum_even_iii";
    case Spectrum::EvenIV: return "spectrum_even_iv";
  }
  return "";
}

std::optional<Spectrum> spectrum_by_name(std::string_view name) {
  for (auto s : kSpectra) {
    if (name_of(s) == name) return s;
  }
  return std::nullopt;
}

SpectrumOffsets generate(Spectrum s, std::int64_t n) {
  switch (s) {
    case Spectrum::OddI: return spectrum_odd_i(n);
    case Spectrum::OddII: return spectrum_odd_ii(n);
    case Spectrum::OddIII: return spectrum_odd_iii(n);
    case Spectrum::OddIV: return spectrum_odd_iv(n);
    case Spectrum::EvenI: return spectrum_even_i(n);
    case Spectrum::EvenII: return spectrum_even_ii(n);
    case Spectrum::EvenIII: return spectrum_even_iii(n);
    case Spectrum::EvenIV: return spectrum_even_iv(n);
  }
  throw std::logic_error("unknown spectrum");
}

FamilySpec family_of(Spectrum s, std::int64_t n) {
  const std::int64_t h = n / 2;
  switch (s) {
    case Spectrum::OddI:
      require_odd(n, 5);
      return starlike({(n - 1) / 2, (n - 3) / 2, 1});
    case Spectrum::OddII: return family_of(ClosedForm::OddCaseII, n);
    case Spectrum::OddIII: return family_of(ClosedForm::OddCaseIII, n);
    case Spectrum::OddIV: return family_of(ClosedForm::OddCaseIV, n);
    case Spectrum::EvenI:
      require_even(n, 14);
      return starlike({h - 1, h - 2, 2});
    case Spectrum::EvenII: return family_of(ClosedForm::EvenCaseII, n);
    case Spectrum::EvenIII: return family_of(ClosedForm::EvenCaseIII, n);
    case Spectrum::EvenIV: return family_of(ClosedForm::EvenCaseIV, n);
  }
  throw std::logic_error("unknown spectrum");
}

Vertex base_vertex(Spectrum s, std::int64_t n, const LabelMap& labels) {
  switch (s) {
    case Spectrum::OddI:
    case Spectrum::OddII:
    case Spectrum::EvenI: return labels.spine.at(0);
    case Spectrum::OddIII: return labels.spine.at((n - 1) / 2 - 1);
    case Spectrum::OddIV: return labels.spine.at((n + 1) / 2 - 1);
    case Spectrum::EvenII:
    case Spectrum::EvenIII:
    case Spectrum::EvenIV: return labels.spine.at(n / 2 - 2);
  }
  throw std::logic_error("unknown spectrum");
}

bool applies(Spectrum s, std::int64_t n) {
  try {
    validate(family_of(s, n));
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::PreconditionFailed || e.code() == Errc::BadFamilyParams) return false;
    throw;
  }
}

SpectrumOffsets direct_offsets(const Tree& t, Vertex base, TransmissionMethod method) {
  const auto profile = transmission_profile(t, method);
  const std::int64_t beta = profile.tr.at(base);
  SpectrumOffsets out;
  out.offsets.reserve(profile.tr.size());
  for (auto tr : profile.tr) out.offsets.push_back(tr - beta);
  std::sort(out.offsets.begin(), out.offsets.end());
  return out;
}

}  // namespace titree
