#include <doctest.h>

#include "oracles.hpp"
#include "titree/error.hpp"
#include "titree/extremal.hpp"
#include "titree/text.hpp"

using namespace titree;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

std::string spec_text(const ExtremalOutcome& o) { return o.spec ? format_family(*o.spec) : ""; }

}  // namespace

TEST_CASE("odd dispatcher examples") {
  auto o7 = odd_extremal(7);
  CHECK(o7.case_label == "odd-i");
  CHECK(spec_text(o7) == "S(3,2,1)");
  CHECK(o7.predicted_wiener == 50);
  CHECK(o7.certified());

  auto o11 = odd_extremal(11);
  CHECK(o11.case_label == "odd-iii");
  CHECK(spec_text(o11) == "C(9; 5,7)");
  CHECK(o11.predicted_wiener == 186);
  CHECK(o11.certified());

  auto o17 = odd_extremal(17);
  CHECK(o17.case_label == "odd-ii");
  CHECK(spec_text(o17) == "S(8,6,2)");
  CHECK(o17.certified());

  auto o101 = odd_extremal(101);
  CHECK(o101.case_label == "odd-iv");
  CHECK(spec_text(o101) == "C(99; 51,59)");
  CHECK(o101.certified());
  CHECK(o101.certificate->spectrum_matches);

  for (int n : {1, 3, 5}) {
    auto o = odd_extremal(n);
    CHECK(o.verdict == Verdict::NoTITree);
    CHECK_FALSE(o.spec);
  }
  CHECK(code_of([] { odd_extremal(8); }) == Errc::ParityError);
}

TEST_CASE("even dispatcher examples") {
  auto e14 = even_extremal(14);
  CHECK(e14.case_label == "even-special-14");
  CHECK(spec_text(e14) == "CV(9; 3:1, 5:1, 5:3)");
  CHECK(e14.predicted_wiener == 328);
  CHECK(e14.certified());

  auto e16 = even_extremal(16);
  CHECK(e16.case_label == "even-ii");
  CHECK(spec_text(e16) == "CV(13; 7:2, 9:1)");
  CHECK(e16.predicted_wiener == 556);

  auto e18 = even_extremal(18);
  CHECK(e18.case_label == "even-iv");
  CHECK(spec_text(e18) == "CV(15; 8:2, 12:1)");
  CHECK(e18.predicted_wiener == 818);

  auto e20 = even_extremal(20);
  CHECK(e20.case_label == "even-i");
  CHECK(spec_text(e20) == "S(9,8,2)");

  CHECK(spec_text(even_extremal(22)) == "CV(17; 11:2, 13:3)");
  CHECK(even_extremal(22).predicted_wiener == 1423);
  CHECK(spec_text(even_extremal(24)) == "CV(21; 11:2, 12:1)");
  CHECK(even_extremal(24).predicted_wiener == 1963);

  auto e34 = even_extremal(34);
  CHECK(e34.case_label == "even-iii");
  CHECK(spec_text(e34) == "CV(31; 16:2, 19:1)");
  CHECK(e34.certified());

  auto e30 = even_extremal(30);
  CHECK(e30.verdict == Verdict::Unresolved);
  CHECK(e30.reason == "8n-15 is a perfect square");
  auto e32 = even_extremal(32);
  CHECK(e32.verdict == Verdict::Unresolved);
  CHECK(e32.reason == "4n-7 is a perfect square");

  for (int n = 2; n < 14; n += 2) CHECK(even_extremal(n).verdict == Verdict::NoTITree);
  CHECK(code_of([] { even_extremal(7); }) == Errc::ParityError);
  CHECK(code_of([] { even_extremal(0); }) == Errc::ParityError);
}

TEST_CASE("certificates agree with the oracle and fire one case per order") {
  for (int n = 1; n <= 400; ++n) {
    INFO("n=", n);
    CHECK(matching_cases(n).size() == 1);
    const auto o = extremal(n);
    if (o.verdict != Verdict::Solved) continue;
    CHECK(o.certified());
    if (n <= 80) {
      const auto p = oracle::profile(build_tree(*o.spec));
      CHECK(p.ti);
      CHECK(p.wiener == o.predicted_wiener);
    }
  }
}

TEST_CASE("unresolved orders are exactly the excluded even orders") {
  for (int n = 2; n <= 2000; n += 2) {
    const auto o = even_extremal(n, false);
    const bool excluded = n >= 16 && n != 22 && n != 24 &&
                          (is_perfect_square(4 * n - 7) ||
                           (!is_perfect_square(4 * n - 15) && !is_perfect_square(4 * n - 7) &&
                            is_perfect_square(8 * n - 15)));
    INFO("n=", n);
    CHECK((o.verdict == Verdict::Unresolved) == excluded);
    if (o.verdict == Verdict::Unresolved) CHECK(n >= 30);
  }
}

TEST_CASE("ti_condition") {
  auto c = ti_condition("odd-i", 9);
  CHECK(c.ti);
  CHECK(oracle::profile(build_tree(StarlikeSpec{{4, 3, 1}})).ti);

  auto d = ti_condition("odd-ii", 11);
  CHECK_FALSE(d.ti);
  CHECK(d.reason.find("2n-6=16") != std::string::npos);

  auto e = ti_condition("even-i", 14);
  CHECK_FALSE(e.ti);
  CHECK(e.reason.find("4n-7=49") != std::string::npos);

  CHECK(code_of([] { ti_condition("odd-iii", 13); }) == Errc::PreconditionFailed);
  CHECK(code_of([] { ti_condition("even-ii", 18); }) == Errc::PreconditionFailed);
  CHECK(code_of([] { ti_condition("odd-i", 8); }) == Errc::PreconditionFailed);
  CHECK(code_of([] { ti_condition("bogus", 9); }) == Errc::PreconditionFailed);
}

TEST_CASE("ti_condition agrees with direct TI checks") {
  const char* labels[] = {"odd-i", "odd-ii", "odd-iii", "odd-iv",
                          "even-i", "even-ii", "even-iii", "even-iv"};
  for (const char* label : labels) {
    int checked = 0;
    for (int n = 5; n <= 9999; ++n) {
      ConditionResult r;
      try {
        r = ti_condition(label, n);
      } catch (const Error& err) {
        REQUIRE(err.code() == Errc::PreconditionFailed);
        continue;
      }
      const Tree t = build_tree(candidate_of(label, n));
      INFO(std::string(label), " n=", n);
      CHECK(r.ti == transmission_profile(t, TransmissionMethod::EdgeLaw).is_ti);
      ++checked;
    }
    INFO(std::string(label));
    CHECK(checked > 0);
  }
}

TEST_CASE("square_dichotomy") {
  const auto r = square_dichotomy(34);
  CHECK(r.case_iii_ti);
  CHECK(code_of([] { square_dichotomy(40); }) == Errc::PreconditionFailed);
  CHECK(code_of([] { square_dichotomy(16); }) == Errc::PreconditionFailed);
  for (int n = 34; n <= 3000; n += 2) {
    if (!is_perfect_square(4 * n - 15)) continue;
    const auto d = square_dichotomy(n);
    CHECK((d.case_ii_ti || d.case_iii_ti));
  }
}

TEST_CASE("classify_type") {
  CHECK(classify_type(build_tree(OrdinaryCaterpillarSpec{9, {5, 7}})) == TreeType::A);
  CHECK(classify_type(build_tree(StarlikeSpec{{8, 6, 2}})) == TreeType::B);
  CHECK(classify_type(build_tree(StarlikeSpec{{3, 2, 1}})) == TreeType::A);
  CHECK(code_of([] { classify_type(build_tree(PathSpec{5})); }) == Errc::NotTI);
  CHECK(code_of([] { classify_type(build_tree(PathSpec{4})); }) == Errc::ParityError);
  CHECK(name_of(TreeType::Other) == "other");
}
