// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "properties.hpp"
#include "titree/error.hpp"
#include "titree/extremal.hpp"
#include "titree/formulas.hpp"
#include "titree/search.hpp"
#include "titree/sparse6.hpp"
#include "titree/text.hpp"

using namespace titree;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome appendix() {
  Outcome out;
  const std::pair<int, const char*> expected[] = {
      {7, "S(3,2,1)"},          {11, "C(9; 5,7)"},         {14, "CV(9; 3:1, 5:1, 5:3)"},
      {16, "CV(13; 7:2, 9:1)"}, {22, "CV(17; 11:2, 13:3)"}, {24, "CV(21; 11:2, 12:1)"}};

  SearchOptions single;
  single.threads = false;
  auto t0 = Clock::now();
  const auto small = verify_appendix(2, 20, single);
  const double t_small = seconds_since(t0);
  t0 = Clock::now();
  const auto table = verify_appendix(2, 24, single);
  const double t_full = seconds_since(t0);

  SearchOptions sharded;
  sharded.shards = 8;
  t0 = Clock::now();
  const auto table8 = verify_appendix(2, 24, sharded);
  const double t_sharded = seconds_since(t0);

  if (!small.all_pass() || !table.all_pass() || !table8.all_pass()) out.fail("an order failed");
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const int n = row.order;
    const bool none = n < 7 || (n % 2 == 0 && n < 14);
    if (none != (row.report.ti_trees == 0)) out.fail("TI existence wrong at " + std::to_string(n));
    if (!none && row.report.maximizers.size() != 1)
      out.fail("maximizer not unique at " + std::to_string(n));
    if (!row.report.same_result(table8.rows[i].report))
      out.fail("sharded run differs at " + std::to_string(n));
  }
  for (const auto& [n, text] : expected) {
    const auto& row = table.rows[n - 2];
    const auto code = canonical_code(build_tree(parse_family(text)));
    if (row.report.maximizers.empty() || row.report.maximizers[0].code != code)
      out.fail(std::string("maximizer at ") + std::to_string(n) + " is not " + text);
  }
  if (t_small > 60) out.fail("2..20 exceeded 60 s");
  if (t_full > 30 * 60) out.fail("2..24 exceeded 30 min single-threaded");
  if (t_sharded > 5 * 60) out.fail("2..24 exceeded 5 min with 8 shards");

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "2..20 %.1fs, 2..24 %.1fs single-threaded, %.1fs with 8 shards on %u hardware "
                "thread(s)",
                t_small, t_full, t_sharded, std::thread::hardware_concurrency());
  if (out.pass) out.detail = buf;
  return out;
}

Outcome formula_equivalence() {
  Outcome out;
  const auto t0 = Clock::now();
  std::int64_t checked = 0;
  for (auto f : all_closed_forms()) {
    std::int64_t mine = 0;
    for (std::int64_t n = 1; n <= 2001; ++n) {
      if (!applies(f, n)) continue;
      const Tree t = build_tree(family_of(f, n));
      const auto value = evaluate(f, n);
      const auto branching = wiener_branching(n, branch_data_of(t));
      const auto direct = transmission_profile(t, TransmissionMethod::Bfs).wiener;
      if (t.order() != n || value != branching || value != direct)
        out.fail(std::string(name_of(f)) + " at n=" + std::to_string(n));
      ++mine;
    }
    if (mine == 0) out.fail(std::string(name_of(f)) + " never applies");
    checked += mine;
  }
  const double t = seconds_since(t0);
  if (t > 120) out.fail("exceeded 2 min");
  if (out.pass) out.detail = std::to_string(checked) + " (form, n) pairs in " +
                             std::to_string(static_cast<int>(t + 0.5)) + "s";
  return out;
}

Outcome spectrum_equivalence() {
  Outcome out;
  const auto t0 = Clock::now();
  std::int64_t checked = 0;
  for (auto s : all_spectra()) {
    std::int64_t mine = 0;
    for (std::int64_t n = 1; n <= 2001; ++n) {
      if (!applies(s, n)) continue;
      const auto built = build(family_of(s, n));
      const auto gen = generate(s, n);
      const auto direct =
          direct_offsets(built.tree, base_vertex(s, n, built.labels), TransmissionMethod::Bfs);
      const bool ti = transmission_profile(built.tree, TransmissionMethod::Bfs).is_ti;
      if (gen.offsets != direct.offsets || gen.distinct() != ti)
        out.fail(std::string(name_of(s)) + " at n=" + std::to_string(n));
      ++mine;
    }
    if (mine == 0) out.fail(std::string(name_of(s)) + " never applies");
    checked += mine;
  }
  const double t = seconds_since(t0);
  if (t > 300) out.fail("exceeded 5 min");
  if (out.pass) out.detail = std::to_string(checked) + " (spectrum, n) pairs in " +
                             std::to_string(static_cast<int>(t + 0.5)) + "s";
  return out;
}

Outcome dispatcher_sweep() {
  Outcome out;
  std::int64_t solved = 0, unresolved = 0, dichotomies = 0;
  auto sweep = [&](std::int64_t n) {
    if (matching_cases(n).size() != 1) out.fail("not exactly one case at n=" + std::to_string(n));
    const auto o = extremal(n);
    if (o.verdict == Verdict::Unresolved) {
      ++unresolved;
      return;
    }
    if (o.verdict != Verdict::Solved) {
      out.fail("no verdict at n=" + std::to_string(n));
      return;
    }
    ++solved;
    if (!o.certified() || !o.certificate->direct_ti ||
        o.certificate->direct_wiener != o.predicted_wiener)
      out.fail("certificate fails at n=" + std::to_string(n));
  };
  for (std::int64_t n = 7; n <= 9999; n += 2) sweep(n);
  for (std::int64_t n = 14; n <= 9998; n += 2) sweep(n);
  for (std::int64_t n = 2; n <= 10000; n += 2) {
    if (!is_perfect_square(4 * n - 15)) continue;
    try {
      const auto d = square_dichotomy(n);
      if (!d.case_ii_ti && !d.case_iii_ti) out.fail("dichotomy empty at n=" + std::to_string(n));
      ++dichotomies;
    } catch (const Error& e) {
      if (e.code() == Errc::DichotomyViolated)
        out.fail("dichotomy violated at n=" + std::to_string(n));
    }
  }
  if (out.pass)
    out.detail = std::to_string(solved) + " solved orders certified, " +
                 std::to_string(unresolved) + " unresolved, " + std::to_string(dichotomies) +
                 " dichotomy orders";
  return out;
}

Outcome property_suites() {
  Outcome out;
  const std::pair<const char*, std::function<props::Result()>> suites[] = {
      {"half-sum", [] { return props::half_sum_identity(10000, 11); }},
      {"edge law", [] { return props::edge_law(10000, 12); }},
      {"path bound", [] { return props::path_bound(10000, 13); }},
      {"fusion", [] { return props::fusion_law(10000, 14); }},
      {"arm_straighten", [] { return props::arm_straighten_increases(10000, 15); }},
      {"majorize", [] { return props::majorize_increases(10000, 16); }},
      {"exhaustive n<=12", [] { return props::exhaustive_small(12); }},
      {"TI structure n<=20", [] { return props::ti_structure(2, 20); }},
  };
  std::int64_t total = 0;
  for (const auto& [name, run] : suites) {
    const auto r = run();
    total += r.cases;
    if (!r.ok()) out.fail(std::string(name) + ": " + std::to_string(r.failures) + " failures (" +
                          r.first_failure + ")");
  }
  if (out.pass) out.detail = std::to_string(total) + " cases, 0 failures";
  return out;
}

Outcome interchange() {
  Outcome out;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const Tree t = oracle::random_tree(n, rng);
    if (!(decode_sparse6(encode_sparse6(t)) == t)) out.fail("round trip at n=" + std::to_string(n));
  }
  std::ifstream in(std::string(TITREE_TEST_DATA) + "/trees10.s6");
  std::set<std::string> corpus, ours;
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++lines;
    corpus.insert(canonical_code(decode_sparse6(line)));
  }
  enumerate_trees(10, [&](const Tree& t) { ours.insert(canonical_code(t)); });
  if (lines != 106 || corpus.size() != 106 || corpus != ours)
    out.fail("order-10 corpus does not match the enumerator");
  if (out.pass) out.detail = "10000 round trips, 106/106 corpus trees matched";
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"appendix reproduction", appendix},
      {"formula equivalence", formula_equivalence},
      {"spectrum equivalence", spectrum_equivalence},
      {"dispatcher certification", dispatcher_sweep},
      {"property suites", property_suites},
      {"interchange", interchange},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%s)\n", index++, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
