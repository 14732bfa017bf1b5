// Command-line front end for the titree library.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "titree/error.hpp"
#include "titree/extremal.hpp"
#include "titree/formulas.hpp"
#include "titree/search.hpp"
#include "titree/sparse6.hpp"
#include "titree/text.hpp"

using json = nlohmann::ordered_json;
using namespace titree;

namespace {

json to_json(const FamilySpec& spec) { return format_family(spec); }

json to_json(const SearchReport& r) {
  json out;
  out["order"] = r.order;
  out["total_trees"] = r.total_trees;
  out["ti_trees"] = r.ti_trees;
  out["max_wiener"] = r.max_wiener ? json(*r.max_wiener) : json(nullptr);
  out["maximizers"] = json::array();
  for (const auto& m : r.maximizers) {
    out["maximizers"].push_back({{"canonical_code", m.code}, {"sparse6", m.sparse6}});
  }
  return out;
}

json to_json(const ExtremalOutcome& o) {
  json out;
  out["order"] = o.order;
  out["verdict"] = std::string(name_of(o.verdict));
  out["case"] = o.case_label;
  if (o.verdict == Verdict::Unresolved) out["reason"] = o.reason;
  if (o.spec) {
    out["spec"] = to_json(*o.spec);
    out["predicted_wiener"] = o.predicted_wiener;
  }
  if (o.certificate) {
    const Certificate& c = *o.certificate;
    json cert;
    cert["tree_order"] = c.tree_order;
    cert["direct_wiener"] = c.direct_wiener;
    cert["direct_ti"] = c.direct_ti;
    cert["spectrum"] = c.spectrum ? json(std::string(name_of(*c.spectrum))) : json(nullptr);
    cert["spectrum_matches"] = c.spectrum_matches;
    cert["offsets"] = c.direct.offsets;
    out["certificate"] = cert;
    out["certified"] = o.certified();
  }
  return out;
}

std::string emit_tree(const Tree& t, const FamilySpec* spec, const std::string& format) {
  if (format == "sparse6") return encode_sparse6(t) + "\n";
  if (format == "edges") return format_edge_list(t);
  if (format == "spec" && spec) return format_family(*spec) + "\n";
  throw Error(Errc::ParseError, "cannot emit '" + format + "' for this tree");
}

/// "2..24", "7" or "5..5".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw ParseError(0, "order range must look like LO..HI, got '" + text + "'");
  }
}

Tree read_tree(const std::string& spec, const std::string& graph, const std::string& edges_file) {
  const int given = !spec.empty() + !graph.empty() + !edges_file.empty();
  if (given != 1) {
    throw Error(Errc::ParseError, "give exactly one of --spec, --graph, --edges");
  }
  if (!spec.empty()) return build_tree(parse_family(spec));
  if (!graph.empty()) return decode_graph_line(graph);
  std::ifstream in(edges_file);
  if (!in) throw Error(Errc::ParseError, "cannot read " + edges_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmission irregular trees with maximum Wiener index"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a family tree from its text spec");
  std::string construct_spec;
  std::string construct_emit = "edges";
  construct->add_option("spec", construct_spec, "e.g. \"C(9; 5,7)\"")->required();
  construct->add_option("--emit", construct_emit, "sparse6 | edges | spec")
      ->check(CLI::IsMember({"sparse6", "edges", "spec"}));

  // invariants
  auto* invariants = app.add_subcommand("invariants", "Transmissions, Wiener index, TI flag");
  std::string inv_spec, inv_graph, inv_edges;
  invariants->add_option("--spec", inv_spec, "Family spec text");
  invariants->add_option("--graph", inv_graph, "sparse6 or graph6 line");
  invariants->add_option("--edges", inv_edges, "Edge list file");

  // extremal
  auto* extremal_cmd = app.add_subcommand("extremal", "Maximum-Wiener TI tree of a given order");
  std::int64_t ext_order = 0;
  std::string ext_emit;
  extremal_cmd->add_option("--order", ext_order, "Tree order n")->required()->check(CLI::PositiveNumber);
  extremal_cmd->add_option("--emit", ext_emit, "sparse6 | edges | spec")
      ->check(CLI::IsMember({"sparse6", "edges", "spec"}));

  // formula
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form or spectrum generator");
  std::string formula_name;
  std::int64_t formula_n = 0;
  formula->add_option("--name", formula_name, "e.g. odd_case_ii_W, spectrum_even_i")->required();
  formula->add_option("--n", formula_n, "Order")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream all free trees of an order as sparse6");
  int enum_order = 0;
  bool enum_ti_only = false;
  std::string enum_out = "-";
  enumerate->add_option("--order", enum_order, "Tree order n")->required();
  enumerate->add_flag("--ti-only", enum_ti_only, "Only transmission irregular trees");
  enumerate->add_option("--out", enum_out, "Output .s6 file (default stdout)");

  // search-max
  auto* search = app.add_subcommand("search-max", "Exhaustive maximum-Wiener TI search");
  int search_order = 0;
  int search_shards = 1;
  search->add_option("--order", search_order, "Tree order n")->required();
  search->add_option("--shards", search_shards, "Independent shards")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive check against the dispatcher");
  std::string verify_orders = "2..24";
  int verify_shards = 1;
  std::string verify_report;
  verify->add_option("--orders", verify_orders, "Range LO..HI");
  verify->add_option("--shards", verify_shards, "Independent shards")->check(CLI::PositiveNumber);
  verify->add_option("--report", verify_report, "Write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const FamilySpec spec = parse_family(construct_spec);
      const Tree t = build_tree(spec);
      if (as_json) {
        json out{{"spec", format_family(spec)},
                 {"order", t.order()},
                 {"sparse6", encode_sparse6(t)},
                 {"edges", json::array()}};
        for (const Edge& e : t.edges()) out["edges"].push_back({e.u, e.v});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << emit_tree(t, &spec, construct_emit);
      }
      return 0;
    }

    if (*invariants) {
      const Tree t = read_tree(inv_spec, inv_graph, inv_edges);
      const auto p = transmission_profile(t);
      if (as_json) {
        json out{{"order", t.order()},        {"wiener", p.wiener},
                 {"is_ti", p.is_ti},           {"min_vertex", p.min_vertex},
                 {"transmissions", p.tr},      {"branching_vertices", branching_vertices(t)},
                 {"canonical_code", canonical_code(t)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "order " << t.order() << "\n"
                  << "W=" << p.wiener << " TI=" << (p.is_ti ? "yes" : "no") << "\n"
                  << "min transmission vertex " << p.min_vertex << " (Tr=" << p.tr[p.min_vertex]
                  << ")\n"
                  << "transmissions";
        for (auto v : p.tr) std::cout << " " << v;
        std::cout << "\ncanonical " << canonical_code(t) << "\n";
      }
      return 0;
    }

    if (*extremal_cmd) {
      const ExtremalOutcome o = extremal(ext_order);
      if (as_json) {
        std::cout << to_json(o).dump(2) << "\n";
      } else if (o.verdict == Verdict::NoTITree) {
        std::cout << "no TI tree of order " << o.order << "\n";
      } else if (o.verdict == Verdict::Unresolved) {
        std::cout << "unresolved (" << o.reason << ")\n";
      } else {
        const Certificate& c = *o.certificate;
        std::cout << o.case_label << " " << format_family(*o.spec) << " W=" << c.direct_wiener
                  << " TI=" << (c.direct_ti ? "yes" : "no") << "\n"
                  << "predicted W=" << o.predicted_wiener << " direct W=" << c.direct_wiener
                  << " spectrum "
                  << (c.spectrum ? (c.spectrum_matches ? "matches" : "MISMATCH") : "n/a") << "\n";
      }
      if (!ext_emit.empty() && o.spec) {
        std::cout << emit_tree(build_tree(*o.spec), &*o.spec, ext_emit);
      }
      return o.verdict == Verdict::Solved && !o.certified() ? 1 : 0;
    }

    if (*formula) {
      if (auto f = closed_form_by_name(formula_name)) {
        const std::int64_t w = evaluate(*f, formula_n);
        if (as_json) {
          std::cout << json{{"name", formula_name}, {"n", formula_n}, {"value", w},
                            {"spec", format_family(family_of(*f, formula_n))}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << w << "\n";
        }
        return 0;
      }
      if (auto s = spectrum_by_name(formula_name)) {
        const SpectrumOffsets off = generate(*s, formula_n);
        if (as_json) {
          std::cout << json{{"name", formula_name}, {"n", formula_n}, {"k", off.k},
                            {"offsets", off.offsets}, {"distinct", off.distinct()},
                            {"spec", format_family(family_of(*s, formula_n))}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << (off.distinct() ? "distinct" : "repeated");
          for (auto v : off.offsets) std::cout << " " << v;
          std::cout << "\n";
        }
        return 0;
      }
      std::cerr << "unknown formula '" << formula_name << "'; known:";
      for (auto f : all_closed_forms()) std::cerr << " " << name_of(f);
      for (auto s : all_spectra()) std::cerr << " " << name_of(s);
      std::cerr << "\n";
      return 2;
    }

    if (*enumerate) {
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (enum_out != "-") {
        file.open(enum_out);
        if (!file) throw Error(Errc::ParseError, "cannot write " + enum_out);
        out = &file;
      }
      std::int64_t count = 0;
      if (enum_ti_only) {
        for_each_ti_tree(enum_order, [&](const FreeTreeGenerator& g, const TransmissionScanner&) {
          *out << encode_sparse6(g.tree()) << "\n";
          ++count;
        });
      } else {
        enumerate_trees(enum_order, [&](const Tree& t) {
          *out << encode_sparse6(t) << "\n";
          ++count;
        });
      }
      if (enum_out != "-") std::cerr << count << " trees written to " << enum_out << "\n";
      return 0;
    }

    if (*search) {
      SearchOptions opts;
      opts.shards = search_shards;
      const SearchReport r = search_max_ti(search_order, opts);
      if (as_json) {
        json out{{"report", to_json(r)}, {"timing", {{"elapsed_seconds", r.elapsed_seconds}}}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "order " << r.order << ": " << r.total_trees << " trees, " << r.ti_trees
                  << " TI";
        if (r.max_wiener) std::cout << ", max W=" << *r.max_wiener;
        std::cout << ", " << r.maximizers.size() << " maximizer(s)\n";
        for (const auto& m : r.maximizers) std::cout << m.sparse6 << " " << m.code << "\n";
      }
      return 0;
    }

    if (*verify) {
      const auto [lo, hi] = parse_range(verify_orders);
      SearchOptions opts;
      opts.shards = verify_shards;
      double elapsed = 0;
      const VerifyTable table = verify_appendix(lo, hi, opts, [&](const VerifyRow& row) {
        elapsed += row.report.elapsed_seconds;
        if (!as_json) {
          std::cout << (row.pass ? "PASS" : "FAIL") << " n=" << row.order << " trees="
                    << row.report.total_trees << " ti=" << row.report.ti_trees << "  "
                    << row.message << "\n";
        }
      });
      json rows = json::array();
      for (const auto& row : table.rows) {
        rows.push_back({{"order", row.order},
                        {"pass", row.pass},
                        {"message", row.message},
                        {"expected", to_json(row.expected)},
                        {"report", to_json(row.report)}});
      }
      json report{{"orders", verify_orders},
                  {"pass", table.all_pass()},
                  {"rows", rows},
                  {"timing", {{"elapsed_seconds", elapsed}}}};
      if (!verify_report.empty()) write_text(verify_report, report.dump(2) + "\n");
      if (as_json) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << (table.all_pass() ? "all orders pass" : "verification FAILED") << "\n";
      }
      return table.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
