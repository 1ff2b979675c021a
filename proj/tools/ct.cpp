// Command-line explorer for class transpositions of the integers: exact
// orders and cycle structures of products, component dumps of the pairing
// graph, an exhaustive order survey over horizontal pairs, verification of
// the catalogued group orders, and the symmetric-group conjecture check.
//
// Exit codes: 0 success; 2 usage, parse, I/O, or resource errors;
// 3 violation of a verified mathematical invariant (impossible component
// shape, an order outside {1,2,3,4,6,12} in the horizontal survey, or
// disagreement between independent order computations).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"
#include "ct/json_format.hpp"
#include "ct/permutation.hpp"
#include "ct/product_graph.hpp"
#include "ct/rcwa.hpp"
#include "ct/search.hpp"
#include "ct/stabilizer_chain.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

constexpr ct::integer kGroupDegreeCap = 500;

ct::integer default_budget() {
  if (const char* s = std::getenv("CT_DEFAULT_BUDGET")) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != std::string(s).size() || v < 10) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ct::invalid_argument(std::string("CT_DEFAULT_BUDGET must be an integer >= 10, got '") +
                                 s + "'");
    }
  }
  return 10'000;
}

std::string join_lengths(const std::vector<ct::integer>& lens) {
  std::string out;
  for (ct::integer l : lens) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out.empty() ? "(none)" : out;
}

// Assembles an OrderReport-shaped record from the orbit-tracing engine so
// every order method serializes through the same schema.
ct::order_report trace_as_report(const ct::class_transposition& t1,
                                 const ct::class_transposition& t2, ct::integer budget) {
  ct::trace_report tr = ct::trace_product_order(t1, t2, budget);
  ct::order_report rep;
  rep.t1_text = ct::to_string(t1);
  rep.t2_text = ct::to_string(t2);
  rep.status = tr.status;
  rep.order = tr.order;
  rep.cycle_lengths = tr.lengths;
  rep.budget = budget;
  if (!(ct::is_horizontal(t1) && ct::is_horizontal(t2))) rep.window = budget / 10;
  return rep;
}

// Independent engines must agree wherever both certify an answer.  For
// horizontal pairs all engines are exact; for oblique pairs the graph
// components are re-verified orbit by orbit, which pins the derived cycle
// lengths to the actual dynamics.
void cross_check_order(const ct::class_transposition& t1, const ct::class_transposition& t2,
                       ct::integer budget, const ct::order_report& graph_rep) {
  if (ct::is_horizontal(t1) && ct::is_horizontal(t2)) {
    ct::bigint finite = ct::perm_order(ct::horizontal_product_perm({t1, t2}));
    ct::trace_report tr = ct::trace_product_order(t1, t2, budget);
    if (!graph_rep.order || *graph_rep.order != finite || !tr.order || *tr.order != finite)
      throw ct::shape_violation(
          "cross-method disagreement on " + ct::to_string(t1) + " * " + ct::to_string(t2) +
          ": finite=" + finite.str() +
          " graph=" + (graph_rep.order ? graph_rep.order->str() : "null") +
          " trace=" + (tr.order ? tr.order->str() : "null"));
    return;
  }
  if (t1 == t2) return;  // no components to verify; the product is the identity
  auto comps = ct::enumerate_components_window(t1, t2, budget / 10, budget);
  if (!ct::verify_components_by_trace(t1, t2, comps))
    throw ct::shape_violation("cross-method disagreement on " + ct::to_string(t1) + " * " +
                              ct::to_string(t2) +
                              ": component cycle lengths do not match direct orbit tracing");
}

void print_order_text(const ct::order_report& rep) {
  std::cout << "order = " << (rep.order ? rep.order->str() : "unknown");
  if (rep.status == "exact")
    std::cout << " (exact)";
  else if (rep.status == "window-exact")
    std::cout << " (window-exact, window " << *rep.window << ")";
  std::cout << "\n";
  if (rep.status == "unknown")
    std::cout << "partial cycle lengths: " << join_lengths(rep.cycle_lengths)
              << " (budget " << rep.budget << " exhausted; order not certified)\n";
  else
    std::cout << "cycle lengths: " << join_lengths(rep.cycle_lengths) << "\n";
}

int cmd_order(const std::string& t1_text, const std::string& t2_text, const std::string& method,
              ct::integer budget, bool as_json) {
  ct::class_transposition t1 = ct::parse_transposition(t1_text);
  ct::class_transposition t2 = ct::parse_transposition(t2_text);
  if (method == "finite" && !(ct::is_horizontal(t1) && ct::is_horizontal(t2)))
    throw ct::not_horizontal("method 'finite' requires two horizontal transpositions");

  ct::order_report rep = method == "trace" ? trace_as_report(t1, t2, budget)
                                           : ct::product_order_graph(t1, t2, budget);
  cross_check_order(t1, t2, budget, method == "trace" ? ct::product_order_graph(t1, t2, budget)
                                                      : rep);
  std::optional<std::string> note = ct::discrepancy_note(t1, t2);
  if (as_json) {
    ct::ordered_json j = ct::to_json(rep);
    if (note) j["note"] = *note;
    std::cout << j.dump(2) << "\n";
  } else {
    print_order_text(rep);
    if (note) std::cout << "warning: " << *note << "\n";
  }
  return kExitOk;
}

int cmd_components(const std::string& t1_text, const std::string& t2_text, ct::integer budget,
                   bool as_json) {
  ct::class_transposition t1 = ct::parse_transposition(t1_text);
  ct::class_transposition t2 = ct::parse_transposition(t2_text);
  bool horizontal = ct::is_horizontal(t1) && ct::is_horizontal(t2);
  std::vector<ct::graph_component> comps;
  std::optional<ct::integer> window;
  if (horizontal) {
    comps = ct::enumerate_components_horizontal(t1, t2);
  } else {
    window = budget / 10;
    comps = ct::enumerate_components_window(t1, t2, *window, budget);
  }

  ct::ordered_json jcomps = ct::ordered_json::array();
  std::size_t idx = 0;
  for (const ct::graph_component& c : comps) {
    ++idx;
    std::optional<ct::shape_match> sm;
    if (horizontal) sm = ct::match_shape(t1, t2, c);
    bool classified = c.kind != ct::component_kind::truncated;
    ct::derived_cycles dc;
    if (classified) dc = ct::component_cycle_lengths(c);

    if (as_json) {
      ct::ordered_json e;
      e["kind"] = ct::to_string(c.kind);
      e["shape"] = sm ? ct::ordered_json(sm->shape) : ct::ordered_json(nullptr);
      e["mirrored"] = sm ? ct::ordered_json(sm->mirrored) : ct::ordered_json(nullptr);
      ct::ordered_json verts = ct::ordered_json::array();
      for (const ct::vertex& v : c.vertices) {
        ct::ordered_json vj;
        vj["vertex"] = ct::to_string(v);
        vj["mu"] = ct::mu(t1, t2, v);
        verts.push_back(std::move(vj));
      }
      e["vertices"] = std::move(verts);
      e["type1_edges"] = c.type1_edges;
      e["cycle_lengths"] = classified ? ct::ordered_json(dc.lengths) : ct::ordered_json(nullptr);
      jcomps.push_back(std::move(e));
    } else {
      std::cout << "component " << idx << ": " << ct::to_string(c.kind);
      if (sm) {
        std::cout << ", shape " << sm->shape;
        if (sm->mirrored) std::cout << " (mirrored)";
      }
      std::cout << "\n  vertices:";
      for (const ct::vertex& v : c.vertices)
        std::cout << " " << ct::to_string(v) << "(mu=" << ct::mu(t1, t2, v) << ")";
      std::cout << "\n  type-1 edges: " << c.type1_edges << "\n";
      if (classified)
        std::cout << "  cycle lengths: " << join_lengths(dc.lengths) << "\n";
      else
        std::cout << "  cycle lengths: not certified (budget exhausted)\n";
    }
  }
  if (as_json) {
    ct::ordered_json j;
    j["t1"] = ct::to_string(t1);
    j["t2"] = ct::to_string(t2);
    j["components"] = std::move(jcomps);
    j["budget"] = budget;
    j["window"] = window ? ct::ordered_json(*window) : ct::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (comps.empty()) {
    std::cout << "no components seeded\n";
  }
  return kExitOk;
}

int cmd_cycles(const std::vector<std::string>& texts, bool as_json) {
  std::vector<ct::class_transposition> ts;
  for (const std::string& s : texts) ts.push_back(ct::parse_transposition(s));
  ct::permutation p = ct::horizontal_product_perm(ts);
  ct::cycle_structure cs = ct::cycle_decomposition(p);
  if (as_json)
    std::cout << ct::to_json(cs).dump(2) << "\n";
  else
    std::cout << ct::lift_cycles(cs) << "\n";
  return kExitOk;
}

int cmd_search(ct::integer max_modulus, const std::string& out_path, const std::string& format,
               unsigned threads) {
  ct::search_result result = ct::run_search(max_modulus, threads);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ct::io_error("cannot open output file: " + out_path);
  if (format == "csv")
    ct::write_search_csv(out, result);
  else
    out << ct::to_json(result).dump(2) << "\n";
  if (!out) throw ct::io_error("failed writing output file: " + out_path);
  out.close();

  const ct::search_summary& s = result.summary;
  std::cout << "transpositions: " << s.transpositions << "\npairs: " << s.pairs << "\nrealized:";
  for (const ct::bigint& o : s.realized) std::cout << " " << o.str();
  std::cout << "\nwitnesses:\n";
  for (const ct::order_witness& w : s.witnesses)
    std::cout << "  " << w.order.str() << ": " << ct::to_string(w.record.t1) << " * "
              << ct::to_string(w.record.t2) << (w.support_disjoint ? "  (disjoint supports)" : "")
              << "\n";
  if (!s.note.empty()) std::cout << "note: " << s.note << "\n";
  std::cout << "records written to " << out_path << " (" << format << ")\n";
  if (!s.contained) {
    std::cerr << "invariant violation: realized orders escape {1,2,3,4,6,12}:\n";
    for (const ct::search_record& rec : s.violations)
      std::cerr << "  " << ct::to_string(rec.t1) << " * " << ct::to_string(rec.t2) << " has order "
                << rec.order.str() << "\n";
    return kExitViolation;
  }
  std::cout << "containment: all realized orders lie in {1,2,3,4,6,12}\n";
  return kExitOk;
}

int cmd_refine(const std::string& t_text, ct::integer n) {
  ct::class_transposition t = ct::parse_transposition(t_text);
  std::vector<ct::class_transposition> parts = ct::refine(t, n);
  for (ct::integer x = -1000; x <= 1000; ++x) {
    ct::integer y = x;
    for (const ct::class_transposition& p : parts) y = ct::apply(p, y);
    if (y != ct::apply(t, x)) {
      std::cerr << "invariant violation: refinement product differs from the input at " << x
                << "\n";
      return kExitViolation;
    }
  }
  for (const ct::class_transposition& p : parts) std::cout << ct::to_string(p) << "  ";
  std::cout << "[verified]\n";
  return kExitOk;
}

int cmd_embed(ct::integer m, const std::string& perm_text, std::optional<ct::integer> at) {
  if (m < 1 || m > 1000) throw ct::invalid_argument("modulus must be in [1, 1000]");
  ct::permutation sigma = ct::parse_cycles(perm_text, static_cast<int>(m));
  ct::rcwa_mapping f = ct::embed_phi(m, sigma);
  if (at) {
    std::cout << ct::apply(f, *at) << "\n";
    return kExitOk;
  }
  std::cout << "modulus " << f.modulus << "\n";
  for (ct::integer r = 0; r < f.modulus; ++r)
    std::cout << "  n = " << r << " (mod " << f.modulus
              << "): " << ct::to_string(f.pieces[static_cast<std::size_t>(r)]) << "\n";
  return kExitOk;
}

int cmd_group_table() {
  bool all_ok = true;
  for (const ct::group_table_row& row : ct::group_order_table()) {
    std::string moduli;
    for (int m : row.moduli) moduli += (moduli.empty() ? "" : ",") + std::to_string(m);
    std::cout << (row.match ? "PASS" : "FAIL") << "  <CT_" << moduli << "> degree " << row.degree
              << ": order " << row.computed.str() << " (expected " << row.claimed.str() << ")\n";
    all_ok = all_ok && row.match;
  }
  if (!all_ok) {
    std::cerr << "invariant violation: a catalogued group order failed to reproduce\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_group_ctk(const std::string& list, ct::integer degree, bool full, bool show_fixed) {
  std::vector<int> ks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int k = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("");
      ks.push_back(k);
    } catch (const std::exception&) {
      throw ct::parse_error("modulus list must be comma-separated integers, got '" + list + "'");
    }
  }
  if (ks.empty()) throw ct::parse_error("modulus list is empty");
  if (degree == 0)
    for (int k : ks) {
      if (k < 1) throw ct::invalid_argument("modulus must be positive");
      degree = std::lcm(degree == 0 ? 1 : degree, static_cast<ct::integer>(k));
    }
  if (degree > kGroupDegreeCap)
    throw ct::resource_limit("degree " + std::to_string(degree) + " exceeds the cap " +
                             std::to_string(kGroupDegreeCap));
  ct::generator_set gens = ct::ctk_generators(ks, degree, full);
  ct::stabilizer_chain chain(gens);
  std::cout << "degree = " << degree << "\ngenerators = " << gens.gens.size()
            << "\norder = " << chain.order().str() << "\n";
  if (show_fixed) {
    std::vector<int> fixed = ct::fixed_points(gens);
    if (fixed.empty()) {
      std::cout << "no fixed points\n";
    } else {
      std::cout << "fixed points:";
      for (int x : fixed) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_group_file(const std::string& path, bool show_fixed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ct::io_error("cannot open generators file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ct::generator_set gens = ct::parse_generators_json(buffer.str());
  if (gens.degree > kGroupDegreeCap)
    throw ct::resource_limit("degree " + std::to_string(gens.degree) + " exceeds the cap " +
                             std::to_string(kGroupDegreeCap));
  ct::stabilizer_chain chain(gens);
  std::cout << "degree = " << gens.degree << "\ngenerators = " << gens.gens.size()
            << "\norder = " << chain.order().str() << "\n";
  if (show_fixed) {
    std::vector<int> fixed = ct::fixed_points(gens);
    if (fixed.empty()) {
      std::cout << "no fixed points\n";
    } else {
      std::cout << "fixed points:";
      for (int x : fixed) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_conjecture(int k, bool as_json) {
  ct::conjecture_report rep = ct::conjecture_check(k);
  if (as_json) {
    std::cout << ct::to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "k = " << rep.k << ": degree N = " << rep.degree
              << "\norder = " << rep.group_order.str() << "\nN! = " << rep.symmetric_order.str()
              << "\nequal: " << (rep.equal ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with class transpositions of the integers"};
  app.require_subcommand(1);

  try {
    ct::integer budget = default_budget();

    std::string t1_text, t2_text, method = "graph";
    bool as_json = false;
    auto* order = app.add_subcommand("order", "order of the product of two transpositions");
    order->add_option("t1", t1_text, "first transposition, e.g. \"0(2),1(2)\"")->required();
    order->add_option("t2", t2_text, "second transposition")->required();
    order->add_option("--method", method, "order engine (default graph)")
        ->check(CLI::IsMember({"finite", "graph", "trace"}));
    order->add_option("--budget", budget, "traversal budget");
    order->add_flag("--json", as_json, "emit a JSON report");

    auto* components = app.add_subcommand("components", "dump pairing-graph components");
    components->add_option("t1", t1_text, "first transposition")->required();
    components->add_option("t2", t2_text, "second transposition")->required();
    components->add_option("--budget", budget, "traversal budget");
    components->add_flag("--json", as_json, "emit a JSON report");

    std::vector<std::string> cycle_texts;
    auto* cycles = app.add_subcommand("cycles", "lifted cycle families of a horizontal product");
    cycles->add_option("transpositions", cycle_texts, "horizontal transpositions, applied left to right")
        ->required()
        ->expected(-1);
    cycles->add_flag("--json", as_json, "emit the cycle structure as JSON");

    ct::integer max_modulus = 12;
    std::string out_path, format = "csv";
    unsigned threads = 0;
    auto* search = app.add_subcommand("search", "survey orders of all horizontal pairs");
    search->add_option("--max-modulus", max_modulus, "largest modulus to enumerate (default 12)");
    search->add_option("--out", out_path, "output file for the full record list")->required();
    search->add_option("--format", format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    search->add_option("--threads", threads, "worker threads (default: all cores)");

    std::string refine_text;
    ct::integer refine_n = 1;
    auto* refine = app.add_subcommand("refine", "split a transposition into finer ones");
    refine->add_option("t", refine_text, "transposition to refine")->required();
    refine->add_option("n", refine_n, "number of parts")->required();

    ct::integer embed_m = 2;
    std::string embed_perm;
    std::optional<ct::integer> embed_at;
    auto* embed = app.add_subcommand("embed", "integral affine form of a finite permutation");
    embed->add_option("m", embed_m, "modulus (degree of the permutation)")->required();
    embed->add_option("perm", embed_perm, "permutation in cycle form, e.g. \"(0,1)\"")->required();
    embed->add_option("--at", embed_at, "also evaluate the embedded map at this integer");

    auto* group = app.add_subcommand("group", "orders of groups generated by reduced transpositions");
    group->require_subcommand(1);
    auto* gtable = group->add_subcommand("table", "re-verify the six catalogued group orders");
    std::string ctk_list;
    ct::integer ctk_degree = 0;
    bool ctk_full = false, show_fixed = false;
    auto* gctk = group->add_subcommand("ctk", "group generated by transpositions of given moduli");
    gctk->add_option("moduli", ctk_list, "comma-separated moduli, e.g. 2,3")->required();
    gctk->add_option("--degree", ctk_degree, "degree of the reduction (default: lcm of moduli)");
    gctk->add_flag("--full", ctk_full, "use all residue pairs instead of adjacent ones");
    gctk->add_flag("--fixed-points", show_fixed, "also report common fixed points");
    std::string gens_path;
    auto* gfile = group->add_subcommand("file", "group from a generators JSON file");
    gfile->add_option("path", gens_path, "generators file")->required();
    gfile->add_flag("--fixed-points", show_fixed, "also report common fixed points");

    int conjecture_k = 0;
    auto* conjecture =
        app.add_subcommand("conjecture", "compare a reduced transposition group with the full symmetric group");
    conjecture->add_option("k", conjecture_k, "largest modulus (period is lcm(2..k))")->required();
    conjecture->add_flag("--json", as_json, "emit a JSON report");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? kExitOk : kExitUsage;
    }

    if (order->parsed()) return cmd_order(t1_text, t2_text, method, budget, as_json);
    if (components->parsed()) return cmd_components(t1_text, t2_text, budget, as_json);
    if (cycles->parsed()) return cmd_cycles(cycle_texts, as_json);
    if (search->parsed()) return cmd_search(max_modulus, out_path, format, threads);
    if (refine->parsed()) return cmd_refine(refine_text, refine_n);
    if (embed->parsed()) return cmd_embed(embed_m, embed_perm, embed_at);
    if (group->parsed()) {
      if (gtable->parsed()) return cmd_group_table();
      if (gctk->parsed()) return cmd_group_ctk(ctk_list, ctk_degree, ctk_full, show_fixed);
      if (gfile->parsed()) return cmd_group_file(gens_path, show_fixed);
    }
    if (conjecture->parsed()) return cmd_conjecture(conjecture_k, as_json);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ct::shape_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ct::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
