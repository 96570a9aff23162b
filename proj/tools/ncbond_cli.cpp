// Command-line front end: ingestion, analysis reports, poset export, family
// checks, NBC counts, and oracle cross-checks.
//
// Exit codes: 0 ok, 1 input error, 2 size refusal, 3 oracle mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncbond/bonds.hpp"
#include "ncbond/closure.hpp"
#include "ncbond/errors.hpp"
#include "ncbond/graph.hpp"
#include "ncbond/labelings.hpp"
#include "ncbond/nbc.hpp"
#include "ncbond/oracles.hpp"
#include "ncbond/poset.hpp"
#include "ncbond/report.hpp"

using json = nlohmann::json;
using namespace ncbond;

namespace {

struct GraphSelection {
  std::string corpus_name;
  int corpus_param = -1;
  std::string input_path;

  Graph load() const {
    if (!corpus_name.empty()) {
      std::optional<int> param;
      if (corpus_param >= 0) param = corpus_param;
      return corpus(corpus_name, param);
    }
    if (!input_path.empty()) return read_edge_list_file(input_path);
    throw InputError("no input graph: use --corpus or --input");
  }
};

struct OrderSelection {
  std::string name = "lex";
  std::string file;

  EdgeOrdering resolve(const Graph& g) const {
    if (name == "file") {
      if (file.empty()) throw InputError("--order file needs --order-file");
      std::ifstream in(file);
      if (!in) throw InputError("cannot open ordering file '" + file + "'");
      std::vector<Edge> order;
      std::string line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int a, b;
        if (ls >> a >> b) order.emplace_back(a, b);
      }
      return EdgeOrdering(g, std::move(order));
    }
    return make_ordering(g, name, std::nullopt);
  }
};

void add_graph_options(CLI::App* cmd, GraphSelection& sel) {
  cmd->add_option("--corpus", sel.corpus_name, "named corpus graph");
  cmd->add_option("--param", sel.corpus_param, "size parameter for complete / k_even_odd");
  cmd->add_option("--input", sel.input_path, "edge-list file (first line n, then 'i j' lines)");
}

void add_order_options(CLI::App* cmd, OrderSelection& sel) {
  cmd->add_option("--order", sel.name, "edge ordering: lex, colex, distance, file")
      ->default_val("lex");
  cmd->add_option("--order-file", sel.file, "explicit edge ordering, one 'i j' per line");
}

void emit(const json& value, const std::string& out_path) {
  std::string text = value.dump(2);
  text.push_back('\n');
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
  }
}

int run_oracle_check(const Graph& g, const std::string& against, const std::string& out_path) {
  json report;
  report["against"] = against;
  bool agree = true;
  if (against == "mobius") {
    BondPoset bp = nc_poset(g);
    auto fast = mobius(bp.poset);
    auto slow = oracle_mobius(bp.poset);
    json rows = json::array();
    for (int i = 0; i < bp.poset.size(); ++i) {
      bool same = fast[static_cast<std::size_t>(i)] == slow[static_cast<std::size_t>(i)];
      agree = agree && same;
      rows.push_back(json{{"element", bp.poset.label(i)},
                          {"mobius", fast[static_cast<std::size_t>(i)]},
                          {"oracle", slow[static_cast<std::size_t>(i)]},
                          {"agree", same}});
    }
    report["rows"] = rows;
  } else if (against == "chromatic") {
    Polynomial fast = chromatic_polynomial(g);
    Polynomial slow = oracle_chromatic(g);
    agree = fast == slow;
    report["chromatic"] = polynomial_to_json(fast);
    report["oracle"] = polynomial_to_json(slow);
  } else if (against == "lattice") {
    bool fast = is_crossing_closed(g).closed;
    bool slow = oracle_lattice(nc_poset(g).poset);
    agree = fast == slow;
    report["crossing_closed"] = fast;
    report["oracle_lattice"] = slow;
  } else if (against == "j") {
    json rows = json::array();
    for (const auto& [e, f] : g.crossing_pairs()) {
      JResult j = compute_J(g, e, f);
      auto witnesses = oracle_J(g, e, f);
      bool same = j.kind == JResult::Kind::NotClosed
                      ? witnesses.size() != 1
                      : (witnesses.size() == 1 && j.vertices == witnesses[0]);
      agree = agree && same;
      rows.push_back(json{{"pair", json::array({edge_to_json(e), edge_to_json(f)})},
                          {"closed", j.kind != JResult::Kind::NotClosed},
                          {"oracle_minimal_count", witnesses.size()},
                          {"agree", same}});
    }
    report["rows"] = rows;
  } else {
    throw InputError("unknown oracle target '" + against + "' (mobius, chromatic, lattice, j)");
  }
  report["agree"] = agree;
  emit(report, out_path);
  return agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing bond poset toolkit"};
  app.require_subcommand(1);

  int threads = 0;  // reserved; current pipelines are sequential and deterministic
  app.add_option("--threads", threads, "worker threads (reserved)");

  GraphSelection g_analyze, g_poset, g_check, g_nbc, g_mobius, g_charpoly, g_oracle;
  OrderSelection o_analyze, o_poset, o_check, o_nbc;
  std::string out_analyze, out_check, out_nbc, out_mobius, out_charpoly, out_oracle;
  std::size_t max_poset = kDefaultMaxPosetElements;
  unsigned seed = 0;

  auto* analyze = app.add_subcommand("analyze", "full analysis report (JSON)");
  add_graph_options(analyze, g_analyze);
  add_order_options(analyze, o_analyze);
  analyze->add_option("--out", out_analyze, "output path (default stdout)");
  analyze->add_option("--max-poset", max_poset, "poset element guard");
  analyze->add_option("--seed", seed, "seed for sampling-based consumers (recorded only)");

  auto* poset_cmd = app.add_subcommand("poset", "DOT export of NC_G or L_G");
  std::string which_poset = "nc", labels_kind, dot_out = "-";
  add_graph_options(poset_cmd, g_poset);
  add_order_options(poset_cmd, o_poset);
  poset_cmd->add_option("--which", which_poset, "nc or bond")->default_val("nc");
  poset_cmd->add_option("--dot", dot_out, "DOT output path (default stdout)");
  poset_cmd->add_option("--labels", labels_kind, "cover labels: min or maxmin");

  auto* check = app.add_subcommand("check", "single family verdict with certificate");
  std::string family;
  add_graph_options(check, g_check);
  add_order_options(check, o_check);
  check->add_option("--family", family,
                    "crossing_closed, ucc, tightly_closed, strongly_upper_crossed, "
                    "perfectly_labeled, chordal, one_hat")
      ->required();
  check->add_option("--out", out_check, "output path");

  auto* nbc_cmd = app.add_subcommand("nbc", "NBC / NCNBC / ISF counts");
  add_graph_options(nbc_cmd, g_nbc);
  add_order_options(nbc_cmd, o_nbc);
  nbc_cmd->add_option("--out", out_nbc, "output path");

  auto* mobius_cmd = app.add_subcommand("mobius", "Mobius values per element");
  std::string which_mobius = "nc";
  add_graph_options(mobius_cmd, g_mobius);
  mobius_cmd->add_option("--which", which_mobius, "nc or bond")->default_val("nc");
  mobius_cmd->add_option("--out", out_mobius, "output path");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic or chromatic polynomial");
  std::string which_poly = "nc";
  add_graph_options(charpoly_cmd, g_charpoly);
  charpoly_cmd->add_option("--which", which_poly, "nc, bond, or chromatic")->default_val("nc");
  charpoly_cmd->add_option("--out", out_charpoly, "output path");

  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check fast paths against oracles");
  std::string against;
  add_graph_options(oracle_cmd, g_oracle);
  oracle_cmd->add_option("--against", against, "mobius, chromatic, lattice, j")->required();
  oracle_cmd->add_option("--out", out_oracle, "output path");

  auto* corpus_list = app.add_subcommand("corpus-list", "list the named corpus graphs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus_list->parsed()) {
      for (const auto& name : corpus_names()) std::cout << name << "\n";
      return 0;
    }
    if (analyze->parsed()) {
      Graph g = g_analyze.load();
      ReportOptions opt;
      opt.order_name = o_analyze.name;
      if (o_analyze.name == "file") opt.explicit_order = o_analyze.resolve(g).edges();
      opt.max_poset_elements = max_poset;
      emit(analysis_report(g, opt), out_analyze);
      return 0;
    }
    if (poset_cmd->parsed()) {
      Graph g = g_poset.load();
      if (which_poset != "bond" && which_poset != "nc") throw InputError("--which must be nc or bond");
      BondPoset bp = which_poset == "bond" ? bond_lattice(g) : nc_poset(g);
      std::string dot;
      if (labels_kind.empty()) {
        dot = to_dot(bp.poset);
      } else {
        if (labels_kind != "maxmin" && labels_kind != "min")
          throw InputError("--labels must be min or maxmin");
        HasseLabeling lambda = labels_kind == "maxmin" ? maxmin_labeling(bp)
                                                       : minimum_labeling(bp, o_poset.resolve(g));
        auto labels = lambda.dot_labels();
        dot = to_dot(bp.poset, &labels);
      }
      emit_text(dot, dot_out);
      return 0;
    }
    if (check->parsed()) {
      Graph g = g_check.load();
      json verdict;
      verdict["family"] = family;
      if (family == "crossing_closed") {
        auto r = is_crossing_closed(g);
        verdict["value"] = r.closed;
        if (!r.closed)
          verdict["witness_pair"] =
              json::array({edge_to_json(r.failing_pair->first), edge_to_json(r.failing_pair->second)});
      } else if (family == "ucc") {
        verdict.update(ucc_result_to_json(upper_crossing_closed(g)));
      } else if (family == "tightly_closed") {
        verdict["value"] = is_tightly_closed(g);
      } else if (family == "strongly_upper_crossed") {
        EdgeOrdering sigma = o_check.resolve(g);
        verdict["value"] = is_strongly_upper_crossed(g, sigma);
        verdict["sigma"] = edges_to_json(sigma.edges());
      } else if (family == "perfectly_labeled") {
        verdict["value"] = is_perfectly_labeled(g);
      } else if (family == "chordal") {
        verdict["value"] = is_chordal(g);
      } else if (family == "one_hat") {
        verdict["value"] = has_one_hat(g);
      } else {
        throw InputError("unknown family '" + family + "'");
      }
      emit(verdict, out_check);
      return 0;
    }
    if (nbc_cmd->parsed()) {
      Graph g = g_nbc.load();
      EdgeOrdering sigma = o_nbc.resolve(g);
      auto isf = increasing_spanning_forests(g);
      json out;
      out["order"] = o_nbc.name;
      out["sigma"] = edges_to_json(sigma.edges());
      json bc = json::array();
      for (const auto& c : broken_circuits(g, sigma)) bc.push_back(edges_to_json(c));
      out["broken_circuits"] = bc;
      out["nbc"] = json(nbc_counts(g, sigma));
      out["ncnbc"] = json(ncnbc_counts(g, sigma));
      out["ncisf"] = json(isf.noncrossing_by_size);
      out["isf"] = json(isf.by_size);
      emit(out, out_nbc);
      return 0;
    }
    if (mobius_cmd->parsed()) {
      Graph g = g_mobius.load();
      if (which_mobius != "bond" && which_mobius != "nc") throw InputError("--which must be nc or bond");
      BondPoset bp = which_mobius == "bond" ? bond_lattice(g) : nc_poset(g);
      auto mu = mobius(bp.poset);
      json out;
      for (int i = 0; i < bp.poset.size(); ++i) out[bp.poset.label(i)] = mu[static_cast<std::size_t>(i)];
      emit(out, out_mobius);
      return 0;
    }
    if (charpoly_cmd->parsed()) {
      Graph g = g_charpoly.load();
      Polynomial p;
      if (which_poly == "nc") {
        p = characteristic_polynomial(nc_poset(g).poset);
      } else if (which_poly == "bond") {
        p = characteristic_polynomial(bond_lattice(g).poset);
      } else if (which_poly == "chromatic") {
        p = chromatic_polynomial(g);
      } else {
        throw InputError("--which must be nc, bond, or chromatic");
      }
      json out;
      out["which"] = which_poly;
      out["coefficients"] = polynomial_to_json(p);
      out["pretty"] = p.to_string();
      emit(out, out_charpoly);
      return 0;
    }
    if (oracle_cmd->parsed()) return run_oracle_check(g_oracle.load(), against, out_oracle);
  } catch (const SizeLimitError& e) {
    std::cerr << "size refusal: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
