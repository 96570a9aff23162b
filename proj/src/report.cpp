#include "ncbond/report.hpp"

#include <algorithm>

#include "ncbond/errors.hpp"
#include "ncbond/labelings.hpp"
#include "ncbond/nbc.hpp"

namespace ncbond {

using nlohmann::json;

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_to_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(edge_to_json(e));
  return arr;
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (std::int64_t c : p.coefficients()) arr.push_back(c);
  return arr;
}

json bond_to_json(const Bond& b) {
  json partition = json::array();
  for (const auto& block : b.partition().blocks()) partition.push_back(block);
  return json{{"partition", partition}, {"edges", edges_to_json(b.edges())}};
}

json ucc_result_to_json(const UccResult& r) {
  json out;
  if (const auto* ncc = std::get_if<UccNotCrossingClosed>(&r)) {
    out["value"] = false;
    out["reason"] = "not_crossing_closed";
    out["witness_pair"] = json::array({edge_to_json(ncc->witness.first), edge_to_json(ncc->witness.second)});
  } else if (const auto* ord = std::get_if<UccOrdering>(&r)) {
    out["value"] = true;
    out["sigma"] = edges_to_json(ord->sigma.edges());
    json rounds = json::array();
    for (const auto& round : ord->rounds) rounds.push_back(edges_to_json(round));
    out["rounds"] = rounds;
  } else {
    out["value"] = false;
    out["obstruction"] = edges_to_json(std::get<UccObstruction>(r).obstruction);
  }
  return out;
}

EdgeOrdering make_ordering(const Graph& g, const std::string& name,
                           const std::optional<std::vector<Edge>>& explicit_order) {
  if (name == "lex") return EdgeOrdering::lexicographic(g);
  if (name == "colex") return EdgeOrdering::colexicographic(g);
  if (name == "distance") return distance_ordering(g);
  if (name == "file") {
    if (!explicit_order) throw InputError("explicit ordering missing");
    return EdgeOrdering(g, *explicit_order);
  }
  throw InputError("unknown ordering '" + name + "' (use lex, colex, distance, or file)");
}

namespace {

// crossing-free edges first (lex), then the crossing ones (lex); the natural
// candidate for strongly-upper-crossed graphs with few crossings
EdgeOrdering crossing_last_ordering(const Graph& g) {
  std::vector<Edge> order;
  for (const Edge& e : g.edges())
    if (!g.edge_crosses_something(e)) order.push_back(e);
  for (const Edge& e : g.edges())
    if (g.edge_crosses_something(e)) order.push_back(e);
  return EdgeOrdering(g, std::move(order));
}

json counts_to_json(const std::vector<std::int64_t>& counts) {
  json arr = json::array();
  for (std::int64_t c : counts) arr.push_back(c);
  return arr;
}

}  // namespace

json analysis_report(const Graph& g, const ReportOptions& opt) {
  json report;
  report["schema"] = 1;

  report["graph"] = {{"n", g.n()},
                     {"edge_count", g.edge_count()},
                     {"edges", edges_to_json(g.edges())},
                     {"connected", g.is_connected()}};

  EdgeOrdering sigma = make_ordering(g, opt.order_name, opt.explicit_order);

  // ---- family verdicts
  json families;
  auto cc = is_crossing_closed(g);
  families["crossing_closed"] = json{{"value", cc.closed}};
  if (!cc.closed)
    families["crossing_closed"]["witness_pair"] =
        json::array({edge_to_json(cc.failing_pair->first), edge_to_json(cc.failing_pair->second)});
  if (g.n() > 10)
    families["crossing_closed"]["note"] =
        "J uniqueness rests on the path criterion; the minimal-witness oracle stops at 10 vertices";

  UccResult ucc = upper_crossing_closed(g);
  families["upper_crossing_closed"] = ucc_result_to_json(ucc);
  families["tightly_closed"] = is_tightly_closed(g);
  families["perfectly_labeled"] = is_perfectly_labeled(g);
  families["chordal"] = is_chordal(g);
  families["has_one_hat"] = has_one_hat(g);

  json suc;
  if (g.n() > 10) {
    suc["value"] = nullptr;
    suc["reason"] = "minimal-witness enumeration is limited to 10 vertices";
  } else {
    std::vector<std::pair<std::string, EdgeOrdering>> candidates;
    candidates.emplace_back("lex", EdgeOrdering::lexicographic(g));
    candidates.emplace_back("colex", EdgeOrdering::colexicographic(g));
    if (g.edges() == k_even_odd(g.n()).edges())
      candidates.emplace_back("distance", distance_ordering(g));
    candidates.emplace_back("crossing_last", crossing_last_ordering(g));
    if (const auto* ord = std::get_if<UccOrdering>(&ucc)) candidates.emplace_back("ucc", ord->sigma);
    json tried = json::array();
    suc["value"] = false;
    for (const auto& [name, order] : candidates) {
      tried.push_back(name);
      if (is_strongly_upper_crossed(g, order)) {
        suc["value"] = true;
        suc["order_name"] = name;
        suc["sigma"] = edges_to_json(order.edges());
        break;
      }
    }
    suc["orders_tried"] = tried;
  }
  families["strongly_upper_crossed"] = suc;
  report["families"] = families;

  // ---- poset structure
  BondPoset nc = nc_poset(g, opt.max_poset_elements);
  BondPoset bl = bond_lattice(g, opt.max_poset_elements);

  json poset;
  poset["size"] = nc.poset.size();
  auto grade = grading(nc.poset);
  poset["graded"] = grade.graded;
  if (grade.graded) {
    poset["rank"] = grade.poset_rank();
  } else {
    auto chain_labels = [&](const std::vector<int>& chain) {
      json arr = json::array();
      for (int x : chain) arr.push_back(nc.poset.label(x));
      return arr;
    };
    poset["witness_chains"] = json{{"a", chain_labels(grade.chain_a)}, {"b", chain_labels(grade.chain_b)}};
  }
  auto lattice = lattice_report(nc.poset);
  poset["lattice"] = lattice.is_lattice;
  poset["has_top"] = lattice.has_top;
  if (lattice.first_meetless_pair)
    poset["first_meetless_pair"] = json::array({nc.poset.label(lattice.first_meetless_pair->first),
                                                nc.poset.label(lattice.first_meetless_pair->second)});
  if (lattice.first_joinless_pair)
    poset["first_joinless_pair"] = json::array({nc.poset.label(lattice.first_joinless_pair->first),
                                                nc.poset.label(lattice.first_joinless_pair->second)});
  if (lattice.is_lattice) {
    poset["atomic"] = is_atomic(nc.poset);
    poset["semimodular"] = is_semimodular(nc.poset);
  } else {
    poset["atomic"] = nullptr;
    poset["semimodular"] = nullptr;
  }
  report["poset"] = poset;

  // ---- polynomials
  json polys;
  if (grade.graded) {
    Polynomial chi = characteristic_polynomial(nc.poset);
    polys["characteristic_nc"] = polynomial_to_json(chi);
    polys["internal_zero"] = chi.has_internal_zero();
  } else {
    polys["characteristic_nc"] = "not_graded";
    polys["internal_zero"] = nullptr;
  }
  polys["characteristic_bond"] = polynomial_to_json(characteristic_polynomial(bl.poset));
  polys["chromatic"] = polynomial_to_json(chromatic_polynomial(g));
  report["polynomials"] = polys;

  // ---- Mobius values of NC_G, keyed by partition
  auto mu = mobius(nc.poset);
  json mu_json;
  for (int i = 0; i < nc.poset.size(); ++i) mu_json[nc.poset.label(i)] = mu[static_cast<std::size_t>(i)];
  report["mobius"] = mu_json;

  // ---- counts for the requested ordering
  auto isf = increasing_spanning_forests(g);
  json counts = json::array();
  counts.push_back(json{{"order", opt.order_name},
                        {"sigma", edges_to_json(sigma.edges())},
                        {"nbc", counts_to_json(nbc_counts(g, sigma))},
                        {"ncnbc", counts_to_json(ncnbc_counts(g, sigma))},
                        {"ncisf", counts_to_json(isf.noncrossing_by_size)}});
  report["counts"] = counts;

  return report;
}

}  // namespace ncbond
