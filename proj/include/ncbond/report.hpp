#ifndef NCBOND_REPORT_HPP
#define NCBOND_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncbond/closure.hpp"
#include "ncbond/graph.hpp"
#include "ncbond/polynomial.hpp"
#include "ncbond/poset.hpp"

namespace ncbond {

// JSON building blocks shared by the CLI subcommands.  All output is a pure
// function of the inputs; nlohmann's object keys are sorted, so serialized
// reports are byte-identical across runs.
nlohmann::json edge_to_json(const Edge& e);
nlohmann::json edges_to_json(const std::vector<Edge>& edges);
nlohmann::json polynomial_to_json(const Polynomial& p);
nlohmann::json bond_to_json(const Bond& b);
nlohmann::json ucc_result_to_json(const UccResult& r);

struct ReportOptions {
  std::string order_name = "lex";  // lex | colex | distance | file
  std::optional<std::vector<Edge>> explicit_order;
  std::size_t max_poset_elements = kDefaultMaxPosetElements;
};

EdgeOrdering make_ordering(const Graph& g, const std::string& name,
                           const std::optional<std::vector<Edge>>& explicit_order);

// The full analysis: family classification, poset structure, polynomials,
// Mobius values, and NBC-style counts for the requested ordering.
nlohmann::json analysis_report(const Graph& g, const ReportOptions& opt = {});

}  // namespace ncbond

#endif
