#include <algorithm>
#include <set>

#include "doctest.h"
#include "ncbond/closure.hpp"
#include "ncbond/errors.hpp"
#include "ncbond/labelings.hpp"
#include "ncbond/nbc.hpp"
#include "ncbond/poset.hpp"
#include "support/sampling.hpp"

using namespace ncbond;

namespace {

int idx(const BondPoset& bp, const Graph& g, const std::vector<Edge>& edges) {
  int i = bp.index_of(bond_closure(g, edges));
  REQUIRE(i >= 0);
  return i;
}

std::set<std::set<Edge>> chain_edge_sets(const DecreasingChains& dc) {
  std::set<std::set<Edge>> out;
  for (const auto& chain : dc.chains) {
    std::set<Edge> labels;
    for (const CoverLabel& label : chain) {
      REQUIRE(label.is_edge);
      labels.insert(label.edge);
    }
    out.insert(std::move(labels));
  }
  REQUIRE(out.size() == dc.chains.size());  // no repeated label set
  return out;
}

std::set<std::set<Edge>> as_edge_sets(const std::vector<std::vector<Edge>>& sets) {
  std::set<std::set<Edge>> out;
  for (const auto& s : sets) out.insert(std::set<Edge>(s.begin(), s.end()));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("labelings");

TEST_CASE("minimum labeling") {
  Graph g = corpus("fig8_path");
  BondPoset bp = nc_poset(g);
  auto lambda = minimum_labeling(bp, EdgeOrdering::lexicographic(g));

  int bottom = *bp.poset.bottom();
  int a12 = idx(bp, g, {Edge(1, 2)});
  int a13 = idx(bp, g, {Edge(1, 3)});
  int a24 = idx(bp, g, {Edge(2, 4)});
  int b123 = idx(bp, g, {Edge(1, 2), Edge(1, 3)});
  int b124 = idx(bp, g, {Edge(1, 2), Edge(2, 4)});
  int top = *bp.poset.top();

  CHECK(lambda.at(bottom, a12).edge == Edge(1, 2));
  CHECK(lambda.at(bottom, a13).edge == Edge(1, 3));
  CHECK(lambda.at(bottom, a24).edge == Edge(2, 4));
  CHECK(lambda.at(a13, b123).edge == Edge(1, 2));
  CHECK(lambda.at(a12, b123).edge == Edge(1, 3));
  CHECK(lambda.at(a12, b124).edge == Edge(2, 4));
  CHECK(lambda.at(a24, b124).edge == Edge(1, 2));
  CHECK(lambda.at(b123, top).edge == Edge(2, 4));
  CHECK(lambda.at(b124, top).edge == Edge(1, 3));

  Graph tc4 = corpus("twisted_c4");
  BondPoset tp = nc_poset(tc4);
  auto tl = minimum_labeling(tp, EdgeOrdering::lexicographic(tc4));
  CHECK(tl.at(*tp.poset.bottom(), idx(tp, tc4, {Edge(1, 2)})).edge == Edge(1, 2));
}

TEST_CASE("max-min labeling") {
  Graph g = corpus("fig8_path");
  BondPoset bp = nc_poset(g);
  auto lambda = maxmin_labeling(bp);

  int bottom = *bp.poset.bottom();
  int a13 = idx(bp, g, {Edge(1, 3)});
  int a12 = idx(bp, g, {Edge(1, 2)});
  int b123 = idx(bp, g, {Edge(1, 2), Edge(1, 3)});
  int top = *bp.poset.top();

  CHECK(lambda.at(bottom, a13).value == 2);  // blocks {1},{3}
  CHECK(lambda.at(bottom, a12).value == 1);  // blocks {1},{2}
  CHECK(lambda.at(b123, top).value == 3);    // blocks {1,2,3},{4}
  CHECK_FALSE(lambda.at(bottom, a13).is_edge);

  CHECK_THROWS_AS(maxmin_labeling(nc_poset(corpus("fig4_path"))), NotGradedError);
}

TEST_CASE("EL verification") {
  SUBCASE("the minimum labeling is an EL-labeling of every bond lattice") {
    for (const auto& name : {"fig3", "twisted_c4", "fig8_path", "star5", "fig9_g", "fig1_g"}) {
      Graph g = corpus(name);
      BondPoset bl = bond_lattice(g);
      auto lambda = minimum_labeling(bl, EdgeOrdering::lexicographic(g));
      CHECK(is_el_labeling(bl.poset, lambda).ok);
    }
  }

  SUBCASE("max-min fails on a graded non-perfectly-labeled graph") {
    // 13 and 23 are edges but 12 is not; the top interval has two chains
    // with the same label word
    Graph g(3, {Edge(1, 3), Edge(2, 3)});
    REQUIRE_FALSE(is_perfectly_labeled(g));
    BondPoset bp = nc_poset(g);
    auto lambda = maxmin_labeling(bp);
    auto r = is_el_labeling(bp.poset, lambda);
    REQUIRE_FALSE(r.ok);
    CHECK(r.failing_interval == std::make_pair(*bp.poset.bottom(), *bp.poset.top()));
  }

  SUBCASE("a two-element chain accepts any labeling") {
    Graph g(2, {Edge(1, 2)});
    BondPoset bp = nc_poset(g);
    auto lambda = minimum_labeling(bp, EdgeOrdering::lexicographic(g));
    CHECK(is_el_labeling(bp.poset, lambda).ok);
  }

  SUBCASE("an interval whose only chain descends is not EL") {
    // a 3-chain labeled 2 then 1: the unique maximal chain has a descent, so
    // the interval has no increasing chain at all
    FinitePoset three({"a", "b", "c"}, {{0, 1}, {1, 2}});
    HasseLabeling lambda;
    lambda.set(0, 1, CoverLabel{false, Edge{}, 2, 2});
    lambda.set(1, 2, CoverLabel{false, Edge{}, 1, 1});
    auto r = is_el_labeling(three, lambda);
    REQUIRE_FALSE(r.ok);
    CHECK(r.failing_interval == std::make_pair(0, 2));
  }

  SUBCASE("chain enumeration fails loudly past the guard") {
    Graph g = corpus("twisted_c4");
    BondPoset bp = nc_poset(g);
    auto lambda = minimum_labeling(bp, EdgeOrdering::lexicographic(g));
    CHECK_THROWS_AS(is_el_labeling(bp.poset, lambda, 1), SizeLimitError);
  }
}

TEST_CASE("Sn EL-labelings") {
  Graph g8 = corpus("fig8_path");
  CHECK(is_sn_el_labeling(nc_poset(g8).poset, maxmin_labeling(nc_poset(g8))));

  Graph k4 = complete_graph(4);
  CHECK(is_sn_el_labeling(nc_poset(k4).poset, maxmin_labeling(nc_poset(k4))));

  // edge-valued labels are never permutations of [n]
  BondPoset bp = nc_poset(g8);
  CHECK_FALSE(is_sn_el_labeling(bp.poset, minimum_labeling(bp, EdgeOrdering::lexicographic(g8))));

  SUBCASE("max-min is Sn-EL iff perfectly labeled (connected graded samples)") {
    auto graphs = testing::connected_sample(60, 4, 6, 61);
    graphs.push_back(corpus("fig9_g"));
    graphs.push_back(corpus("fig9_h"));
    int checked = 0;
    for (const Graph& g : graphs) {
      BondPoset bp2 = nc_poset(g);
      if (!grading(bp2.poset).graded) continue;
      ++checked;
      CHECK(is_sn_el_labeling(bp2.poset, maxmin_labeling(bp2)) == is_perfectly_labeled(g));
    }
    CHECK(checked >= 20);
  }
}

TEST_CASE("decreasing chains") {
  Graph tc4 = corpus("twisted_c4");
  BondPoset bp = nc_poset(tc4);
  auto lambda = minimum_labeling(bp, EdgeOrdering::lexicographic(tc4));

  auto top = decreasing_chain_count(bp.poset, lambda, *bp.poset.top());
  CHECK(top.count == 2);
  auto sets = chain_edge_sets(top);
  CHECK(sets == std::set<std::set<Edge>>{{Edge(1, 2), Edge(1, 3), Edge(3, 4)},
                                         {Edge(1, 2), Edge(2, 4), Edge(3, 4)}});

  auto bottom = decreasing_chain_count(bp.poset, lambda, *bp.poset.bottom());
  CHECK(bottom.count == 1);  // the empty chain
  CHECK(bottom.chains.front().empty());

  SUBCASE("matches the Mobius absolute value via the EL theorem") {
    auto mu = mobius(bp.poset);
    auto ranks = grading(bp.poset);
    REQUIRE(ranks.graded);
    for (int x = 0; x < bp.poset.size(); ++x) {
      auto dc = decreasing_chains(bp.poset, lambda, x);
      std::int64_t sign = ranks.ranks[static_cast<std::size_t>(x)] % 2 == 0 ? 1 : -1;
      CHECK(mu[static_cast<std::size_t>(x)] == sign * dc.count);
    }
  }
}

TEST_CASE("min_label_nc_hypothesis") {
  SUBCASE("star5 fails under lexicographic order, with a concrete witness") {
    Graph g = corpus("star5");
    auto r = min_label_nc_hypothesis(g, EdgeOrdering::lexicographic(g));
    REQUIRE_FALSE(r.ok);
    auto [lo, hi, e] = *r.counterexample;
    BondPoset bp = nc_poset(g);
    CHECK(bp.poset.less(lo, hi));
    // e really is the minimum new edge and really creates a crossing
    const Bond& h = bp.bonds[static_cast<std::size_t>(lo)];
    const Bond& hp = bp.bonds[static_cast<std::size_t>(hi)];
    CHECK(hp.has_edge(e));
    CHECK_FALSE(h.has_edge(e));
    auto sigma = EdgeOrdering::lexicographic(g);
    for (const Edge& other : hp.edges())
      if (!h.has_edge(other)) CHECK(sigma.rank(e) <= sigma.rank(other));
    std::vector<Edge> ext = h.edges();
    ext.push_back(e);
    CHECK_FALSE(bond_closure(g, ext).partition().is_noncrossing());
  }

  SUBCASE("perfectly labeled graphs pass under colex") {
    for (const auto& name : {"fig9_g", "fig12"}) {
      Graph g = corpus(name);
      if (!has_one_hat(g)) continue;
      CHECK(min_label_nc_hypothesis(g, EdgeOrdering::colexicographic(g)).ok);
    }
    Graph k5 = complete_graph(5);
    CHECK(min_label_nc_hypothesis(k5, EdgeOrdering::colexicographic(k5)).ok);
  }

  SUBCASE("strongly upper crossed orderings pass") {
    Graph g = corpus("fig1_g");
    EdgeOrdering last(g, {Edge(1, 2), Edge(1, 6), Edge(2, 3), Edge(5, 6), Edge(1, 4), Edge(3, 5)});
    REQUIRE(is_strongly_upper_crossed(g, last));
    CHECK(min_label_nc_hypothesis(g, last).ok);
  }

  SUBCASE("requires a maximum element") {
    Graph g = corpus("fig3");
    CHECK_THROWS_AS(min_label_nc_hypothesis(g, EdgeOrdering::lexicographic(g)), InputError);
  }
}

TEST_CASE("the gradedness-EL-NBC chain of conclusions") {
  // whenever the hypothesis holds: graded with rank n - cc, the minimum
  // labeling is EL, decreasing chains biject with spanning NCNBC sets, and
  // the Mobius function is the signed NCNBC count
  auto graphs = testing::connected_sample(30, 4, 6, 67);
  graphs.push_back(corpus("fig9_g"));
  graphs.push_back(corpus("twisted_c4"));
  graphs.push_back(complete_graph(4));
  int qualifying = 0;
  for (const Graph& g : graphs) {
    if (!has_one_hat(g)) continue;
    for (const auto* order_name : {"lex", "colex"}) {
      EdgeOrdering sigma = order_name == std::string("lex") ? EdgeOrdering::lexicographic(g)
                                                            : EdgeOrdering::colexicographic(g);
      BondPoset bp = nc_poset(g);
      if (!min_label_nc_hypothesis(g, sigma, bp).ok) continue;
      ++qualifying;

      auto grade = grading(bp.poset);
      REQUIRE(grade.graded);
      for (int x = 0; x < bp.poset.size(); ++x)
        CHECK(grade.ranks[static_cast<std::size_t>(x)] ==
              g.n() - bp.bonds[static_cast<std::size_t>(x)].component_count());

      auto lambda = minimum_labeling(bp, sigma);
      REQUIRE(is_el_labeling(bp.poset, lambda).ok);

      auto mu = mobius(bp.poset);
      for (int x = 0; x < bp.poset.size(); ++x) {
        const Bond& b = bp.bonds[static_cast<std::size_t>(x)];
        auto dc = decreasing_chains(bp.poset, lambda, x);
        auto spanning = ncnbc_spanning_sets(g, sigma, b);
        CHECK(chain_edge_sets(dc) == as_edge_sets(spanning));
        CHECK(dc.count == static_cast<std::int64_t>(spanning.size()));
        std::int64_t sign = (g.n() - b.component_count()) % 2 == 0 ? 1 : -1;
        CHECK(mu[static_cast<std::size_t>(x)] == sign * static_cast<std::int64_t>(spanning.size()));

        // weak and strict decreasing counts coincide for minimum labelings
        CHECK(decreasing_chains(bp.poset, lambda, x, false).count == dc.count);
      }
    }
  }
  CHECK(qualifying >= 10);
}

TEST_CASE("bond lattice decreasing chains are spanning NBC sets") {
  auto graphs = testing::connected_sample(15, 4, 5, 109);
  for (const auto* name : {"fig3", "twisted_c4", "fig8_path"}) graphs.push_back(corpus(name));
  for (const Graph& g : graphs) {
    EdgeOrdering sigma = EdgeOrdering::lexicographic(g);
    BondPoset bl = bond_lattice(g);
    auto lambda = minimum_labeling(bl, sigma);
    for (int x = 0; x < bl.poset.size(); ++x) {
      auto dc = decreasing_chains(bl.poset, lambda, x);
      auto spanning = nbc_spanning_sets(g, sigma, bl.bonds[static_cast<std::size_t>(x)]);
      CHECK(chain_edge_sets(dc) == as_edge_sets(spanning));
    }
  }
}

TEST_SUITE_END();
