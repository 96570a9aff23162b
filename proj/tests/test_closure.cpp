#include <algorithm>

#include "doctest.h"
#include "ncbond/closure.hpp"
#include "ncbond/errors.hpp"
#include "ncbond/oracles.hpp"
#include "ncbond/poset.hpp"
#include "support/sampling.hpp"

using namespace ncbond;

TEST_SUITE_BEGIN("closure");

TEST_CASE("compute_J") {
  SUBCASE("noncrossing pair") {
    Graph g = corpus("twisted_c4");
    CHECK(compute_J(g, Edge(1, 2), Edge(3, 4)).kind == JResult::Kind::NonCrossingPair);
  }

  SUBCASE("complete graphs give the induced K4") {
    for (int n = 4; n <= 7; ++n) {
      Graph g = complete_graph(n);
      JResult j = compute_J(g, Edge(1, 3), Edge(2, 4));
      REQUIRE(j.kind == JResult::Kind::K4Form);
      CHECK(j.vertices == std::vector<int>{1, 2, 3, 4});
      CHECK(j.edges.size() == 6);
    }
  }

  SUBCASE("trees give the unique path as a dumbbell") {
    // path 2-4-6-1-3-5: edges 24, 46, 16, 13, 35; the end edges 24 and 35 cross
    Graph tree(6, {Edge(2, 4), Edge(4, 6), Edge(1, 6), Edge(1, 3), Edge(3, 5)});
    REQUIRE(edges_cross(Edge(2, 4), Edge(3, 5)));
    JResult j = compute_J(tree, Edge(2, 4), Edge(3, 5));
    REQUIRE(j.kind == JResult::Kind::Dumbbell);
    CHECK(j.vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(j.cut_vertices == std::vector<int>{6, 1});
    CHECK(j.edges.size() == 5);
  }

  SUBCASE("fig1_g's crossing pair is not closed, two minimal witnesses") {
    Graph g = corpus("fig1_g");
    JResult j = compute_J(g, Edge(1, 4), Edge(3, 5));
    REQUIRE(j.kind == JResult::Kind::NotClosed);
    REQUIRE(j.witnesses.size() == 2);
    CHECK(j.witnesses[0] == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(j.witnesses[1] == std::vector<int>{1, 3, 4, 5, 6});
  }

  SUBCASE("the perfectly-labeled-but-open graph has the two known witnesses") {
    Graph g = corpus("fig12");
    JResult j = compute_J(g, Edge(1, 6), Edge(5, 7));
    REQUIRE(j.kind == JResult::Kind::NotClosed);
    REQUIRE(j.witnesses.size() == 2);
    CHECK(j.witnesses[0] == std::vector<int>{1, 3, 5, 6, 7});
    CHECK(j.witnesses[1] == std::vector<int>{1, 2, 4, 5, 6, 7});
  }

  SUBCASE("agreement with the oracle on corpus and samples") {
    auto graphs = testing::connected_sample(60, 4, 6, 21);
    for (const auto& name : {"fig1_g", "fig3", "fig4_path", "twisted_c4", "star5", "fig8_path",
                             "fig9_g", "fig9_h", "fig12", "twisted_c6"})
      graphs.push_back(corpus(name));
    for (const Graph& g : graphs) {
      for (const auto& [e, f] : g.crossing_pairs()) {
        JResult j = compute_J(g, e, f);
        auto witnesses = oracle_J(g, e, f);
        if (j.kind == JResult::Kind::NotClosed) {
          CHECK(witnesses.size() != 1);
          CHECK(j.witnesses == witnesses);
        } else {
          REQUIRE(witnesses.size() == 1);
          CHECK(j.vertices == witnesses.front());
        }
      }
    }
  }
}

TEST_CASE("crossing closed decision") {
  for (int n = 3; n <= 8; ++n) CHECK(is_crossing_closed(complete_graph(n)).closed);

  auto fig1 = is_crossing_closed(corpus("fig1_g"));
  REQUIRE_FALSE(fig1.closed);
  CHECK(fig1.failing_pair == std::make_pair(Edge(1, 4), Edge(3, 5)));

  CHECK_FALSE(is_crossing_closed(corpus("twisted_c6")).closed);
  CHECK(is_crossing_closed(corpus("twisted_c4")).closed);
  CHECK(is_crossing_closed(corpus("star5")).closed);
  CHECK_FALSE(is_crossing_closed(corpus("fig12")).closed);

  SUBCASE("equivalent to the NC poset being a lattice") {
    auto graphs = testing::connected_sample(500, 4, 6, 13);
    for (const auto& name : {"fig1_g", "fig3", "fig4_path", "twisted_c4", "star5", "fig6_h",
                             "fig8_path", "fig9_g", "fig9_h", "fig12", "twisted_c6"})
      graphs.push_back(corpus(name));
    for (const Graph& g : graphs)
      CHECK(is_crossing_closed(g).closed == oracle_lattice(nc_poset(g).poset));
  }
}

TEST_CASE("upper crossing closed algorithm") {
  SUBCASE("twisted 4-cycle transcript") {
    auto r = upper_crossing_closed(corpus("twisted_c4"));
    REQUIRE(std::holds_alternative<UccOrdering>(r));
    const auto& ord = std::get<UccOrdering>(r);
    REQUIRE(ord.rounds.size() == 2);
    CHECK(ord.rounds[0] == std::vector<Edge>{Edge(1, 2), Edge(3, 4)});
    CHECK(ord.rounds[1] == std::vector<Edge>{Edge(1, 3), Edge(2, 4)});
    CHECK(ord.sigma.edges() == std::vector<Edge>{Edge(1, 2), Edge(3, 4), Edge(1, 3), Edge(2, 4)});
  }

  SUBCASE("the 5-pointed star is its own obstruction") {
    auto r = upper_crossing_closed(corpus("star5"));
    REQUIRE(std::holds_alternative<UccObstruction>(r));
    CHECK(std::get<UccObstruction>(r).obstruction == corpus("star5").edges());
  }

  SUBCASE("crossing-free graphs are ordered in one round") {
    Graph path(3, {Edge(1, 2), Edge(2, 3)});
    auto r = upper_crossing_closed(path);
    REQUIRE(std::holds_alternative<UccOrdering>(r));
    CHECK(std::get<UccOrdering>(r).rounds.size() == 1);
  }

  SUBCASE("the subdivided path opens with its two uncrossed edges") {
    Graph g = corpus("fig6_h");
    auto r = upper_crossing_closed(g);
    REQUIRE(std::holds_alternative<UccOrdering>(r));
    const auto& ord = std::get<UccOrdering>(r);
    REQUIRE(ord.rounds.size() >= 2);
    CHECK(ord.rounds[0] == std::vector<Edge>{Edge(1, 8), Edge(2, 3)});
  }

  SUBCASE("non-crossing-closed graphs are rejected at the gate") {
    auto r = upper_crossing_closed(corpus("fig1_g"));
    REQUIRE(std::holds_alternative<UccNotCrossingClosed>(r));
    CHECK(std::get<UccNotCrossingClosed>(r).witness == std::make_pair(Edge(1, 4), Edge(3, 5)));
    CHECK(std::get<UccNotCrossingClosed>(r).j.kind == JResult::Kind::NotClosed);
  }

  SUBCASE("produced orderings verify; obstructions verify") {
    auto graphs = testing::connected_sample(60, 4, 6, 17);
    graphs.push_back(corpus("twisted_c4"));
    graphs.push_back(corpus("star5"));
    graphs.push_back(corpus("fig6_h"));
    for (const Graph& g : graphs) {
      auto r = upper_crossing_closed(g);
      if (const auto* ord = std::get_if<UccOrdering>(&r)) {
        CHECK(verify_ucc_ordering(g, ord->sigma).ok);
      } else if (const auto* obs = std::get_if<UccObstruction>(&r)) {
        CHECK(is_obstruction(g, obs->obstruction));
      }
    }
  }
}

TEST_CASE("is_obstruction") {
  CHECK(is_obstruction(corpus("star5"), corpus("star5").edges()));
  CHECK_FALSE(is_obstruction(corpus("twisted_c4"), corpus("twisted_c4").edges()));
  // the fig4_path graph: every edge is crossed, so it is its own obstruction
  Graph g = corpus("fig4_path");
  CHECK(is_obstruction(g, g.edges()));
  CHECK_FALSE(is_obstruction(g, {}));
  CHECK_THROWS_AS(is_obstruction(corpus("fig1_g"), corpus("fig1_g").edges()), InputError);

  SUBCASE("forbidden-subgraph characterization on small graphs") {
    // Ordering exists iff no nonempty edge subset is an obstruction
    auto graphs = testing::connected_sample(25, 4, 5, 19);
    graphs.push_back(corpus("twisted_c4"));
    graphs.push_back(corpus("star5"));
    for (const Graph& g2 : graphs) {
      if (!is_crossing_closed(g2).closed) continue;
      auto r = upper_crossing_closed(g2);
      bool has_obstruction = false;
      int m = g2.edge_count();
      for (unsigned mask = 1; mask < (1u << m) && !has_obstruction; ++mask) {
        std::vector<Edge> subset;
        for (int i = 0; i < m; ++i)
          if ((mask >> i) & 1u) subset.push_back(g2.edges()[static_cast<std::size_t>(i)]);
        if (is_obstruction(g2, subset)) has_obstruction = true;
      }
      CHECK(std::holds_alternative<UccOrdering>(r) == !has_obstruction);
    }
  }
}

TEST_CASE("verify_ucc_ordering") {
  Graph tc4 = corpus("twisted_c4");
  CHECK(verify_ucc_ordering(tc4, EdgeOrdering::lexicographic(tc4)).ok);

  EdgeOrdering bad(tc4, {Edge(1, 3), Edge(2, 4), Edge(1, 2), Edge(3, 4)});
  auto r = verify_ucc_ordering(tc4, bad);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failing_pair == std::make_pair(Edge(1, 3), Edge(2, 4)));

  Graph path(3, {Edge(1, 2), Edge(2, 3)});
  CHECK(verify_ucc_ordering(path, EdgeOrdering::lexicographic(path)).ok);

  CHECK_THROWS_AS(verify_ucc_ordering(corpus("fig1_g"), EdgeOrdering::lexicographic(corpus("fig1_g"))),
                  InputError);
}

TEST_CASE("perfectly labeled and crossing closed is UCC under lex and colex") {
  auto graphs = testing::connected_sample(60, 4, 6, 113);
  graphs.push_back(corpus("fig9_g"));
  graphs.push_back(complete_graph(5));
  int checked = 0;
  for (const Graph& g : graphs) {
    if (!is_perfectly_labeled(g) || !is_crossing_closed(g).closed) continue;
    ++checked;
    CHECK(verify_ucc_ordering(g, EdgeOrdering::lexicographic(g)).ok);
    CHECK(verify_ucc_ordering(g, EdgeOrdering::colexicographic(g)).ok);
  }
  CHECK(checked >= 10);
}

TEST_CASE("NotClosed above the oracle limit reports the failing test only") {
  // fig1_g padded with isolated vertices to push n past 10
  std::vector<Edge> edges = corpus("fig1_g").edges();
  Graph big(11, std::move(edges));
  JResult j = compute_J(big, Edge(1, 4), Edge(3, 5));
  REQUIRE(j.kind == JResult::Kind::NotClosed);
  CHECK(j.witnesses.empty());
  REQUIRE(j.failing_vertex.has_value());
  CHECK_FALSE(separates(big, *j.failing_vertex, Edge(1, 4), Edge(3, 5)));
}

TEST_CASE("tightly closed") {
  for (int n = 4; n <= 8; ++n) CHECK(is_tightly_closed(k_even_odd(n)));
  CHECK(is_tightly_closed(corpus("star5")));
  CHECK_FALSE(is_tightly_closed(corpus("fig1_g")));

  SUBCASE("2-connected and crossing closed implies tightly closed") {
    for (const Graph& g : testing::connected_sample(80, 4, 6, 23)) {
      if (!is_crossing_closed(g).closed) continue;
      // 2-connected: no cut vertex
      bool two_connected = g.n() >= 3;
      for (int v = 1; v <= g.n() && two_connected; ++v) {
        std::uint32_t rest = ((g.n() == 32 ? ~0u : (1u << g.n()) - 1)) & ~(1u << (v - 1));
        if (g.induced_components(rest).size() > 1) two_connected = false;
      }
      if (two_connected) CHECK(is_tightly_closed(g));
    }
  }
}

TEST_CASE("strongly upper crossed") {
  Graph g = corpus("fig1_g");
  // crossing edges 14 and 35 last
  EdgeOrdering last(g, {Edge(1, 2), Edge(1, 6), Edge(2, 3), Edge(5, 6), Edge(1, 4), Edge(3, 5)});
  CHECK(is_strongly_upper_crossed(g, last));
  // lexicographic order puts 14 early: fails
  CHECK_FALSE(is_strongly_upper_crossed(g, EdgeOrdering::lexicographic(g)));

  Graph path(3, {Edge(1, 2), Edge(2, 3)});
  CHECK(is_strongly_upper_crossed(path, EdgeOrdering::lexicographic(path)));

  CHECK_THROWS_AS(is_strongly_upper_crossed(complete_graph(11), EdgeOrdering::lexicographic(complete_graph(11))),
                  SizeLimitError);
}

TEST_CASE("has_one_hat") {
  CHECK(has_one_hat(corpus("fig1_g")));
  CHECK_FALSE(has_one_hat(corpus("fig3")));
  CHECK(has_one_hat(Graph(4, {})));

  SUBCASE("equals G being a noncrossing bond of itself") {
    for (const Graph& g : testing::any_sample(80, 4, 7, 29)) {
      Bond self = bond_closure(g, g.edges());
      CHECK(has_one_hat(g) == self.is_noncrossing());
    }
  }
}

TEST_CASE("distance ordering") {
  Graph k4 = k_even_odd(4);
  auto d4 = distance_ordering(k4);
  // all distances are zero, so lexicographic tie-break decides everything
  CHECK(d4.edges() == std::vector<Edge>{Edge(1, 2), Edge(1, 4), Edge(2, 3), Edge(3, 4)});

  Graph k5 = k_even_odd(5);
  auto d5 = distance_ordering(k5);
  CHECK(circular_distance(5, Edge(1, 2)) == 0);
  CHECK(circular_distance(5, Edge(1, 4)) == 1);
  CHECK(d5.rank(Edge(1, 2)) < d5.rank(Edge(1, 4)));

  CHECK_THROWS_AS(distance_ordering(corpus("twisted_c4")), InputError);

  SUBCASE("always an upper crossing closed ordering") {
    for (int n = 4; n <= 8; ++n) {
      Graph g = k_even_odd(n);
      CHECK(verify_ucc_ordering(g, distance_ordering(g)).ok);
    }
  }
}

TEST_CASE("join of crossing atoms is the bond on J") {
  // the join of two crossing single-edge bonds in NC_G is the bond with edge
  // set E(J(e,f)) whenever G is crossing closed
  auto graphs = testing::connected_sample(40, 4, 6, 31);
  graphs.push_back(corpus("twisted_c4"));
  graphs.push_back(corpus("star5"));
  for (const Graph& g : graphs) {
    if (!is_crossing_closed(g).closed) continue;
    BondPoset bp = nc_poset(g);
    for (const auto& [e, f] : g.crossing_pairs()) {
      JResult j = compute_J(g, e, f);
      int ei = bp.index_of(bond_closure(g, {e}));
      int fi = bp.index_of(bond_closure(g, {f}));
      REQUIRE(ei >= 0);
      REQUIRE(fi >= 0);
      auto join = bp.poset.join_of(ei, fi);
      REQUIRE(join.has_value());
      CHECK(bp.bonds[static_cast<std::size_t>(*join)] == bond_closure(g, j.edges));
    }
  }
}

TEST_SUITE_END();
