#ifndef NCBOND_CLOSURE_HPP
#define NCBOND_CLOSURE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "ncbond/graph.hpp"

namespace ncbond {

// Outcome of the J(e,f) computation for a pair of edges.
//
// For a crossing pair that is crossing closed, J(e,f) is either the induced
// subgraph on the four endpoints (a subgraph of K_4) or a "dumbbell": e and f
// joined by a path whose interior vertices are all cut vertices separating
// e from f.  When the pair is not crossing closed, the result carries the
// containment-minimal witnesses found by the brute-force oracle (only for
// n <= 10; witnesses are diagnostics, not certificates) together with the
// interior vertex at which the separation test failed, if any.
struct JResult {
  enum class Kind { NonCrossingPair, K4Form, Dumbbell, NotClosed };
  Kind kind = Kind::NonCrossingPair;

  std::vector<int> vertices;       // V(J), sorted (K4Form / Dumbbell)
  std::vector<Edge> edges;         // E(J), sorted (K4Form / Dumbbell)
  std::vector<int> cut_vertices;   // Dumbbell: interior path vertices in path order
  std::vector<std::vector<int>> witnesses;  // NotClosed: minimal vertex sets (0 or >= 2)
  std::optional<int> failing_vertex;        // NotClosed: interior vertex not separating e,f
};

JResult compute_J(const Graph& g, const Edge& e, const Edge& f);

// The crossing-closed decision procedure: for every crossing pair, find the
// shortest path starting with e and ending with f and check that all interior
// vertices separate the two edges.  Equivalent to NC_G being a lattice.
struct CrossingClosedResult {
  bool closed = false;
  std::optional<std::pair<Edge, Edge>> failing_pair;
};

CrossingClosedResult is_crossing_closed(const Graph& g);

// Transcript of the upper-crossing-closed procedure.
struct UccNotCrossingClosed {
  std::pair<Edge, Edge> witness;
  JResult j;
};

struct UccOrdering {
  EdgeOrdering sigma;
  std::vector<std::vector<Edge>> rounds;  // the L' of each iteration, lex within
};

struct UccObstruction {
  std::vector<Edge> obstruction;  // E(G) minus the accreted set L
};

using UccResult = std::variant<UccNotCrossingClosed, UccOrdering, UccObstruction>;

UccResult upper_crossing_closed(const Graph& g);

// Every edge of H crosses another edge of H whose J lies inside H.
// Rejects hosts that are not crossing closed.  H must be nonempty.
bool is_obstruction(const Graph& g, const std::vector<Edge>& h);

struct UccVerification {
  bool ok = false;
  std::optional<std::pair<Edge, Edge>> failing_pair;
};

// Every crossing pair's J(e,f) contains an edge strictly before both e and f.
UccVerification verify_ucc_ordering(const Graph& g, const EdgeOrdering& sigma);

// Crossing closed with every J(e,f) inside a K_4.
bool is_tightly_closed(const Graph& g);

// Every crossing pair has at least one minimal induced connected subgraph
// containing it, and every edge of every such subgraph (other than the pair
// itself) strictly precedes both edges.  Uses the brute-force minimal-witness
// enumerator, so n <= 10.
bool is_strongly_upper_crossed(const Graph& g, const EdgeOrdering& sigma);

// All crossing pairs live inside one connected component of G; equivalently
// G is a noncrossing bond of itself and NC_G has a maximum.
bool has_one_hat(const Graph& g);

// Minimum number of vertices strictly between x and y on the circle.
int circular_distance(int n, const Edge& e);

// Edges of k_even_odd(n) sorted by circular distance, ties lexicographic.
// Rejects graphs that are not k_even_odd(n).
EdgeOrdering distance_ordering(const Graph& g);

}  // namespace ncbond

#endif
