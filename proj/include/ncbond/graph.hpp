#ifndef NCBOND_GRAPH_HPP
#define NCBOND_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncbond {

// Vertices are 1..n and are drawn on a circle with vertex 1 at the top and
// the rest clockwise; two edges cross exactly when their chords intersect,
// which depends only on the labels.  No coordinates are ever stored.

struct Edge {
  int u = 0;  // u < v always
  int v = 0;

  Edge() = default;
  Edge(int a, int b);  // normalizes orientation, rejects loops

  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator!=(const Edge& o) const { return !(*this == o); }
  // lexicographic: the default order everywhere an edge set is canonicalized
  bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }

  bool incident(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }

  std::string to_string() const;
};

// ac and bd cross iff a < b < c < d or b < a < d < c (chord interleaving).
bool edges_cross(const Edge& e, const Edge& f);

// A set partition of [n] in canonical form: blocks sorted by their minimum,
// elements ascending within each block.  Equality is structural.
class SetPartition {
 public:
  SetPartition() = default;
  // from explicit blocks (canonicalized and validated to cover [n] exactly)
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  // from a block-id per vertex (ids arbitrary, 0-indexed array of size n)
  static SetPartition from_assignment(int n, const std::vector<int>& block_of);
  static SetPartition singletons(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_index_of(int vertex) const { return block_of_[static_cast<std::size_t>(vertex - 1)]; }
  std::uint32_t block_mask(int block_index) const;

  // false iff some a < b < c < d has a,c in one block and b,d in another
  bool is_noncrossing() const;

  // true iff every block of *this is contained in a block of coarser
  bool refines(const SetPartition& coarser) const;

  // restricted-growth string: block ids in order of first appearance
  std::vector<int> rgs() const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  // canonical partition order: lexicographic on the restricted-growth string
  bool operator<(const SetPartition& o) const;

  // "12345/6" for n <= 9, comma-separated elements within blocks otherwise
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // vertex-1 -> index into blocks_
};

bool is_noncrossing_partition(const SetPartition& pi);

class Graph;

// A total order on E(G), stored as the edge sequence (position = rank).
class EdgeOrdering {
 public:
  EdgeOrdering() = default;
  // validates that `order` is a permutation of G's edge set
  EdgeOrdering(const Graph& g, std::vector<Edge> order);

  static EdgeOrdering lexicographic(const Graph& g);
  // ab before a'b' iff b < b', ties by a < a'
  static EdgeOrdering colexicographic(const Graph& g);

  const std::vector<Edge>& edges() const { return order_; }
  int rank(const Edge& e) const;
  bool before(const Edge& e, const Edge& f) const { return rank(e) < rank(f); }
  std::size_t size() const { return order_.size(); }

 private:
  std::vector<Edge> order_;
};

struct ApspResult {
  static constexpr int kInfinity = -1;
  // dist[u-1][v-1]; -1 when unreachable
  std::vector<std::vector<int>> dist;
  // parent[s-1][v-1]: predecessor of v on the canonical shortest s-v path
  // (ties resolved toward the lowest-numbered predecessor), 0 if none
  std::vector<std::vector<int>> parent;

  bool reachable(int u, int v) const { return dist[u - 1][v - 1] >= 0; }
  int distance(int u, int v) const { return dist[u - 1][v - 1]; }
  // vertex sequence from u to v inclusive; empty when unreachable
  std::vector<int> path(int u, int v) const;
};

// Immutable simple graph on vertex set {1,...,n}.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);  // validates, sorts, rejects duplicates

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  int edge_index(const Edge& e) const;  // -1 if absent
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  std::uint32_t neighbor_mask(int v) const { return adj_mask_[static_cast<std::size_t>(v - 1)]; }

  // vertex sets of connected components, as a canonical partition
  SetPartition components() const;
  int component_count() const { return components().block_count(); }
  bool is_connected() const;
  // components of the subgraph induced by `vertex_mask` (bit i = vertex i+1)
  std::vector<std::uint32_t> induced_components(std::uint32_t vertex_mask) const;

  // all crossing pairs (e, f) with e < f lexicographically
  std::vector<std::pair<Edge, Edge>> crossing_pairs() const;
  bool edge_crosses_something(const Edge& e) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // sorted lexicographically
  std::vector<std::vector<int>> adj_;       // ascending neighbor lists
  std::vector<std::uint32_t> adj_mask_;
};

SetPartition connected_components(const Graph& g);

// True iff the endpoints of e and the endpoints of f lie in different
// components of G - v.  Rejects v incident to e or f.
bool separates(const Graph& g, int v, const Edge& e, const Edge& f);

// BFS from every source; among equally short paths the reconstruction walks
// through the lowest-numbered predecessor at every step, so P(e,f) in the
// crossing-closed algorithm is reproducible across runs.
ApspResult all_pairs_shortest_paths(const Graph& g);

// Whenever ik and jk are edges with i < j < k, ij must be an edge.
bool is_perfectly_labeled(const Graph& g);

// Every cycle of length >= 4 has a chord.  Maximum-cardinality search plus
// verification of the elimination order.
bool is_chordal(const Graph& g);

// Relabels vertices by maximum-cardinality-search visit position; for a
// chordal graph the result is perfectly labeled.
Graph mcs_relabeled(const Graph& g);

// ---- fixture corpus ------------------------------------------------------

// Named graphs used throughout the test suite; `complete` and `k_even_odd`
// require the size parameter.  Throws InputError for unknown names.
Graph corpus(const std::string& name, std::optional<int> param = std::nullopt);
std::vector<std::string> corpus_names();

// complete bipartite graph on [n] whose parts are the evens and the odds
Graph k_even_odd(int n);
Graph complete_graph(int n);

// ---- edge-list text format -----------------------------------------------

// First line "n", then one "i j" pair per line (1-based; orientation is
// normalized on load).  '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ncbond

#endif
