#ifndef NCBOND_BONDS_HPP
#define NCBOND_BONDS_HPP

#include <variant>
#include <vector>

#include "ncbond/graph.hpp"

namespace ncbond {

class Bond;

struct DisconnectedBlock {
  std::vector<int> block;  // the first block that induces a disconnected subgraph
};

// A spanning subgraph of its host whose connected components are all induced.
// The edge set determines the partition and vice versa, so bonds are built
// from the canonical partition and carry both views.
class Bond {
 public:
  const SetPartition& partition() const { return partition_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int component_count() const { return partition_.block_count(); }
  bool has_edge(const Edge& e) const;
  bool contains(const Bond& other) const;  // edge-set containment

  // Both routes: the partition test and the inter-component crossing-edge
  // test of the structure section; they are asserted to agree.
  bool is_noncrossing() const;

  bool operator==(const Bond& o) const { return edges_ == o.edges_; }
  bool operator!=(const Bond& o) const { return !(*this == o); }
  // canonical bond order: component count descending, then partition order
  bool operator<(const Bond& o) const;

  std::string to_string() const { return partition_.to_string(); }

 private:
  friend Bond bond_closure(const Graph&, const std::vector<Edge>&);
  friend std::variant<Bond, DisconnectedBlock> bond_of_partition(const Graph&, const SetPartition&);
  friend class BondEnumerator;
  Bond(const Graph& host, SetPartition partition);

  SetPartition partition_;
  std::vector<Edge> edges_;
};

// The bond induced by an edge subset: take the components of (V(G), S) and
// fill in every host edge inside a component.
Bond bond_closure(const Graph& g, const std::vector<Edge>& subset);

Bond empty_bond(const Graph& g);
Bond full_bond(const Graph& g);  // spanning bond on all of E(G)

SetPartition partition_of_bond(const Bond& h);

// G[pi] when every block induces a connected subgraph, otherwise the witness.
std::variant<Bond, DisconnectedBlock> bond_of_partition(const Graph& g, const SetPartition& pi);

bool is_noncrossing_bond(const Bond& h);

// All bonds (or all noncrossing bonds) of G in the canonical deterministic
// order.  Enumeration is a depth-first expansion over restricted-growth
// strings with noncrossing and connectivity pruning, never a filter over all
// Bell(n) partitions.  n > 12 warns to stderr, n > 16 is refused.
std::vector<Bond> enumerate_bonds(const Graph& g);
std::vector<Bond> enumerate_noncrossing_bonds(const Graph& g);

}  // namespace ncbond

#endif
