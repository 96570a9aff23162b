#ifndef NCBOND_NBC_HPP
#define NCBOND_NBC_HPP

#include <cstdint>
#include <vector>

#include "ncbond/bonds.hpp"
#include "ncbond/graph.hpp"
#include "ncbond/polynomial.hpp"
#include "ncbond/poset.hpp"

namespace ncbond {

// All broken circuits: every cycle of G minus its smallest edge under sigma.
// Cycle enumeration is exponential, so this is bounded to n <= 12; NBC
// membership elsewhere never enumerates cycles (see is_nbc_set).
std::vector<std::vector<Edge>> broken_circuits(const Graph& g, const EdgeOrdering& sigma);

// S contains no broken circuit.  Tested without cycle enumeration: S must be
// a forest, and no absent edge may close a cycle in S in which it would be
// the unique smallest edge.
bool is_nbc_set(const Graph& g, const EdgeOrdering& sigma, const std::vector<Edge>& s);

// counts by size, k = 0 .. largest nonempty
std::vector<std::int64_t> nbc_counts(const Graph& g, const EdgeOrdering& sigma);
std::vector<std::vector<Edge>> nbc_sets(const Graph& g, const EdgeOrdering& sigma, int k);

// NBC sets whose edges are pairwise noncrossing
std::vector<std::int64_t> ncnbc_counts(const Graph& g, const EdgeOrdering& sigma);
std::vector<std::vector<Edge>> ncnbc_sets(const Graph& g, const EdgeOrdering& sigma, int k);

// Spanning sets of a bond H: NBC/NCNBC sets inside E(H) whose induced bond
// is H itself (equivalently of size n - cc(H)).
std::vector<std::vector<Edge>> nbc_spanning_sets(const Graph& g, const EdgeOrdering& sigma, const Bond& h);
std::vector<std::vector<Edge>> ncnbc_spanning_sets(const Graph& g, const EdgeOrdering& sigma, const Bond& h);

// Non-bounded-below sets of atoms, per element: for every x all atom subsets
// S with join S = x containing no bounded-below subset.  `atoms_in_order`
// lists the atom element indices in the chosen atom order.  Joins that do
// not exist are refused.
std::vector<std::vector<std::vector<int>>> nbb_sets(const FinitePoset& p,
                                                    const std::vector<int>& atoms_in_order);

struct IsfCounts {
  std::vector<std::int64_t> by_size;
  std::vector<std::int64_t> noncrossing_by_size;
};

// Forests whose components are increasing trees (root-to-vertex paths
// increase); the noncrossing variant additionally forbids crossing edges.
IsfCounts increasing_spanning_forests(const Graph& g);
std::vector<std::vector<Edge>> ncisf_sets(const Graph& g, int k);
std::vector<std::vector<Edge>> ncisf_spanning_sets(const Graph& g, const Bond& h);

// Exact chromatic polynomial by deletion-contraction, pivoting on the
// highest-indexed edge, memoized on the compacted labeled form.
Polynomial chromatic_polynomial(const Graph& g);

}  // namespace ncbond

#endif
