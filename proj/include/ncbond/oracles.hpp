#ifndef NCBOND_ORACLES_HPP
#define NCBOND_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "ncbond/graph.hpp"
#include "ncbond/polynomial.hpp"
#include "ncbond/poset.hpp"

namespace ncbond {

// Deliberately slow reference implementations used as ground truth.  They
// share no code with the fast paths they certify and refuse inputs beyond
// their limits instead of degrading.

// All containment-minimal induced connected subgraphs containing e and f,
// as sorted vertex sets.  n <= 10.
std::vector<std::vector<int>> oracle_J(const Graph& g, const Edge& e, const Edge& f);

// Literal memoized recursion mu(0) = 1, mu(x) = -sum_{y<x} mu(y), with its
// own reachability computation over the cover relation.
std::vector<std::int64_t> oracle_mobius(const FinitePoset& p);

// Count proper colorings for t = 0..n by exhaustive assignment, then
// Lagrange-interpolate with exact rational arithmetic.  n <= 9.
Polynomial oracle_chromatic(const Graph& g);

// Every pair has a unique minimal upper bound and a unique maximal lower
// bound.  |P| <= 10^4.
bool oracle_lattice(const FinitePoset& p);

}  // namespace ncbond

#endif
