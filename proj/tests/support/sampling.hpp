#ifndef NCBOND_TESTS_SAMPLING_HPP
#define NCBOND_TESTS_SAMPLING_HPP

#include <random>
#include <set>
#include <vector>

#include "ncbond/graph.hpp"

namespace ncbond::testing {

// Deterministic sample of connected graphs on nmin..nmax vertices.  The same
// seed always yields the same sequence; duplicates are allowed so callers get
// exactly `count` graphs.
inline std::vector<Graph> connected_sample(int count, int nmin, int nmax, unsigned seed = 0) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  std::uniform_int_distribution<int> n_dist(nmin, nmax);
  while (static_cast<int>(out.size()) < count) {
    int n = n_dist(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

// graphs (possibly disconnected) for product-style tests
inline std::vector<Graph> any_sample(int count, int nmin, int nmax, unsigned seed = 0) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  std::uniform_int_distribution<int> n_dist(nmin, nmax);
  while (static_cast<int>(out.size()) < count) {
    int n = n_dist(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

// a deterministic random permutation of E(G)
inline EdgeOrdering random_ordering(const Graph& g, unsigned seed) {
  std::vector<Edge> order = g.edges();
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return EdgeOrdering(g, std::move(order));
}

}  // namespace ncbond::testing

#endif
