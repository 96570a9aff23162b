#ifndef NCBOND_LABELINGS_HPP
#define NCBOND_LABELINGS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ncbond/graph.hpp"
#include "ncbond/poset.hpp"

namespace ncbond {

// A label on a Hasse edge: either an edge of the host graph (minimum
// labeling, compared through the edge ordering's rank) or an integer
// (max-min labeling, compared numerically).
struct CoverLabel {
  bool is_edge = false;
  Edge edge{};
  std::int64_t value = 0;
  int key = 0;  // comparison rank within the labeling

  std::string to_string() const;
};

class HasseLabeling {
 public:
  void set(int lo, int hi, CoverLabel label) { labels_[{lo, hi}] = label; }
  const CoverLabel& at(int lo, int hi) const;
  bool covers_all(const FinitePoset& p) const;
  std::map<std::pair<int, int>, std::string> dot_labels() const;

 private:
  std::map<std::pair<int, int>, CoverLabel> labels_;
};

// label every cover by the sigma-minimum new edge
HasseLabeling minimum_labeling(const BondPoset& bp, const EdgeOrdering& sigma);

// label every cover by max(min B, min B') - 1 over the two merged blocks;
// requires a graded poset in which each cover merges exactly two blocks
HasseLabeling maxmin_labeling(const BondPoset& bp);

struct ElVerification {
  bool ok = false;
  std::optional<std::pair<int, int>> failing_interval;  // first in index order
};

// Every interval must have a unique increasing maximal chain that strictly
// lexicographically precedes every other maximal chain of the interval.
// Chain enumeration aborts loudly past `max_chains` per interval.
ElVerification is_el_labeling(const FinitePoset& p, const HasseLabeling& lambda,
                              std::int64_t max_chains = 1000000);

// EL-labeling whose maximal bottom-to-top chains are labeled by integer
// permutations of [rank].
bool is_sn_el_labeling(const FinitePoset& p, const HasseLabeling& lambda);

struct DecreasingChains {
  std::int64_t count = 0;
  std::vector<std::vector<CoverLabel>> chains;  // labels along each chain
};

// Saturated chains from the bottom to x with strictly decreasing labels
// (`strict = false` allows weak descents, for experimentation).
DecreasingChains decreasing_chains(const FinitePoset& p, const HasseLabeling& lambda, int x,
                                   bool strict = true);

// The spec'd operation: verifies lambda is an EL-labeling first.
DecreasingChains decreasing_chain_count(const FinitePoset& p, const HasseLabeling& lambda, int x,
                                        bool strict = true);

struct HypothesisCheck {
  bool ok = false;
  // (index of H, index of H', minimum new edge) in the NC poset when violated
  std::optional<std::tuple<int, int, Edge>> counterexample;
};

// For every H < H' in NC_G, the bond induced on E(H) + the sigma-minimum new
// edge must be noncrossing.  Requires NC_G to have a maximum element.
HypothesisCheck min_label_nc_hypothesis(const Graph& g, const EdgeOrdering& sigma);
HypothesisCheck min_label_nc_hypothesis(const Graph& g, const EdgeOrdering& sigma, const BondPoset& bp);

}  // namespace ncbond

#endif
