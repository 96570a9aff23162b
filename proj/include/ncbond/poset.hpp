#ifndef NCBOND_POSET_HPP
#define NCBOND_POSET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncbond/bonds.hpp"
#include "ncbond/graph.hpp"
#include "ncbond/polynomial.hpp"

namespace ncbond {

// Finite poset given by its Hasse diagram.  The cover set is validated to be
// acyclic and transitively reduced.  The full order relation is materialized
// as bit matrices, which bounds the practical size; poset construction from
// bonds enforces an element-count guard for that reason.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int i, int j) const { return bit(below_[static_cast<std::size_t>(j)], i); }
  bool leq(int i, int j) const { return i == j || less(i, j); }

  std::optional<int> bottom() const;
  std::optional<int> top() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::vector<int> upper_covers(int i) const;
  std::vector<int> lower_covers(int i) const;
  // elements covering the bottom; throws InputError when there is no bottom
  std::vector<int> atoms() const;

  std::vector<int> strictly_below(int i) const;
  std::vector<int> strictly_above(int i) const;

  std::optional<int> join_of(int i, int j) const;  // unique minimal upper bound
  std::optional<int> meet_of(int i, int j) const;  // unique maximal lower bound

  int count_below(int i) const;

 private:
  static bool bit(const std::vector<std::uint64_t>& row, int i) {
    return (row[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;            // cover adjacency
  std::vector<std::vector<std::uint64_t>> above_, below_;  // strict order, bit rows
};

// A noncrossing bond poset or bond lattice: the bonds in canonical order
// together with the generic poset over them.
struct BondPoset {
  std::vector<Bond> bonds;
  FinitePoset poset;

  int index_of(const Bond& b) const;  // -1 when absent
};

inline constexpr std::size_t kDefaultMaxPosetElements = 20000;

BondPoset nc_poset(const Graph& g, std::size_t max_elements = kDefaultMaxPosetElements);
BondPoset bond_lattice(const Graph& g, std::size_t max_elements = kDefaultMaxPosetElements);

// Exact Mobius values, bottom-up accumulation over the order relation.
// Requires a bottom element.
std::vector<std::int64_t> mobius(const FinitePoset& p);

struct GradingResult {
  bool graded = false;
  std::vector<int> ranks;  // per element, when graded
  // witness when not graded: two maximal chains of the same interval
  // (bottom to chain_top) with different lengths, as element index sequences
  std::vector<int> chain_a, chain_b;

  int poset_rank() const;  // max rank
};

// Rank function if all maximal chains of every interval [bottom, x] have
// equal length; otherwise two witness chains.  Requires a bottom element.
GradingResult grading(const FinitePoset& p);

struct LatticeReport {
  bool is_lattice = false;
  bool has_top = false;
  std::optional<std::pair<int, int>> first_meetless_pair;
  std::optional<std::pair<int, int>> first_joinless_pair;
};

LatticeReport lattice_report(const FinitePoset& p);

// Both refuse non-lattices (NotLatticeError); the paper defines these
// notions for lattices only.
bool is_atomic(const FinitePoset& p);
bool is_semimodular(const FinitePoset& p);  // x^y <. x,y implies x,y <. xvy

// sum mu(x) t^(rank(P) - rank(x)); NotGradedError when grading fails
Polynomial characteristic_polynomial(const FinitePoset& p);

// w_i = sum of mu over rank-i elements; NotGradedError when grading fails
std::vector<std::int64_t> whitney_numbers(const FinitePoset& p);

bool has_internal_zero(const Polynomial& p);

// componentwise order on pairs; labels are "(a,b)"
FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q);

// exact backtracking with degree/level pruning; refuses |P| > 200
bool are_isomorphic(const FinitePoset& p, const FinitePoset& q);

// Deterministic DOT export: one node per element labeled by the element
// label, one directed edge per cover (lower -> upper), optional cover labels.
std::string to_dot(const FinitePoset& p,
                   const std::map<std::pair<int, int>, std::string>* cover_labels = nullptr);

}  // namespace ncbond

#endif
