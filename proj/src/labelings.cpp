#include "ncbond/labelings.hpp"

#include <algorithm>
#include <functional>

#include "ncbond/bonds.hpp"
#include "ncbond/closure.hpp"
#include "ncbond/errors.hpp"

namespace ncbond {

std::string CoverLabel::to_string() const {
  return is_edge ? edge.to_string() : std::to_string(value);
}

const CoverLabel& HasseLabeling::at(int lo, int hi) const {
  auto it = labels_.find({lo, hi});
  if (it == labels_.end())
    throw InputError("no label on cover " + std::to_string(lo) + "->" + std::to_string(hi));
  return it->second;
}

bool HasseLabeling::covers_all(const FinitePoset& p) const {
  for (auto [lo, hi] : p.covers())
    if (!labels_.count({lo, hi})) return false;
  return true;
}

std::map<std::pair<int, int>, std::string> HasseLabeling::dot_labels() const {
  std::map<std::pair<int, int>, std::string> out;
  for (const auto& [cover, label] : labels_) out[cover] = label.to_string();
  return out;
}

HasseLabeling minimum_labeling(const BondPoset& bp, const EdgeOrdering& sigma) {
  HasseLabeling lambda;
  for (auto [lo, hi] : bp.poset.covers()) {
    const Bond& h = bp.bonds[static_cast<std::size_t>(lo)];
    const Bond& hp = bp.bonds[static_cast<std::size_t>(hi)];
    std::optional<Edge> best;
    for (const Edge& e : hp.edges()) {
      if (h.has_edge(e)) continue;
      if (!best || sigma.rank(e) < sigma.rank(*best)) best = e;
    }
    if (!best) throw InternalError("cover without a new edge");
    lambda.set(lo, hi, CoverLabel{true, *best, 0, sigma.rank(*best)});
  }
  return lambda;
}

HasseLabeling maxmin_labeling(const BondPoset& bp) {
  auto g = grading(bp.poset);
  if (!g.graded) throw NotGradedError("max-min labeling is defined for graded posets");
  HasseLabeling lambda;
  for (auto [lo, hi] : bp.poset.covers()) {
    const SetPartition& pi = bp.bonds[static_cast<std::size_t>(lo)].partition();
    const SetPartition& rho = bp.bonds[static_cast<std::size_t>(hi)].partition();
    // the blocks of H whose union becomes a single block of H'
    std::vector<int> merged_mins;
    for (const auto& block : pi.blocks()) {
      int target = rho.block_index_of(block.front());
      if (rho.blocks()[static_cast<std::size_t>(target)].size() != block.size())
        merged_mins.push_back(block.front());
    }
    if (merged_mins.size() != 2)
      throw NotGradedError("cover merges " + std::to_string(merged_mins.size()) +
                           " blocks; max-min labeling needs exactly two");
    std::int64_t value = std::max(merged_mins[0], merged_mins[1]) - 1;
    lambda.set(lo, hi, CoverLabel{false, Edge{}, value, static_cast<int>(value)});
  }
  return lambda;
}

// ---- EL verification ---------------------------------------------------------

namespace {

struct IntervalScan {
  const FinitePoset& p;
  const HasseLabeling& lambda;
  int lo, hi;
  std::int64_t max_chains;

  std::int64_t total = 0;
  std::int64_t increasing = 0;
  std::vector<int> word{};
  std::vector<int> best_word{};
  std::int64_t best_multiplicity = 0;
  std::vector<int> increasing_word{};

  void run() { descend(lo); }

  void descend(int x) {
    if (x == hi) {
      ++total;
      if (total > max_chains)
        throw SizeLimitError("interval has more than " + std::to_string(max_chains) + " maximal chains");
      bool incr = true;
      for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] >= word[i]) {
          incr = false;
          break;
        }
      if (incr) {
        ++increasing;
        increasing_word = word;
      }
      if (best_word.empty() && best_multiplicity == 0) {
        best_word = word;
        best_multiplicity = 1;
      } else if (word == best_word) {
        ++best_multiplicity;
      } else if (std::lexicographical_compare(word.begin(), word.end(), best_word.begin(), best_word.end())) {
        best_word = word;
        best_multiplicity = 1;
      }
      return;
    }
    for (int up : p.upper_covers(x)) {
      if (!p.leq(up, hi)) continue;
      word.push_back(lambda.at(x, up).key);
      descend(up);
      word.pop_back();
    }
  }

  // exactly one increasing maximal chain, and it is the strict lex minimum
  bool el_ok() const { return increasing == 1 && increasing_word == best_word && best_multiplicity == 1; }
};

}  // namespace

ElVerification is_el_labeling(const FinitePoset& p, const HasseLabeling& lambda, std::int64_t max_chains) {
  if (!lambda.covers_all(p)) throw InputError("labeling is not total on the cover set");
  for (int lo = 0; lo < p.size(); ++lo) {
    for (int hi = 0; hi < p.size(); ++hi) {
      if (lo == hi || !p.less(lo, hi)) continue;
      IntervalScan scan{p, lambda, lo, hi, max_chains};
      scan.run();
      if (scan.increasing != 1 || !scan.el_ok()) return {false, std::make_pair(lo, hi)};
    }
  }
  return {true, std::nullopt};
}

bool is_sn_el_labeling(const FinitePoset& p, const HasseLabeling& lambda) {
  auto g = grading(p);
  if (!g.graded) return false;
  if (!is_el_labeling(p, lambda).ok) return false;
  int rank = g.poset_rank();
  auto bot = p.bottom();
  if (!bot) return false;
  // every maximal chain from the bottom must be labeled by a permutation of [rank]
  bool ok = true;
  std::vector<std::int64_t> word;
  std::function<void(int)> descend = [&](int x) {
    if (!ok) return;
    auto ups = p.upper_covers(x);
    if (ups.empty()) {
      std::vector<std::int64_t> sorted = word;
      std::sort(sorted.begin(), sorted.end());
      if (static_cast<int>(sorted.size()) != rank) {
        ok = false;
        return;
      }
      for (int i = 0; i < rank; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1) {
          ok = false;
          return;
        }
      return;
    }
    for (int up : ups) {
      const CoverLabel& label = lambda.at(x, up);
      if (label.is_edge) {
        ok = false;  // edge-valued labels are not integers in [rank]
        return;
      }
      word.push_back(label.value);
      descend(up);
      word.pop_back();
    }
  };
  descend(*bot);
  return ok;
}

DecreasingChains decreasing_chains(const FinitePoset& p, const HasseLabeling& lambda, int x, bool strict) {
  auto bot = p.bottom();
  if (!bot) throw InputError("decreasing chains need a bottom element");
  DecreasingChains out;
  std::vector<CoverLabel> labels;
  std::function<void(int)> ascend = [&](int cur) {
    if (cur == x) {
      ++out.count;
      out.chains.push_back(labels);
      return;
    }
    for (int up : p.upper_covers(cur)) {
      if (!p.leq(up, x)) continue;
      const CoverLabel& label = lambda.at(cur, up);
      if (!labels.empty()) {
        int prev = labels.back().key;
        if (strict ? label.key >= prev : label.key > prev) continue;
      }
      labels.push_back(label);
      ascend(up);
      labels.pop_back();
    }
  };
  ascend(*bot);
  return out;
}

DecreasingChains decreasing_chain_count(const FinitePoset& p, const HasseLabeling& lambda, int x,
                                        bool strict) {
  auto el = is_el_labeling(p, lambda);
  if (!el.ok) throw NotElLabelingError("decreasing_chain_count needs a verified EL-labeling");
  return decreasing_chains(p, lambda, x, strict);
}

// ---- the gradedness/EL hypothesis -----------------------------------------------

HypothesisCheck min_label_nc_hypothesis(const Graph& g, const EdgeOrdering& sigma, const BondPoset& bp) {
  if (!has_one_hat(g)) throw InputError("min_label_nc_hypothesis requires NC_G to have a maximum");
  for (int lo = 0; lo < bp.poset.size(); ++lo) {
    for (int hi = 0; hi < bp.poset.size(); ++hi) {
      if (!bp.poset.less(lo, hi)) continue;
      const Bond& h = bp.bonds[static_cast<std::size_t>(lo)];
      const Bond& hp = bp.bonds[static_cast<std::size_t>(hi)];
      std::optional<Edge> min_new;
      for (const Edge& e : hp.edges()) {
        if (h.has_edge(e)) continue;
        if (!min_new || sigma.rank(e) < sigma.rank(*min_new)) min_new = e;
      }
      if (!min_new) throw InternalError("strict containment without a new edge");
      std::vector<Edge> extended = h.edges();
      extended.push_back(*min_new);
      Bond induced = bond_closure(g, extended);
      if (!induced.partition().is_noncrossing())
        return {false, std::make_tuple(lo, hi, *min_new)};
    }
  }
  return {true, std::nullopt};
}

HypothesisCheck min_label_nc_hypothesis(const Graph& g, const EdgeOrdering& sigma) {
  BondPoset bp = nc_poset(g);
  return min_label_nc_hypothesis(g, sigma, bp);
}

}  // namespace ncbond
