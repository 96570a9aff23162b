#include "ncbond/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncbond/errors.hpp"

namespace ncbond {

namespace {

std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& row, int i) {
  row[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

bool rows_intersect(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  int n = size();
  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  std::sort(covers_.begin(), covers_.end());
  for (auto [lo, hi] : covers_) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi) throw InputError("cover pair out of range");
    up_[static_cast<std::size_t>(lo)].push_back(hi);
    down_[static_cast<std::size_t>(hi)].push_back(lo);
  }

  // topological order (Kahn)
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [lo, hi] : covers_) ++indeg[static_cast<std::size_t>(hi)];
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) order.push_back(i);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int j : up_[static_cast<std::size_t>(order[head])])
      if (--indeg[static_cast<std::size_t>(j)] == 0) order.push_back(j);
  }
  if (static_cast<int>(order.size()) != n) throw InputError("cover relation has a cycle");

  below_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(word_count(n), 0));
  above_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(word_count(n), 0));
  for (int x : order) {
    auto& row = below_[static_cast<std::size_t>(x)];
    for (int d : down_[static_cast<std::size_t>(x)]) {
      set_bit(row, d);
      const auto& drow = below_[static_cast<std::size_t>(d)];
      for (std::size_t w = 0; w < row.size(); ++w) row[w] |= drow[w];
    }
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (bit(below_[static_cast<std::size_t>(j)], i)) set_bit(above_[static_cast<std::size_t>(i)], j);

  // transitive reduction: no cover may be implied by two shorter steps
  for (auto [lo, hi] : covers_)
    if (rows_intersect(above_[static_cast<std::size_t>(lo)], below_[static_cast<std::size_t>(hi)]))
      throw InputError("cover " + std::to_string(lo) + "->" + std::to_string(hi) +
                       " is implied by other covers");
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::optional<int> FinitePoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

std::vector<int> FinitePoset::upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }

std::vector<int> FinitePoset::lower_covers(int i) const { return down_[static_cast<std::size_t>(i)]; }

std::vector<int> FinitePoset::atoms() const {
  auto b = bottom();
  if (!b) throw InputError("poset has no bottom element");
  auto out = up_[static_cast<std::size_t>(*b)];
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinitePoset::strictly_below(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (less(j, i)) out.push_back(j);
  return out;
}

std::vector<int> FinitePoset::strictly_above(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (less(i, j)) out.push_back(j);
  return out;
}

int FinitePoset::count_below(int i) const {
  int c = 0;
  for (const auto w : below_[static_cast<std::size_t>(i)]) c += __builtin_popcountll(w);
  return c;
}

namespace {

// unique minimal (resp. maximal) element of a bound set given as a bit row
std::optional<int> unique_extreme(const FinitePoset& p, const std::vector<int>& candidates, bool minimal) {
  std::optional<int> found;
  for (int m : candidates) {
    bool extreme = true;
    for (int other : candidates) {
      if (other == m) continue;
      if (minimal ? p.less(other, m) : p.less(m, other)) {
        extreme = false;
        break;
      }
    }
    if (extreme) {
      if (found) return std::nullopt;  // not unique
      found = m;
    }
  }
  return found;
}

}  // namespace

std::optional<int> FinitePoset::join_of(int i, int j) const {
  std::vector<int> ub;
  for (int x = 0; x < size(); ++x)
    if (leq(i, x) && leq(j, x)) ub.push_back(x);
  if (ub.empty()) return std::nullopt;
  return unique_extreme(*this, ub, true);
}

std::optional<int> FinitePoset::meet_of(int i, int j) const {
  std::vector<int> lb;
  for (int x = 0; x < size(); ++x)
    if (leq(x, i) && leq(x, j)) lb.push_back(x);
  if (lb.empty()) return std::nullopt;
  return unique_extreme(*this, lb, false);
}

// ---- bond posets -----------------------------------------------------------

int BondPoset::index_of(const Bond& b) const {
  auto it = std::lower_bound(bonds.begin(), bonds.end(), b);
  if (it == bonds.end() || !(*it == b)) return -1;
  return static_cast<int>(it - bonds.begin());
}

namespace {

BondPoset poset_from_bonds(std::vector<Bond> bonds, std::size_t max_elements) {
  if (bonds.size() > max_elements)
    throw SizeLimitError("poset would have " + std::to_string(bonds.size()) + " elements (limit " +
                         std::to_string(max_elements) + ")");
  int n = static_cast<int>(bonds.size());
  // strict order: canonical order is a linear extension (component count
  // strictly drops whenever bonds are strictly contained)
  std::vector<std::vector<std::uint64_t>> below(static_cast<std::size_t>(n),
                                                std::vector<std::uint64_t>(word_count(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bonds[static_cast<std::size_t>(i)].component_count() <=
          bonds[static_cast<std::size_t>(j)].component_count())
        continue;
      if (bonds[static_cast<std::size_t>(i)].partition().refines(bonds[static_cast<std::size_t>(j)].partition()))
        set_bit(below[static_cast<std::size_t>(j)], i);
    }
  }
  auto below_bit = [&below](int j, int i) {
    return (below[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  };
  std::vector<std::pair<int, int>> covers;
  for (int j = 0; j < n; ++j) {
    const auto& row = below[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) {
      if (!below_bit(j, i)) continue;
      // i is a lower cover of j iff nothing lies strictly between
      bool covered = false;
      for (std::size_t w = 0; w < row.size() && !covered; ++w) {
        std::uint64_t m = row[w];
        while (m) {
          int k = static_cast<int>(w * 64) + __builtin_ctzll(m);
          m &= m - 1;
          if (k != i && below_bit(k, i)) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) covers.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(bonds.size());
  for (const Bond& b : bonds) labels.push_back(b.to_string());
  BondPoset out{std::move(bonds), FinitePoset(std::move(labels), std::move(covers))};
  return out;
}

}  // namespace

BondPoset nc_poset(const Graph& g, std::size_t max_elements) {
  return poset_from_bonds(enumerate_noncrossing_bonds(g), max_elements);
}

BondPoset bond_lattice(const Graph& g, std::size_t max_elements) {
  return poset_from_bonds(enumerate_bonds(g), max_elements);
}

// ---- Mobius ----------------------------------------------------------------

std::vector<std::int64_t> mobius(const FinitePoset& p) {
  auto bot = p.bottom();
  if (!bot) throw InputError("Mobius function needs a bottom element");
  int n = p.size();
  std::vector<std::int64_t> mu(static_cast<std::size_t>(n), 0);
  // canonical index order need not extend the order; accumulate by below-count
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> depth(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) depth[static_cast<std::size_t>(i)] = p.count_below(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]; });
  for (int x : order) {
    if (x == *bot) {
      mu[static_cast<std::size_t>(x)] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) acc += mu[static_cast<std::size_t>(y)];
    mu[static_cast<std::size_t>(x)] = -acc;
  }
  return mu;
}

// ---- grading ----------------------------------------------------------------

int GradingResult::poset_rank() const {
  int r = 0;
  for (int x : ranks) r = std::max(r, x);
  return r;
}

GradingResult grading(const FinitePoset& p) {
  auto bot = p.bottom();
  if (!bot) throw InputError("grading needs a bottom element");
  int n = p.size();
  // longest chain from the bottom; every maximal chain in [bottom, x] has
  // that length iff every cover raises it by exactly one
  std::vector<int> longest(static_cast<std::size_t>(n), 0);
  std::vector<int> longest_pred(static_cast<std::size_t>(n), -1);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.count_below(a) < p.count_below(b); });
  for (int x : order) {
    for (int d : p.lower_covers(x)) {
      if (longest[static_cast<std::size_t>(d)] + 1 > longest[static_cast<std::size_t>(x)]) {
        longest[static_cast<std::size_t>(x)] = longest[static_cast<std::size_t>(d)] + 1;
        longest_pred[static_cast<std::size_t>(x)] = d;
      }
    }
  }
  auto chain_to = [&](int x) {
    std::vector<int> chain;
    for (int cur = x; cur != -1; cur = longest_pred[static_cast<std::size_t>(cur)]) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  for (auto [lo, hi] : p.covers()) {
    if (longest[static_cast<std::size_t>(hi)] != longest[static_cast<std::size_t>(lo)] + 1) {
      GradingResult r;
      r.graded = false;
      r.chain_a = chain_to(lo);  // short chain through the bad cover
      r.chain_a.push_back(hi);
      r.chain_b = chain_to(hi);  // long chain to the same interval top
      return r;
    }
  }
  GradingResult r;
  r.graded = true;
  r.ranks = std::move(longest);
  return r;
}

// ---- lattice tests -----------------------------------------------------------

LatticeReport lattice_report(const FinitePoset& p) {
  LatticeReport rep;
  rep.has_top = p.top().has_value();
  rep.is_lattice = true;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!rep.first_joinless_pair && !p.join_of(i, j)) rep.first_joinless_pair = {i, j};
      if (!rep.first_meetless_pair && !p.meet_of(i, j)) rep.first_meetless_pair = {i, j};
      if (rep.first_joinless_pair && rep.first_meetless_pair) break;
    }
    if (rep.first_joinless_pair && rep.first_meetless_pair) break;
  }
  rep.is_lattice = !rep.first_joinless_pair && !rep.first_meetless_pair && p.size() > 0;
  return rep;
}

namespace {

void require_lattice(const FinitePoset& p, const char* op) {
  if (!lattice_report(p).is_lattice) throw NotLatticeError(std::string(op) + " requires a lattice");
}

}  // namespace

bool is_atomic(const FinitePoset& p) {
  require_lattice(p, "is_atomic");
  auto atoms = p.atoms();
  int bot = *p.bottom();
  for (int x = 0; x < p.size(); ++x) {
    if (x == bot) continue;  // empty join
    // join of all atoms below x must be x
    int acc = bot;
    for (int a : atoms) {
      if (!p.leq(a, x)) continue;
      auto j = p.join_of(acc, a);
      if (!j) throw InternalError("missing join in a lattice");
      acc = *j;
    }
    if (acc != x) return false;
  }
  return true;
}

bool is_semimodular(const FinitePoset& p) {
  require_lattice(p, "is_semimodular");
  for (int m = 0; m < p.size(); ++m) {
    auto ups = p.upper_covers(m);
    for (std::size_t a = 0; a < ups.size(); ++a) {
      for (std::size_t b = a + 1; b < ups.size(); ++b) {
        int x = ups[a], y = ups[b];
        auto mt = p.meet_of(x, y);
        if (!mt || *mt != m) continue;  // the pair's meet is not m
        auto j = p.join_of(x, y);
        if (!j) throw InternalError("missing join in a lattice");
        auto covers_x = p.upper_covers(x);
        auto covers_y = p.upper_covers(y);
        if (!std::count(covers_x.begin(), covers_x.end(), *j) ||
            !std::count(covers_y.begin(), covers_y.end(), *j))
          return false;
      }
    }
  }
  return true;
}

// ---- characteristic polynomial ------------------------------------------------

Polynomial characteristic_polynomial(const FinitePoset& p) {
  auto g = grading(p);
  if (!g.graded) throw NotGradedError("characteristic polynomial needs a graded poset");
  auto mu = mobius(p);
  int top_rank = g.poset_rank();
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(top_rank) + 1, 0);
  for (int x = 0; x < p.size(); ++x)
    coeffs[static_cast<std::size_t>(top_rank - g.ranks[static_cast<std::size_t>(x)])] +=
        mu[static_cast<std::size_t>(x)];
  return Polynomial(std::move(coeffs));
}

std::vector<std::int64_t> whitney_numbers(const FinitePoset& p) {
  auto g = grading(p);
  if (!g.graded) throw NotGradedError("Whitney numbers need a graded poset");
  auto mu = mobius(p);
  std::vector<std::int64_t> w(static_cast<std::size_t>(g.poset_rank()) + 1, 0);
  for (int x = 0; x < p.size(); ++x)
    w[static_cast<std::size_t>(g.ranks[static_cast<std::size_t>(x)])] += mu[static_cast<std::size_t>(x)];
  return w;
}

bool has_internal_zero(const Polynomial& p) { return p.has_internal_zero(); }

// ---- product & isomorphism -----------------------------------------------------

FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q) {
  int np = p.size(), nq = q.size();
  auto id = [nq](int i, int j) { return i * nq + j; };
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(np) * static_cast<std::size_t>(nq));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < np; ++i)
    for (auto [lo, hi] : q.covers()) covers.emplace_back(id(i, lo), id(i, hi));
  for (auto [lo, hi] : p.covers())
    for (int j = 0; j < nq; ++j) covers.emplace_back(id(lo, j), id(hi, j));
  return FinitePoset(std::move(labels), std::move(covers));
}

namespace {

struct IsoSignature {
  int up, down, below, above;
  bool operator==(const IsoSignature& o) const {
    return up == o.up && down == o.down && below == o.below && above == o.above;
  }
  bool operator<(const IsoSignature& o) const {
    return std::tie(up, down, below, above) < std::tie(o.up, o.down, o.below, o.above);
  }
};

std::vector<IsoSignature> signatures(const FinitePoset& p) {
  std::vector<IsoSignature> sig(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    int above = 0;
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j)) ++above;
    sig[static_cast<std::size_t>(i)] = {static_cast<int>(p.upper_covers(i).size()),
                                        static_cast<int>(p.lower_covers(i).size()), p.count_below(i), above};
  }
  return sig;
}

bool iso_backtrack(const FinitePoset& p, const FinitePoset& q, const std::vector<IsoSignature>& sp,
                   const std::vector<IsoSignature>& sq, std::vector<int>& map, std::vector<bool>& used, int i) {
  int n = p.size();
  if (i == n) return true;
  for (int t = 0; t < n; ++t) {
    if (used[static_cast<std::size_t>(t)] || !(sp[static_cast<std::size_t>(i)] == sq[static_cast<std::size_t>(t)]))
      continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      int tj = map[static_cast<std::size_t>(j)];
      if (p.less(i, j) != q.less(t, tj) || p.less(j, i) != q.less(tj, t)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(i)] = t;
    used[static_cast<std::size_t>(t)] = true;
    if (iso_backtrack(p, q, sp, sq, map, used, i + 1)) return true;
    used[static_cast<std::size_t>(t)] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() > 200 || q.size() > 200) throw SizeLimitError("isomorphism testing is limited to 200 elements");
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  auto sp = signatures(p), sq = signatures(q);
  auto sorted_p = sp, sorted_q = sq;
  std::sort(sorted_p.begin(), sorted_p.end());
  std::sort(sorted_q.begin(), sorted_q.end());
  if (!(sorted_p == sorted_q)) return false;
  std::vector<int> map(static_cast<std::size_t>(p.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(p.size()), false);
  return iso_backtrack(p, q, sp, sq, map, used, 0);
}

// ---- DOT export ----------------------------------------------------------------

std::string to_dot(const FinitePoset& p, const std::map<std::pair<int, int>, std::string>* cover_labels) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [lo, hi] : p.covers()) {
    os << "  n" << lo << " -> n" << hi;
    if (cover_labels) {
      auto it = cover_labels->find({lo, hi});
      if (it != cover_labels->end()) os << " [label=\"" << it->second << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncbond
