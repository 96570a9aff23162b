#include "ncbond/bonds.hpp"

#include <algorithm>
#include <iostream>

#include "ncbond/errors.hpp"

namespace ncbond {

Bond::Bond(const Graph& host, SetPartition partition) : partition_(std::move(partition)) {
  for (const Edge& e : host.edges())
    if (partition_.block_index_of(e.u) == partition_.block_index_of(e.v)) edges_.push_back(e);
}

bool Bond::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Bond::contains(const Bond& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

bool Bond::is_noncrossing() const {
  bool by_partition = partition_.is_noncrossing();
  // Independent route: a bond is crossing iff two distinct components carry
  // a crossing edge pair.
  bool by_components = true;
  for (std::size_t i = 0; i < edges_.size() && by_components; ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (partition_.block_index_of(edges_[i].u) == partition_.block_index_of(edges_[j].u)) continue;
      if (edges_cross(edges_[i], edges_[j])) {
        by_components = false;
        break;
      }
    }
  }
  if (by_partition != by_components)
    throw InternalError("noncrossing routes disagree on bond " + partition_.to_string());
  return by_partition;
}

bool Bond::operator<(const Bond& o) const {
  int ca = component_count(), cb = o.component_count();
  if (ca != cb) return ca > cb;  // more components first
  return partition_ < o.partition_;
}

Bond bond_closure(const Graph& g, const std::vector<Edge>& subset) {
  std::vector<int> block_of(static_cast<std::size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) block_of[static_cast<std::size_t>(v - 1)] = v;
  // union-find over the subset's edges
  std::vector<int> root(static_cast<std::size_t>(g.n()) + 1);
  for (int v = 0; v <= g.n(); ++v) root[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
      v = root[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : subset) {
    if (!g.has_edge(e)) throw InputError("edge " + e.to_string() + " is not in the host graph");
    int a = find(e.u), b = find(e.v);
    if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  for (int v = 1; v <= g.n(); ++v) block_of[static_cast<std::size_t>(v - 1)] = find(v);
  return Bond(g, SetPartition::from_assignment(g.n(), block_of));
}

Bond empty_bond(const Graph& g) { return bond_closure(g, {}); }

Bond full_bond(const Graph& g) { return bond_closure(g, g.edges()); }

SetPartition partition_of_bond(const Bond& h) { return h.partition(); }

bool is_noncrossing_bond(const Bond& h) { return h.is_noncrossing(); }

std::variant<Bond, DisconnectedBlock> bond_of_partition(const Graph& g, const SetPartition& pi) {
  if (pi.n() != g.n()) throw InputError("partition ground set does not match the graph");
  for (int bi = 0; bi < pi.block_count(); ++bi) {
    std::uint32_t mask = pi.block_mask(bi);
    if (g.induced_components(mask).size() > 1) return DisconnectedBlock{pi.blocks()[static_cast<std::size_t>(bi)]};
  }
  return Bond(g, pi);
}

// ---- enumeration -----------------------------------------------------------

// Depth-first expansion over restricted-growth strings: vertex v is appended
// to an existing block or starts a new one.  Placing v can only create a
// crossing in which v is the largest of the four vertices, which happens iff
// some other block straddles an element of v's block; that check is exact,
// so crossing partial partitions are pruned as soon as they appear.
class BondEnumerator {
 public:
  BondEnumerator(const Graph& g, bool noncrossing_only) : g_(g), noncrossing_only_(noncrossing_only) {}

  std::vector<Bond> run() {
    if (g_.n() > 16) throw SizeLimitError("bond enumeration refused above 16 vertices");
    if (g_.n() > 12)
      std::cerr << "warning: enumerating bonds of a " << std::to_string(g_.n())
                << "-vertex graph; this can approach Bell-number scale\n";
    buckets_.assign(static_cast<std::size_t>(g_.n()) + 1, {});
    block_of_.assign(static_cast<std::size_t>(g_.n()), -1);
    extend(1, 0);
    std::vector<Bond> out;
    for (int cc = g_.n(); cc >= 1; --cc)
      for (auto& b : buckets_[static_cast<std::size_t>(cc)]) out.push_back(std::move(b));
    return out;
  }

 private:
  void extend(int v, int used_blocks) {
    if (v > g_.n()) {
      emit(used_blocks);
      return;
    }
    for (int b = 0; b <= used_blocks; ++b) {
      block_of_[static_cast<std::size_t>(v - 1)] = b;
      bool fresh = b == used_blocks;
      if ((!noncrossing_only_ || fresh || !creates_crossing(v, b)) && block_can_survive(v, b))
        extend(v + 1, used_blocks + (fresh ? 1 : 0));
    }
    block_of_[static_cast<std::size_t>(v - 1)] = -1;
  }

  // some other block has elements on both sides of an element of v's block
  bool creates_crossing(int v, int b) const {
    int mn[17], mx[17];
    for (int i = 0; i < 17; ++i) mn[i] = 17, mx[i] = 0;
    for (int x = 1; x < v; ++x) {
      int bx = block_of_[static_cast<std::size_t>(x - 1)];
      mn[bx] = std::min(mn[bx], x);
      mx[bx] = std::max(mx[bx], x);
    }
    for (int w = mn[b]; w <= mx[b]; ++w) {
      if (block_of_[static_cast<std::size_t>(w - 1)] != b) continue;
      for (int other = 0; other < v; ++other)
        if (other != b && mn[other] < w && w < mx[other]) return true;
    }
    return false;
  }

  // a component of the induced block with no neighbors among future vertices
  // can never merge with the rest of its block
  bool block_can_survive(int v, int b) const {
    std::uint32_t members = 0;
    for (int w = 1; w <= v; ++w)
      if (block_of_[static_cast<std::size_t>(w - 1)] == b) members |= 1u << (w - 1);
    auto comps = g_.induced_components(members);
    if (comps.size() <= 1) return true;
    std::uint32_t future = 0;
    for (int w = v + 1; w <= g_.n(); ++w) future |= 1u << (w - 1);
    for (std::uint32_t comp : comps) {
      std::uint32_t reach = 0;
      std::uint32_t m = comp;
      while (m) {
        int w = __builtin_ctz(m);
        m &= m - 1;
        reach |= g_.neighbor_mask(w + 1);
      }
      if (!(reach & future)) return false;
    }
    return true;
  }

  void emit(int used_blocks) {
    for (int b = 0; b < used_blocks; ++b) {
      std::uint32_t members = 0;
      for (int w = 1; w <= g_.n(); ++w)
        if (block_of_[static_cast<std::size_t>(w - 1)] == b) members |= 1u << (w - 1);
      if (g_.induced_components(members).size() > 1) return;
    }
    SetPartition pi = SetPartition::from_assignment(g_.n(), block_of_);
    buckets_[static_cast<std::size_t>(used_blocks)].push_back(Bond(g_, pi));
  }

  const Graph& g_;
  bool noncrossing_only_;
  std::vector<int> block_of_;
  std::vector<std::vector<Bond>> buckets_;
};

std::vector<Bond> enumerate_bonds(const Graph& g) { return BondEnumerator(g, false).run(); }

std::vector<Bond> enumerate_noncrossing_bonds(const Graph& g) { return BondEnumerator(g, true).run(); }

}  // namespace ncbond
