#include "ncbond/nbc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ncbond/errors.hpp"

namespace ncbond {

namespace {

// union-find over vertices 1..n
struct Dsu {
  std::vector<int> root;
  explicit Dsu(int n) : root(static_cast<std::size_t>(n) + 1) {
    for (int v = 0; v <= n; ++v) root[static_cast<std::size_t>(v)] = v;
  }
  int find(int v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
      v = root[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

// unique path between u and v in the forest S, as edges; empty if unconnected
std::vector<Edge> forest_path(int n, const std::vector<Edge>& s, int u, int v) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : s) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, -1);
  parent[static_cast<std::size_t>(u)] = u;
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(x)]) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = x;
        stack.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(v)] == -1) return {};
  std::vector<Edge> path;
  for (int cur = v; cur != u; cur = parent[static_cast<std::size_t>(cur)])
    path.emplace_back(cur, parent[static_cast<std::size_t>(cur)]);
  return path;
}

}  // namespace

std::vector<std::vector<Edge>> broken_circuits(const Graph& g, const EdgeOrdering& sigma) {
  if (g.n() > 12) throw SizeLimitError("cycle enumeration is bounded to 12 vertices");
  std::set<std::vector<Edge>> out;
  int n = g.n();
  // enumerate each simple cycle once: smallest vertex first, orientation fixed
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {  // kill the reversed copy
          std::vector<Edge> cycle;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) cycle.emplace_back(path[i], path[i + 1]);
          cycle.emplace_back(path.back(), start);
          Edge smallest = *std::min_element(cycle.begin(), cycle.end(), [&](const Edge& a, const Edge& b) {
            return sigma.rank(a) < sigma.rank(b);
          });
          std::vector<Edge> bc;
          for (const Edge& e : cycle)
            if (!(e == smallest)) bc.push_back(e);
          std::sort(bc.begin(), bc.end());
          out.insert(std::move(bc));
        }
        continue;
      }
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int start = 1; start <= n; ++start) {
    path = {start};
    extend(start, start);
  }
  return {out.begin(), out.end()};
}

bool is_nbc_set(const Graph& g, const EdgeOrdering& sigma, const std::vector<Edge>& s) {
  Dsu dsu(g.n());
  for (const Edge& e : s)
    if (!dsu.unite(e.u, e.v)) return false;  // a full cycle contains its broken circuit
  std::vector<Edge> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& h : g.edges()) {
    if (std::binary_search(sorted.begin(), sorted.end(), h)) continue;
    if (dsu.find(h.u) != dsu.find(h.v)) continue;
    // h closes a cycle in S; if h is its unique smallest edge, the rest of
    // that cycle is a broken circuit inside S
    auto path = forest_path(g.n(), s, h.u, h.v);
    bool h_smallest = true;
    for (const Edge& pe : path) {
      if (sigma.rank(pe) < sigma.rank(h)) {
        h_smallest = false;
        break;
      }
    }
    if (h_smallest) return false;
  }
  return true;
}

namespace {

struct SubsetScan {
  const Graph& g;
  const EdgeOrdering& sigma;
  bool noncrossing;
  int want_k = -1;                         // -1: count all sizes
  std::vector<std::int64_t> counts{};
  std::vector<std::vector<Edge>> found{};  // when want_k >= 0

  void run() {
    counts.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<Edge> current;
    extend(0, current);
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  }

  void extend(std::size_t from, std::vector<Edge>& current) {
    ++counts[current.size()];
    if (want_k >= 0 && static_cast<int>(current.size()) == want_k) found.push_back(current);
    if (want_k >= 0 && static_cast<int>(current.size()) >= want_k) return;
    const auto& edges = g.edges();
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (noncrossing) {
        bool crosses = false;
        for (const Edge& x : current)
          if (edges_cross(x, e)) {
            crosses = true;
            break;
          }
        if (crosses) continue;
      }
      current.push_back(e);
      // NBC and the crossing filter are both hereditary, so pruning on the
      // extended set is exact
      if (is_nbc_set(g, sigma, current)) extend(i + 1, current);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<std::int64_t> nbc_counts(const Graph& g, const EdgeOrdering& sigma) {
  SubsetScan scan{g, sigma, false};
  scan.run();
  return scan.counts;
}

std::vector<std::vector<Edge>> nbc_sets(const Graph& g, const EdgeOrdering& sigma, int k) {
  SubsetScan scan{g, sigma, false, k};
  scan.run();
  return scan.found;
}

std::vector<std::int64_t> ncnbc_counts(const Graph& g, const EdgeOrdering& sigma) {
  SubsetScan scan{g, sigma, true};
  scan.run();
  return scan.counts;
}

std::vector<std::vector<Edge>> ncnbc_sets(const Graph& g, const EdgeOrdering& sigma, int k) {
  SubsetScan scan{g, sigma, true, k};
  scan.run();
  return scan.found;
}

namespace {

// restriction of the host to a bond's edges, keeping sigma's relative order
std::pair<Graph, EdgeOrdering> bond_as_graph(const Graph& g, const EdgeOrdering& sigma, const Bond& h) {
  Graph sub(g.n(), h.edges());
  std::vector<Edge> order;
  for (const Edge& e : sigma.edges())
    if (h.has_edge(e)) order.push_back(e);
  return {sub, EdgeOrdering(sub, std::move(order))};
}

}  // namespace

std::vector<std::vector<Edge>> nbc_spanning_sets(const Graph& g, const EdgeOrdering& sigma, const Bond& h) {
  auto [sub, order] = bond_as_graph(g, sigma, h);
  return nbc_sets(sub, order, g.n() - h.component_count());
}

std::vector<std::vector<Edge>> ncnbc_spanning_sets(const Graph& g, const EdgeOrdering& sigma, const Bond& h) {
  auto [sub, order] = bond_as_graph(g, sigma, h);
  return ncnbc_sets(sub, order, g.n() - h.component_count());
}

// ---- NBB sets ---------------------------------------------------------------

std::vector<std::vector<std::vector<int>>> nbb_sets(const FinitePoset& p,
                                                    const std::vector<int>& atoms_in_order) {
  auto bot = p.bottom();
  if (!bot) throw InputError("nbb_sets needs a bottom element");
  {
    auto expected = p.atoms();
    auto got = atoms_in_order;
    std::sort(got.begin(), got.end());
    if (got != expected) throw InputError("atom order must list exactly the atoms");
  }
  if (atoms_in_order.size() > 25) throw SizeLimitError("nbb_sets is limited to 25 atoms");

  int na = static_cast<int>(atoms_in_order.size());
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(p.size()));
  out[static_cast<std::size_t>(*bot)].push_back({});  // the empty set joins to the bottom

  // positions of the current set, ascending; joins[mask] = join of that subset
  std::vector<int> members;
  std::vector<int> joins{*bot};

  std::function<void(int)> extend = [&](int from) {
    for (int s = from; s < na; ++s) {
      int atom = atoms_in_order[static_cast<std::size_t>(s)];
      std::size_t old_size = joins.size();
      std::vector<int> new_joins(old_size);
      bool admissible = true;
      for (std::size_t mask = 0; mask < old_size && admissible; ++mask) {
        auto j = p.join_of(joins[mask], atom);
        if (!j) throw NotLatticeError("join nonexistence encountered while enumerating NBB sets");
        new_joins[mask] = *j;
        // Is subset(mask) + atom bounded below?  The atom order is total, so
        // the candidates are exactly the atoms strictly before the subset's
        // first member (members are kept in ascending position order).
        int first_pos = mask == 0 ? s : members[static_cast<std::size_t>(__builtin_ctzll(mask))];
        for (int a = 0; a < first_pos; ++a) {
          if (p.less(atoms_in_order[static_cast<std::size_t>(a)], *j)) {
            admissible = false;
            break;
          }
        }
      }
      if (admissible) {
        members.push_back(s);
        joins.insert(joins.end(), new_joins.begin(), new_joins.end());
        std::vector<int> set_elems;
        for (int pos : members) set_elems.push_back(atoms_in_order[static_cast<std::size_t>(pos)]);
        out[static_cast<std::size_t>(joins.back())].push_back(set_elems);
        extend(s + 1);
        members.pop_back();
        joins.resize(old_size);
      }
    }
  };
  extend(0);
  return out;
}

// ---- increasing spanning forests ----------------------------------------------

namespace {

// every component, rooted at its minimum, must have parent < child throughout
bool is_increasing_forest(int n, const std::vector<Edge>& s) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : s) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 1; r <= n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    // r is the minimum of its component because vertices are scanned ascending
    seen[static_cast<std::size_t>(r)] = 1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        if (w < v) return false;  // walking away from the root must increase
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

struct IsfScan {
  const Graph& g;
  bool noncrossing;
  int want_k = -1;
  std::vector<std::int64_t> counts{};
  std::vector<std::vector<Edge>> found{};

  void run() {
    counts.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<Edge> current;
    extend(0, current);
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  }

  // detaching a subtree keeps a forest increasing, so the family is
  // hereditary and pruning on the extended set is exact
  void extend(std::size_t from, std::vector<Edge>& current) {
    ++counts[current.size()];
    if (want_k >= 0 && static_cast<int>(current.size()) == want_k) found.push_back(current);
    if (want_k >= 0 && static_cast<int>(current.size()) >= want_k) return;
    const auto& edges = g.edges();
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (noncrossing) {
        bool crosses = false;
        for (const Edge& x : current)
          if (edges_cross(x, e)) {
            crosses = true;
            break;
          }
        if (crosses) continue;
      }
      current.push_back(e);
      Dsu dsu(g.n());
      bool forest = true;
      for (const Edge& se : current)
        if (!dsu.unite(se.u, se.v)) {
          forest = false;
          break;
        }
      if (forest && is_increasing_forest(g.n(), current)) extend(i + 1, current);
      current.pop_back();
    }
  }
};

}  // namespace

IsfCounts increasing_spanning_forests(const Graph& g) {
  IsfScan all{g, false};
  all.run();
  IsfScan nc{g, true};
  nc.run();
  return {all.counts, nc.counts};
}

std::vector<std::vector<Edge>> ncisf_sets(const Graph& g, int k) {
  IsfScan scan{g, true, k};
  scan.run();
  return scan.found;
}

std::vector<std::vector<Edge>> ncisf_spanning_sets(const Graph& g, const Bond& h) {
  Graph sub(g.n(), h.edges());
  return ncisf_sets(sub, g.n() - h.component_count());
}

// ---- chromatic polynomial ------------------------------------------------------

namespace {

std::string graph_key(int n, const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << n << ":";
  for (const Edge& e : edges) os << e.u << "," << e.v << ";";
  return os.str();
}

Polynomial chromatic_rec(int n, std::vector<Edge> edges, std::unordered_map<std::string, Polynomial>& memo) {
  if (edges.empty()) return Polynomial::monomial(1, n);
  std::string key = graph_key(n, edges);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Edge pivot = edges.back();  // highest-indexed edge
  std::vector<Edge> deleted(edges.begin(), edges.end() - 1);

  // contraction: merge pivot.v into pivot.u, compact labels above pivot.v
  std::vector<Edge> contracted;
  for (const Edge& e : deleted) {
    int a = e.u == pivot.v ? pivot.u : e.u;
    int b = e.v == pivot.v ? pivot.u : e.v;
    if (a == b) continue;  // edge parallel to the pivot collapses
    if (a > pivot.v) --a;
    if (b > pivot.v) --b;
    contracted.emplace_back(a, b);
  }
  std::sort(contracted.begin(), contracted.end());
  contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());

  Polynomial result =
      chromatic_rec(n, std::move(deleted), memo) - chromatic_rec(n - 1, std::move(contracted), memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
  std::unordered_map<std::string, Polynomial> memo;
  return chromatic_rec(g.n(), g.edges(), memo);
}

}  // namespace ncbond
