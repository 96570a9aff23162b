#include "ncbond/closure.hpp"

#include <algorithm>
#include <deque>

#include "ncbond/errors.hpp"
#include "ncbond/oracles.hpp"

namespace ncbond {

namespace {

// shortest x1 -> target path avoiding the two banned vertices, parents tie
// toward the lowest-numbered predecessor; empty when unreachable
std::vector<int> bfs_path_avoiding(const Graph& g, int from, int to, int ban_a, int ban_b) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
  std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, 0);
  dist[static_cast<std::size_t>(from)] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (w == ban_a || w == ban_b || dist[static_cast<std::size_t>(w)] != -1) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  if (dist[static_cast<std::size_t>(to)] == -1) return {};
  std::vector<int> rev{to};
  for (int cur = to; cur != from; cur = parent[static_cast<std::size_t>(cur)]) rev.push_back(parent[static_cast<std::size_t>(cur)]);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Shortest path x0 x1 ... xk with e = x0x1 and f = x_{k-1}xk, as the minimum
// over the four endpoint pairings of an inner path extended by e and f.
// Empty when e and f cannot be joined.
std::vector<int> pair_path(const Graph& g, const Edge& e, const Edge& f) {
  std::vector<int> best;
  const int e_ends[2] = {e.u, e.v};
  const int f_ends[2] = {f.u, f.v};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      int x1 = e_ends[i], x0 = e_ends[1 - i];
      int xk1 = f_ends[j], xk = f_ends[1 - j];
      auto inner = bfs_path_avoiding(g, x1, xk1, x0, xk);
      if (inner.empty()) continue;
      std::vector<int> path;
      path.reserve(inner.size() + 2);
      path.push_back(x0);
      path.insert(path.end(), inner.begin(), inner.end());
      path.push_back(xk);
      if (best.empty() || path.size() < best.size()) best = std::move(path);
    }
  }
  return best;
}

struct PairClass {
  enum class Kind { K4, Dumbbell, NoPath, SeparationFails };
  Kind kind = Kind::NoPath;
  std::vector<int> path;              // full x0..xk when one exists
  std::optional<int> failing_vertex;  // SeparationFails
};

// Per-pair body of the crossing-closed procedure; e and f are assumed to cross.
PairClass classify_crossing_pair(const Graph& g, const Edge& e, const Edge& f) {
  PairClass pc;
  pc.path = pair_path(g, e, f);
  if (pc.path.empty()) {
    pc.kind = PairClass::Kind::NoPath;
    return pc;
  }
  std::size_t k = pc.path.size() - 1;  // path has k+1 vertices
  if (k == 3) {
    pc.kind = PairClass::Kind::K4;
    return pc;
  }
  for (std::size_t i = 2; i + 2 <= k; ++i) {
    if (!separates(g, pc.path[i], e, f)) {
      pc.kind = PairClass::Kind::SeparationFails;
      pc.failing_vertex = pc.path[i];
      return pc;
    }
  }
  pc.kind = PairClass::Kind::Dumbbell;
  return pc;
}

std::vector<Edge> induced_edges(const Graph& g, const std::vector<int>& vertices) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.has_edge(vertices[a], vertices[b])) out.emplace_back(vertices[a], vertices[b]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

JResult compute_J(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e) || !g.has_edge(f)) throw InputError("compute_J needs edges of the graph");
  JResult r;
  if (!edges_cross(e, f)) {
    r.kind = JResult::Kind::NonCrossingPair;
    return r;
  }
  PairClass pc = classify_crossing_pair(g, e, f);
  switch (pc.kind) {
    case PairClass::Kind::K4: {
      r.kind = JResult::Kind::K4Form;
      r.vertices = {e.u, e.v, f.u, f.v};
      std::sort(r.vertices.begin(), r.vertices.end());
      r.edges = induced_edges(g, r.vertices);
      return r;
    }
    case PairClass::Kind::Dumbbell: {
      r.kind = JResult::Kind::Dumbbell;
      r.vertices = pc.path;
      std::sort(r.vertices.begin(), r.vertices.end());
      r.edges = induced_edges(g, r.vertices);
      r.cut_vertices.assign(pc.path.begin() + 2, pc.path.end() - 2);
      return r;
    }
    case PairClass::Kind::NoPath:
    case PairClass::Kind::SeparationFails: {
      r.kind = JResult::Kind::NotClosed;
      r.failing_vertex = pc.failing_vertex;
      if (g.n() <= 10) r.witnesses = oracle_J(g, e, f);
      return r;
    }
  }
  throw InternalError("unreachable");
}

CrossingClosedResult is_crossing_closed(const Graph& g) {
  for (const auto& [e, f] : g.crossing_pairs()) {
    PairClass pc = classify_crossing_pair(g, e, f);
    if (pc.kind == PairClass::Kind::NoPath || pc.kind == PairClass::Kind::SeparationFails)
      return {false, std::make_pair(e, f)};
  }
  return {true, std::nullopt};
}

UccResult upper_crossing_closed(const Graph& g) {
  auto cc = is_crossing_closed(g);
  if (!cc.closed) {
    auto [e, f] = *cc.failing_pair;
    return UccNotCrossingClosed{{e, f}, compute_J(g, e, f)};
  }

  int m = g.edge_count();
  // J edge sets for all crossing pairs, then the accretion rounds
  std::vector<std::vector<int>> partners(static_cast<std::size_t>(m));   // crossing partner edge ids
  std::vector<std::vector<std::vector<int>>> j_edges(static_cast<std::size_t>(m));  // aligned with partners
  for (const auto& [e, f] : g.crossing_pairs()) {
    JResult j = compute_J(g, e, f);
    std::vector<int> ids;
    ids.reserve(j.edges.size());
    for (const Edge& h : j.edges) ids.push_back(g.edge_index(h));
    int ei = g.edge_index(e), fi = g.edge_index(f);
    partners[static_cast<std::size_t>(ei)].push_back(fi);
    j_edges[static_cast<std::size_t>(ei)].push_back(ids);
    partners[static_cast<std::size_t>(fi)].push_back(ei);
    j_edges[static_cast<std::size_t>(fi)].push_back(ids);
  }

  std::vector<char> in_l(static_cast<std::size_t>(m), 0);
  std::vector<Edge> sigma;
  std::vector<std::vector<Edge>> rounds;
  int placed = 0;
  while (true) {
    std::vector<int> next;
    for (int ei = 0; ei < m; ++ei) {
      if (in_l[static_cast<std::size_t>(ei)]) continue;
      bool eligible = true;
      const auto& ps = partners[static_cast<std::size_t>(ei)];
      for (std::size_t pi = 0; pi < ps.size() && eligible; ++pi) {
        if (in_l[static_cast<std::size_t>(ps[pi])]) continue;  // f must lie outside L
        bool meets_l = false;
        for (int hid : j_edges[static_cast<std::size_t>(ei)][pi]) {
          if (in_l[static_cast<std::size_t>(hid)]) {
            meets_l = true;
            break;
          }
        }
        if (!meets_l) eligible = false;
      }
      if (eligible) next.push_back(ei);
    }
    if (next.empty()) break;
    std::vector<Edge> round;
    for (int ei : next) {  // edge ids ascend, so the round is lexicographic
      in_l[static_cast<std::size_t>(ei)] = 1;
      round.push_back(g.edges()[static_cast<std::size_t>(ei)]);
      sigma.push_back(g.edges()[static_cast<std::size_t>(ei)]);
      ++placed;
    }
    rounds.push_back(std::move(round));
  }
  if (placed == m) return UccOrdering{EdgeOrdering(g, std::move(sigma)), std::move(rounds)};
  std::vector<Edge> obstruction;
  for (int ei = 0; ei < m; ++ei)
    if (!in_l[static_cast<std::size_t>(ei)]) obstruction.push_back(g.edges()[static_cast<std::size_t>(ei)]);
  return UccObstruction{std::move(obstruction)};
}

bool is_obstruction(const Graph& g, const std::vector<Edge>& h) {
  auto cc = is_crossing_closed(g);
  if (!cc.closed) throw InputError("is_obstruction requires a crossing closed host");
  if (h.empty()) return false;
  std::vector<Edge> hs = h;
  std::sort(hs.begin(), hs.end());
  for (const Edge& e : hs)
    if (!g.has_edge(e)) throw InputError("obstruction candidate contains a non-edge " + e.to_string());
  for (const Edge& e : hs) {
    bool found = false;
    for (const Edge& f : hs) {
      if (!edges_cross(e, f)) continue;
      JResult j = compute_J(g, e, f);
      bool inside = true;
      for (const Edge& je : j.edges) {
        if (!std::binary_search(hs.begin(), hs.end(), je)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

UccVerification verify_ucc_ordering(const Graph& g, const EdgeOrdering& sigma) {
  auto cc = is_crossing_closed(g);
  if (!cc.closed) throw InputError("verify_ucc_ordering requires a crossing closed graph");
  if (sigma.size() != g.edges().size()) throw InputError("ordering does not cover E(G)");
  for (const auto& [e, f] : g.crossing_pairs()) {
    JResult j = compute_J(g, e, f);
    int bound = std::min(sigma.rank(e), sigma.rank(f));
    bool has_smaller = false;
    for (const Edge& h : j.edges) {
      if (h == e || h == f) continue;
      if (sigma.rank(h) < bound) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) return {false, std::make_pair(e, f)};
  }
  return {true, std::nullopt};
}

bool is_tightly_closed(const Graph& g) {
  for (const auto& [e, f] : g.crossing_pairs()) {
    PairClass pc = classify_crossing_pair(g, e, f);
    if (pc.kind != PairClass::Kind::K4) return false;
  }
  return true;
}

bool is_strongly_upper_crossed(const Graph& g, const EdgeOrdering& sigma) {
  if (g.n() > 10) throw SizeLimitError("is_strongly_upper_crossed is limited to 10 vertices");
  if (sigma.size() != g.edges().size()) throw InputError("ordering does not cover E(G)");
  for (const auto& [e, f] : g.crossing_pairs()) {
    auto witnesses = oracle_J(g, e, f);
    if (witnesses.empty()) return false;  // no connected container at all
    int bound = std::min(sigma.rank(e), sigma.rank(f));
    for (const auto& w : witnesses) {
      for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
          if (!g.has_edge(w[a], w[b])) continue;
          Edge h(w[a], w[b]);
          if (h == e || h == f) continue;
          if (sigma.rank(h) >= bound) return false;
        }
      }
    }
  }
  return true;
}

bool has_one_hat(const Graph& g) {
  SetPartition comps = g.components();
  for (const auto& [e, f] : g.crossing_pairs())
    if (comps.block_index_of(e.u) != comps.block_index_of(f.u)) return false;
  return true;
}

int circular_distance(int n, const Edge& e) {
  return std::min(e.v - e.u - 1, n - e.v + e.u - 1);
}

EdgeOrdering distance_ordering(const Graph& g) {
  Graph expected = k_even_odd(g.n());
  if (!(g.edges() == expected.edges()))
    throw InputError("distance_ordering is defined for k_even_odd graphs only");
  std::vector<Edge> order = g.edges();
  int n = g.n();
  std::stable_sort(order.begin(), order.end(), [n](const Edge& a, const Edge& b) {
    return circular_distance(n, a) < circular_distance(n, b);
  });
  return EdgeOrdering(g, std::move(order));
}

}  // namespace ncbond
