#include "ncbond/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ncbond/errors.hpp"

namespace ncbond {

Edge::Edge(int a, int b) {
  if (a == b) throw InputError("loop edge " + std::to_string(a) + "-" + std::to_string(b));
  u = std::min(a, b);
  v = std::max(a, b);
}

std::string Edge::to_string() const {
  if (v <= 9) return std::to_string(u) + std::to_string(v);
  return std::to_string(u) + "-" + std::to_string(v);
}

bool edges_cross(const Edge& e, const Edge& f) {
  return (e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v);
}

// ---- SetPartition ----------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 0) throw InputError("negative partition ground set");
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("empty block in partition");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int v : blocks_[bi]) {
      if (v < 1 || v > n) throw InputError("partition element out of range: " + std::to_string(v));
      int& slot = block_of_[static_cast<std::size_t>(v - 1)];
      if (slot != -1) throw InputError("partition blocks are not disjoint at " + std::to_string(v));
      slot = static_cast<int>(bi);
    }
  }
  for (int v = 1; v <= n; ++v)
    if (block_of_[static_cast<std::size_t>(v - 1)] == -1)
      throw InputError("partition does not cover vertex " + std::to_string(v));
}

SetPartition SetPartition::from_assignment(int n, const std::vector<int>& block_of) {
  if (static_cast<int>(block_of.size()) != n) throw InputError("assignment size mismatch");
  std::map<int, std::vector<int>> by_id;
  for (int v = 1; v <= n; ++v) by_id[block_of[static_cast<std::size_t>(v - 1)]].push_back(v);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(by_id.size());
  for (auto& [id, b] : by_id) blocks.push_back(std::move(b));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) blocks.push_back({v});
  return SetPartition(n, std::move(blocks));
}

std::uint32_t SetPartition::block_mask(int block_index) const {
  std::uint32_t m = 0;
  for (int v : blocks_[static_cast<std::size_t>(block_index)]) m |= 1u << (v - 1);
  return m;
}

bool SetPartition::is_noncrossing() const {
  // a < b < c < d with a,c in one block and b,d in another
  for (int b = 2; b <= n_; ++b) {
    for (int d = b + 1; d <= n_; ++d) {
      if (block_index_of(b) != block_index_of(d)) continue;
      int other = block_index_of(b);
      for (int a = 1; a < b; ++a) {
        if (block_index_of(a) == other) continue;
        for (int c = b + 1; c < d; ++c) {
          if (block_index_of(c) == block_index_of(a)) return false;
        }
      }
    }
  }
  return true;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const auto& b : blocks_) {
    int target = coarser.block_index_of(b.front());
    for (int v : b)
      if (coarser.block_index_of(v) != target) return false;
  }
  return true;
}

std::vector<int> SetPartition::rgs() const {
  // canonical form sorts blocks by minimum, so block_of_ already is an RGS
  return block_of_;
}

bool SetPartition::operator<(const SetPartition& o) const {
  return block_of_ < o.block_of_;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) os << "/";
    for (std::size_t i = 0; i < blocks_[bi].size(); ++i) {
      if (i && n_ > 9) os << ",";
      os << blocks_[bi][i];
    }
  }
  return os.str();
}

bool is_noncrossing_partition(const SetPartition& pi) { return pi.is_noncrossing(); }

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  if (n > 32) throw InputError("vertex count above the representable limit");
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 1 || e.v > n) throw InputError("edge endpoint out of range: " + e.to_string());
    if (i > 0 && edges[i - 1] == e) throw InputError("duplicate edge " + e.to_string());
  }
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  adj_mask_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
    adj_mask_[static_cast<std::size_t>(e.u - 1)] |= 1u << (e.v - 1);
    adj_mask_[static_cast<std::size_t>(e.v - 1)] |= 1u << (e.u - 1);
  }
  for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v || u < 1 || v < 1 || u > n_ || v > n_) return false;
  return (adj_mask_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u;
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::uint32_t> Graph::induced_components(std::uint32_t vertex_mask) const {
  std::vector<std::uint32_t> comps;
  std::uint32_t unseen = vertex_mask;
  while (unseen) {
    int start = __builtin_ctz(unseen);
    std::uint32_t comp = 0, frontier = 1u << start;
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= adj_mask_[static_cast<std::size_t>(v)] & vertex_mask & ~comp;
      }
      frontier = next;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

SetPartition Graph::components() const {
  std::uint32_t all = n_ == 32 ? ~0u : ((1u << n_) - 1);
  std::vector<int> block_of(static_cast<std::size_t>(n_), -1);
  auto comps = induced_components(all);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    std::uint32_t m = comps[ci];
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      block_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
    }
  }
  return SetPartition::from_assignment(n_, block_of);
}

bool Graph::is_connected() const { return components().block_count() == 1; }

std::vector<std::pair<Edge, Edge>> Graph::crossing_pairs() const {
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_cross(edges_[i], edges_[j])) out.emplace_back(edges_[i], edges_[j]);
  return out;
}

bool Graph::edge_crosses_something(const Edge& e) const {
  for (const Edge& f : edges_)
    if (edges_cross(e, f)) return true;
  return false;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " E={";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    os << edges_[i].to_string();
  }
  os << "}";
  return os.str();
}

SetPartition connected_components(const Graph& g) { return g.components(); }

bool separates(const Graph& g, int v, const Edge& e, const Edge& f) {
  if (e.incident(v) || f.incident(v)) throw InputError("separating vertex must not lie on either edge");
  if (v < 1 || v > g.n()) throw InputError("vertex out of range");
  std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
  std::uint32_t rest = all & ~(1u << (v - 1));
  auto comps = g.induced_components(rest);
  std::uint32_t emask = (1u << (e.u - 1)) | (1u << (e.v - 1));
  std::uint32_t fmask = (1u << (f.u - 1)) | (1u << (f.v - 1));
  for (std::uint32_t c : comps)
    if ((c & emask) && (c & fmask)) return false;
  return true;
}

ApspResult all_pairs_shortest_paths(const Graph& g) {
  int n = g.n();
  ApspResult r;
  r.dist.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), ApspResult::kInfinity));
  r.parent.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int s = 1; s <= n; ++s) {
    auto& dist = r.dist[static_cast<std::size_t>(s - 1)];
    auto& parent = r.parent[static_cast<std::size_t>(s - 1)];
    dist[static_cast<std::size_t>(s - 1)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {  // ascending, so the first parent found is the lowest
        if (dist[static_cast<std::size_t>(w - 1)] == ApspResult::kInfinity) {
          dist[static_cast<std::size_t>(w - 1)] = dist[static_cast<std::size_t>(u - 1)] + 1;
          parent[static_cast<std::size_t>(w - 1)] = u;
          queue.push_back(w);
        }
      }
    }
  }
  return r;
}

std::vector<int> ApspResult::path(int u, int v) const {
  if (!reachable(u, v)) return {};
  std::vector<int> rev{v};
  int cur = v;
  while (cur != u) {
    cur = parent[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(cur - 1)];
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

bool is_perfectly_labeled(const Graph& g) {
  for (int k = 3; k <= g.n(); ++k) {
    const auto& nb = g.neighbors(k);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      if (nb[a] >= k) break;
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (nb[b] >= k) break;
        if (!g.has_edge(nb[a], nb[b])) return false;
      }
    }
  }
  return true;
}

namespace {

// maximum cardinality search; returns visit order (first visited first)
std::vector<int> mcs_order(const Graph& g) {
  int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!done[static_cast<std::size_t>(v - 1)] &&
          (best == -1 || weight[static_cast<std::size_t>(v - 1)] > weight[static_cast<std::size_t>(best - 1)]))
        best = v;
    done[static_cast<std::size_t>(best - 1)] = true;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!done[static_cast<std::size_t>(w - 1)]) ++weight[static_cast<std::size_t>(w - 1)];
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  // G is chordal iff the MCS visit order, read as labels, is a perfect
  // elimination order: earlier neighbors of each vertex form a clique.
  return is_perfectly_labeled(mcs_relabeled(g));
}

Graph mcs_relabeled(const Graph& g) {
  auto order = mcs_order(g);
  std::vector<int> label(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    edges.emplace_back(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  return Graph(g.n(), std::move(edges));
}

// ---- EdgeOrdering ----------------------------------------------------------

EdgeOrdering::EdgeOrdering(const Graph& g, std::vector<Edge> order) : order_(std::move(order)) {
  if (order_.size() != g.edges().size()) throw InputError("edge ordering must cover E(G) exactly");
  std::vector<Edge> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges()) throw InputError("edge ordering is not a permutation of E(G)");
}

EdgeOrdering EdgeOrdering::lexicographic(const Graph& g) {
  return EdgeOrdering(g, g.edges());  // edges() is already sorted lexicographically
}

EdgeOrdering EdgeOrdering::colexicographic(const Graph& g) {
  std::vector<Edge> order = g.edges();
  std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  });
  return EdgeOrdering(g, std::move(order));
}

int EdgeOrdering::rank(const Edge& e) const {
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (order_[i] == e) return static_cast<int>(i);
  throw InputError("edge " + e.to_string() + " is not in the ordering");
}

// ---- corpus ----------------------------------------------------------------

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph k_even_odd(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if ((u + v) % 2 == 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

}  // namespace

Graph corpus(const std::string& name, std::optional<int> param) {
  if (name == "complete" || name == "k_even_odd") {
    if (!param) throw InputError("corpus graph '" + name + "' needs a size parameter");
    if (*param < 1 || *param > 32) throw InputError("corpus size parameter out of range");
    return name == "complete" ? complete_graph(*param) : k_even_odd(*param);
  }
  if (param) throw InputError("corpus graph '" + name + "' takes no parameter");
  if (name == "fig1_g") return from_pairs(6, {{1, 2}, {1, 6}, {1, 4}, {2, 3}, {3, 5}, {5, 6}});
  if (name == "fig3") return from_pairs(4, {{1, 3}, {2, 4}});
  if (name == "fig4_path") return from_pairs(6, {{1, 5}, {3, 5}, {1, 4}, {2, 4}, {2, 6}});
  if (name == "twisted_c4") return from_pairs(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  if (name == "star5") return from_pairs(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
  // fig4_path with edges 24 and 15 subdivided, new vertices relabeled clockwise
  if (name == "fig6_h") return from_pairs(8, {{1, 5}, {1, 8}, {2, 3}, {2, 7}, {3, 5}, {4, 6}, {6, 8}});
  if (name == "fig8_path") return from_pairs(4, {{1, 3}, {1, 2}, {2, 4}});
  if (name == "fig9_g")
    return from_pairs(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 5}, {5, 6}});
  if (name == "fig9_h")
    return from_pairs(6, {{1, 4}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  if (name == "fig12")
    return from_pairs(7, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 7}});
  // the 6-cycle 1-2-3-6-5-4-1 of the paper's final figure
  if (name == "twisted_c6") return from_pairs(6, {{1, 2}, {1, 4}, {2, 3}, {3, 6}, {4, 5}, {5, 6}});
  throw InputError("unknown corpus graph '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"fig1_g", "fig3",    "fig4_path", "twisted_c4", "star5",      "fig6_h",    "fig8_path",
          "fig9_g", "fig9_h",  "fig12",     "twisted_c6", "complete",   "k_even_odd"};
}

// ---- edge-list text format --------------------------------------------------

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) continue;  // blank or comment-only line before the header
      if (n < 1) throw InputError("vertex count must be positive (line " + std::to_string(lineno) + ")");
      int extra;
      if (ls >> extra) throw InputError("header line must contain n only (line " + std::to_string(lineno) + ")");
      continue;
    }
    int a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw InputError("expected two endpoints (line " + std::to_string(lineno) + ")");
    int extra;
    if (ls >> extra) throw InputError("expected exactly two endpoints (line " + std::to_string(lineno) + ")");
    if (a == b) throw InputError("loop edge (line " + std::to_string(lineno) + ")");
    edges.emplace_back(a, b);  // Edge constructor normalizes i < j
  }
  if (n < 0) throw InputError("missing vertex-count header line");
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

}  // namespace ncbond
