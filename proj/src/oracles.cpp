#include "ncbond/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ncbond/errors.hpp"

namespace ncbond {

std::vector<std::vector<int>> oracle_J(const Graph& g, const Edge& e, const Edge& f) {
  if (g.n() > 10) throw SizeLimitError("oracle_J is limited to 10 vertices");
  if (!g.has_edge(e) || !g.has_edge(f)) throw InputError("oracle_J needs edges of the graph");
  std::uint32_t required = (1u << (e.u - 1)) | (1u << (e.v - 1)) | (1u << (f.u - 1)) | (1u << (f.v - 1));
  std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
  std::uint32_t optional_mask = all & ~required;

  std::vector<std::uint32_t> connected_candidates;
  // every vertex superset of the endpoints whose induced subgraph is connected
  std::uint32_t sub = 0;
  while (true) {
    std::uint32_t candidate = sub | required;
    if (g.induced_components(candidate).size() == 1) connected_candidates.push_back(candidate);
    if (sub == optional_mask) break;
    sub = (sub - optional_mask) & optional_mask;  // next subset of optional_mask
  }
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t c : connected_candidates) {
    bool is_min = true;
    for (std::uint32_t d : connected_candidates) {
      if (d != c && (d & c) == d) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<std::vector<int>> out;
  for (std::uint32_t m : minimal) {
    std::vector<int> vs;
    for (int v = 1; v <= g.n(); ++v)
      if ((m >> (v - 1)) & 1u) vs.push_back(v);
    out.push_back(std::move(vs));
  }
  return out;
}

namespace {

// reachability by plain depth-first search over the cover relation,
// independent of the poset engine's bit matrices
void oracle_descendants(const FinitePoset& p, int x, std::vector<char>& seen) {
  for (int d : p.lower_covers(x)) {
    if (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      oracle_descendants(p, d, seen);
    }
  }
}

}  // namespace

std::vector<std::int64_t> oracle_mobius(const FinitePoset& p) {
  auto bottom = p.minimal_elements();
  if (bottom.size() != 1) throw InputError("oracle_mobius needs a bottom element");
  int bot = bottom.front();
  std::vector<std::int64_t> memo(static_cast<std::size_t>(p.size()), 0);
  std::vector<char> have(static_cast<std::size_t>(p.size()), 0);
  std::function<std::int64_t(int)> mu = [&](int x) -> std::int64_t {
    if (have[static_cast<std::size_t>(x)]) return memo[static_cast<std::size_t>(x)];
    std::int64_t value;
    if (x == bot) {
      value = 1;
    } else {
      std::vector<char> below(static_cast<std::size_t>(p.size()), 0);
      oracle_descendants(p, x, below);
      std::int64_t acc = 0;
      for (int y = 0; y < p.size(); ++y)
        if (below[static_cast<std::size_t>(y)]) acc += mu(y);
      value = -acc;
    }
    have[static_cast<std::size_t>(x)] = 1;
    memo[static_cast<std::size_t>(x)] = value;
    return value;
  };
  std::vector<std::int64_t> out(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(x)] = mu(x);
  return out;
}

namespace {

struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Fraction operator+(const Fraction& o) const {
    Fraction r{num * o.den + o.num * den, den * o.den};
    r.reduce();
    return r;
  }
  Fraction operator*(const Fraction& o) const {
    Fraction r{num * o.num, den * o.den};
    r.reduce();
    return r;
  }
};

std::int64_t count_colorings(const Graph& g, int colors) {
  if (colors == 0) return g.n() == 0 ? 1 : 0;
  std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
  std::int64_t count = 0;
  // proper colorings by exhaustive assignment in vertex order
  std::function<void(int)> rec = [&](int v) {
    if (v > g.n()) {
      ++count;
      return;
    }
    for (int c = 1; c <= colors; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && color[static_cast<std::size_t>(w - 1)] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[static_cast<std::size_t>(v - 1)] = c;
        rec(v + 1);
      }
    }
    color[static_cast<std::size_t>(v - 1)] = 0;
  };
  rec(1);
  return count;
}

}  // namespace

Polynomial oracle_chromatic(const Graph& g) {
  if (g.n() > 9) throw SizeLimitError("oracle_chromatic is limited to 9 vertices");
  int n = g.n();
  // values at t = 0..n determine the degree-n polynomial
  std::vector<std::int64_t> values(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) values[static_cast<std::size_t>(t)] = count_colorings(g, t);

  // Lagrange interpolation with exact rationals
  std::vector<Fraction> coeffs(static_cast<std::size_t>(n) + 1, Fraction{});
  for (int i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (t - j) / (i - j), expanded incrementally
    std::vector<Fraction> basis{Fraction{1, 1}};
    __int128 denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      denom *= (i - j);
      std::vector<Fraction> next(basis.size() + 1, Fraction{});
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] = next[d + 1] + basis[d];
        next[d] = next[d] + basis[d] * Fraction{-j, 1};
      }
      basis = std::move(next);
    }
    Fraction scale{values[static_cast<std::size_t>(i)], denom};
    scale.reduce();
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] = coeffs[d] + basis[d] * scale;
  }
  std::vector<std::int64_t> out(coeffs.size());
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].den != 1)
      throw InternalError("chromatic interpolation produced a non-integer coefficient");
    out[d] = static_cast<std::int64_t>(coeffs[d].num);
  }
  return Polynomial(std::move(out));
}

bool oracle_lattice(const FinitePoset& p) {
  if (p.size() > 10000) throw SizeLimitError("oracle_lattice is limited to 10^4 elements");
  if (p.size() == 0) return false;
  int n = p.size();
  // its own reachability, one DFS per element
  std::vector<std::vector<char>> below(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x) oracle_descendants(p, x, below[static_cast<std::size_t>(x)]);
  auto leq = [&](int a, int b) { return a == b || below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> bounds;
        for (int x = 0; x < n; ++x) {
          bool is_bound = dir == 0 ? (leq(a, x) && leq(b, x)) : (leq(x, a) && leq(x, b));
          if (is_bound) bounds.push_back(x);
        }
        int extreme_count = 0;
        for (int x : bounds) {
          bool extreme = true;
          for (int y : bounds) {
            if (y == x) continue;
            // minimal upper bound for joins, maximal lower bound for meets
            if (dir == 0 ? leq(y, x) : leq(x, y)) {
              extreme = false;
              break;
            }
          }
          if (extreme) ++extreme_count;
        }
        if (extreme_count != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace ncbond
