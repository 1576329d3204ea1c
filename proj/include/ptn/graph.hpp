#pragma once
// Simple undirected graphs. Two representations:
//   Graph      - up to 64 vertices, one adjacency word per row. Hot path for
//                search, canonical forms, detection.
//   LargeGraph - unbounded vertex count, blocked bit rows. Used by the
//                recursive constructions (n = 120k+50 exceeds 64 for k >= 1).
// Both expose the same word-level row interface so subgraph detection and
// profile code can be written once.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptn {

constexpr int kMaxN = 64;

struct Graph {
  int n = 0;
  int m = 0;
  std::array<uint64_t, kMaxN> adj{};

  static Graph empty(int n) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("Graph: vertex count out of range");
    Graph g;
    g.n = n;
    return g;
  }

  int size() const { return n; }
  int words() const { return 1; }
  const uint64_t* row(int v) const { return &adj[v]; }

  bool has(int u, int v) const { return (adj[u] >> v) & 1u; }
  int deg(int v) const { return std::popcount(adj[v]); }

  void add(int u, int v) {
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
    ++m;
  }
  void remove(int u, int v) {
    adj[u] &= ~(uint64_t(1) << v);
    adj[v] &= ~(uint64_t(1) << u);
    --m;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    uint64_t w = adj[v];
    while (w) {
      int u = std::countr_zero(w);
      out.push_back(u);
      w &= w - 1;
    }
    return out;
  }

  bool operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v)
      if (adj[v] != o.adj[v]) return false;
    return true;
  }
};

struct LargeGraph {
  int n = 0;
  int m = 0;
  int W = 0;  // words per row
  std::vector<uint64_t> bits;

  static LargeGraph empty(int n) {
    if (n < 0) throw std::invalid_argument("LargeGraph: negative vertex count");
    LargeGraph g;
    g.n = n;
    g.W = (n + 63) / 64;
    g.bits.assign(size_t(n) * g.W, 0);
    return g;
  }

  int size() const { return n; }
  int words() const { return W; }
  const uint64_t* row(int v) const { return bits.data() + size_t(v) * W; }
  uint64_t* row_mut(int v) { return bits.data() + size_t(v) * W; }

  bool has(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  int deg(int v) const {
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < W; ++w) d += std::popcount(r[w]);
    return d;
  }

  void add(int u, int v) {
    row_mut(u)[v >> 6] |= uint64_t(1) << (v & 63);
    row_mut(v)[u >> 6] |= uint64_t(1) << (u & 63);
    ++m;
  }
  void remove(int u, int v) {
    row_mut(u)[v >> 6] &= ~(uint64_t(1) << (v & 63));
    row_mut(v)[u >> 6] &= ~(uint64_t(1) << (u & 63));
    --m;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int w = 0; w < W; ++w) {
      uint64_t x = r[w];
      while (x) {
        out.push_back(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }
};

inline LargeGraph widen(const Graph& g) {
  LargeGraph h = LargeGraph::empty(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.neighbors(v))
      if (u > v) h.add(v, u);
  return h;
}

inline Graph narrow(const LargeGraph& g) {
  if (g.n > kMaxN) throw std::invalid_argument("graph too large for 64-vertex representation");
  Graph h = Graph::empty(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.neighbors(v))
      if (u > v) h.add(v, u);
  return h;
}

// --- structural predicates -------------------------------------------------

inline int min_degree(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("min_degree: empty graph");
  int d = g.n;
  for (int v = 0; v < g.n; ++v) d = std::min(d, g.deg(v));
  return d;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  uint64_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1u) continue;
    uint64_t comp = uint64_t(1) << s;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[v];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    std::vector<int> vs;
    uint64_t c = comp;
    while (c) {
      vs.push_back(std::countr_zero(c));
      c &= c - 1;
    }
    comps.push_back(std::move(vs));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  uint64_t comp = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v];
    }
    frontier = next & ~comp;
    comp |= frontier;
  }
  return std::popcount(comp) == g.n;
}

// Articulation vertices as a bitmask, iterative lowpoint DFS.
uint64_t articulation_points(const Graph& g);

inline bool is_two_connected(const Graph& g) {
  return g.n >= 3 && is_connected(g) && articulation_points(g) == 0;
}

// --- value-semantics mutation ops (the induction steps of the proofs) ------

inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("delete_vertex: invalid vertex id");
  Graph h = Graph::empty(g.n - 1);
  for (int a = 0; a < g.n; ++a) {
    if (a == v) continue;
    int a2 = a < v ? a : a - 1;
    for (int b : g.neighbors(a)) {
      if (b == v || b <= a) continue;
      int b2 = b < v ? b : b - 1;
      h.add(a2, b2);
    }
  }
  return h;
}

inline Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw std::invalid_argument("add_edge: invalid vertex id");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (g.has(u, v)) throw std::invalid_argument("add_edge: edge already present");
  Graph h = g;
  h.add(u, v);
  return h;
}

}  // namespace ptn
