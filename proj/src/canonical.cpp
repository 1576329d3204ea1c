#include "ptn/canonical.hpp"

#include <algorithm>

#include "ptn/graph6.hpp"

namespace ptn {

namespace {

constexpr size_t kGenCap = 128;

struct UnionFind {
  std::array<uint8_t, kMaxN> p{};
  void init(int n) {
    for (int i = 0; i < n; ++i) p[i] = uint8_t(i);
  }
  int find(int x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = uint8_t(std::min(a, b));
  }
};

using Perm = std::array<uint8_t, kMaxN>;

struct AutAccumulator {
  int n;
  std::vector<Perm> gens;
  UnionFind global;

  explicit AutAccumulator(int n) : n(n) { global.init(n); }

  // sigma maps lab_a[i] -> lab_b[i]; equal leaf codes certify it is an automorphism
  void harvest(const Perm& lab_a, const Perm& lab_b) {
    Perm sigma;
    bool ident = true;
    for (int i = 0; i < n; ++i) {
      sigma[lab_a[i]] = lab_b[i];
      if (lab_a[i] != lab_b[i]) ident = false;
    }
    if (ident) return;
    for (int v = 0; v < n; ++v) global.unite(v, sigma[v]);
    if (gens.size() < kGenCap) gens.push_back(sigma);
  }

  std::vector<int> orbits() {
    std::vector<int> rep(n, 0);
    std::vector<int> least(n, -1);
    for (int v = 0; v < n; ++v) {
      int r = global.find(v);
      if (least[r] < 0) least[r] = v;  // ascending scan: first hit is the minimum
      rep[v] = least[r];
    }
    return rep;
  }
};

// Union-find over candidates, restricted to generators fixing fixed[0..k) pointwise.
void build_local_orbits(UnionFind& uf, int n, const std::vector<Perm>& gens, const Perm& fixed, int k) {
  uf.init(n);
  for (const Perm& s : gens) {
    bool ok = true;
    for (int i = 0; i < k; ++i)
      if (s[fixed[i]] != fixed[i]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int v = 0; v < n; ++v) uf.unite(v, s[v]);
  }
}

struct LexMinEngine {
  const Graph& g;
  int n;
  AutAccumulator aut;
  std::vector<uint64_t> cols;
  std::vector<uint64_t> best;
  Perm placed{};
  Perm bestlab{};
  uint64_t placed_mask = 0;
  bool have = false;

  explicit LexMinEngine(const Graph& g) : g(g), n(g.n), aut(g.n), cols(g.n, 0), best(g.n, 0) {}

  uint64_t colval(int v, int p) const {
    uint64_t c = 0;
    for (int i = 0; i < p; ++i) c = (c << 1) | uint64_t(g.has(v, placed[i]));
    return c;
  }

  // lt: current prefix is already strictly below best. Returns true if best
  // was replaced somewhere in this subtree.
  bool dive(int p, bool lt) {
    if (p == n) {
      if (!have || lt) {
        best = cols;
        bestlab = placed;
        have = true;
        return true;
      }
      aut.harvest(bestlab, placed);
      return false;
    }
    struct Cand {
      uint64_t cv;
      uint8_t v;
    };
    std::vector<Cand> cands;
    cands.reserve(n - p);
    for (int v = 0; v < n; ++v)
      if (!((placed_mask >> v) & 1u)) cands.push_back({colval(v, p), uint8_t(v)});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.cv != b.cv ? a.cv < b.cv : a.v < b.v;
    });

    bool improved = false;
    std::vector<uint8_t> tried;
    UnionFind local;
    size_t mark = SIZE_MAX;
    for (const Cand& c : cands) {
      bool clt = lt;
      if (!clt && have) {
        if (c.cv > best[p]) break;  // ascending order: nothing later can match
        clt = c.cv < best[p];
      }
      if (!tried.empty()) {
        if (mark != aut.gens.size()) {
          build_local_orbits(local, n, aut.gens, placed, p);
          mark = aut.gens.size();
        }
        bool skip = false;
        for (uint8_t t : tried)
          if (local.find(t) == local.find(c.v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      placed[p] = c.v;
      placed_mask |= uint64_t(1) << c.v;
      cols[p] = c.cv;
      bool child = dive(p + 1, clt);
      placed_mask &= ~(uint64_t(1) << c.v);
      if (child) {
        improved = true;
        lt = false;  // new best runs through this node, prefix now coincides
      }
      tried.push_back(c.v);
    }
    return improved;
  }
};

// --- equitable refinement engine -------------------------------------------

using Cells = std::vector<std::vector<uint8_t>>;

void refine(const Graph& g, Cells& cells) {
  std::array<uint8_t, kMaxN> color{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < cells.size(); ++ci)
      for (uint8_t v : cells[ci]) color[v] = uint8_t(ci);
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      struct Tagged {
        std::vector<uint16_t> sig;
        uint8_t v;
      };
      std::vector<Tagged> tag;
      tag.reserve(cell.size());
      for (uint8_t v : cell) {
        std::vector<uint16_t> sig(cells.size(), 0);
        uint64_t w = g.adj[v];
        while (w) {
          int u = std::countr_zero(w);
          w &= w - 1;
          ++sig[color[u]];
        }
        tag.push_back({std::move(sig), v});
      }
      std::stable_sort(tag.begin(), tag.end(), [](const Tagged& a, const Tagged& b) {
        return a.sig != b.sig ? a.sig < b.sig : a.v < b.v;
      });
      size_t i = 0;
      while (i < tag.size()) {
        size_t j = i;
        while (j < tag.size() && tag[j].sig == tag[i].sig) ++j;
        std::vector<uint8_t> part;
        for (size_t k = i; k < j; ++k) part.push_back(tag[k].v);
        if (part.size() != cell.size()) changed = true;
        next.push_back(std::move(part));
        i = j;
      }
    }
    cells = std::move(next);
  }
}

struct RefinedEngine {
  const Graph& g;
  int n;
  AutAccumulator aut;
  std::vector<uint64_t> best, first, leafcols;
  Perm bestlab{}, firstlab{};
  Perm path{};  // individualized vertices, outermost first
  bool have = false, have_first = false;

  explicit RefinedEngine(const Graph& g) : g(g), n(g.n), aut(g.n), best(g.n, 0), first(g.n, 0), leafcols(g.n, 0) {}

  void leaf(const Cells& cells) {
    Perm lab{};
    for (int i = 0; i < n; ++i) lab[i] = cells[i][0];
    for (int p = 0; p < n; ++p) {
      uint64_t c = 0;
      for (int i = 0; i < p; ++i) c = (c << 1) | uint64_t(g.has(lab[i], lab[p]));
      leafcols[p] = c;
    }
    if (!have_first) {
      first = leafcols;
      firstlab = lab;
      have_first = true;
    } else if (leafcols == first) {
      aut.harvest(firstlab, lab);
    }
    if (!have || leafcols < best) {
      best = leafcols;
      bestlab = lab;
      have = true;
    } else if (leafcols == best) {
      aut.harvest(bestlab, lab);
    }
  }

  void dive(Cells cells, int depth) {
    refine(g, cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<uint8_t> tried;
    UnionFind local;
    size_t mark = SIZE_MAX;
    for (uint8_t v : cells[target]) {
      if (!tried.empty()) {
        if (mark != aut.gens.size()) {
          build_local_orbits(local, n, aut.gens, path, depth);
          mark = aut.gens.size();
        }
        bool skip = false;
        for (uint8_t t : tried)
          if (local.find(t) == local.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < target; ++i) child.push_back(cells[i]);
      child.push_back({v});
      std::vector<uint8_t> rest;
      for (uint8_t u : cells[target])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      path[depth] = v;
      dive(std::move(child), depth + 1);
      tried.push_back(v);
    }
  }
};

}  // namespace

uint64_t canonical_hash(const CanonicalForm& f) {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(f.n);
  for (uint64_t c : f.cols) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Graph from_canonical(const CanonicalForm& f) {
  Graph g = Graph::empty(f.n);
  for (int p = 0; p < f.n; ++p)
    for (int i = 0; i < p; ++i)
      if ((f.cols[p] >> (p - 1 - i)) & 1u) g.add(i, p);
  return g;
}

CanonResult canonical_form(const Graph& g) {
  CanonResult r;
  r.form.n = g.n;
  if (g.n == 0) {
    return r;
  }
  LexMinEngine e(g);
  e.dive(0, false);
  r.form.cols = std::move(e.best);
  r.labeling = e.bestlab;
  r.orbit = e.aut.orbits();
  r.generators = e.aut.gens.size();
  return r;
}

CanonResult refined_canonical(const Graph& g) {
  CanonResult r;
  r.form.n = g.n;
  if (g.n == 0) return r;
  RefinedEngine e(g);
  Cells init(1);
  for (int v = 0; v < g.n; ++v) init[0].push_back(uint8_t(v));
  e.dive(std::move(init), 0);
  r.form.cols = std::move(e.best);
  r.labeling = e.bestlab;
  r.orbit = e.aut.orbits();
  r.generators = e.aut.gens.size();
  return r;
}

std::string canonical_g6(const Graph& g) {
  return graph6_encode(from_canonical(canonical_form(g).form));
}

}  // namespace ptn
