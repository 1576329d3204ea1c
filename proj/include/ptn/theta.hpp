#pragma once
// Detection of forbidden subgraphs: k-cycles, theta graphs (a k-cycle plus a
// chord, any chord position), and K5 minus an edge. Everything is subgraph
// containment, not induced.
//
// The incremental entry points assume the host was free before the last
// edge / vertex arrived, so only copies through the new element are searched.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptn/graph.hpp"

namespace ptn {

enum class PatternKind { cycle, theta, k5_minus };

struct FamilyMember {
  PatternKind kind;
  int k = 0;  // cycle length for cycle/theta
  std::string label;
};

struct ForbiddenFamily {
  std::string tag;
  std::vector<FamilyMember> members;
  static ForbiddenFamily from_tag(const std::string& tag);
  static std::vector<std::string> known_tags();
};

struct PatternWitness {
  std::string member;
  std::vector<int> cycle;  // in cyclic order; empty for k5 minus an edge
  int chord_u = -1, chord_v = -1;
  std::vector<int> vertices;  // every vertex of the copy
};

// All distinct theta patterns on a k-cycle: chord between vertices at cycle
// distance d for d = 2 .. floor(k/2).
std::vector<Graph> theta_variants(int k);

namespace detail {

constexpr int kMaxCycle = 16;

template <class G>
bool in_path(const int* path, int len, int v) {
  for (int i = 0; i < len; ++i)
    if (path[i] == v) return true;
  return false;
}

template <class G, class F>
bool cycle_dfs(const G& g, int* path, int depth, int k, bool min_anchor, F& visit) {
  // path[0..depth) fixed; grow to k vertices, then close to path[0].
  if (depth == k) {
    if (!g.has(path[k - 1], path[0])) return false;
    if (path[1] > path[k - 1]) return false;  // one orientation per cycle
    return visit(path, k);
  }
  int last = path[depth - 1];
  const uint64_t* row = g.row(last);
  for (int w = 0; w < g.words(); ++w) {
    uint64_t bits = row[w];
    while (bits) {
      int u = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (min_anchor && u <= path[0]) continue;
      if (in_path<G>(path, depth, u)) continue;
      path[depth] = u;
      if (cycle_dfs(g, path, depth + 1, k, min_anchor, visit)) return true;
    }
  }
  return false;
}

// visit(path, k) over all k-cycles whose minimum vertex is the anchor,
// anchors ascending; stops when visit returns true.
template <class G, class F>
bool for_all_cycles(const G& g, int k, F visit) {
  if (k < 3 || k > kMaxCycle || g.size() < k) return false;
  int path[kMaxCycle];
  for (int v = 0; v + k <= g.size(); ++v) {
    path[0] = v;
    if (cycle_dfs(g, path, 1, k, true, visit)) return true;
  }
  return false;
}

// visit over all k-cycles containing the vertex r (listed first in path).
template <class G, class F>
bool for_cycles_through(const G& g, int r, int k, F visit) {
  if (k < 3 || k > kMaxCycle || g.size() < k) return false;
  int path[kMaxCycle];
  path[0] = r;
  return cycle_dfs(g, path, 1, k, false, visit);
}

template <class G>
bool find_chord(const G& g, const int* c, int k, int& cu, int& cv) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has(c[i], c[j])) {
        cu = c[i];
        cv = c[j];
        return true;
      }
    }
  return false;
}

}  // namespace detail

template <class G>
std::optional<std::vector<int>> find_cycle(const G& g, int k) {
  std::optional<std::vector<int>> out;
  detail::for_all_cycles(g, k, [&](const int* c, int kk) {
    out = std::vector<int>(c, c + kk);
    return true;
  });
  return out;
}

template <class G>
std::optional<PatternWitness> find_theta(const G& g, int k) {
  std::optional<PatternWitness> out;
  detail::for_all_cycles(g, k, [&](const int* c, int kk) {
    int cu, cv;
    if (!detail::find_chord(g, c, kk, cu, cv)) return false;
    PatternWitness w;
    w.member = "theta" + std::to_string(kk);
    w.cycle.assign(c, c + kk);
    w.chord_u = cu;
    w.chord_v = cv;
    w.vertices = w.cycle;
    out = std::move(w);
    return true;
  });
  return out;
}

template <class G>
std::optional<PatternWitness> find_k5_minus(const G& g) {
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      auto common = [&](int u, int v, std::vector<int>& out) {
        out.clear();
        for (int w = 0; w < g.words(); ++w) {
          uint64_t bits = g.row(u)[w] & g.row(v)[w];
          while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
          }
        }
      };
      std::vector<int> cn;
      common(a, b, cn);
      for (size_t i = 0; i < cn.size(); ++i)
        for (size_t j = i + 1; j < cn.size(); ++j) {
          int x = cn[i], y = cn[j];
          if (!g.has(x, y)) continue;
          // {a,b,x,y} is a K4; any fifth vertex adjacent to at least three of
          // them closes a K5 minus at most one edge
          for (int v = 0; v < n; ++v) {
            if (v == a || v == b || v == x || v == y) continue;
            int d = int(g.has(v, a)) + int(g.has(v, b)) + int(g.has(v, x)) + int(g.has(v, y));
            if (d >= 3) {
              PatternWitness w;
              w.member = "k5-";
              w.vertices = {a, b, x, y, v};
              return w;
            }
          }
        }
    }
  return std::nullopt;
}

template <class G>
std::optional<PatternWitness> find_forbidden(const G& g, const ForbiddenFamily& fam) {
  for (const FamilyMember& m : fam.members) {
    switch (m.kind) {
      case PatternKind::cycle: {
        if (auto c = find_cycle(g, m.k)) {
          PatternWitness w;
          w.member = m.label;
          w.cycle = *c;
          w.vertices = *c;
          return w;
        }
        break;
      }
      case PatternKind::theta: {
        if (auto w = find_theta(g, m.k)) {
          w->member = m.label;
          return w;
        }
        break;
      }
      case PatternKind::k5_minus: {
        if (auto w = find_k5_minus(g)) return w;
        break;
      }
    }
  }
  return std::nullopt;
}

template <class G>
bool is_family_free(const G& g, const ForbiddenFamily& fam) {
  return !find_forbidden(g, fam).has_value();
}

// --- incremental checks (search hot path, 64-vertex graphs) -----------------

// g already contains edge (u,v); everything else was family-free.
bool free_after_edge_addition(const Graph& g, int u, int v, const ForbiddenFamily& fam);

// g already contains vertex v and its edges; g minus v was family-free.
bool free_after_vertex_addition(const Graph& g, int v, const ForbiddenFamily& fam);

}  // namespace ptn
