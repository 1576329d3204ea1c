#include "ptn/planarity.hpp"

#include <algorithm>
#include <climits>

namespace ptn {

namespace {

// Biconnected components as edge lists, via the classic edge-stack DFS.
std::vector<std::vector<std::pair<int, int>>> blocks(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::array<int, kMaxN> disc{}, low{}, parent{};
  std::array<uint64_t, kMaxN> pending{};
  disc.fill(-1);
  parent.fill(-1);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    std::vector<std::pair<int, int>> blk;
    while (!estack.empty()) {
      auto e = estack.back();
      estack.pop_back();
      blk.push_back(e);
      if (e == std::make_pair(u, v)) break;
    }
    out.push_back(std::move(blk));
  };

  for (int root = 0; root < g.n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    pending[root] = g.adj[root];
    while (!stack.empty()) {
      int v = stack.back();
      if (pending[v]) {
        int u = std::countr_zero(pending[v]);
        pending[v] &= pending[v] - 1;
        if (disc[u] == -1) {
          estack.push_back({v, u});
          parent[u] = v;
          disc[u] = low[u] = timer++;
          pending[u] = g.adj[u];
          stack.push_back(u);
        } else if (u != parent[v] && disc[u] < disc[v]) {
          estack.push_back({v, u});
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) pop_block(p, v);
        }
      }
    }
  }
  return out;
}

struct BlockEmbedder {
  Graph b;  // local block graph
  int n;
  std::vector<std::vector<int>> walks;  // directed face walks
  uint64_t emb_v = 0;
  std::array<uint64_t, kMaxN> emb_e{};  // embedded edges, adjacency style

  explicit BlockEmbedder(const Graph& blk) : b(blk), n(blk.n) {}

  bool edge_embedded(int u, int v) const { return (emb_e[u] >> v) & 1u; }
  void mark_edge(int u, int v) {
    emb_e[u] |= uint64_t(1) << v;
    emb_e[v] |= uint64_t(1) << u;
  }

  std::vector<int> initial_cycle() {
    // recursive-order DFS so every non-tree edge leads to an ancestor
    std::array<int, kMaxN> parent{};
    std::array<uint64_t, kMaxN> pend{};
    parent.fill(-1);
    std::vector<int> st{0};
    uint64_t seen = 1;
    pend[0] = b.adj[0];
    while (!st.empty()) {
      int v = st.back();
      if (!pend[v]) {
        st.pop_back();
        continue;
      }
      int u = std::countr_zero(pend[v]);
      pend[v] &= pend[v] - 1;
      if (!((seen >> u) & 1u)) {
        seen |= uint64_t(1) << u;
        parent[u] = v;
        pend[u] = b.adj[u];
        st.push_back(u);
      } else if (u != parent[v]) {
        std::vector<int> cyc;
        for (int x = v; x != u; x = parent[x]) cyc.push_back(x);
        cyc.push_back(u);
        return cyc;
      }
    }
    return {};  // unreachable in a 2-connected block
  }

  // returns false iff some fragment has no admissible face
  bool run(std::string& why) {
    std::vector<int> cyc = initial_cycle();
    if (cyc.size() < 3) {
      why = "block has no cycle";
      return false;
    }
    walks.push_back(cyc);
    std::reverse(cyc.begin(), cyc.end());
    walks.push_back(cyc);
    for (size_t i = 0; i < walks[0].size(); ++i) {
      int u = walks[0][i], v = walks[0][(i + 1) % walks[0].size()];
      emb_v |= (uint64_t(1) << u) | (uint64_t(1) << v);
      mark_edge(u, v);
    }

    struct Fragment {
      std::vector<int> attach;  // embedded attachment vertices
      uint64_t attach_mask = 0;
      uint64_t interior = 0;  // component vertices (empty for a chord)
      int cu = -1, cv = -1;   // chord endpoints when interior empty
    };

    while (true) {
      // remaining edge count check
      bool done = true;
      for (int v = 0; v < n && done; ++v)
        if (b.adj[v] & ~emb_e[v]) done = false;
      if (done) break;

      std::vector<Fragment> frags;
      for (int u = 0; u < n; ++u) {
        uint64_t rest = b.adj[u] & ~emb_e[u];
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          if (v < u) continue;
          if (((emb_v >> u) & 1u) && ((emb_v >> v) & 1u)) {
            Fragment f;
            f.attach = {u, v};
            f.attach_mask = (uint64_t(1) << u) | (uint64_t(1) << v);
            f.cu = u;
            f.cv = v;
            frags.push_back(std::move(f));
          }
        }
      }
      uint64_t unemb = ~emb_v & ((n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1));
      uint64_t todo = unemb;
      while (todo) {
        int s = std::countr_zero(todo);
        uint64_t comp = uint64_t(1) << s;
        uint64_t frontier = comp;
        while (frontier) {
          uint64_t next = 0;
          uint64_t f = frontier;
          while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= b.adj[v];
          }
          frontier = next & unemb & ~comp;
          comp |= frontier;
        }
        todo &= ~comp;
        Fragment fr;
        fr.interior = comp;
        uint64_t att = 0;
        uint64_t c = comp;
        while (c) {
          int v = std::countr_zero(c);
          c &= c - 1;
          att |= b.adj[v] & emb_v;
        }
        fr.attach_mask = att;
        while (att) {
          fr.attach.push_back(std::countr_zero(att));
          att &= att - 1;
        }
        frags.push_back(std::move(fr));
      }

      // admissible faces per fragment
      std::vector<uint64_t> face_mask(walks.size(), 0);
      for (size_t i = 0; i < walks.size(); ++i)
        for (int v : walks[i]) face_mask[i] |= uint64_t(1) << v;

      int best_frag = -1, best_count = INT_MAX, best_face = -1;
      for (size_t fi = 0; fi < frags.size(); ++fi) {
        int count = 0, firstface = -1;
        for (size_t i = 0; i < walks.size(); ++i)
          if ((frags[fi].attach_mask & ~face_mask[i]) == 0) {
            ++count;
            if (firstface < 0) firstface = int(i);
          }
        if (count == 0) {
          why = "a bridge fragment with attachments {";
          for (size_t a = 0; a < frags[fi].attach.size(); ++a)
            why += (a ? "," : "") + std::to_string(frags[fi].attach[a]);
          why += "} fits in no face; the block contains a K5 or K3,3 subdivision";
          return false;
        }
        if (count < best_count) {
          best_count = count;
          best_frag = int(fi);
          best_face = firstface;
        }
      }

      const Fragment& fr = frags[best_frag];
      std::vector<int> path;
      if (fr.interior == 0) {
        path = {fr.cu, fr.cv};
      } else {
        int a = fr.attach[0];
        // BFS through the fragment interior from a to another attachment
        std::array<int, kMaxN> par{};
        par.fill(-2);
        std::vector<int> queue;
        uint64_t start = b.adj[a] & fr.interior;
        uint64_t qmask = start;
        while (start) {
          int v = std::countr_zero(start);
          start &= start - 1;
          par[v] = -1;  // roots, parent is a
          queue.push_back(v);
        }
        int endv = -1, endb = -1;
        for (size_t qi = 0; qi < queue.size() && endv < 0; ++qi) {
          int v = queue[qi];
          uint64_t outside = b.adj[v] & emb_v & ~(uint64_t(1) << a);
          if (outside) {
            endv = v;
            endb = std::countr_zero(outside);
            break;
          }
          uint64_t nb = b.adj[v] & fr.interior & ~qmask;
          while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            qmask |= uint64_t(1) << u;
            par[u] = v;
            queue.push_back(u);
          }
        }
        if (endv < 0) {
          why = "fragment has a single attachment; block not 2-connected";
          return false;
        }
        std::vector<int> rev{endb};
        for (int x = endv; x != -1; x = par[x]) rev.push_back(x);
        rev.push_back(a);
        path.assign(rev.rbegin(), rev.rend());
      }

      // split the chosen face along the path
      std::vector<int> W = walks[best_face];
      int m = int(W.size());
      int ia = -1, ib = -1;
      for (int i = 0; i < m; ++i) {
        if (W[i] == path.front()) ia = i;
        if (W[i] == path.back()) ib = i;
      }
      std::vector<int> arc1, arc2;
      for (int i = ia;; i = (i + 1) % m) {
        arc1.push_back(W[i]);
        if (i == ib) break;
      }
      for (int i = ib;; i = (i + 1) % m) {
        arc2.push_back(W[i]);
        if (i == ia) break;
      }
      std::vector<int> f1 = arc1, f2 = arc2;
      for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
      for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
      walks[best_face] = std::move(f1);
      walks.push_back(std::move(f2));
      for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
      for (int v : path) emb_v |= uint64_t(1) << v;
    }
    return true;
  }
};

}  // namespace

PlanarityResult test_planarity(const Graph& g) {
  PlanarityResult res;
  std::vector<std::vector<int>> rot(g.n);

  for (const auto& blk_edges : blocks(g)) {
    if (blk_edges.size() == 1) {
      auto [u, v] = blk_edges[0];
      rot[u].push_back(v);
      rot[v].push_back(u);
      continue;
    }
    std::vector<int> verts;
    for (auto [u, v] : blk_edges) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::array<int, kMaxN> local{};
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
    Graph b = Graph::empty(int(verts.size()));
    for (auto [u, v] : blk_edges) b.add(local[u], local[v]);

    BlockEmbedder be(b);
    std::string why;
    if (!be.run(why)) {
      res.planar = false;
      res.note = "nonplanar: " + why + " (block on " + std::to_string(verts.size()) + " vertices)";
      return res;
    }
    auto brot = rotations_from_faces(b.n, be.walks);
    for (size_t i = 0; i < verts.size(); ++i)
      for (int u : brot[i]) rot[verts[i]].push_back(verts[int(u)]);
  }

  res.planar = true;
  res.embedding.g = g;
  res.embedding.rot = std::move(rot);
  res.embedding.outer = 0;
  auto fl = faces(res.embedding);
  size_t besti = 0;
  for (size_t i = 1; i < fl.size(); ++i)
    if (fl[i].size() > fl[besti].size()) besti = i;
  if (!fl.empty()) res.embedding.outer = int(besti);
  return res;
}

}  // namespace ptn
