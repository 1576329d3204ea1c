#include "ptn/graph.hpp"

namespace ptn {

uint64_t articulation_points(const Graph& g) {
  // Iterative Hopcroft-Tarjan lowpoint computation.
  std::array<int, kMaxN> disc{}, low{}, parent{}, child_count{};
  std::array<uint64_t, kMaxN> pending{};
  disc.fill(-1);
  parent.fill(-1);
  uint64_t cut = 0;
  int timer = 0;

  for (int root = 0; root < g.n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    pending[root] = g.adj[root];
    child_count[root] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      if (pending[v]) {
        int u = std::countr_zero(pending[v]);
        pending[v] &= pending[v] - 1;
        if (disc[u] == -1) {
          parent[u] = v;
          ++child_count[v];
          disc[u] = low[u] = timer++;
          pending[u] = g.adj[u];
          child_count[u] = 0;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut |= uint64_t(1) << p;
        }
      }
    }
    if (child_count[root] >= 2) cut |= uint64_t(1) << root;
  }
  return cut;
}

}  // namespace ptn
