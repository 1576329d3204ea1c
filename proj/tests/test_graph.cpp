#include <random>
#include <set>

#include "doctest.h"
#include "ptn/graph.hpp"

using namespace ptn;

namespace {

Graph path(int n) {
  Graph g{};
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.add(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add(n - 1, 0);
  return g;
}

int comp_count_skipping(const Graph& g, int skip) {
  std::vector<char> seen(g.n, 0);
  int c = 0;
  for (int s = 0; s < g.n; ++s) {
    if (s == skip || seen[s]) continue;
    ++c;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : g.neighbors(u)) {
        if (w == skip || seen[w]) continue;
        seen[w] = 1;
        st.push_back(w);
      }
    }
  }
  return c;
}

// quadratic reference: v cuts iff its removal raises the component count
bool naive_cut(const Graph& g, int v) {
  return comp_count_skipping(g, v) > comp_count_skipping(g, -1) - (g.deg(v) == 0 ? 1 : 0);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("degrees, adjacency, edge count") {
    Graph g{};
    g.n = 5;
    g.add(0, 1);
    g.add(1, 2);
    g.add(0, 2);
    CHECK(g.m == 3);
    CHECK(g.has(1, 0));
    CHECK(!g.has(0, 3));
    CHECK(g.deg(1) == 2);
    CHECK(g.deg(4) == 0);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    g.remove(0, 1);
    CHECK(g.m == 2);
    CHECK(!g.has(0, 1));
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(path(6)));
    Graph g = path(3);
    g.n = 5;  // two extra isolated vertices
    CHECK(!is_connected(g));
    CHECK(components(g).size() == 3);
    CHECK(components(cycle(7)).size() == 1);
    Graph e{};
    e.n = 1;
    CHECK(is_connected(e));
  }

  TEST_CASE("articulation points on known shapes") {
    // path: every interior vertex cuts
    uint64_t cut = articulation_points(path(5));
    CHECK(cut == ((1u << 1) | (1u << 2) | (1u << 3)));
    // cycle: none
    CHECK(articulation_points(cycle(6)) == 0);
    // two triangles sharing a vertex
    Graph g{};
    g.n = 5;
    g.add(0, 1);
    g.add(1, 2);
    g.add(2, 0);
    g.add(2, 3);
    g.add(3, 4);
    g.add(4, 2);
    CHECK(articulation_points(g) == (1u << 2));
    CHECK(!is_two_connected(g));
    CHECK(is_two_connected(cycle(4)));
  }

  TEST_CASE("articulation points match the quadratic reference") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 400; ++trial) {
      int n = 2 + int(rng() % 9);
      Graph g{};
      g.n = n;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 100 < 30) g.add(u, v);
      uint64_t cut = articulation_points(g);
      for (int v = 0; v < n; ++v) CHECK(bool(cut >> v & 1) == naive_cut(g, v));
    }
  }

  TEST_CASE("vertex deletion relabels the tail") {
    Graph g = cycle(5);
    Graph h = delete_vertex(g, 2);
    CHECK(h.n == 4);
    CHECK(h.m == 3);
    // old 3,4 became 2,3; the path 3-4-0-1 survives
    CHECK(h.has(2, 3));
    CHECK(h.has(3, 0));
    CHECK(h.has(0, 1));
    CHECK(!h.has(1, 2));
    CHECK_THROWS_AS(delete_vertex(g, 9), std::invalid_argument);
  }

  TEST_CASE("add_edge validates") {
    Graph g = path(3);
    CHECK_THROWS_AS(add_edge(g, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(g, 0, 3), std::invalid_argument);
    Graph h = add_edge(g, 0, 2);
    CHECK(h.m == 3);
  }

  TEST_CASE("widen and narrow round trip") {
    Graph g = cycle(9);
    g.add(0, 4);
    LargeGraph lg = widen(g);
    CHECK(lg.n == 9);
    CHECK(lg.m == 10);
    CHECK(lg.has(0, 4));
    Graph back = narrow(lg);
    CHECK(back == g);
  }

  TEST_CASE("large graphs cross word boundaries") {
    LargeGraph g = LargeGraph::empty(130);
    g.add(0, 129);
    g.add(63, 64);
    g.add(64, 128);
    CHECK(g.has(129, 0));
    CHECK(g.has(64, 63));
    CHECK(g.deg(64) == 2);
    CHECK(g.m == 3);
    g.remove(64, 128);
    CHECK(g.m == 2);
    CHECK(!g.has(128, 64));
  }

  TEST_CASE("min_degree") {
    CHECK(min_degree(cycle(5)) == 2);
    CHECK(min_degree(path(5)) == 1);
    Graph g{};
    CHECK_THROWS_AS(min_degree(g), std::invalid_argument);
  }
}
