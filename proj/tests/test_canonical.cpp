#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ptn/canonical.hpp"
#include "ptn/graph6.hpp"

using namespace ptn;

namespace {

Graph random_graph(int n, int pct, std::mt19937_64& rng) {
  Graph g = Graph::empty(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (int(rng() % 100) < pct) g.add(u, v);
  return g;
}

Graph apply_labeling(const Graph& g, const std::vector<int>& lab) {
  // lab[position] = original vertex
  Graph h = Graph::empty(g.n);
  for (int p = 0; p < g.n; ++p)
    for (int q = p + 1; q < g.n; ++q)
      if (g.has(lab[p], lab[q])) h.add(p, q);
  return h;
}

// minimum graph6 string over all n! relabelings
std::string brute_min_g6(const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = graph6_encode(apply_labeling(g, perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// orbit partition from the full automorphism group, least member per vertex
std::vector<int> brute_orbits(const Graph& g) {
  std::vector<int> rep(g.n);
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool aut = true;
    for (int v = 0; v < g.n && aut; ++v)
      for (int u = v + 1; u < g.n && aut; ++u)
        if (g.has(u, v) != g.has(perm[u], perm[v])) aut = false;
    if (aut)
      for (int v = 0; v < g.n; ++v) {
        int a = find(v), b = find(perm[v]);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = find(v);
  return out;
}

Graph from_mask(int n, uint32_t mask) {
  Graph g = Graph::empty(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (mask >> bit & 1) g.add(u, v);
  return g;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("lex-min code equals the all-permutations minimum") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 250; ++trial) {
      int n = 1 + int(rng() % 6);
      Graph g = random_graph(n, 10 + int(rng() % 80), rng);
      CHECK(canonical_g6(g) == brute_min_g6(g));
    }
    // a couple of 7 vertex ones, where the permutation oracle is slower
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_graph(7, 10 + int(rng() % 80), rng);
      CHECK(canonical_g6(g) == brute_min_g6(g));
    }
  }

  TEST_CASE("labeling reproduces the form and the form reproduces a graph") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 1 + int(rng() % 8);
      Graph g = random_graph(n, 10 + int(rng() % 80), rng);
      CanonResult r = canonical_form(g);
      std::vector<int> lab(r.labeling.begin(), r.labeling.begin() + n);
      Graph relab = apply_labeling(g, lab);
      CHECK(graph6_encode(relab) == canonical_g6(g));
      CHECK(from_canonical(r.form) == relab);
      // canonizing the canonical graph is the identity on forms
      CHECK(canonical_form(relab).form == r.form);
    }
  }

  TEST_CASE("class counts over all labeled graphs match the literature") {
    // 11, 34, 156 isomorphism classes on 4, 5, 6 vertices
    const long long expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 4; n <= 6; ++n) {
      std::set<std::string> lex_classes;
      std::set<CanonicalForm> ref_classes;
      uint32_t total = uint32_t(1) << (n * (n - 1) / 2);
      for (uint32_t mask = 0; mask < total; ++mask) {
        Graph g = from_mask(n, mask);
        lex_classes.insert(canonical_g6(g));
        ref_classes.insert(refined_canonical(g).form);
      }
      CHECK((long long)lex_classes.size() == expected[n]);
      CHECK((long long)ref_classes.size() == expected[n]);
    }
  }

  TEST_CASE("the two engines induce the same partition on six vertices") {
    std::map<CanonicalForm, std::string> ref_to_lex;
    std::map<std::string, CanonicalForm> lex_to_ref;
    for (uint32_t mask = 0; mask < (uint32_t(1) << 15); ++mask) {
      Graph g = from_mask(6, mask);
      std::string lex = canonical_g6(g);
      CanonicalForm ref = refined_canonical(g).form;
      auto [it1, new1] = ref_to_lex.emplace(ref, lex);
      CHECK(it1->second == lex);
      auto [it2, new2] = lex_to_ref.emplace(lex, ref);
      CHECK(it2->second == ref);
    }
  }

  TEST_CASE("refined engine fully merges isomorphism classes on seven vertices") {
    // 1044 classes; an incomplete canonizer would overshoot
    std::set<CanonicalForm> classes;
    for (uint32_t mask = 0; mask < (uint32_t(1) << 21); ++mask)
      classes.insert(refined_canonical(from_mask(7, mask)).form);
    CHECK(classes.size() == 1044);
  }

  TEST_CASE("orbits match the brute force automorphism group") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      int n = 1 + int(rng() % 6);
      Graph g = random_graph(n, 10 + int(rng() % 80), rng);
      std::vector<int> want = brute_orbits(g);
      CHECK(canonical_form(g).orbit == want);
      CHECK(refined_canonical(g).orbit == want);
    }
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(7, 20 + int(rng() % 60), rng);
      std::vector<int> want = brute_orbits(g);
      CHECK(canonical_form(g).orbit == want);
      CHECK(refined_canonical(g).orbit == want);
    }
  }

  TEST_CASE("hashes separate all small classes") {
    std::set<std::string> classes;
    std::set<uint64_t> hashes;
    for (int n = 0; n <= 5; ++n) {
      uint32_t total = uint32_t(1) << (n * (n - 1) / 2);
      for (uint32_t mask = 0; mask < total; ++mask) {
        CanonResult r = canonical_form(from_mask(n, mask));
        classes.insert(graph6_encode(from_canonical(r.form)));
        hashes.insert(canonical_hash(r.form));
      }
    }
    CHECK(classes.size() == hashes.size());  // 1+1+2+4+11+34 = 53, no collisions
  }
}
