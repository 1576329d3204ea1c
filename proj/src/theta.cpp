#include "ptn/theta.hpp"

#include <stdexcept>

namespace ptn {

ForbiddenFamily ForbiddenFamily::from_tag(const std::string& tag) {
  ForbiddenFamily f;
  f.tag = tag;
  auto theta = [](int k) { return FamilyMember{PatternKind::theta, k, "theta" + std::to_string(k)}; };
  auto cyc = [](int k) { return FamilyMember{PatternKind::cycle, k, "c" + std::to_string(k)}; };
  if (tag == "theta4") f.members = {theta(4)};
  else if (tag == "theta5") f.members = {theta(5)};
  else if (tag == "theta6") f.members = {theta(6)};
  else if (tag == "c4") f.members = {cyc(4)};
  else if (tag == "c5") f.members = {cyc(5)};
  else if (tag == "c6") f.members = {cyc(6)};
  else if (tag == "theta6+k5m") f.members = {theta(6), FamilyMember{PatternKind::k5_minus, 0, "k5-"}};
  else throw std::invalid_argument("unknown family tag: " + tag);
  return f;
}

std::vector<std::string> ForbiddenFamily::known_tags() {
  return {"theta4", "theta5", "theta6", "c4", "c5", "c6", "theta6+k5m"};
}

std::vector<Graph> theta_variants(int k) {
  std::vector<Graph> out;
  for (int d = 2; d <= k / 2; ++d) {
    Graph g = Graph::empty(k);
    for (int i = 0; i < k; ++i) g.add(i, (i + 1) % k);
    g.add(0, d);
    out.push_back(g);
  }
  return out;
}

namespace {

bool has_new_cycle_member(const Graph& g, int u, int v, int k) {
  // a new k-cycle must use edge (u,v): path of k vertices u ... v, then close
  bool found = false;
  detail::for_cycles_through(g, u, k, [&](const int* c, int kk) {
    // cycle through u; it uses edge (u,v) iff v is a cycle neighbor of u
    if (c[1] == v || c[kk - 1] == v) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

bool has_new_theta_member(const Graph& g, int u, int v, int k) {
  // a new theta copy uses edge (u,v) as cycle edge or as chord; either way
  // both u and v lie on the k-cycle
  bool found = false;
  detail::for_cycles_through(g, u, k, [&](const int* c, int kk) {
    if (!detail::in_path<Graph>(c, kk, v)) return false;
    int cu, cv;
    if (detail::find_chord(g, c, kk, cu, cv)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

bool has_new_k5m_member(const Graph& g, int u, int v) {
  // 5-set containing u and v with at least 9 of the 10 pairs adjacent
  int n = g.n;
  for (int a = 0; a < n; ++a) {
    if (a == u || a == v) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == u || b == v) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == u || c == v) continue;
        int ids[5] = {u, v, a, b, c};
        int miss = 0;
        for (int i = 0; i < 5 && miss <= 1; ++i)
          for (int j = i + 1; j < 5; ++j)
            if (!g.has(ids[i], ids[j])) ++miss;
        if (miss <= 1) return true;
      }
    }
  }
  return false;
}

bool has_theta_through_vertex(const Graph& g, int v, int k) {
  bool found = false;
  detail::for_cycles_through(g, v, k, [&](const int* c, int kk) {
    int cu, cv;
    if (detail::find_chord(g, c, kk, cu, cv)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

bool has_k5m_through_vertex(const Graph& g, int v) {
  // v has degree >= 3 inside any copy, so at least 3 of the other 4 are
  // neighbors of v
  std::vector<int> nb = g.neighbors(v);
  int n = g.n;
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      for (size_t l = j + 1; l < nb.size(); ++l)
        for (int x = 0; x < n; ++x) {
          if (x == v || x == nb[i] || x == nb[j] || x == nb[l]) continue;
          int ids[5] = {v, nb[i], nb[j], nb[l], x};
          int miss = 0;
          for (int a = 0; a < 5 && miss <= 1; ++a)
            for (int b = a + 1; b < 5; ++b)
              if (!g.has(ids[a], ids[b])) ++miss;
          if (miss <= 1) return true;
        }
  return false;
}

}  // namespace

bool free_after_edge_addition(const Graph& g, int u, int v, const ForbiddenFamily& fam) {
  for (const FamilyMember& m : fam.members) {
    switch (m.kind) {
      case PatternKind::cycle:
        if (has_new_cycle_member(g, u, v, m.k)) return false;
        break;
      case PatternKind::theta:
        if (has_new_theta_member(g, u, v, m.k)) return false;
        break;
      case PatternKind::k5_minus:
        if (has_new_k5m_member(g, u, v)) return false;
        break;
    }
  }
  return true;
}

bool free_after_vertex_addition(const Graph& g, int v, const ForbiddenFamily& fam) {
  for (const FamilyMember& m : fam.members) {
    switch (m.kind) {
      case PatternKind::cycle: {
        bool found = false;
        detail::for_cycles_through(g, v, m.k, [&](const int*, int) {
          found = true;
          return true;
        });
        if (found) return false;
        break;
      }
      case PatternKind::theta:
        if (has_theta_through_vertex(g, v, m.k)) return false;
        break;
      case PatternKind::k5_minus:
        if (has_k5m_through_vertex(g, v)) return false;
        break;
    }
  }
  return true;
}

}  // namespace ptn
