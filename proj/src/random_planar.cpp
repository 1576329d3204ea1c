#include "ptn/random_planar.hpp"

#include <algorithm>

namespace ptn {

SmallEmbedding random_planar_embedding(int n, std::mt19937_64& rng) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("random_planar_embedding: n out of range");
  std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {2, 1, 0}};
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, tris.size() - 1);
    size_t fi = pick(rng);
    auto [a, b, c] = tris[fi];
    tris.erase(tris.begin() + fi);
    tris.push_back({a, b, v});
    tris.push_back({b, c, v});
    tris.push_back({c, a, v});
  }
  std::vector<std::vector<int>> face_list;
  face_list.reserve(tris.size());
  for (auto& t : tris) face_list.push_back({t[0], t[1], t[2]});

  SmallEmbedding emb;
  emb.g = Graph::empty(n);
  for (auto& t : tris)
    for (int i = 0; i < 3; ++i) {
      int u = t[i], v = t[(i + 1) % 3];
      if (u < v) emb.g.add(u, v);
    }
  emb.rot = rotations_from_faces(n, face_list);

  std::uniform_int_distribution<int> howmany(0, emb.g.m - 2);
  int deletions = howmany(rng);
  for (int d = 0; d < deletions; ++d) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (int u : emb.g.neighbors(v))
        if (u > v) edges.push_back({v, u});
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    auto [u, v] = edges[pick(rng)];
    emb.g.remove(u, v);
    emb.rot[u].erase(std::find(emb.rot[u].begin(), emb.rot[u].end(), v));
    emb.rot[v].erase(std::find(emb.rot[v].begin(), emb.rot[v].end(), u));
  }

  auto fl = faces(emb);
  size_t big = 0;
  for (size_t i = 1; i < fl.size(); ++i)
    if (fl[i].size() > fl[big].size()) big = i;
  emb.outer = fl.empty() ? 0 : int(big);
  return emb;
}

}  // namespace ptn
