#pragma once
// Combinatorial plane embeddings: a rotation system (cyclic neighbor order
// per vertex) plus a designated outer face. Faces are the orbits of the dart
// successor map
//     next(u -> v) = (v -> w),  w = the neighbor after u in rot[v],
// traversed from darts in (tail, rotation position) order, so face indices
// are deterministic.
//
// Face size = boundary walk length in darts. A bridge contributes both its
// darts to the same walk; its side pair is (i, i) for that face size. Every
// edge therefore has exactly two sides, and the side-pair counts e_{i,j}
// below satisfy the incidence identities the face-counting arguments use,
// degenerate walks included.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptn/graph.hpp"

namespace ptn {

template <class G>
struct Embedding {
  G g;
  std::vector<std::vector<int>> rot;
  int outer = 0;
};

using SmallEmbedding = Embedding<Graph>;
using LargeEmbedding = Embedding<LargeGraph>;

template <class G>
std::vector<std::string> embedding_defects(const Embedding<G>& emb) {
  std::vector<std::string> errs;
  int n = emb.g.size();
  if ((int)emb.rot.size() != n) {
    errs.push_back("rotation table has " + std::to_string(emb.rot.size()) + " rows, graph has " +
                   std::to_string(n) + " vertices");
    return errs;
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = emb.g.neighbors(v);
    std::vector<int> rv = emb.rot[v];
    if (rv.size() != nb.size()) {
      errs.push_back("vertex " + std::to_string(v) + ": rotation lists " + std::to_string(rv.size()) +
                     " neighbors, graph has " + std::to_string(nb.size()));
      continue;
    }
    std::vector<int> sorted = rv;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != nb)
      errs.push_back("vertex " + std::to_string(v) + ": rotation is not a permutation of its neighbors");
  }
  return errs;
}

template <class G>
std::vector<std::vector<int>> faces(const Embedding<G>& emb) {
  int n = emb.g.size();
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(emb.rot[v].size(), 0);

  // position of u within rot[v]
  std::vector<std::vector<int>> posmap(n);
  for (int v = 0; v < n; ++v) posmap[v].assign(n, -1);
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < emb.rot[v].size(); ++i) posmap[v][emb.rot[v][i]] = int(i);

  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    for (size_t i = 0; i < emb.rot[v].size(); ++i) {
      if (used[v][i]) continue;
      std::vector<int> walk;
      int cu = v, idx = int(i);
      while (!used[cu][idx]) {
        used[cu][idx] = 1;
        int cv = emb.rot[cu][idx];
        walk.push_back(cu);
        int j = posmap[cv][cu];
        idx = int((j + 1) % emb.rot[cv].size());
        cu = cv;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

struct FaceProfile {
  std::vector<std::vector<int>> face_walks;
  std::map<int, long long> f;                        // faces by size
  std::map<int, long long> e_side;                   // edges with a side on an i-face
  std::map<std::pair<int, int>, long long> e_pair;   // edges by sorted side-size pair
  long long e = 0;
  int outer_face = 0;
  int outer_size = 0;
};

template <class G>
FaceProfile face_profile(const Embedding<G>& emb) {
  FaceProfile p;
  p.face_walks = faces(emb);
  p.e = emb.g.m;
  p.outer_face = emb.outer;
  if (emb.outer < 0 || emb.outer >= (int)p.face_walks.size())
    throw std::invalid_argument("outer face index out of range");
  p.outer_size = int(p.face_walks[emb.outer].size());
  for (const auto& w : p.face_walks) ++p.f[int(w.size())];
  // side size per dart
  std::map<std::pair<int, int>, int> dart_face_size;
  for (const auto& w : p.face_walks) {
    int k = int(w.size());
    for (int i = 0; i < k; ++i) dart_face_size[{w[i], w[(i + 1) % k]}] = k;
  }
  int n = emb.g.size();
  for (int v = 0; v < n; ++v)
    for (int u : emb.g.neighbors(v)) {
      if (u <= v) continue;
      int s1 = dart_face_size.at({v, u});
      int s2 = dart_face_size.at({u, v});
      if (s1 > s2) std::swap(s1, s2);
      ++p.e_pair[{s1, s2}];
      ++p.e_side[s1];
      if (s2 != s1) ++p.e_side[s2];
    }
  return p;
}

// rebuild rotations from a coherent directed face list (each dart exactly once)
std::vector<std::vector<int>> rotations_from_faces(int n, const std::vector<std::vector<int>>& face_list);

// --- text format -------------------------------------------------------------

struct RotationFile {
  std::vector<std::vector<int>> rot;
  std::optional<int> outer_face;
  std::vector<int> inner_cycle;
  std::vector<int> outer_cycle;
};

RotationFile parse_rotation_text(const std::string& text);
LargeEmbedding embedding_from_rotation_file(const RotationFile& rf);

struct RotationAnnotations {
  std::optional<int> outer_face;
  std::vector<int> inner_cycle;
  std::vector<int> outer_cycle;
};

template <class G>
std::string emit_rotation_text(const Embedding<G>& emb, const RotationAnnotations& ann = {}) {
  std::string out;
  for (int v = 0; v < emb.g.size(); ++v) {
    out += std::to_string(v) + ":";
    for (int u : emb.rot[v]) out += " " + std::to_string(u);
    out += "\n";
  }
  auto cycle_line = [&](const char* name, const std::vector<int>& c) {
    if (c.empty()) return;
    out += std::string("# ") + name + ":";
    for (int v : c) out += " " + std::to_string(v);
    out += "\n";
  };
  if (ann.outer_face) out += "# outer: " + std::to_string(*ann.outer_face) + "\n";
  cycle_line("inner", ann.inner_cycle);
  cycle_line("outer", ann.outer_cycle);
  return out;
}

}  // namespace ptn
