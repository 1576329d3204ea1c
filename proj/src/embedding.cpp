#include "ptn/embedding.hpp"

#include <algorithm>
#include <sstream>

namespace ptn {

std::vector<std::vector<int>> rotations_from_faces(int n, const std::vector<std::vector<int>>& face_list) {
  // succ[v][u] = w when some face walk runs ... u, v, w ...
  std::vector<std::map<int, int>> succ(n);
  for (const auto& f : face_list) {
    int k = int(f.size());
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
      if (v < 0 || v >= n) throw std::invalid_argument("face vertex out of range");
      auto [it, fresh] = succ[v].emplace(u, w);
      if (!fresh) throw std::invalid_argument("face list not coherent: dart (" + std::to_string(u) + "," +
                                              std::to_string(v) + ") appears twice");
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    int start = succ[v].begin()->first;
    int cur = start;
    do {
      rot[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end())
        throw std::invalid_argument("face list not coherent at vertex " + std::to_string(v));
      cur = it->second;
      if (rot[v].size() > succ[v].size())
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " does not close");
    } while (cur != start);
    if (rot[v].size() != succ[v].size())
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " splits into several cycles; face list is not a single embedding");
  }
  return rot;
}

RotationFile parse_rotation_text(const std::string& text) {
  RotationFile rf;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<int, std::vector<int>> rows;
  auto parse_ints = [](std::istringstream& ss) {
    std::vector<int> out;
    long long x;
    while (ss >> x) out.push_back(int(x));
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream ss(line.substr(first + 1));
      std::string key;
      ss >> key;
      std::vector<int> vals = parse_ints(ss);
      if (key == "outer:") {
        if (vals.size() == 1)
          rf.outer_face = vals[0];
        else if (vals.size() >= 3)
          rf.outer_cycle = vals;
        else if (!vals.empty())
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": outer annotation needs one face index or a cycle of >= 3 vertices");
      } else if (key == "inner:") {
        if (vals.size() < 3)
          throw std::invalid_argument("line " + std::to_string(lineno) + ": inner cycle needs >= 3 vertices");
        rf.inner_cycle = vals;
      }
      continue;  // other comments ignored
    }
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'vertex: neighbors...'");
    int v;
    try {
      size_t used;
      v = std::stoi(line, &used);
      if (line.find_first_not_of(" \t", used) != colon)
        throw std::invalid_argument("junk before ':'");
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex id");
    }
    if (v < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex id");
    std::istringstream ss(line.substr(colon + 1));
    std::vector<int> nbrs = parse_ints(ss);
    std::string tail;
    if (ss.clear(), ss >> tail)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing junk '" + tail + "'");
    if (rows.count(v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate row for vertex " +
                                                   std::to_string(v));
    rows[v] = std::move(nbrs);
  }
  int n = 0;
  for (auto& [v, nb] : rows) {
    n = std::max(n, v + 1);
    for (int u : nb) n = std::max(n, u + 1);
  }
  rf.rot.assign(n, {});
  for (auto& [v, nb] : rows) rf.rot[v] = std::move(nb);
  return rf;
}

LargeEmbedding embedding_from_rotation_file(const RotationFile& rf) {
  int n = int(rf.rot.size());
  LargeGraph g = LargeGraph::empty(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> seen;
    for (int u : rf.rot[v]) {
      if (u == v) throw std::invalid_argument("vertex " + std::to_string(v) + ": self-loop in rotation");
      if (std::find(seen.begin(), seen.end(), u) != seen.end())
        throw std::invalid_argument("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) +
                                    " listed twice");
      seen.push_back(u);
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : rf.rot[v]) {
      const auto& ru = rf.rot[u];
      if (std::find(ru.begin(), ru.end(), v) == ru.end())
        throw std::invalid_argument("rotation not symmetric: " + std::to_string(u) + " in row " +
                                    std::to_string(v) + " but not conversely");
      if (u > v) g.add(v, u);
    }
  LargeEmbedding emb{std::move(g), rf.rot, 0};
  auto fl = faces(emb);
  if (rf.outer_face) {
    if (*rf.outer_face < 0 || *rf.outer_face >= (int)fl.size())
      throw std::invalid_argument("outer face index " + std::to_string(*rf.outer_face) + " out of range (" +
                                  std::to_string(fl.size()) + " faces)");
    emb.outer = *rf.outer_face;
  } else if (!rf.outer_cycle.empty()) {
    std::vector<int> want = rf.outer_cycle;
    std::sort(want.begin(), want.end());
    int found = -1;
    for (size_t i = 0; i < fl.size(); ++i) {
      if (fl[i].size() != want.size()) continue;
      std::vector<int> have = fl[i];
      std::sort(have.begin(), have.end());
      if (have == want) {
        found = int(i);
        break;
      }
    }
    if (found < 0) throw std::invalid_argument("no face matches the annotated outer cycle");
    emb.outer = found;
  } else {
    size_t besti = 0;
    for (size_t i = 1; i < fl.size(); ++i)
      if (fl[i].size() > fl[besti].size()) besti = i;
    emb.outer = int(besti);
  }
  return emb;
}

}  // namespace ptn
