#include "ptn/constructions.hpp"

#include <algorithm>
#include <map>

#include "construction_data.hpp"
#include "ptn/theta.hpp"

namespace ptn {

namespace {

LargeGraph graph_from_faces(int n, const std::vector<std::vector<int>>& fl) {
  LargeGraph g = LargeGraph::empty(n);
  for (const auto& f : fl)
    for (size_t j = 0; j < f.size(); ++j) {
      int u = f[j], v = f[(j + 1) % f.size()];
      if (!g.has(u, v)) g.add(u, v);
    }
  return g;
}

int face_matching(const std::vector<std::vector<int>>& fl, const std::vector<int>& cyc) {
  std::vector<int> want = cyc;
  std::sort(want.begin(), want.end());
  for (size_t i = 0; i < fl.size(); ++i) {
    if (fl[i].size() != want.size()) continue;
    std::vector<int> have = fl[i];
    std::sort(have.begin(), have.end());
    if (have == want) return int(i);
  }
  throw std::invalid_argument("no face matches the given boundary cycle");
}

BoundaryEmbedding load_base(const char* text) {
  RotationFile rf = parse_rotation_text(text);
  if (rf.outer_cycle.empty()) throw std::logic_error("base data lacks an outer cycle");
  LargeEmbedding emb = embedding_from_rotation_file(rf);
  auto fl = faces(emb);
  return {std::move(emb), fl[face_matching(fl, rf.outer_cycle)]};
}

AnnulusGadget load_gadget(const char* text) {
  RotationFile rf = parse_rotation_text(text);
  if (rf.inner_cycle.empty() || rf.outer_cycle.empty())
    throw std::logic_error("gadget data lacks boundary cycles");
  AnnulusGadget g;
  g.emb = embedding_from_rotation_file(rf);
  g.inner = rf.inner_cycle;
  g.outer = rf.outer_cycle;
  return g;
}

}  // namespace

const char* embedded_rotation_data(const std::string& name) {
  if (name == "theta4_g0.rot") return data::kTheta4G0;
  if (name == "theta4_gadget.rot") return data::kTheta4Gadget;
  if (name == "theta5_g0.rot") return data::kTheta5G0;
  if (name == "theta5_gadget.rot") return data::kTheta5Gadget;
  throw std::invalid_argument("unknown data file " + name);
}

BoundaryEmbedding theta4_base() { return load_base(data::kTheta4G0); }
AnnulusGadget theta4_gadget() { return load_gadget(data::kTheta4Gadget); }
BoundaryEmbedding theta5_base() { return load_base(data::kTheta5G0); }
AnnulusGadget theta5_gadget() { return load_gadget(data::kTheta5Gadget); }

BoundaryEmbedding compose_annulus(const BoundaryEmbedding& host, const AnnulusGadget& gadget) {
  const std::vector<int>& W = host.boundary;
  int L = int(W.size());
  if (int(gadget.inner.size()) != L)
    throw std::invalid_argument("boundary length mismatch: host outer cycle has " + std::to_string(L) +
                                " vertices, gadget inner cycle has " + std::to_string(gadget.inner.size()));

  auto host_faces = faces(host.emb);
  int ho = face_matching(host_faces, W);
  auto gad_faces = faces(gadget.emb);
  int gi = face_matching(gad_faces, gadget.inner);

  std::vector<char> on_inner(gadget.emb.g.n, 0);
  for (int v : gadget.inner) on_inner[v] = 1;
  std::vector<int> interior;
  for (int v = 0; v < gadget.emb.g.n; ++v)
    if (!on_inner[v]) interior.push_back(v);

  int host_n = host.emb.g.n;
  int total_n = host_n + int(interior.size());

  for (int dir : {1, -1}) {
    for (int s = 0; s < L; ++s) {
      std::vector<int> vmap(gadget.emb.g.n, -1);
      for (int i = 0; i < L; ++i) vmap[gadget.inner[i]] = W[((s + dir * i) % L + L) % L];
      for (size_t i = 0; i < interior.size(); ++i) vmap[interior[i]] = host_n + int(i);

      std::vector<std::vector<int>> merged;
      merged.reserve(host_faces.size() + gad_faces.size() - 2);
      for (size_t i = 0; i < host_faces.size(); ++i)
        if (int(i) != ho) merged.push_back(host_faces[i]);
      for (size_t i = 0; i < gad_faces.size(); ++i) {
        if (int(i) == gi) continue;
        std::vector<int> f;
        f.reserve(gad_faces[i].size());
        for (int v : gad_faces[i]) f.push_back(vmap[v]);
        merged.push_back(std::move(f));
      }
      std::vector<std::vector<int>> rot;
      try {
        rot = rotations_from_faces(total_n, merged);
      } catch (const std::invalid_argument&) {
        continue;  // incoherent alignment, try the next one
      }
      BoundaryEmbedding out;
      out.emb.g = graph_from_faces(total_n, merged);
      out.emb.rot = std::move(rot);
      out.boundary.reserve(gadget.outer.size());
      for (int v : gadget.outer) out.boundary.push_back(vmap[v]);
      auto fl = faces(out.emb);
      out.emb.outer = face_matching(fl, out.boundary);
      out.boundary = fl[out.emb.outer];
      return out;
    }
  }
  throw std::invalid_argument("gadget boundary cannot be aligned coherently with the host boundary");
}

BoundaryEmbedding theta4_extremal(int k) {
  if (k < 0) throw std::invalid_argument("layer count must be nonnegative");
  BoundaryEmbedding b = theta4_base();
  if (k == 0) return b;
  AnnulusGadget g = theta4_gadget();
  for (int i = 0; i < k; ++i) b = compose_annulus(b, g);
  return b;
}

BoundaryEmbedding theta5_extremal(int k) {
  if (k < 0) throw std::invalid_argument("layer count must be nonnegative");
  BoundaryEmbedding b = theta5_base();
  if (k == 0) return b;
  AnnulusGadget g = theta5_gadget();
  for (int i = 0; i < k; ++i) b = compose_annulus(b, g);
  return b;
}

Graph k5_minus_graph() {
  Graph g = Graph::empty(5);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (!(a == 0 && b == 1)) g.add(a, b);
  return g;
}

Graph fig3_graph() {
  Graph g = Graph::empty(9);
  int blk1[5] = {0, 1, 2, 3, 4};
  int blk2[5] = {4, 5, 6, 7, 8};
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      if (!(a == 0 && b == 1)) g.add(blk1[a], blk1[b]);
      if (!(a == 1 && b == 2) && !g.has(blk2[a], blk2[b])) g.add(blk2[a], blk2[b]);
    }
  return g;
}

ExtremalCertificate check_extremal_certificate(const LargeEmbedding& emb, const std::string& family) {
  if (family != "theta4" && family != "theta5")
    throw std::invalid_argument("certificates exist for theta4 and theta5 only");
  ExtremalCertificate c;
  c.family = family;
  c.n = emb.g.n;
  c.e = emb.g.m;
  auto cond = [&](const std::string& name, bool pass, const std::string& note = "") {
    c.conditions.push_back({name, pass, note});
    c.pass = c.pass && pass;
  };

  auto defects = embedding_defects(emb);
  cond("rotation system is valid", defects.empty(), defects.empty() ? "" : defects[0]);
  if (!defects.empty()) return c;

  // connectivity
  {
    int n = emb.g.n;
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int u : emb.g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          st.push_back(u);
        }
    }
    cond("connected", cnt == n);
  }

  auto fl = faces(emb);
  std::map<std::pair<int, int>, int> dart_size;
  for (const auto& w : fl) {
    int k = int(w.size());
    for (int i = 0; i < k; ++i) dart_size[{w[i], w[(i + 1) % k]}] = k;
  }
  auto side_pair = [&](int u, int v) {
    int a = dart_size.at({u, v}), b = dart_size.at({v, u});
    return std::make_pair(std::min(a, b), std::max(a, b));
  };

  if (family == "theta4") {
    cond("theta4-free", !find_theta(emb.g, 4).has_value());
    bool ok = true;
    std::string bad;
    for (int v = 0; v < emb.g.n && ok; ++v)
      for (int u : emb.g.neighbors(v)) {
        if (u <= v) continue;
        auto [a, b] = side_pair(v, u);
        if (a != 3 || b != 4) {
          ok = false;
          bad = "edge (" + std::to_string(v) + "," + std::to_string(u) + ") lies on a " + std::to_string(a) +
                "-face and a " + std::to_string(b) + "-face";
          break;
        }
      }
    cond("every edge on exactly one 3-face and one 4-face", ok, bad);
    cond("5e == 12(n-2)", 5 * c.e == 12 * (long long)(c.n - 2));
  } else {
    cond("theta5-free", !find_theta(emb.g, 5).has_value());
    bool ok = true;
    std::string bad;
    for (int v = 0; v < emb.g.n && ok; ++v)
      for (int u : emb.g.neighbors(v)) {
        if (u <= v) continue;
        auto [a, b] = side_pair(v, u);
        if (!(a == 3 && (b == 3 || b == 5))) {
          ok = false;
          bad = "edge (" + std::to_string(v) + "," + std::to_string(u) + ") lies on a " + std::to_string(a) +
                "-face and a " + std::to_string(b) + "-face";
          break;
        }
      }
    cond("every edge on a 3-face, other side a 3- or 5-face", ok, bad);
    bool tri_ok = true;
    std::string tri_bad;
    for (const auto& w : fl) {
      if (w.size() != 3) continue;
      int cnt33 = 0;
      for (int i = 0; i < 3; ++i) {
        auto [a, b] = side_pair(w[i], w[(i + 1) % 3]);
        if (a == 3 && b == 3) ++cnt33;
      }
      if (cnt33 != 2) {
        tri_ok = false;
        tri_bad = "a 3-face has " + std::to_string(cnt33) + " edges shared with other 3-faces";
        break;
      }
    }
    cond("every 3-face shares exactly two edges with 3-faces", tri_ok, tri_bad);
    cond("2e == 5(n-2)", 2 * c.e == 5 * (long long)(c.n - 2));
  }
  return c;
}

nlohmann::ordered_json certificate_json(const ExtremalCertificate& c) {
  nlohmann::ordered_json j;
  j["family"] = c.family;
  j["n"] = c.n;
  j["e"] = c.e;
  j["pass"] = c.pass;
  j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& cc : c.conditions) {
    nlohmann::ordered_json cj;
    cj["name"] = cc.name;
    cj["pass"] = cc.pass;
    if (!cc.note.empty()) cj["note"] = cc.note;
    j["conditions"].push_back(cj);
  }
  return j;
}

}  // namespace ptn
