#include "ptn/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ptn/canonical.hpp"
#include "ptn/planarity.hpp"

namespace ptn {
namespace {

using Clock = std::chrono::steady_clock;

int planar_cap(int n) { return n < 3 ? n * (n - 1) / 2 : 3 * n - 6; }

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Child acceptance. child was built as parent + one new vertex v = n-1; it is
// kept iff deleting v gives the same class as deleting the eligible vertex at
// the highest canonical position. Eligible means non-cut in connected mode
// (the deletion must stay inside the search space), any vertex otherwise.
// Same computed orbit certifies an automorphism moving v there; otherwise the
// deletions are compared by canonical form, so incomplete orbit detection can
// cost time but never a class.
bool mckay_accept(const Graph& child, const CanonResult& cr, bool connected,
                  const CanonicalForm& parent_form) {
  const int v = child.n - 1;
  const uint64_t cut = connected ? articulation_points(child) : 0;
  int d = -1;
  for (int p = child.n - 1; p >= 0; --p) {
    int x = cr.labeling[p];
    if (!(cut >> x & 1)) {
      d = x;
      break;
    }
  }
  if (d == v) return true;
  if (cr.orbit[d] == cr.orbit[v]) return true;
  return refined_canonical(delete_vertex(child, d)).form == parent_form;
}

struct Child {
  Graph g;
  int m;
};

struct ChildGen {
  const Graph& p;
  const ForbiddenFamily& fam;
  bool connected;
  std::set<CanonicalForm> seen{};
  std::vector<Child> out{};
  std::optional<CanonicalForm> pform{};

  const CanonicalForm& parent_form() {
    if (!pform) pform = refined_canonical(p).form;
    return *pform;
  }

  void consider(Graph& c) {
    CanonResult cr = refined_canonical(c);
    if (!seen.insert(cr.form).second) return;  // isomorphic sibling
    if (mckay_accept(c, cr, connected, parent_form())) out.push_back({c, c.m});
  }

  // S grows in increasing vertex order; freeness and planarity are monotone
  // under edge addition, so a failing prefix closes the whole branch.
  void grow(Graph& c, int next_min) {
    consider(c);
    const int v = c.n - 1;
    if (c.m == planar_cap(c.n)) return;
    for (int x = next_min; x < v; ++x) {
      c.add(v, x);
      if (free_after_edge_addition(c, v, x, fam) && is_planar(c)) grow(c, x + 1);
      c.remove(v, x);
    }
  }

  std::vector<Child> run() {
    if (p.n + 1 > kMaxN) throw std::invalid_argument("augmentation beyond 64 vertices");
    Graph c = p;
    c.n += 1;
    const int v = c.n - 1;
    if (connected) {
      for (int x = 0; x < v; ++x) {
        c.add(v, x);
        if (free_after_edge_addition(c, v, x, fam) && is_planar(c)) grow(c, x + 1);
        c.remove(v, x);
      }
    } else {
      grow(c, 0);  // S may be empty: the new vertex stays isolated
    }
    std::stable_sort(out.begin(), out.end(), [](const Child& a, const Child& b) { return a.m > b.m; });
    return std::move(out);
  }
};

struct RootRecord {
  int best = -1;
  long long count = 0;
  std::string witness;
  unsigned long long nodes = 0;
};

struct Searcher {
  int target_n;
  const ForbiddenFamily& fam;
  bool connected;
  bool pruning = true;
  std::atomic<int>* shared_best = nullptr;
  std::atomic<bool>* stop = nullptr;
  double budget_seconds = 0;
  Clock::time_point t0{};
  const std::function<void(const Graph&)>* enum_cb = nullptr;

  unsigned long long nodes = 0;
  int local_best = -1;
  long long local_count = 0;
  std::string local_witness{};

  bool aborted() {
    if (!stop) return false;
    if ((nodes & 1023) == 0 && budget_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - t0).count() > budget_seconds)
      stop->store(true, std::memory_order_relaxed);
    return stop->load(std::memory_order_relaxed);
  }

  void bump_shared(int m) {
    if (!shared_best) return;
    int cur = shared_best->load(std::memory_order_relaxed);
    while (cur < m && !shared_best->compare_exchange_weak(cur, m, std::memory_order_relaxed)) {
    }
  }

  void leaf(const Graph& g) {
    if (enum_cb) {
      (*enum_cb)(g);
      return;
    }
    if (g.m < local_best) return;
    std::string w = canonical_g6(g);
    if (g.m > local_best) {
      local_best = g.m;
      local_count = 1;
      local_witness = std::move(w);
      bump_shared(g.m);
    } else {
      ++local_count;
      if (w < local_witness) local_witness = std::move(w);
    }
  }

  // false = stopped by budget; counts at the final best are unaffected by
  // pruning order because the cap comparison is strict
  bool process(const Graph& g) {
    ++nodes;
    if (aborted()) return false;
    if (g.n == target_n) {
      leaf(g);
      return true;
    }
    std::vector<Child> kids = ChildGen{g, fam, connected}.run();
    for (const Child& k : kids) {
      if (pruning && shared_best) {
        int cap = k.m;
        for (int j = k.g.n + 1; j <= target_n; ++j) cap = std::min(cap + j - 1, planar_cap(j));
        if (cap < shared_best->load(std::memory_order_relaxed)) continue;
      }
      if (!process(k.g)) return false;
    }
    return true;
  }
};

Graph single_vertex() {
  Graph g{};
  g.n = 1;
  return g;
}

std::vector<Graph> build_frontier(int level, const ForbiddenFamily& fam, bool connected,
                                  unsigned long long& nodes) {
  std::vector<Graph> roots;
  std::function<void(const Graph&)> cb = [&](const Graph& g) { roots.push_back(g); };
  Searcher s{level, fam, connected};
  s.pruning = false;
  s.enum_cb = &cb;
  s.process(single_vertex());
  nodes += s.nodes;
  return roots;
}

struct Checkpoint {
  std::string path;
  std::ofstream out;
  std::mutex mu;

  void append(const nlohmann::ordered_json& j) {
    std::lock_guard<std::mutex> lk(mu);
    out << j.dump() << "\n";
    out.flush();
  }
};

uint64_t config_hash(int n, const std::string& tag, int lf, size_t roots) {
  std::ostringstream os;
  os << "ex_planar|v1|" << n << "|" << tag << "|" << lf << "|" << roots;
  return fnv1a64(os.str());
}

}  // namespace

ExtremalResult ex_planar(int n, const ForbiddenFamily& fam, const SearchOptions& opt) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("ex_planar: n out of range");
  if (n > 11 && !opt.force)
    throw std::invalid_argument(
        "ex_planar: n > 11 will not finish in reasonable time; pass force to override");
  if (n > 16) throw std::invalid_argument("ex_planar: n > 16 not supported");

  const auto t0 = Clock::now();
  ExtremalResult res;
  res.family = fam.tag;
  res.n = n;
  res.threads = std::max(1, opt.threads);

  unsigned long long total_nodes = 0;
  const int lf = std::min(6, n - 1);
  std::vector<Graph> roots = build_frontier(lf, fam, true, total_nodes);

  const uint64_t chash = config_hash(n, fam.tag, lf, roots.size());
  std::vector<std::optional<RootRecord>> slots(roots.size());
  std::atomic<int> shared_best{-1};

  Checkpoint ck;
  ck.path = opt.checkpoint_path;
  if (!ck.path.empty()) {
    std::ifstream in(ck.path);
    std::string line;
    bool have_header = false;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      if (!have_header) {
        if (j.value("version", 0) != 1 || j.value("n", -1) != n || j.value("family", "") != fam.tag ||
            j.value("frontier_level", -1) != lf || j.value("root_count", size_t(0)) != roots.size() ||
            j.value("config_hash", uint64_t(0)) != chash)
          throw std::runtime_error("checkpoint does not match this search (n, family, or layout differs)");
        have_header = true;
        continue;
      }
      size_t i = j.at("root").get<size_t>();
      if (i >= roots.size()) throw std::runtime_error("checkpoint names a root outside the frontier");
      RootRecord r;
      r.best = j.at("best").get<int>();
      r.count = j.at("count").get<long long>();
      r.witness = j.at("witness").get<std::string>();
      r.nodes = j.at("nodes").get<unsigned long long>();
      slots[i] = r;
      int cur = shared_best.load();
      if (r.best > cur) shared_best.store(r.best);
    }
    in.close();
    ck.out.open(ck.path, have_header ? std::ios::app : std::ios::trunc);
    if (!ck.out) throw std::runtime_error("cannot open checkpoint file " + ck.path);
    if (!have_header)
      ck.append(nlohmann::ordered_json{{"version", 1},
                                       {"n", n},
                                       {"family", fam.tag},
                                       {"frontier_level", lf},
                                       {"root_count", roots.size()},
                                       {"config_hash", chash}});
  }

  std::atomic<bool> stop{false};
  std::atomic<size_t> next{0};
  std::atomic<bool> aborted{false};
  std::mutex slot_mu;

  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= roots.size()) return;
      {
        std::lock_guard<std::mutex> lk(slot_mu);
        if (slots[i]) continue;
      }
      if (stop.load(std::memory_order_relaxed)) return;
      Searcher s{n, fam, true};
      s.shared_best = &shared_best;
      s.stop = &stop;
      s.budget_seconds = opt.budget_seconds;
      s.t0 = t0;
      if (!s.process(roots[i])) {
        aborted.store(true);
        return;
      }
      RootRecord rec{s.local_best, s.local_count, s.local_witness, s.nodes};
      {
        std::lock_guard<std::mutex> lk(slot_mu);
        slots[i] = rec;
      }
      if (!ck.path.empty())
        ck.append(nlohmann::ordered_json{{"root", i},
                                         {"best", rec.best},
                                         {"count", rec.count},
                                         {"witness", rec.witness},
                                         {"nodes", rec.nodes}});
    }
  };

  const int nthreads = std::max(1, std::min<int>(res.threads, (int)roots.size()));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  res.exhaustive = !aborted.load();
  int best = shared_best.load();
  long long count = 0;
  std::string witness;
  for (const auto& s : slots) {
    if (!s) continue;
    total_nodes += s->nodes;
    if (s->best != best) continue;
    count += s->count;
    if (!s->witness.empty() && (witness.empty() || s->witness < witness)) witness = s->witness;
  }
  res.max_edges = best;
  res.maximizer_count = count;
  res.witness = witness;
  res.nodes_explored = total_nodes;
  res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

void enumerate_planar_free(int n, const ForbiddenFamily& fam, const std::function<void(const Graph&)>& cb,
                           bool force) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("enumerate_planar_free: n out of range");
  if (n > 11 && !force)
    throw std::invalid_argument(
        "enumerate_planar_free: n > 11 will not finish in reasonable time; pass force to override");
  Searcher s{n, fam, false};
  s.pruning = false;
  s.enum_cb = &cb;
  s.process(single_vertex());
}

std::vector<RangeRow> verify_bound_range(const std::string& family, int lo, int hi,
                                         const SearchOptions& opt) {
  ForbiddenFamily fam = ForbiddenFamily::from_tag(family);
  const BoundFormula& f = bound_formula(family);
  std::vector<RangeRow> rows;
  for (int n = lo; n <= hi; ++n) {
    ExtremalResult r = ex_planar(n, fam, opt);
    RangeRow row;
    row.n = n;
    row.max_edges = r.max_edges;
    if (n >= f.n_min) {
      row.have_bound = true;
      row.bound = bound_value(family, n);
      row.within = within_bound(r.max_edges, family, n);
      row.tight = bound_tight(r.max_edges, family, n);
    }
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json extremal_result_json(const ExtremalResult& r) {
  return nlohmann::ordered_json{
      {"family", r.family},
      {"n", r.n},
      {"max_edges", r.max_edges},
      {"maximizer_count", r.maximizer_count},
      {"witness", r.witness},
      {"exhaustive", r.exhaustive},
      {"threads", r.threads},
      {"nodes_explored", r.nodes_explored},
      {"elapsed_seconds", r.elapsed_seconds},
  };
}

}  // namespace ptn
