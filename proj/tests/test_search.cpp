#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ptn/canonical.hpp"
#include "ptn/graph6.hpp"
#include "ptn/search.hpp"
#include "ptn/theta.hpp"

using namespace ptn;

namespace {

// ---- independent oracle: labeled exhaustion over every graph on n vertices,
// freeness by injective backtracking against pattern graphs built here, and
// planarity by the obstruction subgraphs valid up to six vertices

Graph from_mask(int n, unsigned mask) {
  Graph g = Graph::empty(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add(u, v);
  return g;
}

bool extend(const Graph& pat, const Graph& host, std::vector<int>& map, std::vector<char>& used, size_t i) {
  if (i == map.size()) return true;
  for (int h = 0; h < host.n; ++h) {
    if (used[h]) continue;
    bool ok = true;
    for (size_t j = 0; j < i && ok; ++j)
      if (pat.has(int(i), int(j)) && !host.has(h, map[j])) ok = false;
    if (!ok) continue;
    map[i] = h;
    used[h] = 1;
    if (extend(pat, host, map, used, i + 1)) return true;
    used[h] = 0;
  }
  return false;
}

bool contains(const Graph& host, const Graph& pat) {
  if (pat.n > host.n) return false;
  std::vector<int> map(pat.n, -1);
  std::vector<char> used(host.n, 0);
  return extend(pat, host, map, used, 0);
}

Graph cycle_pattern(int k) {
  Graph g = Graph::empty(k);
  for (int i = 0; i < k; ++i) g.add(i, (i + 1) % k);
  return g;
}

Graph theta_pattern(int k, int d) {
  Graph g = cycle_pattern(k);
  g.add(0, d);
  return g;
}

Graph k5m_pattern() {
  Graph g = Graph::empty(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 0 && v == 1)) g.add(u, v);
  return g;
}

bool oracle_free(const Graph& g, const std::string& tag) {
  auto has_theta = [&](int k) {
    for (int d = 2; d <= k / 2; ++d)
      if (contains(g, theta_pattern(k, d))) return true;
    return false;
  };
  if (tag == "theta4") return !has_theta(4);
  if (tag == "theta5") return !has_theta(5);
  if (tag == "theta6") return !has_theta(6);
  if (tag == "c4") return !contains(g, cycle_pattern(4));
  if (tag == "c5") return !contains(g, cycle_pattern(5));
  if (tag == "c6") return !contains(g, cycle_pattern(6));
  if (tag == "theta6+k5m") return !has_theta(6) && !contains(g, k5m_pattern());
  throw std::logic_error("unknown tag " + tag);
}

// valid for hosts on at most six vertices: the only obstructions that fit are
// K5, K3,3, and K5 with one edge subdivided
std::vector<Graph> obstructions6() {
  Graph k5 = Graph::empty(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.add(u, v);
  Graph k33 = Graph::empty(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.add(u, v);
  Graph k5s = Graph::empty(6);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 3 && v == 4)) k5s.add(u, v);
  k5s.add(3, 5);
  k5s.add(4, 5);
  return {k5, k33, k5s};
}

bool oracle_planar6(const Graph& g) {
  static const std::vector<Graph> obs = obstructions6();
  for (const Graph& o : obs)
    if (contains(g, o)) return false;
  return true;
}

struct BruteCensus {
  long long classes = 0;
  int max_edges = -1;
  long long maximizer_classes = 0;
  std::string witness;  // lex-min canonical code among maximizer classes
};

BruteCensus brute_census(int n, const std::string& tag) {
  REQUIRE(n <= 6);
  std::set<std::string> all, best;
  int max_e = -1;
  unsigned edges = unsigned(n * (n - 1) / 2);
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    Graph g = from_mask(n, mask);
    if (!oracle_planar6(g)) continue;
    if (!oracle_free(g, tag)) continue;
    std::string c = canonical_g6(g);
    all.insert(c);
    if (g.m > max_e) {
      max_e = g.m;
      best.clear();
    }
    if (g.m == max_e) best.insert(c);
  }
  BruteCensus r;
  r.classes = (long long)all.size();
  r.max_edges = max_e;
  r.maximizer_classes = (long long)best.size();
  r.witness = best.empty() ? "" : *best.begin();
  return r;
}

void check_against_census(int n, const std::string& tag) {
  CAPTURE(n);
  CAPTURE(tag);
  BruteCensus ref = brute_census(n, tag);
  ForbiddenFamily fam = ForbiddenFamily::from_tag(tag);

  ExtremalResult r = ex_planar(n, fam);
  CHECK(r.max_edges == ref.max_edges);
  CHECK(r.maximizer_count == ref.maximizer_classes);
  CHECK(r.witness == ref.witness);
  CHECK(r.exhaustive);

  std::set<std::string> seen;
  enumerate_planar_free(n, fam, [&](const Graph& g) {
    std::string c = canonical_g6(g);
    CHECK(!seen.count(c));  // exactly once
    seen.insert(c);
    CHECK(oracle_free(g, tag));
    CHECK(oracle_planar6(g));
  });
  CHECK((long long)seen.size() == ref.classes);
}

std::string tmp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / stem).string();
}

void require_same(const ExtremalResult& a, const ExtremalResult& b) {
  CHECK(a.family == b.family);
  CHECK(a.n == b.n);
  CHECK(a.max_edges == b.max_edges);
  CHECK(a.maximizer_count == b.maximizer_count);
  CHECK(a.witness == b.witness);
  CHECK(a.exhaustive == b.exhaustive);
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("agrees with labeled exhaustion on four and five vertices, every family") {
    for (const std::string& tag : ForbiddenFamily::known_tags()) {
      check_against_census(4, tag);
      check_against_census(5, tag);
    }
  }

  TEST_CASE("agrees with labeled exhaustion on six vertices") {
    check_against_census(6, "theta4");
    check_against_census(6, "theta6");
    check_against_census(6, "c4");
  }

  TEST_CASE("known values") {
    ExtremalResult r4 = ex_planar(4, ForbiddenFamily::from_tag("theta4"));
    CHECK(r4.max_edges == 4);
    CHECK(r4.maximizer_count == 2);
    CHECK(r4.witness == "CN");

    ExtremalResult r5 = ex_planar(5, ForbiddenFamily::from_tag("theta5"));
    CHECK(r5.max_edges == 7);
    CHECK(r5.maximizer_count == 2);
    CHECK(r5.witness == "DF{");

    ExtremalResult r6 = ex_planar(6, ForbiddenFamily::from_tag("theta6"));
    CHECK(r6.max_edges == 10);
    CHECK(r6.maximizer_count == 3);
    CHECK(r6.witness == "E@~w");

    long long count = 0;
    enumerate_planar_free(6, ForbiddenFamily::from_tag("theta6"), [&](const Graph&) { ++count; });
    CHECK(count == 107);
  }

  TEST_CASE("result is independent of the thread count") {
    ForbiddenFamily fam = ForbiddenFamily::from_tag("theta5");
    SearchOptions one, three;
    one.threads = 1;
    three.threads = 3;
    ExtremalResult a = ex_planar(8, fam, one);
    ExtremalResult b = ex_planar(8, fam, three);
    require_same(a, b);
    CHECK(a.max_edges == 13);
    CHECK(a.maximizer_count == 10);
    CHECK(a.witness == "G??F~{");
  }

  TEST_CASE("checkpoint: write, resume from a truncated file, resume from a complete file") {
    ForbiddenFamily fam = ForbiddenFamily::from_tag("theta5");
    ExtremalResult fresh = ex_planar(8, fam);

    std::string path = tmp_path("ptn_ckpt_full.jsonl");
    std::remove(path.c_str());
    SearchOptions opt;
    opt.checkpoint_path = path;
    ExtremalResult written = ex_planar(8, fam, opt);
    require_same(fresh, written);

    std::vector<std::string> lines;
    {
      std::ifstream in(path);
      REQUIRE(in.good());
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    }
    REQUIRE(lines.size() >= 3);  // header plus at least two roots

    // keep the header and half of the root records
    std::string part = tmp_path("ptn_ckpt_part.jsonl");
    {
      std::ofstream out(part, std::ios::trunc);
      size_t keep = 1 + (lines.size() - 1) / 2;
      for (size_t i = 0; i < keep; ++i) out << lines[i] << "\n";
    }
    SearchOptions opt2;
    opt2.checkpoint_path = part;
    ExtremalResult resumed = ex_planar(8, fam, opt2);
    require_same(fresh, resumed);

    // a complete checkpoint resumes to the same result without appending
    // new root records
    ExtremalResult again = ex_planar(8, fam, opt);
    require_same(fresh, again);
    size_t after = 0;
    {
      std::ifstream in(path);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) ++after;
    }
    CHECK(after == lines.size());

    // the same file does not fit a different search
    CHECK_THROWS_AS(ex_planar(7, fam, opt), std::runtime_error);
    CHECK_THROWS_AS(ex_planar(8, ForbiddenFamily::from_tag("theta6"), opt), std::runtime_error);

    std::remove(path.c_str());
    std::remove(part.c_str());
  }

  TEST_CASE("a corrupted checkpoint header is rejected") {
    std::string path = tmp_path("ptn_ckpt_bad.jsonl");
    {
      std::ofstream out(path, std::ios::trunc);
      out << "{\"version\":1,\"n\":8,\"family\":\"theta5\",\"frontier_level\":6,\"root_count\":1,"
             "\"config_hash\":0}\n";
    }
    SearchOptions opt;
    opt.checkpoint_path = path;
    CHECK_THROWS_AS(ex_planar(8, ForbiddenFamily::from_tag("theta5"), opt), std::runtime_error);
    std::remove(path.c_str());
  }

  TEST_CASE("budget exhaustion reports a partial result") {
    SearchOptions opt;
    opt.budget_seconds = 0.05;
    ExtremalResult r = ex_planar(11, ForbiddenFamily::from_tag("theta6"), opt);
    CHECK(!r.exhaustive);
    CHECK(r.max_edges <= bound_floor("theta6", 11));
  }

  TEST_CASE("large orders need an explicit override") {
    CHECK_THROWS_AS(ex_planar(12, ForbiddenFamily::from_tag("theta4")), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_planar_free(12, ForbiddenFamily::from_tag("theta4"), [](const Graph&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ex_planar(1, ForbiddenFamily::from_tag("theta4")), std::invalid_argument);
  }

  TEST_CASE("range verification lines up with the recorded bounds") {
    std::vector<RangeRow> rows = verify_bound_range("theta4", 3, 6);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 3);
    CHECK(!rows[0].have_bound);  // below the recorded threshold
    CHECK(rows[0].max_edges == 3);
    for (size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].have_bound);
      CHECK(rows[i].within);
    }
    CHECK(rows[1].max_edges == 4);
    CHECK(rows[1].tight);  // 4 == floor(24/5)
    CHECK(rows[2].max_edges == 6);
    CHECK(!rows[2].tight);  // floor is 7 at n = 5
  }

  TEST_CASE("result json carries the semantic fields in order") {
    ExtremalResult r = ex_planar(5, ForbiddenFamily::from_tag("c4"));
    nlohmann::ordered_json j = extremal_result_json(r);
    auto it = j.begin();
    CHECK(it.key() == "family");
    CHECK(j["family"] == "c4");
    CHECK(j["n"] == 5);
    CHECK(j["max_edges"] == r.max_edges);
    CHECK(j["maximizer_count"] == r.maximizer_count);
    CHECK(j["witness"] == r.witness);
    CHECK(j["exhaustive"] == true);
  }
}
