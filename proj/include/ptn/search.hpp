#pragma once
// Exhaustive search for planar Turan numbers by canonical vertex
// augmentation. Connected graphs suffice for the maximum and the maximizer
// census: joining two components by a bridge creates no new cycle, theta, or
// K5-minus-an-edge copy (the last is 2-edge-connected), so every maximizer is
// connected and the connected-mode counts equal the all-graphs counts.
//
// Exactly-once generation: a child P+v~S is kept iff deleting v yields the
// same isomorphism class as deleting the non-cut vertex at the highest
// canonical position, with isomorphic children of one parent deduplicated by
// canonical code. The proven edge bounds are never used for pruning; the only
// pruning is the exact growth cap  cap(j) = min(cap(j-1) + j - 1, 3j - 6)
// against the best edge count found so far (strict comparison, so the
// maximizer census and witness are schedule-independent).

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptn/bounds.hpp"
#include "ptn/graph.hpp"
#include "ptn/theta.hpp"

namespace ptn {

struct SearchOptions {
  int threads = 1;
  std::string checkpoint_path;  // empty disables checkpointing
  double budget_seconds = 0;    // 0 = unlimited
  bool force = false;           // lift the n <= 11 guard
};

struct ExtremalResult {
  std::string family;
  int n = 0;
  int max_edges = -1;          // lower bound when exhaustive is false
  long long maximizer_count = 0;
  std::string witness;         // graph6 of the least canonical form among maximizers
  bool exhaustive = true;
  int threads = 1;
  // scheduling-dependent diagnostics, excluded from determinism comparisons
  unsigned long long nodes_explored = 0;
  double elapsed_seconds = 0;
};

ExtremalResult ex_planar(int n, const ForbiddenFamily& fam, const SearchOptions& opt = {});

// every isomorphism class of family-free planar graphs on exactly n vertices,
// disconnected ones included
void enumerate_planar_free(int n, const ForbiddenFamily& fam, const std::function<void(const Graph&)>& cb,
                           bool force = false);

struct RangeRow {
  int n = 0;
  int max_edges = -1;
  bool have_bound = false;
  Rational bound;
  bool within = false;
  bool tight = false;
};

std::vector<RangeRow> verify_bound_range(const std::string& family, int lo, int hi,
                                         const SearchOptions& opt = {});

nlohmann::ordered_json extremal_result_json(const ExtremalResult& r);

}  // namespace ptn
