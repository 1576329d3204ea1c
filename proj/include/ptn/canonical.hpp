#pragma once
// Canonical labelings for graphs on at most 64 vertices.
//
// canonical_form: the labeling minimizing the upper-triangular edge bit
// string x(0,1), x(0,2), x(1,2), x(0,3), ... over all n! relabelings.
// Column-major upper triangle is exactly the graph6 body bit order, so the
// minimum code corresponds to the lexicographically least graph6 string.
//
// refined_canonical: canonical labeling restricted to orderings compatible
// with iterated equitable refinement. Not the global lex-min code, but a
// canonical invariant in its own right, and far cheaper on the sparse graphs
// the search generates. The two agree on isomorphism classes; tests verify
// this exhaustively for small n.
//
// Both engines accumulate automorphisms found at coinciding leaves and
// return the induced vertex orbit partition.

#include <vector>

#include "ptn/graph.hpp"

namespace ptn {

struct CanonicalForm {
  int n = 0;
  std::vector<uint64_t> cols;  // cols[p] = adjacency bits of position p vs positions < p, MSB = position 0

  bool operator==(const CanonicalForm& o) const { return n == o.n && cols == o.cols; }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return cols < o.cols;
  }
};

uint64_t canonical_hash(const CanonicalForm& f);
Graph from_canonical(const CanonicalForm& f);

struct CanonResult {
  CanonicalForm form;
  std::array<uint8_t, kMaxN> labeling{};  // labeling[position] = original vertex
  std::vector<int> orbit;                 // orbit[v] = least vertex in v's orbit
  size_t generators = 0;
};

CanonResult canonical_form(const Graph& g);
CanonResult refined_canonical(const Graph& g);

std::string canonical_g6(const Graph& g);

}  // namespace ptn
