#pragma once
// graph6 encoding (undirected, no loops). Covers the short form (n <= 62)
// and the '~' long form (63 <= n < 2^18); the '~~' huge form is rejected.
// Bit order follows the format definition: columns of the upper triangle,
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit chunks,
// each chunk offset by 63.

#include <string>

#include "ptn/graph.hpp"

namespace ptn {

struct Graph6Error : std::runtime_error {
  size_t position;  // byte offset of the offending character
  Graph6Error(size_t pos, const std::string& what)
      : std::runtime_error(what + " (byte " + std::to_string(pos) + ")"), position(pos) {}
};

std::string graph6_encode(const LargeGraph& g);
inline std::string graph6_encode(const Graph& g) { return graph6_encode(widen(g)); }

LargeGraph graph6_decode(const std::string& s);

inline Graph graph6_decode_small(const std::string& s) {
  LargeGraph g = graph6_decode(s);
  if (g.n > kMaxN)
    throw Graph6Error(0, "graph6: " + std::to_string(g.n) + " vertices exceeds the 64 vertex cap here");
  return narrow(g);
}

}  // namespace ptn
