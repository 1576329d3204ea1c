#pragma once
// Planarity testing by face expansion per biconnected block, merging block
// rotations at cut vertices. Returns a rotation-system embedding for planar
// inputs; for nonplanar inputs, a verdict naming the obstruction block.

#include "ptn/embedding.hpp"
#include "ptn/graph.hpp"

namespace ptn {

struct PlanarityResult {
  bool planar = false;
  SmallEmbedding embedding;  // meaningful iff planar
  std::string note;          // reason when nonplanar
};

PlanarityResult test_planarity(const Graph& g);

inline bool is_planar(const Graph& g) { return test_planarity(g).planar; }

}  // namespace ptn
