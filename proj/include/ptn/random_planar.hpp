#pragma once
// Seeded random plane graphs: grow a triangulation by repeated vertex
// insertion into a uniformly chosen face, then delete a uniform number of
// uniformly chosen edges (keeping at least two). The rotation system is
// maintained throughout, so the result is a valid embedding, possibly
// disconnected after deletions.

#include <random>

#include "ptn/embedding.hpp"

namespace ptn {

SmallEmbedding random_planar_embedding(int n, std::mt19937_64& rng);

}  // namespace ptn
