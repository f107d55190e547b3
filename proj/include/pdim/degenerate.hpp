#pragma once
#include <cstdint>
#include <vector>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"
#include "pdim/rng.hpp"

namespace pdim {

struct DegenerateParams {
  int k = 0;                 // 0: use the computed degeneracy; else must be >= it
  std::uint64_t seed = 0;
  int multiplier = 1;        // scales the coloring count p
  int max_retries = 64;
};

struct DegenerateResult {
  Encoding enc;
  int k = 0;        // degeneracy the run used
  int p = 0;        // colorings drawn per attempt; enc length is p + 1
  int retries = 0;  // index of the successful attempt
};

// Colors vertices along the given order; each vertex picks uniformly among
// the palette colors not used by its already-colored neighbors. Along a
// degeneracy order those neighbors number at most k, so a 3k palette leaves
// at least 2k choices. Returns colors by local vertex index.
// Throws BadOrder for a non-permutation and PaletteTooSmall when some vertex
// has no free color.
std::vector<int> constrained_random_coloring(const Graph& g, const std::vector<int>& order,
                                             int palette, SplitMix64& rng);

// Draws p = multiplier * ceil(8.317 k log2 n) constrained colorings with a 3k
// palette and checks that every non-adjacent pair shares a color in at least
// one of them; redraws the whole batch from the next attempt stream until the
// check passes (RetriesExhausted after max_retries). One extra coordinate
// carries the vertex index, making the map injective. Length is exactly p+1.
DegenerateResult encode_degenerate(const Graph& g, const DegenerateParams& params = {});

}  // namespace pdim
