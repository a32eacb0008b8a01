#pragma once

#include <random>

#include "mixed_graph.hpp"
#include "switch_group.hpp"

namespace mng {

// Seeded instance generation for test corpora. Vertices are named v000,
// v001, ... (zero-padded so lexicographic order matches numeric order).
MixedGraph random_graph(std::mt19937_64& rng, const ColourParams& params,
                        int vertex_count, double density);

SwitchElement random_element(std::mt19937_64& rng, const ColourParams& params);

// Closes random commuting generator sets, rejecting non-Abelian or oversized
// closures.
SwitchingGroup random_abelian_group(std::mt19937_64& rng,
                                    const ColourParams& params,
                                    std::size_t max_order);

}  // namespace mng
