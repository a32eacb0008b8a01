#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mixed_graph.hpp"
#include "switch_group.hpp"

namespace mng {

struct SwitchingPair {
  std::string vertex;
  SwitchElement elem;
};

// One element per vertex (Abelian normal form of a switching sequence).
// Vertices absent from the map are treated as assigned the identity.
using SwitchAssignment = std::map<std::string, SwitchElement>;

// Switch at v: edges uv get colour phi(i); arcs incident with v of colour j
// get colour psi(j) and are reversed iff p_j = 1.
MixedGraph apply_switch(const MixedGraph& g, const std::string& v,
                        const SwitchElement& elem);

// Left-to-right fold of apply_switch.
MixedGraph apply_sequence(const MixedGraph& g,
                          const std::vector<SwitchingPair>& seq);

// Equals apply_sequence over vertices in lexicographic order; when the
// assigned elements pairwise commute the order is irrelevant.
MixedGraph apply_assignment(const MixedGraph& g, const SwitchAssignment& sigma);

// Finds sigma with apply_assignment(g, sigma) = h, or nullopt. Requires
// Abelian gamma and identical vertex sets/params.
std::optional<SwitchAssignment> switch_equal(const MixedGraph& g,
                                             const MixedGraph& h,
                                             const SwitchingGroup& gamma);

}  // namespace mng
