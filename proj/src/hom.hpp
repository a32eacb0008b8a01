#pragma once

#include <map>
#include <optional>
#include <string>

#include "mixed_graph.hpp"

namespace mng {

// Total vertex function between two graphs; the witness currency of every
// decision procedure.
struct VertexMap {
  std::map<std::string, std::string> map;

  const std::string& operator()(const std::string& v) const {
    auto it = map.find(v);
    if (it == map.end()) throw Error("UnknownVertex", "map misses " + v);
    return it->second;
  }
};

// True iff f maps every coloured edge/arc of g to one of h, preserving
// colours and orientations.
bool verify_hom(const MixedGraph& g, const MixedGraph& h, const VertexMap& f);

// Backtracking over vertices in descending-degree order (ties lexicographic)
// with candidate images filtered by already-mapped neighbours.
std::optional<VertexMap> find_hom(const MixedGraph& g, const MixedGraph& h);

// Bijective homomorphism whose inverse is also a homomorphism.
std::optional<VertexMap> find_iso(const MixedGraph& g, const MixedGraph& h);

// Endomorphism of g whose image misses at least one vertex; absent iff g is
// a core.
std::optional<VertexMap> find_non_surjective_endo(const MixedGraph& g);

struct CoreResult {
  MixedGraph core;       // induced subgraph of the input
  VertexMap onto;        // verified homomorphism input -> core
};

// Greedy retract chain: repeatedly restrict to the image of a non-surjective
// endomorphism until none exists.
CoreResult core_of(const MixedGraph& g);

}  // namespace mng
