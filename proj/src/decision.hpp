#pragma once

#include <optional>

#include "hom.hpp"
#include "mixed_graph.hpp"
#include "switch_group.hpp"
#include "switch_product.hpp"
#include "switching.hpp"

namespace mng {

struct DecisionLimits {
  std::size_t product_cap = 4096;          // |V| * |Gamma| for P_Gamma
  std::size_t oracle_assignments = 1000000;  // |Gamma|^|V| bound
  std::size_t colouring_targets = 100000;    // (m+2n)^C(k,2) bound
};

// Assignment on V(G) plus a vertex map such that the switched graph maps
// homomorphically to H.
struct SwitchHomWitness {
  SwitchAssignment assignment;
  VertexMap mapping;
};

bool verify_switch_hom(const MixedGraph& g, const MixedGraph& h,
                       const SwitchHomWitness& w);

// Decides G ->_Gamma H through a homomorphism G -> P_Gamma(H); every
// returned witness is verified end-to-end before being returned.
std::optional<SwitchHomWitness> switchable_hom(const MixedGraph& g,
                                               const MixedGraph& h,
                                               const SwitchingGroup& gamma,
                                               DecisionLimits limits = {});

// Exhaustive enumeration over Gamma^{V(G)}; the semantics-defining oracle.
std::optional<SwitchHomWitness> oracle_switchable_hom(
    const MixedGraph& g, const MixedGraph& h, const SwitchingGroup& gamma,
    DecisionLimits limits = {});

struct SwitchIsoResult {
  bool iso = false;
  // Direct witness (assignment + bijection), extracted by enumeration when
  // within oracle bounds; may be absent for large instances.
  std::optional<SwitchHomWitness> witness;
};

// G iso_Gamma H iff P_Gamma(G) iso P_Gamma(H).
SwitchIsoResult switchable_iso(const MixedGraph& g, const MixedGraph& h,
                               const SwitchingGroup& gamma,
                               DecisionLimits limits = {});

// Direct enumeration of assignments followed by an isomorphism search.
bool oracle_switchable_iso(const MixedGraph& g, const MixedGraph& h,
                           const SwitchingGroup& gamma,
                           DecisionLimits limits = {});

// G is a Gamma-switchable core iff S_Gamma(G) is a core.
bool is_switchable_core(const MixedGraph& g, const SwitchingGroup& gamma,
                        DecisionLimits limits = {});

// Definition-level oracle: no switchable homomorphism to any vertex-deleted
// induced subgraph (equivalent to "no proper subgraph" for total maps).
bool oracle_is_switchable_core(const MixedGraph& g, const SwitchingGroup& gamma,
                               DecisionLimits limits = {});

// Unique (up to switchable isomorphism) switchable core, by eliminating
// vertices in lexicographic order.
MixedGraph switchable_core_of(const MixedGraph& g, const SwitchingGroup& gamma,
                              DecisionLimits limits = {});

struct ColouringWitness {
  MixedGraph target;  // k vertices, one edge-or-arc per pair (when m+2n > 0)
  SwitchHomWitness witness;
};

// Enumerates complete targets on k vertices in a fixed order and returns the
// first admitting a (plain) homomorphism from g.
std::optional<ColouringWitness> k_colourable(const MixedGraph& g, int k,
                                             DecisionLimits limits = {});

// Same enumeration but against switchable_hom.
std::optional<ColouringWitness> switchable_k_colourable(
    const MixedGraph& g, const SwitchingGroup& gamma, int k,
    DecisionLimits limits = {});

// Polynomial-time decision for k = 2 via propagation into the colour-regular
// target P_Gamma(K_2).
std::optional<ColouringWitness> switchable_2_colourable_fast(
    const MixedGraph& g, const SwitchingGroup& gamma);

}  // namespace mng
