#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decision.hpp"
#include "mixed_graph.hpp"
#include "switch_group.hpp"

namespace mng {

enum class WitnessKind {
  Hom,
  SwHom,
  Iso,
  SwIso,
  SwitchEq,
  Core,
  SwCore,
  Colour,
  SwColour,
};

std::string witness_kind_name(WitnessKind kind);
WitnessKind witness_kind_from_name(const std::string& name);

// Self-contained witness file: switch lines reference the embedded element
// list by index; Colour/Core kinds embed the target/core graph.
struct Witness {
  WitnessKind kind = WitnessKind::Hom;
  std::optional<ColourParams> group_params;
  std::vector<SwitchElement> elements;
  std::vector<std::pair<std::string, std::size_t>> switches;
  std::map<std::string, std::string> map;
  std::optional<MixedGraph> graph;
};

std::string serialize_witness(const Witness& w);
Witness parse_witness(std::string_view text);

Witness make_hom_witness(const VertexMap& f);
Witness make_iso_witness(const VertexMap& f);
Witness make_switch_hom_witness(WitnessKind kind, const SwitchingGroup& gamma,
                                const SwitchHomWitness& w);
Witness make_switch_eq_witness(const SwitchingGroup& gamma,
                               const SwitchAssignment& sigma);
Witness make_core_witness(const CoreResult& core);
Witness make_switch_core_witness(const SwitchingGroup& gamma,
                                 const MixedGraph& core,
                                 const SwitchHomWitness& onto);
Witness make_colouring_witness(const ColouringWitness& cw);
Witness make_switch_colouring_witness(const SwitchingGroup& gamma,
                                      const ColouringWitness& cw);

// Re-checks a witness against its instance. h is required for Hom/SwHom/
// Iso/SwIso/SwitchEq kinds and ignored otherwise; gamma, when given, must
// contain every element the witness uses. On failure, *why explains.
bool verify_witness(const Witness& w, const MixedGraph& g, const MixedGraph* h,
                    const SwitchingGroup* gamma, std::string* why = nullptr);

}  // namespace mng
