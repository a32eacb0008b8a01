#include "witness.hpp"

#include <sstream>

#include "switching.hpp"

namespace mng {

namespace {

const char* kKindNames[] = {"hom",      "swhom",  "iso",    "swiso",
                            "switcheq", "core",   "swcore", "colour",
                            "swcolour"};

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

SwitchAssignment assignment_of(const Witness& w) {
  SwitchAssignment sigma;
  for (const auto& [v, idx] : w.switches) {
    if (idx >= w.elements.size())
      throw Error("SyntaxError", "switch line references missing element");
    if (!w.elements[idx].is_identity()) sigma[v] = w.elements[idx];
  }
  return sigma;
}

bool check_iso(const MixedGraph& g, const MixedGraph& h, const VertexMap& f,
               std::string* why) {
  if (g.vertices().size() != h.vertices().size())
    return fail(why, "vertex counts differ");
  if (!verify_hom(g, h, f)) return fail(why, "map is not a homomorphism");
  VertexMap inv;
  for (const auto& [u, x] : f.map) {
    if (!inv.map.emplace(x, u).second) return fail(why, "map is not injective");
  }
  if (inv.map.size() != h.vertices().size())
    return fail(why, "map is not onto");
  if (!verify_hom(h, g, inv))
    return fail(why, "inverse is not a homomorphism");
  return true;
}

bool check_complete_target(const MixedGraph& t, std::string* why) {
  if (t.params().m + 2 * t.params().n == 0) return true;
  std::size_t pairs = t.vertices().size() * (t.vertices().size() - 1) / 2;
  if (t.edges().size() + t.arcs().size() != pairs)
    return fail(why, "target is not complete");
  return true;
}

}  // namespace

std::string witness_kind_name(WitnessKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

WitnessKind witness_kind_from_name(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kKindNames[i]) return static_cast<WitnessKind>(i);
  throw Error("SyntaxError", "unknown witness kind '" + name + "'");
}

std::string serialize_witness(const Witness& w) {
  std::ostringstream out;
  out << "witness " << witness_kind_name(w.kind) << "\n";
  if (w.group_params) {
    out << "group " << w.group_params->m << " " << w.group_params->n << " "
        << w.elements.size() << "\n";
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      const SwitchElement& e = w.elements[i];
      out << "elem " << i;
      if (w.group_params->m > 0) {
        out << " phi";
        for (int x : e.phi) out << " " << x;
      }
      if (w.group_params->n > 0) {
        out << " psi";
        for (int x : e.psi) out << " " << x;
        out << " pi";
        for (auto b : e.pi) out << " " << int(b);
      }
      out << "\n";
    }
  }
  for (const auto& [v, idx] : w.switches)
    out << "switch " << v << " " << idx << "\n";
  for (const auto& [u, x] : w.map) out << "map " << u << " " << x << "\n";
  if (w.graph) {
    out << "graph\n" << serialize_graph(*w.graph) << "endgraph\n";
  }
  return out.str();
}

Witness parse_witness(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  Witness w;
  bool have_header = false;
  std::size_t declared_elems = 0;

  auto syntax = [&](const std::string& why) {
    throw Error("SyntaxError", "line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "witness") syntax("expected 'witness <kind>' header");
      std::string kind;
      if (!(ls >> kind)) syntax("missing witness kind");
      w.kind = witness_kind_from_name(kind);
      have_header = true;
      continue;
    }
    if (tok == "group") {
      ColourParams p;
      if (!(ls >> p.m >> p.n >> declared_elems)) syntax("bad group line");
      w.group_params = p;
    } else if (tok == "elem") {
      if (!w.group_params) syntax("elem before group line");
      std::size_t idx;
      if (!(ls >> idx) || idx != w.elements.size())
        syntax("elem lines must be consecutive from 0");
      SwitchElement e;
      std::string section;
      if (w.group_params->m > 0) {
        if (!(ls >> section) || section != "phi") syntax("expected 'phi'");
        e.phi.resize(w.group_params->m);
        for (int& x : e.phi)
          if (!(ls >> x)) syntax("truncated phi images");
      }
      if (w.group_params->n > 0) {
        if (!(ls >> section) || section != "psi") syntax("expected 'psi'");
        e.psi.resize(w.group_params->n);
        for (int& x : e.psi)
          if (!(ls >> x)) syntax("truncated psi images");
        if (!(ls >> section) || section != "pi") syntax("expected 'pi'");
        e.pi.resize(w.group_params->n);
        for (auto& b : e.pi) {
          int x;
          if (!(ls >> x) || (x != 0 && x != 1)) syntax("pi bits must be 0/1");
          b = static_cast<std::uint8_t>(x);
        }
      }
      check_element(*w.group_params, e);
      w.elements.push_back(e);
    } else if (tok == "switch") {
      std::string v;
      std::size_t idx;
      if (!(ls >> v >> idx)) syntax("expected 'switch <vertex> <index>'");
      w.switches.push_back({v, idx});
    } else if (tok == "map") {
      std::string u, x;
      if (!(ls >> u >> x)) syntax("expected 'map <u> <x>'");
      w.map[u] = x;
    } else if (tok == "graph") {
      std::ostringstream block;
      bool closed = false;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("endgraph", 0) == 0) {
          closed = true;
          break;
        }
        block << line << "\n";
      }
      if (!closed) syntax("unterminated graph block");
      w.graph = parse_graph(block.str());
    } else {
      syntax("unknown directive '" + tok + "'");
    }
  }
  if (!have_header) {
    lineno = 1;
    syntax("missing 'witness' header");
  }
  if (w.group_params && declared_elems != w.elements.size())
    throw Error("SyntaxError", "group line element count mismatch");
  return w;
}

Witness make_hom_witness(const VertexMap& f) {
  Witness w;
  w.kind = WitnessKind::Hom;
  w.map = f.map;
  return w;
}

Witness make_iso_witness(const VertexMap& f) {
  Witness w;
  w.kind = WitnessKind::Iso;
  w.map = f.map;
  return w;
}

namespace {

void embed_group(Witness& w, const SwitchingGroup& gamma) {
  w.group_params = gamma.params();
  w.elements = gamma.elements();
}

void embed_switches(Witness& w, const SwitchingGroup& gamma,
                    const SwitchAssignment& sigma) {
  for (const auto& [v, elem] : sigma)
    w.switches.push_back({v, gamma.index_of(elem)});
}

}  // namespace

Witness make_switch_hom_witness(WitnessKind kind, const SwitchingGroup& gamma,
                                const SwitchHomWitness& shw) {
  Witness w;
  w.kind = kind;
  embed_group(w, gamma);
  embed_switches(w, gamma, shw.assignment);
  w.map = shw.mapping.map;
  return w;
}

Witness make_switch_eq_witness(const SwitchingGroup& gamma,
                               const SwitchAssignment& sigma) {
  Witness w;
  w.kind = WitnessKind::SwitchEq;
  embed_group(w, gamma);
  embed_switches(w, gamma, sigma);
  return w;
}

Witness make_core_witness(const CoreResult& core) {
  Witness w;
  w.kind = WitnessKind::Core;
  w.map = core.onto.map;
  w.graph = core.core;
  return w;
}

Witness make_switch_core_witness(const SwitchingGroup& gamma,
                                 const MixedGraph& core,
                                 const SwitchHomWitness& onto) {
  Witness w = make_switch_hom_witness(WitnessKind::SwCore, gamma, onto);
  w.graph = core;
  return w;
}

Witness make_colouring_witness(const ColouringWitness& cw) {
  Witness w;
  w.kind = WitnessKind::Colour;
  w.map = cw.witness.mapping.map;
  w.graph = cw.target;
  return w;
}

Witness make_switch_colouring_witness(const SwitchingGroup& gamma,
                                      const ColouringWitness& cw) {
  Witness w = make_switch_hom_witness(WitnessKind::SwColour, gamma,
                                      cw.witness);
  w.graph = cw.target;
  return w;
}

bool verify_witness(const Witness& w, const MixedGraph& g, const MixedGraph* h,
                    const SwitchingGroup* gamma, std::string* why) {
  const bool needs_switches =
      w.kind == WitnessKind::SwHom || w.kind == WitnessKind::SwIso ||
      w.kind == WitnessKind::SwitchEq || w.kind == WitnessKind::SwCore ||
      w.kind == WitnessKind::SwColour;
  if (gamma && needs_switches) {
    for (const auto& e : w.elements)
      if (!gamma->contains(e))
        return fail(why, "witness element not in the supplied group");
  }
  VertexMap f{w.map};
  switch (w.kind) {
    case WitnessKind::Hom:
      if (!h) return fail(why, "hom witness needs a target graph");
      return verify_hom(g, *h, f) || fail(why, "map is not a homomorphism");
    case WitnessKind::Iso:
      if (!h) return fail(why, "iso witness needs a target graph");
      return check_iso(g, *h, f, why);
    case WitnessKind::SwHom: {
      if (!h) return fail(why, "swhom witness needs a target graph");
      MixedGraph switched = apply_assignment(g, assignment_of(w));
      return verify_hom(switched, *h, f) ||
             fail(why, "switched graph does not map to target");
    }
    case WitnessKind::SwIso: {
      if (!h) return fail(why, "swiso witness needs a target graph");
      MixedGraph switched = apply_assignment(g, assignment_of(w));
      return check_iso(switched, *h, f, why);
    }
    case WitnessKind::SwitchEq: {
      if (!h) return fail(why, "switcheq witness needs a target graph");
      MixedGraph switched = apply_assignment(g, assignment_of(w));
      return graphs_equal(switched, *h) ||
             fail(why, "switched graph differs from target");
    }
    case WitnessKind::Core: {
      if (!w.graph) return fail(why, "core witness needs a graph block");
      std::set<std::string> cv(w.graph->vertices().begin(),
                               w.graph->vertices().end());
      if (!graphs_equal(*w.graph, g.induced(cv)))
        return fail(why, "core is not an induced subgraph");
      if (!verify_hom(g, *w.graph, f))
        return fail(why, "map is not a homomorphism onto the core");
      if (find_non_surjective_endo(*w.graph))
        return fail(why, "claimed core has a non-surjective endomorphism");
      return true;
    }
    case WitnessKind::SwCore: {
      if (!w.graph) return fail(why, "swcore witness needs a graph block");
      std::set<std::string> cv(w.graph->vertices().begin(),
                               w.graph->vertices().end());
      if (!graphs_equal(*w.graph, g.induced(cv)))
        return fail(why, "core is not an induced subgraph");
      MixedGraph switched = apply_assignment(g, assignment_of(w));
      if (!verify_hom(switched, *w.graph, f))
        return fail(why, "switched graph does not map to the core");
      if (!gamma && !w.group_params)
        return fail(why, "swcore witness needs an embedded group");
      SwitchingGroup grp =
          gamma ? *gamma
                : SwitchingGroup::closure(*w.group_params, w.elements);
      if (!is_switchable_core(*w.graph, grp))
        return fail(why, "claimed switchable core is not one");
      return true;
    }
    case WitnessKind::Colour: {
      if (!w.graph) return fail(why, "colour witness needs a target block");
      if (!check_complete_target(*w.graph, why)) return false;
      return verify_hom(g, *w.graph, f) ||
             fail(why, "map is not a colouring homomorphism");
    }
    case WitnessKind::SwColour: {
      if (!w.graph) return fail(why, "swcolour witness needs a target block");
      if (!check_complete_target(*w.graph, why)) return false;
      MixedGraph switched = apply_assignment(g, assignment_of(w));
      return verify_hom(switched, *w.graph, f) ||
             fail(why, "switched graph does not map to the target");
    }
  }
  return fail(why, "unhandled witness kind");
}

}  // namespace mng
