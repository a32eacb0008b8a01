#include "switching.hpp"

#include <algorithm>
#include <functional>

namespace mng {

MixedGraph apply_switch(const MixedGraph& g, const std::string& v,
                        const SwitchElement& elem) {
  if (!g.has_vertex(v)) throw Error("UnknownVertex", v);
  check_element(g.params(), elem);
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    int c = (e.u == v || e.v == v) ? elem.edge_image(e.colour) : e.colour;
    edges.push_back({e.u, e.v, c});
  }
  for (const Arc& a : g.arcs()) {
    if (a.tail == v || a.head == v) {
      bool rev = elem.reverses(a.colour);
      int c = elem.arc_image(a.colour);
      arcs.push_back(rev ? Arc{a.head, a.tail, c} : Arc{a.tail, a.head, c});
    } else {
      arcs.push_back(a);
    }
  }
  return MixedGraph(g.params(), g.vertices(), edges, arcs);
}

MixedGraph apply_sequence(const MixedGraph& g,
                          const std::vector<SwitchingPair>& seq) {
  MixedGraph cur = g;
  for (const auto& p : seq) cur = apply_switch(cur, p.vertex, p.elem);
  return cur;
}

MixedGraph apply_assignment(const MixedGraph& g,
                            const SwitchAssignment& sigma) {
  for (const auto& [v, elem] : sigma) {
    if (!g.has_vertex(v)) throw Error("UnknownVertex", v);
    check_element(g.params(), elem);
  }
  const SwitchElement id = identity_element(g.params());
  auto at = [&](const std::string& v) -> const SwitchElement& {
    auto it = sigma.find(v);
    return it == sigma.end() ? id : it->second;
  };

  // A switch at v only touches elements incident with v, so the lexicographic
  // fold acts on each edge/arc through its two endpoints in lexicographic
  // order. Applying that pairwise keeps the cost at O(|E| + |A|).
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    // e.u < e.v by construction.
    int c = at(e.v).edge_image(at(e.u).edge_image(e.colour));
    edges.push_back({e.u, e.v, c});
  }
  for (const Arc& a : g.arcs()) {
    const std::string& first = std::min(a.tail, a.head);
    const std::string& second = std::max(a.tail, a.head);
    const SwitchElement& g1 = at(first);
    const SwitchElement& g2 = at(second);
    bool rev = g1.reverses(a.colour) ^ g2.reverses(g1.arc_image(a.colour));
    int c = g2.arc_image(g1.arc_image(a.colour));
    arcs.push_back(rev ? Arc{a.head, a.tail, c} : Arc{a.tail, a.head, c});
  }
  return MixedGraph(g.params(), g.vertices(), edges, arcs);
}

std::optional<SwitchAssignment> switch_equal(const MixedGraph& g,
                                             const MixedGraph& h,
                                             const SwitchingGroup& gamma) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup", "switch_equal requires an Abelian group");
  if (g.vertices() != h.vertices())
    throw Error("VertexSetMismatch", "graphs must share a vertex set");
  if (!(g.params() == h.params()))
    throw Error("ParamMismatch", "graphs must share (m,n)");
  if (underlying(g) != underlying(h)) return std::nullopt;

  // Descending-degree variable order, ties lexicographic.
  std::vector<std::string> order = g.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     return g.degree(a) > g.degree(b);
                   });
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  std::vector<const SwitchElement*> chosen(order.size(), nullptr);

  // Check every element between order[k] and an earlier vertex once both
  // endpoints carry a tentative element.
  auto consistent = [&](std::size_t k) {
    const std::string& v = order[k];
    auto elem_at = [&](const std::string& w) -> const SwitchElement& {
      return *chosen[pos[w]];
    };
    auto decided = [&](const std::string& w) { return pos[w] < k; };
    for (const auto& ie : g.incident_edges(v)) {
      if (!decided(ie.other)) continue;
      const SwitchElement& a = elem_at(v);
      const SwitchElement& b = elem_at(ie.other);
      int c = a.edge_image(b.edge_image(ie.colour));
      Relation r = h.relation(v, ie.other);
      if (r.kind != RelKind::Edge || r.colour != c) return false;
    }
    for (const auto& ia : g.incident_arcs(v)) {
      if (!decided(ia.other)) continue;
      const std::string& tail = ia.outgoing ? v : ia.other;
      const std::string& head = ia.outgoing ? ia.other : v;
      const SwitchElement& g1 = elem_at(std::min(tail, head));
      const SwitchElement& g2 = elem_at(std::max(tail, head));
      bool rev = g1.reverses(ia.colour) ^ g2.reverses(g1.arc_image(ia.colour));
      int c = g2.arc_image(g1.arc_image(ia.colour));
      Relation r = h.relation(rev ? head : tail, rev ? tail : head);
      if (r.kind != RelKind::ArcOut || r.colour != c) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == order.size()) return true;
    for (const SwitchElement& cand : gamma.elements()) {
      chosen[k] = &cand;
      if (consistent(k) && search(k + 1)) return true;
    }
    chosen[k] = nullptr;
    return false;
  };
  if (!search(0)) return std::nullopt;

  SwitchAssignment sigma;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!chosen[i]->is_identity()) sigma[order[i]] = *chosen[i];
  return sigma;
}

}  // namespace mng
