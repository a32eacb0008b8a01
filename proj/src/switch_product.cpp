#include "switch_product.hpp"

#include <algorithm>

namespace mng {

ProductVertexIndex::ProductVertexIndex(std::vector<std::string> base_vertices,
                                       std::size_t group_order)
    : base_(std::move(base_vertices)), order_(group_order) {}

std::string ProductVertexIndex::id(const std::string& v,
                                   std::size_t elem_index) const {
  return v + "@" + std::to_string(elem_index);
}

std::pair<std::string, std::size_t> ProductVertexIndex::decode(
    const std::string& pid) const {
  auto pos = pid.rfind('@');
  if (pos == std::string::npos)
    throw Error("UnknownVertex", "not a product vertex: " + pid);
  return {pid.substr(0, pos), std::stoul(pid.substr(pos + 1))};
}

std::vector<std::string> ProductVertexIndex::fiber(const std::string& v) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < order_; ++i) out.push_back(id(v, i));
  return out;
}

std::pair<MixedGraph, ProductVertexIndex> p_gamma(const MixedGraph& g,
                                                  const SwitchingGroup& gamma,
                                                  std::size_t cap) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup", "P_Gamma is defined for Abelian groups");
  if (!(g.params() == gamma.params()))
    throw Error("ParamMismatch", "graph and group disagree on (m,n)");
  if (g.vertices().size() * gamma.order() > cap)
    throw Error("OrderCapExceeded",
                "|V|*|Gamma| exceeds cap " + std::to_string(cap));

  ProductVertexIndex index(g.vertices(), gamma.order());
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices())
    for (std::size_t i = 0; i < gamma.order(); ++i)
      vertices.push_back(index.id(v, i));

  const auto& elems = gamma.elements();
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges())
    for (std::size_t i1 = 0; i1 < elems.size(); ++i1)
      for (std::size_t i2 = 0; i2 < elems.size(); ++i2) {
        int c = elems[i1].edge_image(elems[i2].edge_image(e.colour));
        edges.push_back({index.id(e.u, i1), index.id(e.v, i2), c});
      }
  for (const Arc& a : g.arcs())
    for (std::size_t i1 = 0; i1 < elems.size(); ++i1)
      for (std::size_t i2 = 0; i2 < elems.size(); ++i2) {
        const SwitchElement& g1 = elems[i1];
        const SwitchElement& g2 = elems[i2];
        int c = g2.arc_image(g1.arc_image(a.colour));
        bool rev = g1.reverses(a.colour) ^ g2.reverses(g1.arc_image(a.colour));
        std::string t = index.id(a.tail, i1);
        std::string h = index.id(a.head, i2);
        arcs.push_back(rev ? Arc{h, t, c} : Arc{t, h, c});
      }
  return {MixedGraph(g.params(), vertices, edges, arcs), index};
}

MixedGraph transversal_subgraph(const MixedGraph& pg,
                                const ProductVertexIndex& index,
                                const SwitchingGroup& gamma,
                                const SwitchAssignment& selection) {
  for (const auto& [v, elem] : selection)
    if (std::find(index.base_vertices().begin(), index.base_vertices().end(),
                  v) == index.base_vertices().end())
      throw Error("IncompleteSelection", "unknown vertex " + v);
  std::set<std::string> picked;
  std::map<std::string, std::string> back;
  for (const auto& v : index.base_vertices()) {
    auto it = selection.find(v);
    std::size_t idx =
        it == selection.end() ? 0 : gamma.index_of(it->second);
    std::string pid = index.id(v, idx);
    picked.insert(pid);
    back[pid] = v;
  }
  return pg.induced(picked).relabel(back);
}

EquivClassTable equiv_classes(const MixedGraph& g,
                              const SwitchingGroup& gamma) {
  if (!(g.params() == gamma.params()))
    throw Error("ParamMismatch", "graph and group disagree on (m,n)");
  EquivClassTable table;
  const auto& elems = gamma.elements();
  for (const auto& v : g.vertices()) {
    auto ecols = g.incident_edge_colours(v);
    auto acols = g.incident_arc_colours(v);
    auto key = [&](const SwitchElement& e) {
      std::vector<int> k;
      for (int c : ecols) k.push_back(e.edge_image(c));
      for (int c : acols) k.push_back(e.arc_image(c));
      for (auto b : e.pi) k.push_back(b);
      return k;
    };
    std::map<std::vector<int>, std::size_t> class_index;
    auto& classes = table.classes[v];
    auto& class_of = table.class_of[v];
    class_of.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto k = key(elems[i]);
      auto [it, fresh] = class_index.emplace(k, classes.size());
      if (fresh) classes.push_back({});
      classes[it->second].push_back(i);
      class_of[i] = it->second;
    }
    auto& rep = table.rep[v];
    for (const auto& cls : classes) {
      std::size_t best = cls[0];
      for (std::size_t i : cls)
        if (elems[i].canonical() < elems[best].canonical()) best = i;
      rep.push_back(best);
    }
  }
  return table;
}

SGammaResult s_gamma(const MixedGraph& g, const SwitchingGroup& gamma,
                     std::size_t cap) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup", "S_Gamma is defined for Abelian groups");
  auto [pg, index] = p_gamma(g, gamma, cap);
  EquivClassTable table = equiv_classes(g, gamma);

  std::set<std::string> reps;
  for (const auto& v : g.vertices())
    for (std::size_t r : table.rep[v]) reps.insert(index.id(v, r));

  VertexMap retraction;
  for (const auto& v : g.vertices())
    for (std::size_t i = 0; i < gamma.order(); ++i) {
      std::size_t cls = table.class_of[v][i];
      retraction.map[index.id(v, i)] = index.id(v, table.rep[v][cls]);
    }

  SGammaResult result{pg.induced(reps), pg, index, std::move(table),
                      std::move(retraction)};
  for (const auto& v : result.graph.vertices())
    if (result.retraction(v) != v)
      throw Error("InternalError", "retraction does not fix " + v);
  if (!verify_hom(result.product, result.graph, result.retraction))
    throw Error("InternalError", "retraction is not a homomorphism");
  return result;
}

}  // namespace mng
