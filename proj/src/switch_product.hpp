#pragma once

#include <map>
#include <string>
#include <vector>

#include "hom.hpp"
#include "mixed_graph.hpp"
#include "switch_group.hpp"
#include "switching.hpp"

namespace mng {

// Bijection between product vertex ids "<v>@<element-index>" and pairs
// (base vertex, group element index).
class ProductVertexIndex {
 public:
  ProductVertexIndex() = default;
  ProductVertexIndex(std::vector<std::string> base_vertices,
                     std::size_t group_order);

  std::string id(const std::string& v, std::size_t elem_index) const;
  std::pair<std::string, std::size_t> decode(const std::string& pid) const;
  std::vector<std::string> fiber(const std::string& v) const;
  const std::vector<std::string>& base_vertices() const { return base_; }
  std::size_t group_order() const { return order_; }

 private:
  std::vector<std::string> base_;
  std::size_t order_ = 0;
};

// The switching graph P_Gamma(G) on V(G) x Gamma. Adjacency is operational:
// the element joining (x,g1) and (y,g2) is the image of the G-element xy
// under switching at x by g1 and at y by g2.
std::pair<MixedGraph, ProductVertexIndex> p_gamma(const MixedGraph& g,
                                                  const SwitchingGroup& gamma,
                                                  std::size_t cap = 4096);

// Subgraph of P_Gamma(G) induced by {(v, selection(v))}, relabelled back to
// V(G). Vertices absent from the selection take the identity.
MixedGraph transversal_subgraph(const MixedGraph& pg,
                                const ProductVertexIndex& index,
                                const SwitchingGroup& gamma,
                                const SwitchAssignment& selection);

// Per-vertex partition of Gamma under agreement on incident edge colours,
// incident arc colours, and equal reversal vectors.
struct EquivClassTable {
  // classes[v]: element-index lists; class_of[v][i] = class containing i;
  // rep[v][k] = representative index of class k (least canonical form).
  std::map<std::string, std::vector<std::vector<std::size_t>>> classes;
  std::map<std::string, std::vector<std::size_t>> class_of;
  std::map<std::string, std::vector<std::size_t>> rep;
};

EquivClassTable equiv_classes(const MixedGraph& g, const SwitchingGroup& gamma);

struct SGammaResult {
  MixedGraph graph;          // S_Gamma(G): induced on class representatives
  MixedGraph product;        // P_Gamma(G)
  ProductVertexIndex index;
  EquivClassTable table;
  VertexMap retraction;      // V(P_Gamma(G)) -> V(S_Gamma(G)), fixes S
};

SGammaResult s_gamma(const MixedGraph& g, const SwitchingGroup& gamma,
                     std::size_t cap = 4096);

}  // namespace mng
