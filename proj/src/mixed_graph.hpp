#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mng {

struct ColourParams {
  int m = 0;  // number of edge colours
  int n = 0;  // number of arc colours
  friend bool operator==(const ColourParams&, const ColourParams&) = default;
};

// Undirected edge, stored with u < v.
struct Edge {
  std::string u, v;
  int colour = 1;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed arc tail -> head.
struct Arc {
  std::string tail, head;
  int colour = 1;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Relation between an ordered vertex pair (u, v):
// ArcOut means u->v, ArcIn means v->u.
enum class RelKind { None, Edge, ArcOut, ArcIn };

struct Relation {
  RelKind kind = RelKind::None;
  int colour = 0;
};

struct IncidentEdge {
  std::string other;
  int colour;
};

struct IncidentArc {
  std::string other;
  int colour;
  bool outgoing;  // true: this vertex is the tail
};

// Immutable (m,n)-mixed graph over a simple underlying graph.
// Vertices are opaque case-sensitive strings ordered lexicographically.
class MixedGraph {
 public:
  MixedGraph() = default;
  MixedGraph(ColourParams params, std::vector<std::string> vertices,
             const std::vector<Edge>& edges, const std::vector<Arc>& arcs);

  const ColourParams& params() const { return params_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<Arc>& arcs() const { return arcs_; }

  bool has_vertex(const std::string& v) const { return vset_.count(v) != 0; }

  // Relation of the ordered pair (u, v); None if non-adjacent.
  Relation relation(const std::string& u, const std::string& v) const;

  const std::vector<IncidentEdge>& incident_edges(const std::string& v) const;
  const std::vector<IncidentArc>& incident_arcs(const std::string& v) const;
  std::size_t degree(const std::string& v) const;

  // Edge colours / arc colours appearing on elements incident with v.
  std::set<int> incident_edge_colours(const std::string& v) const;
  std::set<int> incident_arc_colours(const std::string& v) const;

  MixedGraph induced(const std::set<std::string>& s) const;

  // Rename vertices; f must be injective on V.
  MixedGraph relabel(const std::map<std::string, std::string>& f) const;

 private:
  ColourParams params_;
  std::vector<std::string> vertices_;  // sorted
  std::set<std::string> vset_;
  std::set<Edge> edges_;
  std::set<Arc> arcs_;
  std::map<std::string, std::vector<IncidentEdge>> edge_inc_;
  std::map<std::string, std::vector<IncidentArc>> arc_inc_;
};

struct UnderlyingGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::string, std::string>> adjacency;  // first < second
  friend bool operator==(const UnderlyingGraph&, const UnderlyingGraph&) = default;
};

UnderlyingGraph underlying(const MixedGraph& g);

// Labelled equality: same params, vertex set, coloured edge and arc sets.
bool graphs_equal(const MixedGraph& a, const MixedGraph& b);

// `mng` text format.
MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

}  // namespace mng
