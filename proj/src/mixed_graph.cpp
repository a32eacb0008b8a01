#include "mixed_graph.hpp"

#include <algorithm>
#include <sstream>

namespace mng {

namespace {

std::pair<std::string, std::string> ordered_pair(const std::string& a,
                                                 const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

MixedGraph::MixedGraph(ColourParams params, std::vector<std::string> vertices,
                       const std::vector<Edge>& edges,
                       const std::vector<Arc>& arcs)
    : params_(params), vertices_(std::move(vertices)) {
  if (params_.m < 0 || params_.n < 0)
    throw Error("ColourOutOfRange", "negative colour count");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  vset_.insert(vertices_.begin(), vertices_.end());

  std::set<std::pair<std::string, std::string>> occupied;
  auto claim_pair = [&](const std::string& a, const std::string& b) {
    if (!occupied.insert(ordered_pair(a, b)).second)
      throw Error("ParallelElements",
                  "pair {" + a + "," + b + "} carries more than one element");
  };
  auto check_vertex = [&](const std::string& v) {
    if (!vset_.count(v)) throw Error("UnknownVertex", v);
  };

  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw Error("LoopFound", "edge at " + e.u);
    if (e.colour < 1 || e.colour > params_.m)
      throw Error("ColourOutOfRange",
                  "edge colour " + std::to_string(e.colour));
    claim_pair(e.u, e.v);
    auto [a, b] = ordered_pair(e.u, e.v);
    edges_.insert(Edge{a, b, e.colour});
  }
  for (const Arc& a : arcs) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) throw Error("LoopFound", "arc at " + a.tail);
    if (a.colour < 1 || a.colour > params_.n)
      throw Error("ColourOutOfRange",
                  "arc colour " + std::to_string(a.colour));
    claim_pair(a.tail, a.head);
    arcs_.insert(a);
  }

  for (const std::string& v : vertices_) {
    edge_inc_[v];
    arc_inc_[v];
  }
  for (const Edge& e : edges_) {
    edge_inc_[e.u].push_back({e.v, e.colour});
    edge_inc_[e.v].push_back({e.u, e.colour});
  }
  for (const Arc& a : arcs_) {
    arc_inc_[a.tail].push_back({a.head, a.colour, true});
    arc_inc_[a.head].push_back({a.tail, a.colour, false});
  }
}

Relation MixedGraph::relation(const std::string& u,
                              const std::string& v) const {
  auto [a, b] = ordered_pair(u, v);
  auto it = edges_.lower_bound(Edge{a, b, 0});
  if (it != edges_.end() && it->u == a && it->v == b)
    return {RelKind::Edge, it->colour};
  auto jt = arcs_.lower_bound(Arc{u, v, 0});
  if (jt != arcs_.end() && jt->tail == u && jt->head == v)
    return {RelKind::ArcOut, jt->colour};
  jt = arcs_.lower_bound(Arc{v, u, 0});
  if (jt != arcs_.end() && jt->tail == v && jt->head == u)
    return {RelKind::ArcIn, jt->colour};
  return {};
}

const std::vector<IncidentEdge>& MixedGraph::incident_edges(
    const std::string& v) const {
  auto it = edge_inc_.find(v);
  if (it == edge_inc_.end()) throw Error("UnknownVertex", v);
  return it->second;
}

const std::vector<IncidentArc>& MixedGraph::incident_arcs(
    const std::string& v) const {
  auto it = arc_inc_.find(v);
  if (it == arc_inc_.end()) throw Error("UnknownVertex", v);
  return it->second;
}

std::size_t MixedGraph::degree(const std::string& v) const {
  return incident_edges(v).size() + incident_arcs(v).size();
}

std::set<int> MixedGraph::incident_edge_colours(const std::string& v) const {
  std::set<int> out;
  for (const auto& e : incident_edges(v)) out.insert(e.colour);
  return out;
}

std::set<int> MixedGraph::incident_arc_colours(const std::string& v) const {
  std::set<int> out;
  for (const auto& a : incident_arcs(v)) out.insert(a.colour);
  return out;
}

MixedGraph MixedGraph::induced(const std::set<std::string>& s) const {
  for (const auto& v : s)
    if (!vset_.count(v)) throw Error("UnknownVertex", v);
  std::vector<Edge> es;
  std::vector<Arc> as;
  for (const Edge& e : edges_)
    if (s.count(e.u) && s.count(e.v)) es.push_back(e);
  for (const Arc& a : arcs_)
    if (s.count(a.tail) && s.count(a.head)) as.push_back(a);
  return MixedGraph(params_, {s.begin(), s.end()}, es, as);
}

MixedGraph MixedGraph::relabel(
    const std::map<std::string, std::string>& f) const {
  auto img = [&](const std::string& v) {
    auto it = f.find(v);
    if (it == f.end()) throw Error("UnknownVertex", "relabel misses " + v);
    return it->second;
  };
  std::vector<std::string> vs;
  for (const auto& v : vertices_) vs.push_back(img(v));
  std::vector<Edge> es;
  std::vector<Arc> as;
  for (const Edge& e : edges_) es.push_back({img(e.u), img(e.v), e.colour});
  for (const Arc& a : arcs_)
    as.push_back({img(a.tail), img(a.head), a.colour});
  return MixedGraph(params_, vs, es, as);
}

UnderlyingGraph underlying(const MixedGraph& g) {
  UnderlyingGraph u;
  u.vertices = g.vertices();
  for (const Edge& e : g.edges()) u.adjacency.insert({e.u, e.v});
  for (const Arc& a : g.arcs())
    u.adjacency.insert(a.tail < a.head
                           ? std::make_pair(a.tail, a.head)
                           : std::make_pair(a.head, a.tail));
  return u;
}

bool graphs_equal(const MixedGraph& a, const MixedGraph& b) {
  return a.params() == b.params() && a.vertices() == b.vertices() &&
         a.edges() == b.edges() && a.arcs() == b.arcs();
}

MixedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  ColourParams params;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;

  auto syntax = [&](const std::string& why) {
    throw Error("SyntaxError",
                "line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "mng") syntax("expected 'mng <m> <n>' header");
      if (!(ls >> params.m >> params.n) || params.m < 0 || params.n < 0)
        syntax("bad colour counts");
      have_header = true;
      continue;
    }
    if (tok == "v") {
      std::string v;
      while (ls >> v) vertices.push_back(v);
    } else if (tok == "e") {
      Edge e;
      if (!(ls >> e.u >> e.v >> e.colour)) syntax("expected 'e <u> <v> <c>'");
      edges.push_back(e);
    } else if (tok == "a") {
      Arc a;
      if (!(ls >> a.tail >> a.head >> a.colour))
        syntax("expected 'a <u> <v> <c>'");
      arcs.push_back(a);
    } else {
      syntax("unknown directive '" + tok + "'");
    }
  }
  if (!have_header) {
    lineno = 1;
    syntax("missing 'mng' header");
  }
  return MixedGraph(params, vertices, edges, arcs);
}

std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << "mng " << g.params().m << " " << g.params().n << "\n";
  if (!g.vertices().empty()) {
    out << "v";
    for (const auto& v : g.vertices()) out << " " << v;
    out << "\n";
  }
  for (const Edge& e : g.edges())
    out << "e " << e.u << " " << e.v << " " << e.colour << "\n";
  for (const Arc& a : g.arcs())
    out << "a " << a.tail << " " << a.head << " " << a.colour << "\n";
  return out.str();
}

}  // namespace mng
