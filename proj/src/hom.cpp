#include "hom.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace mng {

namespace {

// Incident (kind, colour) signature as a bitmask: a vertex can only map to an
// image whose signature is a superset. Only valid for homomorphism targets;
// falls back to no filtering when m + 2n > 64.
std::uint64_t signature(const MixedGraph& g, const std::string& v) {
  const int m = g.params().m;
  const int n = g.params().n;
  if (m + 2 * n > 64) return 0;
  std::uint64_t s = 0;
  for (const auto& e : g.incident_edges(v)) s |= 1ull << (e.colour - 1);
  for (const auto& a : g.incident_arcs(v))
    s |= 1ull << (m + (a.outgoing ? 0 : n) + a.colour - 1);
  return s;
}

std::vector<std::string> degree_order(const MixedGraph& g) {
  std::vector<std::string> order = g.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     return g.degree(a) > g.degree(b);
                   });
  return order;
}

std::vector<std::string> neighbours_of(const MixedGraph& g,
                                       const std::string& v) {
  std::vector<std::string> out;
  for (const auto& e : g.incident_edges(v)) out.push_back(e.other);
  for (const auto& a : g.incident_arcs(v)) out.push_back(a.other);
  return out;
}

// Connected components of the underlying graph, each listed in a
// connectivity-guided search order: start at the component's highest-degree
// vertex, then repeatedly take the unplaced vertex with the most placed
// neighbours (ties: higher degree, then lexicographic).
std::vector<std::vector<std::string>> component_orders(const MixedGraph& g) {
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> comps;
  for (const auto& root : g.vertices()) {
    if (seen.count(root)) continue;
    std::vector<std::string> comp{root};
    seen.insert(root);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& w : neighbours_of(g, comp[i]))
        if (seen.insert(w).second) comp.push_back(w);
    std::sort(comp.begin(), comp.end());

    std::vector<std::string> order;
    std::map<std::string, std::size_t> placed_adj;
    std::set<std::string> remaining(comp.begin(), comp.end());
    while (!remaining.empty()) {
      const std::string* best = nullptr;
      for (const auto& v : remaining) {
        if (!best || placed_adj[v] > placed_adj[*best] ||
            (placed_adj[v] == placed_adj[*best] &&
             g.degree(v) > g.degree(*best)))
          best = &v;
      }
      std::string v = *best;
      remaining.erase(v);
      order.push_back(v);
      for (const auto& w : neighbours_of(g, v)) ++placed_adj[w];
    }
    comps.push_back(std::move(order));
  }
  return comps;
}

struct PairConstraint {
  std::size_t earlier;  // position in the search order
  RelKind kind;         // relation (current, earlier) in g
  int colour;
};

std::vector<std::vector<PairConstraint>> build_constraints(
    const MixedGraph& g, const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::vector<PairConstraint>> cons(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string& v = order[k];
    for (const auto& e : g.incident_edges(v))
      if (pos[e.other] < k)
        cons[k].push_back({pos[e.other], RelKind::Edge, e.colour});
    for (const auto& a : g.incident_arcs(v))
      if (pos[a.other] < k)
        cons[k].push_back({pos[a.other],
                           a.outgoing ? RelKind::ArcOut : RelKind::ArcIn,
                           a.colour});
  }
  return cons;
}

bool relation_matches(const MixedGraph& h, const std::string& u,
                      const std::string& w, RelKind kind, int colour) {
  Relation r = h.relation(u, w);
  return r.kind == kind && r.colour == colour;
}

}  // namespace

bool verify_hom(const MixedGraph& g, const MixedGraph& h, const VertexMap& f) {
  for (const auto& v : g.vertices()) {
    auto it = f.map.find(v);
    if (it == f.map.end() || !h.has_vertex(it->second)) return false;
  }
  for (const Edge& e : g.edges())
    if (!relation_matches(h, f(e.u), f(e.v), RelKind::Edge, e.colour))
      return false;
  for (const Arc& a : g.arcs())
    if (!relation_matches(h, f(a.tail), f(a.head), RelKind::ArcOut, a.colour))
      return false;
  return true;
}

std::optional<VertexMap> find_hom(const MixedGraph& g, const MixedGraph& h) {
  if (!(g.params() == h.params()))
    throw Error("ParamMismatch", "graphs must share (m,n)");
  if (g.vertices().empty()) return VertexMap{};
  if (h.vertices().empty()) return std::nullopt;

  std::vector<std::uint64_t> hsig;
  for (const auto& w : h.vertices()) hsig.push_back(signature(h, w));

  // Each underlying component maps independently; solving them separately
  // keeps an infeasible component from multiplying into the others.
  VertexMap f;
  for (const auto& order : component_orders(g)) {
    const auto cons = build_constraints(g, order);
    std::vector<std::uint64_t> vsig(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      vsig[i] = signature(g, order[i]);

    std::vector<std::size_t> image(order.size(), 0);
    std::function<bool(std::size_t)> search = [&](std::size_t k) {
      if (k == order.size()) return true;
      for (std::size_t c = 0; c < h.vertices().size(); ++c) {
        if ((vsig[k] & ~hsig[c]) != 0) continue;
        const std::string& cand = h.vertices()[c];
        bool ok = true;
        for (const auto& pc : cons[k])
          if (!relation_matches(h, cand, h.vertices()[image[pc.earlier]],
                                pc.kind, pc.colour)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        image[k] = c;
        if (search(k + 1)) return true;
      }
      return false;
    };
    if (!search(0)) return std::nullopt;
    for (std::size_t i = 0; i < order.size(); ++i)
      f.map[order[i]] = h.vertices()[image[i]];
  }
  return f;
}

std::optional<VertexMap> find_iso(const MixedGraph& g, const MixedGraph& h) {
  if (!(g.params() == h.params()))
    throw Error("ParamMismatch", "graphs must share (m,n)");
  if (g.vertices().size() != h.vertices().size() ||
      g.edges().size() != h.edges().size() ||
      g.arcs().size() != h.arcs().size())
    return std::nullopt;

  // Invariant: sorted multiset of incident (kind, colour) labels.
  auto profile = [](const MixedGraph& x, const std::string& v) {
    std::vector<std::pair<int, int>> p;
    for (const auto& e : x.incident_edges(v)) p.push_back({0, e.colour});
    for (const auto& a : x.incident_arcs(v))
      p.push_back({a.outgoing ? 1 : 2, a.colour});
    std::sort(p.begin(), p.end());
    return p;
  };
  std::map<std::string, std::vector<std::pair<int, int>>> gprof, hprof;
  std::map<std::vector<std::pair<int, int>>, int> gcount, hcount;
  for (const auto& v : g.vertices()) gcount[gprof[v] = profile(g, v)]++;
  for (const auto& w : h.vertices()) hcount[hprof[w] = profile(h, w)]++;
  if (gcount != hcount) return std::nullopt;

  const auto order = degree_order(g);
  std::vector<std::string> assigned(order.size());
  std::vector<bool> used(h.vertices().size(), false);

  // For an isomorphism the pairwise relation must match exactly, including
  // non-adjacency, against every previously assigned vertex.
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::string& v = order[k];
    for (std::size_t c = 0; c < h.vertices().size(); ++c) {
      if (used[c]) continue;
      const std::string& cand = h.vertices()[c];
      if (gprof[v] != hprof[cand]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Relation rg = g.relation(v, order[j]);
        Relation rh = h.relation(cand, assigned[j]);
        ok = rg.kind == rh.kind && rg.colour == rh.colour;
      }
      if (!ok) continue;
      used[c] = true;
      assigned[k] = cand;
      if (search(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  VertexMap f;
  for (std::size_t i = 0; i < order.size(); ++i) f.map[order[i]] = assigned[i];
  return f;
}

std::optional<VertexMap> find_non_surjective_endo(const MixedGraph& g) {
  // An endomorphism missing w is exactly a homomorphism to the subgraph
  // induced on V \ {w}.
  std::set<std::string> all(g.vertices().begin(), g.vertices().end());
  for (const auto& w : g.vertices()) {
    std::set<std::string> rest = all;
    rest.erase(w);
    if (auto f = find_hom(g, g.induced(rest))) return f;
  }
  return std::nullopt;
}

CoreResult core_of(const MixedGraph& g) {
  MixedGraph cur = g;
  VertexMap onto;
  for (const auto& v : g.vertices()) onto.map[v] = v;
  while (auto endo = find_non_surjective_endo(cur)) {
    std::set<std::string> image;
    for (const auto& [_, w] : endo->map) image.insert(w);
    cur = cur.induced(image);
    for (auto& [v, w] : onto.map) w = (*endo)(w);
  }
  return {cur, onto};
}

}  // namespace mng
