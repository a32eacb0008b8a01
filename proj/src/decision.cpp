#include "decision.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace mng {

namespace {

// base^exp <= bound, without overflow.
bool power_within(std::size_t base, std::size_t exp, std::size_t bound) {
  if (base <= 1) return true;
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (total > bound / base) return false;
    total *= base;
  }
  return total <= bound;
}

// Calls fn(sigma) for every assignment in Gamma^{V(g)}, vertices in
// lexicographic order, element indices as an odometer (identity first).
// Stops when fn returns true.
bool for_each_assignment(
    const MixedGraph& g, const SwitchingGroup& gamma,
    const std::function<bool(const SwitchAssignment&)>& fn) {
  const auto& verts = g.vertices();
  const auto& elems = gamma.elements();
  std::vector<std::size_t> digits(verts.size(), 0);
  while (true) {
    SwitchAssignment sigma;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (digits[i] != 0) sigma[verts[i]] = elems[digits[i]];
    if (fn(sigma)) return true;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == elems.size()) digits[k++] = 0;
    if (k == digits.size()) return false;
  }
}

std::vector<std::string> target_vertices(int k) {
  int width = 1;
  for (int t = k; t >= 10; t /= 10) ++width;
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) {
    std::string num = std::to_string(i);
    out.push_back("t" + std::string(width - num.size(), '0') + num);
  }
  return out;
}

// Enumerates every complete target on k vertices (one edge colour or one
// oriented arc colour per pair) in a fixed odometer order; stops when fn
// returns true. Returns false if no target was accepted.
bool for_each_target(const ColourParams& params, int k, std::size_t bound,
                     const std::function<bool(const MixedGraph&)>& fn) {
  const auto verts = target_vertices(k);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});

  const std::size_t options = params.m + 2 * params.n;
  if (options == 0) {
    // Only the element-free target exists (and only as a degenerate case).
    return fn(MixedGraph(params, verts, {}, {}));
  }
  if (!power_within(options, pairs.size(), bound))
    throw Error("SearchSpaceTooLarge",
                "(m+2n)^C(k,2) exceeds bound " + std::to_string(bound));

  std::vector<std::size_t> digits(pairs.size(), 0);
  while (true) {
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const std::string& a = verts[pairs[p].first];
      const std::string& b = verts[pairs[p].second];
      std::size_t o = digits[p];
      if (o < static_cast<std::size_t>(params.m)) {
        edges.push_back({a, b, static_cast<int>(o) + 1});
      } else if (o < static_cast<std::size_t>(params.m + params.n)) {
        arcs.push_back({a, b, static_cast<int>(o) - params.m + 1});
      } else {
        arcs.push_back({b, a, static_cast<int>(o) - params.m - params.n + 1});
      }
    }
    if (fn(MixedGraph(params, verts, edges, arcs))) return true;
    std::size_t p = 0;
    while (p < digits.size() && ++digits[p] == options) digits[p++] = 0;
    if (p == digits.size()) return false;
  }
}

SwitchHomWitness extract_witness(const MixedGraph& g,
                                 const SwitchingGroup& gamma,
                                 const ProductVertexIndex& index,
                                 const VertexMap& into_product) {
  SwitchHomWitness w;
  for (const auto& v : g.vertices()) {
    auto [x, i] = index.decode(into_product(v));
    SwitchElement inv = invert(gamma.elements()[i]);
    if (!inv.is_identity()) w.assignment[v] = inv;
    w.mapping.map[v] = x;
  }
  return w;
}

}  // namespace

bool verify_switch_hom(const MixedGraph& g, const MixedGraph& h,
                       const SwitchHomWitness& w) {
  return verify_hom(apply_assignment(g, w.assignment), h, w.mapping);
}

std::optional<SwitchHomWitness> switchable_hom(const MixedGraph& g,
                                               const MixedGraph& h,
                                               const SwitchingGroup& gamma,
                                               DecisionLimits limits) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "switchable_hom requires an Abelian group");
  if (!(g.params() == h.params()))
    throw Error("ParamMismatch", "graphs must share (m,n)");
  auto [ph, index] = p_gamma(h, gamma, limits.product_cap);
  auto f = find_hom(g, ph);
  if (!f) return std::nullopt;
  SwitchHomWitness w = extract_witness(g, gamma, index, *f);
  if (!verify_switch_hom(g, h, w))
    throw Error("InternalError", "extracted witness failed verification");
  return w;
}

std::optional<SwitchHomWitness> oracle_switchable_hom(
    const MixedGraph& g, const MixedGraph& h, const SwitchingGroup& gamma,
    DecisionLimits limits) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "the assignment normal form requires an Abelian group");
  if (!(g.params() == h.params()))
    throw Error("ParamMismatch", "graphs must share (m,n)");
  if (!power_within(gamma.order(), g.vertices().size(),
                    limits.oracle_assignments))
    throw Error("SearchSpaceTooLarge", "|Gamma|^|V| exceeds oracle bound");
  std::optional<SwitchHomWitness> found;
  for_each_assignment(g, gamma, [&](const SwitchAssignment& sigma) {
    if (auto f = find_hom(apply_assignment(g, sigma), h)) {
      found = SwitchHomWitness{sigma, *f};
      return true;
    }
    return false;
  });
  return found;
}

SwitchIsoResult switchable_iso(const MixedGraph& g, const MixedGraph& h,
                               const SwitchingGroup& gamma,
                               DecisionLimits limits) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "switchable_iso requires an Abelian group");
  auto pg = p_gamma(g, gamma, limits.product_cap).first;
  auto ph = p_gamma(h, gamma, limits.product_cap).first;
  SwitchIsoResult result;
  result.iso = find_iso(pg, ph).has_value();
  if (result.iso &&
      power_within(gamma.order(), g.vertices().size(),
                   limits.oracle_assignments)) {
    for_each_assignment(g, gamma, [&](const SwitchAssignment& sigma) {
      if (auto f = find_iso(apply_assignment(g, sigma), h)) {
        result.witness = SwitchHomWitness{sigma, *f};
        return true;
      }
      return false;
    });
    if (!result.witness)
      throw Error("InternalError",
                  "product isomorphism with no direct switching witness");
  }
  return result;
}

bool oracle_switchable_iso(const MixedGraph& g, const MixedGraph& h,
                           const SwitchingGroup& gamma,
                           DecisionLimits limits) {
  if (!power_within(gamma.order(), g.vertices().size(),
                    limits.oracle_assignments))
    throw Error("SearchSpaceTooLarge", "|Gamma|^|V| exceeds oracle bound");
  return for_each_assignment(g, gamma, [&](const SwitchAssignment& sigma) {
    return find_iso(apply_assignment(g, sigma), h).has_value();
  });
}

bool is_switchable_core(const MixedGraph& g, const SwitchingGroup& gamma,
                        DecisionLimits limits) {
  // Quotient the product by identical coloured adjacency. This is slightly
  // coarser than the quotient used by s_gamma: the reversal bits only matter
  // on arc colours incident with the vertex. Two fiber-mates that differ only
  // on absent colours have the same neighbourhoods, and keeping both would
  // wrongly report a fold (an isolated vertex would never count as a core).
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "is_switchable_core requires an Abelian group");
  auto [pg, index] = p_gamma(g, gamma, limits.product_cap);
  const auto& elems = gamma.elements();
  std::set<std::string> reps;
  for (const auto& v : g.vertices()) {
    auto ecols = g.incident_edge_colours(v);
    auto acols = g.incident_arc_colours(v);
    std::map<std::vector<int>, std::size_t> best;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::vector<int> key;
      for (int c : ecols) key.push_back(elems[i].edge_image(c));
      for (int c : acols) {
        key.push_back(elems[i].arc_image(c));
        key.push_back(elems[i].reverses(c) ? 1 : 0);
      }
      auto [it, fresh] = best.emplace(key, i);
      if (!fresh && elems[i].canonical() < elems[it->second].canonical())
        it->second = i;
    }
    for (const auto& [key, i] : best) reps.insert(index.id(v, i));
  }
  return !find_non_surjective_endo(pg.induced(reps)).has_value();
}

bool oracle_is_switchable_core(const MixedGraph& g,
                               const SwitchingGroup& gamma,
                               DecisionLimits limits) {
  // A switchable homomorphism to a proper subgraph cannot be onto V(G), so
  // it factors through some vertex-deleted induced subgraph.
  std::set<std::string> all(g.vertices().begin(), g.vertices().end());
  for (const auto& w : g.vertices()) {
    std::set<std::string> rest = all;
    rest.erase(w);
    if (oracle_switchable_hom(g, g.induced(rest), gamma, limits))
      return false;
  }
  return true;
}

MixedGraph switchable_core_of(const MixedGraph& g, const SwitchingGroup& gamma,
                              DecisionLimits limits) {
  MixedGraph cur = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::set<std::string> all(cur.vertices().begin(), cur.vertices().end());
    for (const auto& w : cur.vertices()) {
      std::set<std::string> rest = all;
      rest.erase(w);
      if (switchable_hom(cur, cur.induced(rest), gamma, limits)) {
        cur = cur.induced(rest);
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

std::optional<ColouringWitness> k_colourable(const MixedGraph& g, int k,
                                             DecisionLimits limits) {
  if (k < 1) throw Error("InvalidArgument", "k must be positive");
  std::optional<ColouringWitness> found;
  for_each_target(g.params(), k, limits.colouring_targets,
                  [&](const MixedGraph& target) {
                    if (auto f = find_hom(g, target)) {
                      found = ColouringWitness{target, {{}, *f}};
                      return true;
                    }
                    return false;
                  });
  return found;
}

std::optional<ColouringWitness> switchable_k_colourable(
    const MixedGraph& g, const SwitchingGroup& gamma, int k,
    DecisionLimits limits) {
  if (k < 1) throw Error("InvalidArgument", "k must be positive");
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "switchable colouring requires an Abelian group");
  std::optional<ColouringWitness> found;
  for_each_target(g.params(), k, limits.colouring_targets,
                  [&](const MixedGraph& target) {
                    if (auto w = switchable_hom(g, target, gamma, limits)) {
                      found = ColouringWitness{target, *w};
                      return true;
                    }
                    return false;
                  });
  return found;
}

namespace {

// Least neighbour of each product vertex per (relation kind, colour); in the
// colour-regular target all same-key neighbours are interchangeable (they lie
// in the same fiber and have identical coloured adjacency).
struct RegularTargetIndex {
  std::map<std::string, std::map<std::pair<int, int>, std::string>> nbr;
  static constexpr int kEdge = 0, kOut = 1, kIn = 2;

  explicit RegularTargetIndex(const MixedGraph& p) {
    auto update = [&](const std::string& at, int kind, int colour,
                      const std::string& other) {
      auto& slot = nbr[at];
      auto key = std::make_pair(kind, colour);
      auto it = slot.find(key);
      if (it == slot.end() || other < it->second) slot[key] = other;
    };
    for (const Edge& e : p.edges()) {
      update(e.u, kEdge, e.colour, e.v);
      update(e.v, kEdge, e.colour, e.u);
    }
    for (const Arc& a : p.arcs()) {
      update(a.tail, kOut, a.colour, a.head);
      update(a.head, kIn, a.colour, a.tail);
    }
  }

  const std::string* find(const std::string& at, int kind, int colour) const {
    auto it = nbr.find(at);
    if (it == nbr.end()) return nullptr;
    auto jt = it->second.find({kind, colour});
    return jt == it->second.end() ? nullptr : &jt->second;
  }
};

}  // namespace

std::optional<ColouringWitness> switchable_2_colourable_fast(
    const MixedGraph& g, const SwitchingGroup& gamma) {
  if (!gamma.abelian())
    throw Error("NonAbelianGroup",
                "switchable colouring requires an Abelian group");
  const ColourParams& params = g.params();
  const auto verts2 = target_vertices(2);

  if (g.edges().empty() && g.arcs().empty()) {
    // 1-colourable, hence 2-colourable: a 2-vertex target imposes nothing.
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    if (params.m > 0)
      edges.push_back({verts2[0], verts2[1], 1});
    else if (params.n > 0)
      arcs.push_back({verts2[0], verts2[1], 1});
    MixedGraph target(params, verts2, edges, arcs);
    SwitchHomWitness w;
    for (const auto& v : g.vertices()) w.mapping.map[v] = verts2[0];
    return ColouringWitness{target, w};
  }
  if (!g.edges().empty() && !g.arcs().empty()) return std::nullopt;

  const bool edge_case = g.arcs().empty();
  // Occurring colours must lie in a single Gamma-orbit.
  std::set<int> occurring;
  if (edge_case)
    for (const Edge& e : g.edges()) occurring.insert(e.colour);
  else
    for (const Arc& a : g.arcs()) occurring.insert(a.colour);
  int c0 = *occurring.begin();
  const std::vector<int>& orbit =
      edge_case ? gamma.edge_orbit_of(c0) : gamma.arc_orbit_of(c0);
  for (int c : occurring)
    if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
      return std::nullopt;

  std::vector<Edge> tedges;
  std::vector<Arc> tarcs;
  if (edge_case)
    tedges.push_back({verts2[0], verts2[1], c0});
  else
    tarcs.push_back({verts2[0], verts2[1], c0});
  MixedGraph target(params, verts2, tedges, tarcs);
  auto [p, index] = p_gamma(target, gamma, 2 * gamma.order());
  RegularTargetIndex reg(p);

  // Per-component propagation: each edge/arc forces the image of the other
  // endpoint up to interchangeable fiber-mates, so a root image determines
  // the whole component.
  std::map<std::string, std::string> image;
  for (const auto& root : g.vertices()) {
    if (image.count(root)) continue;
    bool placed = false;
    for (const auto& p0 : p.vertices()) {
      std::map<std::string, std::string> local{{root, p0}};
      std::deque<std::string> queue{root};
      bool ok = true;
      while (ok && !queue.empty()) {
        std::string u = queue.front();
        queue.pop_front();
        const std::string& pu = local[u];
        auto force = [&](const std::string& other, int kind, int colour) {
          const std::string* q = reg.find(pu, kind, colour);
          if (!q) {
            ok = false;
            return;
          }
          auto it = local.find(other);
          if (it == local.end()) {
            local[other] = *q;
            queue.push_back(other);
            return;
          }
          // Already placed: the existing image must carry the relation.
          Relation r = p.relation(pu, it->second);
          RelKind want = kind == RegularTargetIndex::kEdge ? RelKind::Edge
                         : kind == RegularTargetIndex::kOut ? RelKind::ArcOut
                                                            : RelKind::ArcIn;
          if (r.kind != want || r.colour != colour) ok = false;
        };
        for (const auto& e : g.incident_edges(u)) {
          force(e.other, RegularTargetIndex::kEdge, e.colour);
          if (!ok) break;
        }
        if (!ok) break;
        for (const auto& a : g.incident_arcs(u)) {
          force(a.other,
                a.outgoing ? RegularTargetIndex::kOut : RegularTargetIndex::kIn,
                a.colour);
          if (!ok) break;
        }
      }
      if (ok) {
        image.insert(local.begin(), local.end());
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }

  VertexMap into_product;
  into_product.map = std::move(image);
  SwitchHomWitness w = extract_witness(g, gamma, index, into_product);
  if (!verify_switch_hom(g, target, w))
    throw Error("InternalError", "2-colouring witness failed verification");
  return ColouringWitness{target, w};
}

}  // namespace mng
