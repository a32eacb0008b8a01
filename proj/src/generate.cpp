#include "generate.hpp"

#include <algorithm>
#include <numeric>

namespace mng {

namespace {

std::string vertex_name(int i, int width) {
  std::string num = std::to_string(i);
  return "v" + std::string(width > static_cast<int>(num.size())
                               ? width - num.size()
                               : 0,
                           '0') +
         num;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int count) {
  std::vector<int> p(count);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

MixedGraph random_graph(std::mt19937_64& rng, const ColourParams& params,
                        int vertex_count, double density) {
  int width = 1;
  for (int t = vertex_count; t >= 10; t /= 10) ++width;
  std::vector<std::string> verts;
  for (int i = 0; i < vertex_count; ++i) verts.push_back(vertex_name(i, width));

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int options = params.m + 2 * params.n;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  if (options > 0) {
    std::uniform_int_distribution<int> pick(0, options - 1);
    for (int i = 0; i < vertex_count; ++i)
      for (int j = i + 1; j < vertex_count; ++j) {
        if (coin(rng) >= density) continue;
        int o = pick(rng);
        if (o < params.m)
          edges.push_back({verts[i], verts[j], o + 1});
        else if (o < params.m + params.n)
          arcs.push_back({verts[i], verts[j], o - params.m + 1});
        else
          arcs.push_back({verts[j], verts[i], o - params.m - params.n + 1});
      }
  }
  return MixedGraph(params, verts, edges, arcs);
}

SwitchElement random_element(std::mt19937_64& rng,
                             const ColourParams& params) {
  SwitchElement e;
  e.phi = random_permutation(rng, params.m);
  e.psi = random_permutation(rng, params.n);
  e.pi.resize(params.n);
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& b : e.pi) b = static_cast<std::uint8_t>(bit(rng));
  return e;
}

SwitchingGroup random_abelian_group(std::mt19937_64& rng,
                                    const ColourParams& params,
                                    std::size_t max_order) {
  std::uniform_int_distribution<int> gen_count(1, 2);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<SwitchElement> gens;
    int want = gen_count(rng);
    for (int i = 0; i < want; ++i) gens.push_back(random_element(rng, params));
    bool commuting = true;
    for (std::size_t i = 0; i < gens.size() && commuting; ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!commute(gens[i], gens[j])) {
          commuting = false;
          break;
        }
    if (!commuting) continue;
    try {
      SwitchingGroup gamma =
          SwitchingGroup::closure(params, gens, max_order);
      if (gamma.abelian()) return gamma;
    } catch (const Error&) {
      // OrderCapExceeded: try another generator set.
    }
  }
  return SwitchingGroup::trivial(params);
}

}  // namespace mng
