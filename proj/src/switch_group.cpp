#include "switch_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mng {

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x - 1]) return false;
    seen[x - 1] = 1;
  }
  return true;
}

void append_images(std::ostringstream& out, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    out << (i ? " " : "") << p[i];
}

}  // namespace

bool SwitchElement::is_identity() const {
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] != static_cast<int>(i) + 1) return false;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (psi[i] != static_cast<int>(i) + 1) return false;
  for (auto b : pi)
    if (b) return false;
  return true;
}

std::string SwitchElement::canonical() const {
  std::ostringstream out;
  out << "phi:";
  append_images(out, phi);
  out << ";psi:";
  append_images(out, psi);
  out << ";pi:";
  for (std::size_t i = 0; i < pi.size(); ++i)
    out << (i ? " " : "") << int(pi[i]);
  return out.str();
}

SwitchElement identity_element(const ColourParams& params) {
  SwitchElement e;
  e.phi.resize(params.m);
  std::iota(e.phi.begin(), e.phi.end(), 1);
  e.psi.resize(params.n);
  std::iota(e.psi.begin(), e.psi.end(), 1);
  e.pi.assign(params.n, 0);
  return e;
}

void check_element(const ColourParams& params, const SwitchElement& g) {
  if (static_cast<int>(g.phi.size()) != params.m ||
      static_cast<int>(g.psi.size()) != params.n ||
      static_cast<int>(g.pi.size()) != params.n)
    throw Error("ParamMismatch", "element shape does not match (m,n)");
  if (!is_permutation_of_range(g.phi))
    throw Error("ColourOutOfRange", "phi is not a permutation of 1..m");
  if (!is_permutation_of_range(g.psi))
    throw Error("ColourOutOfRange", "psi is not a permutation of 1..n");
}

SwitchElement compose(const SwitchElement& a, const SwitchElement& b) {
  if (a.phi.size() != b.phi.size() || a.psi.size() != b.psi.size())
    throw Error("ParamMismatch", "composing elements of different shapes");
  SwitchElement r;
  r.phi.resize(a.phi.size());
  for (std::size_t i = 0; i < r.phi.size(); ++i)
    r.phi[i] = a.phi[b.phi[i] - 1];
  r.psi.resize(a.psi.size());
  r.pi.resize(a.pi.size());
  for (std::size_t j = 0; j < r.psi.size(); ++j) {
    r.psi[j] = a.psi[b.psi[j] - 1];
    // b acts first: an arc coloured j+1 is recoloured to psi_b(j+1), so a's
    // reversal bit is read at that colour.
    r.pi[j] = b.pi[j] ^ a.pi[b.psi[j] - 1];
  }
  return r;
}

SwitchElement invert(const SwitchElement& g) {
  SwitchElement r;
  r.phi.resize(g.phi.size());
  for (std::size_t i = 0; i < g.phi.size(); ++i)
    r.phi[g.phi[i] - 1] = static_cast<int>(i) + 1;
  r.psi.resize(g.psi.size());
  r.pi.resize(g.pi.size());
  for (std::size_t j = 0; j < g.psi.size(); ++j) {
    r.psi[g.psi[j] - 1] = static_cast<int>(j) + 1;
    r.pi[g.psi[j] - 1] = g.pi[j];
  }
  return r;
}

bool commute(const SwitchElement& a, const SwitchElement& b) {
  return compose(a, b) == compose(b, a);
}

SwitchingGroup SwitchingGroup::closure(
    const ColourParams& params, const std::vector<SwitchElement>& generators,
    std::size_t cap) {
  for (const auto& g : generators) check_element(params, g);
  SwitchingGroup gamma;
  gamma.params_ = params;
  gamma.elements_.push_back(identity_element(params));
  std::map<SwitchElement, std::size_t> seen{{gamma.elements_[0], 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      SwitchElement next = compose(gamma.elements_[cur], gen);
      if (seen.count(next)) continue;
      if (gamma.elements_.size() >= cap)
        throw Error("OrderCapExceeded",
                    "closure exceeds cap " + std::to_string(cap));
      seen.emplace(next, gamma.elements_.size());
      queue.push_back(gamma.elements_.size());
      gamma.elements_.push_back(next);
    }
  }
  gamma.finish();
  return gamma;
}

SwitchingGroup SwitchingGroup::trivial(const ColourParams& params) {
  return closure(params, {});
}

void SwitchingGroup::finish() {
  abelian_ = true;
  for (std::size_t i = 0; i < elements_.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (!commute(elements_[i], elements_[j])) {
        abelian_ = false;
        break;
      }

  auto orbits = [&](int count, auto image) {
    std::vector<int> root(count);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return root[x] == x ? x : root[x] = find(root[x]);
    };
    for (const auto& g : elements_)
      for (int c = 1; c <= count; ++c) {
        int a = find(c - 1), b = find(image(g, c) - 1);
        if (a != b) root[a] = b;
      }
    std::map<int, std::vector<int>> by_root;
    for (int c = 1; c <= count; ++c) by_root[find(c - 1)].push_back(c);
    std::vector<std::vector<int>> out;
    for (auto& [_, orb] : by_root) out.push_back(std::move(orb));
    return out;
  };
  edge_orbits_ = orbits(params_.m, [](const SwitchElement& g, int c) {
    return g.edge_image(c);
  });
  arc_orbits_ = orbits(params_.n, [](const SwitchElement& g, int c) {
    return g.arc_image(c);
  });
}

std::size_t SwitchingGroup::index_of(const SwitchElement& g) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == g) return i;
  throw Error("UnknownElement", g.canonical());
}

bool SwitchingGroup::contains(const SwitchElement& g) const {
  return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

const std::vector<int>& SwitchingGroup::edge_orbit_of(int colour) const {
  for (const auto& orb : edge_orbits_)
    if (std::find(orb.begin(), orb.end(), colour) != orb.end()) return orb;
  throw Error("ColourOutOfRange", "edge colour " + std::to_string(colour));
}

const std::vector<int>& SwitchingGroup::arc_orbit_of(int colour) const {
  for (const auto& orb : arc_orbits_)
    if (std::find(orb.begin(), orb.end(), colour) != orb.end()) return orb;
  throw Error("ColourOutOfRange", "arc colour " + std::to_string(colour));
}

SwitchingGroup parse_group(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  ColourParams params;
  std::vector<SwitchElement> generators;

  auto syntax = [&](const std::string& why) {
    throw Error("SyntaxError",
                "line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "grp") syntax("expected 'grp <m> <n>' header");
      if (!(ls >> params.m >> params.n) || params.m < 0 || params.n < 0)
        syntax("bad colour counts");
      have_header = true;
      continue;
    }
    if (tok != "gen") syntax("unknown directive '" + tok + "'");
    SwitchElement g;
    std::string section;
    if (params.m > 0) {
      if (!(ls >> section) || section != "phi") syntax("expected 'phi'");
      g.phi.resize(params.m);
      for (int& x : g.phi)
        if (!(ls >> x)) syntax("truncated phi images");
    }
    if (params.n > 0) {
      if (!(ls >> section) || section != "psi") syntax("expected 'psi'");
      g.psi.resize(params.n);
      for (int& x : g.psi)
        if (!(ls >> x)) syntax("truncated psi images");
      if (!(ls >> section) || section != "pi") syntax("expected 'pi'");
      g.pi.resize(params.n);
      for (auto& b : g.pi) {
        int x;
        if (!(ls >> x) || (x != 0 && x != 1)) syntax("pi bits must be 0/1");
        b = static_cast<std::uint8_t>(x);
      }
    }
    check_element(params, g);
    generators.push_back(g);
  }
  if (!have_header) {
    lineno = 1;
    syntax("missing 'grp' header");
  }
  return SwitchingGroup::closure(params, generators, cap);
}

std::string serialize_group(const SwitchingGroup& gamma) {
  std::ostringstream out;
  out << "grp " << gamma.params().m << " " << gamma.params().n << "\n";
  for (const auto& g : gamma.elements()) {
    out << "gen";
    if (gamma.params().m > 0) {
      out << " phi";
      for (int x : g.phi) out << " " << x;
    }
    if (gamma.params().n > 0) {
      out << " psi";
      for (int x : g.psi) out << " " << x;
      out << " pi";
      for (auto b : g.pi) out << " " << int(b);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mng
