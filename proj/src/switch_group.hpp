#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixed_graph.hpp"

namespace mng {

// Element (phi, psi, pi) of S_m x (S_2 wr S_n).
// phi[i-1] is the image of edge colour i; psi likewise for arc colours;
// pi[j-1] = 1 means arcs currently coloured j are reversed. The reversal bit
// is read at the colour an arc has *before* psi is applied.
struct SwitchElement {
  std::vector<int> phi;
  std::vector<int> psi;
  std::vector<std::uint8_t> pi;

  int edge_image(int c) const { return phi[c - 1]; }
  int arc_image(int j) const { return psi[j - 1]; }
  bool reverses(int j) const { return pi[j - 1] != 0; }
  bool is_identity() const;
  std::string canonical() const;  // "phi:...;psi:...;pi:..."

  friend auto operator<=>(const SwitchElement&, const SwitchElement&) = default;
};

SwitchElement identity_element(const ColourParams& params);

// Throws ParamMismatch / ColourOutOfRange if g is not a valid element for
// the given params.
void check_element(const ColourParams& params, const SwitchElement& g);

// compose(a, b) applied at a vertex equals applying b there, then a.
SwitchElement compose(const SwitchElement& a, const SwitchElement& b);
SwitchElement invert(const SwitchElement& g);
bool commute(const SwitchElement& a, const SwitchElement& b);

// Finite subgroup of S_m x (S_2 wr S_n) as an explicit element list.
// Element 0 is the identity; the order is breadth-first from the identity
// with generators applied in input order.
class SwitchingGroup {
 public:
  static SwitchingGroup closure(const ColourParams& params,
                                const std::vector<SwitchElement>& generators,
                                std::size_t cap = 4096);
  static SwitchingGroup trivial(const ColourParams& params);

  const ColourParams& params() const { return params_; }
  const std::vector<SwitchElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const SwitchElement& identity() const { return elements_[0]; }

  // Index of g in elements(); throws UnknownElement if absent.
  std::size_t index_of(const SwitchElement& g) const;
  bool contains(const SwitchElement& g) const;

  bool abelian() const { return abelian_; }
  const std::vector<std::vector<int>>& edge_orbits() const {
    return edge_orbits_;
  }
  const std::vector<std::vector<int>>& arc_orbits() const {
    return arc_orbits_;
  }
  bool transitive_on_edge_colours() const { return edge_orbits_.size() <= 1; }
  bool transitive_on_arc_colours() const { return arc_orbits_.size() <= 1; }

  // Orbit (as a sorted colour list) containing the given colour.
  const std::vector<int>& edge_orbit_of(int colour) const;
  const std::vector<int>& arc_orbit_of(int colour) const;

 private:
  SwitchingGroup() = default;
  void finish();  // abelian flag + orbits

  ColourParams params_;
  std::vector<SwitchElement> elements_;
  bool abelian_ = true;
  std::vector<std::vector<int>> edge_orbits_;
  std::vector<std::vector<int>> arc_orbits_;
};

// `grp` text format; the closure of the listed generators is computed on load.
SwitchingGroup parse_group(std::string_view text, std::size_t cap = 4096);
std::string serialize_group(const SwitchingGroup& gamma);

}  // namespace mng
