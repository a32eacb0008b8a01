#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "decision.hpp"
#include "generate.hpp"
#include "test_util.hpp"
#include "witness.hpp"

using namespace mng;
using testutil::make;

TEST_CASE("kind names round trip") {
  for (WitnessKind k :
       {WitnessKind::Hom, WitnessKind::SwHom, WitnessKind::Iso,
        WitnessKind::SwIso, WitnessKind::SwitchEq, WitnessKind::Core,
        WitnessKind::SwCore, WitnessKind::Colour, WitnessKind::SwColour})
    CHECK(witness_kind_from_name(witness_kind_name(k)) == k);
  CHECK_THROWS_WITH_AS(witness_kind_from_name("nope"),
                       doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("hom witness round trip and verification") {
  MixedGraph g =
      make({1, 0}, {"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 1}});
  MixedGraph h = make({1, 0}, {"x", "y"}, {{"x", "y", 1}});
  auto f = find_hom(g, h);
  REQUIRE(f.has_value());
  Witness w = make_hom_witness(*f);
  Witness back = parse_witness(serialize_witness(w));
  CHECK(back.kind == WitnessKind::Hom);
  CHECK(back.map == w.map);
  std::string why;
  CHECK(verify_witness(back, g, &h, nullptr, &why));

  Witness bad = back;
  bad.map["a"] = bad.map["b"];
  CHECK_FALSE(verify_witness(bad, g, &h, nullptr, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("switch hom witness embeds its group") {
  MixedGraph g =
      make({2, 0}, {"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 2}});
  MixedGraph h = make({2, 0}, {"x", "y"}, {{"x", "y", 1}});
  SwitchingGroup gamma = testutil::swap_group();
  auto sw = switchable_hom(g, h, gamma);
  REQUIRE(sw.has_value());
  Witness w = make_switch_hom_witness(WitnessKind::SwHom, gamma, *sw);
  Witness back = parse_witness(serialize_witness(w));
  CHECK(back.elements.size() == gamma.order());
  CHECK(verify_witness(back, g, &h, &gamma));
  CHECK(verify_witness(back, g, &h, nullptr));

  Witness bad = back;
  bad.switches.clear();
  CHECK_FALSE(verify_witness(bad, g, &h, nullptr));
}

TEST_CASE("iso witness") {
  std::mt19937_64 rng(51);
  MixedGraph g = random_graph(rng, {2, 1}, 4, 0.6);
  auto f = find_iso(g, g);
  REQUIRE(f.has_value());
  Witness w = parse_witness(serialize_witness(make_iso_witness(*f)));
  CHECK(verify_witness(w, g, &g, nullptr));

  MixedGraph h = make({2, 1}, {"a", "b"}, {{"a", "b", 1}});
  MixedGraph h2 = make({2, 1}, {"a", "b"}, {{"a", "b", 2}});
  VertexMap id{{{"a", "a"}, {"b", "b"}}};
  Witness bad = make_iso_witness(id);
  CHECK_FALSE(verify_witness(bad, h, &h2, nullptr));
  // A non-injective map cannot pass as an isomorphism.
  VertexMap fold{{{"a", "a"}, {"b", "a"}}};
  Witness bad2 = make_iso_witness(fold);
  CHECK_FALSE(verify_witness(bad2, h, &h, nullptr));
}

TEST_CASE("switch equality witness") {
  MixedGraph g = make({2, 0}, {"a", "b"}, {{"a", "b", 1}});
  MixedGraph h = make({2, 0}, {"a", "b"}, {{"a", "b", 2}});
  SwitchingGroup gamma = testutil::swap_group();
  auto sigma = switch_equal(g, h, gamma);
  REQUIRE(sigma.has_value());
  Witness w = parse_witness(
      serialize_witness(make_switch_eq_witness(gamma, *sigma)));
  CHECK(verify_witness(w, g, &h, &gamma));
  CHECK_FALSE(verify_witness(w, g, &g, &gamma));
}

TEST_CASE("core witness embeds the core graph") {
  MixedGraph g =
      make({1, 0}, {"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 1}});
  CoreResult r = core_of(g);
  Witness w = parse_witness(serialize_witness(make_core_witness(r)));
  REQUIRE(w.graph.has_value());
  CHECK(verify_witness(w, g, nullptr, nullptr));

  Witness bad = w;
  bad.graph = make({1, 0}, {"a", "b", "c"}, {{"a", "b", 1}});
  CHECK_FALSE(verify_witness(bad, g, nullptr, nullptr));
}

TEST_CASE("switchable core witness") {
  MixedGraph g =
      make({2, 0}, {"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 2}});
  SwitchingGroup gamma = testutil::swap_group();
  MixedGraph core = switchable_core_of(g, gamma);
  std::set<std::string> cv(core.vertices().begin(), core.vertices().end());
  auto onto = switchable_hom(g, core, gamma);
  REQUIRE(onto.has_value());
  Witness w = parse_witness(
      serialize_witness(make_switch_core_witness(gamma, core, *onto)));
  CHECK(verify_witness(w, g, nullptr, &gamma));
}

TEST_CASE("colouring witnesses") {
  MixedGraph cyc = make({0, 1}, {"a", "b", "c"}, {},
                        {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  auto cw = k_colourable(cyc, 3);
  REQUIRE(cw.has_value());
  Witness w = parse_witness(serialize_witness(make_colouring_witness(*cw)));
  CHECK(verify_witness(w, cyc, nullptr, nullptr));

  MixedGraph path2 =
      make({2, 0}, {"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 2}});
  SwitchingGroup gamma = testutil::swap_group();
  auto scw = switchable_k_colourable(path2, gamma, 2);
  REQUIRE(scw.has_value());
  Witness sw = parse_witness(
      serialize_witness(make_switch_colouring_witness(gamma, *scw)));
  CHECK(verify_witness(sw, path2, nullptr, &gamma));

  Witness bad = sw;
  bad.map.begin()->second = "no-such-vertex";
  CHECK_FALSE(verify_witness(bad, path2, nullptr, &gamma));
}

TEST_CASE("parser rejects malformed witness files") {
  CHECK_THROWS_WITH_AS(parse_witness("nonsense\n"),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_witness("witness hom\nbogus a 0\n"),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_witness("witness core\ngraph\nmng 1 0\nv a\n"),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(
      parse_witness("witness swhom\ngroup 2 0 2\nelem 0 phi 1 2\n"),
      doctest::Contains("SyntaxError"), Error);
  // Dangling element references surface when the assignment is rebuilt.
  Witness dangling = parse_witness(
      "witness swhom\ngroup 2 0 1\nelem 0 phi 1 2\nswitch a 5\n");
  MixedGraph g = make({2, 0}, {"a", "b"}, {{"a", "b", 1}});
  CHECK_THROWS_WITH_AS(verify_witness(dangling, g, &g, nullptr),
                       doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("random switch hom witnesses survive the round trip") {
  std::mt19937_64 rng(52);
  std::vector<SwitchingGroup> groups{testutil::swap_group(),
                                     testutil::push_group(),
                                     testutil::swap_push_group()};
  int produced = 0;
  for (int trial = 0; trial < 200 && produced < 25; ++trial) {
    const SwitchingGroup& gamma = groups[trial % groups.size()];
    MixedGraph g = random_graph(rng, gamma.params(), 4, 0.5);
    MixedGraph h = random_graph(rng, gamma.params(), 3, 0.7);
    auto sw = switchable_hom(g, h, gamma);
    if (!sw) continue;
    Witness w = parse_witness(serialize_witness(
        make_switch_hom_witness(WitnessKind::SwHom, gamma, *sw)));
    std::string why;
    CHECK_MESSAGE(verify_witness(w, g, &h, &gamma, &why), why);
    ++produced;
  }
  CHECK(produced > 0);
}
