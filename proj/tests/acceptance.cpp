// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the mng CLI binary (used by criterion 10).
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "decision.hpp"
#include "generate.hpp"
#include "switch_product.hpp"
#include "test_util.hpp"
#include "witness.hpp"

using namespace mng;
using testutil::make;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string note;
};

void report(int id, const std::string& name, const Outcome& o, bool& all_ok) {
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
            << name;
  if (!o.note.empty()) std::cout << " (" << o.note << ")";
  std::cout << std::endl;
  if (!o.pass) all_ok = false;
}

std::string fmt_secs(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

// ---- criterion 1: transversal subgraphs equal switched graphs -------------

Outcome criterion_transversals() {
  auto start = Clock::now();
  std::mt19937_64 rng(1001);
  const double limit = 60.0;
  int failures = 0;
  const int cases = 1000;
  for (int i = 0; i < cases; ++i) {
    ColourParams params{static_cast<int>(rng() % 4),
                        static_cast<int>(rng() % 3)};
    SwitchingGroup gamma = random_abelian_group(rng, params, 8);
    MixedGraph g = random_graph(rng, params, 1 + rng() % 6, 0.5);
    auto [pg, idx] = p_gamma(g, gamma, 1 << 16);
    SwitchAssignment sigma;
    for (const auto& v : g.vertices())
      sigma[v] = gamma.elements()[rng() % gamma.order()];
    if (!graphs_equal(transversal_subgraph(pg, idx, gamma, sigma),
                      apply_assignment(g, sigma)))
      ++failures;
  }
  double t = seconds_since(start);
  Outcome o;
  o.pass = failures == 0 && t < limit;
  o.note = std::to_string(cases) + " cases, " + std::to_string(failures) +
           " failures, " + fmt_secs(t) + " < " + fmt_secs(limit);
  return o;
}

// ---- criteria 2 and 3: the two product formulations of switchable hom -----

struct HomSweep {
  Outcome direct;   // switchable_hom vs assignment-enumeration oracle
  Outcome product;  // product-to-product homomorphism formulation
};

HomSweep criterion_hom_formulations() {
  auto start = Clock::now();
  const double limit = 300.0;
  std::mt19937_64 rng(1002);
  std::vector<SwitchingGroup> groups{
      SwitchingGroup::trivial({2, 1}), testutil::swap_group(),
      testutil::push_group(), testutil::swap_push_group()};
  long pairs = 0, direct_bad = 0, product_bad = 0;
  for (const SwitchingGroup& gamma : groups) {
    const ColourParams& params = gamma.params();
    std::vector<MixedGraph> sources;
    const std::vector<std::string> names{"a", "b", "c"};
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<std::string> vs(names.begin(), names.begin() + k);
      for (MixedGraph& g : testutil::all_graphs(params, vs))
        sources.push_back(std::move(g));
    }
    for (int i = 0; i < 300; ++i)
      sources.push_back(random_graph(rng, params, 4, 0.5));
    std::vector<MixedGraph> targets;
    for (int i = 0; i < 20; ++i)
      targets.push_back(random_graph(rng, params, 1 + rng() % 3, 0.6));
    for (const MixedGraph& g : sources) {
      auto [pg, pgi] = p_gamma(g, gamma);
      for (const MixedGraph& h : targets) {
        ++pairs;
        auto fast = switchable_hom(g, h, gamma);
        auto oracle = oracle_switchable_hom(g, h, gamma);
        if (fast.has_value() != oracle.has_value()) ++direct_bad;
        if (fast && !verify_switch_hom(g, h, *fast)) ++direct_bad;
        auto [ph, phi] = p_gamma(h, gamma);
        if (find_hom(pg, ph).has_value() != fast.has_value()) ++product_bad;
      }
    }
  }
  double t = seconds_since(start);
  HomSweep sweep;
  sweep.direct.pass = direct_bad == 0 && t < limit;
  sweep.direct.note = std::to_string(pairs) + " pairs, " +
                      std::to_string(direct_bad) + " disagreements, " +
                      fmt_secs(t) + " < " + fmt_secs(limit);
  sweep.product.pass = product_bad == 0 && t < limit;
  sweep.product.note = std::to_string(pairs) + " pairs, " +
                       std::to_string(product_bad) + " disagreements";
  return sweep;
}

// ---- criterion 4: switchable isomorphism through products -----------------

Outcome criterion_switchable_iso() {
  auto start = Clock::now();
  const double limit = 300.0;
  std::mt19937_64 rng(1003);
  std::vector<SwitchingGroup> groups{testutil::swap_group(),
                                     testutil::push_group(),
                                     testutil::swap_push_group()};
  int positives = 0, negatives = 0, wrong = 0;
  while (positives < 200) {
    const SwitchingGroup& gamma = groups[rng() % groups.size()];
    MixedGraph g = random_graph(rng, gamma.params(), 4, 0.6);
    std::map<std::string, std::string> rename;
    std::vector<std::string> fresh{"u0", "u1", "u2", "u3"};
    std::shuffle(fresh.begin(), fresh.end(), rng);
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      rename[g.vertices()[i]] = fresh[i];
    MixedGraph h = g.relabel(rename);
    SwitchAssignment sigma;
    for (const auto& v : h.vertices())
      sigma[v] = gamma.elements()[rng() % gamma.order()];
    h = apply_assignment(h, sigma);
    if (!switchable_iso(g, h, gamma).iso) ++wrong;
    ++positives;
  }
  while (negatives < 200) {
    const SwitchingGroup& gamma = groups[rng() % groups.size()];
    MixedGraph g = random_graph(rng, gamma.params(), 4, 0.5);
    MixedGraph h = random_graph(rng, gamma.params(), 4, 0.5);
    bool oracle = oracle_switchable_iso(g, h, gamma);
    if (oracle) continue;
    if (switchable_iso(g, h, gamma).iso) ++wrong;
    ++negatives;
  }
  double t = seconds_since(start);
  Outcome o;
  o.pass = wrong == 0 && t < limit;
  o.note = std::to_string(positives) + " positive + " +
           std::to_string(negatives) + " negative pairs, " +
           std::to_string(wrong) + " wrong, " + fmt_secs(t) + " < " +
           fmt_secs(limit);
  return o;
}

// ---- criterion 5: the fixed four-vertex instance ---------------------------

Outcome criterion_fixed_instance() {
  auto start = Clock::now();
  const double limit = 1.0;
  MixedGraph g =
      make({2, 0}, {"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 1}});
  MixedGraph h = make({2, 0}, {"x", "y"}, {{"x", "y", 1}});
  SwitchingGroup gamma = testutil::swap_group();
  bool plain = find_hom(g, h).has_value();
  // Switch one edge to the other colour.
  MixedGraph gp = apply_switch(g, "c", gamma.elements()[1]);
  bool any_switched_target = false;
  testutil::for_each_assignment(h, gamma, [&](const SwitchAssignment& sigma) {
    if (find_hom(gp, apply_assignment(h, sigma)).has_value())
      any_switched_target = true;
    return false;
  });
  bool switchable = switchable_hom(gp, h, gamma).has_value();
  double t = seconds_since(start);
  Outcome o;
  o.pass = plain && !any_switched_target && switchable && t < limit;
  o.note = std::string("plain=") + (plain ? "yes" : "no") +
           ", switched-target=" + (any_switched_target ? "yes" : "no") +
           ", switchable=" + (switchable ? "yes" : "no") + ", " + fmt_secs(t) +
           " < " + fmt_secs(limit);
  return o;
}

// ---- criterion 6: quotient retraction --------------------------------------

Outcome criterion_retraction() {
  std::mt19937_64 rng(1004);
  int failures = 0;
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    ColourParams params{static_cast<int>(rng() % 3),
                        static_cast<int>(rng() % 2)};
    SwitchingGroup gamma = random_abelian_group(rng, params, 4);
    MixedGraph g = random_graph(rng, params, 1 + rng() % 5, 0.5);
    SGammaResult s = s_gamma(g, gamma);
    bool ok = verify_hom(s.product, s.graph, s.retraction);
    for (const auto& v : s.graph.vertices())
      if (s.retraction(v) != v) ok = false;
    const MixedGraph& pg = s.product;
    for (const auto& v : g.vertices())
      for (const auto& cls : s.table.classes.at(v))
        for (std::size_t a : cls)
          for (std::size_t b : cls) {
            std::string pa = s.index.id(v, a), pb = s.index.id(v, b);
            for (const auto& w : pg.vertices()) {
              if (w == pa || w == pb) continue;
              Relation ra = pg.relation(pa, w), rb = pg.relation(pb, w);
              if (ra.kind != rb.kind || ra.colour != rb.colour) ok = false;
            }
          }
    if (!ok) ++failures;
  }
  Outcome o;
  o.pass = failures == 0;
  o.note =
      std::to_string(cases) + " cases, " + std::to_string(failures) +
      " failures";
  return o;
}

// ---- criterion 7: core equivalence on the full small-graph space -----------

Outcome criterion_core_equivalence() {
  auto start = Clock::now();
  const double limit = 600.0;
  std::vector<std::pair<ColourParams, std::vector<SwitchingGroup>>> suites{
      {{2, 0}, {SwitchingGroup::trivial({2, 0}), testutil::swap_group()}},
      {{0, 1}, {SwitchingGroup::trivial({0, 1}), testutil::push_group()}}};
  const std::vector<std::string> names{"a", "b", "c", "d"};
  long instances = 0, disagreements = 0;
  for (const auto& [params, groups] : suites) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<std::string> vs(names.begin(), names.begin() + k);
      for (const MixedGraph& g : testutil::all_graphs(params, vs)) {
        for (const SwitchingGroup& gamma : groups) {
          ++instances;
          if (is_switchable_core(g, gamma) !=
              oracle_is_switchable_core(g, gamma))
            ++disagreements;
        }
      }
    }
  }
  double t = seconds_since(start);
  Outcome o;
  o.pass = disagreements == 0 && t < limit;
  o.note = std::to_string(instances) + " instances, " +
           std::to_string(disagreements) + " disagreements, " + fmt_secs(t) +
           " < " + fmt_secs(limit);
  return o;
}

// ---- criterion 8: fast two-colouring ----------------------------------------

Outcome criterion_two_colouring() {
  std::mt19937_64 rng(1005);
  std::vector<SwitchingGroup> groups{
      testutil::swap_group(),          testutil::push_group(),
      testutil::swap_push_group(),     SwitchingGroup::trivial({2, 0}),
      SwitchingGroup::trivial({0, 1})};
  int disagreements = 0;
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    const SwitchingGroup& gamma = groups[i % groups.size()];
    MixedGraph g = random_graph(rng, gamma.params(), 2 + rng() % 5, 0.4);
    auto fast = switchable_2_colourable_fast(g, gamma);
    auto slow = switchable_k_colourable(g, gamma, 2);
    if (fast.has_value() != slow.has_value()) ++disagreements;
    if (fast && !verify_switch_hom(g, fast->target, fast->witness))
      ++disagreements;
  }

  // A 1000-vertex, 2000-edge instance: ring plus chords at stride 503.
  std::vector<std::string> big_vs;
  for (int i = 0; i < 1000; ++i) {
    std::ostringstream name;
    name << "n" << std::setw(4) << std::setfill('0') << i;
    big_vs.push_back(name.str());
  }
  std::vector<Edge> big_es;
  for (int i = 0; i < 1000; ++i) {
    std::string u = big_vs[i], v = big_vs[(i + 1) % 1000];
    if (u > v) std::swap(u, v);
    big_es.push_back({u, v, 1 + i % 2});
    std::string c = big_vs[i], d = big_vs[(i + 503) % 1000];
    if (c > d) std::swap(c, d);
    big_es.push_back({c, d, 1});
  }
  MixedGraph big({2, 0}, big_vs, big_es, {});
  SwitchingGroup gamma = testutil::swap_group();
  auto start = Clock::now();
  auto verdict = switchable_2_colourable_fast(big, gamma);
  double big_t = seconds_since(start);
  // The brute-force back-end must refuse this size outright.
  bool oracle_refuses = false;
  try {
    MixedGraph k2 = make({2, 0}, {"x", "y"}, {{"x", "y", 1}});
    oracle_switchable_hom(big, k2, gamma);
  } catch (const Error& e) {
    oracle_refuses = std::string(e.what()).find("SearchSpaceTooLarge") !=
                     std::string::npos;
  }
  Outcome o;
  o.pass = disagreements == 0 && big_t < 1.0 && oracle_refuses;
  o.note = std::to_string(cases) + " cross-checked, " +
           std::to_string(disagreements) + " disagreements; big instance " +
           (verdict ? "YES" : "NO") + " in " + fmt_secs(big_t) +
           " < 1.00s, oracle refused=" + (oracle_refuses ? "yes" : "no");
  return o;
}

// ---- criterion 9: group law against repeated switching ---------------------

Outcome criterion_group_law() {
  std::mt19937_64 rng(1006);
  std::vector<SwitchingGroup> groups{
      SwitchingGroup::trivial({2, 1}), testutil::swap_group(),
      testutil::push_group(), testutil::swap_push_group()};
  int failures = 0;
  const int cases = 1000;
  for (int i = 0; i < cases; ++i) {
    const SwitchingGroup& gamma = groups[i % groups.size()];
    MixedGraph g = random_graph(rng, gamma.params(), 2 + rng() % 4, 0.6);
    const std::string& v = g.vertices()[rng() % g.vertices().size()];
    const SwitchElement& e1 = gamma.elements()[rng() % gamma.order()];
    const SwitchElement& e2 = gamma.elements()[rng() % gamma.order()];
    if (!graphs_equal(apply_switch(apply_switch(g, v, e2), v, e1),
                      apply_switch(g, v, compose(e1, e2))))
      ++failures;
  }
  SwitchingGroup wreath = SwitchingGroup::closure(
      {0, 2},
      {SwitchElement{{}, {2, 1}, {0, 0}}, SwitchElement{{}, {1, 2}, {1, 0}}});
  bool flagged = !wreath.abelian();
  Outcome o;
  o.pass = failures == 0 && flagged;
  o.note = std::to_string(cases) + " triples, " + std::to_string(failures) +
           " failures; non-commuting pair flagged=" + (flagged ? "yes" : "no");
  return o;
}

// ---- criterion 10: CLI witness integrity ------------------------------------

struct CliBattery {
  std::string cli;
  std::filesystem::path dir;
  int yes = 0, verified = 0, errors = 0, runs = 0;
  std::mt19937_64 rng{1007};

  int run(const std::string& args) {
    ++runs;
    std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : 2;
  }

  std::string save(const std::string& name, const std::string& text) {
    std::filesystem::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }

  void note_verdict(int rc, const std::string& verify_args) {
    if (rc == 2) {
      ++errors;
      return;
    }
    if (rc != 0) return;
    ++yes;
    if (run("verify " + verify_args) == 0) ++verified;
  }
};

Outcome criterion_cli(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.pass = false;
    o.note = "no CLI path supplied";
    return o;
  }
  CliBattery b;
  b.cli = cli;
  b.dir = std::filesystem::path("acceptance_cli_tmp");
  std::filesystem::create_directories(b.dir);
  std::vector<SwitchingGroup> groups{testutil::swap_group(),
                                     testutil::push_group(),
                                     testutil::swap_push_group()};

  for (int i = 0; i < 40; ++i) {
    const SwitchingGroup& gamma = groups[i % groups.size()];
    std::string gp = b.save("g.mng", serialize_graph(random_graph(
                                         b.rng, gamma.params(), 4, 0.5)));
    std::string hp = b.save("h.mng", serialize_graph(random_graph(
                                         b.rng, gamma.params(), 3, 0.7)));
    std::string sp = b.save("gamma.grp", serialize_group(gamma));
    std::string wp = (b.dir / "w.txt").string();
    int rc = b.run("swhom " + gp + " " + hp + " " + sp + " --both -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " " + hp + " --group " + sp);
  }

  for (int i = 0; i < 20; ++i) {
    const SwitchingGroup& gamma = groups[i % groups.size()];
    MixedGraph g = random_graph(b.rng, gamma.params(), 4, 0.5);
    MixedGraph h = g;
    if (i % 2 == 0) {
      SwitchAssignment sigma;
      for (const auto& v : g.vertices())
        sigma[v] = gamma.elements()[b.rng() % gamma.order()];
      h = apply_assignment(g, sigma);
    } else {
      h = random_graph(b.rng, gamma.params(), 4, 0.5);
    }
    std::string gp = b.save("g.mng", serialize_graph(g));
    std::string hp = b.save("h.mng", serialize_graph(h));
    std::string sp = b.save("gamma.grp", serialize_group(gamma));
    std::string wp = (b.dir / "w.txt").string();
    int rc = b.run("swiso " + gp + " " + hp + " " + sp + " --both -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " " + hp + " --group " + sp);
    rc = b.run("switcheq " + gp + " " + hp + " " + sp + " -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " " + hp + " --group " + sp);
  }

  for (int i = 0; i < 20; ++i) {
    const SwitchingGroup& gamma = groups[i % groups.size()];
    std::string gp = b.save("g.mng", serialize_graph(random_graph(
                                         b.rng, gamma.params(), 5, 0.4)));
    std::string sp = b.save("gamma.grp", serialize_group(gamma));
    std::string wp = (b.dir / "w.txt").string();
    int rc = b.run("swcolour " + gp + " " + sp + " 2 --both -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " --group " + sp);
    rc = b.run("swcore " + gp + " " + sp + " -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " --group " + sp);
  }

  for (int i = 0; i < 15; ++i) {
    std::string gp = b.save(
        "g.mng", serialize_graph(random_graph(b.rng, {2, 0}, 4, 0.5)));
    std::string hp = b.save(
        "h.mng", serialize_graph(random_graph(b.rng, {2, 0}, 4, 0.5)));
    std::string wp = (b.dir / "w.txt").string();
    int rc = b.run("hom " + gp + " " + hp + " -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " " + hp);
    rc = b.run("iso " + gp + " " + hp + " -o " + wp);
    b.note_verdict(rc, wp + " " + gp + " " + hp);
    rc = b.run("core " + gp + " -o " + wp);
    b.note_verdict(rc, wp + " " + gp);
    rc = b.run("colour " + gp + " 3 -o " + wp);
    b.note_verdict(rc, wp + " " + gp);
  }

  o.pass = b.errors == 0 && b.yes > 0 && b.verified == b.yes;
  o.note = std::to_string(b.runs) + " CLI runs, " + std::to_string(b.yes) +
           " YES verdicts, " + std::to_string(b.verified) + " verified, " +
           std::to_string(b.errors) + " errors/disagreements";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  bool all_ok = true;

  report(1, "transversal subgraphs equal switched graphs",
         criterion_transversals(), all_ok);
  HomSweep sweep = criterion_hom_formulations();
  report(2, "switchable hom agrees with the assignment oracle", sweep.direct,
         all_ok);
  report(3, "product-to-product hom matches switchable hom", sweep.product,
         all_ok);
  report(4, "switchable isomorphism through products", criterion_switchable_iso(),
         all_ok);
  report(5, "fixed four-vertex two-edge instance", criterion_fixed_instance(),
         all_ok);
  report(6, "quotient retraction and fiber identification",
         criterion_retraction(), all_ok);
  report(7, "switchable core equivalence on all small graphs",
         criterion_core_equivalence(), all_ok);
  report(8, "fast two-colouring agreement and large-instance speed",
         criterion_two_colouring(), all_ok);
  report(9, "composition law under repeated switching", criterion_group_law(),
         all_ok);
  report(10, "CLI witness integrity", criterion_cli(cli), all_ok);

  return all_ok ? 0 : 1;
}
