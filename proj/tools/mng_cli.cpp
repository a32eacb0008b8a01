#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "decision.hpp"
#include "generate.hpp"
#include "hom.hpp"
#include "mixed_graph.hpp"
#include "switch_group.hpp"
#include "switch_product.hpp"
#include "switching.hpp"
#include "witness.hpp"

namespace {

using namespace mng;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileNotFound", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

MixedGraph load_graph(const std::string& path) {
  return parse_graph(slurp(path));
}

SwitchingGroup load_group(const std::string& path, std::size_t cap) {
  return parse_group(slurp(path), cap);
}

// Verdict + witness to stdout; witness alone to the -o file when given.
int emit_verdict(bool yes, const std::string& witness_text,
                 const std::string& out_path) {
  std::cout << (yes ? "YES" : "NO") << "\n";
  if (yes) {
    std::cout << witness_text;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << witness_text;
    }
  }
  return yes ? 0 : 1;
}

void emit_text(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
  }
}

struct Options {
  std::string out;
  std::size_t cap = 4096;
  unsigned jobs = 1;  // accepted for compatibility; enumeration order is
                      // deterministic either way
  bool oracle = false;
  bool both = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_modes = false) {
  cmd->add_option("-o,--output", opt.out, "also write the result to a file");
  cmd->add_option("--cap", opt.cap, "group/product size cap");
  cmd->add_option("--jobs", opt.jobs, "worker count hint");
  if (with_modes) {
    cmd->add_flag("--oracle", opt.oracle, "force the brute-force back-end");
    cmd->add_flag("--both", opt.both,
                  "run fast and oracle back-ends and compare");
  }
}

DecisionLimits limits_of(const Options& opt) {
  DecisionLimits limits;
  limits.product_cap = opt.cap;
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"switching of (m,n)-mixed graphs with respect to finite groups"};
  app.require_subcommand(1);

  std::string g_path, h_path, grp_path, wit_path;
  int k = 2;
  Options opt;
  std::vector<std::string> pairs;

  // gen options
  int gen_m = 1, gen_n = 0, gen_vertices = 4;
  double gen_density = 0.5;
  std::uint64_t gen_seed = 0;
  std::size_t gen_group_order = 0;
  std::string gen_group_out;

  auto* validate = app.add_subcommand("validate", "parse and canonicalize");
  validate->add_option("graph", g_path)->required();
  add_common(validate, opt);

  auto* sw = app.add_subcommand("switch", "apply a switching sequence");
  sw->add_option("graph", g_path)->required();
  sw->add_option("group", grp_path)->required();
  sw->add_option("--pair", pairs, "switching pair <vertex>:<element-index>");
  add_common(sw, opt);

  auto* pg = app.add_subcommand("pgraph", "switching graph P_Gamma");
  pg->add_option("graph", g_path)->required();
  pg->add_option("group", grp_path)->required();
  add_common(pg, opt);

  auto* sg = app.add_subcommand("sgraph", "quotient S_Gamma with retraction");
  sg->add_option("graph", g_path)->required();
  sg->add_option("group", grp_path)->required();
  add_common(sg, opt);

  auto* hom = app.add_subcommand("hom", "homomorphism G -> H");
  hom->add_option("graph", g_path)->required();
  hom->add_option("target", h_path)->required();
  add_common(hom, opt);

  auto* iso = app.add_subcommand("iso", "isomorphism G ~ H");
  iso->add_option("graph", g_path)->required();
  iso->add_option("target", h_path)->required();
  add_common(iso, opt);

  auto* swhom = app.add_subcommand("swhom", "switchable homomorphism");
  swhom->add_option("graph", g_path)->required();
  swhom->add_option("target", h_path)->required();
  swhom->add_option("group", grp_path)->required();
  add_common(swhom, opt, true);

  auto* switcheq = app.add_subcommand("switcheq", "switch equivalence");
  switcheq->add_option("graph", g_path)->required();
  switcheq->add_option("target", h_path)->required();
  switcheq->add_option("group", grp_path)->required();
  add_common(switcheq, opt);

  auto* swiso = app.add_subcommand("swiso", "switchable isomorphism");
  swiso->add_option("graph", g_path)->required();
  swiso->add_option("target", h_path)->required();
  swiso->add_option("group", grp_path)->required();
  add_common(swiso, opt, true);

  auto* core = app.add_subcommand("core", "core of G");
  core->add_option("graph", g_path)->required();
  add_common(core, opt);

  auto* swcore = app.add_subcommand("swcore", "switchable core of G");
  swcore->add_option("graph", g_path)->required();
  swcore->add_option("group", grp_path)->required();
  add_common(swcore, opt, true);

  auto* colour = app.add_subcommand("colour", "k-colourability");
  colour->add_option("graph", g_path)->required();
  colour->add_option("k", k)->required();
  add_common(colour, opt);

  auto* swcolour = app.add_subcommand("swcolour", "switchable k-colourability");
  swcolour->add_option("graph", g_path)->required();
  swcolour->add_option("group", grp_path)->required();
  swcolour->add_option("k", k)->required();
  add_common(swcolour, opt, true);

  auto* verify = app.add_subcommand("verify", "re-check a witness file");
  verify->add_option("witness", wit_path)->required();
  verify->add_option("graph", g_path)->required();
  verify->add_option("target", h_path);
  verify->add_option("--group", grp_path);
  add_common(verify, opt);

  auto* gen = app.add_subcommand("gen", "random instance generation");
  gen->add_option("--m", gen_m);
  gen->add_option("--n", gen_n);
  gen->add_option("--vertices", gen_vertices);
  gen->add_option("--density", gen_density);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--group-order", gen_group_order,
                  "also emit a random Abelian group of at most this order");
  gen->add_option("--group-out", gen_group_out);
  add_common(gen, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      emit_text(serialize_graph(load_graph(g_path)), opt.out);
      return 0;
    }
    if (*sw) {
      MixedGraph g = load_graph(g_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      std::vector<SwitchingPair> seq;
      for (const auto& p : pairs) {
        auto pos = p.rfind(':');
        if (pos == std::string::npos)
          throw Error("InvalidArgument", "pair must be <vertex>:<index>");
        std::size_t idx = std::stoul(p.substr(pos + 1));
        if (idx >= gamma.order())
          throw Error("UnknownElement", "index " + std::to_string(idx));
        seq.push_back({p.substr(0, pos), gamma.elements()[idx]});
      }
      emit_text(serialize_graph(apply_sequence(g, seq)), opt.out);
      return 0;
    }
    if (*pg) {
      MixedGraph g = load_graph(g_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      emit_text(serialize_graph(p_gamma(g, gamma, opt.cap).first), opt.out);
      return 0;
    }
    if (*sg) {
      MixedGraph g = load_graph(g_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      auto s = s_gamma(g, gamma, opt.cap);
      std::ostringstream out;
      out << serialize_graph(s.graph);
      for (const auto& [p, r] : s.retraction.map)
        out << "map " << p << " " << r << "\n";
      emit_text(out.str(), opt.out);
      return 0;
    }
    if (*hom) {
      MixedGraph g = load_graph(g_path);
      MixedGraph h = load_graph(h_path);
      auto f = find_hom(g, h);
      return emit_verdict(f.has_value(),
                          f ? serialize_witness(make_hom_witness(*f)) : "",
                          opt.out);
    }
    if (*iso) {
      MixedGraph g = load_graph(g_path);
      MixedGraph h = load_graph(h_path);
      auto f = find_iso(g, h);
      return emit_verdict(f.has_value(),
                          f ? serialize_witness(make_iso_witness(*f)) : "",
                          opt.out);
    }
    if (*swhom) {
      MixedGraph g = load_graph(g_path);
      MixedGraph h = load_graph(h_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      DecisionLimits limits = limits_of(opt);
      std::optional<SwitchHomWitness> fast, oracle;
      if (!opt.oracle || opt.both) fast = switchable_hom(g, h, gamma, limits);
      if (opt.oracle || opt.both)
        oracle = oracle_switchable_hom(g, h, gamma, limits);
      if (opt.both && fast.has_value() != oracle.has_value())
        throw Error("OracleDisagreement",
                    "fast and oracle back-ends disagree");
      const auto& w = opt.oracle ? oracle : fast;
      return emit_verdict(
          w.has_value(),
          w ? serialize_witness(
                  make_switch_hom_witness(WitnessKind::SwHom, gamma, *w))
            : "",
          opt.out);
    }
    if (*switcheq) {
      MixedGraph g = load_graph(g_path);
      MixedGraph h = load_graph(h_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      auto sigma = switch_equal(g, h, gamma);
      return emit_verdict(
          sigma.has_value(),
          sigma ? serialize_witness(make_switch_eq_witness(gamma, *sigma))
                : "",
          opt.out);
    }
    if (*swiso) {
      MixedGraph g = load_graph(g_path);
      MixedGraph h = load_graph(h_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      DecisionLimits limits = limits_of(opt);
      bool verdict;
      std::optional<SwitchHomWitness> witness;
      if (opt.oracle) {
        verdict = oracle_switchable_iso(g, h, gamma, limits);
      } else {
        auto r = switchable_iso(g, h, gamma, limits);
        verdict = r.iso;
        witness = r.witness;
        if (opt.both && verdict != oracle_switchable_iso(g, h, gamma, limits))
          throw Error("OracleDisagreement",
                      "fast and oracle back-ends disagree");
      }
      return emit_verdict(
          verdict,
          witness ? serialize_witness(make_switch_hom_witness(
                        WitnessKind::SwIso, gamma, *witness))
                  : "",
          opt.out);
    }
    if (*core) {
      auto r = core_of(load_graph(g_path));
      return emit_verdict(true, serialize_witness(make_core_witness(r)),
                          opt.out);
    }
    if (*swcore) {
      MixedGraph g = load_graph(g_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      DecisionLimits limits = limits_of(opt);
      MixedGraph c = switchable_core_of(g, gamma, limits);
      auto onto = switchable_hom(g, c, gamma, limits);
      if (!onto) throw Error("InternalError", "core without witness");
      return emit_verdict(
          true,
          serialize_witness(make_switch_core_witness(gamma, c, *onto)),
          opt.out);
    }
    if (*colour) {
      auto w = k_colourable(load_graph(g_path), k, limits_of(opt));
      return emit_verdict(
          w.has_value(),
          w ? serialize_witness(make_colouring_witness(*w)) : "", opt.out);
    }
    if (*swcolour) {
      MixedGraph g = load_graph(g_path);
      SwitchingGroup gamma = load_group(grp_path, opt.cap);
      DecisionLimits limits = limits_of(opt);
      std::optional<ColouringWitness> fast, enumerated;
      bool use_fast = k == 2 && !opt.oracle;
      if (use_fast || (k == 2 && opt.both))
        fast = switchable_2_colourable_fast(g, gamma);
      if (!use_fast || opt.both)
        enumerated = switchable_k_colourable(g, gamma, k, limits);
      if (opt.both && k == 2 &&
          fast.has_value() != enumerated.has_value())
        throw Error("OracleDisagreement",
                    "fast and enumeration back-ends disagree");
      const auto& w = use_fast ? fast : enumerated;
      return emit_verdict(
          w.has_value(),
          w ? serialize_witness(make_switch_colouring_witness(gamma, *w))
            : "",
          opt.out);
    }
    if (*verify) {
      Witness w = parse_witness(slurp(wit_path));
      MixedGraph g = load_graph(g_path);
      std::optional<MixedGraph> h;
      if (!h_path.empty()) h = load_graph(h_path);
      std::optional<SwitchingGroup> gamma;
      if (!grp_path.empty()) gamma = load_group(grp_path, opt.cap);
      std::string why;
      bool ok = verify_witness(w, g, h ? &*h : nullptr,
                               gamma ? &*gamma : nullptr, &why);
      std::cout << (ok ? "YES" : "NO") << "\n";
      if (!ok) std::cerr << why << "\n";
      return ok ? 0 : 1;
    }
    if (*gen) {
      std::mt19937_64 rng(gen_seed);
      ColourParams params{gen_m, gen_n};
      MixedGraph g = random_graph(rng, params, gen_vertices, gen_density);
      emit_text(serialize_graph(g), opt.out);
      if (gen_group_order > 0) {
        SwitchingGroup gamma =
            random_abelian_group(rng, params, gen_group_order);
        if (gen_group_out.empty())
          std::cout << serialize_group(gamma);
        else {
          std::ofstream out(gen_group_out);
          out << serialize_group(gamma);
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
