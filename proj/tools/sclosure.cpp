// Command-line front end: sg / closure / arf / weakarf / repro.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sclosure/arf.hpp"
#include "sclosure/io.hpp"
#include "sclosure/module.hpp"
#include "sclosure/repro.hpp"
#include "sclosure/strict_closure.hpp"
#include "sclosure/weak_arf.hpp"

#ifndef SCLOSURE_DATA_DIR
#define SCLOSURE_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
using namespace sclosure;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUncertified = 3;

struct RunConfig {
  int dim = 1;
  std::string gens;
  std::string file;
  std::string over;
  std::string over_file;
  std::string box;
  std::string output;
  std::string fixtures = std::string(SCLOSURE_DATA_DIR) + "/repro_fixtures.json";
  unsigned characteristic = 0;
  int rounds = 32;
  int doublings = 10;
  bool strict_certify = false;
  bool trace = false;
  int verbosity = 0;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

AffineSemigroup base_semigroup(const RunConfig& cfg) {
  if (!cfg.file.empty()) return io::semigroup_from_json(read_json_file(cfg.file));
  if (cfg.gens.empty()) throw Error(Errc::InvalidInput, "either --gens or --file is required");
  return AffineSemigroup(cfg.dim, io::parse_generators(cfg.dim, cfg.gens));
}

Overring overring(const RunConfig& cfg, const AffineSemigroup& r) {
  if (!cfg.over_file.empty()) return Overring(io::semigroup_from_json(read_json_file(cfg.over_file)));
  if (!cfg.over.empty()) return Overring(AffineSemigroup(r.dim(), io::parse_generators(r.dim(), cfg.over)));
  return Overring::normalization_of(r);
}

BoxPolicy box_policy(const RunConfig& cfg, int dim) {
  BoxPolicy p;
  p.max_doublings = cfg.doublings;
  if (!cfg.box.empty()) p.box = io::parse_box(dim, cfg.box);
  return p;
}

// Returned by every command: the JSON document and whether any result was
// uncertified or unknown.
struct Outcome {
  json doc;
  bool uncertified = false;
  int exit_code = kExitOk;
};

Outcome cmd_sg_info(const RunConfig& cfg) {
  AffineSemigroup h = base_semigroup(cfg);
  json j = io::to_json(h);
  if (h.dim() == 1) {
    j["frobenius"] = h.frobenius();
    j["conductor"] = h.conductor();
    j["multiplicity"] = h.multiplicity();
    j["apery"] = h.apery();
  }
  return {j};
}

Outcome cmd_sg_saturation(const RunConfig& cfg) {
  AffineSemigroup h = base_semigroup(cfg);
  SaturationDescription sat = saturation(h);
  json j{{"dim", h.dim()}};
  if (sat.is_whole()) {
    j["whole"] = true;
  } else {
    j["whole"] = false;
    j["lattice"] = {{"p", sat.lattice().p}, {"q", sat.lattice().q}, {"r", sat.lattice().r}};
    j["cone"] = json::array({io::to_json(sat.low_ray()), io::to_json(sat.high_ray())});
  }
  ModuleReport m = module_generators_of_saturation(h, box_policy(cfg, h.dim()));
  j["module"] = io::to_json(m.module);
  j["box"] = io::to_json(m.box);
  j["certified"] = m.certified;
  return {j};
}

Outcome cmd_closure_strict(const RunConfig& cfg) {
  AffineSemigroup r = base_semigroup(cfg);
  ClosureOptions opt;
  opt.box = box_policy(cfg, r.dim());
  opt.traces = cfg.trace;
  ClosureReport rep = strict_closure_monomials(r, overring(cfg, r), opt);
  return {io::to_json(rep, cfg.trace), !rep.certified};
}

Outcome cmd_closure_bounds(const RunConfig& cfg) {
  AffineSemigroup r = base_semigroup(cfg);
  Overring s = overring(cfg, r);
  BoxPolicy p = box_policy(cfg, r.dim());
  BoundReport t = thm26_bound(r, s, p);
  BoundReport m = prop22_bound(r, s, p);
  json tj = io::to_json(t);
  tj["ideal"] = io::to_json(t.ideal);
  tj["module_gens"] = io::to_json(t.module_gens_of_s);
  json syz = json::array();
  for (const auto& g : t.syzygies) syz.push_back(io::to_json(g));
  tj["syzygies"] = syz;
  return {json{{"first_row_bound", tj}, {"maximal_ideal_bound", io::to_json(m)}}, !t.certified || !m.certified};
}

Outcome cmd_closure_check(const RunConfig& cfg) {
  AffineSemigroup r = base_semigroup(cfg);
  Overring s = overring(cfg, r);
  ClosureOptions opt;
  opt.box = box_policy(cfg, r.dim());
  StrictnessVerdict v = is_strictly_closed_in(r, s, opt);
  json j{{"verdict", verdict_name(v.kind)}, {"box", io::to_json(v.report.box)}, {"certified", v.report.certified}};
  if (v.witness) j["witness"] = io::to_json(*v.witness);
  MaximalIdealCheck mi = cor23_check(r, s, opt.box.box ? opt.box.box : std::optional<Exponent>(v.report.box));
  j["ms_in_r"] = {{"holds", mi.holds}, {"exact", mi.exact}};
  BoxPolicy fixed;
  fixed.box = v.report.box;
  BoundReport t = thm26_bound(r, s, fixed);
  j["module_gens"] = io::to_json(t.module_gens_of_s);
  j["products_in_r"] = cor27_check(r, t.module_gens_of_s);
  return {j, v.kind == StrictnessVerdict::Kind::Unknown};
}

Outcome cmd_arf_closure(const RunConfig& cfg) {
  AffineSemigroup h = base_semigroup(cfg);
  json rounds = json::array();
  ArfTrace trace;
  if (cfg.trace) trace = [&](int round, const std::vector<Int>& added) { rounds.push_back({{"round", round}, {"added", added}}); };
  AffineSemigroup c = arf_closure_numerical(h, trace);
  json j = io::to_json(c);
  if (cfg.trace) j["trace"] = rounds;
  return {j};
}

Outcome cmd_arf_is_arf(const RunConfig& cfg) { return {json{{"arf", is_arf_numerical(base_semigroup(cfg))}}}; }

Outcome cmd_arf_chain(const RunConfig& cfg) {
  BlowupChain bc = blowup_chain(base_semigroup(cfg));
  json chain = json::array();
  for (const auto& h : bc.chain) chain.push_back(io::to_json(h));
  return {json{{"chain", chain}, {"multiplicities", bc.multiplicities}}};
}

Outcome cmd_weakarf_close(const RunConfig& cfg) {
  AffineSemigroup h = base_semigroup(cfg);
  WeakArfOptions opt;
  opt.box = box_policy(cfg, h.dim());
  opt.round_cap = cfg.rounds;
  WeakArfResult r = weak_arf_monomial_closure(h, opt);
  json j{{"base", io::to_json(h)}, {"extra", io::to_json(r.extra())}, {"box", io::to_json(r.box)},
         {"certified", r.certified}, {"rounds", r.rounds}};
  return {j, !r.certified};
}

template <class Field>
Outcome weakarf_witness(const RunConfig& cfg, const Field& field, const json& wj) {
  using F = typename Field::value_type;
  AffineSemigroup h = base_semigroup(cfg);
  WeakArfOptions opt;
  opt.box = box_policy(cfg, h.dim());
  opt.round_cap = cfg.rounds;
  auto ws = io::witnesses_from_json(wj, field);
  Comparison<F> c = compare_weak_arf_vs_strict<F>(h, ws, opt);
  json outcomes = json::array();
  for (const auto& o : c.outcomes) outcomes.push_back(io::to_json(o));
  json j{{"result", c.equal ? "equal" : "gap"},
         {"gap", io::to_json(c.gap)},
         {"strict", io::to_json(c.strict.generators())},
         {"extra", io::to_json(c.lower.extra(c.box))},
         {"box", io::to_json(c.box)},
         {"certified", c.certified},
         {"characteristic", field.characteristic()},
         {"outcomes", outcomes}};
  return {j, !c.certified};
}

Outcome cmd_weakarf_witness(const RunConfig& cfg, const std::string& witness_file) {
  json wj = witness_file.empty() ? json::array() : read_json_file(witness_file);
  if (cfg.characteristic == 0) return weakarf_witness(cfg, RationalField{}, wj);
  return weakarf_witness(cfg, PrimeField(cfg.characteristic), wj);
}

Outcome cmd_repro(const RunConfig& cfg) {
  json fx = read_json_file(cfg.fixtures);
  std::vector<ReproItem> items =
      cfg.characteristic == 0 ? repro(fx, RationalField{}) : repro(fx, PrimeField(cfg.characteristic));
  json arr = json::array();
  bool all = true;
  for (const auto& it : items) {
    json e{{"name", it.name}, {"status", it.pass ? "PASS" : "FAIL"}};
    if (!it.detail.empty()) e["detail"] = it.detail;
    arr.push_back(e);
    all = all && it.pass;
    if (cfg.verbosity > 0) std::cerr << (it.pass ? "PASS " : "FAIL ") << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
  }
  Outcome o{json{{"characteristic", cfg.characteristic}, {"items", arr}, {"all_pass", all}}};
  o.exit_code = all ? kExitOk : kExitFail;
  return o;
}

void add_input_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--dim", cfg.dim, "Dimension k of the exponent vectors (1 or 2)")->check(CLI::IsMember({1, 2}));
  app->add_option("--gens", cfg.gens, "Generators: \"3,8,13\" for k=1, \"4 0;1 3;0 4\" for k=2");
  app->add_option("--file", cfg.file, "Semigroup JSON file {\"dim\":k,\"gens\":[[..],..]}");
  app->add_option("--box", cfg.box, "Search box, e.g. \"24 24\"; disables automatic doubling");
  app->add_option("--doublings", cfg.doublings, "Cap on automatic box doublings")->check(CLI::NonNegativeNumber);
}

void add_over_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--over", cfg.over, "Overring generators (default: the normalization)");
  app->add_option("--over-file", cfg.over_file, "Overring semigroup JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict, Arf and weakly Arf closures of semigroup rings"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string witness_file;
  app.add_option("-o,--out", cfg.output, "Write JSON to a file instead of stdout");
  app.add_flag("--strict-certify", cfg.strict_certify, "Exit 3 when a result is uncertified or unknown");
  app.add_flag("-v,--verbose", cfg.verbosity, "Verbosity");
  app.add_option("--char", cfg.characteristic, "Coefficient characteristic: 0 (rationals) or a prime p");

  std::function<Outcome()> action;

  auto* sg = app.add_subcommand("sg", "Semigroup information")->require_subcommand(1);
  auto* sg_info = sg->add_subcommand("info", "Minimal generators, Frobenius number, conductor, Apery set");
  add_input_options(sg_info, cfg);
  sg_info->callback([&] { action = [&] { return cmd_sg_info(cfg); }; });
  auto* sg_sat = sg->add_subcommand("saturation", "Saturation and its module generators");
  add_input_options(sg_sat, cfg);
  sg_sat->callback([&] { action = [&] { return cmd_sg_saturation(cfg); }; });

  auto* cl = app.add_subcommand("closure", "Strict closure")->require_subcommand(1);
  auto* cl_strict = cl->add_subcommand("strict", "Monomial generators of the strict closure");
  add_input_options(cl_strict, cfg);
  add_over_options(cl_strict, cfg);
  cl_strict->add_flag("--trace", cfg.trace, "Include connectivity traces per generator");
  cl_strict->callback([&] { action = [&] { return cmd_closure_strict(cfg); }; });
  auto* cl_bounds = cl->add_subcommand("bounds", "Presentation-matrix and maximal-ideal upper bounds");
  add_input_options(cl_bounds, cfg);
  add_over_options(cl_bounds, cfg);
  cl_bounds->callback([&] { action = [&] { return cmd_closure_bounds(cfg); }; });
  auto* cl_check = cl->add_subcommand("check", "Is the ring strictly closed in the overring?");
  add_input_options(cl_check, cfg);
  add_over_options(cl_check, cfg);
  cl_check->callback([&] { action = [&] { return cmd_closure_check(cfg); }; });

  auto* arf = app.add_subcommand("arf", "Numerical semigroups: Arf property and closure")->require_subcommand(1);
  auto* arf_close = arf->add_subcommand("closure", "Arf closure");
  add_input_options(arf_close, cfg);
  arf_close->add_flag("--trace", cfg.trace, "Record each iteration round");
  arf_close->callback([&] { action = [&] { return cmd_arf_closure(cfg); }; });
  auto* arf_is = arf->add_subcommand("is-arf", "Arf property");
  add_input_options(arf_is, cfg);
  arf_is->callback([&] { action = [&] { return cmd_arf_is_arf(cfg); }; });
  auto* arf_chain = arf->add_subcommand("chain", "Blow-up chain and multiplicity sequence");
  add_input_options(arf_chain, cfg);
  arf_chain->callback([&] { action = [&] { return cmd_arf_chain(cfg); }; });

  auto* wa = app.add_subcommand("weakarf", "Weakly Arf closure")->require_subcommand(1);
  auto* wa_close = wa->add_subcommand("close", "Monomial weakly Arf closure");
  add_input_options(wa_close, cfg);
  wa_close->add_option("--rounds", cfg.rounds, "Round cap")->check(CLI::PositiveNumber);
  wa_close->callback([&] { action = [&] { return cmd_weakarf_close(cfg); }; });
  auto* wa_wit = wa->add_subcommand("witness", "Apply polynomial witnesses and compare with the strict closure");
  add_input_options(wa_wit, cfg);
  wa_wit->remove_option(wa_wit->get_option("--file"));
  wa_wit->add_option("--base-file", cfg.file, "Semigroup JSON file");
  wa_wit->add_option("--file", witness_file, "Witness JSON file {\"x\":..,\"y\":..,\"z\":..} or an array of them");
  wa_wit->add_option("--rounds", cfg.rounds, "Round cap")->check(CLI::PositiveNumber);
  wa_wit->callback([&] { action = [&] { return cmd_weakarf_witness(cfg, witness_file); }; });

  auto* rp = app.add_subcommand("repro", "Run every bundled fixture and report PASS/FAIL");
  rp->add_option("--fixtures", cfg.fixtures, "Fixture file");
  rp->callback([&] { action = [&] { return cmd_repro(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cfg.characteristic != 0 && !is_prime(cfg.characteristic))
      throw Error(Errc::InvalidInput, "--char must be 0 or a prime");
    Outcome o = action();
    std::string text = o.doc.dump(2) + "\n";
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw Error(Errc::InvalidInput, "cannot write " + cfg.output);
      out << text;
    }
    if (o.exit_code != kExitOk) return o.exit_code;
    if (cfg.strict_certify && o.uncertified) return kExitUncertified;
    return kExitOk;
  } catch (const sclosure::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
