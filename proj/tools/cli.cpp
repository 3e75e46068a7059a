// Copyright 2026 The approachlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "approachlab/corpus.hpp"
#include "approachlab/error.hpp"
#include "approachlab/io.hpp"
#include "approachlab/reductions.hpp"
#include "approachlab/simulation.hpp"
#include "json.hpp"

namespace approachlab::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  bool quiet = false;
  bool json = false;
  std::string corpus_dir;
};

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json instance_json(const AnyInstance& inst) { return Json::parse(instance_to_json(inst)); }

Json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError(where + ": expected a rational string");
}

RationalVector vector_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<RationalVector> vector_list_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Polytope polytope_from(const Json& j, const std::string& where) {
  if (j.is_object()) {
    if (!j.contains("vertices")) throw ParseError(where + ": missing field 'vertices'");
    return Polytope(vector_list_from(j["vertices"], where + ".vertices"));
  }
  return Polytope(vector_list_from(j, where));
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj[key];
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw ParseError(what + ": malformed seed '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(what + ": malformed seed '" + text + "'");
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("APPROACHLAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  return parse_seed(env, "APPROACHLAB_SEED");
}

AnyInstance load_instance(const std::string& spec, const Globals& g, const corpus::Params& params = {}) {
  if (spec.rfind("corpus:", 0) == 0) {
    const std::string name = spec.substr(7);
    if (!g.corpus_dir.empty()) {
      return parse_instance(read_file((std::filesystem::path(g.corpus_dir) / (name + ".json")).string()));
    }
    return corpus::build(name, params);
  }
  const std::string text = read_file(spec);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw ParseError(spec + ": " + e.what());
  }
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

// ---- classify / verify ----

int cmd_classify(const std::string& path, const Globals& g, std::ostream& out) {
  const AnyInstance inst = load_instance(path, g);
  Json doc;
  if (const auto* r = std::get_if<RegretInstance>(&inst)) {
    const Classification cls = classify(*r);
    doc = {{"name", r->name}, {"kind", "regret"}, {"class", to_string(cls.kind)}};
    if (!g.quiet && !g.json) out << r->name << ": " << to_string(cls.kind) << "\n";
  } else {
    const auto& a = std::get<ApproachabilityInstance>(inst);
    a.validate();
    doc = {{"name", a.name}, {"kind", "approachability"}, {"constraints", a.U.size()}};
    if (!g.quiet && !g.json) out << a.name << ": approachability, " << a.U.size() << " constraints\n";
  }
  if (g.json) out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const Globals& g, std::ostream& out) {
  const AnyInstance inst = load_instance(path, g);
  if (const auto* a = std::get_if<ApproachabilityInstance>(&inst)) {
    a->validate();
    if (g.json) {
      out << Json{{"name", a->name}, {"kind", "approachability"}, {"valid", true}}.dump(2) << "\n";
    } else if (!g.quiet) {
      out << a->name << ": approachability instance, " << a->U.size() << " constraints, well-formed\n";
    }
    return kExitOk;
  }
  const auto& r = std::get<RegretInstance>(inst);
  r.validate();
  const Classification cls = classify(r);
  Json doc{{"name", r.name}, {"kind", "regret"}, {"class", to_string(cls.kind)}};
  Json fixed = Json::array();
  for (const auto& [label, point] : cls.fixed_points) fixed.push_back({{"label", label}, {"point", vector_json(point)}});
  doc["fixed_points"] = std::move(fixed);
  doc["witness"] = nullptr;
  if (cls.witness) doc["witness"] = {{"label", cls.witness->label}, {"direction", vector_json(cls.witness->direction)}};
  if (g.json) {
    out << doc.dump(2) << "\n";
  } else if (!g.quiet) {
    out << r.name << ": " << to_string(cls.kind) << "\n";
    for (const auto& [label, point] : cls.fixed_points) out << "  " << label << " fixes " << point.str() << "\n";
    if (cls.witness) {
      out << "  " << cls.witness->label << " has no fixed point in P; separating direction "
          << cls.witness->direction.str() << "\n";
    }
  }
  return cls.kind == InstanceClass::Invalid ? kExitNegative : kExitOk;
}

// ---- reduce ----

struct ReduceOptions {
  std::string method;
  std::string in;
  std::string out;
  std::string weights;
  std::string directions;
  std::string sidecar;
};

std::vector<Rational> load_weights(const std::string& path) {
  if (path.empty()) throw PreconditionError("this method needs --weights");
  Json doc = parse_json_file(path);
  if (doc.is_object()) doc = field(doc, "weights", path);
  const RationalVector w = vector_from(doc, path);
  return {w.begin(), w.end()};
}

ApproachabilityInstance as_approachability(const AnyInstance& inst) {
  if (const auto* r = std::get_if<RegretInstance>(&inst)) return regret_as_approachability(*r);
  return std::get<ApproachabilityInstance>(inst);
}

const RegretInstance& as_regret(const AnyInstance& inst, const std::string& method) {
  const auto* r = std::get_if<RegretInstance>(&inst);
  if (r == nullptr) throw PreconditionError(method + " needs a regret instance");
  return *r;
}

int cmd_reduce(const ReduceOptions& o, const Globals& g, std::ostream& out) {
  const AnyInstance inst = load_instance(o.in, g);
  const std::string source_name = std::visit([](const auto& i) { return i.name; }, inst);
  std::optional<AnyInstance> target;
  Json side{{"method", o.method}, {"source", source_name}};
  if (o.method == "classical") {
    const ClassicalReduction red = classical_reduce(as_approachability(inst));
    Json labels = Json::array();
    for (const auto& u : red.source.U) labels.push_back(u.label);
    side["constraints"] = std::move(labels);
    side["pairing"] = matrix_json(red.pairing);
    target = red.target;
  } else if (o.method == "tight-improper") {
    const TightImproperReduction red = tight_improper_reduce(as_approachability(inst));
    side["augmented"] = red.augmented;
    Json bijection = Json::array();
    for (const auto& [from, to] : red.generator_bijection) bijection.push_back({{"source", from}, {"target", to}});
    side["generator_bijection"] = std::move(bijection);
    side["loss_matrix"] = matrix_json(red.loss_matrix);
    target = red.target;
  } else if (o.method == "weighted-improper") {
    const auto weights = load_weights(o.weights);
    Json w = Json::array();
    for (const auto& x : weights) w.push_back(x.str());
    side["weights"] = std::move(w);
    target = weighted_to_improper(as_regret(inst, o.method), weights);
  } else if (o.method == "weighted-proper") {
    const auto weights = load_weights(o.weights);
    Json w = Json::array();
    for (const auto& x : weights) w.push_back(x.str());
    side["weights"] = std::move(w);
    WeightedProper red = weighted_to_proper(as_regret(inst, o.method), weights);
    side["scale"] = red.scale.str();
    target = std::move(red.instance);
  } else if (o.method == "orthant") {
    if (o.directions.empty()) throw PreconditionError("orthant needs --directions");
    const Json doc = parse_json_file(o.directions);
    const Polytope target_set = polytope_from(field(doc, "target", o.directions), o.directions + ".target");
    const Polytope ball = polytope_from(field(doc, "ball", o.directions), o.directions + ".ball");
    const auto dirs = vector_list_from(field(doc, "directions", o.directions), o.directions + ".directions");
    const ApproachabilityInstance source = as_approachability(inst);
    target = AnyInstance(ApproachabilityInstance{source.name + "-orthant", source.P, source.L,
                                                 orthant_reduce(source.U, target_set, ball, dirs)});
    side["target_set"] = Json::array();
    for (const auto& v : target_set.vertices()) side["target_set"].push_back(vector_json(v));
    side["ball"] = Json::array();
    for (const auto& v : ball.vertices()) side["ball"].push_back(vector_json(v));
    side["directions"] = Json::array();
    for (const auto& v : dirs) side["directions"].push_back(vector_json(v));
  } else {
    throw PreconditionError("unknown method '" + o.method + "'");
  }
  side["target"] = std::visit([](const auto& i) { return i.name; }, *target);

  write_or_print(o.out, instance_to_json(*target), out);
  std::string sidecar = o.sidecar;
  if (sidecar.empty() && !o.out.empty() && o.out != "-") {
    sidecar = (std::filesystem::path(o.out).parent_path() / "reduction.json").string();
  }
  if (!sidecar.empty()) write_file(sidecar, side.dump(2) + "\n");
  return kExitOk;
}

// ---- equiv ----

struct EquivOptions {
  std::string in;
  std::string check = "auto";
  std::size_t trials = 20;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_equiv(const EquivOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  const AnyInstance any = load_instance(o.in, g);
  const auto* inst = std::get_if<RegretInstance>(&any);
  if (inst == nullptr) throw PreconditionError("equiv needs a regret instance");
  inst->validate();
  const Classification cls = classify(*inst);
  if (cls.kind == InstanceClass::Invalid) {
    err << inst->name << ": invalid instance; " << cls.witness->label << " has no fixed point in P\n";
    return kExitNegative;
  }
  const std::uint64_t seed = o.seed.value_or(default_seed());
  const LinearizedInstance lin = canonicalize(*inst);
  EquivalenceVerdict verdict;
  if (o.check == "external") {
    verdict = check_external(lin);
  } else if (o.check == "proper") {
    verdict = decide_proper(lin, o.trials, seed);
  } else {
    verdict = check_external(lin);
    if (verdict.status != VerdictStatus::ExternalEquivalent) {
      auto failure = verdict.external_failure;
      verdict = decide_proper(lin, o.trials, seed);
      verdict.external_failure = std::move(failure);
    }
  }
  const std::string doc = verdict_to_json(inst->name, o.check, lin, verdict, seed);
  if (!o.out.empty()) write_file(o.out, doc);
  if (g.json) {
    out << doc;
  } else if (!g.quiet) {
    out << inst->name << ": " << to_string(verdict.status) << "\n";
    if (verdict.S) out << "  S = " << verdict.S->str() << "\n";
    if (verdict.obstruction) {
      if (const auto* lk = std::get_if<LeftKernelEmpty>(&*verdict.obstruction)) {
        out << "  generators share no left-kernel vector (stacked rank " << lk->rank << " = dim " << lk->dim << ")\n";
      } else {
        const auto& od = std::get<OpposedDisplacement>(*verdict.obstruction);
        out << "  " << od.first << " and " << od.second << " move " << od.x.str() << " in opposite directions (alpha "
            << od.alpha.str() << ")\n";
      }
    }
  }
  const bool positive =
      verdict.status == VerdictStatus::ExternalEquivalent || verdict.status == VerdictStatus::ProperEquivalent;
  return positive ? kExitOk : kExitNegative;
}

// ---- simulate / sweep ----

std::vector<RationalVector> load_replay(const std::string& path) {
  Json doc = parse_json_file(path);
  if (doc.is_object()) doc = field(doc, "losses", path);
  return vector_list_from(doc, path);
}

struct SimulateOptions {
  std::string in;
  std::string learner = "hedge";
  std::string adversary = "iid";
  std::string reduction = "none";
  std::int64_t horizon = 0;
  std::optional<std::uint64_t> seed;
  std::string trace;
};

int cmd_simulate(const SimulateOptions& o, const Globals& g, std::ostream& out) {
  RunSetup setup{load_instance(o.in, g), "none", "hedge", {}};
  setup.learner = o.learner;
  setup.reduction = o.reduction;
  if (o.adversary.rfind("replay:", 0) == 0) {
    setup.adversary.kind = "replay";
    setup.adversary.replay = load_replay(o.adversary.substr(7));
  } else {
    setup.adversary = parse_adversary_spec(o.adversary);
  }
  const std::uint64_t seed = o.seed.value_or(default_seed());
  const Trace trace = run(setup, o.horizon, seed);
  if (!o.trace.empty()) write_file(o.trace, trace_to_json(trace));
  Json summary{{"instance", trace.instance},   {"learner", trace.learner},
               {"adversary", trace.adversary}, {"metric", trace.metric},
               {"T", trace.horizon},           {"seed", trace.seed},
               {"final_loss", trace.final_loss().str()}, {"final_loss_over_sqrtT", trace.final_loss_over_sqrt_t()}};
  if (g.json) {
    out << summary.dump(2) << "\n";
  } else if (!g.quiet) {
    out << trace.instance << " " << trace.learner << " vs " << trace.adversary << ", T=" << trace.horizon << ": "
        << trace.metric << " " << trace.final_loss().str() << " (" << trace.final_loss_over_sqrt_t()
        << " per sqrt T)\n";
  }
  return kExitOk;
}

SweepSetup load_sweep(const std::string& path, const Globals& g) {
  const Json doc = parse_json_file(path);
  corpus::Params params;
  if (doc.contains("params")) {
    for (const auto& [k, v] : doc["params"].items()) params[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  std::string spec = field(doc, "instance", path).get<std::string>();
  if (spec.rfind("corpus:", 0) != 0 && std::filesystem::path(spec).is_relative()) {
    spec = (std::filesystem::path(path).parent_path() / spec).string();
  }
  SweepSetup setup{RunSetup{load_instance(spec, g, params), "none", "hedge", {}}, {}, {}};
  setup.run.reduction = doc.value("reduction", "none");
  setup.run.learner = doc.value("learner", "hedge");
  const Json adv = doc.value("adversary", Json{{"kind", "iid"}});
  if (adv.is_string()) {
    const std::string text = adv.get<std::string>();
    if (text.rfind("replay:", 0) == 0) {
      setup.run.adversary.kind = "replay";
      setup.run.adversary.replay = load_replay(text.substr(7));
    } else {
      setup.run.adversary = parse_adversary_spec(text);
    }
  } else {
    setup.run.adversary.kind = field(adv, "kind", path + ".adversary").get<std::string>();
    if (adv.contains("mix")) setup.run.adversary.mix = vector_from(adv["mix"], path + ".adversary.mix");
    if (adv.contains("zero_coords")) {
      setup.run.adversary.zero_coords = adv["zero_coords"].get<std::vector<std::size_t>>();
    }
    if (adv.contains("losses")) setup.run.adversary.replay = vector_list_from(adv["losses"], path + ".adversary.losses");
  }
  setup.horizons = field(doc, "T", path).get<std::vector<std::int64_t>>();
  const Json& seeds = field(doc, "seeds", path);
  if (seeds.is_array()) {
    setup.seeds = seeds.get<std::vector<std::uint64_t>>();
  } else {
    const auto first = seeds.value("first", std::uint64_t{0});
    const auto count = field(seeds, "count", path + ".seeds").get<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i) setup.seeds.push_back(first + i);
  }
  return setup;
}

int cmd_sweep(const std::string& config, const std::string& csv, const Globals& g, std::ostream& out) {
  const SweepSetup setup = load_sweep(config, g);
  const std::string table = sweep_csv(rate_sweep(setup));
  if (csv.empty()) {
    if (!g.quiet) out << table;
  } else {
    write_file(csv, table);
  }
  return kExitOk;
}

// ---- examples ----

struct ExampleOptions {
  std::string name;
  std::string out;
  std::map<std::string, std::string> params;
};

int cmd_examples(const ExampleOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto& entries = corpus::entries();
  if (o.name.empty()) {
    for (const auto& e : entries) {
      out << e.name;
      for (const auto& [k, v] : e.defaults) out << " --" << k << " " << v;
      out << "\n    " << e.summary << "\n";
    }
    return kExitOk;
  }
  bool known = false;
  for (const auto& e : entries) known = known || e.name == o.name;
  if (!known) {
    err << "unknown example '" << o.name << "'; available:";
    for (const auto& e : entries) err << " " << e.name;
    err << "\n";
    return kExitFailure;
  }
  const AnyInstance inst = corpus::build(o.name, o.params);
  write_or_print(o.out, instance_to_json(inst), out);
  (void)g;
  return kExitOk;
}

}  // namespace

std::string verdict_to_json(const std::string& instance_name, const std::string& check,
                            const LinearizedInstance& linearized, const EquivalenceVerdict& verdict,
                            std::uint64_t seed) {
  Json doc;
  doc["instance"] = instance_name;
  doc["check"] = check;
  doc["status"] = to_string(verdict.status);
  doc["linearization"] = to_string(linearized.linearization);
  doc["S"] = verdict.S ? matrix_json(*verdict.S) : Json(nullptr);
  doc["target"] = verdict.target ? instance_json(*verdict.target) : Json(nullptr);
  doc["obstruction"] = nullptr;
  if (verdict.obstruction) {
    if (const auto* lk = std::get_if<LeftKernelEmpty>(&*verdict.obstruction)) {
      doc["obstruction"] = {{"kind", "LeftKernelEmpty"}, {"rank", lk->rank}, {"dim", lk->dim}};
    } else {
      const auto& od = std::get<OpposedDisplacement>(*verdict.obstruction);
      doc["obstruction"] = {{"kind", "OpposedDisplacement"},
                            {"x", vector_json(od.x)},
                            {"first", od.first},
                            {"second", od.second},
                            {"alpha", od.alpha.str()}};
    }
  }
  doc["external_failure"] = nullptr;
  if (verdict.external_failure) {
    doc["external_failure"] = {{"condition", verdict.external_failure->condition},
                               {"first", verdict.external_failure->first},
                               {"second", verdict.external_failure->second}};
  }
  doc["trials"] = verdict.trials;
  doc["span_dim"] = verdict.span_dim;
  doc["coefficient_range"] = verdict.coefficient_range;
  doc["failure_bound"] = verdict.failure_bound;
  doc["seed"] = seed;
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approachability and phi-regret laboratory", "approachlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--quiet", g.quiet, "Suppress human-readable output");
  app.add_flag("--json", g.json, "Print machine-readable JSON");
  app.add_option("--corpus-dir", g.corpus_dir, "Directory holding corpus:<name> instances");

  std::string classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "Print the class of an instance");
  classify_cmd->add_option("file,--in", classify_in, "Instance JSON or corpus:<name>")->required();

  std::string verify_in;
  auto* verify_cmd = app.add_subcommand("verify", "Classify and report fixed points or a witness");
  verify_cmd->add_option("file,--in", verify_in, "Instance JSON or corpus:<name>")->required();

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction");
  reduce_cmd->add_option("--method", reduce.method)
      ->required()
      ->check(CLI::IsMember({"classical", "tight-improper", "weighted-improper", "weighted-proper", "orthant"}));
  reduce_cmd->add_option("--in", reduce.in)->required();
  reduce_cmd->add_option("--out,-o", reduce.out);
  reduce_cmd->add_option("--weights", reduce.weights);
  reduce_cmd->add_option("--directions", reduce.directions);
  reduce_cmd->add_option("--sidecar", reduce.sidecar, "Defaults to reduction.json next to --out");

  EquivOptions equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide linear equivalence to external or proper regret");
  equiv_cmd->add_option("--in", equiv.in)->required();
  equiv_cmd->add_option("--check", equiv.check)->check(CLI::IsMember({"external", "proper", "auto"}));
  equiv_cmd->add_option("--trials", equiv.trials)->check(CLI::PositiveNumber);
  std::string equiv_seed;
  equiv_cmd->add_option("--seed", equiv_seed);
  equiv_cmd->add_option("--out,-o", equiv.out);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a learner against an adversary");
  sim_cmd->add_option("--in", sim.in)->required();
  sim_cmd->add_option("--learner", sim.learner, "hedge | ggm | blackwell | static:<vertex>");
  sim_cmd->add_option("--adversary", sim.adversary, "iid[:seed] | best-response | replay:<file>");
  sim_cmd->add_option("--reduction", sim.reduction)->check(CLI::IsMember({"none", "classical"}));
  sim_cmd->add_option("-T", sim.horizon)->required()->check(CLI::NonNegativeNumber);
  std::string sim_seed;
  sim_cmd->add_option("--seed", sim_seed);
  sim_cmd->add_option("--trace", sim.trace);

  std::string sweep_config;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate final loss / sqrt(T) over horizons and seeds");
  sweep_cmd->add_option("--config", sweep_config)->required();
  sweep_cmd->add_option("--csv", sweep_out);

  ExampleOptions example;
  std::string dprime, eps, d1, d2, n;
  auto* examples_cmd = app.add_subcommand("examples", "Write a bundled instance; lists them without a name");
  examples_cmd->add_option("name", example.name);
  examples_cmd->add_option("-o,--out", example.out);
  examples_cmd->add_option("--dprime", dprime);
  examples_cmd->add_option("--eps", eps);
  examples_cmd->add_option("--d1", d1);
  examples_cmd->add_option("--d2", d2);
  examples_cmd->add_option("--n", n);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_in, g, out);
    if (*verify_cmd) return cmd_verify(verify_in, g, out);
    if (*reduce_cmd) return cmd_reduce(reduce, g, out);
    if (*equiv_cmd) {
      if (!equiv_seed.empty()) equiv.seed = parse_seed(equiv_seed, "--seed");
      return cmd_equiv(equiv, g, out, err);
    }
    if (*sim_cmd) {
      if (!sim_seed.empty()) sim.seed = parse_seed(sim_seed, "--seed");
      return cmd_simulate(sim, g, out);
    }
    if (*sweep_cmd) return cmd_sweep(sweep_config, sweep_out, g, out);
    if (*examples_cmd) {
      const std::pair<const char*, std::string*> flags[] = {
          {"dprime", &dprime}, {"eps", &eps}, {"d1", &d1}, {"d2", &d2}, {"n", &n}};
      for (const auto& [key, value] : flags) {
        if (!value->empty()) example.params[key] = *value;
      }
      return cmd_examples(example, g, out, err);
    }
  } catch (const NotApproachableError& e) {
    err << "not approachable: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace approachlab::cli
