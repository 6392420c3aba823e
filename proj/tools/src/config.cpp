#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "augopt/harness.hpp"

namespace augopt::harness {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::pair<ExperimentKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ExperimentKind, std::string>> names = {
      {ExperimentKind::kNoiseSweep, "noise_sweep"},
      {ExperimentKind::kRateCheck, "rate_check"},
      {ExperimentKind::kUnchangedOptima, "unchanged_optima"},
      {ExperimentKind::kGraduatedCompare, "graduated_compare"},
      {ExperimentKind::kHessianCheck, "hessian_check"},
  };
  return names;
}

std::string divergence_name(Divergence d) {
  return d == Divergence::kSquaredEuclidean ? "squared_euclidean" : "kullback_leibler";
}

Divergence parse_divergence(const std::string& s) {
  if (s == "squared_euclidean") return Divergence::kSquaredEuclidean;
  if (s == "kullback_leibler" || s == "kl") return Divergence::kKullbackLeibler;
  throw Error("config: unknown divergence '" + s + "'");
}

template <class T>
T scalar(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception& e) {
    throw Error("config: bad value for '" + key + "': " + e.what());
  }
}

Vec vec_of(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence()) throw Error("config: '" + key + "' must be a list");
  Vec v;
  for (const auto& x : node) v.push_back(scalar<double>(x, key));
  return v;
}

void check_keys(const YAML::Node& map, const std::string& section,
                const std::set<std::string>& allowed) {
  if (!map.IsMap()) throw Error("config: '" + section + "' must be a map");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw Error("config: unknown key '" + section + "." + key + "'");
  }
}

void read_gen(const YAML::Node& n, GenSpec& gen) {
  check_keys(n, "gen", {"centroids", "n_per_cluster", "spread"});
  if (n["centroids"]) {
    gen.centroids.clear();
    for (const auto& c : n["centroids"]) gen.centroids.push_back(vec_of(c, "gen.centroids"));
  }
  if (n["n_per_cluster"]) gen.n_per_cluster = scalar<std::size_t>(n["n_per_cluster"], "gen.n_per_cluster");
  if (n["spread"]) gen.spread = scalar<double>(n["spread"], "gen.spread");
}

void read_transform(const YAML::Node& n, TransformSection& t) {
  check_keys(n, "transform", {"kind", "variance", "angle", "alpha1", "alpha2"});
  if (n["kind"]) t.kind = scalar<std::string>(n["kind"], "transform.kind");
  if (n["variance"]) t.variance = scalar<double>(n["variance"], "transform.variance");
  if (n["angle"]) t.angle = scalar<double>(n["angle"], "transform.angle");
  if (n["alpha1"]) t.alpha1 = scalar<double>(n["alpha1"], "transform.alpha1");
  if (n["alpha2"]) t.alpha2 = scalar<double>(n["alpha2"], "transform.alpha2");
}

void read_objective(const YAML::Node& n, ObjectiveSection& o) {
  check_keys(n, "objective",
             {"loss", "beta", "divergence", "candidates", "gamma", "alpha", "center", "curvature",
              "amplitude", "frequency", "kappa", "box_lo", "box_hi"});
  if (n["loss"]) o.loss = scalar<std::string>(n["loss"], "objective.loss");
  if (n["beta"]) o.beta = scalar<double>(n["beta"], "objective.beta");
  if (n["divergence"]) {
    o.divergence = parse_divergence(scalar<std::string>(n["divergence"], "objective.divergence"));
  }
  if (n["candidates"]) o.candidates = scalar<std::string>(n["candidates"], "objective.candidates");
  if (n["gamma"]) o.gamma = scalar<double>(n["gamma"], "objective.gamma");
  if (n["alpha"]) o.alpha = scalar<double>(n["alpha"], "objective.alpha");
  if (n["center"]) o.center = vec_of(n["center"], "objective.center");
  if (n["curvature"]) o.curvature = scalar<double>(n["curvature"], "objective.curvature");
  if (n["amplitude"]) o.amplitude = scalar<double>(n["amplitude"], "objective.amplitude");
  if (n["frequency"]) o.frequency = scalar<double>(n["frequency"], "objective.frequency");
  if (n["kappa"]) o.kappa = scalar<double>(n["kappa"], "objective.kappa");
  if (n["box_lo"]) o.box_lo = vec_of(n["box_lo"], "objective.box_lo");
  if (n["box_hi"]) o.box_hi = vec_of(n["box_hi"], "objective.box_hi");
}

void read_optimizer(const YAML::Node& n, OptimizerSection& o) {
  check_keys(n, "optimizer",
             {"eta", "max_iters", "stop_epsilon", "phases", "shrink", "samples", "delta1", "t_cap"});
  if (n["eta"]) o.eta = scalar<double>(n["eta"], "optimizer.eta");
  if (n["max_iters"]) o.max_iters = scalar<std::size_t>(n["max_iters"], "optimizer.max_iters");
  if (n["stop_epsilon"]) o.stop_epsilon = scalar<double>(n["stop_epsilon"], "optimizer.stop_epsilon");
  if (n["phases"]) o.phases = scalar<std::size_t>(n["phases"], "optimizer.phases");
  if (n["shrink"]) o.shrink = scalar<double>(n["shrink"], "optimizer.shrink");
  if (n["samples"]) o.samples = scalar<std::size_t>(n["samples"], "optimizer.samples");
  if (n["delta1"]) o.delta1 = scalar<double>(n["delta1"], "optimizer.delta1");
  if (n["t_cap"]) o.t_cap = scalar<std::size_t>(n["t_cap"], "optimizer.t_cap");
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kind_names()) {
    if (k == kind) return name;
  }
  throw Error("unknown experiment kind");
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (const auto& [k, n] : kind_names()) {
    if (n == name) return k;
  }
  throw Error("config: unknown experiment '" + name + "'");
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.experiment = kind;
  cfg.output_dir = "results/" + to_string(kind);
  switch (kind) {
    case ExperimentKind::kNoiseSweep:
      cfg.seeds = {1, 2, 3, 4, 5};
      cfg.epsilon = 1e-4;
      break;
    case ExperimentKind::kRateCheck:
      cfg.objective.loss = "quadratic";
      cfg.optimizer.max_iters = 3000;
      cfg.seeds = {1};
      break;
    case ExperimentKind::kUnchangedOptima:
      cfg.seeds = {1, 2, 3, 4, 5};
      cfg.objective.beta = 1.0;
      cfg.optimizer.eta = 0.05;
      cfg.optimizer.max_iters = 100000;
      cfg.optimizer.stop_epsilon = 1e-14;
      cfg.tolerance = 1e-3;
      break;
    case ExperimentKind::kGraduatedCompare:
      cfg.objective.loss = "perturbed_quadratic";
      cfg.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
      cfg.optimizer.eta = 0.3;
      cfg.epsilon = 1e-3;
      break;
    case ExperimentKind::kHessianCheck:
      cfg.objective.loss = "sum_norms";
      cfg.transform.kind = "alpha_pair";
      cfg.seeds = {1, 2};
      break;
  }
  return cfg;
}

std::vector<double> sweep_values(const ExperimentConfig& cfg) {
  if (!cfg.sweep.empty()) return cfg.sweep;
  switch (cfg.experiment) {
    case ExperimentKind::kNoiseSweep:
      return {0, 2, 4, 6, 8, 10};
    case ExperimentKind::kRateCheck: {
      std::vector<double> cells;
      for (std::size_t c = 0; c < kRateGridCells; ++c) cells.push_back(static_cast<double>(c));
      return cells;
    }
    case ExperimentKind::kUnchangedOptima:
      return {1, 2, 4};
    case ExperimentKind::kGraduatedCompare:
      return {static_cast<double>(cfg.optimizer.phases)};
    case ExperimentKind::kHessianCheck:
      return {2, 3, 4, 5, 6};
  }
  return {};
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw Error("config: seeds must be non-empty");
  if (!(cfg.epsilon > 0.0)) throw Error("config: epsilon must be > 0");
  if (!(cfg.tolerance > 0.0)) throw Error("config: tolerance must be > 0");
  if (cfg.output_dir.empty()) throw Error("config: output_dir must be non-empty");
  validate(cfg.gen);
  static const std::set<std::string> transforms = {"gaussian_noise", "rotation", "duplicate",
                                                   "alpha_pair"};
  if (!transforms.count(cfg.transform.kind)) {
    throw Error("config: unknown transform kind '" + cfg.transform.kind + "'");
  }
  static const std::set<std::string> losses = {"soft_min", "sum_norms", "quadratic",
                                               "perturbed_quadratic"};
  if (!losses.count(cfg.objective.loss)) {
    throw Error("config: unknown loss '" + cfg.objective.loss + "'");
  }
  if (cfg.objective.candidates != "nearest_to_centroids" && cfg.objective.candidates != "data") {
    throw Error("config: unknown candidates '" + cfg.objective.candidates + "'");
  }
  if (!(cfg.objective.beta >= 0.0)) throw Error("config: beta must be >= 0");
  if (!(cfg.objective.gamma >= 0.0) || !(cfg.objective.alpha >= 0.0)) {
    throw Error("config: gamma and alpha must be >= 0");
  }
  if (!(cfg.optimizer.eta > 0.0)) throw Error("config: eta must be > 0");
  if (cfg.optimizer.max_iters < 1) throw Error("config: max_iters must be >= 1");
  if (cfg.optimizer.phases < 1) throw Error("config: phases must be >= 1");
  if (!(cfg.optimizer.shrink > 1.0)) throw Error("config: shrink must be > 1");
  if (cfg.optimizer.samples < 1) throw Error("config: samples must be >= 1");
  const auto& o = cfg.objective;
  if (o.center.size() != o.box_lo.size() || o.box_lo.size() != o.box_hi.size()) {
    throw Error("config: center, box_lo and box_hi must have equal length");
  }
  if (cfg.experiment == ExperimentKind::kNoiseSweep ||
      cfg.experiment == ExperimentKind::kUnchangedOptima) {
    for (double v : sweep_values(cfg)) {
      if (!(v >= 0.0)) throw Error("config: sweep variances must be >= 0");
    }
  }
}

ExperimentConfig parse_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw Error(std::string("config: YAML parse error: ") + e.what());
  }
  if (!root.IsMap()) throw Error("config: top level must be a map");
  if (!root["experiment"]) throw Error("config: missing 'experiment'");
  check_keys(root, "",
             {"experiment", "seeds", "epsilon", "tolerance", "sweep", "output_dir", "gen",
              "transform", "objective", "optimizer"});

  ExperimentConfig cfg =
      default_config(parse_experiment_kind(scalar<std::string>(root["experiment"], "experiment")));
  if (root["seeds"]) {
    cfg.seeds.clear();
    if (!root["seeds"].IsSequence()) throw Error("config: 'seeds' must be a list");
    for (const auto& s : root["seeds"]) cfg.seeds.push_back(scalar<std::uint64_t>(s, "seeds"));
  }
  if (root["epsilon"]) cfg.epsilon = scalar<double>(root["epsilon"], "epsilon");
  if (root["tolerance"]) cfg.tolerance = scalar<double>(root["tolerance"], "tolerance");
  if (root["sweep"]) cfg.sweep = vec_of(root["sweep"], "sweep");
  if (root["output_dir"]) cfg.output_dir = scalar<std::string>(root["output_dir"], "output_dir");
  if (root["gen"]) read_gen(root["gen"], cfg.gen);
  if (root["transform"]) read_transform(root["transform"], cfg.transform);
  if (root["objective"]) read_objective(root["objective"], cfg.objective);
  if (root["optimizer"]) read_optimizer(root["optimizer"], cfg.optimizer);
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_json(const ExperimentConfig& cfg, int indent) {
  Json j;
  j["experiment"] = to_string(cfg.experiment);
  j["seeds"] = cfg.seeds;
  j["epsilon"] = cfg.epsilon;
  j["tolerance"] = cfg.tolerance;
  j["sweep"] = sweep_values(cfg);
  j["output_dir"] = cfg.output_dir;

  Json centroids = Json::array();
  for (const auto& c : cfg.gen.centroids) centroids.push_back(vec_json(c));
  j["gen"] = {{"centroids", centroids},
              {"n_per_cluster", cfg.gen.n_per_cluster},
              {"spread", cfg.gen.spread}};
  j["transform"] = {{"kind", cfg.transform.kind},
                    {"variance", cfg.transform.variance},
                    {"angle", cfg.transform.angle},
                    {"alpha1", cfg.transform.alpha1},
                    {"alpha2", cfg.transform.alpha2}};
  const auto& o = cfg.objective;
  j["objective"] = {{"loss", o.loss},
                    {"beta", o.beta},
                    {"divergence", divergence_name(o.divergence)},
                    {"candidates", o.candidates},
                    {"gamma", o.gamma},
                    {"alpha", o.alpha},
                    {"center", vec_json(o.center)},
                    {"curvature", o.curvature},
                    {"amplitude", o.amplitude},
                    {"frequency", o.frequency},
                    {"kappa", o.kappa},
                    {"box_lo", vec_json(o.box_lo)},
                    {"box_hi", vec_json(o.box_hi)}};
  const auto& p = cfg.optimizer;
  j["optimizer"] = {{"eta", p.eta},
                    {"max_iters", p.max_iters},
                    {"stop_epsilon", p.stop_epsilon},
                    {"phases", p.phases},
                    {"shrink", p.shrink},
                    {"samples", p.samples},
                    {"delta1", p.delta1 ? Json(*p.delta1) : Json(nullptr)},
                    {"t_cap", p.t_cap}};
  return j.dump(indent);
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return cfg.output_dir;
}

}  // namespace augopt::harness
