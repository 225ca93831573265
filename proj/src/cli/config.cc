#include "sags/cli/config.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sags/core/error.h"

namespace sags::cli {

using nlohmann::json;

std::string_view to_string(Domain d) { return d == Domain::kSequence ? "sequence" : "graph"; }

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kAnneal:
      return "sa";
    case Mode::kHillClimb:
      return "hillclimb";
    case Mode::kFixedTemperature:
      return "fixed-temp";
    case Mode::kGenetic:
      return "ga";
  }
  return "?";
}

Domain parse_domain(std::string_view name) {
  if (name == "sequence") return Domain::kSequence;
  if (name == "graph") return Domain::kGraph;
  throw ConfigError("unknown domain '" + std::string(name) + "' (expected sequence or graph)");
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::kAnneal, Mode::kHillClimb, Mode::kFixedTemperature, Mode::kGenetic}) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("unknown mode '" + std::string(name) + "' (expected sa, hillclimb, fixed-temp or ga)");
}

ExperimentConfig ExperimentConfig::defaults(Domain domain) {
  ExperimentConfig c;
  c.domain = domain;
  if (domain == Domain::kGraph) {
    c.annealer.t_init = 0.01;
    c.annealer.cooling_coeff = 3e-6;
    c.annealer.max_steps = 3000;
  }
  return c;
}

void ExperimentConfig::validate() const {
  annealer.validate();
  ga.validate();
  sequence.objective.validate();
  sequence.proposal.validate();
  graph.objective.validate();
  graph.proposal.validate();
  if (!(sequence.ibleu_alpha >= 0.0 && sequence.ibleu_alpha <= 1.0)) throw ConfigError("ibleu_alpha must lie in [0, 1]");
  if (runs_per_input < 1) throw ConfigError("runs_per_input must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
}

AnnealerConfig ExperimentConfig::effective_annealer(std::uint64_t seed) const {
  AnnealerConfig a = annealer;
  a.seed = seed;
  switch (mode) {
    case Mode::kHillClimb:
      return AnnealerConfig::hill_climbing(a.max_steps, seed);
    case Mode::kFixedTemperature:
      return AnnealerConfig::fixed_temperature(a.t_init, a.max_steps, seed);
    default:
      return a;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t input_index, std::size_t run_index) {
  return base + static_cast<std::uint64_t>(input_index) * 1000 + static_cast<std::uint64_t>(run_index);
}

int resolve_workers(int configured) {
  if (const char* env = std::getenv("SAGS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v < 1) throw ConfigError("SAGS_WORKERS must be a positive integer");
    return static_cast<int>(v);
  }
  return configured;
}

namespace {

json weights_json(const std::array<double, 3>& w) { return json::array({w[0], w[1], w[2]}); }

json bleu_json(const metrics::BleuConfig& b) {
  return {{"max_n", b.max_n}, {"epsilon", b.epsilon}, {"brevity_penalty", b.brevity_penalty}};
}

// Reads `key` from an object into `target` when present and removes it from
// the set of unread keys.
class Reader {
 public:
  Reader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object.is_object()) throw ConfigError(path_ + " must be an object");
    for (const auto& [k, v] : object.items()) unread_.insert(k);
  }

  template <class T>
  void get(const char* key, T& target) {
    const auto it = object_.find(key);
    if (it == object_.end()) return;
    unread_.erase(key);
    try {
      target = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(path_ + "." + key + " has the wrong type");
    }
  }

  void weights(const char* key, std::array<double, 3>& target) {
    std::vector<double> v;
    get(key, v);
    if (object_.contains(key)) {
      if (v.size() != 3) throw ConfigError(path_ + "." + key + " must list three weights");
      std::copy(v.begin(), v.end(), target.begin());
    }
  }

  const json* child(const char* key) {
    const auto it = object_.find(key);
    if (it == object_.end()) return nullptr;
    unread_.erase(key);
    return &*it;
  }

  void finish() const {
    if (!unread_.empty()) throw ConfigError("unknown key " + path_ + "." + *unread_.begin());
  }

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> unread_;
};

void read_bleu(const json& j, metrics::BleuConfig& b, const std::string& path) {
  Reader r(j, path);
  r.get("max_n", b.max_n);
  r.get("epsilon", b.epsilon);
  r.get("brevity_penalty", b.brevity_penalty);
  r.finish();
}

}  // namespace

std::string to_json(const ExperimentConfig& c, int indent) {
  const auto& a = c.annealer;
  const auto& s = c.sequence;
  const auto& g = c.graph;
  json j = {
      {"domain", to_string(c.domain)},
      {"mode", to_string(c.mode)},
      {"annealer",
       {{"t_init", a.t_init},
        {"cooling_coeff", a.cooling_coeff},
        {"schedule", to_string(a.schedule)},
        {"max_steps", a.max_steps},
        {"seed", a.seed},
        {"include_initial_in_best", a.include_initial_in_best}}},
      {"ga",
       {{"population_size", c.ga.population_size},
        {"p_mutation", c.ga.p_mutation},
        {"p_crossover", c.ga.p_crossover},
        {"generations", c.ga.generations}}},
      {"sequence",
       {{"p_keyword", s.objective.p_keyword},
        {"q_sentence", s.objective.q_sentence},
        {"s_diversity", s.objective.s_diversity},
        {"bleu", bleu_json(s.objective.bleu)},
        {"top_k", s.proposal.top_k},
        {"op_weights", weights_json(s.proposal.op_weights)},
        {"copy", s.proposal.copy_enabled},
        {"ibleu_alpha", s.ibleu_alpha}}},
      {"graph",
       {{"sim_weight", g.objective.sim_weight},
        {"sim_threshold", g.objective.sim_threshold},
        {"radius", g.objective.radius},
        {"bits", g.objective.bits},
        {"top_k", g.proposal.top_k},
        {"op_weights", weights_json(g.proposal.op_weights)}}},
      {"models",
       {{"forward", c.models.forward},
        {"backward", c.models.backward},
        {"embeddings", c.models.embeddings},
        {"idf", c.models.idf},
        {"stopwords", c.models.stopwords},
        {"context", c.models.context}}},
      {"input", c.input},
      {"output_dir", c.output_dir},
      {"runs_per_input", c.runs_per_input},
      {"workers", c.workers},
      {"omit_timing", c.omit_timing},
  };
  return j.dump(indent);
}

ExperimentConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  std::string domain = "sequence";
  if (j.contains("domain")) {
    if (!j["domain"].is_string()) throw ConfigError("config.domain must be a string");
    domain = j["domain"].get<std::string>();
  }
  ExperimentConfig c = ExperimentConfig::defaults(parse_domain(domain));

  Reader root(j, "config");
  root.get("domain", domain);
  std::string mode(to_string(c.mode));
  root.get("mode", mode);
  c.mode = parse_mode(mode);
  if (const json* a = root.child("annealer")) {
    Reader r(*a, "config.annealer");
    r.get("t_init", c.annealer.t_init);
    r.get("cooling_coeff", c.annealer.cooling_coeff);
    std::string schedule(to_string(c.annealer.schedule));
    r.get("schedule", schedule);
    c.annealer.schedule = parse_schedule(schedule);
    r.get("max_steps", c.annealer.max_steps);
    r.get("seed", c.annealer.seed);
    r.get("include_initial_in_best", c.annealer.include_initial_in_best);
    r.finish();
  }
  if (const json* ga = root.child("ga")) {
    Reader r(*ga, "config.ga");
    r.get("population_size", c.ga.population_size);
    r.get("p_mutation", c.ga.p_mutation);
    r.get("p_crossover", c.ga.p_crossover);
    r.get("generations", c.ga.generations);
    r.finish();
  }
  if (const json* s = root.child("sequence")) {
    Reader r(*s, "config.sequence");
    r.get("p_keyword", c.sequence.objective.p_keyword);
    r.get("q_sentence", c.sequence.objective.q_sentence);
    r.get("s_diversity", c.sequence.objective.s_diversity);
    if (const json* b = r.child("bleu")) read_bleu(*b, c.sequence.objective.bleu, "config.sequence.bleu");
    r.get("top_k", c.sequence.proposal.top_k);
    r.weights("op_weights", c.sequence.proposal.op_weights);
    r.get("copy", c.sequence.proposal.copy_enabled);
    r.get("ibleu_alpha", c.sequence.ibleu_alpha);
    r.finish();
  }
  if (const json* g = root.child("graph")) {
    Reader r(*g, "config.graph");
    r.get("sim_weight", c.graph.objective.sim_weight);
    r.get("sim_threshold", c.graph.objective.sim_threshold);
    r.get("radius", c.graph.objective.radius);
    r.get("bits", c.graph.objective.bits);
    r.get("top_k", c.graph.proposal.top_k);
    r.weights("op_weights", c.graph.proposal.op_weights);
    r.finish();
  }
  if (const json* m = root.child("models")) {
    Reader r(*m, "config.models");
    r.get("forward", c.models.forward);
    r.get("backward", c.models.backward);
    r.get("embeddings", c.models.embeddings);
    r.get("idf", c.models.idf);
    r.get("stopwords", c.models.stopwords);
    r.get("context", c.models.context);
    r.finish();
  }
  root.get("input", c.input);
  root.get("output_dir", c.output_dir);
  root.get("runs_per_input", c.runs_per_input);
  root.get("workers", c.workers);
  root.get("omit_timing", c.omit_timing);
  root.finish();
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str());
}

}  // namespace sags::cli
