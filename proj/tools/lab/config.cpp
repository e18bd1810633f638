#include "lab/config.hpp"

#include <set>

#include "tfp/io.hpp"

namespace tfp::lab {

using nlohmann::json;

std::vector<std::uint32_t> ExperimentConfig::sizes() const {
  return n_sweep.empty() ? std::vector<std::uint32_t>{n} : n_sweep;
}

namespace {

void apply_override(json& doc, const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + item + "' is not key=value");
  const std::string path = item.substr(0, eq);
  const std::string text = item.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) throw ConfigError("override '" + item + "' has an empty key");
    if (!node->is_object()) throw ConfigError("override '" + item + "' descends into a non-object");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

class Reader {
 public:
  Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(where() + " must be an object");
  }

  bool has(const char* key) const { return obj_.contains(key); }

  template <class T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    if (!obj_.contains(key)) return;
    try {
      out = obj_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(where(key) + " has the wrong type");
    }
  }

  template <class T>
  void get_optional(const char* key, std::optional<T>& out) {
    seen_.insert(key);
    if (!obj_.contains(key) || obj_.at(key).is_null()) return;
    T value{};
    get(key, value);
    out = value;
  }

  Reader child(const char* key) {
    seen_.insert(key);
    static const json empty = json::object();
    return Reader(obj_.contains(key) ? obj_.at(key) : empty, path_.empty() ? key : path_ + "." + key);
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items())
      if (!seen_.count(key)) throw ConfigError("unknown key '" + (path_.empty() ? key : path_ + "." + key) + "'");
  }

  std::string where(const std::string& key = "") const {
    std::string p = path_;
    if (!key.empty()) p = p.empty() ? key : p + "." + key;
    return p.empty() ? "config" : "'" + p + "'";
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

ExperimentConfig load_config(const std::string& command, json doc, const std::vector<std::string>& overrides) {
  if (doc.is_null()) doc = json::object();
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& o : overrides) apply_override(doc, o);

  ExperimentConfig c;
  c.command = command;
  Reader r(doc, "");
  int version = kFormatVersion;
  r.get("format_version", version);
  require(version == kFormatVersion, "unsupported format_version " + std::to_string(version));
  r.get("n", c.n);
  r.get("n_sweep", c.n_sweep);
  r.get("seeds", c.seeds);
  r.get("master_seed", c.master_seed);
  r.get("epsilon", c.epsilon);
  r.get("delta", c.delta);
  r.get("sampler", c.sampler);
  r.get("codegree_samples", c.codegree_samples);
  r.get("write_edges", c.write_edges);
  r.get("output_dir", c.output_dir);
  r.get("threads", c.threads);
  {
    Reader s = r.child("schedule");
    s.get("kind", c.schedule.kind);
    s.get("points", c.schedule.points);
    s.get("times", c.schedule.times);
    s.finish();
  }
  {
    Reader s = r.child("stats");
    s.get("mode", c.stats.mode);
    s.get("samples", c.stats.samples);
    s.get("exact_max_n", c.stats.exact_max_n);
    s.finish();
  }
  {
    Reader s = r.child("census");
    s.get("graphs", c.census.graphs);
    s.get("timeout_ms", c.census.timeout_ms);
    s.finish();
  }
  {
    Reader s = r.child("ramsey");
    s.get("max_n", c.ramsey.max_n);
    s.get("timeout_ms", c.ramsey.timeout_ms);
    s.get("node_budget", c.ramsey.node_budget);
    s.finish();
  }
  {
    Reader s = r.child("stacking");
    s.get("words", c.stacking.words);
    s.get("pairs", c.stacking.pairs);
    s.get("snapshot", c.stacking.snapshot);
    s.get("t", c.stacking.t);
    s.finish();
  }
  {
    Reader s = r.child("verify");
    s.get("n_values", c.verify.n_values);
    s.get("seeds", c.verify.seeds);
    s.get_optional("fault_step", c.verify.fault_step);
    s.finish();
  }
  r.finish();

  for (auto n : c.sizes()) require(n >= 2 && n <= 65536, "n must lie in [2, 65536]");
  require(c.seeds >= 1, "seeds must be at least 1");
  require(c.epsilon > 0 && c.epsilon < 0.5, "epsilon must lie in (0, 0.5)");
  require(c.delta > 0, "delta must be positive");
  require(c.sampler == "ranked" || c.sampler == "lazy", "sampler must be 'ranked' or 'lazy'");
  require(c.schedule.kind == "geometric" || c.schedule.kind == "times" || c.schedule.kind == "none",
          "schedule.kind must be geometric, times or none");
  require(c.schedule.points >= 1, "schedule.points must be at least 1");
  for (double t : c.schedule.times) require(t >= 0, "schedule.times must be non-negative");
  require(c.stats.mode == "auto" || c.stats.mode == "exact" || c.stats.mode == "sampled",
          "stats.mode must be auto, exact or sampled");
  require(c.stats.samples >= 2, "stats.samples must be at least 2");
  require(c.threads >= 1, "threads must be at least 1");
  require(!c.census.graphs.empty(), "census.graphs must not be empty");
  require(c.ramsey.max_n >= 2 && c.ramsey.max_n <= 512, "ramsey.max_n must lie in [2, 512]");
  require(!c.stacking.words.empty(), "stacking.words must not be empty");
  require(c.stacking.t >= 0, "stacking.t must be non-negative");
  require(c.verify.seeds >= 1, "verify.seeds must be at least 1");
  for (auto n : c.verify.n_values) require(n >= 2 && n <= 64, "verify.n_values must lie in [2, 64]");
  return c;
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["command"] = c.command;
  j["n"] = c.n;
  j["n_sweep"] = c.n_sweep;
  j["seeds"] = c.seeds;
  j["master_seed"] = c.master_seed;
  j["epsilon"] = c.epsilon;
  j["delta"] = c.delta;
  j["sampler"] = c.sampler;
  j["schedule"] = {{"kind", c.schedule.kind}, {"points", c.schedule.points}, {"times", c.schedule.times}};
  j["stats"] = {{"mode", c.stats.mode}, {"samples", c.stats.samples}, {"exact_max_n", c.stats.exact_max_n}};
  j["codegree_samples"] = c.codegree_samples;
  j["write_edges"] = c.write_edges;
  j["census"] = {{"graphs", c.census.graphs}, {"timeout_ms", c.census.timeout_ms}};
  j["ramsey"] = {{"max_n", c.ramsey.max_n}, {"timeout_ms", c.ramsey.timeout_ms}, {"node_budget", c.ramsey.node_budget}};
  j["stacking"] = {{"words", c.stacking.words}, {"pairs", c.stacking.pairs}, {"snapshot", c.stacking.snapshot},
                   {"t", c.stacking.t}};
  nlohmann::ordered_json verify = {{"n_values", c.verify.n_values}, {"seeds", c.verify.seeds}};
  verify["fault_step"] = c.verify.fault_step ? nlohmann::ordered_json(*c.verify.fault_step) : nlohmann::ordered_json();
  j["verify"] = verify;
  return j;
}

std::string config_hash(const ExperimentConfig& c) {
  return sha256_hex(to_json(c).dump() + "\n" + kToolVersion);
}

}  // namespace tfp::lab
