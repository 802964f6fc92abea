#include "config.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "csv.hpp"
#include "tachsim/errors.hpp"

namespace tachsim::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Schema {
  std::map<std::string, std::string> defaults;
};

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> table = [] {
    std::map<std::string, Schema> t;
    const std::map<std::string, std::string> common = {
        {"output_dir", "out"}, {"seed", "1"}, {"emit_plots", "false"}};

    auto with_common = [&](std::map<std::string, std::string> extra) {
      extra.insert(common.begin(), common.end());
      return Schema{std::move(extra)};
    };

    t["dispersion"] = with_common({{"mass", "1"},
                                   {"p_min", "-4"},
                                   {"p_max", "4"},
                                   {"p_steps", "161"}});
    t["free"] = with_common({{"n_points", "1024"},
                             {"extent", "40"},
                             {"width", "1"},
                             {"p_o", "3.5"},
                             {"mass", "2"},
                             {"mass_type", "tachyon"},
                             {"initial_state", "gaussian"},
                             {"dt", "5e-4"},
                             {"t_final", "2"},
                             {"sample_stride", "20"},
                             {"snapshot_stride", "400"},
                             {"fit_center", "1.35"}});
    t["correlation"] = with_common({{"n_points", "1024"},
                                    {"extent", "40"},
                                    {"width", "1"},
                                    {"p_o", "10"},
                                    {"mass", "1"}});
    t["klein"] = with_common({{"n_points", "2048"},
                              {"extent", "64"},
                              {"x0", "-12"},
                              {"width", "1"},
                              {"p_o", "8"},
                              {"mass", "1"},
                              {"g", "2"},
                              {"mass_type", "tachyon"},
                              {"dt", "5e-4"},
                              {"t_final", "14"},
                              {"sample_stride", "50"},
                              {"snapshot_stride", "4000"}});
    t["lz"] = with_common({{"p_start", "8"},
                           {"p_end", "-8"},
                           {"g", "2"},
                           {"mass", "1"},
                           {"mass_type", "tachyon"},
                           {"dt", "0"}});
    t["ion"] = with_common({{"eta", "0.05"},
                            {"omega_tilde", "628318.5307179587"},
                            {"nu", "6283185.307179586"},
                            {"gamma", "502654.8245743669"},
                            {"gamma_d", "auto"},
                            {"delta", "0"},
                            {"phi", "0"},
                            {"delta_x", "3.4e-9"},
                            {"n_max", "128"},
                            {"mass_source", "decay"},
                            {"p_o", "3.5"},
                            {"t_final", "1"},
                            {"dt", "0"},
                            {"sample_stride", "318"},
                            {"n_traj", "0"},
                            {"readout_fidelity", "1"}});
    t["duality"] = with_common({{"case", "plane_wave"}, {"n", "1024"}, {"g", "0.1"}});
    t["measurement"] = with_common({{"p_o", "10"},
                                    {"mass", "1"},
                                    {"n_max", "256"},
                                    {"k_values", "-0.02,-0.01,0.01,0.02"}});
    t["sweep"] = with_common({{"base_scenario", "lz"}});
    return t;
  }();
  return table;
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("key " + key + " is not a number: '" + v + "'");
  }
}

std::int64_t Config::get_int(const std::string& key) const {
  const double d = get_double(key);
  const auto i = static_cast<std::int64_t>(d);
  if (static_cast<double>(i) != d) {
    throw ConfigError("key " + key + " is not an integer");
  }
  return i;
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::int64_t i = get_int(key);
  if (i < 0) throw ConfigError("key " + key + " must be nonnegative");
  return static_cast<std::uint64_t>(i);
}

bool Config::get_bool(const std::string& key) const {
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("key " + key + " is not a boolean: '" + v + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  const std::string v = get_string(key);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("key " + key + " has a non-numeric entry: '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("key " + key + " is an empty list");
  return out;
}

void Config::apply_line(Config& cfg, const std::string& line) {
  std::string s = line;
  const auto hash = s.find('#');
  if (hash != std::string::npos) s = s.substr(0, hash);
  s = trim(s);
  if (s.empty()) return;
  const auto eq = s.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("malformed config line (expected key=value): '" + line + "'");
  }
  const std::string key = trim(s.substr(0, eq));
  const std::string value = trim(s.substr(eq + 1));
  if (key.empty()) throw ConfigError("empty key in config line: '" + line + "'");
  cfg.set(key, value);
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Config cfg;
  std::string line;
  while (std::getline(in, line)) apply_line(cfg, line);
  return cfg;
}

Config resolve(const std::string& scenario, const Config& file_values,
               const Config& overrides) {
  const auto& table = schemas();
  auto it = table.find(scenario);
  if (it == table.end()) {
    std::string known;
    for (const auto& [name, schema] : table) known += name + " ";
    throw ConfigError("unknown scenario '" + scenario + "'; known: " + known);
  }

  Config out;
  out.set("scenario", scenario);
  for (const auto& [k, v] : it->second.defaults) out.set(k, v);

  auto overlay = [&](const Config& src) {
    for (const auto& [k, v] : src.entries()) {
      if (k == "scenario") continue;
      const bool is_sweep_key = scenario == "sweep" && k.rfind("sweep.", 0) == 0;
      const bool in_base =
          scenario == "sweep" &&
          [&] {
            const auto base = table.find(src.entries().count("base_scenario")
                                             ? src.get_string("base_scenario")
                                             : out.get_string("base_scenario"));
            return base != table.end() && base->second.defaults.count(k) > 0;
          }();
      if (!it->second.defaults.count(k) && !is_sweep_key && !in_base) {
        throw ConfigError("unknown key '" + k + "' for scenario " + scenario);
      }
      out.set(k, v);
    }
  };
  overlay(file_values);
  overlay(overrides);
  return out;
}

std::string render_manifest(const Config& resolved, double wall_time_s) {
  std::string out;
  out += "# tachsim manifest\n";
  out += "# version: " TACHSIM_VERSION "\n";
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        now.time_since_epoch())
                        .count();
  out += "# written_at_unix: " + std::to_string(secs) + "\n";
  out += "# wall_time_s: " + csv::format_double(wall_time_s) + "\n";
  for (const auto& [k, v] : resolved.entries()) {
    out += k + "=" + v + "\n";
  }
  return out;
}

} // namespace tachsim::cli
