#ifndef TACHSIM_TOOLS_CONFIG_HPP
#define TACHSIM_TOOLS_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tachsim::cli {

/// Flat key=value configuration. '#' starts a comment; blank lines ignored.
/// Values stay strings until typed access; unknown keys are rejected at
/// resolution time against the scenario's schema.
class Config {
public:
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

  static Config from_file(const std::string& path);
  static void apply_line(Config& cfg, const std::string& line); // "key=value"

private:
  std::map<std::string, std::string> values_;
};

/// Defaults for `scenario`, overlaid with file values and overrides, then
/// validated: every key must belong to the scenario's schema.
Config resolve(const std::string& scenario, const Config& file_values,
               const Config& overrides);

std::string render_manifest(const Config& resolved, double wall_time_s);

} // namespace tachsim::cli

#endif
