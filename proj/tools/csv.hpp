#ifndef TACHSIM_TOOLS_CSV_HPP
#define TACHSIM_TOOLS_CSV_HPP

#include <string>
#include <vector>

namespace tachsim::cli::csv {

/// Shortest round-trip decimal representation.
std::string format_double(double v);

class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  Table& begin_row();
  Table& col(double v);
  Table& col(const std::string& v);
  Table& col(std::int64_t v);
  Table& col(std::uint64_t v);

  /// UTF-8, LF endings, comma separator, header row first.
  void write(const std::string& path) const;
  std::string render() const;

private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

} // namespace tachsim::cli::csv

#endif
