#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace nsch {

/// Shortest round-trip decimal form ("nan" for NaN).
std::string format_number(double v);

/// Minimal CSV emitter: header first, then numeric rows, '\n' line ends.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header);

  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace nsch
