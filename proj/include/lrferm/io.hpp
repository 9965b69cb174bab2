#pragma once

// CSV / binary writers shared by the CLI and the debug dumps.
//
// Every CSV starts with a schema row "# schema: <name> v<version>", then a
// column header. Doubles are written in the shortest representation that
// round-trips, so reruns are byte-identical.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"

namespace lrferm {

inline constexpr int kCsvSchemaVersion = 1;

std::string format_double(double value);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::string_view schema, const std::vector<std::string>& columns);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t written_ = 0;
};

/// Dense (row, col, re, im) listing of every entry.
std::string matrix_csv(const Eigen::MatrixXcd& m, std::string_view schema = "matrix");

/// Dense binary dump: magic "LRFM", int64 rows, int64 cols, then column-major
/// complex<double> entries (little-endian host order).
void write_matrix_binary(const std::filesystem::path& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_binary(const std::filesystem::path& path);

/// Writes `text` to `path`, creating parent directories. Throws Error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lrferm
