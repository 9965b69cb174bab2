#include "lrferm/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lrferm {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::string_view schema,
                     const std::vector<std::string>& columns)
    : out_(out), columns_(columns.size()) {
  out_ << "# schema: " << schema << " v" << kCsvSchemaVersion << '\n';
  for (std::size_t k = 0; k < columns.size(); ++k) out_ << (k ? "," : "") << columns[k];
  out_ << '\n';
}

CsvWriter& CsvWriter::field(std::string_view text) {
  if (written_ == columns_) throw Error("CsvWriter: too many fields in row");
  out_ << (written_ ? "," : "") << text;
  ++written_;
  return *this;
}

CsvWriter& CsvWriter::field(double value) { return field(format_double(value)); }

CsvWriter& CsvWriter::field(long long value) { return field(std::to_string(value)); }

void CsvWriter::end_row() {
  if (written_ != columns_) throw Error("CsvWriter: row has missing fields");
  out_ << '\n';
  written_ = 0;
}

std::string matrix_csv(const Eigen::MatrixXcd& m, std::string_view schema) {
  std::ostringstream out;
  CsvWriter csv(out, schema, {"row", "col", "re", "im"});
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      csv.field(static_cast<long long>(i)).field(static_cast<long long>(j));
      csv.field(m(i, j).real()).field(m(i, j).imag());
      csv.end_row();
    }
  return out.str();
}

void write_matrix_binary(const std::filesystem::path& path, const Eigen::MatrixXcd& m) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  const std::int64_t rows = m.rows();
  const std::int64_t cols = m.cols();
  out.write("LRFM", 4);
  out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(sizeof(Complex) * static_cast<std::size_t>(m.size())));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

Eigen::MatrixXcd read_matrix_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  char magic[4];
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&rows), sizeof rows);
  in.read(reinterpret_cast<char*>(&cols), sizeof cols);
  if (!in || std::string_view(magic, 4) != "LRFM" || rows < 0 || cols < 0)
    throw Error("'" + path.string() + "' is not a matrix dump");
  Eigen::MatrixXcd m(rows, cols);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(Complex) * static_cast<std::size_t>(m.size())));
  if (!in) throw Error("truncated matrix dump '" + path.string() + "'");
  return m;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace lrferm
