#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace estrip::io {

// 17 significant digits: enough for any double to round-trip.
std::string format_double(double x);

// RFC 4180: quote fields holding a comma, quote, CR or LF; double embedded quotes.
std::string csv_field(std::string_view s);

class Csv {
 public:
  explicit Csv(std::vector<std::string> header);

  Csv& row(std::vector<std::string> fields);
  // Convenience for all-numeric rows.
  Csv& row(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  const std::string& str() const { return text_; }

 private:
  void append(const std::vector<std::string>& fields);
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

// Write to a sibling temp file, flush, then rename over the target.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// "-" or empty means stdout.
void emit(const std::string& path, std::string_view content);

}  // namespace estrip::io
