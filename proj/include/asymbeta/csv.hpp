#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace asymbeta {

// Minimal delimited-text table: UTF-8, header row, configurable single-char
// delimiter. Fields are not quoted; none of the emitted values need quoting.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;          // -1 if absent
  int require_column(const std::string& name) const;  // throws naming column
};

Table read_delimited(const std::string& path, char delim = ',');

// Writer that formats doubles round-trip exactly and NaN as "NA".
class TableWriter {
 public:
  TableWriter(const std::string& path, std::vector<std::string> header,
              char delim = ',');
  ~TableWriter();

  void cell(const std::string& v);
  void cell(double v);
  void cell(int v);
  void cell(long long v);
  void end_row();

 private:
  std::ofstream out_;
  char delim_;
  size_t n_cols_;
  size_t col_ = 0;
  std::string path_;
};

}  // namespace asymbeta
