#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsgd {

// Column-stable CSV with a header row; numeric cells carry 12 significant
// digits. Non-finite values are refused so emitted files are always
// plottable.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns)
      : out_(path), n_columns_(columns.size()) {
    if (!out_) throw std::runtime_error("csv: cannot open " + path);
    for (size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
  }

  void row(long index, const std::vector<double>& values) {
    if (values.size() + 1 != n_columns_)
      throw std::runtime_error("csv: row width does not match the header");
    out_ << index;
    char buf[40];
    for (double v : values) {
      if (!std::isfinite(v)) throw std::runtime_error("csv: non-finite value");
      std::snprintf(buf, sizeof(buf), "%.12g", v);
      out_ << ',' << buf;
    }
    out_ << '\n';
  }

  void close() { out_.close(); }

 private:
  std::ofstream out_;
  size_t n_columns_;
};

}  // namespace rsgd
