#pragma once

// Deterministic CSV emission: fixed column order, shortest round-trip
// floats, LF line endings, one writer.  Two runs with the same inputs
// produce byte-identical files.

#include <fstream>
#include <string>
#include <vector>

#include "jaklev/errors.hpp"
#include "jaklev/format.hpp"

namespace jaklev {

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw Error("csv row width does not match header");
    rows_.push_back(std::move(cells));
  }

  std::string to_string() const {
    std::string out = join(header_);
    for (const auto& row : rows_) out += join(row);
    return out;
  }

  void write(const std::string& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path + " for writing");
    file << to_string();
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    line += '\n';
    return line;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace jaklev
