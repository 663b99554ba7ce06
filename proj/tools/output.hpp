#pragma once

// Deterministic text output helpers shared by the CLI subcommands: floats
// are always rendered with 12 significant digits, lowercase exponents and
// '\n' line endings, so identical invocations are byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dkpcli {

inline std::string num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Flat JSON object writer with insertion-ordered keys.  Numeric fields are
/// emitted as decimal literals; non-finite values are not representable and
/// must be routed through a status field instead.
class JsonObject {
 public:
  void add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, "\"" + value + "\"");
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, double value) {
    if (!(value == value) || value > 1.7e308 || value < -1.7e308)
      throw std::runtime_error("json: non-finite value for key " + key);
    fields_.emplace_back(key, num12(value));
  }
  void add(const std::string& key, int value) {
    fields_.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, bool value) {
    fields_.emplace_back(key, value ? "true" : "false");
  }

  std::string str() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += "  \"" + fields_[i].first + "\": " + fields_[i].second;
      out += (i + 1 < fields_.size()) ? ",\n" : "\n";
    }
    out += "}\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Writes to the --output path, or stdout when the path is empty.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    row += cells[i];
    if (i + 1 < cells.size()) row += ",";
  }
  row += "\n";
  return row;
}

}  // namespace dkpcli
