#pragma once

#include <cstdio>
#include <string>

#include "wigner/errors.hpp"

// Deterministic serialization: flat JSON objects and CSV rows with numbers
// printed at 17 significant digits.

namespace wigner {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class JsonWriter {
 public:
  JsonWriter& field(const std::string& key, double v) {
    return raw(key, fmt_double(v));
  }
  JsonWriter& field(const std::string& key, int v) {
    return raw(key, std::to_string(v));
  }
  JsonWriter& field(const std::string& key, long v) {
    return raw(key, std::to_string(v));
  }
  JsonWriter& field(const std::string& key, unsigned long v) {
    return raw(key, std::to_string(v));
  }
  JsonWriter& field(const std::string& key, bool v) {
    return raw(key, v ? "true" : "false");
  }
  JsonWriter& field(const std::string& key, const std::string& v) {
    std::string quoted = "\"";
    for (char c : v) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    quoted += '"';
    return raw(key, quoted);
  }
  JsonWriter& field(const std::string& key, const char* v) {
    return field(key, std::string(v));
  }

  std::string str() const { return body_.empty() ? "{}\n" : body_ + "}\n"; }

 private:
  JsonWriter& raw(const std::string& key, const std::string& value) {
    body_ += body_.empty() ? "{" : ",";
    body_ += "\"" + key + "\":" + value;
    return *this;
  }

  std::string body_;
};

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& header) : text_(header + "\n") {}

  CsvWriter& cell(double v) { return raw(fmt_double(v)); }
  CsvWriter& cell(bool v) { return raw(v ? "1" : "0"); }
  CsvWriter& endrow() {
    text_ += '\n';
    fresh_row_ = true;
    return *this;
  }

  const std::string& str() const { return text_; }

 private:
  CsvWriter& raw(const std::string& s) {
    if (!fresh_row_) text_ += ',';
    fresh_row_ = false;
    text_ += s;
    return *this;
  }

  std::string text_;
  bool fresh_row_ = true;
};

}  // namespace wigner
