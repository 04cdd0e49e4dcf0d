#pragma once

// Structured run reports: a minimal insertion-ordered JSON document, an
// assertions table, and the JSON/text/CSV renderings used by the
// command-line driver. Floating-point values are printed with 17 significant
// digits so runs are reproducible byte for byte; exact rationals are printed
// as "p/q" strings.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

inline constexpr const char* kVersion = "1.0.0";

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Insertion-ordered JSON value; enough for the reports this toolkit emits.
class JsonValue {
 public:
  enum class Kind { null, boolean, integer, number, string, array, object };

  JsonValue() = default;
  JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
  JsonValue(int v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(unsigned v) : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
  JsonValue(unsigned long v) : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
  JsonValue(unsigned long long v) : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
  JsonValue(double v) : kind_(Kind::number), num_(v) {}
  JsonValue(const char* s) : kind_(Kind::string), str_(s) {}
  JsonValue(std::string s) : kind_(Kind::string), str_(std::move(s)) {}

  static JsonValue array() {
    JsonValue v;
    v.kind_ = Kind::array;
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.kind_ = Kind::object;
    return v;
  }

  JsonValue& operator[](const std::string& key) {
    if (kind_ == Kind::null) kind_ = Kind::object;
    if (kind_ != Kind::object) throw std::logic_error("JsonValue: not an object");
    for (auto& [k, v] : members_)
      if (k == key) return v;
    members_.emplace_back(key, JsonValue{});
    return members_.back().second;
  }

  void push_back(JsonValue v) {
    if (kind_ == Kind::null) kind_ = Kind::array;
    if (kind_ != Kind::array) throw std::logic_error("JsonValue: not an array");
    items_.push_back(std::move(v));
  }

  std::string dump(int indent = 2) const {
    std::string out;
    write(out, indent, 0);
    return out;
  }

 private:
  static void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out += buf;
          } else {
            out += ch;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
    switch (kind_) {
      case Kind::null: out += "null"; break;
      case Kind::boolean: out += bool_ ? "true" : "false"; break;
      case Kind::integer: out += std::to_string(int_); break;
      case Kind::number:
        // JSON has no literal for non-finite values; quote them
        if (std::isfinite(num_))
          out += format_double(num_);
        else
          append_escaped(out, num_ > 0 ? "inf" : (num_ < 0 ? "-inf" : "nan"));
        break;
      case Kind::string: append_escaped(out, str_); break;
      case Kind::array: {
        if (items_.empty()) {
          out += "[]";
          break;
        }
        out += "[\n";
        for (size_t i = 0; i < items_.size(); ++i) {
          out += pad;
          items_[i].write(out, indent, depth + 1);
          if (i + 1 < items_.size()) out += ',';
          out += '\n';
        }
        out += close_pad + "]";
        break;
      }
      case Kind::object: {
        if (members_.empty()) {
          out += "{}";
          break;
        }
        out += "{\n";
        for (size_t i = 0; i < members_.size(); ++i) {
          out += pad;
          append_escaped(out, members_[i].first);
          out += ": ";
          members_[i].second.write(out, indent, depth + 1);
          if (i + 1 < members_.size()) out += ',';
          out += '\n';
        }
        out += close_pad + "}";
        break;
      }
    }
  }

  Kind kind_ = Kind::null;
  bool bool_ = false;
  long long int_ = 0;
  double num_ = 0.0;
  std::string str_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

// One checked claim of a run: name, outcome, and the compared quantities.
struct Assertion {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::string detail;  // optional exact values or context
};

struct Report {
  std::string command;
  JsonValue config = JsonValue::object();
  JsonValue results = JsonValue::object();
  std::vector<Assertion> assertions;

  void check(std::string name, bool pass, double lhs, double rhs, double tolerance,
             std::string detail = {}) {
    assertions.push_back({std::move(name), pass, lhs, rhs, tolerance, std::move(detail)});
  }

  bool all_passed() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }

  JsonValue to_json() const {
    JsonValue root = JsonValue::object();
    root["command"] = command;
    root["config"] = config;
    root["results"] = results;
    JsonValue list = JsonValue::array();
    for (const auto& a : assertions) {
      JsonValue item = JsonValue::object();
      item["name"] = a.name;
      item["status"] = a.pass ? "pass" : "fail";
      item["lhs"] = a.lhs;
      item["rhs"] = a.rhs;
      item["tolerance"] = a.tolerance;
      if (!a.detail.empty()) item["detail"] = a.detail;
      list.push_back(std::move(item));
    }
    root["assertions"] = std::move(list);
    root["version"] = kVersion;
    return root;
  }

  std::string to_text() const {
    std::string out;
    out += "command: " + command + "\n";
    out += "version: ";
    out += kVersion;
    out += "\n";
    out += "config: " + config.dump() + "\n";
    out += "results: " + results.dump() + "\n";
    size_t passed = 0;
    for (const auto& a : assertions) {
      out += a.pass ? "[PASS] " : "[FAIL] ";
      out += a.name;
      out += "  lhs=" + format_double(a.lhs) + " rhs=" + format_double(a.rhs) +
             " tol=" + format_double(a.tolerance);
      if (!a.detail.empty()) out += "  (" + a.detail + ")";
      out += "\n";
      if (a.pass) ++passed;
    }
    out += "status: " + std::string(all_passed() ? "PASS" : "FAIL") + " (" +
           std::to_string(passed) + "/" + std::to_string(assertions.size()) + " assertions)\n";
    return out;
  }

  // CSV rendering of the assertions table (commands that stream samples build
  // their own CSV body instead).
  std::string to_csv() const {
    std::string out = "name,status,lhs,rhs,tolerance\n";
    for (const auto& a : assertions) {
      std::string name = a.name;
      for (char& ch : name)
        if (ch == ',') ch = ';';
      out += name;
      out += a.pass ? ",pass," : ",fail,";
      out += format_double(a.lhs) + "," + format_double(a.rhs) + "," +
             format_double(a.tolerance) + "\n";
    }
    return out;
  }
};

}  // namespace hankel
