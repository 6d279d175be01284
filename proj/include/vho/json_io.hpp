#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vho/ahp.hpp"
#include "vho/error.hpp"

namespace vho {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports "line L, column C" inside what().
    throw Error(Errc::parse, origin + ": " + e.what());
  }
}

// Cursor into a JSON document that remembers its path for error messages.
class JsonNode {
 public:
  JsonNode(const Json& j, std::string path, std::string origin)
      : j_(&j), path_(std::move(path)), origin_(std::move(origin)) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::schema, origin_ + ": " + (path_.empty() ? "/" : path_) + ": " + msg);
  }

  void expect_object(std::initializer_list<const char*> allowed) const {
    if (!j_->is_object()) fail("expected an object");
    for (const auto& item : j_->items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || item.key() == a;
      if (!ok) fail("unknown key '" + item.key() + "'");
    }
  }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  JsonNode operator[](const std::string& key) const {
    if (!has(key)) fail("missing required key '" + key + "'");
    return JsonNode(j_->at(key), path_ + "/" + key, origin_);
  }

  JsonNode operator[](std::size_t i) const {
    return JsonNode(j_->at(i), path_ + "/" + std::to_string(i), origin_);
  }

  std::size_t array_size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  // Accepts plain numbers and fraction strings such as "1/7".
  double number() const {
    if (j_->is_number()) return j_->get<double>();
    if (j_->is_string()) {
      const std::string s = j_->get<std::string>();
      const auto slash = s.find('/');
      try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
          const double v = std::stod(s, &used);
          if (used == s.size()) return v;
        } else {
          const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
          std::size_t un = 0, ud = 0;
          const double a = std::stod(num, &un), b = std::stod(den, &ud);
          if (un == num.size() && ud == den.size() && b != 0.0) return a / b;
        }
      } catch (const std::exception&) {
      }
      fail("cannot read '" + s + "' as a number");
    }
    fail("expected a number");
  }

  std::uint64_t u64() const {
    if (j_->is_number_unsigned()) return j_->get<std::uint64_t>();
    if (j_->is_number_integer() && j_->get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j_->get<std::int64_t>());
    fail("expected a nonnegative integer");
  }

 private:
  const Json* j_;
  std::string path_;
  std::string origin_;
};

// Integers and unit fractions ("1/7") print as written by hand; anything
// else keeps full double precision.
inline Json judgment_to_json(double v) {
  if (v >= 1.0 && v == std::floor(v)) return static_cast<std::int64_t>(v);
  if (v < 1.0) {
    const double k = std::round(1.0 / v);
    if (k >= 2.0 && 1.0 / k == v) return "1/" + std::to_string(static_cast<std::int64_t>(k));
  }
  return v;
}

inline Json to_json(const PairwiseComparisonMatrix& p) {
  Json matrix = Json::array();
  for (std::size_t i = 0; i < p.judgments.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < p.judgments.cols(); ++j) row.push_back(judgment_to_json(p.judgments(i, j)));
    matrix.push_back(std::move(row));
  }
  return Json{{"labels", p.labels}, {"matrix", std::move(matrix)}};
}

inline PairwiseComparisonMatrix comparison_from_json(const JsonNode& node) {
  node.expect_object({"labels", "matrix"});
  PairwiseComparisonMatrix p;
  const JsonNode labels = node["labels"];
  for (std::size_t i = 0; i < labels.array_size(); ++i) p.labels.push_back(labels[i].string());
  const JsonNode matrix = node["matrix"];
  const std::size_t k = p.labels.size();
  if (matrix.array_size() != k) matrix.fail("expected " + std::to_string(k) + " rows");
  p.judgments = Grid(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const JsonNode row = matrix[i];
    if (row.array_size() != k) row.fail("expected " + std::to_string(k) + " entries");
    for (std::size_t j = 0; j < k; ++j) p.judgments(i, j) = row[j].number();
  }
  try {
    p.validate();
  } catch (const Error& e) {
    node.fail(e.what());
  }
  return p;
}

// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vho
