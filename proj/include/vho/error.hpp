#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vho {

enum class Errc {
  empty_input,
  dimension_mismatch,
  non_finite,
  negative_value,
  zero_column,
  invalid_weights,
  not_reciprocal,
  out_of_range,
  label_mismatch,
  parse,
  schema,
  io,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::empty_input: return "empty input";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::non_finite: return "non-finite value";
    case Errc::negative_value: return "negative value";
    case Errc::zero_column: return "zero column";
    case Errc::invalid_weights: return "invalid weights";
    case Errc::not_reciprocal: return "not reciprocal";
    case Errc::out_of_range: return "out of range";
    case Errc::label_mismatch: return "label mismatch";
    case Errc::parse: return "parse error";
    case Errc::schema: return "schema violation";
    case Errc::io: return "i/o error";
  }
  return "unknown";
}

// Every failure in the library surfaces as vho::Error; code() lets callers
// branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vho
