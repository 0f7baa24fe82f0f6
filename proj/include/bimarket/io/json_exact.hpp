// JSON reading that keeps non-integer numbers exact: floating-point literals
// are captured as their source text (a JSON string) instead of a double, so
// "0.1" in a file becomes exactly 1/10.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bimarket/errors.hpp"
#include "bimarket/rational.hpp"

namespace bimarket::io {

using nlohmann::json;

namespace detail {

class ExactNumberSax {
 public:
  explicit ExactNumberSax(json& root) : dom_(root, true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const json::string_t& raw) {
    json::string_t copy = raw;
    return dom_.string(copy);
  }
  bool string(json::string_t& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(json::string_t& k) { return dom_.key(k); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t pos, const std::string& token, const Exception& ex) {
    return dom_.parse_error(pos, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

}  // namespace detail

/// Parses JSON text; fractional literals come back as strings holding
/// their exact source spelling.
inline json parse_json_exact(std::string_view text) {
  json root;
  detail::ExactNumberSax sax(root);
  try {
    json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return root;
}

/// Accepts a JSON integer or a string holding "p", "p/q" or a decimal.
inline Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("integer literal too large");
    }
    if (j.is_number_integer()) return Rational{j.get<std::int64_t>()};
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(where + ": bad number: " + e.what());
  }
  throw SchemaError(where + ": expected a number, got " + std::string(j.type_name()));
}

/// Integers stay JSON integers; everything else is written as "p/q".
inline json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

}  // namespace bimarket::io
