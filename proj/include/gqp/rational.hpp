#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "gqp/errors.hpp"

namespace gqp {

// Exact arbitrary-precision rational. Expression templates are switched off so
// `auto` and aggregate members behave like plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using Integer =
    boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

inline int sign(const Rational& q) { return q.sign(); }

// Canonical form: lowest terms, sign on the numerator, "a" or "a/b".
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "a" or "a/b" with an optional leading '-' on the numerator.
// boost's own string constructor is more permissive than we want in parsers,
// so validate the shape here and reject zero denominators with a clear message.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&](const char* why) {
    throw input_error("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) bad("empty");
  std::size_t pos = 0;
  if (text[pos] == '-') ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits_start) bad("expected digits");
  if (pos < text.size()) {
    if (text[pos] != '/') bad("expected '/' or end");
    std::size_t den_start = ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_start || pos != text.size()) bad("expected digits after '/'");
    Integer den(std::string(text.substr(den_start)));
    if (den == 0) bad("zero denominator");
    Integer num(std::string(text.substr(0, den_start - 1)));
    return Rational(num, den);
  }
  return Rational(Integer(std::string(text)));
}

}  // namespace gqp
