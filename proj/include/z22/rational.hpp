#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace z22 {

/// Exact field element. Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Raised for malformed input: bad files, unknown generators, shape mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

/// Parses "p" or "p/q" with decimal integers p, q (q != 0).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!detail::is_decimal_integer(num))
    throw InputError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!detail::is_decimal_integer(den))
    throw InputError("malformed rational '" + std::string(text) + "'");
  Integer d = detail::parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Integer n = detail::parse_integer(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

/// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace z22
