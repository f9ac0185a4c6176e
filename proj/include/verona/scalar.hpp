#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "verona/error.hpp"

namespace verona {

/// Exact rational; GMP keeps every value reduced with a positive denominator.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "a", "-a" or "a/b" with b > 0 written in decimal.
inline Scalar parse_scalar(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false)))
    fail(ErrorKind::ParseError, "malformed rational \"" + std::string(text) + "\"");
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace verona
