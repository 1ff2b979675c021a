#pragma once

/**
 * @file residue_class.hpp
 * @brief Residue classes r(m) = { r + m k : k in Z } with exact 64-bit arithmetic.
 *
 * Conventions used throughout the library:
 *   - a residue class is always stored normalized: 0 <= residue < modulus;
 *   - division semantics for negative integers are floored, so membership and
 *     the coefficient k of an element are well defined on all of Z;
 *   - two classes r1(m1), r2(m2) are disjoint iff gcd(m1, m2) does not divide
 *     r1 - r2 (CRT); the gcd is reported as the witness when they intersect.
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "ct/errors.hpp"

namespace ct {

using integer = std::int64_t;

// Upper bound on moduli accepted from user input.  Keeps every value that the
// graph walks and orbit traces can produce comfortably inside 64 bits.
inline constexpr integer kMaxModulus = 1'000'000'000;

// x mod m with a result in [0, m); m > 0.
constexpr integer floor_mod(integer x, integer m) {
  integer r = x % m;
  return r < 0 ? r + m : r;
}

// Largest q with q * m <= x; exact for every sign combination with m > 0.
constexpr integer floor_div(integer x, integer m) {
  integer q = x / m;
  return (x % m != 0 && x < 0) ? q - 1 : q;
}

struct residue_class {
  integer residue = 0;  // 0 <= residue < modulus
  integer modulus = 1;

  friend bool operator==(const residue_class&, const residue_class&) = default;
  // Lexicographic by (residue, modulus); the canonical cell order.
  friend auto operator<=>(const residue_class&, const residue_class&) = default;
};

inline residue_class make_residue_class(integer r, integer m) {
  if (m <= 0) throw range_error("modulus must be positive, got " + std::to_string(m));
  if (m > kMaxModulus)
    throw range_error("modulus " + std::to_string(m) + " exceeds the supported bound " +
                      std::to_string(kMaxModulus));
  if (r < 0 || r >= m)
    throw range_error("residue " + std::to_string(r) + " out of range for modulus " +
                      std::to_string(m));
  return residue_class{r, m};
}

inline bool contains(const residue_class& c, integer n) {
  return floor_mod(n - c.residue, c.modulus) == 0;
}

// Coefficient k with n = residue + modulus * k; requires contains(c, n).
inline integer coefficient(const residue_class& c, integer n) {
  return floor_div(n - c.residue, c.modulus);
}

// n-th element of the class, n may be negative.
inline integer element(const residue_class& c, integer k) {
  return c.residue + c.modulus * k;
}

inline bool classes_disjoint(const residue_class& x, const residue_class& y) {
  integer g = std::gcd(x.modulus, y.modulus);
  return (x.residue - y.residue) % g != 0;
}

inline std::string to_string(const residue_class& c) {
  return std::to_string(c.residue) + "(" + std::to_string(c.modulus) + ")";
}

namespace detail {

// Minimal scanner for the "INT ( INT )" grammar; whitespace-insensitive.
struct scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  integer expect_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw parse_error("expected an integer at offset " + std::to_string(start) + " in \"" +
                        std::string(s) + "\"");
    if (digits > 18) throw parse_error("integer literal too long in \"" + std::string(s) + "\"");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }

  void expect(char c) {
    if (!eat(c))
      throw parse_error(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                        " in \"" + std::string(s) + "\"");
  }

  bool at_end() {
    skip_ws();
    return pos == s.size();
  }
};

inline residue_class scan_residue_class(scanner& sc) {
  integer r = sc.expect_int();
  sc.expect('(');
  integer m = sc.expect_int();
  sc.expect(')');
  return make_residue_class(r, m);
}

}  // namespace detail

// Parses "r(m)", e.g. "0(2)"; whitespace between tokens is ignored.
inline residue_class parse_residue_class(std::string_view text) {
  detail::scanner sc{text};
  residue_class c = detail::scan_residue_class(sc);
  if (!sc.at_end()) throw parse_error("trailing input after residue class in \"" + std::string(text) + "\"");
  return c;
}

}  // namespace ct
