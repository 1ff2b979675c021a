#pragma once

#include <stdexcept>
#include <string>

namespace ct {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (class / transposition / permutation grammar).
class parse_error : public error {
 public:
  using error::error;
};

// Structurally out-of-range numeric input (residue >= modulus, modulus <= 0, ...).
class range_error : public error {
 public:
  using error::error;
};

// The two residue classes of a would-be transposition intersect.
class not_disjoint : public error {
 public:
  not_disjoint(const std::string& what, long long gcd) : error(what), gcd_(gcd) {}
  // gcd(m1, m2), which divides r1 - r2 and witnesses a common element.
  long long gcd_witness() const { return gcd_; }

 private:
  long long gcd_;
};

class invalid_argument : public error {
 public:
  using error::error;
};

// An operation that requires equal cell moduli was given an oblique transposition.
class not_horizontal : public error {
 public:
  using error::error;
};

class not_classified : public error {
 public:
  using error::error;
};

// A structural guarantee the library relies on failed to hold.  Seeing this
// exception means a bug, never bad user input.
class shape_violation : public error {
 public:
  using error::error;
};

class degree_mismatch : public error {
 public:
  using error::error;
};

// The request exceeds a configured budget (degree cap, walk budget, ...).
class resource_limit : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace ct
