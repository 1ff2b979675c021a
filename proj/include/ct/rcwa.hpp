#pragma once

/**
 * @file rcwa.hpp
 * @brief Residue-class-wise affine mappings of Z and the affine form of a
 *        class transposition.
 *
 * A mapping f is described by a source modulus M and one affine piece per
 * residue class r(M): n |-> (a n + b) / c with gcd(a, b, c) = 1 and c > 0,
 * where the division is exact on the whole class.  Multiplier and divisor are
 * the lcms of the a's resp. c's; f is integral iff its divisor is 1.
 *
 * For a class transposition interchanging r1(m1) <-> r2(m2) the affine form
 * has source modulus lcm(m1, m2) and pieces
 *     on sub-classes of r1(m1):  (m2, r2 m1 - r1 m2, m1)
 *     on sub-classes of r2(m2):  (m1, r1 m2 - r2 m1, m2)
 * (gcd-reduced), identity elsewhere.  A transposition is integral exactly when
 * it is horizontal; both characterizations are computed and compared here.
 */

#include <numeric>
#include <string>
#include <vector>

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"
#include "ct/permutation.hpp"

namespace ct {

struct affine_piece {
  integer a = 1;
  integer b = 0;
  integer c = 1;

  friend bool operator==(const affine_piece&, const affine_piece&) = default;
};

inline affine_piece reduced(integer a, integer b, integer c) {
  integer g = std::gcd(a, std::gcd(b < 0 ? -b : b, c));
  if (g == 0) g = 1;
  return affine_piece{a / g, b / g, c / g};
}

struct rcwa_mapping {
  integer modulus = 1;
  std::vector<affine_piece> pieces = {affine_piece{}};  // indexed by residue mod modulus

  friend bool operator==(const rcwa_mapping&, const rcwa_mapping&) = default;
};

inline integer apply(const rcwa_mapping& f, integer n) {
  const affine_piece& p = f.pieces[static_cast<std::size_t>(floor_mod(n, f.modulus))];
  integer num = p.a * n + p.b;
  if (num % p.c != 0)
    throw invalid_argument("affine piece does not map " + std::to_string(n) + " to an integer");
  return num / p.c;
}

inline integer multiplier(const rcwa_mapping& f) {
  integer m = 1;
  for (const auto& p : f.pieces) m = std::lcm(m, p.a < 0 ? -p.a : p.a);
  return m;
}

inline integer divisor(const rcwa_mapping& f) {
  integer d = 1;
  for (const auto& p : f.pieces) d = std::lcm(d, p.c);
  return d;
}

inline bool is_integral(const rcwa_mapping& f) { return divisor(f) == 1; }

// Shrinks the source modulus to the smallest divisor with a periodic piece
// table (e.g. the identity mapping written mod m collapses to modulus 1).
inline rcwa_mapping normalized(rcwa_mapping f) {
  for (integer d = 1; d < f.modulus; ++d) {
    if (f.modulus % d != 0) continue;
    bool periodic = true;
    for (integer r = 0; r < f.modulus && periodic; ++r)
      periodic = f.pieces[static_cast<std::size_t>(r)] ==
                 f.pieces[static_cast<std::size_t>(r % d)];
    if (periodic) {
      f.pieces.resize(static_cast<std::size_t>(d));
      f.modulus = d;
      return f;
    }
  }
  return f;
}

inline rcwa_mapping to_rcwa(const class_transposition& t) {
  const residue_class& u = t.cell_a;
  const residue_class& v = t.cell_b;
  integer m = std::lcm(u.modulus, v.modulus);
  rcwa_mapping f;
  f.modulus = m;
  f.pieces.assign(static_cast<std::size_t>(m), affine_piece{});
  for (integer r = 0; r < m; ++r) {
    if (contains(u, r))
      f.pieces[static_cast<std::size_t>(r)] =
          reduced(v.modulus, v.residue * u.modulus - u.residue * v.modulus, u.modulus);
    else if (contains(v, r))
      f.pieces[static_cast<std::size_t>(r)] =
          reduced(u.modulus, u.residue * v.modulus - v.residue * u.modulus, v.modulus);
  }
  return f;
}

// Integral <=> horizontal; computed via both routes, which must agree.
inline bool is_integral(const class_transposition& t) {
  bool by_kind = classify(t) == ct_kind::horizontal;
  bool by_divisor = is_integral(to_rcwa(t));
  if (by_kind != by_divisor)
    throw shape_violation("integrality routes disagree for " + to_string(t));
  return by_kind;
}

// The embedding of the symmetric group on {0, ..., m-1} into the integral
// mappings: sigma acts on each block { qm, ..., qm + m - 1 } by permuting
// residues, n |-> n - (n mod m) + sigma(n mod m).  A monomorphism; products
// map to products under the left-to-right convention.
inline rcwa_mapping embed_phi(integer m, const permutation& sigma) {
  if (m <= 0 || m > kMaxModulus) throw range_error("invalid block size " + std::to_string(m));
  if (sigma.degree() != m)
    throw degree_mismatch("permutation degree " + std::to_string(sigma.degree()) +
                          " does not match block size " + std::to_string(m));
  rcwa_mapping f;
  f.modulus = m;
  f.pieces.assign(static_cast<std::size_t>(m), affine_piece{});
  for (integer r = 0; r < m; ++r)
    f.pieces[static_cast<std::size_t>(r)] = affine_piece{1, sigma(static_cast<int>(r)) - r, 1};
  return normalized(f);
}

inline std::string to_string(const affine_piece& p) {
  std::string num;
  if (p.a == 1)
    num = "n";
  else if (p.a == -1)
    num = "-n";
  else
    num = std::to_string(p.a) + "n";
  if (p.b > 0)
    num += "+" + std::to_string(p.b);
  else if (p.b < 0)
    num += std::to_string(p.b);
  if (p.c == 1) return num;
  return "(" + num + ")/" + std::to_string(p.c);
}

}  // namespace ct
