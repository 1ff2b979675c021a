#pragma once

/**
 * @file class_transposition.hpp
 * @brief Class transpositions: the involutions of Z that interchange two
 *        disjoint residue classes r1(m1) <-> r2(m2) elementwise
 *        (r1 + m1 k <-> r2 + m2 k) and fix everything else.
 *
 * Canonical form: the two cells are stored sorted lexicographically by
 * (residue, modulus).  Since disjoint cells always have distinct residues,
 * this reproduces the usual convention r1 < r2.
 *
 * A transposition is `horizontal` when its cells share one modulus (it is then
 * integral, i.e. residue-class-wise affine with divisor 1) and `oblique`
 * otherwise.  A "vertical" case r1 = r2 cannot occur: gcd(m1, m2) divides 0,
 * so such cells are never disjoint.
 */

#include <string>
#include <string_view>
#include <vector>

#include "ct/errors.hpp"
#include "ct/residue_class.hpp"

namespace ct {

struct class_transposition {
  residue_class cell_a;  // (cell_a.residue, cell_a.modulus) < (cell_b.residue, cell_b.modulus)
  residue_class cell_b;

  friend bool operator==(const class_transposition&, const class_transposition&) = default;
  friend auto operator<=>(const class_transposition&, const class_transposition&) = default;
};

enum class ct_kind { horizontal, oblique };

inline std::string to_string(const class_transposition& t) {
  return to_string(t.cell_a) + "," + to_string(t.cell_b);
}

inline class_transposition make_transposition(residue_class x, residue_class y) {
  if (!classes_disjoint(x, y)) {
    integer g = std::gcd(x.modulus, y.modulus);
    throw not_disjoint("cells " + to_string(x) + " and " + to_string(y) +
                           " intersect: gcd(" + std::to_string(x.modulus) + "," +
                           std::to_string(y.modulus) + ") = " + std::to_string(g) +
                           " divides " + std::to_string(x.residue - y.residue),
                       g);
  }
  if (y < x) std::swap(x, y);
  return class_transposition{x, y};
}

inline class_transposition make_transposition(integer r1, integer m1, integer r2, integer m2) {
  return make_transposition(make_residue_class(r1, m1), make_residue_class(r2, m2));
}

inline ct_kind classify(const class_transposition& t) {
  return t.cell_a.modulus == t.cell_b.modulus ? ct_kind::horizontal : ct_kind::oblique;
}

inline bool is_horizontal(const class_transposition& t) {
  return classify(t) == ct_kind::horizontal;
}

// Shared modulus of a horizontal transposition.
inline integer modulus(const class_transposition& t) {
  if (!is_horizontal(t))
    throw not_horizontal(to_string(t) + " is oblique; its cells have distinct moduli");
  return t.cell_a.modulus;
}

inline bool in_support(const class_transposition& t, integer n) {
  return contains(t.cell_a, n) || contains(t.cell_b, n);
}

// The image of n: r1 + m1 k <-> r2 + m2 k, identity off the support.
inline integer apply(const class_transposition& t, integer n) {
  if (contains(t.cell_a, n)) return element(t.cell_b, coefficient(t.cell_a, n));
  if (contains(t.cell_b, n)) return element(t.cell_a, coefficient(t.cell_b, n));
  return n;
}

// Splits t into n transpositions acting on the n-part refinements of its
// cells: factor k interchanges (r1 + k m1)(n m1) <-> (r2 + k m2)(n m2).
// The factors have pairwise disjoint supports partitioning Supp(t), so their
// product in any order equals t.
inline std::vector<class_transposition> refine(const class_transposition& t, integer n) {
  if (n < 1) throw invalid_argument("refinement index must be >= 1, got " + std::to_string(n));
  if (t.cell_a.modulus > kMaxModulus / n || t.cell_b.modulus > kMaxModulus / n)
    throw range_error("refined modulus would exceed the supported bound");
  std::vector<class_transposition> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (integer k = 0; k < n; ++k) {
    parts.push_back(make_transposition(
        residue_class{t.cell_a.residue + k * t.cell_a.modulus, n * t.cell_a.modulus},
        residue_class{t.cell_b.residue + k * t.cell_b.modulus, n * t.cell_b.modulus}));
  }
  return parts;
}

// Parses "r1(m1),r2(m2)", e.g. "0(2),1(2)"; whitespace-insensitive; the result
// is canonicalized, so "1(2),0(4)" yields cells 0(4),1(2).
inline class_transposition parse_transposition(std::string_view text) {
  detail::scanner sc{text};
  residue_class x = detail::scan_residue_class(sc);
  sc.expect(',');
  residue_class y = detail::scan_residue_class(sc);
  if (!sc.at_end())
    throw parse_error("trailing input after transposition in \"" + std::string(text) + "\"");
  return make_transposition(x, y);
}

inline bool supports_disjoint(const class_transposition& s, const class_transposition& t) {
  return classes_disjoint(s.cell_a, t.cell_a) && classes_disjoint(s.cell_a, t.cell_b) &&
         classes_disjoint(s.cell_b, t.cell_a) && classes_disjoint(s.cell_b, t.cell_b);
}

}  // namespace ct
