#pragma once

/**
 * @file permutation.hpp
 * @brief Finite permutations of {0, ..., n-1}, cycle structure, exact orders.
 *
 * Composition convention (used consistently across the library): products read
 * LEFT TO RIGHT, i.e. (p * q)(x) = q(p(x)) -- apply p first, then q.  This is
 * the convention under which the reduction of a horizontal product to a finite
 * symmetric group reproduces the expected cycle structures, e.g.
 * (0,1)(2,3)(4,5) * (0,1)(3,4) = (2,4,5,3).
 *
 * Orders are computed as exact big integers (lcm of cycle lengths), so
 * factorially large group orders downstream never overflow.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"

namespace ct {

using bigint = boost::multiprecision::cpp_int;

inline bigint factorial(integer n) {
  bigint f = 1;
  for (integer i = 2; i <= n; ++i) f *= static_cast<long long>(i);
  return f;
}

class permutation {
 public:
  permutation() = default;

  // Identity on {0, ..., degree-1}.
  explicit permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
    if (degree < 0) throw invalid_argument("permutation degree must be >= 0");
    for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = i;
  }

  static permutation from_images(std::vector<int> images) {
    permutation p;
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
      if (x < 0 || static_cast<std::size_t>(x) >= images.size())
        throw invalid_argument("image " + std::to_string(x) + " out of range for degree " +
                               std::to_string(images.size()));
      if (seen[static_cast<std::size_t>(x)])
        throw invalid_argument("duplicate image " + std::to_string(x) + "; not a bijection");
      seen[static_cast<std::size_t>(x)] = 1;
    }
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  permutation inverse() const {
    permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[static_cast<std::size_t>((*this)(i))] = i;
    return r;
  }

  // Pre-image swap: q = this, then transpose images of x and y in place.
  void swap_points(int x, int y) {
    std::swap(img_[static_cast<std::size_t>(x)], img_[static_cast<std::size_t>(y)]);
  }

  friend bool operator==(const permutation&, const permutation&) = default;

  // Left-to-right product: (p * q)(x) = q(p(x)).
  friend permutation operator*(const permutation& p, const permutation& q) {
    if (p.degree() != q.degree())
      throw degree_mismatch("cannot compose permutations of degrees " +
                            std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
    permutation r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img_[static_cast<std::size_t>(i)] = q(p(i));
    return r;
  }

 private:
  std::vector<int> img_;
};

struct cycle_structure {
  int degree = 0;
  // Nontrivial cycles, each rotated so its minimal element comes first, listed
  // in increasing order of that minimal element.
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed;  // ascending

  friend bool operator==(const cycle_structure&, const cycle_structure&) = default;
};

inline cycle_structure cycle_decomposition(const permutation& p) {
  cycle_structure cs;
  cs.degree = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
      x = p(x);
    } while (x != start);
    if (cyc.size() == 1)
      cs.fixed.push_back(cyc.front());
    else
      cs.cycles.push_back(std::move(cyc));
  }
  return cs;
}

inline bigint structure_order(const cycle_structure& cs) {
  bigint o = 1;
  for (const auto& cyc : cs.cycles) o = boost::multiprecision::lcm(o, bigint(cyc.size()));
  return o;
}

inline bigint perm_order(const permutation& p) { return structure_order(cycle_decomposition(p)); }

// Renders the periodic family of cycles the structure induces on Z when its
// degree-N pattern is repeated with period N: each point c becomes the class
// c + N s.  Example: degree 6, cycles {(2,4,5,3)}, fixed {0,1} renders as
// "(6s)(1+6s)(2+6s,4+6s,5+6s,3+6s)".  Units appear by minimal element.
inline std::string lift_cycles(const cycle_structure& cs) {
  const std::string period = std::to_string(cs.degree) + "s";
  auto term = [&](int c) { return c == 0 ? period : std::to_string(c) + "+" + period; };

  std::vector<std::vector<int>> units;
  units.reserve(cs.cycles.size() + cs.fixed.size());
  for (const auto& cyc : cs.cycles) units.push_back(cyc);
  for (int f : cs.fixed) units.push_back({f});
  std::sort(units.begin(), units.end(),
            [](const auto& u, const auto& v) { return u.front() < v.front(); });

  std::string out;
  for (const auto& u : units) {
    out += "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i) out += ",";
      out += term(u[i]);
    }
    out += ")";
  }
  return out;
}

// The restriction of a horizontal transposition to {0, ..., N-1}, N a multiple
// of its modulus: the product of the N/m disjoint transpositions
// (r1 + m k, r2 + m k), k = 0 .. N/m - 1.
inline permutation reduce_mod(const class_transposition& t, integer n) {
  integer m = modulus(t);  // throws not_horizontal for oblique input
  if (n <= 0 || n % m != 0)
    throw invalid_argument("degree " + std::to_string(n) + " is not a positive multiple of " +
                           std::to_string(m));
  if (n > 10'000'000) throw resource_limit("degree " + std::to_string(n) + " too large");
  permutation p(static_cast<int>(n));
  for (integer k = 0; k < n / m; ++k)
    p.swap_points(static_cast<int>(element(t.cell_a, k)), static_cast<int>(element(t.cell_b, k)));
  return p;
}

// Left-to-right product of horizontal transpositions, reduced to the symmetric
// group on lcm of their moduli.  Applying the result to x in [0, N) agrees
// with applying the transpositions to x in sequence.
inline permutation horizontal_product_perm(const std::vector<class_transposition>& ts) {
  if (ts.empty()) throw invalid_argument("empty transposition list");
  integer n = 1;
  for (const auto& t : ts) {
    n = std::lcm(n, modulus(t));
    if (n > 10'000'000) throw resource_limit("lcm of moduli exceeds the supported degree");
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (integer x = 0; x < n; ++x) {
    integer y = x;
    for (const auto& t : ts) y = apply(t, y);
    img[static_cast<std::size_t>(x)] = static_cast<int>(y);
  }
  return permutation::from_images(std::move(img));
}

// Parses disjoint cycle notation, e.g. "(0,1)(2,3,4)"; "()" or "" is the
// identity.  Every point must lie in [0, degree) and appear at most once.
inline permutation parse_cycles(std::string_view text, int degree) {
  permutation p(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  detail::scanner sc{text};
  while (!sc.at_end()) {
    sc.expect('(');
    if (sc.eat(')')) continue;  // "()": explicit identity cycle
    std::vector<int> cyc;
    for (;;) {
      integer v = sc.expect_int();
      if (v < 0 || v >= degree)
        throw parse_error("point " + std::to_string(v) + " out of range for degree " +
                          std::to_string(degree));
      if (used[static_cast<std::size_t>(v)])
        throw parse_error("point " + std::to_string(v) + " appears twice");
      used[static_cast<std::size_t>(v)] = 1;
      cyc.push_back(static_cast<int>(v));
      if (sc.eat(')')) break;
      sc.expect(',');
    }
    if (cyc.size() >= 2) {
      std::vector<int> img(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = p(i);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        img[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
      p = permutation::from_images(std::move(img));
    }
  }
  return p;
}

inline std::string to_cycle_string(const permutation& p) {
  cycle_structure cs = cycle_decomposition(p);
  if (cs.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs.cycles) {
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cyc[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace ct
