#pragma once

// Brute-force reference implementations the test suites compare the library
// against.  Everything here favors obviousness over speed: window scans,
// direct orbit iteration, and full group-closure enumeration.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ct/class_transposition.hpp"
#include "ct/permutation.hpp"
#include "ct/residue_class.hpp"

namespace oracle {

// Do two residue classes share an element?  Any intersection contains a point
// within one period of both classes, so a window of +-500 covers all moduli
// up to 22 with plenty of slack.
inline bool classes_intersect_scan(const ct::residue_class& a, const ct::residue_class& b) {
  for (ct::integer x = -500; x <= 500; ++x)
    if (ct::contains(a, x) && ct::contains(b, x)) return true;
  return false;
}

// Pointwise equality of two integer maps on [-limit, limit].
inline bool maps_equal_on_window(const std::function<ct::integer(ct::integer)>& f,
                                 const std::function<ct::integer(ct::integer)>& g,
                                 ct::integer limit) {
  for (ct::integer x = -limit; x <= limit; ++x)
    if (f(x) != g(x)) return false;
  return true;
}

// Length of the orbit of x under repeated application of step, or nothing if
// the orbit does not close within cap steps.
inline std::optional<long long> orbit_length(const std::function<ct::integer(ct::integer)>& step,
                                             ct::integer x, long long cap) {
  ct::integer y = step(x);
  for (long long n = 1; n <= cap; ++n) {
    if (y == x) return n;
    y = step(y);
  }
  return std::nullopt;
}

// Image tables of every element of the group generated by gens, found by
// breadth-first closure; gives up (returns nothing) past cap elements.
inline std::optional<std::set<std::vector<int>>> closure_enumeration(
    const std::vector<ct::permutation>& gens, std::size_t cap) {
  if (gens.empty()) return std::set<std::vector<int>>{};
  int degree = gens.front().degree();
  auto images = [degree](const ct::permutation& p) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) img[static_cast<std::size_t>(x)] = p(x);
    return img;
  };
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) id[static_cast<std::size_t>(x)] = x;

  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (const ct::permutation& g : gens) {
      std::vector<int> next(static_cast<std::size_t>(degree));
      // left-to-right: apply cur first, then g
      for (int x = 0; x < degree; ++x)
        next[static_cast<std::size_t>(x)] = g(cur[static_cast<std::size_t>(x)]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

inline std::vector<int> image_table(const ct::permutation& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[static_cast<std::size_t>(x)] = p(x);
  return img;
}

// Every permutation of {0..degree-1}, in lexicographic image order.
inline std::vector<ct::permutation> all_permutations(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) img[static_cast<std::size_t>(x)] = x;
  std::vector<ct::permutation> out;
  do {
    out.push_back(ct::permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace oracle
