#pragma once

/**
 * @file product_graph.hpp
 * @brief The pairing graph of two class transpositions and the cycle
 *        structure of their product read off from its connected components.
 *
 * For transpositions s (cells r1(m1), r2(m2)) and t (cells r3(m3), r4(m4))
 * the graph has one vertex pair (a_k, b_k) per k on the side of s and one
 * pair (c_l, d_l) per l on the side of t, where mu(a_k) = r1 + m1 k and so
 * on.  Edges:
 *   - type 2 joins each pair of a side: a_k -- b_k, c_l -- d_l;
 *   - type 1 joins vertices of opposite sides with equal mu-value.
 * Every vertex has exactly one type-2 edge and at most one type-1 edge, so
 * each component is a path, a cycle, or an infinite ray/line.  Walking a
 * component is budgeted; exhausting the budget yields a truncated component
 * (infinitude is never certified).
 *
 * A finite component with n vertices and t type-1 edges contributes cycles of
 * the product s * t (left factor applied first) as follows:
 *   - path:  one cycle of length n - t (its distinct mu-values);
 *   - cycle: n = 4l, two cycles of length l each.
 * These derived lengths are cross-verified elsewhere by direct orbit tracing.
 *
 * When both transpositions are horizontal, every component is finite with at
 * most 10 vertices and matches one of seven catalogued shapes (up to
 * reflection); the component set is periodic with period N = lcm(m1, m3), and
 * enumerating one representative per translation class yields the exact order
 * of the product.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"
#include "ct/permutation.hpp"

namespace ct {

struct vertex {
  char letter = 'a';  // 'a' | 'b' on the left side, 'c' | 'd' on the right
  integer index = 0;

  friend bool operator==(const vertex&, const vertex&) = default;
  friend auto operator<=>(const vertex&, const vertex&) = default;
};

inline int vertex_side(const vertex& v) { return (v.letter == 'a' || v.letter == 'b') ? 0 : 1; }

inline std::string to_string(const vertex& v) {
  return std::string(1, v.letter) + std::to_string(v.index);
}

inline integer mu(const class_transposition& t1, const class_transposition& t2, const vertex& v) {
  switch (v.letter) {
    case 'a': return element(t1.cell_a, v.index);
    case 'b': return element(t1.cell_b, v.index);
    case 'c': return element(t2.cell_a, v.index);
    case 'd': return element(t2.cell_b, v.index);
    default: throw invalid_argument("bad vertex letter");
  }
}

inline vertex type2_partner(const vertex& v) {
  switch (v.letter) {
    case 'a': return {'b', v.index};
    case 'b': return {'a', v.index};
    case 'c': return {'d', v.index};
    default: return {'c', v.index};
  }
}

inline std::optional<vertex> type1_partner(const class_transposition& t1,
                                           const class_transposition& t2, const vertex& v) {
  integer x = mu(t1, t2, v);
  const class_transposition& other = vertex_side(v) == 0 ? t2 : t1;
  char first = vertex_side(v) == 0 ? 'c' : 'a';
  if (contains(other.cell_a, x)) return vertex{first, coefficient(other.cell_a, x)};
  if (contains(other.cell_b, x))
    return vertex{static_cast<char>(first + 1), coefficient(other.cell_b, x)};
  return std::nullopt;
}

// Type-2 partner first, then the type-1 partner if the vertex has one.
inline std::vector<vertex> neighbors(const class_transposition& t1,
                                     const class_transposition& t2, const vertex& v) {
  std::vector<vertex> out{type2_partner(v)};
  if (auto p = type1_partner(t1, t2, v)) out.push_back(*p);
  return out;
}

enum class component_kind { cycle, path, bi_infinite, one_sided_infinite, truncated };

inline std::string to_string(component_kind k) {
  switch (k) {
    case component_kind::cycle: return "cycle";
    case component_kind::path: return "path";
    case component_kind::bi_infinite: return "bi-infinite";
    case component_kind::one_sided_infinite: return "one-sided-infinite";
    default: return "truncated";
  }
}

struct graph_component {
  component_kind kind = component_kind::path;
  std::vector<vertex> vertices;  // path: endpoint to endpoint; cycle: rotation
  int type1_edges = 0;
};

// Safety bound on |mu| during walks; beyond it a direction counts as exhausted
// so divergent oblique components cannot overflow 64-bit arithmetic.
inline constexpr integer kMuWalkLimit = 1'000'000'000'000'000;

namespace detail {

inline std::string dump(const class_transposition& t1, const class_transposition& t2,
                        const graph_component& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) s += " ";
    s += to_string(c.vertices[i]) + "(mu=" + std::to_string(mu(t1, t2, c.vertices[i])) + ")";
  }
  return s + "]";
}

}  // namespace detail

// Walks the whole component containing `start`, at most `budget` steps per
// direction.  Finite components come back canonically ordered: paths from the
// endpoint of smaller mu-value, cycles rotated to their minimal (mu, side)
// vertex and oriented along its type-2 edge.
inline graph_component explore_component(const class_transposition& t1,
                                         const class_transposition& t2, vertex start,
                                         integer budget = 10'000) {
  if (budget < 1) throw invalid_argument("budget must be positive");
  auto mu_of = [&](const vertex& v) { return mu(t1, t2, v); };

  struct walk_result {
    std::vector<vertex> seq;  // vertices after `start`, in walking order
    bool closed = false;      // walked all the way back to `start`
    bool exhausted = false;   // ran out of budget or left the safe mu range
  };
  auto walk = [&](vertex first) {
    walk_result w;
    vertex prev = start;
    vertex cur = first;
    for (integer steps = 0;; ++steps) {
      if (cur == start) {
        w.closed = true;
        return w;
      }
      if (steps >= budget || std::abs(mu_of(cur)) > kMuWalkLimit) {
        w.exhausted = true;
        return w;
      }
      w.seq.push_back(cur);
      vertex p2 = type2_partner(cur);
      std::optional<vertex> p1 = type1_partner(t1, t2, cur);
      vertex next;
      if (p2 != prev)
        next = p2;
      else if (p1 && *p1 != prev)
        next = *p1;
      else
        return w;  // valence-1 vertex: end of the path
      prev = cur;
      cur = next;
    }
  };

  graph_component c;
  std::vector<vertex> nb = neighbors(t1, t2, start);
  walk_result forward = walk(nb[0]);
  if (forward.closed) {
    c.kind = component_kind::cycle;
    c.vertices.push_back(start);
    c.vertices.insert(c.vertices.end(), forward.seq.begin(), forward.seq.end());
  } else {
    walk_result backward;
    if (nb.size() > 1) backward = walk(nb[1]);
    c.vertices.assign(backward.seq.rbegin(), backward.seq.rend());
    c.vertices.push_back(start);
    c.vertices.insert(c.vertices.end(), forward.seq.begin(), forward.seq.end());
    c.kind = (forward.exhausted || backward.exhausted) ? component_kind::truncated
                                                       : component_kind::path;
  }

  if (c.kind == component_kind::path && mu_of(c.vertices.front()) > mu_of(c.vertices.back()))
    std::reverse(c.vertices.begin(), c.vertices.end());
  if (c.kind == component_kind::cycle) {
    auto less = [&](const vertex& u, const vertex& v) {
      return std::pair(mu_of(u), vertex_side(u)) < std::pair(mu_of(v), vertex_side(v));
    };
    auto min_it = std::min_element(c.vertices.begin(), c.vertices.end(), less);
    std::rotate(c.vertices.begin(), min_it, c.vertices.end());
    if (c.vertices.size() > 1 && c.vertices[1] != type2_partner(c.vertices[0]))
      std::reverse(c.vertices.begin() + 1, c.vertices.end());
  }

  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i + 1 < c.vertices.size() && c.vertices[i + 1] != type2_partner(c.vertices[i]))
      ++c.type1_edges;
  }
  if (c.kind == component_kind::cycle &&
      c.vertices.front() != type2_partner(c.vertices.back()))
    ++c.type1_edges;
  return c;
}

enum class length_certainty { exact, infinite, unknown };

struct derived_cycles {
  std::vector<integer> lengths;
  length_certainty certainty = length_certainty::exact;
  int infinite_cycles = 0;  // set for the two infinite component kinds
};

// Cycle lengths the component contributes to the product's decomposition.
// Truncated components carry no classification, so asking is an error.
inline derived_cycles component_cycle_lengths(const graph_component& c) {
  switch (c.kind) {
    case component_kind::cycle: {
      integer n = static_cast<integer>(c.vertices.size());
      if (n % 4 != 0)
        throw shape_violation("cycle component with " + std::to_string(n) +
                              " vertices; expected a multiple of 4");
      return {{n / 4, n / 4}, length_certainty::exact, 0};
    }
    case component_kind::path: {
      integer n = static_cast<integer>(c.vertices.size());
      return {{n - c.type1_edges}, length_certainty::exact, 0};
    }
    case component_kind::bi_infinite:
      return {{}, length_certainty::infinite, 2};
    case component_kind::one_sided_infinite:
      return {{}, length_certainty::infinite, 1};
    default:
      throw not_classified("truncated component has no certified cycle lengths");
  }
}

struct shape_match {
  int shape = 0;        // 1..7
  bool mirrored = false;  // matched through a reflection of the catalogued drawing
};

// Classifies a finite component of a horizontal pair against the seven
// catalogued shapes: 1 = lone edge, 2/3 = 4-paths (type-1 edge on {a,c}/{b,d}
// resp. {a,d}/{b,c}), 4 = square, 5/6 = 6-paths (outer attachments on equal
// resp. different letters), 7 = 10-path.  Anything else throws: such a
// component would contradict the structural guarantees for horizontal pairs.
inline shape_match match_shape(const class_transposition& t1, const class_transposition& t2,
                               const graph_component& c) {
  if (!is_horizontal(t1) || !is_horizontal(t2))
    throw not_horizontal("shape matching applies to horizontal pairs only");
  auto bad = [&](const std::string& why) {
    return shape_violation("component " + detail::dump(t1, t2, c) + ": " + why);
  };
  const std::size_t n = c.vertices.size();
  if (c.kind != component_kind::cycle && c.kind != component_kind::path)
    throw bad("not a finite component");

  // Edges must alternate type 2, type 1, type 2, ...; paths start and end on
  // type-2 edges, cycles close with a type-1 edge.
  std::size_t edge_count = c.kind == component_kind::cycle ? n : n - 1;
  for (std::size_t i = 0; i < edge_count; ++i) {
    const vertex& u = c.vertices[i];
    const vertex& v = c.vertices[(i + 1) % n];
    bool is_type2 = v == type2_partner(u);
    if (is_type2 != (i % 2 == 0)) throw bad("edge types do not alternate");
    if (!is_type2 && mu(t1, t2, u) != mu(t1, t2, v)) throw bad("type-1 edge with unequal values");
  }

  int shape = 0;
  if (c.kind == component_kind::cycle) {
    if (n != 4) throw bad("cycle component is not a square");
    shape = 4;
  } else {
    switch (n) {
      case 2:
        shape = 1;
        break;
      case 4: {
        char x = c.vertices[1].letter, y = c.vertices[2].letter;
        bool ac = (x == 'a' && y == 'c') || (x == 'c' && y == 'a') ||
                  (x == 'b' && y == 'd') || (x == 'd' && y == 'b');
        shape = ac ? 2 : 3;
        break;
      }
      case 6:
        shape = c.vertices[1].letter == c.vertices[4].letter ? 5 : 6;
        break;
      case 10:
        shape = 7;
        break;
      default:
        throw bad("finite component with unsupported vertex count " + std::to_string(n));
    }
  }

  static const std::map<int, std::string> canon = {
      {1, "ab"},   {2, "bacd"},   {3, "badc"},     {4, "abdc"},
      {5, "bacdab"}, {6, "bacdba"}, {7, "bacdabcdba"}};
  std::string seq;
  for (const vertex& v : c.vertices) seq += v.letter;
  std::string rev(seq.rbegin(), seq.rend());
  const std::string& base = canon.at(shape);
  return {shape, seq != base && rev != base};
}

// One representative component per translation class for a horizontal pair:
// the component set is invariant under mu |-> mu + N, N = lcm of the moduli,
// so seeding one period of each side and normalizing the translate covers
// everything exactly once.  Components are complete, never truncated.
inline std::vector<graph_component> enumerate_components_horizontal(
    const class_transposition& t1, const class_transposition& t2) {
  integer n = modulus(t1);
  integer m = modulus(t2);
  integer big_n = std::lcm(n, m);
  integer pn = big_n / n;
  integer pm = big_n / m;

  std::set<vertex> visited;
  std::set<std::vector<vertex>> seen;
  std::vector<graph_component> out;

  auto handle_seed = [&](vertex s) {
    if (visited.count(s)) return;
    graph_component c = explore_component(t1, t2, s, 64);
    if (c.kind != component_kind::cycle && c.kind != component_kind::path)
      throw shape_violation("horizontal component exceeded the size bound: " +
                            detail::dump(t1, t2, c));
    for (const vertex& v : c.vertices) visited.insert(v);
    // Normalize the translate: shift by whole periods so the minimal vertex's
    // index lands in [0, period of its side).
    auto less = [&](const vertex& u, const vertex& v) {
      return std::pair(mu(t1, t2, u), vertex_side(u)) < std::pair(mu(t1, t2, v), vertex_side(v));
    };
    const vertex& vm = *std::min_element(c.vertices.begin(), c.vertices.end(), less);
    integer shift = floor_div(vm.index, vertex_side(vm) == 0 ? pn : pm);
    if (shift != 0) {
      for (vertex& v : c.vertices) v.index -= shift * (vertex_side(v) == 0 ? pn : pm);
    }
    if (seen.insert(c.vertices).second) out.push_back(std::move(c));
  };

  for (integer k = 0; k < pn; ++k) {
    handle_seed({'a', k});
    handle_seed({'b', k});
  }
  for (integer l = 0; l < pm; ++l) {
    handle_seed({'c', l});
    handle_seed({'d', l});
  }

  auto key = [&](const graph_component& c) {
    const vertex& f = c.vertices.front();
    return std::tuple(mu(t1, t2, f), vertex_side(f), f.letter, f.index);
  };
  std::sort(out.begin(), out.end(),
            [&](const graph_component& x, const graph_component& y) { return key(x) < key(y); });
  return out;
}

// Budgeted component survey for a pair that need not be horizontal: seeds
// every vertex with |index| <= window on both sides, walks each unvisited
// seed's component, and returns them ordered by minimal mu-value.  Components
// may come back truncated; nothing is deduplicated across translates (oblique
// pairs are not translation-periodic).
inline std::vector<graph_component> enumerate_components_window(const class_transposition& t1,
                                                                const class_transposition& t2,
                                                                integer window,
                                                                integer budget) {
  if (window < 0) throw invalid_argument("window must be nonnegative");
  std::set<vertex> visited;
  std::vector<graph_component> comps;
  auto handle_seed = [&](vertex s) {
    if (visited.count(s)) return;
    graph_component c = explore_component(t1, t2, s, budget);
    for (const vertex& v : c.vertices) visited.insert(v);
    comps.push_back(std::move(c));
  };
  for (integer k = -window; k <= window; ++k) {
    handle_seed({'a', k});
    handle_seed({'b', k});
    handle_seed({'c', k});
    handle_seed({'d', k});
  }
  auto key = [&](const graph_component& c) {
    integer lo = mu(t1, t2, c.vertices.front());
    for (const vertex& v : c.vertices) lo = std::min(lo, mu(t1, t2, v));
    const vertex& f = c.vertices.front();
    return std::tuple(lo, vertex_side(f), f.letter, f.index);
  };
  std::sort(comps.begin(), comps.end(),
            [&](const graph_component& x, const graph_component& y) { return key(x) < key(y); });
  return comps;
}

struct component_summary {
  component_kind kind = component_kind::path;
  std::optional<int> shape;  // horizontal pairs only
  bool mirrored = false;
  int vertices = 0;
  int type1_edges = 0;
  integer mu_min = 0;
  std::vector<integer> lengths;
  length_certainty certainty = length_certainty::exact;
};

struct order_report {
  std::string t1_text;
  std::string t2_text;
  std::string status;  // "exact" | "window-exact" | "unknown"
  std::optional<bigint> order;
  std::vector<integer> cycle_lengths;  // finite lengths, ascending
  std::vector<component_summary> components;
  integer budget = 0;
  std::optional<integer> window;  // seeding half-width; oblique pairs only
};

// Order of the product s * t via graph components.  Horizontal pairs get the
// exact answer from one period.  Otherwise vertices with |index| <= budget/10
// seed budgeted walks: if every seeded component closes, the lcm of their
// lengths is reported as the order of the restriction ("window-exact"); a
// truncated component downgrades the status to "unknown" with the finite
// lengths found so far.  Equal pairs square to the identity: exact order 1.
inline order_report product_order_graph(const class_transposition& t1,
                                        const class_transposition& t2,
                                        integer budget = 10'000) {
  if (budget < 10) throw invalid_argument("budget must be at least 10");
  order_report rep;
  rep.t1_text = to_string(t1);
  rep.t2_text = to_string(t2);
  rep.budget = budget;

  auto summarize = [&](const graph_component& c, std::optional<shape_match> sm) {
    derived_cycles dc;
    if (c.kind == component_kind::truncated)
      dc = {{}, length_certainty::unknown, 0};
    else
      dc = component_cycle_lengths(c);
    integer lo = mu(t1, t2, c.vertices.front());
    for (const vertex& v : c.vertices) lo = std::min(lo, mu(t1, t2, v));
    rep.components.push_back({c.kind, sm ? std::optional<int>(sm->shape) : std::nullopt,
                              sm ? sm->mirrored : false, static_cast<int>(c.vertices.size()),
                              c.type1_edges, lo, dc.lengths, dc.certainty});
    return dc;
  };
  auto finish_lengths = [&](bool all_finite) {
    std::sort(rep.cycle_lengths.begin(), rep.cycle_lengths.end());
    if (all_finite) {
      bigint o = 1;
      for (integer l : rep.cycle_lengths) o = boost::multiprecision::lcm(o, bigint(l));
      rep.order = o;
    }
  };

  if (is_horizontal(t1) && is_horizontal(t2)) {
    for (const graph_component& c : enumerate_components_horizontal(t1, t2)) {
      derived_cycles dc = summarize(c, match_shape(t1, t2, c));
      rep.cycle_lengths.insert(rep.cycle_lengths.end(), dc.lengths.begin(), dc.lengths.end());
    }
    finish_lengths(true);
    rep.status = "exact";
    return rep;
  }

  rep.window = budget / 10;
  if (t1 == t2) {
    // s * s = identity regardless of component layout.
    rep.status = "exact";
    rep.order = bigint(1);
    return rep;
  }

  bool all_finite = true;
  for (const graph_component& c : enumerate_components_window(t1, t2, *rep.window, budget)) {
    derived_cycles dc = summarize(c, std::nullopt);
    if (dc.certainty != length_certainty::exact)
      all_finite = false;
    else
      rep.cycle_lengths.insert(rep.cycle_lengths.end(), dc.lengths.begin(), dc.lengths.end());
  }
  finish_lengths(all_finite);
  rep.status = all_finite ? "window-exact" : "unknown";
  return rep;
}

struct trace_report {
  std::string status;  // "exact" | "window-exact" | "unknown"
  std::optional<bigint> order;
  std::vector<integer> lengths;  // lengths of the closed orbits found
};

// Order of s * t by direct orbit iteration: exact over one period for
// horizontal pairs; otherwise every orbit meeting [-budget/10, budget/10] is
// followed for at most `budget` steps.
inline trace_report trace_product_order(const class_transposition& t1,
                                        const class_transposition& t2,
                                        integer budget = 10'000) {
  if (budget < 10) throw invalid_argument("budget must be at least 10");
  trace_report rep;
  if (is_horizontal(t1) && is_horizontal(t2)) {
    cycle_structure cs = cycle_decomposition(horizontal_product_perm({t1, t2}));
    for (const auto& cyc : cs.cycles) rep.lengths.push_back(static_cast<integer>(cyc.size()));
    for (std::size_t i = 0; i < cs.fixed.size(); ++i) rep.lengths.push_back(1);
    std::sort(rep.lengths.begin(), rep.lengths.end());
    rep.order = structure_order(cs);
    rep.status = "exact";
    return rep;
  }

  auto step = [&](integer x) { return apply(t2, apply(t1, x)); };
  integer w = budget / 10;
  std::set<integer> visited;
  bool all_closed = true;
  for (integer x = -w; x <= w; ++x) {
    if (visited.count(x)) continue;
    std::vector<integer> seq{x};
    bool closed = false;
    integer y = step(x);
    for (integer steps = 1; steps <= budget; ++steps) {
      if (y == x) {
        closed = true;
        break;
      }
      if (std::abs(y) > kMuWalkLimit) break;
      seq.push_back(y);
      y = step(y);
    }
    visited.insert(seq.begin(), seq.end());
    if (closed)
      rep.lengths.push_back(static_cast<integer>(seq.size()));
    else
      all_closed = false;
  }
  std::sort(rep.lengths.begin(), rep.lengths.end());
  if (all_closed) {
    bigint o = 1;
    for (integer l : rep.lengths) o = boost::multiprecision::lcm(o, bigint(l));
    rep.order = o;
    rep.status = "window-exact";
  } else {
    rep.status = "unknown";
  }
  return rep;
}

// Strong consistency check between the two order methods: for every finite
// component, the product must permute the component's mu-values in orbits
// whose lengths are exactly the derived cycle lengths.
inline bool verify_components_by_trace(const class_transposition& t1,
                                       const class_transposition& t2,
                                       const std::vector<graph_component>& comps) {
  auto step = [&](integer x) { return apply(t2, apply(t1, x)); };
  for (const graph_component& c : comps) {
    if (c.kind != component_kind::cycle && c.kind != component_kind::path) continue;
    derived_cycles dc = component_cycle_lengths(c);
    std::set<integer> values;
    for (const vertex& v : c.vertices) values.insert(mu(t1, t2, v));
    std::set<integer> seen;
    std::multiset<integer> found;
    for (integer x : values) {
      if (seen.count(x)) continue;
      integer len = 0;
      integer y = x;
      do {
        if (!values.count(y)) return false;  // orbit escaped the component
        seen.insert(y);
        y = step(y);
        if (++len > static_cast<integer>(values.size())) return false;
      } while (y != x);
      found.insert(len);
    }
    if (found != std::multiset<integer>(dc.lengths.begin(), dc.lengths.end())) return false;
  }
  return true;
}

}  // namespace ct
