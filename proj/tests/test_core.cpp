#include <gtest/gtest.h>

#include <vector>

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"
#include "ct/rcwa.hpp"
#include "ct/residue_class.hpp"
#include "oracles.hpp"

using namespace ct;

TEST(FloorArithmetic, MatchesMathematicalConvention) {
  EXPECT_EQ(floor_mod(7, 3), 1);
  EXPECT_EQ(floor_mod(-7, 3), 2);
  EXPECT_EQ(floor_mod(-6, 3), 0);
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(floor_div(-7, 3), -3);
  EXPECT_EQ(floor_div(-6, 3), -2);
  for (integer n = -50; n <= 50; ++n)
    for (integer m : {1, 2, 3, 7, 12}) {
      EXPECT_EQ(floor_div(n, m) * m + floor_mod(n, m), n);
      EXPECT_GE(floor_mod(n, m), 0);
      EXPECT_LT(floor_mod(n, m), m);
    }
}

TEST(ResidueClass, ValidationAndAccessors) {
  residue_class c = make_residue_class(3, 7);
  EXPECT_EQ(c.residue, 3);
  EXPECT_EQ(c.modulus, 7);
  EXPECT_EQ(to_string(c), "3(7)");
  EXPECT_THROW(make_residue_class(0, 0), range_error);
  EXPECT_THROW(make_residue_class(0, -2), range_error);
  EXPECT_THROW(make_residue_class(7, 7), range_error);
  EXPECT_THROW(make_residue_class(-1, 7), range_error);
  EXPECT_THROW(make_residue_class(0, kMaxModulus + 1), range_error);
  EXPECT_NO_THROW(make_residue_class(0, kMaxModulus));
}

TEST(ResidueClass, MembershipElementCoefficientRoundTrip) {
  residue_class c = make_residue_class(2, 5);
  for (integer k = -30; k <= 30; ++k) {
    integer x = element(c, k);
    EXPECT_EQ(x, 2 + 5 * k);
    EXPECT_TRUE(contains(c, x));
    EXPECT_EQ(coefficient(c, x), k);
  }
  EXPECT_FALSE(contains(c, 3));
  EXPECT_FALSE(contains(c, -4));
  EXPECT_TRUE(contains(c, -3));
}

TEST(ResidueClass, DisjointnessMatchesWindowScan) {
  std::vector<residue_class> classes;
  for (integer m = 1; m <= 12; ++m)
    for (integer r = 0; r < m; ++r) classes.push_back(make_residue_class(r, m));
  for (const residue_class& a : classes)
    for (const residue_class& b : classes)
      EXPECT_EQ(classes_disjoint(a, b), !oracle::classes_intersect_scan(a, b))
          << to_string(a) << " vs " << to_string(b);
}

TEST(ResidueClass, ParseAcceptsWhitespaceAndRejectsGarbage) {
  EXPECT_EQ(parse_residue_class("  4 ( 9 ) "), make_residue_class(4, 9));
  EXPECT_THROW(parse_residue_class("4(9) x"), parse_error);
  EXPECT_THROW(parse_residue_class("(9)"), parse_error);
  EXPECT_THROW(parse_residue_class("4()"), parse_error);
  EXPECT_THROW(parse_residue_class("4"), parse_error);
  EXPECT_THROW(parse_residue_class(""), parse_error);
  EXPECT_THROW(parse_residue_class("9(4)"), range_error);
  EXPECT_THROW(parse_residue_class("4(12345678901234567890123)"), parse_error);
}

TEST(ClassTransposition, ConstructionCanonicalizesCellOrder) {
  class_transposition t = make_transposition(1, 2, 0, 4);
  EXPECT_EQ(t.cell_a, make_residue_class(0, 4));
  EXPECT_EQ(t.cell_b, make_residue_class(1, 2));
  EXPECT_EQ(to_string(t), "0(4),1(2)");
  EXPECT_EQ(parse_transposition("1(2),0(4)"), t);
  EXPECT_EQ(parse_transposition(" 0(4) , 1(2) "), t);
}

TEST(ClassTransposition, RejectsIntersectingCellsWithWitness) {
  try {
    make_transposition(0, 2, 2, 4);
    FAIL() << "expected not_disjoint";
  } catch (const not_disjoint& e) {
    EXPECT_EQ(e.gcd_witness(), 2);
  }
  EXPECT_THROW(make_transposition(1, 3, 1, 3), not_disjoint);
  EXPECT_THROW(parse_transposition("0(2),0(4)"), not_disjoint);
}

TEST(ClassTransposition, VerticalPairsAreImpossible) {
  // Equal residues with any two moduli always intersect (the smaller modulus
  // divides the residue difference 0), so no "vertical" transposition exists.
  for (integer m1 = 1; m1 <= 10; ++m1)
    for (integer m2 = 1; m2 <= 10; ++m2)
      for (integer r = 0; r < std::min(m1, m2); ++r)
        EXPECT_THROW(make_transposition(r, m1, r, m2), not_disjoint);
}

TEST(ClassTransposition, KindClassification) {
  EXPECT_EQ(classify(parse_transposition("0(2),1(2)")), ct_kind::horizontal);
  EXPECT_EQ(classify(parse_transposition("0(2),1(4)")), ct_kind::oblique);
  EXPECT_TRUE(is_horizontal(parse_transposition("3(7),5(7)")));
  EXPECT_FALSE(is_horizontal(parse_transposition("1(2),0(4)")));
  EXPECT_EQ(modulus(parse_transposition("3(7),5(7)")), 7);
  EXPECT_THROW(modulus(parse_transposition("1(2),0(4)")), not_horizontal);
}

TEST(ClassTransposition, ApplySwapsTheTwoCells) {
  class_transposition t = parse_transposition("1(3),2(6)");
  for (integer k = -20; k <= 20; ++k) {
    EXPECT_EQ(apply(t, 1 + 3 * k), 2 + 6 * k);
    EXPECT_EQ(apply(t, 2 + 6 * k), 1 + 3 * k);
  }
  EXPECT_EQ(apply(t, 0), 0);
  EXPECT_EQ(apply(t, 3), 3);
  for (integer x = -100; x <= 100; ++x)
    EXPECT_EQ(in_support(t, x), apply(t, x) != x);
}

TEST(ClassTransposition, InvolutionOnWindow) {
  std::vector<class_transposition> ts;
  for (integer m1 = 2; m1 <= 5 && ts.size() < 40; ++m1)
    for (integer r1 = 0; r1 < m1; ++r1)
      for (integer m2 = m1; m2 <= 5; ++m2)
        for (integer r2 = 0; r2 < m2; ++r2) {
          if (m1 == m2 && r2 <= r1) continue;
          integer g = std::gcd(m1, m2);
          if ((r1 - r2) % g == 0) continue;
          ts.push_back(make_transposition(r1, m1, r2, m2));
        }
  ASSERT_GE(ts.size(), 20u);
  for (const class_transposition& t : ts)
    for (integer x = -1000; x <= 1000; ++x) EXPECT_EQ(apply(t, apply(t, x)), x);
}

TEST(ClassTransposition, RefineSplitsEachCellIntoSubclasses) {
  class_transposition t = parse_transposition("0(2),1(2)");
  std::vector<class_transposition> once = refine(t, 1);
  ASSERT_EQ(once.size(), 1u);
  EXPECT_EQ(once[0], t);

  std::vector<class_transposition> parts = refine(t, 2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], parse_transposition("0(4),1(4)"));
  EXPECT_EQ(parts[1], parse_transposition("2(4),3(4)"));

  class_transposition u = parse_transposition("1(3),2(6)");
  std::vector<class_transposition> uparts = refine(u, 3);
  ASSERT_EQ(uparts.size(), 3u);
  for (integer x = -500; x <= 500; ++x) {
    integer y = x;
    for (const class_transposition& p : uparts) y = apply(p, y);
    EXPECT_EQ(y, apply(u, x));
  }
  EXPECT_THROW(refine(t, 0), invalid_argument);
  EXPECT_THROW(refine(t, kMaxModulus), range_error);
}

TEST(ClassTransposition, SupportDisjointness) {
  EXPECT_TRUE(supports_disjoint(parse_transposition("0(4),1(4)"), parse_transposition("2(4),3(4)")));
  EXPECT_FALSE(supports_disjoint(parse_transposition("0(2),1(2)"), parse_transposition("0(4),1(4)")));
  EXPECT_TRUE(supports_disjoint(parse_transposition("0(3),1(3)"), parse_transposition("2(6),5(6)")));
}

TEST(Rcwa, TranspositionAsAffineMapMatchesPointwise) {
  for (const char* text : {"0(2),1(2)", "0(3),2(3)", "0(2),1(4)", "1(3),2(6)", "1(2),0(4)"}) {
    class_transposition t = parse_transposition(text);
    rcwa_mapping f = to_rcwa(t);
    for (integer x = -2000; x <= 2000; ++x) EXPECT_EQ(apply(f, x), apply(t, x)) << text;
  }
}

TEST(Rcwa, IntegralityCharacterizesHorizontal) {
  EXPECT_TRUE(is_integral(parse_transposition("0(2),1(2)")));
  EXPECT_TRUE(is_integral(parse_transposition("2(7),5(7)")));
  EXPECT_FALSE(is_integral(parse_transposition("0(2),1(4)")));
  EXPECT_FALSE(is_integral(parse_transposition("1(2),0(4)")));
  for (integer m1 = 2; m1 <= 6; ++m1)
    for (integer r1 = 0; r1 < m1; ++r1)
      for (integer m2 = m1; m2 <= 6; ++m2)
        for (integer r2 = 0; r2 < m2; ++r2) {
          if (m1 == m2 && r2 <= r1) continue;
          if ((r1 - r2) % std::gcd(m1, m2) == 0) continue;
          class_transposition t = make_transposition(r1, m1, r2, m2);
          // Two independent routes (cell shape vs divisor of the affine form)
          // must agree; is_integral throws if they ever disagree.
          EXPECT_EQ(is_integral(t), m1 == m2) << to_string(t);
        }
}

TEST(Rcwa, MultiplierDivisorAndNormalization) {
  rcwa_mapping f = to_rcwa(parse_transposition("0(2),1(4)"));
  EXPECT_EQ(f.modulus, 4);
  EXPECT_EQ(multiplier(f), 2);
  EXPECT_EQ(divisor(f), 2);

  // A map written with modulus 4 whose pieces repeat with period 2 normalizes
  // down to modulus 2.
  rcwa_mapping g;
  g.modulus = 4;
  g.pieces = {affine_piece{1, 1, 1}, affine_piece{1, -1, 1}, affine_piece{1, 1, 1},
              affine_piece{1, -1, 1}};
  rcwa_mapping n = normalized(g);
  EXPECT_EQ(n.modulus, 2);
  for (integer x = -50; x <= 50; ++x) EXPECT_EQ(apply(n, x), apply(g, x));
}

TEST(Rcwa, ApplyRejectsNonIntegralValues) {
  rcwa_mapping f;
  f.modulus = 2;
  f.pieces = {affine_piece{1, 0, 2}, affine_piece{1, 1, 1}};  // n/2 on evens
  EXPECT_EQ(apply(f, 4), 2);
  rcwa_mapping bad;
  bad.modulus = 2;
  bad.pieces = {affine_piece{1, 1, 2}, affine_piece{1, 0, 1}};  // (n+1)/2 on evens
  EXPECT_THROW(apply(bad, 0), invalid_argument);
}

TEST(Rcwa, EmbeddingGivesIntegralMapsAndActsByConjugationPattern) {
  permutation swap01 = parse_cycles("(0,1)", 2);
  rcwa_mapping f = embed_phi(2, swap01);
  EXPECT_TRUE(is_integral(f));
  EXPECT_EQ(apply(f, 7), 6);
  EXPECT_EQ(apply(f, 0), 1);
  for (integer x = -100; x <= 100; ++x) EXPECT_EQ(apply(f, x), x + (x % 2 == 0 ? 1 : -1));

  EXPECT_THROW(embed_phi(3, swap01), degree_mismatch);
}

TEST(Rcwa, EmbeddingIsAHomomorphismOnAllOfS4) {
  std::vector<permutation> s4 = oracle::all_permutations(4);
  ASSERT_EQ(s4.size(), 24u);
  for (const permutation& p : s4)
    for (const permutation& q : s4) {
      rcwa_mapping fp = embed_phi(4, p);
      rcwa_mapping fq = embed_phi(4, q);
      rcwa_mapping fpq = embed_phi(4, p * q);
      for (integer x = -60; x <= 60; ++x) EXPECT_EQ(apply(fpq, x), apply(fq, apply(fp, x)));
    }
}

TEST(Rcwa, EmbeddingIsInjectiveOnS4) {
  std::vector<permutation> s4 = oracle::all_permutations(4);
  std::set<std::vector<integer>> tables;
  for (const permutation& p : s4) {
    rcwa_mapping f = embed_phi(4, p);
    std::vector<integer> table;
    for (integer x = 0; x < 4; ++x) table.push_back(apply(f, x));
    tables.insert(table);
  }
  EXPECT_EQ(tables.size(), 24u);
}

TEST(Rcwa, PiecePrinting) {
  EXPECT_EQ(to_string(affine_piece{1, 0, 1}), "n");
  EXPECT_EQ(to_string(affine_piece{1, 1, 1}), "n+1");
  EXPECT_EQ(to_string(affine_piece{1, -1, 1}), "n-1");
  EXPECT_EQ(to_string(affine_piece{3, -1, 2}), "(3n-1)/2");
  EXPECT_EQ(to_string(affine_piece{-1, 0, 1}), "-n");
}
