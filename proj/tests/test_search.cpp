#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ct/errors.hpp"
#include "ct/json_format.hpp"
#include "ct/search.hpp"

using namespace ct;

namespace {

const order_witness* witness_for(const search_summary& s, int order) {
  for (const order_witness& w : s.witnesses)
    if (w.order == order) return &w;
  return nullptr;
}

std::string pair_text(const search_record& r) {
  return to_string(r.t1) + " * " + to_string(r.t2);
}

}  // namespace

TEST(Enumeration, CountAndOrdering) {
  std::vector<class_transposition> ts = enumerate_horizontal(12);
  std::size_t expected = 0;
  for (integer m = 2; m <= 12; ++m) expected += static_cast<std::size_t>(m * (m - 1) / 2);
  EXPECT_EQ(ts.size(), expected);
  EXPECT_EQ(ts.size(), 286u);

  EXPECT_EQ(to_string(ts[0]), "0(2),1(2)");
  EXPECT_EQ(to_string(ts[1]), "0(3),1(3)");
  EXPECT_EQ(to_string(ts[2]), "0(3),2(3)");
  EXPECT_EQ(to_string(ts[3]), "1(3),2(3)");
  EXPECT_EQ(to_string(ts[4]), "0(4),1(4)");
  EXPECT_EQ(to_string(ts.back()), "10(12),11(12)");
}

TEST(Enumeration, BoundsAreValidated) {
  EXPECT_THROW(enumerate_horizontal(1), invalid_argument);
  EXPECT_THROW(enumerate_horizontal(0), invalid_argument);
  EXPECT_THROW(enumerate_horizontal(1001), resource_limit);
}

TEST(Search, SmallestSurveyIsASinglePair) {
  search_result r = run_search(2);
  EXPECT_EQ(r.summary.transpositions, 1u);
  EXPECT_EQ(r.summary.pairs, 1u);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].order, bigint(1));
  ASSERT_EQ(r.summary.realized.size(), 1u);
  EXPECT_EQ(r.summary.realized[0], bigint(1));
  EXPECT_TRUE(r.summary.contained);
  EXPECT_TRUE(r.summary.violations.empty());
  EXPECT_TRUE(r.summary.note.empty());
}

TEST(Search, SurveyToFourRealizesAllSixOrders) {
  search_result r = run_search(4);
  EXPECT_EQ(r.summary.transpositions, 10u);
  EXPECT_EQ(r.summary.pairs, 55u);
  std::vector<bigint> expected = {1, 2, 3, 4, 6, 12};
  EXPECT_EQ(r.summary.realized, expected);
  EXPECT_TRUE(r.summary.contained);
  EXPECT_FALSE(r.summary.note.empty());
}

TEST(Search, WitnessesAreFirstInEnumerationOrder) {
  search_result r = run_search(4);
  const search_summary& s = r.summary;
  ASSERT_EQ(s.witnesses.size(), 6u);

  const order_witness* w = witness_for(s, 1);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(pair_text(w->record), "0(2),1(2) * 0(2),1(2)");
  EXPECT_FALSE(w->support_disjoint);

  w = witness_for(s, 3);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(pair_text(w->record), "0(3),1(3) * 0(3),2(3)");

  w = witness_for(s, 4);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(pair_text(w->record), "0(2),1(2) * 0(3),1(3)");

  w = witness_for(s, 6);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(pair_text(w->record), "0(2),1(2) * 0(3),2(3)");

  w = witness_for(s, 12);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(pair_text(w->record), "0(3),1(3) * 0(4),2(4)");
}

TEST(Search, OrderTwoWitnessHasDisjointSupports) {
  const order_witness* w4 = witness_for(run_search(4).summary, 2);
  ASSERT_NE(w4, nullptr);
  EXPECT_EQ(pair_text(w4->record), "0(4),1(4) * 2(4),3(4)");
  EXPECT_TRUE(w4->support_disjoint);

  // With the bound raised, a disjoint pair with smaller moduli enumerates
  // earlier: residues 0,1 mod 3 against 2,5 mod 6.
  const order_witness* w12 = witness_for(run_search(12).summary, 2);
  ASSERT_NE(w12, nullptr);
  EXPECT_EQ(pair_text(w12->record), "0(3),1(3) * 2(6),5(6)");
  EXPECT_TRUE(w12->support_disjoint);
}

TEST(Search, EveryRecordedOrderIsInTheKnownSet) {
  search_result r = run_search(6);
  for (const search_record& rec : r.records)
    EXPECT_TRUE(known_order_set().count(rec.order)) << pair_text(rec) << " -> " << rec.order;
  EXPECT_TRUE(r.summary.contained);
  for (const search_record& rec : r.records)
    if (rec.t1 == rec.t2) EXPECT_EQ(rec.order, bigint(1));
}

TEST(Search, ThreadCountDoesNotAffectTheOutput) {
  search_result serial = run_search(5, 1);
  search_result parallel = run_search(5, 4);
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  std::ostringstream a, b;
  write_search_csv(a, serial);
  write_search_csv(b, parallel);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(to_json(serial).dump(), to_json(parallel).dump());
}

TEST(Search, CsvFormatIsPinned) {
  std::ostringstream os;
  write_search_csv(os, run_search(2));
  EXPECT_EQ(os.str(),
            "t1,t2,order,status,method\n"
            "\"0(2),1(2)\",\"0(2),1(2)\",1,exact,finite\n");

  std::ostringstream big;
  write_search_csv(big, run_search(4));
  std::istringstream in(big.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t1,t2,order,status,method");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.size() - 13), ",exact,finite") << line;
    EXPECT_EQ(line.front(), '"');
  }
  EXPECT_EQ(rows, 55u);
}

TEST(Search, DiscrepancyNoteRecognizesBothArgumentOrders) {
  class_transposition p = parse_transposition("0(2),1(2)");
  class_transposition q = parse_transposition("0(4),2(4)");
  ASSERT_TRUE(discrepancy_note(p, q).has_value());
  ASSERT_TRUE(discrepancy_note(q, p).has_value());
  EXPECT_EQ(*discrepancy_note(p, q), *discrepancy_note(q, p));
  EXPECT_NE(discrepancy_note(p, q)->find("order 2"), std::string::npos);
  EXPECT_NE(discrepancy_note(p, q)->find("gives 4"), std::string::npos);
  EXPECT_FALSE(discrepancy_note(p, p).has_value());
  EXPECT_FALSE(discrepancy_note(p, parse_transposition("0(4),1(4)")).has_value());

  // The surveyed record for that pair indeed carries order 4.
  search_result r = run_search(4);
  for (const search_record& rec : r.records)
    if (discrepancy_note(rec.t1, rec.t2)) EXPECT_EQ(rec.order, bigint(4));
}

TEST(Search, JsonSummaryShape) {
  ordered_json j = to_json(run_search(3));
  EXPECT_EQ(j["max_modulus"], 3);
  EXPECT_EQ(j["transpositions"], 4);
  EXPECT_EQ(j["pairs"], 10);
  EXPECT_EQ(j["records"].size(), 10u);
  EXPECT_EQ(j["records"][0]["t1"], "0(2),1(2)");
  EXPECT_EQ(j["records"][0]["order"], "1");
  EXPECT_EQ(j["records"][0]["status"], "exact");
  EXPECT_EQ(j["records"][0]["method"], "finite");
  EXPECT_TRUE(j["contained"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["note"], "");
  // No two transpositions with moduli <= 3 have disjoint supports, and no
  // overlapping pair multiplies to an involution, so 2 is absent here.
  std::vector<std::string> realized = j["realized"].get<std::vector<std::string>>();
  EXPECT_EQ(realized, (std::vector<std::string>{"1", "3", "4", "6"}));
  EXPECT_EQ(j["witnesses"][1]["order"], "3");
  EXPECT_EQ(j["witnesses"][1]["support_disjoint"], false);
}
