#include <gtest/gtest.h>

#include "gdmatch/generate.hpp"
#include "gdmatch/quantum_match.hpp"
#include "oracle.hpp"

using namespace gdmatch;

namespace {

const GdString kFigure1 = parse_gd_text("ACG,TAA,CGT,GTA\nGATC,CGGT\nAC,GT,CA\nTAAGT,ATGCA\nACG,TTA");
const Pattern kP("GTGTTAA");

GenParams small_params(std::uint64_t seed) {
  GenParams params;
  params.segments = {1, 5};
  params.width = {1, 4};
  params.set_size = {1, 4};
  params.alphabet_size = 2 + seed % 3;
  params.pattern_length = {1, 8};
  params.plant = seed % 3 == 0 ? Plant::none : seed % 3 == 1 ? Plant::language : Plant::in_string;
  return params;
}

}  // namespace

TEST(OracleF3, Examples) {
  const auto f3 = oracle_f3(kFigure1, 2, 1, kP, 2);  // "GT" vs P[2..4) = "GT"
  EXPECT_FALSE(f3(0));
  EXPECT_FALSE(f3(1));
  const auto g = oracle_f3(kFigure1, 1, 0, kP, 0);  // "GATC" vs "GTGT"
  EXPECT_FALSE(g(0));
  EXPECT_TRUE(g(1));
  EXPECT_THROW(MismatchOracle("AB", "A"), ArgumentError);
}

TEST(StringEqualGrover, Ideal) {
  SimContext ctx(SimMode::ideal());
  auto eq = string_equal_grover("GT", "GT", ctx);
  EXPECT_TRUE(eq.value);
  // K=2, M=0 runs the M=1 count on the padded domain of 4: one iteration plus one verification
  EXPECT_EQ(eq.cost.g3_calls, 2u);
  EXPECT_EQ(eq.cost.char_queries, 4u);

  EXPECT_FALSE(string_equal_grover("GATC", "CGGT", ctx).value);
  EXPECT_TRUE(string_equal_grover("A", "A", ctx).value);
  EXPECT_FALSE(string_equal_grover("A", "C", ctx).value);
  EXPECT_THROW(string_equal_grover("AB", "A", ctx), ArgumentError);
  EXPECT_THROW(string_equal_grover("", "", ctx), ArgumentError);
}

TEST(StringEqualGrover, SampledNeverRejectsEqualStrings) {
  SimContext ctx(SimMode::sampled(9, 1));
  ctx.set_active_boost(1);
  for (int rep = 0; rep < 200; ++rep) ASSERT_TRUE(string_equal_grover("ACGTAC", "ACGTAC", ctx).value);
}

TEST(SegmentMemberGrover, Examples) {
  SimContext ctx(SimMode::ideal());
  EXPECT_TRUE(segment_member_grover(kFigure1, 2, "GT", Orientation::exact, ctx).value);
  EXPECT_FALSE(segment_member_grover(kFigure1, 2, "TG", Orientation::exact, ctx).value);
  EXPECT_TRUE(segment_member_grover(kFigure1, 3, "TAA", Orientation::prefix, ctx).value);
  EXPECT_TRUE(segment_member_grover(kFigure1, 1, "GT", Orientation::suffix, ctx).value);
  EXPECT_FALSE(segment_member_grover(kFigure1, 1, "GA", Orientation::suffix, ctx).value);

  auto empty = segment_member_grover(kFigure1, 1, "", Orientation::prefix, ctx);
  EXPECT_TRUE(empty.value);
  EXPECT_EQ(empty.cost, QueryLedger{});

  EXPECT_THROW(segment_member_grover(kFigure1, 2, "GTA", Orientation::prefix, ctx), ArgumentError);
  EXPECT_THROW(segment_member_grover(kFigure1, 2, "G", Orientation::exact, ctx), ArgumentError);
}

TEST(SegmentMemberGrover, AgreesWithTries) {
  SimContext ctx(SimMode::ideal());
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto [t, p] = generate_random(small_params(seed), seed);
    const TrieIndex idx(t);
    for (std::size_t i = 0; i < t.num_segments(); ++i) {
      const std::size_t k = t[i].width();
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j + k <= p.size()) {
          ASSERT_EQ(segment_member_grover(t, i, p.view().substr(j, k), Orientation::exact, ctx).value,
                    predicate_ext(idx, i, p, j));
        }
        if (p.size() - j <= k) {
          ASSERT_EQ(segment_member_grover(t, i, p.view().substr(j), Orientation::prefix, ctx).value,
                    predicate_sm(idx, i, p, j));
        }
      }
      for (std::size_t len = 0; len <= std::min(k, p.size()); ++len)
        ASSERT_EQ(segment_member_grover(t, i, p.view().substr(0, len), Orientation::suffix, ctx).value,
                  predicate_pm(idx, i, p, len));
    }
  }
}

TEST(QuantumThread, IdealEqualsClassicalFold) {
  SimContext ctx(SimMode::ideal());
  std::vector<QueryLedger> per_segment;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto [t, p] = generate_random(small_params(seed), seed);
    const TrieIndex idx(t);
    for (std::size_t h = 0; h < p.size(); ++h) {
      ASSERT_EQ(quantum_thread(t, p, h, ctx, per_segment), run_thread(t, idx, p, h)) << seed << ' ' << h;
      ASSERT_EQ(per_segment.size(), t.num_segments());
    }
  }
}

TEST(SubstringQuantum, Examples) {
  SimContext ctx(SimMode::ideal());
  auto hit = substring_quantum_search(kFigure1, Pattern("ATG"), ctx);
  ASSERT_TRUE(hit.found);
  EXPECT_EQ(*hit.hit, (SubstringHit{3, 1, 0}));
  EXPECT_FALSE(substring_quantum(kFigure1, kP, ctx));
  // P runs off the end of a string: no in-string occurrence
  EXPECT_FALSE(substring_quantum(parse_gd_text("ACG"), Pattern("CGA"), ctx));
  EXPECT_GT(hit.cost.substring_outer_calls, 0u);
}

TEST(SubstringQuantum, AgreesWithScan) {
  SimContext ctx(SimMode::ideal());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [t, p] = generate_random(small_params(seed), seed);
    ASSERT_EQ(substring_quantum(t, p, ctx), substring_scan(t, p).has_value()) << seed;
  }
}

TEST(SmgdQuantum, Figure1) {
  const auto r = smgd_quantum(kFigure1, kP, SimMode::ideal());
  EXPECT_TRUE(r.matched);
  EXPECT_FALSE(r.substring_hit);
  EXPECT_EQ(r.witnesses, (std::set<std::size_t>{5}));
  ASSERT_TRUE(r.ledger);
  EXPECT_GT(r.ledger->g1_calls, 0u);
  EXPECT_EQ(r.ledger->char_queries, 2 * (r.ledger->g3_calls + r.ledger->substring_inner_calls));

  const auto s = smgd_quantum(kFigure1, kP, SimMode::sampled(1));
  EXPECT_TRUE(s.matched);
  EXPECT_FALSE(smgd_quantum(kFigure1, Pattern("Z"), SimMode::sampled(1)).matched);
}

TEST(SmgdQuantum, SubstringShortcut) {
  const auto r = smgd_quantum(kFigure1, Pattern("ATG"), SimMode::ideal());
  EXPECT_TRUE(r.matched);
  EXPECT_TRUE(r.substring_hit);
  EXPECT_EQ(r.witnesses, (std::set<std::size_t>{9 % 3}));  // ATGCA starts at column 10
  EXPECT_EQ(r.ledger->g1_calls, 0u);
}

TEST(SmgdQuantum, SampledIsReproducible) {
  const auto a = smgd_quantum(kFigure1, kP, SimMode::sampled(77, 5));
  const auto b = smgd_quantum(kFigure1, kP, SimMode::sampled(77, 5));
  EXPECT_EQ(a.matched, b.matched);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(*a.ledger, *b.ledger);
}

// Sampled verdicts can miss an occurrence but never claim a false one.
TEST(SmgdQuantumProperty, NoFalsePositives) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto [t, p] = generate_random(small_params(seed), seed);
    const bool present = oracle::occurs(t, p.str());
    const auto ideal = smgd_quantum(t, p, SimMode::ideal());
    ASSERT_EQ(ideal.matched, present) << seed;
    const auto sampled = smgd_quantum(t, p, SimMode::sampled(seed, 3));
    if (!present) {
      ASSERT_FALSE(sampled.matched) << seed;
    }
    for (auto h : sampled.witnesses) ASSERT_LT(h, p.size());
  }
}
