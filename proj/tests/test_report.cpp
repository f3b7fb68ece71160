#include <gtest/gtest.h>

#include <semitruss/semitruss.hpp>

#include "oracle.hpp"

using namespace semitruss;
using namespace fixtures;

namespace {
  Report check_file(char const* name) {
    return check_bundle(parse_bundle_file(std::string(SEMITRUSS_DATA_DIR) + "/" + name));
  }

  std::size_t count_prefix(Report const& r, std::string_view prefix) {
    std::size_t k = 0;
    for (auto const& c : r.checks) {
      k += c.name.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return k;
  }
}  // namespace

TEST(Report, GroupTrussAllPass) {
  auto const r = check_file("z2_truss.st");
  EXPECT_TRUE(r.all_pass());
  ASSERT_NE(r.find("yang_baxter.equation[e=0]"), nullptr);
  EXPECT_EQ(r.find("yang_baxter.equation[e=0]")->result, verdict::pass);
  EXPECT_EQ(r.find("inverse.sigma_inverse.item8")->result, verdict::pass);
  EXPECT_EQ(r.facts["lambda.source"], "derived");
}

TEST(Report, RightProjectionTrussRunsCancellativeSuitesOnly) {
  auto const r = check_file("rightproj_z2.st");
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.facts["lambda.source"], "supplied");
  EXPECT_NE(r.find("semibrace.law[e=1]"), nullptr);
  EXPECT_EQ(count_prefix(r, "inverse."), 0u);
}

TEST(Report, MeetSemilatticeRunsInverseSuitesOnly) {
  auto const r = check_file("meet_semilattice.st");
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(count_prefix(r, "action."), 0u);
  EXPECT_EQ(r.facts["inverse.sigma_lambda_hypothesis"], true);
  EXPECT_EQ(count_prefix(r, "inverse.sigma_inverse.item"), 8u);
  for (auto const& c : r.checks) {
    EXPECT_NE(c.result, verdict::not_applicable) << c.name;
  }
}

TEST(Report, FailingLambdaWitnessReplays) {
  auto const b = parse_bundle_file(std::string(SEMITRUSS_DATA_DIR) + "/bad_lambda.st");
  auto const r = check_bundle(b);
  EXPECT_FALSE(r.all_pass());
  auto const* c = r.find("semitruss.law");
  ASSERT_NE(c, nullptr);
  ASSERT_EQ(c->result, verdict::fail);
  EXPECT_EQ(c->witness, (std::vector<element>{0, 0, 1}));
  EXPECT_FALSE(check_semitruss_law(b.diamond, b.circ, *b.lambda).holds);
  auto const& w = c->witness;
  EXPECT_NE(b.circ(w[0], b.diamond(w[1], w[2])),
            b.diamond(b.circ(w[0], w[1]), (*b.lambda)(w[0], w[2])));
}

TEST(Report, EveryLawFailureReplaysOnAllSuppliedLambdas) {
  // All 16 lambda tables on every pair of semigroups of order 2.
  auto const sgs = enumerate_semigroups(2);
  std::size_t failures = 0;
  for (auto const& d : sgs) {
    for (auto const& c : sgs) {
      for (std::uint32_t code = 0; code < 16; ++code) {
        FiniteBinaryOp const l(2, {code & 1u, (code >> 1) & 1u,
                                   (code >> 2) & 1u, (code >> 3) & 1u});
        auto const r  = check_bundle({d, c, l});
        auto const* k = r.find("semitruss.law");
        ASSERT_NE(k, nullptr);
        bool const holds = oracle::law_holds(oracle::from_lib(d),
                                             oracle::from_lib(c),
                                             oracle::from_lib(l));
        ASSERT_EQ(k->result == verdict::pass, holds);
        if (holds) {
          continue;
        }
        ++failures;
        auto const& w = k->witness;
        ASSERT_EQ(w.size(), 3u);
        ASSERT_NE(c(w[0], d(w[1], w[2])), d(c(w[0], w[1]), l(w[0], w[2])));
      }
    }
  }
  EXPECT_GT(failures, 0u);
}

TEST(Report, MissingLambdaReportsEmptyCell) {
  // Search order-2 pairs for one with no lambda; the witness names a cell
  // whose candidate set is empty.
  auto const sgs = enumerate_semigroups(2);
  std::size_t seen = 0;
  for (auto const& d : sgs) {
    for (auto const& c : sgs) {
      if (derive_lambda(d, c)) {
        continue;
      }
      ++seen;
      auto const r  = check_bundle({d, c, std::nullopt});
      auto const* k = r.find("semitruss.law");
      ASSERT_EQ(k->result, verdict::fail);
      ASSERT_EQ(k->witness.size(), 2u);
      auto const cands = lambda_candidates(d, c);
      EXPECT_TRUE(cands[k->witness[0] * 2 + k->witness[1]].empty());
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(Report, NonAssociativeInputStopsEarly) {
  FiniteBinaryOp const nand{{1, 0}, {0, 0}};
  auto const           r = check_bundle({nand, z2(), std::nullopt});
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.find("structure.diamond_associative")->witness.size(), 3u);
}

TEST(Report, JsonIsDeterministicWithoutTiming) {
  auto const a = to_json(check_file("z2_truss.st"), false).dump();
  auto const b = to_json(check_file("z2_truss.st"), false).dump();
  EXPECT_EQ(a, b);
  auto const j = to_json(check_file("bad_lambda.st"), true);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_FALSE(j["all_pass"].get<bool>());
  EXPECT_TRUE(j.contains("timing_us"));
  EXPECT_EQ(j["checks"][2]["verdict"], "fail");
  EXPECT_TRUE(j["checks"][2].contains("witness"));
}

TEST(Report, EveryCheckHasAStatedLaw) {
  for (auto const* f : {"z2_truss.st", "rightproj_z2.st", "meet_semilattice.st"}) {
    for (auto const& c : check_file(f).checks) {
      EXPECT_FALSE(c.law.empty()) << c.name;
    }
  }
}

TEST(LemmaReport, AllPassUpToThree) {
  auto const r = lemma_report(3, {});
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.checks.size(), 12u);
  EXPECT_EQ(r.facts["inverse_semigroups[n=2]"], 4);
  EXPECT_EQ(r.facts["inverse_semigroups[n=3]"], 24);
}
