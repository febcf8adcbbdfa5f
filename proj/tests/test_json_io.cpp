#include "monolab/json_io.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace monolab;

TEST(JsonIo, RootDatum) {
  const auto j = to_json(RootDatum(SimpleType('E', 6)));
  EXPECT_EQ(j.at("exponents"), Json({1, 4, 5, 7, 8, 11}));
  EXPECT_EQ(j.at("coxeter_number"), 12);
  EXPECT_EQ(j.at("positive_roots").size(), 36u);
  EXPECT_FALSE(j.at("weyl_contains_minus_one").get<bool>());
}

TEST(JsonIo, PrimeScanUsesDecimalStrings) {
  const auto j = to_json(run_prime_scan(SimpleType('E', 8)));
  EXPECT_EQ(j.at("bad_primes").back(), 397);
  EXPECT_TRUE(j.at("e8_adjudication").at("matches_lemma_list").get<bool>());
  for (const auto& e : j.at("per_exponent"))
    for (const auto& c : e.at("coefficients")) EXPECT_TRUE(c.is_string());
}

TEST(JsonIo, LedgerRoundTrip) {
  auto l = balanced_ledger(SimpleType('F', 4), 2, {{LocalKind::custom, 1, 0, 5}, {LocalKind::steinberg, 2, 0, {}}});
  const auto j = to_json(l);
  EXPECT_EQ(j.at("schema_version"), kLedgerSchemaVersion);
  const auto back = ledger_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(selmer_summary(back).at("wiles_difference"), wiles_difference(l));
}

TEST(JsonIo, LedgerValidation) {
  Json j = to_json(balanced_ledger(SimpleType('G', 2), 1));
  auto bad = j;
  bad.erase("schema_version");
  EXPECT_THROW(ledger_from_json(bad), std::invalid_argument);
  bad = j;
  bad["schema_version"] = 99;
  EXPECT_THROW(ledger_from_json(bad), std::invalid_argument);
  bad = j;
  bad["archimedean_fixed_dims"] = Json::array();
  EXPECT_THROW(ledger_from_json(bad), std::invalid_argument);
  bad = j;
  bad["locals"][0]["kind"] = "crystalline";
  EXPECT_THROW(ledger_from_json(bad), std::invalid_argument);
  bad = j;
  bad["locals"][0]["h0"] = -1;
  EXPECT_THROW(ledger_from_json(bad), std::invalid_argument);
}

TEST(JsonIo, ShippedFixtureFileMatchesEmbedded) {
  std::ifstream in(MONOLAB_FIXTURE_PATH);
  ASSERT_TRUE(in.good());
  const auto file = nlohmann::json::parse(in);
  EXPECT_EQ(file, nlohmann::json::parse(embedded_fixtures().dump()));
}

TEST(JsonIo, BoundsRecord) {
  const auto j = to_json(lifting_prime_bounds(SimpleType('E', 8)));
  EXPECT_EQ(j.at("e8_flagged"), 367);
  EXPECT_EQ(j.at("e8_computed"), 397);
  EXPECT_EQ(j.at("principal_sl2_bound"), 119);
}
