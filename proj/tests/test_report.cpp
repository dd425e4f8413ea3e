#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"

using namespace blockbiset;

namespace {

std::string render(const std::string& source, int jobs)
{
  GroupSpec spec = load_group_spec(source);
  Group G = spec.build();
  auto runs = run_primes(G, spec.resolved_primes(G), jobs);
  return document_json({report_json(spec, G, runs)}).dump(2);
}

}  // namespace

TEST(Catalog, Contents)
{
  std::vector<std::string> names;
  for (const auto& g : catalog())
    names.push_back(g.name);
  EXPECT_EQ(names, (std::vector<std::string>{"C2", "C3", "C9", "S3", "D8", "Q8", "A4", "S4", "A5",
                                             "S5", "SL(2,3)", "D12", "C3xS3"}));
  const GroupSpec* a5 = find_in_catalog("A5");
  ASSERT_NE(a5, nullptr);
  EXPECT_EQ(a5->resolved_primes(a5->build()), (std::vector<int>{2, 3, 5}));
  const GroupSpec* s4 = find_in_catalog("S4");
  EXPECT_EQ(s4->resolved_primes(s4->build()), (std::vector<int>{2, 3}));
  const GroupSpec* sl = find_in_catalog("SL(2,3)");
  EXPECT_EQ(sl->degree, 8);
  EXPECT_EQ(sl->build().order(), 24);
  EXPECT_EQ(find_in_catalog("nope"), nullptr);
}

TEST(GroupSpecJson, ParsesAndValidates)
{
  GroupSpec s = parse_group_spec(R"({"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]],"primes":[3]})");
  EXPECT_EQ(s.name, "S3");
  EXPECT_EQ(s.build().order(), 6);
  EXPECT_EQ(s.resolved_primes(s.build()), (std::vector<int>{3}));

  GroupSpec no_primes = parse_group_spec(R"({"degree":3,"generators":[[1,2,0]]})");
  EXPECT_EQ(no_primes.resolved_primes(no_primes.build()), (std::vector<int>{3}));

  EXPECT_THROW(parse_group_spec("{"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"degree":3})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"degree":3,"generators":[[0,0,1]]})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"degree":3,"generators":[[0,1]]})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"degree":3,"generators":[[1,2,0]],"primes":[4]})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"degree":"x","generators":[]})"), ParseError);
  EXPECT_THROW(load_group_spec("catalog:nope"), ParseError);
  EXPECT_THROW(load_group_spec("/nonexistent/spec.json"), ParseError);
}

TEST(MaxOrder, FlagThenEnvironmentThenDefault)
{
  unsetenv("BLOCKBISET_MAX_ORDER");
  EXPECT_EQ(resolve_max_order(0), kDefaultMaxOrder);
  setenv("BLOCKBISET_MAX_ORDER", "50", 1);
  EXPECT_EQ(resolve_max_order(0), 50u);
  EXPECT_EQ(resolve_max_order(7), 7u);
  setenv("BLOCKBISET_MAX_ORDER", "junk", 1);
  EXPECT_EQ(resolve_max_order(0), kDefaultMaxOrder);
  unsetenv("BLOCKBISET_MAX_ORDER");
}

TEST(Report, DeterministicAndIndependentOfJobs)
{
  const std::string a = render("catalog:A5", 1);
  EXPECT_EQ(a, render("catalog:A5", 1));
  EXPECT_EQ(a, render("catalog:A5", 3));
}

TEST(Report, SchemaAndContent)
{
  GroupSpec spec = load_group_spec("catalog:A5");
  Group G = spec.build();
  auto runs = run_primes(G, {2}, 1);
  Json doc = document_json({report_json(spec, G, runs)});
  EXPECT_EQ(doc["schema"], "blockbiset-report/1");
  EXPECT_TRUE(doc["passed"].get<bool>());
  const Json& run = doc["reports"][0]["runs"][0];
  EXPECT_EQ(run["field"]["m"], 4);
  EXPECT_EQ(run["field"]["modulus"], (std::vector<int>{1, 1, 0, 0, 1}));
  ASSERT_EQ(run["blocks"].size(), 2u);
  EXPECT_EQ(run["blocks"][0]["dimension"], 44);
  EXPECT_EQ(run["blocks"][1]["defect_group"]["order"], 1);
  EXPECT_EQ(run["blocks"][1]["multiplicities"], Json::parse("[[1, 15, 1]]"));
  // idempotent coefficients: one hex string per group element, 2 digits per coefficient
  EXPECT_EQ(run["blocks"][0]["idempotent"].size(), 60u);
  EXPECT_EQ(run["blocks"][0]["idempotent"][0].get<std::string>().size(), 8u);
  EXPECT_EQ(run["characteristic_p"]["unique_block"], "not applicable");
}

TEST(Report, ErrorsAreReported)
{
  PrimeRun bad = run_prime(find_in_catalog("S3")->build(), 4);
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.passed());
  Json j = prime_run_json("S3", bad);
  EXPECT_EQ(j["status"], "error");

  Json e = error_report_json("x.json", ParseError("bad"));
  EXPECT_FALSE(document_json({e})["passed"].get<bool>());
}

TEST(Report, TextTable)
{
  GroupSpec spec = load_group_spec("catalog:S4");
  Group G = spec.build();
  auto runs = run_primes(G, {3}, 1);
  std::string text = report_text(spec, G, runs);
  EXPECT_NE(text.find("S4  |G| = 24  p = 3"), std::string::npos);
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
}
