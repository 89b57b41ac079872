#include <doctest.h>

#include <json.hpp>

#include "hookvert/suites.hpp"

using namespace hookvert;

TEST_SUITE("suites") {

TEST_CASE("every named suite passes at its reference parameters") {
  SuiteParams params;

  params.p = 3;
  params.n = 12;
  for (const char* name : {"lemma-4.2", "lemma-4.3", "cor-4.4", "lemma-4.5",
                           "lemma-4.6"}) {
    const auto result = run_suite(name, params);
    CHECK_MESSAGE(result.ok(), name);
    CHECK(result.checks_run > 0);
  }

  params.p = 5;
  params.n = 10;
  for (const char* name : {"lemma-4.2", "lemma-4.3", "cor-4.4"}) {
    const auto result = run_suite(name, params);
    CHECK_MESSAGE(result.ok(), name);
  }

  params.p = 3;
  params.n = 0;
  CHECK(run_suite("lemma-3.6", params).ok());
  CHECK(run_suite("lemma-3.8", params).ok());
  params.p = 2;
  CHECK(run_suite("lemma-3.6", params).ok());
  CHECK(run_suite("lemma-3.8", params).ok());

  params.p = 3;
  params.n = 12;
  params.m = {1, 1};
  const auto l39 = run_suite("lemma-3.9", params);
  CHECK(l39.ok());
  CHECK(l39.checks_run == 9);  // 13 maximal subgroups, 4 contain E_{3,1}
}

TEST_CASE("lemma-4.6 runs 13 x samples checks at (3,12)") {
  SuiteParams params;
  params.p = 3;
  params.n = 12;
  params.samples = 20;
  const auto result = run_suite("lemma-4.6", params);
  CHECK(result.ok());
  CHECK(result.checks_run == 13 * 20);
}

TEST_CASE("unknown suites and bad parameters are rejected") {
  SuiteParams params;
  CHECK_THROWS_AS(run_suite("lemma-9.9", params), std::invalid_argument);
  params.p = 3;
  params.n = 10;  // 10 is not ≡ 3 mod 9
  CHECK_THROWS_AS(run_suite("lemma-4.6", params), std::invalid_argument);
}

TEST_CASE("results serialize deterministically") {
  SuiteParams params;
  params.p = 3;
  params.n = 12;
  params.seed = 42;
  const auto a = run_suite("lemma-4.6", params);
  const auto b = run_suite("lemma-4.6", params);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_json().at("ok") == true);
  CHECK_FALSE(a.to_json().contains("elapsed"));
}

TEST_CASE("suite statements exist for every suite") {
  for (const auto& name : suite_names())
    CHECK(!suite_statement(name).empty());
}

}  // TEST_SUITE
