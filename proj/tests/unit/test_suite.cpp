#include <doctest.h>

#include "jonq/suite/suite.hpp"

using namespace jonq;

TEST_CASE("suite selection and verdicts")
{
    SuiteOptions options;
    options.only = {11, 1};
    const auto results = run_suite(options);
    REQUIRE(results.size() == 2);
    CHECK(results[0].id == 1);
    CHECK(results[1].id == 11);
    CHECK(results[0].limit == 1.0);
    CHECK(suite_exit_code(results) == 0);
}

TEST_CASE("budget overruns are reported, not masked")
{
    SuiteOptions options;
    options.budget = 10;
    options.only = {4, 11};
    int seen = 0;
    const auto results = run_suite(options, [&](const CheckResult&) { ++seen; });
    CHECK(seen == 2);
    REQUIRE(results.size() == 2);
    CHECK(results[0].status == CheckStatus::Budget);
    CHECK(results[0].detail.find("BudgetExceeded") == 0);
    CHECK(results[1].status == CheckStatus::Pass);
    CHECK(suite_exit_code(results) == 3);

    std::vector<CheckResult> mixed = results;
    mixed[1].status = CheckStatus::Fail;
    CHECK(suite_exit_code(mixed) == 1);
    CHECK(status_name(CheckStatus::Budget) == "budget");
}

TEST_CASE("seed and field change instances, not verdicts")
{
    for (std::uint64_t seed : {3u, 17u}) {
        SuiteOptions options;
        options.seed = seed;
        options.only = {2, 3, 6, 10};
        for (const auto& r : run_suite(options))
            CHECK_MESSAGE(r.status == CheckStatus::Pass, r.name << ": " << r.detail);
    }
    SuiteOptions q;
    q.field = Field::rationals();
    q.only = {7, 9};
    for (const auto& r : run_suite(q))
        CHECK_MESSAGE(r.status == CheckStatus::Pass, r.name << ": " << r.detail);
}
