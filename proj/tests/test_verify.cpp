#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hecke;

namespace {

SuiteOptions scoped(std::vector<std::string> scope) {
    SuiteOptions o;
    o.scope = std::move(scope);
    return o;
}

}  // namespace

TEST(Suite, AllChecksPassAtSmallPoints) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{1, 1, 3}}) {
        const Report rep = run_suite(default_params(g[0], g[1], g[2]));
        EXPECT_EQ(rep.checks.size(), check_registry().size());
        for (const auto& c : rep.checks) {
            EXPECT_NE(c.status, CheckStatus::fail) << c.name << " " << c.counterexample.dump();
            EXPECT_FALSE(c.sampled);
        }
        EXPECT_TRUE(rep.all_passed());
    }
}

TEST(Suite, ScopeSelectsChecks) {
    const Report rep = run_suite(default_params(2, 2, 2), scoped({"mainthm1", "orth"}));
    ASSERT_EQ(rep.checks.size(), 2u);
    EXPECT_NE(rep.find("mainthm1"), nullptr);
    EXPECT_NE(rep.find("orth"), nullptr);
    EXPECT_EQ(rep.find("Ft"), nullptr);
    const Report alias = run_suite(default_params(2, 2, 2), scoped({"maincor"}));
    ASSERT_EQ(alias.checks.size(), 1u);
    EXPECT_EQ(alias.checks[0].name, "mainthm4");
}

TEST(Suite, UnknownCheckRejected) { EXPECT_THROW(select_checks({"nosuchcheck"}), UnknownCheck); }

TEST(Suite, ChecksHaveInstancesAtNontrivialPoint) {
    const Report rep = run_suite(default_params(4, 2, 2));
    for (const auto& c : rep.checks) {
        EXPECT_EQ(c.status, CheckStatus::pass) << c.name;
        EXPECT_GT(c.instances, 0u) << c.name;
    }
}

TEST(Suite, MutationProducesCounterexample) {
    SuiteOptions o = scoped({"Ft", "orth", "GammaCoeffi"});
    o.mutation = Mutation::gamma_scale;
    const Report rep = run_suite(default_params(2, 2, 2), o);
    EXPECT_FALSE(rep.all_passed());
    bool seen = false;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::fail) {
            seen = true;
            EXPECT_FALSE(c.counterexample.is_null()) << c.name;
        }
    EXPECT_TRUE(seen);
}

TEST(Suite, MutationsDetectedSomewhere) {
    const std::vector<HeckeParams> pts = {default_params(2, 2, 2), default_params(4, 2, 2), default_params(4, 4, 2)};
    for (Mutation m : all_mutations) {
        const auto out = detect_mutation(m, pts);
        EXPECT_TRUE(out.detected) << to_string(m);
    }
}

TEST(Suite, SamplingAtRankFour) {
    SuiteOptions o = scoped({"GammaCoeffi", "Ft"});
    o.sample_limit = 25;
    const Report rep = run_suite(default_params(1, 1, 4), o);
    for (const auto& c : rep.checks) {
        EXPECT_EQ(c.status, CheckStatus::pass);
        if (c.sampled) { EXPECT_EQ(c.instances, 25u); }
    }
    ASSERT_NE(rep.find("GammaCoeffi"), nullptr);
    EXPECT_TRUE(rep.find("GammaCoeffi")->sampled);
    EXPECT_FALSE(run_suite(default_params(1, 1, 3), o).find("GammaCoeffi")->sampled);
}

TEST(Report, DeterministicJsonAndCsv) {
    SuiteOptions o;
    o.jobs = 4;
    const Report a = run_suite(default_params(2, 2, 2), o);
    o.jobs = 1;
    const Report b = run_suite(default_params(2, 2, 2), o);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_EQ(a.to_csv(), b.to_csv());
    const Json j = a.to_json();
    EXPECT_EQ(j["schema_version"], schema_version);
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_FALSE(j["checks"][0].contains("seconds"));
    EXPECT_TRUE(a.to_json(true)["checks"][0].contains("seconds"));
}

TEST(Report, OracleChecksRespectDimensionBound) {
    SuiteOptions o = scoped({"wordbasis"});
    o.max_dim = 5;
    EXPECT_THROW(run_suite(default_params(2, 2, 2), o), DimensionBoundExceeded);
    SuiteOptions no_oracle = scoped({"orth"});
    no_oracle.max_dim = 5;
    EXPECT_TRUE(run_suite(default_params(2, 2, 2), no_oracle).all_passed());
}

TEST(Registry, NamesUniqueWithStatements) {
    std::set<std::string> names;
    for (const auto& c : check_registry()) {
        EXPECT_TRUE(names.insert(c.name).second) << c.name;
        EXPECT_FALSE(c.statement.empty()) << c.name;
    }
    for (const char* required : {"mainthm1", "orth", "mainthm3", "mainthm4", "mainthm5", "Astij", "htklx", "weightdecomp"})
        EXPECT_TRUE(names.count(required)) << required;
}

TEST(Oracles, CompositionsCount) {
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(checks::compositions(k).size(), std::size_t{1} << (k - 1));
}
