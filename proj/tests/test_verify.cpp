#include "support.hpp"

using namespace diracepr;
using namespace diracepr::test;

TEST(Verify, DefaultRunPasses)
{
    VerifyConfig cfg;
    RunReport const r = run_verify(cfg);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks_failed, 0);
    EXPECT_GT(r.checks_passed, 30);
    EXPECT_LT(r.wall_seconds, 10.0);
    std::vector<std::string> suites;
    for (auto const& s : r.suites)
    {
        suites.push_back(s.suite);
        for (auto const& c : s.checks)
            EXPECT_TRUE(c.passed()) << s.suite << ": " << c.name << " " << c.max_error;
    }
    EXPECT_EQ(suites, (std::vector<std::string>{"clifford", "lorentz", "amplitudes", "spin",
                                                "states", "correlations"}));
}

TEST(Verify, SingleSampleStillChecksEverything)
{
    VerifyConfig small;
    small.samples = 1;
    VerifyConfig full;
    RunReport const a = run_verify(small);
    RunReport const b = run_verify(full);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.checks_passed + a.checks_failed, b.checks_passed + b.checks_failed);
}

TEST(Verify, ToleranceOverrideForcesFailure)
{
    VerifyConfig cfg;
    cfg.samples = 10;
    cfg.tolerance_override = 1e-30;
    RunReport const r = run_verify(cfg);
    EXPECT_FALSE(r.ok());
    EXPECT_GT(r.checks_failed, 0);
}

TEST(Verify, Reproducible)
{
    VerifyConfig cfg;
    cfg.samples = 50;
    RunReport const a = run_verify(cfg);
    RunReport const b = run_verify(cfg);
    EXPECT_EQ(a.max_error, b.max_error);
    cfg.samples = 0;
    expect_error([&] { run_verify(cfg); }, Errc::invalid_argument);
}
