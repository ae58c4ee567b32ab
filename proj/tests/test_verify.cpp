#include <gtest/gtest.h>

#include "hocolimkit/verify.hpp"

using namespace hocolimkit;

namespace
{

std::string dump(std::vector<SuiteReport> const& rs)
{
    std::string out;
    for (auto const& r : rs)
        out += r.toJson().dump() + "\n";
    return out;
}

// Size of a suite's seeded random roster at its default count.
Index randomInstances(std::string const& suite)
{
    SuiteOptions opt;
    opt.curated = false;
    return runSuite(suite, opt).size();
}

} // namespace

class EverySuite : public ::testing::TestWithParam<std::string>
{
};

TEST_P(EverySuite, PassesAtSeedZero)
{
    auto const rs = runSuite(GetParam(), SuiteOptions{});
    SuiteSummary const s = summarize(rs);
    EXPECT_TRUE(s.ok());
    EXPECT_GT(s.pass, 0u);
    for (auto const& r : rs)
        EXPECT_NE(r.status, "fail") << r.toJson().dump();
}

TEST_P(EverySuite, ReportsAreIndependentOfThreadCount)
{
    SuiteOptions one, many;
    one.threads = 1;
    many.threads = 4;
    EXPECT_EQ(dump(runSuite(GetParam(), one)), dump(runSuite(GetParam(), many)));
}

TEST_P(EverySuite, OtherSeedsAlsoPass)
{
    SuiteOptions opt;
    opt.seed = 17;
    opt.curated = false;
    opt.randomCount = 8;
    auto const rs = runSuite(GetParam(), opt);
    EXPECT_TRUE(summarize(rs).ok()) << dump(rs);
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suiteNames()));

TEST(Suites, RosterSizes)
{
    EXPECT_GE(randomInstances("colim_augmentation"), 50u);
    EXPECT_GE(randomInstances("bar_decalage"), 50u);
    EXPECT_GE(suiteFubini(SuiteOptions{}).size(), 20u);
    EXPECT_GE(randomInstances("homotopy_invariance"), 20u);
}

TEST(Suites, QuillenControlsRefute)
{
    SuiteSummary const s = summarize(suiteQuillenA(SuiteOptions{}));
    EXPECT_GE(s.refuted, 3u);
}

TEST(Suites, SeedChangesRandomInstances)
{
    SuiteOptions a, b;
    a.curated = b.curated = false;
    a.randomCount = b.randomCount = 10;
    b.seed = 1;
    EXPECT_NE(dump(suiteColimAugmentation(a)), dump(suiteColimAugmentation(b)));
}

TEST(Suites, UnknownName)
{
    EXPECT_THROW(runSuite("nope", SuiteOptions{}), InputError);
}

TEST(Suites, CapGuard)
{
    EXPECT_THROW(detail::requireCap(2, 3, "test"), CapError);
    EXPECT_NO_THROW(detail::requireCap(4, 3, "test"));
}

TEST(Suites, DirectColimitOfSpanIsAPoint)
{
    EXPECT_EQ(directColimit(detail::spanCircleDiagram(2).diagram).quotient.sizes, (std::vector<Index>{1, 1, 1}));
}
