#include <gtest/gtest.h>

#include <set>

#include "hocolimkit/roster.hpp"

using namespace hocolimkit;

TEST(Rng, StreamsAreReproducibleAndDistinct)
{
    Rng a = instanceRng(0, "s", 3), b = instanceRng(0, "s", 3);
    Rng c = instanceRng(0, "t", 3), d = instanceRng(1, "s", 3);
    std::vector<Index> va, vb, vc, vd;
    for (int k = 0; k < 16; ++k)
    {
        va.push_back(a.below(1000));
        vb.push_back(b.below(1000));
        vc.push_back(c.below(1000));
        vd.push_back(d.below(1000));
    }
    EXPECT_EQ(va, vb);
    EXPECT_NE(va, vc);
    EXPECT_NE(va, vd);
}

TEST(Rng, BelowStaysInRangeAndCoversIt)
{
    Rng r = instanceRng(2, "range", 0);
    std::vector<int> hits(7, 0);
    for (int k = 0; k < 7000; ++k)
    {
        Index const v = r.below(7);
        ASSERT_LT(v, 7u);
        ++hits[v];
    }
    for (int h : hits)
        EXPECT_GT(h, 800);
}

TEST(Categories, RandomOnesRespectBounds)
{
    std::set<std::string> names;
    for (Index k = 0; k < 200; ++k)
    {
        Rng rng = instanceRng(0, "categories", k);
        NamedCategory const c = randomCategory(rng);
        EXPECT_LE(c.category.objectCount(), 4u);
        EXPECT_LE(c.category.morphismCount(), 12u);
        EXPECT_TRUE(validateCategory(c.category).ok) << c.name;
        names.insert(c.name);
    }
    // enough variety to exercise both generators
    EXPECT_GT(names.size(), 30u);
}

TEST(Categories, CuratedAreValid)
{
    for (auto const& c : curatedCategories())
        EXPECT_TRUE(validateCategory(c.category).ok) << c.name;
    EXPECT_TRUE(validateCategory(idempotentCategory()).ok);
    EXPECT_TRUE(validateCategory(cospanCategory()).ok);
}

TEST(Catalog, EntriesAndMapsAreValid)
{
    Catalog const cat(3, 30);
    ASSERT_GT(cat.size(), 2u);
    for (Index a = 0; a < cat.size(); ++a)
    {
        EXPECT_LE(cat.entry(a).value->totalSize(), 30u);
        EXPECT_FALSE(auditSSet(*cat.entry(a).value).has_value());
        for (Index b = 0; b < cat.size(); ++b)
            for (auto const& f : cat.maps(a, b))
                EXPECT_FALSE(auditMap(f).has_value()) << cat.entry(a).name << "->" << cat.entry(b).name;
    }
    EXPECT_THROW(cat.find("torus"), InputError);
}

TEST(Presentation, DerivesEveryMorphism)
{
    for (Index k = 0; k < 50; ++k)
    {
        Rng rng = instanceRng(0, "presentation", k);
        FinCat const c = randomCategory(rng).category;
        Presentation const p = presentation(c);
        Index nonIdentity = 0;
        for (Index m = 0; m < c.morphismCount(); ++m)
            nonIdentity += c.isIdentity(m) ? 0 : 1;
        EXPECT_EQ(p.order.size(), nonIdentity);
        for (Index m : p.order)
        {
            auto const [g, t] = p.derivation[m];
            if (g != npos)
            {
                EXPECT_EQ(c.compose(g, t), m);
            }
        }
    }
}

TEST(Diagrams, RandomOnesAreFunctorialAndSmall)
{
    Catalog const cat(3, 30);
    for (Index k = 0; k < 60; ++k)
    {
        Rng rng = instanceRng(0, "diagrams", k);
        NamedCategory const c = randomCategory(rng);
        NamedDiagram const d = randomDiagram(c, cat, rng);
        EXPECT_FALSE(auditDiagram(d.diagram).has_value()) << c.name;
        EXPECT_EQ(d.values.size(), c.category.objectCount());
        for (auto const& v : d.diagram.values)
            EXPECT_LE(v->totalSize(), 30u);
    }
}
