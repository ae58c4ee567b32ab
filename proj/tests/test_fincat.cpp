#include <gtest/gtest.h>

#include <set>

#include "hocolimkit/fincat.hpp"
#include "hocolimkit/roster.hpp"

using namespace hocolimkit;

namespace
{

// Number of composable chains of length n: the sum of all entries of A^n,
// where A[x][y] = |hom(x, y)|. Computed without touching the nerve code.
std::vector<Index> chainCountsByMatrixPowers(FinCat const& c, int cap)
{
    Index const k = c.objectCount();
    std::vector<std::vector<Index>> a(k, std::vector<Index>(k, 0));
    for (auto const& m : c.morphisms)
        ++a[m.src][m.tgt];
    std::vector<std::vector<Index>> power(k, std::vector<Index>(k, 0));
    for (Index x = 0; x < k; ++x)
        power[x][x] = 1;
    std::vector<Index> out;
    for (int n = 0; n <= cap; ++n)
    {
        Index total = 0;
        for (auto const& r : power)
            for (Index v : r)
                total += v;
        out.push_back(total);
        std::vector<std::vector<Index>> next(k, std::vector<Index>(k, 0));
        for (Index x = 0; x < k; ++x)
            for (Index y = 0; y < k; ++y)
                for (Index z = 0; z < k; ++z)
                    next[x][z] += power[x][y] * a[y][z];
        power = std::move(next);
    }
    return out;
}

std::vector<FinCat> sampleCategories()
{
    std::vector<FinCat> cs;
    for (auto const& nc : curatedCategories())
        cs.push_back(nc.category);
    for (Index k = 0; k < 25; ++k)
    {
        Rng rng = instanceRng(7, "fincat-test", k);
        cs.push_back(randomCategory(rng).category);
    }
    return cs;
}

} // namespace

TEST(Validate, PosetOnePasses)
{
    EXPECT_TRUE(validateCategory(posetCategory(1)).ok);
}

TEST(Validate, BrokenRightIdentityNamesThePair)
{
    FinCat c = FinCat::fromTables({"a", "b"}, {{"l", "b", "a"}, {"m", "b", "a"}}, {{"l", "id_b", "m"}});
    ValidationReport const r = validateCategory(c);
    EXPECT_FALSE(r.ok);
    ASSERT_EQ(r.witness.size(), 2u);
    EXPECT_EQ(r.witness[0], "l");
    EXPECT_EQ(r.witness[1], "id_b");
}

TEST(Validate, SpanWithFiveMorphismsPasses)
{
    FinCat const s = spanCategory();
    EXPECT_EQ(s.morphismCount(), 5u);
    EXPECT_TRUE(validateCategory(s).ok);
}

TEST(Validate, MissingCompositeIsASchemaError)
{
    try
    {
        FinCat::fromTables({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}, {"h", "x", "z"}}, {});
        FAIL() << "expected SchemaError";
    }
    catch (SchemaError const& e)
    {
        EXPECT_NE(std::string(e.what()).find("(g, f)"), std::string::npos) << e.what();
    }
}

TEST(Validate, DuplicateObjectRejected)
{
    EXPECT_THROW(FinCat::fromTables({"a", "a"}, {}, {}), SchemaError);
}

TEST(Validate, GeneratedCategoriesPass)
{
    for (auto const& c : sampleCategories())
        EXPECT_TRUE(validateCategory(c).ok) << c.objects.size();
}

TEST(Constructors, Counts)
{
    FinCat const p1 = posetCategory(1);
    EXPECT_EQ(p1.objectCount(), 2u);
    EXPECT_EQ(p1.morphismCount(), 3u);
    FinCat const sq = productCategory(p1, p1);
    EXPECT_EQ(sq.objectCount(), 4u);
    EXPECT_EQ(sq.morphismCount(), 9u);
    EXPECT_TRUE(validateCategory(sq).ok);
}

TEST(Constructors, OppositeIsAnInvolution)
{
    EXPECT_EQ(oppositeCategory(oppositeCategory(spanCategory())), spanCategory());
    for (auto const& c : sampleCategories())
        EXPECT_EQ(oppositeCategory(oppositeCategory(c)), c);
}

TEST(Comma, UnderIdentityOnSpanAtB)
{
    FinCat const s = spanCategory();
    Comma const u = commaUnder(s.objectIndex("b"), identityFunctor(s));
    std::set<std::string> names(u.category.objects.begin(), u.category.objects.end());
    EXPECT_EQ(names, (std::set<std::string>{"(b,id_b)", "(a,l)", "(c,r)"}));
    auto const init = initialObject(u.category);
    ASSERT_TRUE(init.has_value());
    EXPECT_EQ(u.category.objects[*init], "(b,id_b)");
}

TEST(Comma, UnderVertexInclusion)
{
    FinCat const p1 = posetCategory(1);
    EXPECT_EQ(commaUnder(1, objectInclusion(p1, 1)).category.objectCount(), 1u);
    EXPECT_EQ(commaUnder(1, objectInclusion(p1, 0)).category.objectCount(), 0u);
}

TEST(Comma, UnderIdentityHasInitialObject)
{
    for (auto const& c : sampleCategories())
        for (Index x = 0; x < c.objectCount(); ++x)
        {
            Comma const u = commaUnder(x, identityFunctor(c));
            EXPECT_TRUE(validateCategory(u.category).ok);
            auto const init = initialObject(u.category);
            ASSERT_TRUE(init.has_value());
            EXPECT_EQ(u.object[*init], x);
            EXPECT_EQ(u.arrow[*init], c.identity(x));
        }
}

TEST(Nerve, PosetOne)
{
    EXPECT_EQ(nerve(posetCategory(1), 2).sset.sizes, (std::vector<Index>{2, 3, 4}));
}

TEST(Nerve, DiscreteIsAllDegenerate)
{
    Nerve const nv = nerve(discreteCategory({"a", "b"}), 3);
    EXPECT_EQ(nv.sset.sizes, (std::vector<Index>{2, 2, 2, 2}));
    for (int n = 1; n <= 3; ++n)
        for (Index s = 0; s < 2; ++s)
            EXPECT_TRUE(nv.sset.isDegenerate(n, s));
}

TEST(Nerve, Span)
{
    EXPECT_EQ(nerve(spanCategory(), 2).sset.sizes, (std::vector<Index>{3, 5, 7}));
}

TEST(Nerve, SizesMatchMatrixPowerOracle)
{
    for (auto const& c : sampleCategories())
    {
        Nerve const nv = nerve(c, 3);
        EXPECT_EQ(nv.sset.sizes, chainCountsByMatrixPowers(c, 3));
        EXPECT_FALSE(auditSSet(nv.sset).has_value());
    }
}

TEST(Nerve, ProductIsProductOfNerves)
{
    std::vector<FinCat> const cs = {posetCategory(1), spanCategory(), parallelPairCategory(), idempotentCategory()};
    for (auto const& i : cs)
        for (auto const& j : cs)
        {
            int const cap = 2;
            FinCat const ij = productCategory(i, j);
            NerveMap const p = nerveOfFunctor(productProjection(i, j, true), cap);
            NerveMap const q = nerveOfFunctor(productProjection(i, j, false), cap);
            Nerve const ni = nerve(i, cap);
            Nerve const nj = nerve(j, cap);
            for (int n = 0; n <= cap; ++n)
            {
                // (p, q) must be a bijection onto N(I)_n x N(J)_n
                std::set<std::pair<Index, Index>> seen;
                for (Index s = 0; s < p.source.sset.sizes[n]; ++s)
                    seen.insert({p.map(n, s), q.map(n, s)});
                EXPECT_EQ(p.source.sset.sizes[n], ni.sset.sizes[n] * nj.sset.sizes[n]);
                EXPECT_EQ(seen.size(), p.source.sset.sizes[n]);
            }
            EXPECT_FALSE(auditMap(p.map).has_value());
            EXPECT_FALSE(auditMap(q.map).has_value());
            EXPECT_EQ(nerve(ij, cap).sset.sizes, p.source.sset.sizes);
        }
}

TEST(NerveOfFunctor, Identity)
{
    NerveMap const m = nerveOfFunctor(identityFunctor(spanCategory()), 2);
    EXPECT_TRUE(sameLevels(m.map, identityMap(share(m.source.sset))));
}

TEST(NerveOfFunctor, VertexInclusion)
{
    NerveMap const m = nerveOfFunctor(objectInclusion(posetCategory(1), 1), 2);
    for (int n = 0; n <= 2; ++n)
    {
        Chain const ch = m.target.chains[n][m.map(n, 0)];
        EXPECT_EQ(ch.start, 1u);
        for (Index a : ch.arrows)
            EXPECT_EQ(a, posetCategory(1).identity(1));
    }
}

TEST(NerveOfFunctor, ToPoint)
{
    NerveMap const m = nerveOfFunctor(toPoint(spanCategory()), 2);
    EXPECT_EQ(m.target.sset.sizes, (std::vector<Index>{1, 1, 1}));
    for (int n = 0; n <= 2; ++n)
        for (Index v : m.map.level[n])
            EXPECT_EQ(v, 0u);
}

TEST(Functor, AuditCatchesBrokenComposite)
{
    Functor f = identityFunctor(posetCategory(2));
    EXPECT_FALSE(auditFunctor(f).has_value());
    f.morMap[f.source.morphismIndex("0<2")] = f.source.morphismIndex("0<1");
    EXPECT_TRUE(auditFunctor(f).has_value());
}
