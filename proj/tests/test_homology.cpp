#include <gtest/gtest.h>

#include <numeric>

#include "hocolimkit/homology.hpp"
#include "hocolimkit/roster.hpp"

using namespace hocolimkit;

namespace
{

SSet gluedIntervalCircle(int cap)
{
    return quotient(standardSimplex(1, cap), std::vector<RelationPair>{{0, 0, 1}}).quotient;
}

// The same simplicial set with every degree reindexed by a random permutation.
SSet relabel(SSet const& x, Rng& rng)
{
    std::vector<std::vector<Index>> perm(x.cap + 1);
    for (int n = 0; n <= x.cap; ++n)
    {
        perm[n].resize(x.sizes[n]);
        std::iota(perm[n].begin(), perm[n].end(), 0);
        for (Index k = perm[n].size(); k > 1; --k)
            std::swap(perm[n][k - 1], perm[n][rng.below(k)]);
    }
    SSet y = SSet::allocate(x.cap, x.sizes);
    for (int n = 0; n <= x.cap; ++n)
        for (Index s = 0; s < x.sizes[n]; ++s)
        {
            for (int i = 0; n > 0 && i <= n; ++i)
                y.faces[n][i][perm[n][s]] = perm[n - 1][x.face(n, i, s)];
            for (int j = 0; n < x.cap && j <= n; ++j)
                y.degeneracies[n][j][perm[n][s]] = perm[n + 1][x.degeneracy(n, j, s)];
        }
    return y;
}

std::vector<SSet> samples(int cap)
{
    std::vector<SSet> xs = {point(cap),
                            standardSimplex(2, cap),
                            boundarySimplex(2, cap),
                            boundarySimplex(3, cap),
                            gluedIntervalCircle(cap),
                            product(boundarySimplex(2, cap), boundarySimplex(2, cap)),
                            coproduct(std::vector<SSet>{point(cap), boundarySimplex(2, cap)}, cap).sum};
    for (auto const& c : curatedCategories())
        xs.push_back(nerve(c.category, cap).sset);
    return xs;
}

} // namespace

TEST(Chains, Dims)
{
    EXPECT_EQ(normalizedChains(point(3)).dims, (std::vector<Index>{1, 0, 0, 0}));
    EXPECT_EQ(normalizedChains(boundarySimplex(2, 2)).dims, (std::vector<Index>{3, 3, 0}));
    EXPECT_EQ(normalizedChains(product(standardSimplex(1, 2), standardSimplex(1, 2))).dims,
              (std::vector<Index>{4, 5, 2}));
}

TEST(Chains, BoundarySquaresToZero)
{
    for (auto const& x : samples(4))
        EXPECT_TRUE(boundarySquaresToZero(normalizedChains(x)));
}

TEST(Homology, BoundaryOfTriangle)
{
    EXPECT_EQ(describe(homologyOf(boundarySimplex(2, 3))), "H0 = Z, H1 = Z, H2 = 0");
}

TEST(Homology, SimplicesAreAcyclic)
{
    for (int k = 0; k <= 3; ++k)
    {
        HomologySummary const h = homologyOf(standardSimplex(k, 4));
        EXPECT_EQ(h.bettiNumbers(), (std::vector<Index>{1, 0, 0, 0}));
        for (auto const& d : h.degrees)
            EXPECT_TRUE(d.torsion.empty());
    }
}

TEST(Homology, GluedIntervalIsACircle)
{
    EXPECT_EQ(describe(homologyOf(gluedIntervalCircle(3))), "H0 = Z, H1 = Z, H2 = 0");
}

TEST(Homology, SphereAndTorus)
{
    EXPECT_EQ(homologyOf(boundarySimplex(3, 4)).bettiNumbers(), (std::vector<Index>{1, 0, 1, 0}));
    SSet const t = product(boundarySimplex(2, 3), boundarySimplex(2, 3));
    EXPECT_EQ(homologyOf(t).bettiNumbers(), (std::vector<Index>{1, 2, 1}));
}

TEST(Homology, TorsionFromComplex)
{
    ChainComplex c;
    c.top = 2;
    c.dims = {1, 1, 1};
    c.boundary.emplace_back(0, 1);
    c.boundary.emplace_back(1, 1);
    SparseMatrix d2(1, 1);
    d2.add(0, 0, 2);
    c.boundary.push_back(d2);
    HomologySummary const h = homologyOfComplex(c, 1);
    EXPECT_EQ(describe(h), "H0 = Z, H1 = Z/2");
    ASSERT_EQ(h.degrees[1].torsion.size(), 1u);
    EXPECT_EQ(h.degrees[1].torsion[0], 2);
}

TEST(Homology, BeyondCapRejected)
{
    EXPECT_THROW(homologyOf(point(2), 2), CapError);
}

TEST(Homology, RelabelInvariance)
{
    Index k = 0;
    for (auto const& x : samples(3))
    {
        Rng rng = instanceRng(3, "relabel", k++);
        SSet const y = relabel(x, rng);
        ASSERT_FALSE(auditSSet(y).has_value());
        EXPECT_EQ(homologyOf(y), homologyOf(x));
    }
}

TEST(Homology, EulerCharacteristic)
{
    for (auto const& x : samples(4))
    {
        int const top = x.cap - 1;
        ChainComplex const c = normalizedChains(x);
        HomologySummary const h = homologyOfComplex(c, top);
        long long alt = 0;
        bool torsionFree = true;
        for (auto const& d : h.degrees)
        {
            alt += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(d.betti);
            torsionFree = torsionFree && d.torsion.empty();
        }
        // chain groups above `top` are cut off; their image in degree top
        // has to be added back
        long long const cut = static_cast<long long>(smithNormalForm(c.boundary[top + 1]).rank);
        if (torsionFree)
        {
            EXPECT_EQ(eulerCharacteristic(c, top), alt + (top % 2 == 0 ? 1 : -1) * cut);
        }
    }
}

TEST(QuasiIso, Identity)
{
    auto const x = share(boundarySimplex(2, 3));
    EXPECT_EQ(isQuasiIsoInRange(identityMap(x), 1).status, "true");
}

TEST(QuasiIso, PointIntoTwoPoints)
{
    auto const pt = share(point(3));
    auto const two = share(boundarySimplex(1, 3));
    Verdict const v = isQuasiIsoInRange(constantMap(pt, two, 0), 1);
    EXPECT_EQ(v.status, "false");
    EXPECT_FALSE(v.positive());
}

TEST(QuasiIso, CollapseSimplex)
{
    auto const d2 = share(standardSimplex(2, 4));
    EXPECT_EQ(isQuasiIsoInRange(constantMap(d2, share(point(4)), 0), 2).status, "true");
}

TEST(QuasiIso, CircleToPointRefuted)
{
    auto const c = share(boundarySimplex(2, 3));
    Verdict const v = isQuasiIsoInRange(constantMap(c, share(point(3)), 0), 1);
    EXPECT_EQ(v.status, "false");
}

TEST(QuasiIso, RangeNeedsHeadroom)
{
    auto const x = share(point(2));
    EXPECT_THROW(isQuasiIsoInRange(identityMap(x), 1), CapError);
}

TEST(EqualOnHomology, VertexMaps)
{
    auto const pt = share(point(2));
    auto const d1 = share(standardSimplex(1, 2));
    auto const two = share(boundarySimplex(1, 2));
    EXPECT_EQ(equalOnHomology(constantMap(pt, d1, 0), constantMap(pt, d1, 1), 1).status, "true");
    EXPECT_EQ(equalOnHomology(constantMap(pt, two, 0), constantMap(pt, two, 1), 1).status, "false");
}

TEST(Contractible, Verdicts)
{
    EXPECT_EQ(isContractibleInRange(standardSimplex(2, 3)).status, "passes-necessary-conditions");
    EXPECT_EQ(isContractibleInRange(boundarySimplex(2, 3)).status, "certified-fail");
    EXPECT_EQ(isContractibleInRange(SSet::allocate(2, {0, 0, 0})).status, "certified-fail");
}

TEST(Cofinality, VertexInclusions)
{
    FinCat const p1 = posetCategory(1);
    EXPECT_TRUE(checkHomotopyRightCofinal(objectInclusion(p1, 1), 3).passes());
    CofinalityReport const r = checkHomotopyRightCofinal(objectInclusion(p1, 0), 3);
    EXPECT_FALSE(r.passes());
    ASSERT_EQ(r.objects.size(), 2u);
    EXPECT_EQ(r.objects[0].verdict.status, "passes-necessary-conditions");
    EXPECT_EQ(r.objects[1].object, "1");
    EXPECT_EQ(r.objects[1].verdict.status, "certified-fail");
}

TEST(Cofinality, UndercategoryToPoint)
{
    // (I/i) has an initial object, so I/i -> [0] is cofinal for every i
    for (auto const& c : curatedCategories())
        for (Index i = 0; i < c.category.objectCount(); ++i)
        {
            Comma const u = commaUnder(i, identityFunctor(c.category));
            EXPECT_TRUE(checkHomotopyRightCofinal(toPoint(u.category), 3).passes()) << c.name;
        }
}
