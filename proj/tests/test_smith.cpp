#include <gtest/gtest.h>

#include <boost/integer/common_factor.hpp>

#include "hocolimkit/roster.hpp"
#include "hocolimkit/smith.hpp"

using namespace hocolimkit;

namespace
{

// Exact determinant by cofactor expansion; fine for k <= 5.
Integer det(std::vector<std::vector<Integer>> const& m)
{
    std::size_t const k = m.size();
    if (k == 0)
        return 1;
    if (k == 1)
        return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < k; ++c)
    {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < k; ++r)
        {
            std::vector<Integer> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(row);
        }
        Integer const t = m[0][c] * det(minor);
        total += c % 2 == 0 ? t : Integer(-t);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k)
    {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i)
    {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors as quotients of successive determinantal divisors
// (gcd of all k x k minors).
std::vector<Integer> factorsFromMinors(DenseMatrix const& a, Index rows, Index cols)
{
    std::vector<Integer> divisors{1};
    for (Index k = 1; k <= std::min(rows, cols); ++k)
    {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Integer g = 0;
        for (auto const& r : rs)
            for (auto const& c : cs)
            {
                std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j)
                        m[i][j] = a[r[i]][c[j]];
                g = boost::integer::gcd(g, Integer(abs(det(m))));
            }
        if (g == 0)
            break;
        divisors.push_back(g);
    }
    std::vector<Integer> f;
    for (std::size_t k = 1; k < divisors.size(); ++k)
        f.push_back(divisors[k] / divisors[k - 1]);
    return f;
}

SparseMatrix fromDense(DenseMatrix const& a, Index rows, Index cols)
{
    SparseMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            m.add(r, c, a[r][c]);
    return m;
}

} // namespace

TEST(Smith, ZeroMatrix)
{
    SmithResult const r = smithNormalForm(SparseMatrix(3, 4));
    EXPECT_TRUE(r.factors.empty());
    EXPECT_EQ(r.rank, 0u);
}

TEST(Smith, DiagTwoThree)
{
    SparseMatrix m(2, 2);
    m.add(0, 0, 2);
    m.add(1, 1, 3);
    SmithResult const r = smithNormalForm(m);
    EXPECT_EQ(r.factors, (std::vector<Integer>{1, 6}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Smith, BoundaryOfTriangleEdges)
{
    // vertices 0,1,2; edges 01, 02, 12 with d = target - source
    SparseMatrix m(3, 3);
    m.add(1, 0, 1), m.add(0, 0, -1);
    m.add(2, 1, 1), m.add(0, 1, -1);
    m.add(2, 2, 1), m.add(1, 2, -1);
    SmithResult const r = smithNormalForm(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.factors, (std::vector<Integer>{1, 1}));
}

TEST(Smith, RandomMatricesAgreeWithMinorOracle)
{
    for (Index t = 0; t < 300; ++t)
    {
        Rng rng = instanceRng(11, "smith", t);
        Index const rows = 1 + rng.below(5);
        Index const cols = 1 + rng.below(5);
        DenseMatrix a(rows, std::vector<Integer>(cols, 0));
        int const spread = t % 3 == 0 ? 2 : 9;
        for (auto& row : a)
            for (auto& v : row)
                if (rng.chance(2, 3))
                    v = static_cast<int>(rng.below(2 * spread + 1)) - spread;
        // make some instances rank deficient
        if (t % 4 == 0 && rows > 1)
            for (Index c = 0; c < cols; ++c)
                a[rows - 1][c] = 2 * a[0][c];
        SmithResult const r = smithNormalForm(fromDense(a, rows, cols));
        EXPECT_EQ(r.factors, factorsFromMinors(a, rows, cols)) << "instance " << t;
        for (std::size_t k = 1; k < r.factors.size(); ++k)
            EXPECT_EQ(r.factors[k] % r.factors[k - 1], 0) << "instance " << t;
    }
}

TEST(Smith, TransformsReproduceDiagonal)
{
    for (Index t = 0; t < 50; ++t)
    {
        Rng rng = instanceRng(12, "smith-transform", t);
        Index const rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        DenseMatrix a(rows, std::vector<Integer>(cols, 0));
        for (auto& row : a)
            for (auto& v : row)
                v = static_cast<int>(rng.below(11)) - 5;
        SmithDecomposition const s = smithWithTransforms(a, rows, cols);
        // left * a * right == diagonal
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
            {
                Integer v = 0;
                for (Index k = 0; k < rows; ++k)
                    for (Index l = 0; l < cols; ++l)
                        v += s.left[i][k] * a[k][l] * s.right[l][j];
                EXPECT_EQ(v, s.diagonal[i][j]);
                if (i != j)
                {
                    EXPECT_EQ(s.diagonal[i][j], 0);
                }
            }
    }
}

TEST(Smith, LargeEntriesStayExact)
{
    // Entries far past 64 bits.
    SparseMatrix m(2, 2);
    Integer const big = Integer(1) << 100;
    m.add(0, 0, big);
    m.add(0, 1, big + 1);
    m.add(1, 0, big - 1);
    m.add(1, 1, big);
    SmithResult const r = smithNormalForm(m);
    EXPECT_EQ(r.factors, (std::vector<Integer>{1, 1}));   // det = 1
}

TEST(Lattice, KernelAndMembership)
{
    SparseMatrix m(2, 3);
    m.add(0, 0, 2), m.add(0, 1, 4), m.add(1, 2, 3);
    auto const k = integerKernel(m);
    ASSERT_EQ(k.size(), 1u);
    Integer const x = k[0][0], y = k[0][1], z = k[0][2];
    EXPECT_EQ(2 * x + 4 * y, 0);
    EXPECT_EQ(z, 0);
    ColumnLattice const lat(m);
    EXPECT_TRUE(lat.contains({2, 3}));
    EXPECT_TRUE(lat.contains({6, -3}));
    EXPECT_FALSE(lat.contains({1, 0}));
    EXPECT_FALSE(lat.contains({2, 1}));
}
