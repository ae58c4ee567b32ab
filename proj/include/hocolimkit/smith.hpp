// smith.hpp
//
// Exact Smith normal form over the integers.
//
// Strategy: sparse elimination on unit pivots first. Columns are visited in
// order of increasing fill; within a column the +-1 entry whose row is
// shortest is used (a Markowitz-style choice restricted to units), so the
// Schur-complement updates stay exact and small. Unit pivots contribute
// invariant factor 1 and never grow entries beyond the sums they create.
// Whatever is left without unit entries is compacted into a dense matrix
// and reduced with smallest-absolute-value pivoting, followed by the usual
// divisibility repair (add the offending row into the pivot row). All
// arithmetic uses arbitrary-precision integers.

#ifndef HOCOLIMKIT_SMITH_HPP
#define HOCOLIMKIT_SMITH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace hocolimkit
{

using Integer = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; entries within a column sorted by row.
struct SparseMatrix
{
    Index rows = 0;
    Index cols = 0;
    std::vector<std::vector<std::pair<Index, Integer>>> columns;

    SparseMatrix() = default;
    SparseMatrix(Index r, Index c) : rows(r), cols(c), columns(c) {}

    /// Adds v at (r, c), merging with an existing entry.
    void add(Index r, Index c, Integer const& v)
    {
        auto& col = columns[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](auto const& e, Index row) { return e.first < row; });
        if (it != col.end() && it->first == r)
        {
            it->second += v;
            if (it->second == 0)
                col.erase(it);
        }
        else if (v != 0)
            col.insert(it, {r, v});
    }

    Integer at(Index r, Index c) const
    {
        for (auto const& [row, v] : columns[c])
            if (row == r)
                return v;
        return 0;
    }

    Index nonzeros() const
    {
        Index n = 0;
        for (auto const& c : columns)
            n += c.size();
        return n;
    }
};

/// A * B for sparse matrices.
inline SparseMatrix multiply(SparseMatrix const& a, SparseMatrix const& b)
{
    if (a.cols != b.rows)
        throw InputError("matrix dimensions do not match");
    SparseMatrix out(a.rows, b.cols);
    for (Index c = 0; c < b.cols; ++c)
    {
        std::map<Index, Integer> acc;
        for (auto const& [k, v] : b.columns[c])
            for (auto const& [r, w] : a.columns[k])
                acc[r] += v * w;
        for (auto const& [r, v] : acc)
            if (v != 0)
                out.columns[c].push_back({r, v});
    }
    return out;
}

inline bool isZero(SparseMatrix const& m)
{
    for (auto const& c : m.columns)
        if (!c.empty())
            return false;
    return true;
}

using DenseMatrix = std::vector<std::vector<Integer>>;

inline DenseMatrix toDense(SparseMatrix const& m)
{
    DenseMatrix d(m.rows, std::vector<Integer>(m.cols, 0));
    for (Index c = 0; c < m.cols; ++c)
        for (auto const& [r, v] : m.columns[c])
            d[r][c] = v;
    return d;
}

inline DenseMatrix identityMatrix(Index n)
{
    DenseMatrix d(n, std::vector<Integer>(n, 0));
    for (Index i = 0; i < n; ++i)
        d[i][i] = 1;
    return d;
}

struct SmithResult
{
    std::vector<Integer> factors;   ///< positive invariant factors d_1 | d_2 | ...
    Index rank = 0;
};

namespace detail
{

/// In-place dense Smith reduction. When `left`/`right` are given they are
/// updated so that left * A_original * right = A_final.
inline void denseSmith(DenseMatrix& a, Index rows, Index cols, DenseMatrix* left, DenseMatrix* right)
{
    using boost::multiprecision::abs;
    auto swapRows = [&](Index i, Index j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        if (left)
            std::swap((*left)[i], (*left)[j]);
    };
    auto swapCols = [&](Index i, Index j) {
        if (i == j)
            return;
        for (Index r = 0; r < rows; ++r)
            std::swap(a[r][i], a[r][j]);
        if (right)
            for (auto& row : *right)
                std::swap(row[i], row[j]);
    };
    // row_i += q * row_j
    auto addRow = [&](Index i, Index j, Integer const& q) {
        for (Index c = 0; c < cols; ++c)
            if (a[j][c] != 0)
                a[i][c] += q * a[j][c];
        if (left)
            for (Index c = 0; c < left->size(); ++c)
                if ((*left)[j][c] != 0)
                    (*left)[i][c] += q * (*left)[j][c];
    };
    // col_i += q * col_j
    auto addCol = [&](Index i, Index j, Integer const& q) {
        for (Index r = 0; r < rows; ++r)
            if (a[r][j] != 0)
                a[r][i] += q * a[r][j];
        if (right)
            for (auto& row : *right)
                if (row[j] != 0)
                    row[i] += q * row[j];
    };
    Index const limit = std::min(rows, cols);
    for (Index t = 0; t < limit; ++t)
    {
        // smallest nonzero entry of the remaining block
        Index pr = npos, pc = npos;
        Integer best = 0;
        for (Index r = t; r < rows; ++r)
            for (Index c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr == npos || abs(a[r][c]) < best))
                {
                    best = abs(a[r][c]);
                    pr = r;
                    pc = c;
                    if (best == 1)
                        goto found;
                }
    found:
        if (pr == npos)
            return;
        swapRows(t, pr);
        swapCols(t, pc);
        while (true)
        {
            bool dirty = false;
            for (Index r = t + 1; r < rows; ++r)
                if (a[r][t] != 0)
                {
                    Integer const q = a[r][t] / a[t][t];
                    if (q != 0)
                        addRow(r, t, -q);
                    if (a[r][t] != 0)
                        dirty = true;
                }
            for (Index c = t + 1; c < cols; ++c)
                if (a[t][c] != 0)
                {
                    Integer const q = a[t][c] / a[t][t];
                    if (q != 0)
                        addCol(c, t, -q);
                    if (a[t][c] != 0)
                        dirty = true;
                }
            if (dirty)
            {
                // move the smallest remaining entry of row/column t to the pivot
                Index br = t, bc = t;
                Integer b = abs(a[t][t]);
                for (Index r = t + 1; r < rows; ++r)
                    if (a[r][t] != 0 && abs(a[r][t]) < b)
                        b = abs(a[r][t]), br = r, bc = t;
                for (Index c = t + 1; c < cols; ++c)
                    if (a[t][c] != 0 && abs(a[t][c]) < b)
                        b = abs(a[t][c]), br = t, bc = c;
                swapRows(t, br);
                swapCols(t, bc);
                continue;
            }
            Index bad = npos;
            for (Index r = t + 1; r < rows && bad == npos; ++r)
                for (Index c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0)
                    {
                        bad = r;
                        break;
                    }
            if (bad == npos)
                break;
            addRow(t, bad, 1);
        }
        if (a[t][t] < 0)
        {
            for (Index c = 0; c < cols; ++c)
                a[t][c] = -a[t][c];
            if (left)
                for (auto& v : (*left)[t])
                    v = -v;
        }
    }
}

} // namespace detail

/// Invariant factors and rank of an integer matrix.
inline SmithResult smithNormalForm(SparseMatrix const& m)
{
    using boost::multiprecision::abs;
    std::vector<std::map<Index, Integer>> col(m.cols);
    std::vector<std::set<Index>> rowCols(m.rows);
    for (Index c = 0; c < m.cols; ++c)
        for (auto const& [r, v] : m.columns[c])
            if (v != 0)
            {
                col[c][r] = v;
                rowCols[r].insert(c);
            }
    std::set<std::pair<Index, Index>> queue;   // (fill, column)
    std::vector<Index> queuedFill(m.cols, npos);
    std::vector<bool> alive(m.cols, true);
    auto enqueue = [&](Index c) {
        if (queuedFill[c] != npos)
            queue.erase({queuedFill[c], c});
        queuedFill[c] = npos;
        if (alive[c] && !col[c].empty())
        {
            queuedFill[c] = col[c].size();
            queue.insert({queuedFill[c], c});
        }
    };
    for (Index c = 0; c < m.cols; ++c)
        enqueue(c);

    Index units = 0;
    while (!queue.empty())
    {
        auto const [fill, c] = *queue.begin();
        queue.erase(queue.begin());
        queuedFill[c] = npos;
        Index pr = npos;
        for (auto const& [r, v] : col[c])
            if (abs(v) == 1 && (pr == npos || rowCols[r].size() < rowCols[pr].size()))
                pr = r;
        if (pr == npos)
            continue;   // re-queued if a later update touches it
        Integer const pivot = col[c][pr];
        std::vector<Index> others(rowCols[pr].begin(), rowCols[pr].end());
        for (Index c2 : others)
        {
            if (c2 == c)
                continue;
            Integer const factor = col[c2][pr] * pivot;
            for (auto const& [r, v] : col[c])
            {
                auto it = col[c2].find(r);
                Integer nv = (it == col[c2].end() ? Integer(0) : it->second) - factor * v;
                if (nv == 0)
                {
                    if (it != col[c2].end())
                    {
                        col[c2].erase(it);
                        rowCols[r].erase(c2);
                    }
                }
                else if (it == col[c2].end())
                {
                    col[c2][r] = nv;
                    rowCols[r].insert(c2);
                }
                else
                    it->second = nv;
            }
            enqueue(c2);
        }
        for (auto const& [r, v] : col[c])
            rowCols[r].erase(c);
        col[c].clear();
        alive[c] = false;
        ++units;
    }

    // dense remainder
    std::vector<Index> restCols;
    std::set<Index> restRowSet;
    for (Index c = 0; c < m.cols; ++c)
        if (alive[c] && !col[c].empty())
        {
            restCols.push_back(c);
            for (auto const& [r, v] : col[c])
                restRowSet.insert(r);
        }
    std::vector<Index> restRows(restRowSet.begin(), restRowSet.end());
    std::map<Index, Index> rowPos;
    for (Index i = 0; i < restRows.size(); ++i)
        rowPos[restRows[i]] = i;
    DenseMatrix d(restRows.size(), std::vector<Integer>(restCols.size(), 0));
    for (Index j = 0; j < restCols.size(); ++j)
        for (auto const& [r, v] : col[restCols[j]])
            d[rowPos[r]][j] = v;
    detail::denseSmith(d, restRows.size(), restCols.size(), nullptr, nullptr);

    SmithResult out;
    out.factors.assign(units, Integer(1));
    for (Index t = 0; t < std::min(restRows.size(), restCols.size()); ++t)
        if (d[t][t] != 0)
            out.factors.push_back(abs(d[t][t]));
    out.rank = out.factors.size();
    return out;
}

/// Dense Smith form with unimodular transforms: left * A * right = diag.
struct SmithDecomposition
{
    DenseMatrix left;
    DenseMatrix diagonal;
    DenseMatrix right;
    Index rank = 0;
};

inline SmithDecomposition smithWithTransforms(DenseMatrix a, Index rows, Index cols)
{
    SmithDecomposition out;
    out.left = identityMatrix(rows);
    out.right = identityMatrix(cols);
    detail::denseSmith(a, rows, cols, &out.left, &out.right);
    out.diagonal = std::move(a);
    for (Index t = 0; t < std::min(rows, cols); ++t)
        if (out.diagonal[t][t] != 0)
            ++out.rank;
    return out;
}

/// A Z-basis of the integer kernel of A (as columns).
inline std::vector<std::vector<Integer>> integerKernel(SparseMatrix const& a)
{
    auto const s = smithWithTransforms(toDense(a), a.rows, a.cols);
    std::vector<std::vector<Integer>> basis;
    for (Index k = s.rank; k < a.cols; ++k)
    {
        std::vector<Integer> v(a.cols);
        for (Index r = 0; r < a.cols; ++r)
            v[r] = s.right[r][k];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Decides membership of vectors in the integer column lattice of A.
class ColumnLattice
{
public:
    explicit ColumnLattice(SparseMatrix const& a)
        : rows_(a.rows), smith_(smithWithTransforms(toDense(a), a.rows, a.cols))
    {
    }

    bool contains(std::vector<Integer> const& y) const
    {
        for (Index i = 0; i < rows_; ++i)
        {
            Integer u = 0;
            for (Index k = 0; k < rows_; ++k)
                if (smith_.left[i][k] != 0 && y[k] != 0)
                    u += smith_.left[i][k] * y[k];
            if (i < smith_.rank)
            {
                if (u % smith_.diagonal[i][i] != 0)
                    return false;
            }
            else if (u != 0)
                return false;
        }
        return true;
    }

private:
    Index rows_;
    SmithDecomposition smith_;
};

} // namespace hocolimkit

#endif // HOCOLIMKIT_SMITH_HPP
