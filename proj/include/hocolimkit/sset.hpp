// sset.hpp
//
// Dimension-capped simplicial and bisimplicial sets.
//
// A simplicial set stores every simplex (degenerate ones included) in
// degrees 0..cap, with total face maps d_0..d_n out of degree n >= 1 and
// total degeneracy maps s_0..s_n out of degree n < cap. All constructions
// here are degreewise, so capping commutes with them.

#ifndef HOCOLIMKIT_SSET_HPP
#define HOCOLIMKIT_SSET_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "union_find.hpp"

namespace hocolimkit
{

using LevelMap = std::vector<Index>;

struct SSet
{
    int cap = 0;
    std::vector<Index> sizes;
    /// faces[n][i][x] = d_i x for 1 <= n <= cap; faces[0] is empty.
    std::vector<std::vector<LevelMap>> faces;
    /// degeneracies[n][j][x] = s_j x for 0 <= n < cap.
    std::vector<std::vector<LevelMap>> degeneracies;
    /// Optional human-readable identifiers, unique per degree.
    std::vector<std::vector<std::string>> labels;

    /// Allocates structure maps for the given degreewise sizes.
    static SSet allocate(int cap, std::vector<Index> sizes)
    {
        if (cap < 0)
            throw CapError("negative cap");
        if (sizes.size() != static_cast<std::size_t>(cap) + 1)
            throw SchemaError("size list does not match cap");
        SSet x;
        x.cap = cap;
        x.sizes = std::move(sizes);
        x.faces.resize(cap + 1);
        x.degeneracies.resize(cap + 1);
        for (int n = 1; n <= cap; ++n)
            x.faces[n].assign(n + 1, LevelMap(x.sizes[n], npos));
        for (int n = 0; n < cap; ++n)
            x.degeneracies[n].assign(n + 1, LevelMap(x.sizes[n], npos));
        return x;
    }

    Index size(int n) const { return sizes[n]; }
    Index face(int n, int i, Index s) const { return faces[n][i][s]; }
    Index degeneracy(int n, int j, Index s) const { return degeneracies[n][j][s]; }
    bool empty() const { return sizes.empty() || sizes[0] == 0; }

    Index totalSize() const
    {
        Index t = 0;
        for (Index s : sizes)
            t += s;
        return t;
    }

    std::string label(int n, Index s) const
    {
        if (labels.empty())
            return std::to_string(s);
        return labels[n][s];
    }

    /// True if s is in the image of some degeneracy out of degree n-1.
    bool isDegenerate(int n, Index s) const
    {
        if (n == 0)
            return false;
        for (int j = 0; j < n; ++j)
            for (Index y = 0; y < sizes[n - 1]; ++y)
                if (degeneracies[n - 1][j][y] == s)
                    return true;
        return false;
    }

    /// Per-degree flags marking degenerate simplices.
    std::vector<std::vector<bool>> degenerateFlags() const
    {
        std::vector<std::vector<bool>> flags(cap + 1);
        for (int n = 0; n <= cap; ++n)
            flags[n].assign(sizes[n], false);
        for (int n = 0; n < cap; ++n)
            for (auto const& s : degeneracies[n])
                for (Index y : s)
                    flags[n + 1][y] = true;
        return flags;
    }

    /// Vertex j of an n-simplex, obtained by deleting every other vertex.
    Index vertex(int n, Index s, int j) const
    {
        int k = n;
        while (k > j)
            s = faces[k][k][s], --k;
        while (k > 0)
            s = faces[k][0][s], --k;
        return s;
    }

    /// Structural equality (labels ignored).
    friend bool operator==(SSet const& a, SSet const& b)
    {
        return a.cap == b.cap && a.sizes == b.sizes && a.faces == b.faces
            && a.degeneracies == b.degeneracies;
    }
};

using SSetPtr = std::shared_ptr<SSet const>;

inline SSetPtr share(SSet x)
{
    return std::make_shared<SSet const>(std::move(x));
}

/// A degreewise map between two simplicial sets with equal caps.
struct SMap
{
    SSetPtr source;
    SSetPtr target;
    std::vector<LevelMap> level;

    Index operator()(int n, Index s) const { return level[n][s]; }
};

/// Degreewise equality of the underlying functions.
inline bool sameLevels(SMap const& f, SMap const& g)
{
    return f.level == g.level;
}

// ---------------------------------------------------------------------
// Audits

/// Checks ranges, the simplicial identities and injectivity of
/// degeneracies. Returns a description of the first violation.
inline std::optional<std::string> auditSSet(SSet const& x)
{
    auto fail = [](auto&&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        return std::optional<std::string>(os.str());
    };
    if (x.cap < 0 || x.sizes.size() != static_cast<std::size_t>(x.cap) + 1)
        return fail("bad cap/size table");
    for (int n = 1; n <= x.cap; ++n)
        for (int i = 0; i <= n; ++i)
        {
            if (x.faces[n][i].size() != x.sizes[n])
                return fail("face d", i, " in degree ", n, " has wrong length");
            for (Index v : x.faces[n][i])
                if (v >= x.sizes[n - 1])
                    return fail("face d", i, " in degree ", n, " out of range");
        }
    for (int n = 0; n < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
        {
            if (x.degeneracies[n][j].size() != x.sizes[n])
                return fail("degeneracy s", j, " in degree ", n, " has wrong length");
            for (Index v : x.degeneracies[n][j])
                if (v >= x.sizes[n + 1])
                    return fail("degeneracy s", j, " in degree ", n, " out of range");
        }
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= x.cap; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s)
                    if (x.face(n - 1, i, x.face(n, j, s)) != x.face(n - 1, j - 1, x.face(n, i, s)))
                        return fail("d", i, "d", j, " != d", j - 1, "d", i, " on simplex ", s, " of degree ", n);
    // d_i s_j identities on X_n -> X_n
    for (int n = 0; n < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s)
                {
                    Index const lhs = x.face(n + 1, i, x.degeneracy(n, j, s));
                    Index rhs;
                    if (i == j || i == j + 1)
                        rhs = s;
                    else if (i < j)
                        rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, s));
                    else
                        rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, s));
                    if (lhs != rhs)
                        return fail("d", i, "s", j, " identity fails on simplex ", s, " of degree ", n);
                }
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 1 < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s)
                    if (x.degeneracy(n + 1, i, x.degeneracy(n, j, s))
                        != x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, s)))
                        return fail("s", i, "s", j, " identity fails on simplex ", s, " of degree ", n);
    // injectivity of degeneracies (implied by d_j s_j = id, checked anyway)
    for (int n = 0; n < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
        {
            std::vector<bool> hit(x.sizes[n + 1], false);
            for (Index v : x.degeneracies[n][j])
            {
                if (hit[v])
                    return fail("degeneracy s", j, " in degree ", n, " is not injective");
                hit[v] = true;
            }
        }
    if (!x.labels.empty())
    {
        if (x.labels.size() != x.sizes.size())
            return fail("label table has wrong length");
        for (int n = 0; n <= x.cap; ++n)
            if (x.labels[n].size() != x.sizes[n])
                return fail("label list in degree ", n, " has wrong length");
    }
    return std::nullopt;
}

/// Checks that f is a simplicial map between its source and target.
inline std::optional<std::string> auditMap(SMap const& f)
{
    auto fail = [](auto&&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        return std::optional<std::string>(os.str());
    };
    if (!f.source || !f.target)
        return fail("map without source or target");
    SSet const& x = *f.source;
    SSet const& y = *f.target;
    if (x.cap != y.cap)
        return fail("caps differ: ", x.cap, " vs ", y.cap);
    if (f.level.size() != x.sizes.size())
        return fail("map has ", f.level.size(), " levels, expected ", x.sizes.size());
    for (int n = 0; n <= x.cap; ++n)
    {
        if (f.level[n].size() != x.sizes[n])
            return fail("level ", n, " has wrong length");
        for (Index v : f.level[n])
            if (v >= y.sizes[n])
                return fail("level ", n, " out of range");
    }
    for (int n = 1; n <= x.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (Index s = 0; s < x.sizes[n]; ++s)
                if (f(n - 1, x.face(n, i, s)) != y.face(n, i, f(n, s)))
                    return fail("map does not commute with d", i, " on simplex ", x.label(n, s), " of degree ", n);
    for (int n = 0; n < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (Index s = 0; s < x.sizes[n]; ++s)
                if (f(n + 1, x.degeneracy(n, j, s)) != y.degeneracy(n, j, f(n, s)))
                    return fail("map does not commute with s", j, " on simplex ", x.label(n, s), " of degree ", n);
    return std::nullopt;
}

inline void requireValid(SSet const& x, char const* what)
{
    if (auto err = auditSSet(x))
        throw InputError(std::string(what) + ": " + *err);
}

inline void requireValid(SMap const& f, char const* what)
{
    if (auto err = auditMap(f))
        throw InputError(std::string(what) + ": " + *err);
}

// ---------------------------------------------------------------------
// Maps

inline SMap identityMap(SSetPtr const& x)
{
    SMap f{x, x, {}};
    f.level.resize(x->cap + 1);
    for (int n = 0; n <= x->cap; ++n)
    {
        f.level[n].resize(x->sizes[n]);
        for (Index s = 0; s < x->sizes[n]; ++s)
            f.level[n][s] = s;
    }
    return f;
}

/// g after f.
inline SMap compose(SMap const& g, SMap const& f)
{
    SMap h{f.source, g.target, {}};
    h.level.resize(f.level.size());
    for (std::size_t n = 0; n < f.level.size(); ++n)
    {
        h.level[n].resize(f.level[n].size());
        for (Index s = 0; s < f.level[n].size(); ++s)
            h.level[n][s] = g.level[n][f.level[n][s]];
    }
    return h;
}

/// The totally degenerate simplex s_0 ... s_0 v in degree n.
inline Index degenerateVertex(SSet const& y, Index v, int n)
{
    for (int k = 0; k < n; ++k)
        v = y.degeneracy(k, 0, v);
    return v;
}

/// The map sending every simplex to the degeneracies of one vertex.
inline SMap constantMap(SSetPtr const& x, SSetPtr const& y, Index vertex)
{
    if (x->cap != y->cap)
        throw CapError("constant map between different caps");
    if (vertex >= y->sizes[0])
        throw SchemaError("constant map vertex out of range");
    SMap f{x, y, {}};
    f.level.resize(x->cap + 1);
    for (int n = 0; n <= x->cap; ++n)
        f.level[n].assign(x->sizes[n], degenerateVertex(*y, vertex, n));
    return f;
}

// ---------------------------------------------------------------------
// Basic simplicial sets

namespace detail
{

/// Builds the simplicial set whose n-simplices are the nondecreasing
/// sequences in {0..k} of length n+1 accepted by `keep`. `keep` must be
/// closed under deleting and repeating entries.
template<class Keep>
SSet monotoneSequences(int k, int cap, Keep keep)
{
    std::vector<std::vector<std::vector<int>>> seqs(cap + 1);
    std::vector<std::map<std::vector<int>, Index>> index(cap + 1);
    for (int n = 0; n <= cap; ++n)
    {
        std::vector<int> cur(n + 1, 0);
        while (true)
        {
            if (keep(cur))
            {
                index[n][cur] = seqs[n].size();
                seqs[n].push_back(cur);
            }
            int pos = n;
            while (pos >= 0 && cur[pos] == k)
                --pos;
            if (pos < 0)
                break;
            int const v = cur[pos] + 1;
            for (int q = pos; q <= n; ++q)
                cur[q] = v;
        }
    }
    std::vector<Index> sizes;
    for (auto const& s : seqs)
        sizes.push_back(s.size());
    SSet x = SSet::allocate(cap, sizes);
    x.labels.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (Index s = 0; s < seqs[n].size(); ++s)
        {
            auto const& seq = seqs[n][s];
            std::string name;
            for (int v : seq)
                name += std::to_string(v) + (k >= 10 ? "." : "");
            x.labels[n].push_back(name);
            if (n > 0)
                for (int i = 0; i <= n; ++i)
                {
                    auto f = seq;
                    f.erase(f.begin() + i);
                    x.faces[n][i][s] = index[n - 1].at(f);
                }
            if (n < cap)
                for (int j = 0; j <= n; ++j)
                {
                    auto d = seq;
                    d.insert(d.begin() + j, seq[j]);
                    x.degeneracies[n][j][s] = index[n + 1].at(d);
                }
        }
    return x;
}

} // namespace detail

/// The standard simplex: n-simplices are monotone maps [n] -> [k].
inline SSet standardSimplex(int k, int cap)
{
    if (k < 0)
        throw SchemaError("negative simplex dimension");
    return detail::monotoneSequences(k, cap, [](std::vector<int> const&) { return true; });
}

/// The boundary of the standard simplex: monotone maps [n] -> [k] that
/// miss some vertex.
inline SSet boundarySimplex(int k, int cap)
{
    if (k < 0)
        throw SchemaError("negative simplex dimension");
    return detail::monotoneSequences(k, cap, [k](std::vector<int> const& s) {
        std::vector<bool> seen(k + 1, false);
        for (int v : s)
            seen[v] = true;
        return std::find(seen.begin(), seen.end(), false) != seen.end();
    });
}

/// A disjoint union of `count` points.
inline SSet discreteSSet(Index count, int cap)
{
    SSet x = SSet::allocate(cap, std::vector<Index>(cap + 1, count));
    for (int n = 1; n <= cap; ++n)
        for (auto& d : x.faces[n])
            for (Index s = 0; s < count; ++s)
                d[s] = s;
    for (int n = 0; n < cap; ++n)
        for (auto& d : x.degeneracies[n])
            for (Index s = 0; s < count; ++s)
                d[s] = s;
    return x;
}

inline SSet point(int cap) { return discreteSSet(1, cap); }

/// The constant simplicial object on a set of the given size.
inline SSet constantSSet(Index count, int cap) { return discreteSSet(count, cap); }

/// The same simplicial set with degrees above `cap` dropped.
inline SSet truncate(SSet const& x, int cap)
{
    if (cap > x.cap)
        throw CapError("cannot truncate cap " + std::to_string(x.cap) + " to " + std::to_string(cap));
    SSet y = x;
    y.cap = cap;
    y.sizes.resize(cap + 1);
    y.faces.resize(cap + 1);
    y.degeneracies.resize(cap + 1);
    if (cap >= 0)
        y.degeneracies[cap].clear();
    if (!y.labels.empty())
        y.labels.resize(cap + 1);
    return y;
}

// ---------------------------------------------------------------------
// Coproducts, quotients, products

struct Coproduct
{
    SSet sum;
    /// offsets[c][n]: position of component c's degree-n simplices.
    std::vector<std::vector<Index>> offsets;

    SMap injection(std::size_t c, SSetPtr const& component, SSetPtr const& total) const
    {
        SMap f{component, total, {}};
        f.level.resize(component->cap + 1);
        for (int n = 0; n <= component->cap; ++n)
        {
            f.level[n].resize(component->sizes[n]);
            for (Index s = 0; s < component->sizes[n]; ++s)
                f.level[n][s] = offsets[c][n] + s;
        }
        return f;
    }
};

inline Coproduct coproduct(std::vector<SSet const*> const& parts, int cap)
{
    for (auto const* p : parts)
        if (p->cap != cap)
            throw CapError("coproduct of simplicial sets with different caps");
    Coproduct out;
    std::vector<Index> sizes(cap + 1, 0);
    out.offsets.resize(parts.size(), std::vector<Index>(cap + 1, 0));
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int n = 0; n <= cap; ++n)
        {
            out.offsets[c][n] = sizes[n];
            sizes[n] += parts[c]->sizes[n];
        }
    out.sum = SSet::allocate(cap, sizes);
    out.sum.labels.resize(cap + 1);
    for (std::size_t c = 0; c < parts.size(); ++c)
    {
        SSet const& x = *parts[c];
        auto const& off = out.offsets[c];
        for (int n = 0; n <= cap; ++n)
            for (Index s = 0; s < x.sizes[n]; ++s)
            {
                out.sum.labels[n].push_back(std::to_string(c) + ":" + x.label(n, s));
                for (int i = 0; n > 0 && i <= n; ++i)
                    out.sum.faces[n][i][off[n] + s] = off[n - 1] + x.face(n, i, s);
                for (int j = 0; n < cap && j <= n; ++j)
                    out.sum.degeneracies[n][j][off[n] + s] = off[n + 1] + x.degeneracy(n, j, s);
            }
    }
    return out;
}

inline Coproduct coproduct(std::vector<SSet> const& parts, int cap)
{
    std::vector<SSet const*> ptrs;
    for (auto const& p : parts)
        ptrs.push_back(&p);
    return coproduct(ptrs, cap);
}

struct RelationPair
{
    int degree;
    Index a;
    Index b;
};

struct Quotient
{
    SSet quotient;
    /// projection[n][s]: class of simplex s.
    std::vector<LevelMap> projection;
};

/// Closes an identification of simplices under every face and degeneracy
/// map and relabels classes. Each class keeps the label of its smallest
/// member.
inline Quotient quotientByClasses(SSet const& x, std::vector<UnionFind> classes)
{
    int const cap = x.cap;
    bool changed = true;
    while (changed)
    {
        changed = false;
        for (int n = 0; n <= cap; ++n)
            for (Index s = 0; s < x.sizes[n]; ++s)
            {
                Index const r = classes[n].find(s);
                if (r == s)
                    continue;
                for (int i = 0; n > 0 && i <= n; ++i)
                    changed |= classes[n - 1].unite(x.face(n, i, s), x.face(n, i, r));
                for (int j = 0; n < cap && j <= n; ++j)
                    changed |= classes[n + 1].unite(x.degeneracy(n, j, s), x.degeneracy(n, j, r));
            }
    }
    Quotient out;
    std::vector<std::vector<Index>> reps(cap + 1);
    out.projection.resize(cap + 1);
    std::vector<Index> sizes(cap + 1);
    for (int n = 0; n <= cap; ++n)
    {
        auto [lab, rep] = classes[n].classes();
        out.projection[n] = std::move(lab);
        reps[n] = std::move(rep);
        sizes[n] = reps[n].size();
    }
    out.quotient = SSet::allocate(cap, sizes);
    out.quotient.labels.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (Index c = 0; c < sizes[n]; ++c)
        {
            Index const s = reps[n][c];
            out.quotient.labels[n].push_back(x.label(n, s));
            for (int i = 0; n > 0 && i <= n; ++i)
                out.quotient.faces[n][i][c] = out.projection[n - 1][x.face(n, i, s)];
            for (int j = 0; n < cap && j <= n; ++j)
                out.quotient.degeneracies[n][j][c] = out.projection[n + 1][x.degeneracy(n, j, s)];
        }
    return out;
}

inline Quotient quotient(SSet const& x, std::vector<RelationPair> const& rel)
{
    std::vector<UnionFind> classes;
    for (int n = 0; n <= x.cap; ++n)
        classes.emplace_back(x.sizes[n]);
    for (auto const& p : rel)
    {
        if (p.degree < 0 || p.degree > x.cap)
            throw CapError("relation pair in degree " + std::to_string(p.degree) + " beyond cap");
        if (p.a >= x.sizes[p.degree] || p.b >= x.sizes[p.degree])
            throw SchemaError("relation pair refers to a missing simplex");
        classes[p.degree].unite(p.a, p.b);
    }
    return quotientByClasses(x, std::move(classes));
}

/// Relation pairs given as two simplices with their own degrees; pairs that
/// straddle degrees are rejected.
inline Quotient quotient(SSet const& x, std::vector<std::pair<std::pair<int, Index>, std::pair<int, Index>>> const& rel)
{
    std::vector<RelationPair> flat;
    for (auto const& [a, b] : rel)
    {
        if (a.first != b.first)
            throw SchemaError("relation pair across degrees " + std::to_string(a.first) + " and "
                              + std::to_string(b.first));
        flat.push_back({a.first, a.second, b.second});
    }
    return quotient(x, flat);
}

/// Levelwise product; the pair (a, b) in degree n has index a * |Y_n| + b.
/// For set-valued simplicial objects this is the tensor X (x) K.
inline SSet product(SSet const& x, SSet const& y)
{
    if (x.cap != y.cap)
        throw CapError("product of simplicial sets with different caps");
    int const cap = x.cap;
    std::vector<Index> sizes(cap + 1);
    for (int n = 0; n <= cap; ++n)
        sizes[n] = x.sizes[n] * y.sizes[n];
    SSet p = SSet::allocate(cap, sizes);
    p.labels.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
    {
        Index const ny = y.sizes[n];
        p.labels[n].reserve(sizes[n]);
        for (Index a = 0; a < x.sizes[n]; ++a)
            for (Index b = 0; b < ny; ++b)
            {
                Index const s = a * ny + b;
                p.labels[n].push_back("(" + x.label(n, a) + "," + y.label(n, b) + ")");
                for (int i = 0; n > 0 && i <= n; ++i)
                    p.faces[n][i][s] = x.face(n, i, a) * y.sizes[n - 1] + y.face(n, i, b);
                for (int j = 0; n < cap && j <= n; ++j)
                    p.degeneracies[n][j][s] = x.degeneracy(n, j, a) * y.sizes[n + 1] + y.degeneracy(n, j, b);
            }
    }
    return p;
}

/// The product of two maps, with (a, b) indexed as in product().
inline SMap productMap(SMap const& f, SMap const& g, SSetPtr const& source, SSetPtr const& target)
{
    SMap h{source, target, {}};
    h.level.resize(source->cap + 1);
    for (int n = 0; n <= source->cap; ++n)
    {
        Index const gs = g.source->sizes[n];
        Index const gt = g.target->sizes[n];
        h.level[n].resize(source->sizes[n]);
        for (Index a = 0; a < f.source->sizes[n]; ++a)
            for (Index b = 0; b < gs; ++b)
                h.level[n][a * gs + b] = f(n, a) * gt + g(n, b);
    }
    return h;
}

/// Projection of X x Y onto its first factor.
inline SMap projectFirst(SSetPtr const& prod, SSetPtr const& x, SSet const& y)
{
    SMap f{prod, x, {}};
    f.level.resize(prod->cap + 1);
    for (int n = 0; n <= prod->cap; ++n)
    {
        f.level[n].resize(prod->sizes[n]);
        for (Index s = 0; s < prod->sizes[n]; ++s)
            f.level[n][s] = s / y.sizes[n];
    }
    return f;
}

/// Projection of X x Y onto its second factor.
inline SMap projectSecond(SSetPtr const& prod, SSet const& x, SSetPtr const& y)
{
    (void)x;
    SMap f{prod, y, {}};
    f.level.resize(prod->cap + 1);
    for (int n = 0; n <= prod->cap; ++n)
    {
        f.level[n].resize(prod->sizes[n]);
        for (Index s = 0; s < prod->sizes[n]; ++s)
            f.level[n][s] = s % y->sizes[n];
    }
    return f;
}

// ---------------------------------------------------------------------
// Cylinders and homotopies

struct Cylinder
{
    SSetPtr cylinder;   ///< X x Delta[1]
    SSetPtr interval;   ///< Delta[1]
    SMap d0;            ///< X -> X x Delta[1] at vertex 1 (induced by d^0: [0] -> [1])
    SMap d1;            ///< X -> X x Delta[1] at vertex 0 (induced by d^1: [0] -> [1])
    SMap projection;    ///< X x Delta[1] -> X
};

inline Cylinder cylinderEnds(SSetPtr const& x)
{
    Cylinder c;
    c.interval = share(standardSimplex(1, x->cap));
    c.cylinder = share(product(*x, *c.interval));
    auto end = [&](Index vertex) {
        SMap f{x, c.cylinder, {}};
        f.level.resize(x->cap + 1);
        for (int n = 0; n <= x->cap; ++n)
        {
            Index const v = degenerateVertex(*c.interval, vertex, n);
            f.level[n].resize(x->sizes[n]);
            for (Index s = 0; s < x->sizes[n]; ++s)
                f.level[n][s] = s * c.interval->sizes[n] + v;
        }
        return f;
    };
    c.d0 = end(1);
    c.d1 = end(0);
    c.projection = projectFirst(c.cylinder, x, *c.interval);
    return c;
}

/// True iff h is a simplicial homotopy from f to g, i.e. h d0 = f and h d1 = g.
inline bool checkHomotopy(SMap const& h, SMap const& f, SMap const& g)
{
    if (!f.source || f.source->cap != h.source->cap)
        return false;
    if (auditMap(h))
        return false;
    Cylinder const c = cylinderEnds(f.source);
    if (!(*c.cylinder == *h.source))
        return false;
    return sameLevels(compose(h, c.d0), f) && sameLevels(compose(h, c.d1), g);
}

// ---------------------------------------------------------------------
// Extra degeneracies

enum class Side
{
    Low,   ///< s_{-1}
    High   ///< s_{n+1}
};

/// Candidate extra degeneracy of an augmentation eps: X -> c(A).
/// `onAugmentation` is A -> X_0 (s_{-1} resp. s_0 on the augmentation
/// object); `levels[n]` is X_n -> X_{n+1} for 0 <= n < cap.
struct ExtraDegeneracy
{
    Side side = Side::Low;
    LevelMap onAugmentation;
    std::vector<LevelMap> levels;
};

struct CheckResult
{
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }
};

/// Checks the extra-degeneracy identities within the cap.
///
/// Treat the augmented object as X_{-1} = A, X_0, X_1, ... with
/// d_0: X_0 -> X_{-1} given by eps. Extending the simplicial identities to
/// the extra index gives, for the low side (s_{-1}: X_n -> X_{n+1}, n >= -1):
///   d_0 s_{-1} = id,
///   d_i s_{-1} = s_{-1} d_{i-1}         (1 <= i <= n+1),
///   s_{-1} s_{-1} = s_0 s_{-1},
///   s_{j+1} s_{-1} = s_{-1} s_j          (0 <= j <= n),
/// and for the high side (s_{n+1}: X_n -> X_{n+1}, n >= -1):
///   d_{n+1} s_{n+1} = id,
///   d_i s_{n+1} = s_n d_i                 (0 <= i <= n),
///   s_{n+1} s_{n+1} = s_{n+2} s_{n+1},
///   s_i s_{n+1} = s_{n+2} s_i             (0 <= i <= n).
/// The augmentation itself must satisfy eps d_0 = eps d_1.
inline CheckResult checkExtraDegeneracy(SMap const& eps, ExtraDegeneracy const& s)
{
    auto fail = [](auto&&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        return CheckResult{false, os.str()};
    };
    SSet const& x = *eps.source;
    int const cap = x.cap;
    Index const augSize = eps.target->sizes[0];
    LevelMap const& aug = eps.level[0];
    if (s.onAugmentation.size() != augSize)
        throw SchemaError("extra degeneracy is missing its augmentation level");
    if (s.levels.size() < static_cast<std::size_t>(cap))
        throw SchemaError("extra degeneracy is missing levels (need " + std::to_string(cap) + ")");
    for (int n = 0; n < cap; ++n)
        if (s.levels[n].size() != x.sizes[n])
            throw SchemaError("extra degeneracy level " + std::to_string(n) + " has wrong length");
    for (Index v : s.onAugmentation)
        if (v >= x.sizes[0])
            throw SchemaError("extra degeneracy value out of range");
    for (int n = 0; n < cap; ++n)
        for (Index v : s.levels[n])
            if (v >= x.sizes[n + 1])
                throw SchemaError("extra degeneracy value out of range");

    for (Index t = 0; cap >= 1 && t < x.sizes[1]; ++t)
        if (aug[x.face(1, 0, t)] != aug[x.face(1, 1, t)])
            return fail("augmentation does not coequalize d0, d1 on 1-simplex ", x.label(1, t));

    // Faces and degeneracies of the augmented object, with degree -1 = A.
    auto face = [&](int n, int i, Index t) -> Index {
        return n == 0 ? aug[t] : x.face(n, i, t);
    };
    auto extra = [&](int n, Index t) -> Index {
        return n == -1 ? s.onAugmentation[t] : s.levels[n][t];
    };
    auto sizeAt = [&](int n) -> Index { return n == -1 ? augSize : x.sizes[n]; };

    if (s.side == Side::Low)
    {
        for (int n = -1; n < cap; ++n)
            for (Index t = 0; t < sizeAt(n); ++t)
            {
                Index const e = extra(n, t);
                if (face(n + 1, 0, e) != t)
                    return fail("d0 s_{-1} != id in degree ", n, " at ", t);
                for (int i = 1; i <= n + 1; ++i)
                    if (face(n + 1, i, e) != extra(n - 1, face(n, i - 1, t)))
                        return fail("d", i, " s_{-1} != s_{-1} d", i - 1, " in degree ", n, " at ", t);
                if (n + 2 <= cap)
                {
                    if (extra(n + 1, e) != x.degeneracy(n + 1, 0, e))
                        return fail("s_{-1} s_{-1} != s0 s_{-1} in degree ", n, " at ", t);
                    for (int j = 0; j <= n; ++j)
                        if (x.degeneracy(n + 1, j + 1, e) != extra(n + 1, x.degeneracy(n, j, t)))
                            return fail("s", j + 1, " s_{-1} != s_{-1} s", j, " in degree ", n, " at ", t);
                }
            }
    }
    else
    {
        for (int n = -1; n < cap; ++n)
            for (Index t = 0; t < sizeAt(n); ++t)
            {
                Index const e = extra(n, t);
                if (face(n + 1, n + 1, e) != t)
                    return fail("d", n + 1, " s", n + 1, " != id in degree ", n, " at ", t);
                for (int i = 0; i <= n; ++i)
                    if (face(n + 1, i, e) != extra(n - 1, face(n, i, t)))
                        return fail("d", i, " s", n + 1, " != s", n, " d", i, " in degree ", n, " at ", t);
                if (n + 2 <= cap)
                {
                    if (x.degeneracy(n + 1, n + 1, e) != extra(n + 1, e))
                        return fail("s", n + 1, " s", n + 1, " != s", n + 2, " s", n + 1, " in degree ", n, " at ", t);
                    for (int i = 0; i <= n; ++i)
                        if (x.degeneracy(n + 1, i, e) != extra(n + 1, x.degeneracy(n, i, t)))
                            return fail("s", i, " s", n + 1, " != s", n + 2, " s", i, " in degree ", n, " at ", t);
                }
            }
    }
    return {};
}

// ---------------------------------------------------------------------
// Opposites

/// Reverses vertex order: new d_i = old d_{n-i}, new s_j = old s_{n-j}.
inline SSet oppositeSSet(SSet const& x)
{
    SSet y = SSet::allocate(x.cap, x.sizes);
    y.labels = x.labels;
    for (int n = 1; n <= x.cap; ++n)
        for (int i = 0; i <= n; ++i)
            y.faces[n][i] = x.faces[n][n - i];
    for (int n = 0; n < x.cap; ++n)
        for (int j = 0; j <= n; ++j)
            y.degeneracies[n][j] = x.degeneracies[n][n - j];
    return y;
}

/// The same underlying map viewed between opposites.
inline SMap oppositeMap(SMap const& f, SSetPtr const& source, SSetPtr const& target)
{
    return SMap{source, target, f.level};
}

// ---------------------------------------------------------------------
// Bisimplicial sets

/// Bisimplicial set with bidegrees (n, m), 0 <= n <= hcap, 0 <= m <= vcap.
/// The first index is horizontal.
struct BiSSet
{
    int hcap = 0;
    int vcap = 0;
    std::vector<std::vector<Index>> sizes;                       // [n][m]
    std::vector<std::vector<std::vector<LevelMap>>> hfaces;      // [n][m][i]: (n,m) -> (n-1,m)
    std::vector<std::vector<std::vector<LevelMap>>> vfaces;      // [n][m][i]: (n,m) -> (n,m-1)
    std::vector<std::vector<std::vector<LevelMap>>> hdegens;     // [n][m][j]: (n,m) -> (n+1,m)
    std::vector<std::vector<std::vector<LevelMap>>> vdegens;     // [n][m][j]: (n,m) -> (n,m+1)
    std::vector<std::vector<std::vector<std::string>>> labels;   // optional [n][m][s]

    static BiSSet allocate(int hcap, int vcap, std::vector<std::vector<Index>> sizes)
    {
        if (hcap < 0 || vcap < 0)
            throw CapError("negative bisimplicial cap");
        BiSSet z;
        z.hcap = hcap;
        z.vcap = vcap;
        z.sizes = std::move(sizes);
        z.hfaces.resize(hcap + 1);
        z.vfaces.resize(hcap + 1);
        z.hdegens.resize(hcap + 1);
        z.vdegens.resize(hcap + 1);
        for (int n = 0; n <= hcap; ++n)
        {
            z.hfaces[n].resize(vcap + 1);
            z.vfaces[n].resize(vcap + 1);
            z.hdegens[n].resize(vcap + 1);
            z.vdegens[n].resize(vcap + 1);
            for (int m = 0; m <= vcap; ++m)
            {
                Index const sz = z.sizes[n][m];
                if (n > 0)
                    z.hfaces[n][m].assign(n + 1, LevelMap(sz, npos));
                if (m > 0)
                    z.vfaces[n][m].assign(m + 1, LevelMap(sz, npos));
                if (n < hcap)
                    z.hdegens[n][m].assign(n + 1, LevelMap(sz, npos));
                if (m < vcap)
                    z.vdegens[n][m].assign(m + 1, LevelMap(sz, npos));
            }
        }
        return z;
    }

    Index size(int n, int m) const { return sizes[n][m]; }

    std::string label(int n, int m, Index s) const
    {
        if (labels.empty())
            return std::to_string(s);
        return labels[n][m][s];
    }

    friend bool operator==(BiSSet const& a, BiSSet const& b)
    {
        return a.hcap == b.hcap && a.vcap == b.vcap && a.sizes == b.sizes && a.hfaces == b.hfaces
            && a.vfaces == b.vfaces && a.hdegens == b.hdegens && a.vdegens == b.vdegens;
    }
};

/// The horizontal simplicial set at vertical degree m.
inline SSet row(BiSSet const& z, int m)
{
    std::vector<Index> sizes;
    for (int n = 0; n <= z.hcap; ++n)
        sizes.push_back(z.sizes[n][m]);
    SSet x = SSet::allocate(z.hcap, sizes);
    for (int n = 1; n <= z.hcap; ++n)
        x.faces[n] = z.hfaces[n][m];
    for (int n = 0; n < z.hcap; ++n)
        x.degeneracies[n] = z.hdegens[n][m];
    if (!z.labels.empty())
    {
        x.labels.resize(z.hcap + 1);
        for (int n = 0; n <= z.hcap; ++n)
            x.labels[n] = z.labels[n][m];
    }
    return x;
}

/// The vertical simplicial set at horizontal degree n.
inline SSet column(BiSSet const& z, int n)
{
    SSet x = SSet::allocate(z.vcap, z.sizes[n]);
    for (int m = 1; m <= z.vcap; ++m)
        x.faces[m] = z.vfaces[n][m];
    for (int m = 0; m < z.vcap; ++m)
        x.degeneracies[m] = z.vdegens[n][m];
    if (!z.labels.empty())
        x.labels = z.labels[n];
    return x;
}

/// Simplicial identities in each direction plus commutation of horizontal
/// and vertical structure maps.
inline std::optional<std::string> auditBiSSet(BiSSet const& z)
{
    for (int m = 0; m <= z.vcap; ++m)
        if (auto err = auditSSet(row(z, m)))
            return "row " + std::to_string(m) + ": " + *err;
    for (int n = 0; n <= z.hcap; ++n)
        if (auto err = auditSSet(column(z, n)))
            return "column " + std::to_string(n) + ": " + *err;
    auto at = [](std::ostringstream& os, int n, int m, Index s) {
        os << " at bidegree (" << n << "," << m << ") simplex " << s;
    };
    for (int n = 0; n <= z.hcap; ++n)
        for (int m = 0; m <= z.vcap; ++m)
            for (Index s = 0; s < z.sizes[n][m]; ++s)
            {
                for (int i = 0; n > 0 && i <= n; ++i)
                {
                    Index const h = z.hfaces[n][m][i][s];
                    for (int k = 0; m > 0 && k <= m; ++k)
                        if (z.vfaces[n - 1][m][k][h] != z.hfaces[n][m - 1][i][z.vfaces[n][m][k][s]])
                        {
                            std::ostringstream os;
                            os << "horizontal d" << i << " and vertical d" << k << " do not commute";
                            at(os, n, m, s);
                            return os.str();
                        }
                    for (int k = 0; m < z.vcap && k <= m; ++k)
                        if (z.vdegens[n - 1][m][k][h] != z.hfaces[n][m + 1][i][z.vdegens[n][m][k][s]])
                        {
                            std::ostringstream os;
                            os << "horizontal d" << i << " and vertical s" << k << " do not commute";
                            at(os, n, m, s);
                            return os.str();
                        }
                }
                for (int j = 0; n < z.hcap && j <= n; ++j)
                {
                    Index const h = z.hdegens[n][m][j][s];
                    for (int k = 0; m > 0 && k <= m; ++k)
                        if (z.vfaces[n + 1][m][k][h] != z.hdegens[n][m - 1][j][z.vfaces[n][m][k][s]])
                        {
                            std::ostringstream os;
                            os << "horizontal s" << j << " and vertical d" << k << " do not commute";
                            at(os, n, m, s);
                            return os.str();
                        }
                    for (int k = 0; m < z.vcap && k <= m; ++k)
                        if (z.vdegens[n + 1][m][k][h] != z.hdegens[n][m + 1][j][z.vdegens[n][m][k][s]])
                        {
                            std::ostringstream os;
                            os << "horizontal s" << j << " and vertical s" << k << " do not commute";
                            at(os, n, m, s);
                            return os.str();
                        }
                }
            }
    return std::nullopt;
}

/// The diagonal: degree n is bidegree (n, n) with d_i = d_i^h d_i^v and
/// s_j = s_j^h s_j^v.
inline SSet diagonal(BiSSet const& z, int cap)
{
    if (cap < 0 || cap > z.hcap || cap > z.vcap)
        throw CapError("diagonal at cap " + std::to_string(cap) + " of a bisimplicial set with caps ("
                       + std::to_string(z.hcap) + "," + std::to_string(z.vcap) + ")");
    std::vector<Index> sizes;
    for (int n = 0; n <= cap; ++n)
        sizes.push_back(z.sizes[n][n]);
    SSet x = SSet::allocate(cap, sizes);
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (Index s = 0; s < sizes[n]; ++s)
                x.faces[n][i][s] = z.hfaces[n][n - 1][i][z.vfaces[n][n][i][s]];
    for (int n = 0; n < cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (Index s = 0; s < sizes[n]; ++s)
                x.degeneracies[n][j][s] = z.hdegens[n][n + 1][j][z.vdegens[n][n][j][s]];
    if (!z.labels.empty())
    {
        x.labels.resize(cap + 1);
        for (int n = 0; n <= cap; ++n)
            x.labels[n] = z.labels[n][n];
    }
    return x;
}

inline SSet diagonal(BiSSet const& z)
{
    return diagonal(z, std::min(z.hcap, z.vcap));
}

/// A bidegreewise map between bisimplicial sets.
struct BiMap
{
    std::vector<std::vector<LevelMap>> level;   // [n][m]
};

/// The diagonal of a bisimplicial map.
inline SMap diagonalMap(BiMap const& f, SSetPtr const& source, SSetPtr const& target)
{
    SMap g{source, target, {}};
    g.level.resize(source->cap + 1);
    for (int n = 0; n <= source->cap; ++n)
        g.level[n] = f.level[n][n];
    return g;
}

/// The bisimplicial set constant in the vertical direction: (n, m) -> Y_n.
inline BiSSet verticallyConstant(SSet const& y, int vcap)
{
    std::vector<std::vector<Index>> sizes(y.cap + 1);
    for (int n = 0; n <= y.cap; ++n)
        sizes[n].assign(vcap + 1, y.sizes[n]);
    BiSSet z = BiSSet::allocate(y.cap, vcap, sizes);
    for (int n = 0; n <= y.cap; ++n)
        for (int m = 0; m <= vcap; ++m)
        {
            for (int i = 0; n > 0 && i <= n; ++i)
                z.hfaces[n][m][i] = y.faces[n][i];
            for (int j = 0; n < y.cap && j <= n; ++j)
                z.hdegens[n][m][j] = y.degeneracies[n][j];
            for (int k = 0; m > 0 && k <= m; ++k)
                for (Index s = 0; s < y.sizes[n]; ++s)
                    z.vfaces[n][m][k][s] = s;
            for (int k = 0; m < vcap && k <= m; ++k)
                for (Index s = 0; s < y.sizes[n]; ++s)
                    z.vdegens[n][m][k][s] = s;
        }
    if (!y.labels.empty())
    {
        z.labels.resize(y.cap + 1);
        for (int n = 0; n <= y.cap; ++n)
            z.labels[n].assign(vcap + 1, y.labels[n]);
    }
    return z;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_SSET_HPP
