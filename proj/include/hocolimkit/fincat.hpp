// fincat.hpp
//
// Finite categories given by total composition tables, functors between
// them, products, opposites, comma categories and capped nerves.

#ifndef HOCOLIMKIT_FINCAT_HPP
#define HOCOLIMKIT_FINCAT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "sset.hpp"

namespace hocolimkit
{

struct Morphism
{
    std::string id;
    Index src = 0;
    Index tgt = 0;

    friend bool operator==(Morphism const&, Morphism const&) = default;
};

struct ComposeEntry
{
    std::string g;
    std::string f;
    std::string gf;
};

/// A finite category. `composeTable[g * |Mor| + f]` holds g o f when
/// tgt(f) = src(g) and npos otherwise.
class FinCat
{
public:
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<Index> identities;
    std::vector<Index> composeTable;

    Index objectCount() const { return objects.size(); }
    Index morphismCount() const { return morphisms.size(); }
    Index src(Index m) const { return morphisms[m].src; }
    Index tgt(Index m) const { return morphisms[m].tgt; }
    Index identity(Index x) const { return identities[x]; }
    bool isIdentity(Index m) const { return identities[morphisms[m].src] == m; }

    /// g o f; both must be composable.
    Index compose(Index g, Index f) const
    {
        Index const gf = composeTable[g * morphisms.size() + f];
        if (gf == npos)
            throw InputError("morphisms " + morphisms[g].id + " and " + morphisms[f].id + " are not composable");
        return gf;
    }

    /// Morphisms x -> y in index order.
    std::vector<Index> hom(Index x, Index y) const
    {
        std::vector<Index> out;
        for (Index m = 0; m < morphisms.size(); ++m)
            if (morphisms[m].src == x && morphisms[m].tgt == y)
                out.push_back(m);
        return out;
    }

    Index objectIndex(std::string const& name) const
    {
        for (Index x = 0; x < objects.size(); ++x)
            if (objects[x] == name)
                return x;
        throw SchemaError("unknown object '" + name + "'");
    }

    Index morphismIndex(std::string const& name) const
    {
        for (Index m = 0; m < morphisms.size(); ++m)
            if (morphisms[m].id == name)
                return m;
        throw SchemaError("unknown morphism '" + name + "'");
    }

    friend bool operator==(FinCat const&, FinCat const&) = default;

    /// Builds a category from objects, non-identity morphisms and composites
    /// of non-identity pairs. Identities are synthesized as "id_<object>";
    /// a listed morphism with that id and matching ends is taken as the
    /// identity. Entries naming identities override the implied composites,
    /// so that validateCategory() can report broken tables.
    static FinCat fromTables(std::vector<std::string> const& objects,
                             std::vector<std::tuple<std::string, std::string, std::string>> const& arrows,
                             std::vector<ComposeEntry> const& entries)
    {
        FinCat c;
        std::unordered_map<std::string, Index> objIndex;
        for (auto const& o : objects)
        {
            if (objIndex.count(o))
                throw SchemaError("duplicate object id '" + o + "'");
            objIndex[o] = c.objects.size();
            c.objects.push_back(o);
        }
        std::unordered_map<std::string, Index> morIndex;
        auto addMorphism = [&](std::string const& id, Index s, Index t) {
            if (morIndex.count(id))
                throw SchemaError("duplicate morphism id '" + id + "'");
            morIndex[id] = c.morphisms.size();
            c.morphisms.push_back({id, s, t});
        };
        auto objectOf = [&](std::string const& name, std::string const& role) {
            auto it = objIndex.find(name);
            if (it == objIndex.end())
                throw SchemaError("morphism " + role + " '" + name + "' is not an object");
            return it->second;
        };
        c.identities.assign(c.objects.size(), npos);
        std::vector<std::tuple<std::string, Index, Index>> rest;
        for (auto const& [id, s, t] : arrows)
        {
            Index const si = objectOf(s, "source");
            Index const ti = objectOf(t, "target");
            if (si == ti && id == "id_" + s)
            {
                addMorphism(id, si, ti);
                c.identities[si] = morIndex[id];
            }
            else
                rest.emplace_back(id, si, ti);
        }
        for (Index x = 0; x < c.objects.size(); ++x)
            if (c.identities[x] == npos)
            {
                addMorphism("id_" + c.objects[x], x, x);
                c.identities[x] = morIndex["id_" + c.objects[x]];
            }
        for (auto const& [id, s, t] : rest)
            addMorphism(id, s, t);

        Index const M = c.morphisms.size();
        c.composeTable.assign(M * M, npos);
        for (Index f = 0; f < M; ++f)
        {
            c.composeTable[c.identities[c.tgt(f)] * M + f] = f;
            c.composeTable[f * M + c.identities[c.src(f)]] = f;
        }
        auto morphismOf = [&](std::string const& name) {
            auto it = morIndex.find(name);
            if (it == morIndex.end())
                throw SchemaError("compose entry names unknown morphism '" + name + "'");
            return it->second;
        };
        std::vector<bool> given(M * M, false);
        for (auto const& e : entries)
        {
            Index const g = morphismOf(e.g);
            Index const f = morphismOf(e.f);
            Index const gf = morphismOf(e.gf);
            if (c.tgt(f) != c.src(g))
                throw SchemaError("compose entry (" + e.g + ", " + e.f + ") is not a composable pair");
            if (given[g * M + f] && c.composeTable[g * M + f] != gf)
                throw SchemaError("conflicting compose entries for (" + e.g + ", " + e.f + ")");
            given[g * M + f] = true;
            c.composeTable[g * M + f] = gf;
        }
        for (Index g = 0; g < M; ++g)
            for (Index f = 0; f < M; ++f)
                if (c.tgt(f) == c.src(g) && c.composeTable[g * M + f] == npos)
                    throw SchemaError("missing composite for pair (" + c.morphisms[g].id + ", "
                                      + c.morphisms[f].id + ")");
        return c;
    }
};

struct ValidationReport
{
    bool ok = true;
    std::string violation;
    std::vector<std::string> witness;   ///< offending morphism ids (g, f) or (h, g, f)
};

/// Checks typing, identity laws and associativity by exhaustive enumeration.
inline ValidationReport validateCategory(FinCat const& c)
{
    Index const M = c.morphisms.size();
    auto fail = [&](std::string what, std::vector<Index> const& ms) {
        ValidationReport r{false, std::move(what), {}};
        for (Index m : ms)
            r.witness.push_back(c.morphisms[m].id);
        return r;
    };
    {
        std::map<std::string, int> seen;
        for (auto const& m : c.morphisms)
            if (seen[m.id]++)
                throw SchemaError("duplicate morphism id '" + m.id + "'");
        std::map<std::string, int> seenObj;
        for (auto const& o : c.objects)
            if (seenObj[o]++)
                throw SchemaError("duplicate object id '" + o + "'");
    }
    if (c.identities.size() != c.objects.size() || c.composeTable.size() != M * M)
        return fail("table sizes inconsistent", {});
    for (Index x = 0; x < c.objects.size(); ++x)
    {
        Index const i = c.identities[x];
        if (i >= M || c.src(i) != x || c.tgt(i) != x)
            return fail("identity of " + c.objects[x] + " is not an endomorphism of it", {});
    }
    for (Index g = 0; g < M; ++g)
        for (Index f = 0; f < M; ++f)
        {
            Index const gf = c.composeTable[g * M + f];
            bool const composable = c.tgt(f) == c.src(g);
            if (composable != (gf != npos))
                return fail(composable ? "missing composite" : "composite defined on a non-composable pair", {g, f});
            if (gf != npos && (gf >= M || c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)))
                return fail("composite has wrong source or target", {g, f});
        }
    for (Index f = 0; f < M; ++f)
    {
        if (c.composeTable[c.identities[c.tgt(f)] * M + f] != f)
            return fail("left identity law fails", {c.identities[c.tgt(f)], f});
        if (c.composeTable[f * M + c.identities[c.src(f)]] != f)
            return fail("right identity law fails", {f, c.identities[c.src(f)]});
    }
    for (Index f = 0; f < M; ++f)
        for (Index g = 0; g < M; ++g)
        {
            if (c.tgt(f) != c.src(g))
                continue;
            Index const gf = c.composeTable[g * M + f];
            for (Index h = 0; h < M; ++h)
            {
                if (c.tgt(g) != c.src(h))
                    continue;
                Index const hg = c.composeTable[h * M + g];
                if (c.composeTable[h * M + gf] != c.composeTable[hg * M + f])
                    return fail("associativity fails", {h, g, f});
            }
        }
    return {};
}

// ---------------------------------------------------------------------
// Standard categories

/// The category associated with the ordered set {0 < 1 < ... < n}.
inline FinCat posetCategory(int n)
{
    if (n < 0)
        throw SchemaError("negative poset size");
    std::vector<std::string> objs;
    for (int i = 0; i <= n; ++i)
        objs.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    std::vector<ComposeEntry> comp;
    auto name = [](int a, int b) { return std::to_string(a) + "<" + std::to_string(b); };
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            arrows.emplace_back(name(a, b), std::to_string(a), std::to_string(b));
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                comp.push_back({name(b, c), name(a, b), name(a, c)});
    return FinCat::fromTables(objs, arrows, comp);
}

/// Objects only, identities only.
inline FinCat discreteCategory(std::vector<std::string> const& objects)
{
    return FinCat::fromTables(objects, {}, {});
}

/// a <- b -> c with arrows l: b -> a and r: b -> c.
inline FinCat spanCategory()
{
    return FinCat::fromTables({"a", "b", "c"}, {{"l", "b", "a"}, {"r", "b", "c"}}, {});
}

/// Two parallel arrows u, v: a -> b.
inline FinCat parallelPairCategory()
{
    return FinCat::fromTables({"a", "b"}, {{"u", "a", "b"}, {"v", "a", "b"}}, {});
}

/// The free category on a finite directed acyclic multigraph: morphisms are
/// paths. Edge k runs from edges[k].first to edges[k].second and must go
/// from a lower to a higher object index.
inline FinCat freeCategory(Index objectCount, std::vector<std::pair<Index, Index>> const& edges)
{
    for (auto const& [s, t] : edges)
        if (s >= t || t >= objectCount)
            throw SchemaError("free category edges must increase object index");
    std::vector<std::string> objs;
    for (Index x = 0; x < objectCount; ++x)
        objs.push_back("o" + std::to_string(x));
    // paths as edge lists, discovered by length
    std::vector<std::vector<Index>> paths;
    for (Index e = 0; e < edges.size(); ++e)
        paths.push_back({e});
    for (std::size_t p = 0; p < paths.size(); ++p)
        for (Index e = 0; e < edges.size(); ++e)
            if (edges[paths[p].back()].second == edges[e].first)
            {
                auto q = paths[p];
                q.push_back(e);
                paths.push_back(std::move(q));
            }
    auto pathName = [](std::vector<Index> const& path) {
        std::string s;
        for (std::size_t i = path.size(); i-- > 0;)
            s += (s.empty() ? "e" : ".e") + std::to_string(path[i]);
        return s;
    };
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    std::map<std::vector<Index>, std::string> names;
    for (auto const& path : paths)
    {
        names[path] = pathName(path);
        arrows.emplace_back(names[path], objs[edges[path.front()].first], objs[edges[path.back()].second]);
    }
    std::vector<ComposeEntry> comp;
    for (auto const& f : paths)
        for (auto const& g : paths)
            if (edges[f.back()].second == edges[g.front()].first)
            {
                auto gf = f;
                gf.insert(gf.end(), g.begin(), g.end());
                comp.push_back({names[g], names[f], names.at(gf)});
            }
    return FinCat::fromTables(objs, arrows, comp);
}

/// The product category; morphism (f, g) has index f * |Mor J| + g and
/// object (x, y) index x * |Ob J| + y.
inline FinCat productCategory(FinCat const& i, FinCat const& j)
{
    FinCat c;
    Index const oj = j.objectCount();
    Index const mj = j.morphismCount();
    for (auto const& x : i.objects)
        for (auto const& y : j.objects)
            c.objects.push_back("(" + x + "," + y + ")");
    for (Index f = 0; f < i.morphismCount(); ++f)
        for (Index g = 0; g < mj; ++g)
        {
            Index const s = i.src(f) * oj + j.src(g);
            Index const t = i.tgt(f) * oj + j.tgt(g);
            std::string id = (i.isIdentity(f) && j.isIdentity(g))
                ? "id_" + c.objects[s]
                : "(" + i.morphisms[f].id + "," + j.morphisms[g].id + ")";
            c.morphisms.push_back({std::move(id), s, t});
        }
    c.identities.resize(c.objects.size());
    for (Index x = 0; x < i.objectCount(); ++x)
        for (Index y = 0; y < oj; ++y)
            c.identities[x * oj + y] = i.identity(x) * mj + j.identity(y);
    Index const M = c.morphisms.size();
    Index const mi = i.morphismCount();
    c.composeTable.assign(M * M, npos);
    for (Index g1 = 0; g1 < mi; ++g1)
        for (Index f1 = 0; f1 < mi; ++f1)
        {
            Index const a = i.composeTable[g1 * mi + f1];
            if (a == npos)
                continue;
            for (Index g2 = 0; g2 < mj; ++g2)
                for (Index f2 = 0; f2 < mj; ++f2)
                {
                    Index const b = j.composeTable[g2 * mj + f2];
                    if (b != npos)
                        c.composeTable[(g1 * mj + g2) * M + (f1 * mj + f2)] = a * mj + b;
                }
        }
    return c;
}

/// Same ids, swapped ends, reversed composition.
inline FinCat oppositeCategory(FinCat const& c)
{
    FinCat o = c;
    Index const M = c.morphismCount();
    for (auto& m : o.morphisms)
        std::swap(m.src, m.tgt);
    for (Index g = 0; g < M; ++g)
        for (Index f = 0; f < M; ++f)
            o.composeTable[g * M + f] = c.composeTable[f * M + g];
    return o;
}

/// The full subcategory on the given objects (kept in the given order).
inline FinCat fullSubcategory(FinCat const& c, std::vector<Index> const& keep)
{
    FinCat s;
    std::vector<Index> objMap(c.objectCount(), npos);
    for (Index x : keep)
    {
        objMap[x] = s.objects.size();
        s.objects.push_back(c.objects[x]);
    }
    std::vector<Index> morMap(c.morphismCount(), npos);
    for (Index m = 0; m < c.morphismCount(); ++m)
        if (objMap[c.src(m)] != npos && objMap[c.tgt(m)] != npos)
        {
            morMap[m] = s.morphisms.size();
            s.morphisms.push_back({c.morphisms[m].id, objMap[c.src(m)], objMap[c.tgt(m)]});
        }
    for (Index x : keep)
        s.identities.push_back(morMap[c.identity(x)]);
    Index const M = s.morphismCount();
    s.composeTable.assign(M * M, npos);
    for (Index g = 0; g < c.morphismCount(); ++g)
        for (Index f = 0; f < c.morphismCount(); ++f)
            if (morMap[g] != npos && morMap[f] != npos && c.tgt(f) == c.src(g))
                s.composeTable[morMap[g] * M + morMap[f]] = morMap[c.compose(g, f)];
    return s;
}

/// An object with exactly one arrow from every object, if any.
inline std::optional<Index> terminalObject(FinCat const& c)
{
    for (Index t = 0; t < c.objectCount(); ++t)
    {
        bool ok = true;
        for (Index x = 0; x < c.objectCount() && ok; ++x)
            ok = c.hom(x, t).size() == 1;
        if (ok)
            return t;
    }
    return std::nullopt;
}

/// An object with exactly one arrow to every object, if any.
inline std::optional<Index> initialObject(FinCat const& c)
{
    for (Index t = 0; t < c.objectCount(); ++t)
    {
        bool ok = true;
        for (Index x = 0; x < c.objectCount() && ok; ++x)
            ok = c.hom(t, x).size() == 1;
        if (ok)
            return t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Functors

struct Functor
{
    FinCat source;
    FinCat target;
    std::vector<Index> objMap;
    std::vector<Index> morMap;
};

/// Checks ends, identities and composites against both tables.
inline std::optional<std::string> auditFunctor(Functor const& f)
{
    FinCat const& s = f.source;
    FinCat const& t = f.target;
    if (f.objMap.size() != s.objectCount() || f.morMap.size() != s.morphismCount())
        return "functor tables have wrong length";
    for (Index x : f.objMap)
        if (x >= t.objectCount())
            return "object image out of range";
    for (Index m : f.morMap)
        if (m >= t.morphismCount())
            return "morphism image out of range";
    for (Index m = 0; m < s.morphismCount(); ++m)
        if (t.src(f.morMap[m]) != f.objMap[s.src(m)] || t.tgt(f.morMap[m]) != f.objMap[s.tgt(m)])
            return "image of " + s.morphisms[m].id + " has wrong ends";
    for (Index x = 0; x < s.objectCount(); ++x)
        if (f.morMap[s.identity(x)] != t.identity(f.objMap[x]))
            return "identity of " + s.objects[x] + " not preserved";
    for (Index g = 0; g < s.morphismCount(); ++g)
        for (Index h = 0; h < s.morphismCount(); ++h)
            if (s.tgt(h) == s.src(g) && f.morMap[s.compose(g, h)] != t.compose(f.morMap[g], f.morMap[h]))
                return "composite (" + s.morphisms[g].id + ", " + s.morphisms[h].id + ") not preserved";
    return std::nullopt;
}

inline Functor identityFunctor(FinCat const& c)
{
    Functor f{c, c, {}, {}};
    for (Index x = 0; x < c.objectCount(); ++x)
        f.objMap.push_back(x);
    for (Index m = 0; m < c.morphismCount(); ++m)
        f.morMap.push_back(m);
    return f;
}

/// The unique functor to the one-object category [0].
inline Functor toPoint(FinCat const& c)
{
    FinCat const pt = posetCategory(0);
    return Functor{c, pt, std::vector<Index>(c.objectCount(), 0), std::vector<Index>(c.morphismCount(), 0)};
}

/// [0] -> c picking one object.
inline Functor objectInclusion(FinCat const& c, Index x)
{
    return Functor{posetCategory(0), c, {x}, {c.identity(x)}};
}

/// g after f.
inline Functor composeFunctors(Functor const& g, Functor const& f)
{
    Functor h{f.source, g.target, {}, {}};
    for (Index x : f.objMap)
        h.objMap.push_back(g.objMap[x]);
    for (Index m : f.morMap)
        h.morMap.push_back(g.morMap[m]);
    return h;
}

/// Projection I x J -> I (first = true) or I x J -> J.
inline Functor productProjection(FinCat const& i, FinCat const& j, bool first)
{
    Functor p{productCategory(i, j), first ? i : j, {}, {}};
    for (Index x = 0; x < i.objectCount(); ++x)
        for (Index y = 0; y < j.objectCount(); ++y)
            p.objMap.push_back(first ? x : y);
    for (Index f = 0; f < i.morphismCount(); ++f)
        for (Index g = 0; g < j.morphismCount(); ++g)
            p.morMap.push_back(first ? f : g);
    return p;
}

/// Inclusion of a full subcategory built by fullSubcategory(c, keep).
inline Functor subcategoryInclusion(FinCat const& c, std::vector<Index> const& keep)
{
    Functor f{fullSubcategory(c, keep), c, keep, {}};
    for (auto const& m : f.source.morphisms)
        f.morMap.push_back(c.morphismIndex(m.id));
    return f;
}

// ---------------------------------------------------------------------
// Comma categories

/// A comma category together with its forgetful functor to the source of
/// the functor it was built from. Object k is the pair (object[k], arrow[k]).
struct Comma
{
    FinCat category;
    Functor forget;
    std::vector<Index> object;
    std::vector<Index> arrow;
    std::vector<Index> morphism;   ///< underlying source-category arrow of each comma morphism
};

namespace detail
{

template<class Commutes>
Comma buildComma(Functor const& f, std::vector<std::pair<Index, Index>> const& pairs, Commutes commutes)
{
    FinCat const& I = f.source;
    FinCat const& J = f.target;
    Comma out;
    FinCat& c = out.category;
    for (auto const& [y, a] : pairs)
    {
        out.object.push_back(y);
        out.arrow.push_back(a);
        c.objects.push_back("(" + I.objects[y] + "," + J.morphisms[a].id + ")");
    }
    Index const n = pairs.size();
    c.identities.assign(n, npos);
    // identities first so that their ids are the canonical ones
    for (Index k = 0; k < n; ++k)
    {
        c.identities[k] = c.morphisms.size();
        c.morphisms.push_back({"id_" + c.objects[k], k, k});
        out.morphism.push_back(I.identity(pairs[k].first));
    }
    for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
            for (Index g : I.hom(pairs[k].first, pairs[l].first))
            {
                if (k == l && g == I.identity(pairs[k].first))
                    continue;
                if (!commutes(g, pairs[k].second, pairs[l].second))
                    continue;
                c.morphisms.push_back({I.morphisms[g].id + ":" + c.objects[k] + "->" + c.objects[l], k, l});
                out.morphism.push_back(g);
            }
    Index const M = c.morphisms.size();
    std::map<std::tuple<Index, Index, Index>, Index> lookup;
    for (Index m = 0; m < M; ++m)
        lookup[{c.src(m), c.tgt(m), out.morphism[m]}] = m;
    c.composeTable.assign(M * M, npos);
    for (Index g = 0; g < M; ++g)
        for (Index h = 0; h < M; ++h)
            if (c.tgt(h) == c.src(g))
                c.composeTable[g * M + h] = lookup.at({c.src(h), c.tgt(g), I.compose(out.morphism[g], out.morphism[h])});
    out.forget = Functor{c, I, out.object, out.morphism};
    return out;
}

} // namespace detail

/// The undercategory (x/f): pairs (y, a: x -> f(y)), morphisms g: y -> y'
/// with f(g) o a = a'.
inline Comma commaUnder(Index x, Functor const& f)
{
    FinCat const& J = f.target;
    if (x >= J.objectCount())
        throw SchemaError("comma object out of range");
    std::vector<std::pair<Index, Index>> pairs;
    for (Index y = 0; y < f.source.objectCount(); ++y)
        for (Index a : J.hom(x, f.objMap[y]))
            pairs.emplace_back(y, a);
    return detail::buildComma(f, pairs, [&](Index g, Index a, Index a2) {
        return J.compose(f.morMap[g], a) == a2;
    });
}

/// The overcategory (f/x): pairs (y, a: f(y) -> x), morphisms g: y -> y'
/// with a' o f(g) = a.
inline Comma commaOver(Functor const& f, Index x)
{
    FinCat const& J = f.target;
    if (x >= J.objectCount())
        throw SchemaError("comma object out of range");
    std::vector<std::pair<Index, Index>> pairs;
    for (Index y = 0; y < f.source.objectCount(); ++y)
        for (Index a : J.hom(f.objMap[y], x))
            pairs.emplace_back(y, a);
    return detail::buildComma(f, pairs, [&](Index g, Index a, Index a2) {
        return J.compose(a2, f.morMap[g]) == a;
    });
}

/// Functor (x'/f) -> (x/f) induced by v: x -> x', (y, a) |-> (y, a o v).
inline Functor commaUnderPrecompose(Comma const& from, Comma const& to, FinCat const& J, Index v)
{
    Functor p{from.category, to.category, {}, {}};
    std::map<std::pair<Index, Index>, Index> objs;
    for (Index k = 0; k < to.object.size(); ++k)
        objs[{to.object[k], to.arrow[k]}] = k;
    for (Index k = 0; k < from.object.size(); ++k)
        p.objMap.push_back(objs.at({from.object[k], J.compose(from.arrow[k], v)}));
    std::map<std::tuple<Index, Index, Index>, Index> mors;
    for (Index m = 0; m < to.category.morphismCount(); ++m)
        mors[{to.category.src(m), to.category.tgt(m), to.morphism[m]}] = m;
    for (Index m = 0; m < from.category.morphismCount(); ++m)
        p.morMap.push_back(mors.at({p.objMap[from.category.src(m)], p.objMap[from.category.tgt(m)], from.morphism[m]}));
    return p;
}

/// Functor (f/x) -> (f/x') induced by v: x -> x', (y, a) |-> (y, v o a).
inline Functor commaOverPostcompose(Comma const& from, Comma const& to, FinCat const& J, Index v)
{
    Functor p{from.category, to.category, {}, {}};
    std::map<std::pair<Index, Index>, Index> objs;
    for (Index k = 0; k < to.object.size(); ++k)
        objs[{to.object[k], to.arrow[k]}] = k;
    for (Index k = 0; k < from.object.size(); ++k)
        p.objMap.push_back(objs.at({from.object[k], J.compose(v, from.arrow[k])}));
    std::map<std::tuple<Index, Index, Index>, Index> mors;
    for (Index m = 0; m < to.category.morphismCount(); ++m)
        mors[{to.category.src(m), to.category.tgt(m), to.morphism[m]}] = m;
    for (Index m = 0; m < from.category.morphismCount(); ++m)
        p.morMap.push_back(mors.at({p.objMap[from.category.src(m)], p.objMap[from.category.tgt(m)], from.morphism[m]}));
    return p;
}

// ---------------------------------------------------------------------
// Nerves

/// A composable chain i_0 -> ... -> i_n stored as its start object and its
/// n arrows.
struct Chain
{
    Index start = 0;
    std::vector<Index> arrows;

    Index length() const { return arrows.size(); }

    friend bool operator==(Chain const&, Chain const&) = default;
    friend auto operator<=>(Chain const&, Chain const&) = default;
};

/// Object i_k of a chain.
inline Index chainObject(FinCat const& c, Chain const& ch, Index k)
{
    return k == 0 ? ch.start : c.tgt(ch.arrows[k - 1]);
}

inline Index chainEnd(FinCat const& c, Chain const& ch)
{
    return chainObject(c, ch, ch.length());
}

/// The capped nerve of a category, keeping the chain behind every simplex.
struct Nerve
{
    SSet sset;
    std::vector<std::vector<Chain>> chains;
    std::vector<std::map<Chain, Index>> index;

    Index lookup(Chain const& ch) const
    {
        auto const& idx = index.at(ch.length());
        auto it = idx.find(ch);
        if (it == idx.end())
            throw InputError("chain not present in nerve");
        return it->second;
    }
};

/// d_k of a chain: d_0 drops the first object, d_n the last, inner faces
/// compose at position k.
inline Chain chainFace(FinCat const& c, Chain const& ch, Index k)
{
    Index const n = ch.length();
    Chain out;
    if (n == 1)
    {
        out.start = k == 0 ? c.tgt(ch.arrows[0]) : c.src(ch.arrows[0]);
        return out;
    }
    if (k == 0)
    {
        out.start = c.tgt(ch.arrows[0]);
        out.arrows.assign(ch.arrows.begin() + 1, ch.arrows.end());
    }
    else if (k == n)
    {
        out.start = ch.start;
        out.arrows.assign(ch.arrows.begin(), ch.arrows.end() - 1);
    }
    else
    {
        out.start = ch.start;
        out.arrows = ch.arrows;
        out.arrows[k - 1] = c.compose(ch.arrows[k], ch.arrows[k - 1]);
        out.arrows.erase(out.arrows.begin() + k);
    }
    return out;
}

/// s_k of a chain: inserts the identity of i_k.
inline Chain chainDegeneracy(FinCat const& c, Chain const& ch, Index k)
{
    Chain out = ch;
    out.arrows.insert(out.arrows.begin() + k, c.identity(chainObject(c, ch, k)));
    return out;
}

inline std::string chainLabel(FinCat const& c, Chain const& ch)
{
    if (ch.arrows.empty())
        return c.objects[ch.start];
    std::string s = "[";
    for (std::size_t k = 0; k < ch.arrows.size(); ++k)
        s += (k ? "," : "") + c.morphisms[ch.arrows[k]].id;
    return s + "]";
}

inline Nerve nerve(FinCat const& c, int cap)
{
    if (cap < 0)
        throw CapError("negative nerve cap");
    Nerve nv;
    nv.chains.resize(cap + 1);
    nv.index.resize(cap + 1);
    for (Index x = 0; x < c.objectCount(); ++x)
        nv.chains[0].push_back(Chain{x, {}});
    for (int n = 1; n <= cap; ++n)
        for (auto const& ch : nv.chains[n - 1])
        {
            Index const last = chainEnd(c, ch);
            for (Index m = 0; m < c.morphismCount(); ++m)
                if (c.src(m) == last)
                {
                    Chain next = ch;
                    next.arrows.push_back(m);
                    nv.chains[n].push_back(std::move(next));
                }
        }
    std::vector<Index> sizes;
    for (int n = 0; n <= cap; ++n)
    {
        sizes.push_back(nv.chains[n].size());
        for (Index s = 0; s < nv.chains[n].size(); ++s)
            nv.index[n][nv.chains[n][s]] = s;
    }
    nv.sset = SSet::allocate(cap, sizes);
    nv.sset.labels.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (Index s = 0; s < sizes[n]; ++s)
        {
            Chain const& ch = nv.chains[n][s];
            nv.sset.labels[n].push_back(chainLabel(c, ch));
            for (int k = 0; n > 0 && k <= n; ++k)
                nv.sset.faces[n][k][s] = nv.index[n - 1].at(chainFace(c, ch, k));
            for (int k = 0; n < cap && k <= n; ++k)
                nv.sset.degeneracies[n][k][s] = nv.index[n + 1].at(chainDegeneracy(c, ch, k));
        }
    return nv;
}

/// Image of a chain under a functor.
inline Chain mapChain(Functor const& f, Chain const& ch)
{
    Chain out{f.objMap[ch.start], {}};
    for (Index m : ch.arrows)
        out.arrows.push_back(f.morMap[m]);
    return out;
}

/// N(f) between prebuilt nerves of f.source and f.target.
inline SMap nerveOfFunctor(Functor const& f, Nerve const& from, Nerve const& to, SSetPtr const& source,
                           SSetPtr const& target)
{
    if (from.sset.cap != to.sset.cap)
        throw CapError("nerves of different caps");
    SMap g{source, target, {}};
    g.level.resize(from.sset.cap + 1);
    for (int n = 0; n <= from.sset.cap; ++n)
        for (auto const& ch : from.chains[n])
            g.level[n].push_back(to.lookup(mapChain(f, ch)));
    return g;
}

struct NerveMap
{
    Nerve source;
    Nerve target;
    SMap map;
};

inline NerveMap nerveOfFunctor(Functor const& f, int cap)
{
    NerveMap out{nerve(f.source, cap), nerve(f.target, cap), {}};
    out.map = nerveOfFunctor(f, out.source, out.target, share(out.source.sset), share(out.target.sset));
    return out;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_FINCAT_HPP
