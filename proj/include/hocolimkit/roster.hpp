// roster.hpp
//
// Seeded generators for the verification rosters: small random categories,
// a catalog of small simplicial sets with the maps between them, and random
// diagrams assembled from the catalog. Draws go through a fixed bounded
// sampler on top of mt19937_64 so rosters do not depend on the standard
// library's distribution implementations.

#ifndef HOCOLIMKIT_ROSTER_HPP
#define HOCOLIMKIT_ROSTER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "fincat.hpp"
#include "replace.hpp"
#include "sset.hpp"

namespace hocolimkit
{

// ---------------------------------------------------------------------
// Random numbers

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n), by rejection.
    Index below(Index n)
    {
        if (n <= 1)
            return 0;
        std::uint64_t const range = n;
        std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max()
                                    - std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t v;
        do
            v = engine_();
        while (v >= limit);
        return static_cast<Index>(v % range);
    }

    bool chance(Index num, Index den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Independent stream per (seed, suite, instance).
inline Rng instanceRng(std::uint64_t seed, std::string_view stream, Index instance)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : stream)
        h = (h ^ ch) * 0x100000001b3ULL;
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(h) ^ splitmix64(instance + 0x51ed27ULL)));
}

// ---------------------------------------------------------------------
// Categories

struct NamedCategory
{
    std::string name;
    FinCat category;
};

/// The poset on objects o0..o{k-1} with the given order relation (pairs
/// a < b, closed transitively here).
inline FinCat posetFromRelation(Index k, std::vector<std::pair<Index, Index>> const& less)
{
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (auto [a, b] : less)
        lt[a][b] = true;
    for (Index m = 0; m < k; ++m)
        for (Index a = 0; a < k; ++a)
            for (Index b = 0; b < k; ++b)
                if (lt[a][m] && lt[m][b])
                    lt[a][b] = true;
    std::vector<std::string> objects;
    for (Index a = 0; a < k; ++a)
        objects.push_back("o" + std::to_string(a));
    auto name = [](Index a, Index b) { return "o" + std::to_string(a) + "<o" + std::to_string(b); };
    std::vector<std::tuple<std::string, std::string, std::string>> mors;
    std::vector<ComposeEntry> comp;
    for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b)
            if (lt[a][b])
            {
                mors.emplace_back(name(a, b), objects[a], objects[b]);
                for (Index c = 0; c < k; ++c)
                    if (lt[b][c])
                        comp.push_back({name(b, c), name(a, b), name(a, c)});
            }
    return FinCat::fromTables(objects, mors, comp);
}

/// One object x with a non-identity idempotent e.
inline FinCat idempotentCategory()
{
    return FinCat::fromTables({"x"}, {{"e", "x", "x"}}, {{"e", "e", "e"}});
}

/// a -> b <- c.
inline FinCat cospanCategory()
{
    return oppositeCategory(spanCategory());
}

inline NamedCategory randomPoset(Rng& rng)
{
    Index const k = 2 + rng.below(3);
    std::vector<std::pair<Index, Index>> less;
    std::string name = "poset(" + std::to_string(k);
    for (Index a = 0; a < k; ++a)
        for (Index b = a + 1; b < k; ++b)
            if (rng.chance(1, 2))
            {
                less.emplace_back(a, b);
                name += ";" + std::to_string(a) + "<" + std::to_string(b);
            }
    return {name + ")", posetFromRelation(k, less)};
}

/// Free category on a random DAG multigraph, at most 12 morphisms.
inline NamedCategory randomFree(Rng& rng)
{
    for (;;)
    {
        Index const k = 2 + rng.below(3);
        Index const e = 1 + rng.below(k + 1);
        std::vector<std::pair<Index, Index>> edges;
        std::string name = "free(" + std::to_string(k);
        for (Index t = 0; t < e; ++t)
        {
            Index a = rng.below(k), b = rng.below(k - 1);
            if (b >= a)
                ++b;
            if (a > b)
                std::swap(a, b);
            edges.emplace_back(a, b);
            name += ";" + std::to_string(a) + ">" + std::to_string(b);
        }
        FinCat c = freeCategory(k, edges);
        if (c.morphismCount() <= 12)
            return {name + ")", std::move(c)};
    }
}

inline NamedCategory randomCategory(Rng& rng)
{
    return rng.chance(1, 2) ? randomPoset(rng) : randomFree(rng);
}

/// Small shapes used across the curated rosters.
inline std::vector<NamedCategory> curatedCategories()
{
    return {{"[0]", posetCategory(0)},
            {"[1]", posetCategory(1)},
            {"[2]", posetCategory(2)},
            {"span", spanCategory()},
            {"cospan", cospanCategory()},
            {"parallel", parallelPairCategory()},
            {"discrete2", discreteCategory({"a", "b"})},
            {"[1]x[1]", productCategory(posetCategory(1), posetCategory(1))},
            {"idempotent", idempotentCategory()}};
}

// ---------------------------------------------------------------------
// Value catalog

struct CatalogEntry
{
    std::string name;
    SSetPtr value;
};

/// point, boundary of Delta[1], Delta[1], the circle Delta[1]/boundary and
/// the boundary of Delta[2], at a fixed cap, keeping those with at most
/// maxSimplices stored simplices. Maps between entries: constants, all
/// vertex-determined maps, identities and the projection Delta[1] -> circle.
class Catalog
{
public:
    Catalog(int cap, Index maxSimplices, std::vector<std::string> const& only = {})
        : cap_(cap)
    {
        auto keep = [&](std::string const& name) {
            return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
        };
        SSet const d1 = standardSimplex(1, cap);
        Quotient circ = quotient(d1, std::vector<RelationPair>{{0, 0, 1}});
        std::vector<CatalogEntry> all{{"point", share(point(cap))},
                                      {"sphere0", share(boundarySimplex(1, cap))},
                                      {"delta1", share(d1)},
                                      {"circle", share(std::move(circ.quotient))},
                                      {"sphere1", share(boundarySimplex(2, cap))}};
        circleProjection_ = std::move(circ.projection);
        for (auto& e : all)
            if (e.value->totalSize() <= maxSimplices && keep(e.name))
                entries_.push_back(std::move(e));
        maps_.resize(entries_.size(), std::vector<std::vector<SMap>>(entries_.size()));
        for (Index a = 0; a < entries_.size(); ++a)
            for (Index b = 0; b < entries_.size(); ++b)
                maps_[a][b] = buildMaps(a, b);
    }

    int cap() const { return cap_; }
    Index size() const { return entries_.size(); }
    CatalogEntry const& entry(Index k) const { return entries_[k]; }
    std::vector<SMap> const& maps(Index a, Index b) const { return maps_[a][b]; }

    Index find(std::string const& name) const
    {
        for (Index k = 0; k < entries_.size(); ++k)
            if (entries_[k].name == name)
                return k;
        throw InputError("catalog has no entry " + name);
    }

private:
    /// Vertex sequences identify simplices of Delta[k], its boundary and the
    /// point; the circle has two 1-simplices on the vertex sequence (0, 0).
    static bool vertexDetermined(std::string const& name) { return name != "circle"; }

    std::vector<SMap> buildMaps(Index a, Index b) const
    {
        SSetPtr const x = entries_[a].value;
        SSetPtr const y = entries_[b].value;
        std::vector<SMap> out;
        auto add = [&](SMap f) {
            if (auditMap(f))
                return;
            for (auto const& g : out)
                if (sameLevels(f, g))
                    return;
            out.push_back(std::move(f));
        };
        if (a == b)
            add(identityMap(x));
        for (Index v = 0; v < y->sizes[0]; ++v)
            add(constantMap(x, y, v));
        if (entries_[a].name == "delta1" && entries_[b].name == "circle")
            add(SMap{x, y, circleProjection_});
        if (vertexDetermined(entries_[b].name) && vertexDetermined(entries_[a].name))
        {
            std::vector<std::map<std::vector<Index>, Index>> lookup(cap_ + 1);
            for (int n = 0; n <= cap_; ++n)
                for (Index s = 0; s < y->sizes[n]; ++s)
                {
                    std::vector<Index> seq;
                    for (int j = 0; j <= n; ++j)
                        seq.push_back(y->vertex(n, s, j));
                    lookup[n][seq] = s;
                }
            Index const nv = x->sizes[0];
            Index const mv = y->sizes[0];
            std::vector<Index> f(nv, 0);
            for (;;)
            {
                SMap g{x, y, std::vector<LevelMap>(cap_ + 1)};
                bool ok = true;
                for (int n = 0; ok && n <= cap_; ++n)
                    for (Index s = 0; ok && s < x->sizes[n]; ++s)
                    {
                        std::vector<Index> seq;
                        for (int j = 0; j <= n; ++j)
                            seq.push_back(f[x->vertex(n, s, j)]);
                        auto it = lookup[n].find(seq);
                        if (it == lookup[n].end())
                            ok = false;
                        else
                            g.level[n].push_back(it->second);
                    }
                if (ok)
                    add(std::move(g));
                Index pos = 0;
                while (pos < nv && ++f[pos] == mv)
                    f[pos++] = 0;
                if (pos == nv)
                    break;
            }
        }
        return out;
    }

    int cap_;
    std::vector<CatalogEntry> entries_;
    std::vector<std::vector<std::vector<SMap>>> maps_;
    std::vector<LevelMap> circleProjection_;
};

// ---------------------------------------------------------------------
// Random diagrams

/// Generators of a finite category and, for every other morphism, a
/// derivation m = g o t with g a generator and t derived earlier.
struct Presentation
{
    std::vector<Index> generators;
    std::vector<Index> order;                         ///< non-identity morphisms in derivation order
    std::vector<std::pair<Index, Index>> derivation;  ///< (g, t), or (npos, npos) for generators
};

inline Presentation presentation(FinCat const& c)
{
    Index const M = c.morphismCount();
    Presentation p;
    p.derivation.assign(M, {npos, npos});
    std::vector<bool> reached(M, false);
    std::vector<Index> known;   // reached morphisms, identities included
    for (Index x = 0; x < c.objectCount(); ++x)
    {
        reached[c.identity(x)] = true;
        known.push_back(c.identity(x));
    }
    for (Index m = 0; m < M; ++m)
    {
        if (reached[m])
            continue;
        reached[m] = true;
        known.push_back(m);
        p.generators.push_back(m);
        p.order.push_back(m);
        bool grew = true;
        while (grew)
        {
            grew = false;
            for (Index g : p.generators)
                for (Index k = 0; k < known.size(); ++k)
                {
                    Index const t = known[k];
                    if (c.tgt(t) != c.src(g))
                        continue;
                    Index const gt = c.compose(g, t);
                    if (reached[gt])
                        continue;
                    reached[gt] = true;
                    known.push_back(gt);
                    p.order.push_back(gt);
                    p.derivation[gt] = {g, t};
                    grew = true;
                }
        }
    }
    return p;
}

struct NamedDiagram
{
    std::string category;
    std::vector<std::string> values;
    Diagram diagram;
};

/// Values drawn from the catalog, generator maps drawn from the catalog's
/// maps, composites derived; redrawn until functorial, falling back to a
/// constant diagram.
inline NamedDiagram randomDiagram(NamedCategory const& c, Catalog const& catalog, Rng& rng, int tries = 25)
{
    FinCat const& cat = c.category;
    Presentation const p = presentation(cat);
    for (int attempt = 0; attempt < tries; ++attempt)
    {
        std::vector<Index> pick(cat.objectCount());
        for (auto& k : pick)
            k = rng.below(catalog.size());
        Diagram d{cat, {}, std::vector<SMap>(cat.morphismCount())};
        for (Index k : pick)
            d.values.push_back(catalog.entry(k).value);
        for (Index x = 0; x < cat.objectCount(); ++x)
            d.arrows[cat.identity(x)] = identityMap(d.values[x]);
        bool ok = true;
        for (Index m : p.order)
        {
            if (p.derivation[m].first == npos)
            {
                auto const& choices = catalog.maps(pick[cat.src(m)], pick[cat.tgt(m)]);
                if (choices.empty())
                {
                    ok = false;
                    break;
                }
                d.arrows[m] = choices[rng.below(choices.size())];
            }
            else
                d.arrows[m] = compose(d.arrows[p.derivation[m].first], d.arrows[p.derivation[m].second]);
        }
        if (ok && !auditDiagram(d))
        {
            NamedDiagram out{c.name, {}, std::move(d)};
            for (Index k : pick)
                out.values.push_back(catalog.entry(k).name);
            return out;
        }
    }
    Index const k = rng.below(catalog.size());
    NamedDiagram out{c.name, std::vector<std::string>(cat.objectCount(), catalog.entry(k).name),
                     constantDiagram(cat, catalog.entry(k).value)};
    return out;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_ROSTER_HPP
