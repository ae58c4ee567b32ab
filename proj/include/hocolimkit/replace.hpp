// replace.hpp
//
// Constructions on diagrams of simplicial sets over finite categories:
// simplicial replacement, the Voevodsky homotopy colimit (diagonal of the
// replacement), the colimit with its augmentation, decalage with its two
// augmentations, the two-sided bar construction, coends, the Bousfield-Kan
// homotopy colimit, maps induced by functors and natural transformations,
// and pointwise homotopy left Kan extensions.
//
// Simplicial sets are the only value category here, so the tensor with a
// simplicial set is the levelwise product and every object is cofibrant:
// the Bousfield-Kan formula is computed as the plain coend of
// X(i) x N(j/I)^op. The tensor X (x) K = colim over the simplices of K is
// canonically isomorphic to X x K for set-valued X and is not built
// separately.

#ifndef HOCOLIMKIT_REPLACE_HPP
#define HOCOLIMKIT_REPLACE_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fincat.hpp"
#include "sset.hpp"

namespace hocolimkit
{

// ---------------------------------------------------------------------
// Diagrams

/// A functor from a finite category to simplicial sets of one cap.
struct Diagram
{
    FinCat shape;
    std::vector<SSetPtr> values;
    std::vector<SMap> arrows;

    int cap() const { return values.empty() ? 0 : values.front()->cap; }
    SSet const& at(Index object) const { return *values[object]; }
};

/// Natural transformation between diagrams over one shape, or more
/// generally the components tau_i: X(i) -> Y(f(i)) of a map of diagrams
/// over a functor f.
struct DiagramMap
{
    std::vector<SMap> components;
};

inline std::optional<std::string> auditDiagram(Diagram const& x)
{
    FinCat const& c = x.shape;
    if (x.values.size() != c.objectCount() || x.arrows.size() != c.morphismCount())
        return "diagram tables do not match its shape";
    int const cap = x.cap();
    for (Index i = 0; i < c.objectCount(); ++i)
    {
        if (x.values[i]->cap != cap)
            return "values have different caps";
        if (auto err = auditSSet(*x.values[i]))
            return "value at " + c.objects[i] + ": " + *err;
    }
    for (Index m = 0; m < c.morphismCount(); ++m)
    {
        SMap const& f = x.arrows[m];
        if (f.source != x.values[c.src(m)] && !(f.source && *f.source == *x.values[c.src(m)]))
            return "arrow " + c.morphisms[m].id + " has the wrong source";
        if (f.target != x.values[c.tgt(m)] && !(f.target && *f.target == *x.values[c.tgt(m)]))
            return "arrow " + c.morphisms[m].id + " has the wrong target";
        if (auto err = auditMap(f))
            return "arrow " + c.morphisms[m].id + ": " + *err;
    }
    for (Index i = 0; i < c.objectCount(); ++i)
        if (!sameLevels(x.arrows[c.identity(i)], identityMap(x.values[i])))
            return "identity of " + c.objects[i] + " is not sent to the identity";
    for (Index g = 0; g < c.morphismCount(); ++g)
        for (Index f = 0; f < c.morphismCount(); ++f)
            if (c.tgt(f) == c.src(g)
                && !sameLevels(x.arrows[c.compose(g, f)], compose(x.arrows[g], x.arrows[f])))
                return "composite (" + c.morphisms[g].id + ", " + c.morphisms[f].id + ") is not preserved";
    return std::nullopt;
}

/// Components must be maps X(i) -> Y(f(i)) commuting with the arrows.
inline std::optional<std::string> auditDiagramMap(Functor const& f, Diagram const& x, Diagram const& y,
                                                  DiagramMap const& tau)
{
    FinCat const& c = x.shape;
    if (tau.components.size() != c.objectCount())
        return "wrong number of components";
    for (Index i = 0; i < c.objectCount(); ++i)
        if (auto err = auditMap(tau.components[i]))
            return "component at " + c.objects[i] + ": " + *err;
    for (Index m = 0; m < c.morphismCount(); ++m)
    {
        SMap const lhs = compose(y.arrows[f.morMap[m]], tau.components[c.src(m)]);
        SMap const rhs = compose(tau.components[c.tgt(m)], x.arrows[m]);
        if (!sameLevels(lhs, rhs))
            return "naturality fails at " + c.morphisms[m].id;
    }
    return std::nullopt;
}

/// Every value the same simplicial set, every arrow the identity.
inline Diagram constantDiagram(FinCat const& shape, SSetPtr const& value)
{
    Diagram d{shape, std::vector<SSetPtr>(shape.objectCount(), value), {}};
    SMap const id = identityMap(value);
    d.arrows.assign(shape.morphismCount(), id);
    return d;
}

inline Diagram pointDiagram(FinCat const& shape, int cap)
{
    return constantDiagram(shape, share(point(cap)));
}

/// f^* X for f: I -> J and X over J.
inline Diagram pullback(Functor const& f, Diagram const& x)
{
    Diagram d{f.source, {}, {}};
    for (Index i : f.objMap)
        d.values.push_back(x.values[i]);
    for (Index m : f.morMap)
        d.arrows.push_back(x.arrows[m]);
    return d;
}

/// Identity components tau_i = id: X(f(i)) -> X(f(i)) of f^* X -> X over f.
inline DiagramMap identityOver(Functor const& f, Diagram const& x)
{
    DiagramMap t;
    for (Index i : f.objMap)
        t.components.push_back(identityMap(x.values[i]));
    return t;
}

/// Pointwise product of two diagrams over one shape.
inline Diagram productDiagram(Diagram const& x, Diagram const& y)
{
    Diagram d{x.shape, {}, {}};
    for (Index i = 0; i < x.shape.objectCount(); ++i)
        d.values.push_back(share(product(*x.values[i], *y.values[i])));
    for (Index m = 0; m < x.shape.morphismCount(); ++m)
        d.arrows.push_back(productMap(x.arrows[m], y.arrows[m], d.values[x.shape.src(m)], d.values[x.shape.tgt(m)]));
    return d;
}

/// The set-valued diagram of degree-k simplices, as discrete simplicial sets
/// of the given cap.
inline Diagram degreeSlice(Diagram const& x, int k, int cap)
{
    Diagram d{x.shape, {}, {}};
    for (auto const& v : x.values)
    {
        SSet disc = discreteSSet(v->sizes[k], cap);
        if (!v->labels.empty())
            for (int n = 0; n <= cap; ++n)
                disc.labels.push_back(v->labels[k]);
        d.values.push_back(share(std::move(disc)));
    }
    for (Index m = 0; m < x.shape.morphismCount(); ++m)
    {
        SMap f{d.values[x.shape.src(m)], d.values[x.shape.tgt(m)], {}};
        f.level.assign(cap + 1, x.arrows[m].level[k]);
        d.arrows.push_back(std::move(f));
    }
    return d;
}

// ---------------------------------------------------------------------
// Simplicial replacement

/// Shared layout of bisimplicial sets indexed by (nerve chain, simplex):
/// block of chain c in bidegree (n, m) starts at offsets[n][m][c].
struct ChainIndexedLayout
{
    std::vector<std::vector<std::vector<Index>>> offsets;   // [n][m][c], with a final sentinel

    Index encode(int n, int m, Index chain, Index s) const { return offsets[n][m][chain] + s; }

    std::pair<Index, Index> decode(int n, int m, Index s) const
    {
        auto const& off = offsets[n][m];
        Index const c = static_cast<Index>(std::upper_bound(off.begin(), off.end(), s) - off.begin()) - 1;
        return {c, s - off[c]};
    }
};

struct Replacement
{
    BiSSet bi;
    Nerve nerve;
    ChainIndexedLayout layout;
};

/// Bidegree (n, m) holds pairs (chain i_0 -> ... -> i_n, m-simplex of X(i_0)).
/// Horizontal d_0 pushes along X(i_0 -> i_1); the other horizontal faces and
/// all degeneracies re-index the chain; vertical structure is that of X(i_0).
inline Replacement simplicialReplacement(Diagram const& x, int chainCap)
{
    if (chainCap < 0)
        throw CapError("negative chain cap");
    FinCat const& c = x.shape;
    int const vcap = x.cap();
    Replacement r;
    r.nerve = nerve(c, chainCap);
    auto const& chains = r.nerve.chains;
    std::vector<std::vector<Index>> sizes(chainCap + 1, std::vector<Index>(vcap + 1, 0));
    r.layout.offsets.resize(chainCap + 1, std::vector<std::vector<Index>>(vcap + 1));
    for (int n = 0; n <= chainCap; ++n)
        for (int m = 0; m <= vcap; ++m)
        {
            auto& off = r.layout.offsets[n][m];
            Index total = 0;
            for (auto const& ch : chains[n])
            {
                off.push_back(total);
                total += x.values[ch.start]->sizes[m];
            }
            off.push_back(total);
            sizes[n][m] = total;
        }
    r.bi = BiSSet::allocate(chainCap, vcap, sizes);
    r.bi.labels.resize(chainCap + 1, std::vector<std::vector<std::string>>(vcap + 1));
    for (int n = 0; n <= chainCap; ++n)
        for (int m = 0; m <= vcap; ++m)
            for (Index ci = 0; ci < chains[n].size(); ++ci)
            {
                Chain const& ch = chains[n][ci];
                SSet const& val = *x.values[ch.start];
                Index const base = r.layout.offsets[n][m][ci];
                std::string const chainName = r.nerve.sset.labels[n][ci];
                std::vector<Index> faceChain(n + 1), degChain(n + 1);
                for (int k = 0; n > 0 && k <= n; ++k)
                    faceChain[k] = r.nerve.sset.face(n, k, ci);
                for (int k = 0; n < chainCap && k <= n; ++k)
                    degChain[k] = r.nerve.sset.degeneracy(n, k, ci);
                for (Index s = 0; s < val.sizes[m]; ++s)
                {
                    Index const z = base + s;
                    r.bi.labels[n][m].push_back(chainName + "|" + val.label(m, s));
                    if (n > 0)
                    {
                        Index const pushed = x.arrows[ch.arrows[0]](m, s);
                        r.bi.hfaces[n][m][0][z] = r.layout.encode(n - 1, m, faceChain[0], pushed);
                        for (int k = 1; k <= n; ++k)
                            r.bi.hfaces[n][m][k][z] = r.layout.encode(n - 1, m, faceChain[k], s);
                    }
                    for (int k = 0; n < chainCap && k <= n; ++k)
                        r.bi.hdegens[n][m][k][z] = r.layout.encode(n + 1, m, degChain[k], s);
                    for (int k = 0; m > 0 && k <= m; ++k)
                        r.bi.vfaces[n][m][k][z] = r.layout.encode(n, m - 1, ci, val.face(m, k, s));
                    for (int k = 0; m < vcap && k <= m; ++k)
                        r.bi.vdegens[n][m][k][z] = r.layout.encode(n, m + 1, ci, val.degeneracy(m, k, s));
                }
            }
    return r;
}

/// The map of replacements induced by a functor f and components
/// tau_i: X(i) -> Y(f(i)): the block of chain c goes to the block of f(c)
/// through tau at the chain's first object.
inline BiMap replacementMap(Functor const& f, DiagramMap const& tau, Replacement const& rx, Replacement const& ry)
{
    BiMap out;
    int const hcap = rx.bi.hcap;
    int const vcap = rx.bi.vcap;
    if (ry.bi.hcap != hcap || ry.bi.vcap != vcap)
        throw CapError("replacements have different caps");
    out.level.resize(hcap + 1, std::vector<LevelMap>(vcap + 1));
    for (int n = 0; n <= hcap; ++n)
    {
        std::vector<Index> image;
        for (auto const& ch : rx.nerve.chains[n])
            image.push_back(ry.nerve.lookup(mapChain(f, ch)));
        for (int m = 0; m <= vcap; ++m)
        {
            auto& lv = out.level[n][m];
            lv.resize(rx.bi.sizes[n][m]);
            for (Index ci = 0; ci < rx.nerve.chains[n].size(); ++ci)
            {
                SMap const& t = tau.components[rx.nerve.chains[n][ci].start];
                Index const base = rx.layout.offsets[n][m][ci];
                Index const len = rx.layout.offsets[n][m][ci + 1] - base;
                for (Index s = 0; s < len; ++s)
                    lv[base + s] = ry.layout.encode(n, m, image[ci], t(m, s));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Voevodsky homotopy colimit

struct VoevodskyHocolim
{
    Replacement replacement;
    SSetPtr sset;
};

/// The diagonal of the simplicial replacement, computed at the diagram's cap
/// or at a smaller requested cap.
inline VoevodskyHocolim voevodskyHocolim(Diagram const& x, int cap)
{
    if (cap > x.cap())
        throw CapError("hocolim at cap " + std::to_string(cap) + " of a diagram with cap " + std::to_string(x.cap()));
    Diagram const* src = &x;
    Diagram truncated;
    if (cap < x.cap())
    {
        truncated = Diagram{x.shape, {}, {}};
        for (auto const& v : x.values)
            truncated.values.push_back(share(truncate(*v, cap)));
        for (Index m = 0; m < x.shape.morphismCount(); ++m)
        {
            SMap f = x.arrows[m];
            f.level.resize(cap + 1);
            f.source = truncated.values[x.shape.src(m)];
            f.target = truncated.values[x.shape.tgt(m)];
            truncated.arrows.push_back(std::move(f));
        }
        src = &truncated;
    }
    VoevodskyHocolim h{simplicialReplacement(*src, cap), nullptr};
    h.sset = share(diagonal(h.replacement.bi, cap));
    return h;
}

inline VoevodskyHocolim voevodskyHocolim(Diagram const& x)
{
    return voevodskyHocolim(x, x.cap());
}

/// The map hocolim X -> hocolim Y induced by f and tau (diagonal of the
/// replacement map).
inline SMap hocolimMap(Functor const& f, DiagramMap const& tau, VoevodskyHocolim const& hx, VoevodskyHocolim const& hy)
{
    return diagonalMap(replacementMap(f, tau, hx.replacement, hy.replacement), hx.sset, hy.sset);
}

/// hocolim_I f^* X -> hocolim_J X for f: I -> J.
struct CofinalMap
{
    VoevodskyHocolim source;
    VoevodskyHocolim target;
    SMap map;
};

inline CofinalMap inducedCofinalMap(Functor const& f, Diagram const& x, int cap)
{
    if (cap != x.cap())
        throw CapError("induced cofinal map needs cap equal to the diagram cap");
    CofinalMap out{voevodskyHocolim(pullback(f, x), cap), voevodskyHocolim(x, cap), {}};
    out.map = hocolimMap(f, identityOver(f, x), out.source, out.target);
    return out;
}

// ---------------------------------------------------------------------
// Colimit and its augmentation

struct ColimAugmentation
{
    SSet colim;
    /// augmentation[m]: replacement bidegree (0, m) -> colim_m
    std::vector<LevelMap> augmentation;
    Replacement replacement;
};

/// colim_I X as the levelwise coequalizer of the two faces from bidegree
/// (1, m) to (0, m) of the replacement.
inline ColimAugmentation colimAugmentation(Diagram const& x)
{
    ColimAugmentation out;
    out.replacement = simplicialReplacement(x, 1);
    BiSSet const& z = out.replacement.bi;
    SSet const base = column(z, 0);
    std::vector<UnionFind> classes;
    for (int m = 0; m <= z.vcap; ++m)
    {
        classes.emplace_back(z.sizes[0][m]);
        for (Index s = 0; s < z.sizes[1][m]; ++s)
            classes[m].unite(z.hfaces[1][m][0][s], z.hfaces[1][m][1][s]);
    }
    Quotient q = quotientByClasses(base, std::move(classes));
    out.colim = std::move(q.quotient);
    out.augmentation = std::move(q.projection);
    return out;
}

// ---------------------------------------------------------------------
// Decalage

/// dec(Y)_{n,m} = Y_{n+m+1}; horizontal d_k = d_k, s_k = s_k; vertical
/// d_k = d_{n+k+1}, s_k = s_{n+k+1}.
struct Decalage
{
    SSetPtr source;
    BiSSet dec;

    /// Lambda^I: dec(Y) -> Delta x Y, (n, m) -> Y_m by d_0^{n+1}.
    BiMap horizontalAugmentation() const
    {
        BiMap f;
        f.level.resize(dec.hcap + 1, std::vector<LevelMap>(dec.vcap + 1));
        for (int n = 0; n <= dec.hcap; ++n)
            for (int m = 0; m <= dec.vcap; ++m)
            {
                auto& lv = f.level[n][m];
                lv.resize(dec.sizes[n][m]);
                for (Index s = 0; s < lv.size(); ++s)
                {
                    Index t = s;
                    for (int k = n + m + 1; k > m; --k)
                        t = source->face(k, 0, t);
                    lv[s] = t;
                }
            }
        return f;
    }

    /// Lambda^II: dec(Y) -> Y x Delta, (n, m) -> Y_n by d_{n+1}^{m+1}.
    BiMap verticalAugmentation() const
    {
        BiMap f;
        f.level.resize(dec.hcap + 1, std::vector<LevelMap>(dec.vcap + 1));
        for (int n = 0; n <= dec.hcap; ++n)
            for (int m = 0; m <= dec.vcap; ++m)
            {
                auto& lv = f.level[n][m];
                lv.resize(dec.sizes[n][m]);
                for (Index s = 0; s < lv.size(); ++s)
                {
                    Index t = s;
                    for (int k = n + m + 1; k > n; --k)
                        t = source->face(k, n + 1, t);
                    lv[s] = t;
                }
            }
        return f;
    }

    /// The horizontal simplicial set at vertical degree m, augmented to the
    /// constant object on Y_m by Lambda^I, with the high-side extra
    /// degeneracy s_{n+1} of Y (and s_0: Y_m -> Y_{m+1} on the augmentation).
    std::pair<SMap, ExtraDegeneracy> horizontalExtraDegeneracy(int m) const
    {
        auto const rowSet = share(row(dec, m));
        auto const target = share(constantSSet(source->sizes[m], dec.hcap));
        BiMap const lam = horizontalAugmentation();
        SMap eps{rowSet, target, {}};
        for (int n = 0; n <= dec.hcap; ++n)
            eps.level.push_back(lam.level[n][m]);
        ExtraDegeneracy s;
        s.side = Side::High;
        s.onAugmentation = source->degeneracies[m][0];
        for (int n = 0; n < dec.hcap; ++n)
            s.levels.push_back(source->degeneracies[n + m + 1][n + 1]);
        return {std::move(eps), std::move(s)};
    }

    /// The vertical simplicial set at horizontal degree n, augmented to the
    /// constant object on Y_n by Lambda^II, with the low-side extra
    /// degeneracy s_{-1} = s_n of Y.
    std::pair<SMap, ExtraDegeneracy> verticalExtraDegeneracy(int n) const
    {
        auto const colSet = share(column(dec, n));
        auto const target = share(constantSSet(source->sizes[n], dec.vcap));
        BiMap const lam = verticalAugmentation();
        SMap eps{colSet, target, {}};
        for (int m = 0; m <= dec.vcap; ++m)
            eps.level.push_back(lam.level[n][m]);
        ExtraDegeneracy s;
        s.side = Side::Low;
        s.onAugmentation = source->degeneracies[n][n];
        for (int m = 0; m < dec.vcap; ++m)
            s.levels.push_back(source->degeneracies[n + m + 1][n]);
        return {std::move(eps), std::move(s)};
    }

    /// D(Lambda^I) and D(Lambda^II): D(dec Y) -> Y truncated to the diagonal cap.
    struct Diagonals
    {
        SSetPtr diagonal;
        SSetPtr base;
        SMap horizontal;
        SMap vertical;
    };

    Diagonals diagonals() const
    {
        int const cap = std::min(dec.hcap, dec.vcap);
        Diagonals d;
        d.diagonal = share(diagonal(dec, cap));
        d.base = share(truncate(*source, cap));
        d.horizontal = diagonalMap(horizontalAugmentation(), d.diagonal, d.base);
        d.vertical = diagonalMap(verticalAugmentation(), d.diagonal, d.base);
        return d;
    }
};

inline Decalage decalage(SSetPtr const& y, int hcap, int vcap)
{
    if (hcap < 0 || vcap < 0)
        throw CapError("negative decalage cap");
    if (y->cap < hcap + vcap + 1)
        throw CapError("decalage with caps (" + std::to_string(hcap) + "," + std::to_string(vcap)
                       + ") needs source cap >= " + std::to_string(hcap + vcap + 1) + ", have "
                       + std::to_string(y->cap));
    std::vector<std::vector<Index>> sizes(hcap + 1, std::vector<Index>(vcap + 1));
    for (int n = 0; n <= hcap; ++n)
        for (int m = 0; m <= vcap; ++m)
            sizes[n][m] = y->sizes[n + m + 1];
    Decalage d{y, BiSSet::allocate(hcap, vcap, sizes)};
    BiSSet& z = d.dec;
    for (int n = 0; n <= hcap; ++n)
        for (int m = 0; m <= vcap; ++m)
        {
            int const t = n + m + 1;
            for (int k = 0; n > 0 && k <= n; ++k)
                z.hfaces[n][m][k] = y->faces[t][k];
            for (int k = 0; m > 0 && k <= m; ++k)
                z.vfaces[n][m][k] = y->faces[t][n + k + 1];
            for (int k = 0; n < hcap && k <= n; ++k)
                z.hdegens[n][m][k] = y->degeneracies[t][k];
            for (int k = 0; m < vcap && k <= m; ++k)
                z.vdegens[n][m][k] = y->degeneracies[t][n + k + 1];
        }
    if (!y->labels.empty())
    {
        z.labels.resize(hcap + 1, std::vector<std::vector<std::string>>(vcap + 1));
        for (int n = 0; n <= hcap; ++n)
            for (int m = 0; m <= vcap; ++m)
                z.labels[n][m] = y->labels[n + m + 1];
    }
    return d;
}

/// Decalage with equal caps whose diagonal has the given cap.
inline Decalage decalage(SSetPtr const& y, int diagonalCap)
{
    return decalage(y, diagonalCap, diagonalCap);
}

// ---------------------------------------------------------------------
// Bifunctors and the two-sided bar construction

/// F: I x I^op -> sSet. value(i, j) = F(i, j); covariant(u, j): F(i, j) ->
/// F(i', j) for u: i -> i'; contravariant(i, v): F(i, j') -> F(i, j) for
/// v: j -> j'.
struct Bifunctor
{
    FinCat shape;
    std::vector<SSetPtr> values;               // [i * |Ob| + j]
    std::vector<std::vector<SMap>> covariant;  // [u][j]
    std::vector<std::vector<SMap>> contravariant; // [i][v]

    SSetPtr const& value(Index i, Index j) const { return values[i * shape.objectCount() + j]; }
    int cap() const { return values.empty() ? 0 : values.front()->cap; }
};

/// Functoriality in each slot and commutation of the two actions.
inline std::optional<std::string> auditBifunctor(Bifunctor const& f)
{
    FinCat const& c = f.shape;
    Index const O = c.objectCount();
    Index const M = c.morphismCount();
    for (Index u = 0; u < M; ++u)
        for (Index j = 0; j < O; ++j)
            if (auto err = auditMap(f.covariant[u][j]))
                return "covariant action: " + *err;
    for (Index i = 0; i < O; ++i)
        for (Index v = 0; v < M; ++v)
            if (auto err = auditMap(f.contravariant[i][v]))
                return "contravariant action: " + *err;
    for (Index x = 0; x < O; ++x)
        for (Index j = 0; j < O; ++j)
        {
            if (!sameLevels(f.covariant[c.identity(x)][j], identityMap(f.value(x, j))))
                return "covariant action of an identity is not the identity";
            if (!sameLevels(f.contravariant[j][c.identity(x)], identityMap(f.value(j, x))))
                return "contravariant action of an identity is not the identity";
        }
    for (Index g = 0; g < M; ++g)
        for (Index h = 0; h < M; ++h)
        {
            if (c.tgt(h) != c.src(g))
                continue;
            Index const gh = c.compose(g, h);
            for (Index j = 0; j < O; ++j)
            {
                if (!sameLevels(f.covariant[gh][j], compose(f.covariant[g][j], f.covariant[h][j])))
                    return "covariant action not functorial";
                if (!sameLevels(f.contravariant[j][gh], compose(f.contravariant[j][h], f.contravariant[j][g])))
                    return "contravariant action not functorial";
            }
        }
    for (Index u = 0; u < M; ++u)
        for (Index v = 0; v < M; ++v)
        {
            // F(u, 1) F(1, v) = F(1, v) F(u, 1) as maps F(i, j') -> F(i', j)
            SMap const a = compose(f.covariant[u][c.src(v)], f.contravariant[c.src(u)][v]);
            SMap const b = compose(f.contravariant[c.tgt(u)][v], f.covariant[u][c.tgt(v)]);
            if (!sameLevels(a, b))
                return "the two actions do not commute";
        }
    return std::nullopt;
}

/// F(i, j) = X(i); trivial contravariant action.
inline Bifunctor oneSidedBifunctor(Diagram const& x)
{
    FinCat const& c = x.shape;
    Bifunctor f{c, {}, {}, {}};
    for (Index i = 0; i < c.objectCount(); ++i)
        for (Index j = 0; j < c.objectCount(); ++j)
            f.values.push_back(x.values[i]);
    f.covariant.resize(c.morphismCount());
    for (Index u = 0; u < c.morphismCount(); ++u)
        f.covariant[u].assign(c.objectCount(), x.arrows[u]);
    f.contravariant.resize(c.objectCount());
    for (Index i = 0; i < c.objectCount(); ++i)
    {
        SMap const id = identityMap(x.values[i]);
        f.contravariant[i].assign(c.morphismCount(), id);
    }
    return f;
}

/// The undercategories (j/I), their nerves and the nerve maps
/// N(j'/I) -> N(j/I) induced by v: j -> j'.
struct UndercategoryNerves
{
    std::vector<Comma> commas;
    std::vector<Nerve> nerves;
    std::vector<SSetPtr> sets;   ///< N(j/I), or its opposite when requested
    std::vector<SMap> maps;      ///< indexed by v: N(tgt v / I) -> N(src v / I)
};

inline UndercategoryNerves undercategoryNerves(FinCat const& c, int cap, bool opposite)
{
    UndercategoryNerves u;
    Functor const id = identityFunctor(c);
    for (Index j = 0; j < c.objectCount(); ++j)
    {
        u.commas.push_back(commaUnder(j, id));
        u.nerves.push_back(nerve(u.commas.back().category, cap));
        u.sets.push_back(share(opposite ? oppositeSSet(u.nerves.back().sset) : u.nerves.back().sset));
    }
    for (Index v = 0; v < c.morphismCount(); ++v)
    {
        Index const j = c.src(v), j2 = c.tgt(v);
        Functor const p = commaUnderPrecompose(u.commas[j2], u.commas[j], c, v);
        u.maps.push_back(nerveOfFunctor(p, u.nerves[j2], u.nerves[j], u.sets[j2], u.sets[j]));
    }
    return u;
}

/// F(i, j) = X(i) x N(j/I) (or N(j/I)^op), acting by X on the left and by
/// precomposition of undercategories on the right.
inline Bifunctor tensorWithUndercategories(Diagram const& x, UndercategoryNerves const& under)
{
    FinCat const& c = x.shape;
    Index const O = c.objectCount();
    Bifunctor f{c, {}, {}, {}};
    for (Index i = 0; i < O; ++i)
        for (Index j = 0; j < O; ++j)
            f.values.push_back(share(product(*x.values[i], *under.sets[j])));
    f.covariant.resize(c.morphismCount());
    for (Index u = 0; u < c.morphismCount(); ++u)
        for (Index j = 0; j < O; ++j)
            f.covariant[u].push_back(productMap(x.arrows[u], identityMap(under.sets[j]), f.value(c.src(u), j),
                                                f.value(c.tgt(u), j)));
    f.contravariant.resize(O);
    for (Index i = 0; i < O; ++i)
        for (Index v = 0; v < c.morphismCount(); ++v)
            f.contravariant[i].push_back(productMap(identityMap(x.values[i]), under.maps[v],
                                                    f.value(i, c.tgt(v)), f.value(i, c.src(v))));
    return f;
}

struct TwoSidedBar
{
    BiSSet bi;
    Nerve nerve;
    ChainIndexedLayout layout;
};

/// Bidegree (n, m) holds pairs (chain i_0 -> ... -> i_n, m-simplex of
/// F(i_0, i_n)). Horizontal d_0 pushes covariantly along i_0 -> i_1, d_n
/// pulls contravariantly along i_{n-1} -> i_n, inner faces and degeneracies
/// re-index the chain.
inline TwoSidedBar twoSidedBar(Bifunctor const& f, int chainCap)
{
    if (chainCap < 0)
        throw CapError("negative chain cap");
    FinCat const& c = f.shape;
    int const vcap = f.cap();
    TwoSidedBar w;
    w.nerve = nerve(c, chainCap);
    auto const& chains = w.nerve.chains;
    auto valueOf = [&](Chain const& ch) -> SSet const& { return *f.value(ch.start, chainEnd(c, ch)); };
    std::vector<std::vector<Index>> sizes(chainCap + 1, std::vector<Index>(vcap + 1, 0));
    w.layout.offsets.resize(chainCap + 1, std::vector<std::vector<Index>>(vcap + 1));
    for (int n = 0; n <= chainCap; ++n)
        for (int m = 0; m <= vcap; ++m)
        {
            auto& off = w.layout.offsets[n][m];
            Index total = 0;
            for (auto const& ch : chains[n])
            {
                off.push_back(total);
                total += valueOf(ch).sizes[m];
            }
            off.push_back(total);
            sizes[n][m] = total;
        }
    w.bi = BiSSet::allocate(chainCap, vcap, sizes);
    w.bi.labels.resize(chainCap + 1, std::vector<std::vector<std::string>>(vcap + 1));
    for (int n = 0; n <= chainCap; ++n)
        for (int m = 0; m <= vcap; ++m)
            for (Index ci = 0; ci < chains[n].size(); ++ci)
            {
                Chain const& ch = chains[n][ci];
                SSet const& val = valueOf(ch);
                Index const base = w.layout.offsets[n][m][ci];
                Index const last = chainEnd(c, ch);
                for (Index s = 0; s < val.sizes[m]; ++s)
                {
                    Index const z = base + s;
                    w.bi.labels[n][m].push_back(w.nerve.sset.labels[n][ci] + "|" + val.label(m, s));
                    if (n > 0)
                    {
                        Index const pushed = f.covariant[ch.arrows[0]][last](m, s);
                        w.bi.hfaces[n][m][0][z] = w.layout.encode(n - 1, m, w.nerve.sset.face(n, 0, ci), pushed);
                        for (int k = 1; k < n; ++k)
                            w.bi.hfaces[n][m][k][z] = w.layout.encode(n - 1, m, w.nerve.sset.face(n, k, ci), s);
                        Index const pulled = f.contravariant[ch.start][ch.arrows[n - 1]](m, s);
                        w.bi.hfaces[n][m][n][z] = w.layout.encode(n - 1, m, w.nerve.sset.face(n, n, ci), pulled);
                    }
                    for (int k = 0; n < chainCap && k <= n; ++k)
                        w.bi.hdegens[n][m][k][z] = w.layout.encode(n + 1, m, w.nerve.sset.degeneracy(n, k, ci), s);
                    for (int k = 0; m > 0 && k <= m; ++k)
                        w.bi.vfaces[n][m][k][z] = w.layout.encode(n, m - 1, ci, val.face(m, k, s));
                    for (int k = 0; m < vcap && k <= m; ++k)
                        w.bi.vdegens[n][m][k][z] = w.layout.encode(n, m + 1, ci, val.degeneracy(m, k, s));
                }
            }
    return w;
}

// ---------------------------------------------------------------------
// Coends and the Bousfield-Kan homotopy colimit

struct Coend
{
    SSet coend;
    Coproduct diagonalSum;                 ///< the coproduct of F(i, i), in object order
    std::vector<LevelMap> projection;      ///< diagonalSum -> coend
};

/// The levelwise coequalizer of d_0, d_1: W_1(F) -> W_0(F) on the coproduct
/// of F(i, i): a simplex z of F(i, j) over u: i -> j identifies
/// F(u, 1)(z) in F(j, j) with F(1, u)(z) in F(i, i).
inline Coend coend(Bifunctor const& f)
{
    FinCat const& c = f.shape;
    int const cap = f.cap();
    std::vector<SSet const*> parts;
    for (Index i = 0; i < c.objectCount(); ++i)
        parts.push_back(f.value(i, i).get());
    Coend out;
    out.diagonalSum = coproduct(parts, cap);
    auto const& off = out.diagonalSum.offsets;
    std::vector<UnionFind> classes;
    for (int m = 0; m <= cap; ++m)
        classes.emplace_back(out.diagonalSum.sum.sizes[m]);
    for (Index u = 0; u < c.morphismCount(); ++u)
    {
        Index const i = c.src(u), j = c.tgt(u);
        SMap const& push = f.covariant[u][j];       // F(i, j) -> F(j, j)
        SMap const& pull = f.contravariant[i][u];   // F(i, j) -> F(i, i)
        for (int m = 0; m <= cap; ++m)
            for (Index z = 0; z < f.value(i, j)->sizes[m]; ++z)
                classes[m].unite(off[j][m] + push(m, z), off[i][m] + pull(m, z));
    }
    Quotient q = quotientByClasses(out.diagonalSum.sum, std::move(classes));
    out.coend = std::move(q.quotient);
    out.projection = std::move(q.projection);
    return out;
}

struct BousfieldKanHocolim
{
    UndercategoryNerves under;
    Bifunctor bifunctor;
    Coend coend;
    SSetPtr sset;
};

/// The coend of (i, j) |-> X(i) x N(j/I)^op.
inline BousfieldKanHocolim bousfieldKanHocolim(Diagram const& x)
{
    BousfieldKanHocolim h;
    h.under = undercategoryNerves(x.shape, x.cap(), true);
    h.bifunctor = tensorWithUndercategories(x, h.under);
    h.coend = coend(h.bifunctor);
    h.sset = share(h.coend.coend);
    return h;
}

/// The map of Bousfield-Kan hocolims induced by a natural transformation
/// over one shape: tau_i x id on each X(i) x N(i/I)^op.
inline SMap bousfieldKanMap(DiagramMap const& tau, BousfieldKanHocolim const& hx, BousfieldKanHocolim const& hy)
{
    FinCat const& c = hx.bifunctor.shape;
    int const cap = hx.sset->cap;
    SMap out{hx.sset, hy.sset, {}};
    out.level.resize(cap + 1);
    for (int m = 0; m <= cap; ++m)
        out.level[m].assign(hx.sset->sizes[m], npos);
    for (Index i = 0; i < c.objectCount(); ++i)
    {
        SSet const& nv = *hx.under.sets[i];
        SSet const& xs = *tau.components[i].source;
        SSet const& ys = *tau.components[i].target;
        (void)ys;
        for (int m = 0; m <= cap; ++m)
        {
            Index const nsz = nv.sizes[m];
            for (Index a = 0; a < xs.sizes[m]; ++a)
                for (Index b = 0; b < nsz; ++b)
                {
                    Index const src = hx.coend.projection[m][hx.coend.diagonalSum.offsets[i][m] + a * nsz + b];
                    Index const img = tau.components[i](m, a) * nsz + b;
                    Index const tgt = hy.coend.projection[m][hy.coend.diagonalSum.offsets[i][m] + img];
                    if (out.level[m][src] != npos && out.level[m][src] != tgt)
                        throw InputError("transformation does not descend to the coend");
                    out.level[m][src] = tgt;
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Homotopy left Kan extensions

struct KanExtension
{
    Diagram diagram;                        ///< f_! X over J
    std::vector<Comma> commas;              ///< (f/j)
    std::vector<VoevodskyHocolim> pointwise;
};

/// (f_! X)(j) = hocolim over (f/j) of u_j^* X; an arrow v: j -> j' acts by
/// the map induced by post-composition (f/j) -> (f/j').
inline KanExtension homotopyLeftKan(Functor const& f, Diagram const& x, int cap)
{
    if (cap != x.cap())
        throw CapError("Kan extension needs cap equal to the diagram cap");
    FinCat const& J = f.target;
    KanExtension k;
    k.diagram.shape = J;
    for (Index j = 0; j < J.objectCount(); ++j)
    {
        k.commas.push_back(commaOver(f, j));
        k.pointwise.push_back(voevodskyHocolim(pullback(k.commas.back().forget, x), cap));
        k.diagram.values.push_back(k.pointwise.back().sset);
    }
    for (Index v = 0; v < J.morphismCount(); ++v)
    {
        Index const j = J.src(v), j2 = J.tgt(v);
        Functor const p = commaOverPostcompose(k.commas[j], k.commas[j2], J, v);
        Diagram const pulled = pullback(k.commas[j].forget, x);
        DiagramMap tau;
        for (Index o = 0; o < p.source.objectCount(); ++o)
            tau.components.push_back(identityMap(pulled.values[o]));
        k.diagram.arrows.push_back(hocolimMap(p, tau, k.pointwise[j], k.pointwise[j2]));
    }
    return k;
}

/// rho_X(i): hocolim over (I/i) of u^* X -> X(i), sending the block of a
/// chain starting at (y, a: y -> i) through X(a).
struct KanCounit
{
    Comma comma;
    VoevodskyHocolim hocolim;
    SMap map;
};

inline KanCounit kanCounit(Diagram const& x, Index i)
{
    KanCounit r;
    r.comma = commaOver(identityFunctor(x.shape), i);
    r.hocolim = voevodskyHocolim(pullback(r.comma.forget, x), x.cap());
    int const cap = x.cap();
    r.map = SMap{r.hocolim.sset, x.values[i], {}};
    r.map.level.resize(cap + 1);
    auto const& rep = r.hocolim.replacement;
    for (int n = 0; n <= cap; ++n)
    {
        r.map.level[n].resize(r.hocolim.sset->sizes[n]);
        for (Index s = 0; s < r.hocolim.sset->sizes[n]; ++s)
        {
            auto const [ci, t] = rep.layout.decode(n, n, s);
            Index const start = rep.nerve.chains[n][ci].start;
            r.map.level[n][s] = x.arrows[r.comma.arrow[start]](n, t);
        }
    }
    return r;
}

// ---------------------------------------------------------------------
// Fubini

/// The functor J -> I x J, y |-> (i, y).
inline Functor sliceFunctor(FinCat const& I, FinCat const& J, Index i)
{
    Functor f{J, productCategory(I, J), {}, {}};
    for (Index y = 0; y < J.objectCount(); ++y)
        f.objMap.push_back(i * J.objectCount() + y);
    for (Index g = 0; g < J.morphismCount(); ++g)
        f.morMap.push_back(I.identity(i) * J.morphismCount() + g);
    return f;
}

/// i |-> hocolim_J X(i, -) for X over I x J, with I-arrows acting through
/// the induced maps of hocolims.
struct IteratedHocolim
{
    Diagram inner;
    std::vector<VoevodskyHocolim> slices;
    VoevodskyHocolim outer;
};

inline IteratedHocolim iteratedHocolim(FinCat const& I, FinCat const& J, Diagram const& x)
{
    int const cap = x.cap();
    IteratedHocolim it;
    it.inner.shape = I;
    std::vector<Diagram> slices;
    for (Index i = 0; i < I.objectCount(); ++i)
    {
        slices.push_back(pullback(sliceFunctor(I, J, i), x));
        it.slices.push_back(voevodskyHocolim(slices.back(), cap));
        it.inner.values.push_back(it.slices.back().sset);
    }
    Functor const idJ = identityFunctor(J);
    for (Index u = 0; u < I.morphismCount(); ++u)
    {
        DiagramMap tau;
        for (Index y = 0; y < J.objectCount(); ++y)
            tau.components.push_back(x.arrows[u * J.morphismCount() + J.identity(y)]);
        it.inner.arrows.push_back(hocolimMap(idJ, tau, it.slices[I.src(u)], it.slices[I.tgt(u)]));
    }
    it.outer = voevodskyHocolim(it.inner, cap);
    return it;
}

// ---------------------------------------------------------------------
// Bar construction versus decalage

struct BarDecalageCertificate
{
    bool ok = true;
    std::string counterexample;
    Index checked = 0;   ///< simplices compared
};

/// For each simplicial degree k of X, compares W(X_k (x) N(./I)) with
/// dec(replacement of X_k) through the chain-concatenation bijection
/// (i_0 -> ... -> i_n, i_n -> j_0 -> ... -> j_m, x) <-> (i_0 -> ... -> j_m, x),
/// checking bijectivity, all structure maps, and that beta, alpha match
/// Lambda^I, Lambda^II.
inline BarDecalageCertificate barVersusDecalage(Diagram const& x, int hcap, int vcap)
{
    BarDecalageCertificate cert;
    FinCat const& c = x.shape;
    auto fail = [&](int k, int n, int m, std::string const& what, std::string const& a, std::string const& b) {
        std::ostringstream os;
        os << "degree " << k << ", bidegree (" << n << "," << m << "): " << what << " [" << a << " vs " << b << "]";
        cert.ok = false;
        cert.counterexample = os.str();
        return cert;
    };
    for (int k = 0; k <= x.cap(); ++k)
    {
        Diagram const setsW = degreeSlice(x, k, vcap);
        UndercategoryNerves const under = undercategoryNerves(c, vcap, false);
        TwoSidedBar const w = twoSidedBar(tensorWithUndercategories(setsW, under), hcap);

        Diagram const setsR = degreeSlice(x, k, 0);
        Replacement const rep = simplicialReplacement(setsR, hcap + vcap + 1);
        SSetPtr const r = share(row(rep.bi, 0));
        Decalage const dec = decalage(r, hcap, vcap);
        BiMap const lamI = dec.horizontalAugmentation();
        BiMap const lamII = dec.verticalAugmentation();

        auto encodeR = [&](int deg, Chain const& ch, Index s) {
            return rep.layout.encode(deg, 0, rep.nerve.lookup(ch), s);
        };
        // phi, alpha, beta on each bidegree
        std::vector<std::vector<LevelMap>> phi(hcap + 1, std::vector<LevelMap>(vcap + 1));
        for (int n = 0; n <= hcap; ++n)
            for (int m = 0; m <= vcap; ++m)
            {
                if (w.bi.sizes[n][m] != dec.dec.sizes[n][m])
                    return fail(k, n, m, "sizes differ", std::to_string(w.bi.sizes[n][m]),
                                std::to_string(dec.dec.sizes[n][m]));
                auto& lv = phi[n][m];
                lv.resize(w.bi.sizes[n][m]);
                std::vector<bool> hit(dec.dec.sizes[n][m], false);
                for (Index z = 0; z < w.bi.sizes[n][m]; ++z)
                {
                    auto const [ci, s] = w.layout.decode(n, m, z);
                    Chain const& ich = w.nerve.chains[n][ci];
                    Index const last = chainEnd(c, ich);
                    Index const nsz = under.sets[last]->sizes[m];
                    Index const xs = s / nsz;
                    Index const sigma = s % nsz;
                    Comma const& cm = under.commas[last];
                    Chain const& jch = under.nerves[last].chains[m][sigma];
                    Chain total = ich;
                    total.arrows.push_back(cm.arrow[jch.start]);
                    for (Index g : jch.arrows)
                        total.arrows.push_back(cm.morphism[g]);
                    Index const image = encodeR(n + m + 1, total, xs);
                    if (hit[image])
                        return fail(k, n, m, "bijection not injective", w.bi.label(n, m, z), r->label(n + m + 1, image));
                    hit[image] = true;
                    lv[z] = image;
                    ++cert.checked;

                    // beta: push x along i_0 -> j_0 and keep the j-chain
                    Index push = c.identity(ich.start);
                    for (int a = 0; a <= n; ++a)
                        push = c.compose(total.arrows[a], push);
                    Chain jchain{c.tgt(push), {}};
                    for (Index g : jch.arrows)
                        jchain.arrows.push_back(cm.morphism[g]);
                    Index const beta = encodeR(m, jchain, setsR.arrows[push](0, xs));
                    if (beta != lamI.level[n][m][image])
                        return fail(k, n, m, "beta does not match Lambda^I", w.bi.label(n, m, z),
                                    r->label(n + m + 1, image));
                    Index const alpha = encodeR(n, ich, xs);
                    if (alpha != lamII.level[n][m][image])
                        return fail(k, n, m, "alpha does not match Lambda^II", w.bi.label(n, m, z),
                                    r->label(n + m + 1, image));
                }
            }
        // structure maps
        for (int n = 0; n <= hcap; ++n)
            for (int m = 0; m <= vcap; ++m)
                for (Index z = 0; z < w.bi.sizes[n][m]; ++z)
                {
                    Index const pz = phi[n][m][z];
                    for (int i = 0; n > 0 && i <= n; ++i)
                        if (phi[n - 1][m][w.bi.hfaces[n][m][i][z]] != dec.dec.hfaces[n][m][i][pz])
                            return fail(k, n, m, "horizontal face d" + std::to_string(i) + " not preserved",
                                        w.bi.label(n, m, z), r->label(n + m + 1, pz));
                    for (int i = 0; m > 0 && i <= m; ++i)
                        if (phi[n][m - 1][w.bi.vfaces[n][m][i][z]] != dec.dec.vfaces[n][m][i][pz])
                            return fail(k, n, m, "vertical face d" + std::to_string(i) + " not preserved",
                                        w.bi.label(n, m, z), r->label(n + m + 1, pz));
                    for (int i = 0; n < hcap && i <= n; ++i)
                        if (phi[n + 1][m][w.bi.hdegens[n][m][i][z]] != dec.dec.hdegens[n][m][i][pz])
                            return fail(k, n, m, "horizontal degeneracy s" + std::to_string(i) + " not preserved",
                                        w.bi.label(n, m, z), r->label(n + m + 1, pz));
                    for (int i = 0; m < vcap && i <= m; ++i)
                        if (phi[n][m + 1][w.bi.vdegens[n][m][i][z]] != dec.dec.vdegens[n][m][i][pz])
                            return fail(k, n, m, "vertical degeneracy s" + std::to_string(i) + " not preserved",
                                        w.bi.label(n, m, z), r->label(n + m + 1, pz));
                }
    }
    return cert;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_REPLACE_HPP
