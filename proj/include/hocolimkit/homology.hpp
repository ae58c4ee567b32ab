// homology.hpp
//
// Integral homology of capped simplicial sets through normalized chains,
// mapping-cone quasi-isomorphism tests, and the contractibility and
// cofinality checks built on them.
//
// Homology of a simplicial set with cap N is reported in degrees <= N-1,
// since H_n needs the boundary out of degree n+1. The mapping cone uses
// the convention d(a, b) = (-d a, f(a) + d b) on Cone_n = C_{n-1} + D_n.

#ifndef HOCOLIMKIT_HOMOLOGY_HPP
#define HOCOLIMKIT_HOMOLOGY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "smith.hpp"
#include "sset.hpp"

namespace hocolimkit
{

/// Normalized chains: degree n is free on the nondegenerate n-simplices.
struct ChainComplex
{
    int top = 0;                           ///< highest stored degree
    std::vector<Index> dims;
    std::vector<SparseMatrix> boundary;    ///< boundary[n]: dims[n-1] x dims[n]; boundary[0] is 0 x dims[0]
    std::vector<std::vector<Index>> basis; ///< simplex behind each generator
    std::vector<std::vector<Index>> position; ///< generator index of each simplex, npos if degenerate
};

inline ChainComplex normalizedChains(SSet const& x)
{
    requireValid(x, "normalized chains");
    ChainComplex c;
    c.top = x.cap;
    auto const degenerate = x.degenerateFlags();
    c.basis.resize(x.cap + 1);
    c.position.resize(x.cap + 1);
    for (int n = 0; n <= x.cap; ++n)
    {
        c.position[n].assign(x.sizes[n], npos);
        for (Index s = 0; s < x.sizes[n]; ++s)
            if (!degenerate[n][s])
            {
                c.position[n][s] = c.basis[n].size();
                c.basis[n].push_back(s);
            }
        c.dims.push_back(c.basis[n].size());
    }
    c.boundary.emplace_back(0, c.dims[0]);
    for (int n = 1; n <= x.cap; ++n)
    {
        SparseMatrix d(c.dims[n - 1], c.dims[n]);
        for (Index k = 0; k < c.dims[n]; ++k)
            for (int i = 0; i <= n; ++i)
            {
                Index const f = c.position[n - 1][x.face(n, i, c.basis[n][k])];
                if (f != npos)
                    d.add(f, k, i % 2 == 0 ? 1 : -1);
            }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

/// True iff every composite of consecutive boundaries vanishes.
inline bool boundarySquaresToZero(ChainComplex const& c)
{
    for (int n = 2; n <= c.top; ++n)
        if (!isZero(multiply(c.boundary[n - 1], c.boundary[n])))
            return false;
    return true;
}

struct DegreeHomology
{
    int degree = 0;
    Index betti = 0;
    std::vector<Integer> torsion;   ///< invariant factors > 1, in divisibility order

    friend bool operator==(DegreeHomology const&, DegreeHomology const&) = default;
};

struct HomologySummary
{
    std::vector<DegreeHomology> degrees;

    /// Degrees 0..maxDegree only.
    HomologySummary upTo(int maxDegree) const
    {
        HomologySummary h;
        for (auto const& d : degrees)
            if (d.degree <= maxDegree)
                h.degrees.push_back(d);
        return h;
    }

    std::vector<Index> bettiNumbers() const
    {
        std::vector<Index> b;
        for (auto const& d : degrees)
            b.push_back(d.betti);
        return b;
    }

    /// Equal betti numbers and torsion multisets degree by degree.
    friend bool operator==(HomologySummary const&, HomologySummary const&) = default;
};

/// "H0 = Z, H1 = Z^2 + Z/2, H2 = 0".
inline std::string describe(HomologySummary const& h)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < h.degrees.size(); ++k)
    {
        auto const& d = h.degrees[k];
        os << (k ? ", " : "") << "H" << d.degree << " = ";
        bool any = false;
        if (d.betti > 0)
        {
            os << "Z";
            if (d.betti > 1)
                os << "^" << d.betti;
            any = true;
        }
        for (auto const& t : d.torsion)
        {
            os << (any ? " + " : "") << "Z/" << t;
            any = true;
        }
        if (!any)
            os << "0";
    }
    return os.str();
}

/// Homology in degrees 0..maxDegree; requires maxDegree < c.top.
inline HomologySummary homologyOfComplex(ChainComplex const& c, int maxDegree)
{
    if (maxDegree >= c.top)
        throw CapError("homology in degree " + std::to_string(maxDegree) + " needs chains through degree "
                       + std::to_string(maxDegree + 1));
    std::vector<SmithResult> snf(maxDegree + 2);
    for (int n = 1; n <= maxDegree + 1; ++n)
        snf[n] = smithNormalForm(c.boundary[n]);
    HomologySummary h;
    for (int n = 0; n <= maxDegree; ++n)
    {
        DegreeHomology d;
        d.degree = n;
        Index const rankOut = n == 0 ? 0 : snf[n].rank;
        Index const rankIn = snf[n + 1].rank;
        d.betti = c.dims[n] - rankOut - rankIn;
        for (auto const& f : snf[n + 1].factors)
            if (f > 1)
                d.torsion.push_back(f);
        h.degrees.push_back(std::move(d));
    }
    return h;
}

/// Homology in degrees 0..cap-1.
inline HomologySummary homologyOf(SSet const& x)
{
    if (x.cap == 0)
        return {};
    return homologyOfComplex(normalizedChains(x), x.cap - 1);
}

inline HomologySummary homologyOf(SSet const& x, int maxDegree)
{
    return homologyOfComplex(normalizedChains(x), maxDegree);
}

/// Euler characteristic of the stored chain groups in degrees 0..maxDegree.
inline long long eulerCharacteristic(ChainComplex const& c, int maxDegree)
{
    long long chi = 0;
    for (int n = 0; n <= maxDegree; ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[n]);
    return chi;
}

// ---------------------------------------------------------------------
// Path components

struct Components
{
    Index count = 0;
    std::vector<Index> ofVertex;
};

inline Components pathComponents(SSet const& x)
{
    UnionFind uf(x.sizes[0]);
    if (x.cap >= 1)
        for (Index e = 0; e < x.sizes[1]; ++e)
            uf.unite(x.face(1, 0, e), x.face(1, 1, e));
    auto [label, reps] = uf.classes();
    return {reps.size(), std::move(label)};
}

// ---------------------------------------------------------------------
// Verdicts

struct Verdict
{
    /// "true" | "false" | "certified-fail" | "passes-necessary-conditions"
    std::string status;
    std::string witness;

    bool positive() const { return status == "true" || status == "passes-necessary-conditions"; }
};

/// The chain map induced on normalized chains in degrees 0..top.
inline std::vector<SparseMatrix> chainMap(SMap const& f, ChainComplex const& from, ChainComplex const& to, int top)
{
    auto const degenerate = f.target->degenerateFlags();
    std::vector<SparseMatrix> out;
    for (int n = 0; n <= top; ++n)
    {
        SparseMatrix m(to.dims[n], from.dims[n]);
        for (Index k = 0; k < from.dims[n]; ++k)
        {
            Index const img = f(n, from.basis[n][k]);
            if (!degenerate[n][img])
                m.add(to.position[n][img], k, 1);
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Checks d F = F d in degrees 1..top.
inline std::optional<int> chainMapDefect(std::vector<SparseMatrix> const& f, ChainComplex const& from,
                                         ChainComplex const& to, int top)
{
    for (int n = 1; n <= top; ++n)
    {
        SparseMatrix const a = multiply(to.boundary[n], f[n]);
        SparseMatrix const b = multiply(f[n - 1], from.boundary[n]);
        for (Index c = 0; c < a.cols; ++c)
            if (a.columns[c] != b.columns[c])
                return n;
    }
    return std::nullopt;
}

/// Mapping cone of F: C -> D in degrees 0..top (needs C through top-1 and
/// D through top).
inline ChainComplex mappingCone(std::vector<SparseMatrix> const& f, ChainComplex const& c, ChainComplex const& d,
                                int top)
{
    ChainComplex cone;
    cone.top = top;
    auto cdim = [&](int n) -> Index { return n < 0 ? 0 : c.dims[n]; };
    for (int n = 0; n <= top; ++n)
        cone.dims.push_back(cdim(n - 1) + d.dims[n]);
    cone.boundary.emplace_back(0, cone.dims[0]);
    for (int n = 1; n <= top; ++n)
    {
        // rows: C_{n-2} + D_{n-1}; columns: C_{n-1} + D_n
        SparseMatrix m(cone.dims[n - 1], cone.dims[n]);
        Index const rowShift = cdim(n - 2);
        Index const colShift = cdim(n - 1);
        if (n >= 2)
            for (Index k = 0; k < c.dims[n - 1]; ++k)
                for (auto const& [r, v] : c.boundary[n - 1].columns[k])
                    m.add(r, k, -v);
        for (Index k = 0; k < c.dims[n - 1]; ++k)
            for (auto const& [r, v] : f[n - 1].columns[k])
                m.add(rowShift + r, k, v);
        for (Index k = 0; k < d.dims[n]; ++k)
            for (auto const& [r, v] : d.boundary[n].columns[k])
                m.add(rowShift + r, colShift + k, v);
        cone.boundary.push_back(std::move(m));
    }
    return cone;
}

/// f is a quasi-isomorphism in degrees <= maxDegree and a bijection on path
/// components. Equivalent to the mapping cone being acyclic through
/// degree maxDegree + 1, hence maxDegree <= cap - 2.
inline Verdict isQuasiIsoInRange(SMap const& f, int maxDegree)
{
    requireValid(f, "quasi-isomorphism test");
    int const cap = f.source->cap;
    if (maxDegree < 0 || maxDegree > cap - 2)
        throw CapError("quasi-isomorphism through degree " + std::to_string(maxDegree) + " needs cap >= "
                       + std::to_string(maxDegree + 2) + ", have " + std::to_string(cap));
    ChainComplex const c = normalizedChains(*f.source);
    ChainComplex const d = normalizedChains(*f.target);
    int const top = maxDegree + 2;
    auto const fm = chainMap(f, c, d, top);
    if (auto bad = chainMapDefect(fm, c, d, top))
        throw InputError("candidate chain map does not commute with the boundary in degree " + std::to_string(*bad));

    Components const pc = pathComponents(*f.source);
    Components const pd = pathComponents(*f.target);
    std::vector<Index> hit(pd.count, npos);
    for (Index v = 0; v < f.source->sizes[0]; ++v)
    {
        Index const a = pc.ofVertex[v];
        Index const b = pd.ofVertex[f(0, v)];
        if (hit[b] != npos && hit[b] != a)
            return {"false", "two path components map to one"};
        hit[b] = a;
    }
    if (pc.count != pd.count || std::find(hit.begin(), hit.end(), npos) != hit.end())
        return {"false", "map is not a bijection on path components (" + std::to_string(pc.count) + " -> "
                             + std::to_string(pd.count) + ")"};

    ChainComplex const cone = mappingCone(fm, c, d, top);
    HomologySummary const h = homologyOfComplex(cone, maxDegree + 1);
    for (auto const& deg : h.degrees)
        if (deg.betti != 0 || !deg.torsion.empty())
        {
            std::ostringstream os;
            os << "mapping cone has H" << deg.degree << " != 0 (" << describe(HomologySummary{{deg}}) << ")";
            return {"false", os.str()};
        }
    return {"true", "mapping cone acyclic through degree " + std::to_string(maxDegree + 1)};
}

/// True iff f and g induce the same maps on homology in degrees <= maxDegree
/// (f - g sends every cycle to a boundary). Dense; meant for small inputs.
inline Verdict equalOnHomology(SMap const& f, SMap const& g, int maxDegree)
{
    int const cap = f.source->cap;
    if (maxDegree > cap - 1)
        throw CapError("homology comparison beyond cap");
    ChainComplex const c = normalizedChains(*f.source);
    ChainComplex const d = normalizedChains(*f.target);
    auto const fm = chainMap(f, c, d, maxDegree);
    auto const gm = chainMap(g, c, d, maxDegree);
    for (int n = 0; n <= maxDegree; ++n)
    {
        std::vector<std::vector<Integer>> cycles;
        if (n == 0)
            for (Index k = 0; k < c.dims[0]; ++k)
            {
                std::vector<Integer> e(c.dims[0], 0);
                e[k] = 1;
                cycles.push_back(std::move(e));
            }
        else
            cycles = integerKernel(c.boundary[n]);
        ColumnLattice const boundaries(d.boundary[n + 1]);
        for (auto const& z : cycles)
        {
            std::vector<Integer> y(d.dims[n], 0);
            for (Index k = 0; k < z.size(); ++k)
            {
                if (z[k] == 0)
                    continue;
                for (auto const& [r, v] : fm[n].columns[k])
                    y[r] += v * z[k];
                for (auto const& [r, v] : gm[n].columns[k])
                    y[r] -= v * z[k];
            }
            if (!boundaries.contains(y))
                return {"false", "maps differ on a cycle in degree " + std::to_string(n)};
        }
    }
    return {"true", "maps agree on homology through degree " + std::to_string(maxDegree)};
}

/// Necessary conditions for contractibility visible to the oracle: nonempty,
/// connected, reduced homology zero in degrees <= cap-1.
inline Verdict isContractibleInRange(SSet const& x)
{
    if (x.empty())
        return {"certified-fail", "empty"};
    Components const pc = pathComponents(x);
    if (pc.count != 1)
        return {"certified-fail", std::to_string(pc.count) + " path components"};
    if (x.cap >= 1)
    {
        HomologySummary const h = homologyOf(x);
        for (auto const& d : h.degrees)
            if (d.betti != (d.degree == 0 ? 1u : 0u) || !d.torsion.empty())
                return {"certified-fail", "nonzero reduced homology: " + describe(h)};
    }
    return {"passes-necessary-conditions",
            "connected, reduced homology vanishes through degree " + std::to_string(x.cap - 1)};
}

struct ObjectVerdict
{
    std::string object;
    Verdict verdict;
};

struct CofinalityReport
{
    std::vector<ObjectVerdict> objects;

    /// True unless some undercategory nerve was refuted.
    bool passes() const
    {
        for (auto const& o : objects)
            if (!o.verdict.positive())
                return false;
        return true;
    }
};

/// Runs the contractibility check on N(x/f) for every object x of the target.
inline CofinalityReport checkHomotopyRightCofinal(Functor const& f, int cap)
{
    CofinalityReport r;
    for (Index x = 0; x < f.target.objectCount(); ++x)
    {
        Comma const under = commaUnder(x, f);
        Nerve const nv = nerve(under.category, cap);
        r.objects.push_back({f.target.objects[x], isContractibleInRange(nv.sset)});
    }
    return r;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_HOMOLOGY_HPP
