// verify.hpp
//
// Theorem suites. Each suite builds a roster of curated and seeded random
// instances, checks one statement on every instance and returns one report
// per instance. Instances run on a thread pool (HOCOLIMKIT_THREADS, 0 or
// unset = hardware concurrency) and reports come back in roster order, so
// output depends only on the seed.
//
// Report status is "pass" or "fail" for required assertions and "control"
// for negative controls, which carry a "refuted" flag instead.

#ifndef HOCOLIMKIT_VERIFY_HPP
#define HOCOLIMKIT_VERIFY_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fincat.hpp"
#include "homology.hpp"
#include "replace.hpp"
#include "roster.hpp"
#include "sset.hpp"

namespace hocolimkit
{

struct SuiteReport
{
    std::string suite;
    Index index = 0;
    std::uint64_t seed = 0;
    nlohmann::json instance;
    std::string status;     ///< "pass" | "fail" | "control"
    bool refuted = false;   ///< controls only: the oracle refuted the conclusion
    nlohmann::json witness;

    bool required() const { return status != "control"; }

    nlohmann::json toJson() const
    {
        nlohmann::json j;
        j["suite"] = suite;
        j["index"] = index;
        j["seed"] = seed;
        j["instance"] = instance;
        j["status"] = status;
        if (status == "control")
            j["refuted"] = refuted;
        j["witness"] = witness;
        return j;
    }
};

struct SuiteSummary
{
    Index pass = 0;
    Index fail = 0;
    Index controls = 0;
    Index refuted = 0;

    void add(SuiteReport const& r)
    {
        if (r.status == "pass")
            ++pass;
        else if (r.status == "fail")
            ++fail;
        else
        {
            ++controls;
            refuted += r.refuted ? 1 : 0;
        }
    }

    bool ok() const { return fail == 0; }

    nlohmann::json toJson() const
    {
        return {{"pass", pass}, {"fail", fail}, {"controls", controls}, {"refuted_controls", refuted}};
    }
};

inline SuiteSummary summarize(std::vector<SuiteReport> const& reports)
{
    SuiteSummary s;
    for (auto const& r : reports)
        s.add(r);
    return s;
}

struct SuiteOptions
{
    std::uint64_t seed = 0;
    int randomCount = -1;   ///< -1: the suite's default
    bool curated = true;
    unsigned threads = 0;   ///< 0: from HOCOLIMKIT_THREADS, else hardware
};

namespace detail
{

/// Homology range used by every suite.
constexpr int kRange = 2;

inline unsigned threadCount(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (char const* env = std::getenv("HOCOLIMKIT_THREADS"))
    {
        long const v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    unsigned const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

using Job = std::function<SuiteReport()>;

struct Instance
{
    nlohmann::json descriptor;
    Job job;
};

/// Runs jobs in parallel, filling the common fields; exceptions become
/// failing reports carrying the message.
inline std::vector<SuiteReport> runInstances(std::string const& suite, SuiteOptions const& opt,
                                             std::vector<Instance> const& instances)
{
    std::vector<SuiteReport> out(instances.size());
    std::atomic<Index> next{0};
    auto worker = [&] {
        for (Index k = next++; k < instances.size(); k = next++)
        {
            SuiteReport r;
            try
            {
                r = instances[k].job();
            }
            catch (std::exception const& e)
            {
                r = SuiteReport{};
                r.status = "fail";
                r.witness = {{"error", e.what()}};
            }
            r.suite = suite;
            r.index = k;
            r.seed = opt.seed;
            r.instance = instances[k].descriptor;
            out[k] = std::move(r);
        }
    };
    unsigned const n = std::min<unsigned>(threadCount(opt.threads), std::max<Index>(instances.size(), 1));
    if (n <= 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return out;
}

inline SuiteReport verdictReport(bool ok, nlohmann::json witness)
{
    SuiteReport r;
    r.status = ok ? "pass" : "fail";
    r.witness = std::move(witness);
    return r;
}

inline nlohmann::json homologyJson(HomologySummary const& h)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto const& d : h.degrees)
    {
        nlohmann::json t = nlohmann::json::array();
        for (auto const& f : d.torsion)
            t.push_back(f.str());
        a.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", t}});
    }
    return a;
}

inline nlohmann::json diagramDescriptor(NamedDiagram const& d, int cap)
{
    return {{"category", d.category}, {"values", d.values}, {"cap", cap}};
}

inline void requireCap(int cap, int needed, char const* what)
{
    if (cap < needed)
        throw CapError(std::string(what) + " needs cap " + std::to_string(needed) + ", roster gave "
                       + std::to_string(cap));
}

inline int randomCount(SuiteOptions const& opt, int fallback)
{
    return opt.randomCount >= 0 ? opt.randomCount : fallback;
}

/// The span pt <- boundary of Delta[1] -> pt.
inline NamedDiagram spanCircleDiagram(int cap)
{
    FinCat const s = spanCategory();
    SSetPtr const pt = share(point(cap));
    SSetPtr const s0 = share(boundarySimplex(1, cap));
    Diagram d{s, {pt, s0, pt}, {}};
    d.arrows.resize(s.morphismCount());
    for (Index x = 0; x < 3; ++x)
        d.arrows[s.identity(x)] = identityMap(d.values[x]);
    d.arrows[s.morphismIndex("l")] = constantMap(s0, pt, 0);
    d.arrows[s.morphismIndex("r")] = constantMap(s0, pt, 0);
    return {"span", {"point", "sphere0", "point"}, std::move(d)};
}

/// X(0) = boundary of Delta[1] included into X(1) = Delta[1].
inline NamedDiagram boundaryInclusionDiagram(int cap)
{
    FinCat const c = posetCategory(1);
    SSetPtr const s0 = share(boundarySimplex(1, cap));
    SSetPtr const d1 = share(standardSimplex(1, cap));
    Catalog const cat(cap, npos, {"sphere0", "delta1"});
    Diagram d{c, {s0, d1}, std::vector<SMap>(3)};
    d.arrows[c.identity(0)] = identityMap(s0);
    d.arrows[c.identity(1)] = identityMap(d1);
    for (SMap f : cat.maps(cat.find("sphere0"), cat.find("delta1")))
        if (f(0, 0) == 0 && f(0, 1) == 1)
        {
            f.source = s0;
            f.target = d1;
            d.arrows[c.morphismIndex(c.morphisms[c.hom(0, 1).front()].id)] = f;
        }
    return {"[1]", {"sphere0", "delta1"}, std::move(d)};
}

} // namespace detail

/// Direct colimit: the coproduct of the values with x ~ X(u)(x) for every
/// arrow u, closed under the simplicial structure by union-find.
inline Quotient directColimit(Diagram const& x)
{
    FinCat const& c = x.shape;
    std::vector<SSet const*> parts;
    for (auto const& v : x.values)
        parts.push_back(v.get());
    Coproduct const sum = coproduct(parts, x.cap());
    std::vector<UnionFind> classes;
    for (int m = 0; m <= x.cap(); ++m)
        classes.emplace_back(sum.sum.sizes[m]);
    for (Index u = 0; u < c.morphismCount(); ++u)
        for (int m = 0; m <= x.cap(); ++m)
            for (Index s = 0; s < x.values[c.src(u)]->sizes[m]; ++s)
                classes[m].unite(sum.offsets[c.src(u)][m] + s, sum.offsets[c.tgt(u)][m] + x.arrows[u](m, s));
    return quotientByClasses(sum.sum, std::move(classes));
}

// ---------------------------------------------------------------------
// Suites

/// Simplicial sets for the decalage suite, built at the cap the diagonal
/// range needs: D(dec Y) at cap c uses Y up to degree 2c + 1.
inline std::vector<std::pair<std::string, SSetPtr>> decalageRoster(SuiteOptions const& opt)
{
    int const diagCap = detail::kRange + 2;
    int const cap = 2 * diagCap + 1;
    std::vector<std::pair<std::string, SSetPtr>> ys;
    if (opt.curated)
    {
        ys.emplace_back("point", share(point(cap)));
        ys.emplace_back("delta1", share(standardSimplex(1, cap)));
        ys.emplace_back("delta2", share(standardSimplex(2, cap)));
        ys.emplace_back("sphere1", share(boundarySimplex(2, cap)));
        ys.emplace_back("circle", share(quotient(standardSimplex(1, cap), std::vector<RelationPair>{{0, 0, 1}}).quotient));
        ys.emplace_back("nerve(span)", share(nerve(spanCategory(), cap).sset));
        ys.emplace_back("nerve([1])", share(nerve(posetCategory(1), cap).sset));
        ys.emplace_back("nerve(parallel)", share(nerve(parallelPairCategory(), cap).sset));
        ys.emplace_back("nerve(idempotent)", share(nerve(idempotentCategory(), cap).sset));
        ys.emplace_back("delta1xdelta1", share(product(standardSimplex(1, cap), standardSimplex(1, cap))));
    }
    int const n = detail::randomCount(opt, 6);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, "decalage", k);
        NamedCategory const c = randomCategory(rng);
        ys.emplace_back("nerve(" + c.name + ")", share(nerve(c.category, cap).sset));
    }
    return ys;
}

/// Extra degeneracies for both augmentations, D(Lambda^I) and D(Lambda^II)
/// quasi-isomorphisms in range, and equality of the two on homology.
inline std::vector<SuiteReport> suiteDecalage(SuiteOptions const& opt)
{
    int const diagCap = detail::kRange + 2;
    std::vector<detail::Instance> inst;
    for (auto const& [name, y] : decalageRoster(opt))
        inst.push_back({{{"sset", name}, {"cap", y->cap}, {"diagonal_cap", diagCap}, {"range", detail::kRange}},
                        [y = y, diagCap] {
                            detail::requireCap(y->cap, 2 * diagCap + 1, "decalage");
                            Decalage const d = decalage(y, diagCap);
                            if (auto err = auditBiSSet(d.dec))
                                return detail::verdictReport(false, {{"audit", *err}});
                            for (int m = 0; m <= diagCap; ++m)
                            {
                                auto const [eps, s] = d.horizontalExtraDegeneracy(m);
                                auto const r = checkExtraDegeneracy(eps, s);
                                if (!r.ok)
                                    return detail::verdictReport(
                                        false, {{"lambda", "I"}, {"vertical_degree", m}, {"identity", r.witness}});
                            }
                            for (int n = 0; n <= diagCap; ++n)
                            {
                                auto const [eps, s] = d.verticalExtraDegeneracy(n);
                                auto const r = checkExtraDegeneracy(eps, s);
                                if (!r.ok)
                                    return detail::verdictReport(
                                        false, {{"lambda", "II"}, {"horizontal_degree", n}, {"identity", r.witness}});
                            }
                            auto const dg = d.diagonals();
                            Verdict const a = isQuasiIsoInRange(dg.horizontal, detail::kRange);
                            Verdict const b = isQuasiIsoInRange(dg.vertical, detail::kRange);
                            Verdict const e = equalOnHomology(dg.horizontal, dg.vertical, detail::kRange);
                            nlohmann::json w{{"D(lambda_I)", a.status},
                                             {"D(lambda_II)", b.status},
                                             {"equal_on_homology", e.status},
                                             {"homology", detail::homologyJson(homologyOf(*dg.base, detail::kRange))}};
                            if (!a.positive())
                                w["D(lambda_I)_witness"] = a.witness;
                            if (!b.positive())
                                w["D(lambda_II)_witness"] = b.witness;
                            if (!e.positive())
                                w["equal_on_homology_witness"] = e.witness;
                            return detail::verdictReport(a.positive() && b.positive() && e.positive(), w);
                        }});
    return detail::runInstances("decalage", opt, inst);
}

/// Diagrams shared by the bar/decalage and colimit suites.
inline std::vector<NamedDiagram> diagramRoster(SuiteOptions const& opt, std::string const& stream, int cap,
                                               int fallbackRandom, bool curated)
{
    std::vector<NamedDiagram> ds;
    if (curated)
    {
        ds.push_back({"[0]", {"point"}, pointDiagram(posetCategory(0), cap)});
        ds.push_back({"[1]", {"point", "point"}, pointDiagram(posetCategory(1), cap)});
        ds.push_back({"discrete2", {"sphere0", "delta1"},
                      Diagram{discreteCategory({"a", "b"}),
                              {share(boundarySimplex(1, cap)), share(standardSimplex(1, cap))},
                              {}}});
        ds.back().diagram.arrows = {identityMap(ds.back().diagram.values[0]), identityMap(ds.back().diagram.values[1])};
        ds.push_back(detail::spanCircleDiagram(cap));
        ds.push_back({"parallel", {"point", "point"}, pointDiagram(parallelPairCategory(), cap)});
        ds.push_back(detail::boundaryInclusionDiagram(cap));
        Catalog const cat(cap, 30);
        Rng rng = instanceRng(opt.seed, stream + "/curated", 0);
        NamedCategory const square{"[1]x[1]", productCategory(posetCategory(1), posetCategory(1))};
        ds.push_back(randomDiagram(square, cat, rng));
        ds.push_back(randomDiagram({"idempotent", idempotentCategory()}, cat, rng));
    }
    Catalog const cat(cap, 30);
    int const n = detail::randomCount(opt, fallbackRandom);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, stream, k);
        NamedCategory const c = randomCategory(rng);
        ds.push_back(randomDiagram(c, cat, rng));
    }
    return ds;
}

/// Exact certificate that W(X (x) N(./I)) and dec of the replacement agree.
inline std::vector<SuiteReport> suiteBarDecalage(SuiteOptions const& opt)
{
    int const cap = 2;
    std::vector<detail::Instance> inst;
    for (auto& d : diagramRoster(opt, "bar_decalage", cap, 50, opt.curated))
        inst.push_back({[&] {
                            auto j = detail::diagramDescriptor(d, cap);
                            j["caps"] = {cap, cap};
                            return j;
                        }(),
                        [x = d.diagram, cap] {
                            BarDecalageCertificate const c = barVersusDecalage(x, cap, cap);
                            nlohmann::json w{{"checked", c.checked}};
                            if (!c.ok)
                                w["counterexample"] = c.counterexample;
                            return detail::verdictReport(c.ok, w);
                        }});
    return detail::runInstances("bar_decalage", opt, inst);
}

struct NamedFunctor
{
    std::string name;
    Functor functor;
    std::string target;   ///< name of the target category
};

/// Functors for the Quillen A and cofinal-invariance suites.
inline std::vector<NamedFunctor> functorRoster(SuiteOptions const& opt, std::string const& stream, int fallbackRandom)
{
    std::vector<NamedFunctor> fs;
    if (opt.curated)
    {
        FinCat const p0 = posetCategory(0);
        FinCat const p1 = posetCategory(1);
        FinCat const p2 = posetCategory(2);
        FinCat const sq = productCategory(p1, p1);
        fs.push_back({"[0]->[1] at 1", objectInclusion(p1, 1), "[1]"});
        fs.push_back({"[0]->[2] at 2", objectInclusion(p2, 2), "[2]"});
        fs.push_back({"[0]->cospan at b", objectInclusion(cospanCategory(), 1), "cospan"});
        fs.push_back({"[0]->[1]x[1] at (1,1)", objectInclusion(sq, 3), "[1]x[1]"});
        fs.push_back({"span->[0]", toPoint(spanCategory()), "[0]"});
        fs.push_back({"[2]->[0]", toPoint(p2), "[0]"});
        fs.push_back({"idempotent->[0]", toPoint(idempotentCategory()), "[0]"});
        fs.push_back({"[1]x[1]->[1]", productProjection(p1, p1, true), "[1]"});
        fs.push_back({"[1]->[2] onto {1,2}", subcategoryInclusion(p2, {1, 2}), "[2]"});
        fs.push_back({"identity(span)", identityFunctor(spanCategory()), "span"});
        // negative controls
        fs.push_back({"discrete2->[0]", toPoint(discreteCategory({"a", "b"})), "[0]"});
        fs.push_back({"parallel->[0]", toPoint(parallelPairCategory()), "[0]"});
        fs.push_back({"[0]->discrete2", objectInclusion(discreteCategory({"a", "b"}), 0), "discrete2"});
        fs.push_back({"[0]->[1] at 0", objectInclusion(p1, 0), "[1]"});
        fs.push_back({"[0]->span at b", objectInclusion(spanCategory(), 1), "span"});
    }
    int const n = detail::randomCount(opt, fallbackRandom);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, stream, k);
        NamedCategory const c = randomCategory(rng);
        switch (rng.below(3))
        {
        case 0: {
            // half the time at a terminal object, when there is one
            auto const t = terminalObject(c.category);
            Index const o = t && rng.chance(1, 2) ? *t : rng.below(c.category.objectCount());
            fs.push_back({"[0]->" + c.name + " at " + c.category.objects[o], objectInclusion(c.category, o), c.name});
            break;
        }
        case 1:
            fs.push_back({c.name + "->[0]", toPoint(c.category), "[0]"});
            break;
        default: {
            std::vector<Index> keep;
            for (Index o = 0; o < c.category.objectCount(); ++o)
                if (rng.chance(1, 2))
                    keep.push_back(o);
            if (keep.empty())
                keep.push_back(c.category.objectCount() - 1);
            std::string name = "full subcategory {";
            for (Index o : keep)
                name += (o == keep.front() ? "" : ",") + c.category.objects[o];
            fs.push_back({name + "} of " + c.name, subcategoryInclusion(c.category, keep), c.name});
        }
        }
    }
    return fs;
}

/// Cofinal functors induce quasi-isomorphisms of nerves; functors refuted as
/// cofinal are recorded as controls.
inline std::vector<SuiteReport> suiteQuillenA(SuiteOptions const& opt)
{
    int const cap = detail::kRange + 2;
    std::vector<detail::Instance> inst;
    for (auto& f : functorRoster(opt, "quillen_a", 12))
        inst.push_back({{{"functor", f.name}, {"cap", cap}, {"range", detail::kRange}},
                        [f = f.functor, cap] {
                            detail::requireCap(cap, detail::kRange + 2, "quillen_a");
                            CofinalityReport const cof = checkHomotopyRightCofinal(f, cap);
                            NerveMap const nm = nerveOfFunctor(f, cap);
                            Verdict const q = isQuasiIsoInRange(nm.map, detail::kRange);
                            nlohmann::json w{{"cofinal", cof.passes() ? "passes-necessary-conditions" : "certified-fail"},
                                             {"nerve_map", q.status}};
                            for (auto const& o : cof.objects)
                                if (!o.verdict.positive())
                                {
                                    w["cofinality_witness"] = {{"object", o.object}, {"reason", o.verdict.witness}};
                                    break;
                                }
                            if (!q.positive())
                                w["nerve_map_witness"] = q.witness;
                            if (cof.passes())
                                return detail::verdictReport(q.positive(), w);
                            SuiteReport r;
                            r.status = "control";
                            r.refuted = !q.positive();
                            r.witness = w;
                            return r;
                        }});
    return detail::runInstances("quillen_a", opt, inst);
}

/// The augmentation from the replacement agrees exactly with the direct
/// union-find colimit.
inline std::vector<SuiteReport> colimInstances(std::vector<NamedDiagram> const& ds, int cap,
                                               SuiteOptions const& opt)
{
    std::vector<detail::Instance> inst;
    for (auto& d : ds)
        inst.push_back({detail::diagramDescriptor(d, cap), [x = d.diagram] {
                            ColimAugmentation const a = colimAugmentation(x);
                            Quotient const direct = directColimit(x);
                            nlohmann::json w{{"sizes", a.colim.sizes}};
                            if (a.colim.sizes != direct.quotient.sizes)
                            {
                                w["oracle_sizes"] = direct.quotient.sizes;
                                return detail::verdictReport(false, w);
                            }
                            if (a.augmentation != direct.projection)
                                return detail::verdictReport(false, {{"mismatch", "augmentation partitions differ"}});
                            if (!(a.colim == direct.quotient))
                                return detail::verdictReport(false, {{"mismatch", "structure maps differ"}});
                            if (auto err = auditSSet(a.colim))
                                return detail::verdictReport(false, {{"audit", *err}});
                            // the augmentation coequalizes the two faces
                            BiSSet const& z = a.replacement.bi;
                            for (int m = 0; m <= z.vcap; ++m)
                                for (Index s = 0; s < z.sizes[1][m]; ++s)
                                    if (a.augmentation[m][z.hfaces[1][m][0][s]] != a.augmentation[m][z.hfaces[1][m][1][s]])
                                        return detail::verdictReport(false, {{"mismatch", "faces not coequalized"}});
                            return detail::verdictReport(true, w);
                        }});
    return detail::runInstances("colim_augmentation", opt, inst);
}

inline std::vector<SuiteReport> suiteColimAugmentation(SuiteOptions const& opt)
{
    int const cap = 3;
    return colimInstances(diagramRoster(opt, "colim_augmentation", cap, 50, opt.curated), cap, opt);
}

/// Homology of the two hocolim formulas agrees in range.
inline std::vector<SuiteReport> suiteVoevodskyVsBK(SuiteOptions const& opt)
{
    int const cap = detail::kRange + 1;
    std::vector<NamedDiagram> ds;
    if (opt.curated)
    {
        ds.push_back(detail::spanCircleDiagram(cap));
        ds.push_back({"[0]", {"sphere1"}, constantDiagram(posetCategory(0), share(boundarySimplex(2, cap)))});
        for (auto const& c : curatedCategories())
            ds.push_back({c.name, std::vector<std::string>(c.category.objectCount(), "point"),
                          pointDiagram(c.category, cap)});
        ds.push_back(detail::boundaryInclusionDiagram(cap));
    }
    Catalog const cat(cap, 30);
    int const n = detail::randomCount(opt, 20);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, "voevodsky_vs_bk", k);
        ds.push_back(randomDiagram(randomCategory(rng), cat, rng));
    }
    std::vector<detail::Instance> inst;
    for (auto& d : ds)
        inst.push_back({detail::diagramDescriptor(d, cap), [x = d.diagram, cap] {
                            detail::requireCap(cap, detail::kRange + 1, "voevodsky_vs_bk");
                            HomologySummary const hv = homologyOf(*voevodskyHocolim(x, cap).sset, detail::kRange);
                            HomologySummary const hb = homologyOf(*bousfieldKanHocolim(x).sset, detail::kRange);
                            nlohmann::json w{{"voevodsky", describe(hv)}, {"bousfield_kan", describe(hb)}};
                            return detail::verdictReport(hv == hb, w);
                        }});
    return detail::runInstances("voevodsky_vs_bk", opt, inst);
}

struct ProductInstance
{
    NamedCategory left;
    NamedCategory right;
    NamedDiagram diagram;
};

inline std::vector<ProductInstance> fubiniRoster(SuiteOptions const& opt, int cap)
{
    std::vector<NamedCategory> const pool{{"[0]", posetCategory(0)},
                                          {"[1]", posetCategory(1)},
                                          {"discrete2", discreteCategory({"a", "b"})},
                                          {"parallel", parallelPairCategory()},
                                          {"idempotent", idempotentCategory()}};
    Catalog const cat(cap, 30);
    std::vector<ProductInstance> out;
    auto make = [&](NamedCategory const& i, NamedCategory const& j, Rng& rng, std::vector<std::string> const& only) {
        NamedCategory const ij{i.name + "x" + j.name, productCategory(i.category, j.category)};
        Catalog const restricted(cap, 30, only);
        NamedDiagram d = randomDiagram(ij, only.empty() ? cat : restricted, rng);
        out.push_back({i, j, std::move(d)});
    };
    if (opt.curated)
    {
        Rng rng = instanceRng(opt.seed, "fubini/curated", 0);
        NamedDiagram pd{"[1]x[1]", {}, pointDiagram(productCategory(posetCategory(1), posetCategory(1)), cap)};
        pd.values.assign(4, "point");
        out.push_back({pool[1], pool[1], std::move(pd)});
        make(pool[1], pool[1], rng, {"sphere0"});
        make({"span", spanCategory()}, pool[1], rng, {});
        make(pool[3], pool[1], rng, {});
    }
    int const n = detail::randomCount(opt, 20);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, "fubini", k);
        for (;;)
        {
            NamedCategory const& i = pool[rng.below(pool.size())];
            NamedCategory const& j = pool[rng.below(pool.size())];
            if (i.category.objectCount() * j.category.objectCount() <= 4
                && i.category.morphismCount() * j.category.morphismCount() <= 12)
            {
                make(i, j, rng, {});
                break;
            }
        }
    }
    return out;
}

/// hocolim over I x J against the iterated hocolim, on homology.
inline std::vector<SuiteReport> suiteFubini(SuiteOptions const& opt)
{
    int const cap = detail::kRange + 1;
    std::vector<detail::Instance> inst;
    for (auto& p : fubiniRoster(opt, cap))
        inst.push_back({detail::diagramDescriptor(p.diagram, cap), [p = p, cap] {
                            detail::requireCap(cap, detail::kRange + 1, "fubini");
                            HomologySummary const whole
                                = homologyOf(*voevodskyHocolim(p.diagram.diagram, cap).sset, detail::kRange);
                            IteratedHocolim const it = iteratedHocolim(p.left.category, p.right.category, p.diagram.diagram);
                            if (auto err = auditDiagram(it.inner))
                                return detail::verdictReport(false, {{"inner_diagram", *err}});
                            HomologySummary const iter = homologyOf(*it.outer.sset, detail::kRange);
                            return detail::verdictReport(whole == iter,
                                                         {{"product", describe(whole)}, {"iterated", describe(iter)}});
                        }});
    return detail::runInstances("fubini", opt, inst);
}

/// Cofinal f makes hocolim f^* X -> hocolim X a quasi-isomorphism.
inline std::vector<SuiteReport> suiteCofinalInvariance(SuiteOptions const& opt)
{
    int const cap = detail::kRange + 2;
    Catalog const cat(cap, 30);
    struct Item
    {
        std::string functor;
        Functor f;
        NamedDiagram x;
    };
    std::vector<Item> items;
    if (opt.curated)
    {
        NamedDiagram const bi = detail::boundaryInclusionDiagram(cap);
        items.push_back({"[0]->[1] at 1", objectInclusion(posetCategory(1), 1), bi});
        items.push_back({"[0]->[1] at 0", objectInclusion(posetCategory(1), 0), bi});
        NamedDiagram const sc = detail::spanCircleDiagram(cap);
        items.push_back({"identity(span)", identityFunctor(spanCategory()), sc});
        items.push_back({"[0]->span at b", objectInclusion(spanCategory(), 1), sc});
        items.push_back({"[0]->span at a", objectInclusion(spanCategory(), 0), sc});
    }
    SuiteOptions fopt = opt;
    fopt.curated = false;
    auto const fs = functorRoster(fopt, "cofinal_invariance", 12);
    for (Index k = 0; k < fs.size(); ++k)
    {
        Rng rng = instanceRng(opt.seed, "cofinal_invariance/diagram", k);
        NamedCategory const target{fs[k].target, fs[k].functor.target};
        items.push_back({fs[k].name, fs[k].functor, randomDiagram(target, cat, rng)});
    }
    std::vector<detail::Instance> inst;
    for (auto& it : items)
    {
        auto desc = detail::diagramDescriptor(it.x, cap);
        desc["functor"] = it.functor;
        desc["range"] = detail::kRange;
        inst.push_back({desc, [f = it.f, x = it.x.diagram, cap] {
                            detail::requireCap(cap, detail::kRange + 2, "cofinal_invariance");
                            CofinalityReport const cof = checkHomotopyRightCofinal(f, cap);
                            CofinalMap const m = inducedCofinalMap(f, x, cap);
                            if (auto err = auditMap(m.map))
                                return detail::verdictReport(false, {{"audit", *err}});
                            Verdict const q = isQuasiIsoInRange(m.map, detail::kRange);
                            nlohmann::json w{{"cofinal", cof.passes() ? "passes-necessary-conditions" : "certified-fail"},
                                             {"induced_map", q.status}};
                            if (!q.positive())
                                w["induced_map_witness"] = q.witness;
                            if (cof.passes())
                                return detail::verdictReport(q.positive(), w);
                            SuiteReport r;
                            r.status = "control";
                            r.refuted = !q.positive();
                            r.witness = w;
                            return r;
                        }});
    }
    return detail::runInstances("cofinal_invariance", opt, inst);
}

/// Pointwise quasi-isomorphisms induce quasi-isomorphisms on both hocolims.
struct DiagramMapInstance
{
    std::string name;
    Diagram source;
    Diagram target;
    DiagramMap map;
};

inline std::vector<DiagramMapInstance> homotopyInvarianceRoster(SuiteOptions const& opt, int cap)
{
    std::vector<DiagramMapInstance> out;
    if (opt.curated)
    {
        // identity
        NamedDiagram const sc = detail::spanCircleDiagram(cap);
        DiagramMap id;
        for (auto const& v : sc.diagram.values)
            id.components.push_back(identityMap(v));
        out.push_back({"identity on span(point,sphere0,point)", sc.diagram, sc.diagram, id});
        // Delta[2] -> point collapse over the span
        FinCat const s = spanCategory();
        SSetPtr const d2 = share(standardSimplex(2, cap));
        SSetPtr const pt = share(point(cap));
        Diagram const big = constantDiagram(s, d2);
        Diagram const small = constantDiagram(s, pt);
        DiagramMap collapse;
        for (Index x = 0; x < 3; ++x)
            collapse.components.push_back(constantMap(d2, pt, 0));
        out.push_back({"collapse delta2 -> point over span", big, small, collapse});
        // mixed: Delta[1] at b collapses, identities at a and c
        SSetPtr const d1 = share(standardSimplex(1, cap));
        Diagram mixed{s, {pt, d1, pt}, std::vector<SMap>(s.morphismCount())};
        for (Index x = 0; x < 3; ++x)
            mixed.arrows[s.identity(x)] = identityMap(mixed.values[x]);
        mixed.arrows[s.morphismIndex("l")] = constantMap(d1, pt, 0);
        mixed.arrows[s.morphismIndex("r")] = constantMap(d1, pt, 0);
        DiagramMap mc{{identityMap(pt), constantMap(d1, pt, 0), identityMap(pt)}};
        out.push_back({"mixed collapse over span", mixed, small, mc});
    }
    Catalog const cat(cap, 30);
    Catalog const contractible(cap, 30, {"point", "delta1"});
    int const n = detail::randomCount(opt, 20);
    for (int k = 0; k < n; ++k)
    {
        Rng rng = instanceRng(opt.seed, "homotopy_invariance", k);
        NamedCategory const c = randomCategory(rng);
        NamedDiagram const x = randomDiagram(c, cat, rng);
        NamedDiagram const kd = randomDiagram(c, contractible, rng);
        Diagram const z = productDiagram(x.diagram, kd.diagram);
        DiagramMap proj;
        for (Index o = 0; o < c.category.objectCount(); ++o)
            proj.components.push_back(projectFirst(z.values[o], x.diagram.values[o], *kd.diagram.values[o]));
        std::string name = c.name + ": X x K -> X, X = [";
        for (Index o = 0; o < x.values.size(); ++o)
            name += (o ? "," : "") + x.values[o];
        name += "], K = [";
        for (Index o = 0; o < kd.values.size(); ++o)
            name += (o ? "," : "") + kd.values[o];
        out.push_back({name + "]", z, x.diagram, proj});
    }
    return out;
}

inline std::vector<SuiteReport> suiteHomotopyInvariance(SuiteOptions const& opt)
{
    int const cap = detail::kRange + 2;
    std::vector<detail::Instance> inst;
    for (auto& m : homotopyInvarianceRoster(opt, cap))
        inst.push_back({{{"map", m.name}, {"cap", cap}, {"range", detail::kRange}}, [m = m, cap] {
                            detail::requireCap(cap, detail::kRange + 2, "homotopy_invariance");
                            Functor const id = identityFunctor(m.source.shape);
                            if (auto err = auditDiagramMap(id, m.source, m.target, m.map))
                                return detail::verdictReport(false, {{"natural", *err}});
                            for (Index o = 0; o < m.map.components.size(); ++o)
                            {
                                Verdict const v = isQuasiIsoInRange(m.map.components[o], detail::kRange);
                                if (!v.positive())
                                    return detail::verdictReport(
                                        false, {{"pointwise", m.source.shape.objects[o]}, {"reason", v.witness}});
                            }
                            VoevodskyHocolim const hx = voevodskyHocolim(m.source, cap);
                            VoevodskyHocolim const hy = voevodskyHocolim(m.target, cap);
                            Verdict const v = isQuasiIsoInRange(hocolimMap(id, m.map, hx, hy), detail::kRange);
                            BousfieldKanHocolim const bx = bousfieldKanHocolim(m.source);
                            BousfieldKanHocolim const by = bousfieldKanHocolim(m.target);
                            SMap const bm = bousfieldKanMap(m.map, bx, by);
                            if (auto err = auditMap(bm))
                                return detail::verdictReport(false, {{"bk_map", *err}});
                            Verdict const b = isQuasiIsoInRange(bm, detail::kRange);
                            nlohmann::json w{{"voevodsky", v.status}, {"bousfield_kan", b.status}};
                            if (!v.positive())
                                w["voevodsky_witness"] = v.witness;
                            if (!b.positive())
                                w["bousfield_kan_witness"] = b.witness;
                            return detail::verdictReport(v.positive() && b.positive(), w);
                        }});
    return detail::runInstances("homotopy_invariance", opt, inst);
}

// ---------------------------------------------------------------------
// Registry

inline std::vector<std::string> suiteNames()
{
    return {"decalage",           "bar_decalage", "quillen_a",           "colim_augmentation",
            "voevodsky_vs_bk",    "fubini",       "cofinal_invariance", "homotopy_invariance"};
}

inline std::vector<SuiteReport> runSuite(std::string const& name, SuiteOptions const& opt)
{
    if (name == "decalage")
        return suiteDecalage(opt);
    if (name == "bar_decalage")
        return suiteBarDecalage(opt);
    if (name == "quillen_a")
        return suiteQuillenA(opt);
    if (name == "colim_augmentation")
        return suiteColimAugmentation(opt);
    if (name == "voevodsky_vs_bk")
        return suiteVoevodskyVsBK(opt);
    if (name == "fubini")
        return suiteFubini(opt);
    if (name == "cofinal_invariance")
        return suiteCofinalInvariance(opt);
    if (name == "homotopy_invariance")
        return suiteHomotopyInvariance(opt);
    throw InputError("unknown suite " + name);
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_VERIFY_HPP
