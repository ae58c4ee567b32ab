// io.hpp
//
// JSON reading and writing for categories, functors, simplicial sets,
// diagrams, homology records and verdicts.
//
//   category  {"objects": [...], "morphisms": [{"id","src","tgt"}...],
//              "compose": [{"g","f","gf"}...]}
//             or a name: "poset:N", "discrete:N", "span", "cospan",
//             "parallel", "idempotent", or a path to a category file
//   functor   {"source": cat, "target": cat, "obj_map": {...}, "mor_map": {...}}
//             (identities may be omitted from mor_map)
//   sset      {"cap": N, "simplices": [[id...]...],
//              "face": {"n,i": {id: id}}, "degeneracy": {"n,j": {id: id}}}
//             or "delta:K", "boundary:K", "point" (cap from context)
//   diagram   {"shape": cat, "cap": N, "values": {obj: sset},
//              "arrows": {mor: map}} where map is {"constant": vertex},
//             {"vertices": {v: w}} or {"levels": {"n": {id: id}}};
//             identities, composites and maps into a point may be omitted.
//
// Relative file references resolve against the referring file's directory.

#ifndef HOCOLIMKIT_IO_HPP
#define HOCOLIMKIT_IO_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
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

using Json = nlohmann::json;

// ---------------------------------------------------------------------
// Files

/// Parsed JSON plus the directory used for relative references.
struct Document
{
    Json json;
    std::filesystem::path base;
};

inline Document readDocument(std::string const& path, std::istream& stdinStream)
{
    Document d;
    try
    {
        if (path == "-")
        {
            d.json = Json::parse(stdinStream);
            d.base = std::filesystem::current_path();
        }
        else
        {
            std::ifstream in(path);
            if (!in)
                throw SchemaError("cannot open " + path);
            d.json = Json::parse(in);
            d.base = std::filesystem::path(path).parent_path();
        }
    }
    catch (Json::parse_error const& e)
    {
        throw SchemaError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return d;
}

namespace detail
{

inline Json const& member(Json const& j, char const* key, char const* what)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string(what) + " is missing \"" + key + "\"");
    return j.at(key);
}

inline std::string asString(Json const& j, char const* what)
{
    if (!j.is_string())
        throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline int asInt(Json const& j, char const* what)
{
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline int namedParameter(std::string const& name, std::string const& prefix)
{
    try
    {
        std::size_t used = 0;
        int const v = std::stoi(name.substr(prefix.size()), &used);
        if (used + prefix.size() != name.size() || v < 0)
            throw SchemaError("bad parameter in " + name);
        return v;
    }
    catch (std::logic_error const&)
    {
        throw SchemaError("bad parameter in " + name);
    }
}

inline bool startsWith(std::string const& s, std::string const& p)
{
    return s.compare(0, p.size(), p) == 0;
}

} // namespace detail

// ---------------------------------------------------------------------
// Categories and functors

inline FinCat categoryFromJson(Json const& j, std::filesystem::path const& base);

inline FinCat namedCategory(std::string const& name, std::filesystem::path const& base)
{
    if (detail::startsWith(name, "poset:"))
        return posetCategory(detail::namedParameter(name, "poset:"));
    if (detail::startsWith(name, "discrete:"))
    {
        int const n = detail::namedParameter(name, "discrete:");
        std::vector<std::string> objs;
        for (int k = 0; k < n; ++k)
            objs.push_back(std::to_string(k));
        return discreteCategory(objs);
    }
    if (name == "span")
        return spanCategory();
    if (name == "cospan")
        return cospanCategory();
    if (name == "parallel")
        return parallelPairCategory();
    if (name == "idempotent")
        return idempotentCategory();
    std::filesystem::path p(name);
    if (p.is_relative())
        p = base / p;
    std::ifstream in(p);
    if (!in)
        throw SchemaError("unknown category " + name);
    Json j;
    try
    {
        j = Json::parse(in);
    }
    catch (Json::parse_error const& e)
    {
        throw SchemaError("malformed JSON in " + p.string() + ": " + e.what());
    }
    return categoryFromJson(j, p.parent_path());
}

inline FinCat categoryFromJson(Json const& j, std::filesystem::path const& base)
{
    if (j.is_string())
        return namedCategory(j.get<std::string>(), base);
    std::vector<std::string> objects;
    for (auto const& o : detail::member(j, "objects", "category"))
        objects.push_back(detail::asString(o, "object"));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    if (j.contains("morphisms"))
        for (auto const& m : j.at("morphisms"))
            arrows.emplace_back(detail::asString(detail::member(m, "id", "morphism"), "morphism id"),
                                detail::asString(detail::member(m, "src", "morphism"), "morphism src"),
                                detail::asString(detail::member(m, "tgt", "morphism"), "morphism tgt"));
    std::vector<ComposeEntry> entries;
    if (j.contains("compose"))
        for (auto const& e : j.at("compose"))
            entries.push_back({detail::asString(detail::member(e, "g", "compose entry"), "g"),
                               detail::asString(detail::member(e, "f", "compose entry"), "f"),
                               detail::asString(detail::member(e, "gf", "compose entry"), "gf")});
    return FinCat::fromTables(objects, arrows, entries);
}

/// Category argument of a subcommand: "-", a file, or a built-in name.
inline FinCat readCategory(std::string const& arg, std::istream& stdinStream)
{
    if (arg != "-" && !std::filesystem::exists(arg))
        return namedCategory(arg, std::filesystem::current_path());
    Document const doc = readDocument(arg, stdinStream);
    return categoryFromJson(doc.json, doc.base);
}

inline Json categoryToJson(FinCat const& c)
{
    Json j;
    j["objects"] = c.objects;
    j["morphisms"] = Json::array();
    for (Index m = 0; m < c.morphismCount(); ++m)
        if (!c.isIdentity(m))
            j["morphisms"].push_back({{"id", c.morphisms[m].id},
                                      {"src", c.objects[c.src(m)]},
                                      {"tgt", c.objects[c.tgt(m)]}});
    j["compose"] = Json::array();
    for (Index g = 0; g < c.morphismCount(); ++g)
        for (Index f = 0; f < c.morphismCount(); ++f)
            if (!c.isIdentity(g) && !c.isIdentity(f) && c.tgt(f) == c.src(g))
                j["compose"].push_back({{"g", c.morphisms[g].id},
                                        {"f", c.morphisms[f].id},
                                        {"gf", c.morphisms[c.compose(g, f)].id}});
    return j;
}

inline Functor functorFromJson(Json const& j, std::filesystem::path const& base)
{
    Functor f;
    f.source = categoryFromJson(detail::member(j, "source", "functor"), base);
    f.target = categoryFromJson(detail::member(j, "target", "functor"), base);
    Json const& om = detail::member(j, "obj_map", "functor");
    f.objMap.assign(f.source.objectCount(), npos);
    for (Index x = 0; x < f.source.objectCount(); ++x)
    {
        if (!om.contains(f.source.objects[x]))
            throw SchemaError("obj_map has no image for " + f.source.objects[x]);
        f.objMap[x] = f.target.objectIndex(detail::asString(om.at(f.source.objects[x]), "object"));
    }
    Json const empty = Json::object();
    Json const& mm = j.contains("mor_map") ? j.at("mor_map") : empty;
    f.morMap.assign(f.source.morphismCount(), npos);
    for (Index m = 0; m < f.source.morphismCount(); ++m)
    {
        std::string const& id = f.source.morphisms[m].id;
        if (mm.contains(id))
            f.morMap[m] = f.target.morphismIndex(detail::asString(mm.at(id), "morphism"));
        else if (f.source.isIdentity(m))
            f.morMap[m] = f.target.identity(f.objMap[f.source.src(m)]);
        else
            throw SchemaError("mor_map has no image for " + id);
    }
    if (auto err = auditFunctor(f))
        throw InputError("not a functor: " + *err);
    return f;
}

inline Json functorToJson(Functor const& f)
{
    Json j;
    j["source"] = categoryToJson(f.source);
    j["target"] = categoryToJson(f.target);
    j["obj_map"] = Json::object();
    for (Index x = 0; x < f.source.objectCount(); ++x)
        j["obj_map"][f.source.objects[x]] = f.target.objects[f.objMap[x]];
    j["mor_map"] = Json::object();
    for (Index m = 0; m < f.source.morphismCount(); ++m)
        if (!f.source.isIdentity(m))
            j["mor_map"][f.source.morphisms[m].id] = f.target.morphisms[f.morMap[m]].id;
    return j;
}

// ---------------------------------------------------------------------
// Simplicial sets

/// Named constructors need the cap from context; cap < 0 means unknown.
inline SSet ssetFromJson(Json const& j, int cap)
{
    if (j.is_string())
    {
        std::string const name = j.get<std::string>();
        if (cap < 0)
            throw SchemaError("named simplicial set " + name + " needs a cap");
        if (name == "point")
            return point(cap);
        if (detail::startsWith(name, "delta:"))
            return standardSimplex(detail::namedParameter(name, "delta:"), cap);
        if (detail::startsWith(name, "boundary:"))
            return boundarySimplex(detail::namedParameter(name, "boundary:"), cap);
        if (name == "circle")
            return quotient(standardSimplex(1, cap), std::vector<RelationPair>{{0, 0, 1}}).quotient;
        throw SchemaError("unknown simplicial set " + name);
    }
    int const own = detail::asInt(detail::member(j, "cap", "simplicial set"), "cap");
    if (own < 0)
        throw SchemaError("negative cap");
    if (cap >= 0 && own < cap)
        throw CapError("simplicial set has cap " + std::to_string(own) + ", need " + std::to_string(cap));
    Json const& simplices = detail::member(j, "simplices", "simplicial set");
    if (!simplices.is_array() || simplices.size() != static_cast<std::size_t>(own) + 1)
        throw SchemaError("simplices must list degrees 0.." + std::to_string(own));
    std::vector<Index> sizes;
    std::vector<std::map<std::string, Index>> ids(own + 1);
    std::vector<std::vector<std::string>> labels(own + 1);
    for (int n = 0; n <= own; ++n)
    {
        for (auto const& s : simplices[n])
        {
            std::string const id = s.is_string() ? s.get<std::string>() : s.dump();
            if (!ids[n].emplace(id, labels[n].size()).second)
                throw SchemaError("duplicate simplex id " + id + " in degree " + std::to_string(n));
            labels[n].push_back(id);
        }
        sizes.push_back(labels[n].size());
    }
    SSet x = SSet::allocate(own, sizes);
    x.labels = labels;
    auto lookup = [&](int n, Json const& v) {
        std::string const id = v.is_string() ? v.get<std::string>() : v.dump();
        auto it = ids[n].find(id);
        if (it == ids[n].end())
            throw SchemaError("unknown simplex " + id + " in degree " + std::to_string(n));
        return it->second;
    };
    auto readMaps = [&](char const* key, bool face) {
        Json const empty = Json::object();
        Json const& table = j.contains(key) ? j.at(key) : empty;
        for (int n = face ? 1 : 0; n <= (face ? own : own - 1); ++n)
            for (int i = 0; i <= n; ++i)
            {
                std::string const k = std::to_string(n) + "," + std::to_string(i);
                if (!table.contains(k))
                    throw SchemaError(std::string(key) + " table has no entry " + k);
                Json const& m = table.at(k);
                int const to = face ? n - 1 : n + 1;
                auto& out = face ? x.faces[n][i] : x.degeneracies[n][i];
                for (Index s = 0; s < sizes[n]; ++s)
                {
                    if (!m.contains(labels[n][s]))
                        throw SchemaError(std::string(key) + " " + k + " has no value for " + labels[n][s]);
                    out[s] = lookup(to, m.at(labels[n][s]));
                }
            }
    };
    readMaps("face", true);
    readMaps("degeneracy", false);
    if (auto err = auditSSet(x))
        throw InputError("not a simplicial set: " + *err);
    return cap >= 0 && own > cap ? truncate(x, cap) : x;
}

/// Simplicial-set argument of a subcommand: "-", a file, or a named
/// constructor. cap < 0 keeps the stored cap.
inline SSet readSSet(std::string const& arg, std::istream& stdinStream, int cap)
{
    if (arg != "-" && !std::filesystem::exists(arg))
        return ssetFromJson(Json(arg), cap);
    Document const doc = readDocument(arg, stdinStream);
    return ssetFromJson(doc.json, cap);
}

/// Simplex ids: labels when they are distinct within each degree, otherwise
/// positions.
inline std::vector<std::vector<std::string>> simplexIds(SSet const& x)
{
    std::vector<std::vector<std::string>> ids(x.cap + 1);
    bool distinct = !x.labels.empty();
    for (int n = 0; distinct && n <= x.cap; ++n)
    {
        std::set<std::string> seen(x.labels[n].begin(), x.labels[n].end());
        distinct = seen.size() == x.labels[n].size();
    }
    for (int n = 0; n <= x.cap; ++n)
        for (Index s = 0; s < x.sizes[n]; ++s)
            ids[n].push_back(distinct ? x.labels[n][s] : std::to_string(s));
    return ids;
}

inline Json ssetToJson(SSet const& x)
{
    auto const ids = simplexIds(x);
    Json j;
    j["cap"] = x.cap;
    j["sizes"] = x.sizes;
    j["simplices"] = ids;
    j["face"] = Json::object();
    for (int n = 1; n <= x.cap; ++n)
        for (int i = 0; i <= n; ++i)
        {
            Json m = Json::object();
            for (Index s = 0; s < x.sizes[n]; ++s)
                m[ids[n][s]] = ids[n - 1][x.face(n, i, s)];
            j["face"][std::to_string(n) + "," + std::to_string(i)] = std::move(m);
        }
    j["degeneracy"] = Json::object();
    for (int n = 0; n < x.cap; ++n)
        for (int i = 0; i <= n; ++i)
        {
            Json m = Json::object();
            for (Index s = 0; s < x.sizes[n]; ++s)
                m[ids[n][s]] = ids[n + 1][x.degeneracy(n, i, s)];
            j["degeneracy"][std::to_string(n) + "," + std::to_string(i)] = std::move(m);
        }
    return j;
}

inline Json mapLevelsToJson(SMap const& f)
{
    auto const from = simplexIds(*f.source);
    auto const to = simplexIds(*f.target);
    Json j = Json::object();
    for (std::size_t n = 0; n < f.level.size(); ++n)
    {
        Json m = Json::object();
        for (Index s = 0; s < f.level[n].size(); ++s)
            m[from[n][s]] = to[n][f.level[n][s]];
        j[std::to_string(n)] = std::move(m);
    }
    return {{"levels", j}};
}

// ---------------------------------------------------------------------
// Diagrams

namespace detail
{

inline SMap mapFromJson(Json const& j, SSetPtr const& x, SSetPtr const& y, std::string const& what)
{
    int const cap = x->cap;
    auto const xid = simplexIds(*x);
    auto const yid = simplexIds(*y);
    auto find = [&](int n, Json const& v) {
        std::string const id = v.is_string() ? v.get<std::string>() : v.dump();
        for (Index s = 0; s < yid[n].size(); ++s)
            if (yid[n][s] == id)
                return s;
        throw SchemaError(what + ": unknown target simplex " + id + " in degree " + std::to_string(n));
    };
    SMap f{x, y, std::vector<LevelMap>(cap + 1)};
    if (j.contains("constant"))
        return constantMap(x, y, find(0, j.at("constant")));
    if (j.contains("levels"))
    {
        Json const& lv = j.at("levels");
        for (int n = 0; n <= cap; ++n)
        {
            Json const& m = member(lv, std::to_string(n).c_str(), what.c_str());
            for (Index s = 0; s < x->sizes[n]; ++s)
            {
                if (!m.contains(xid[n][s]))
                    throw SchemaError(what + ": no image for " + xid[n][s]);
                f.level[n].push_back(find(n, m.at(xid[n][s])));
            }
        }
        return f;
    }
    if (j.contains("vertices"))
    {
        Json const& vm = j.at("vertices");
        std::vector<Index> v(x->sizes[0]);
        for (Index s = 0; s < x->sizes[0]; ++s)
        {
            if (!vm.contains(xid[0][s]))
                throw SchemaError(what + ": no image for vertex " + xid[0][s]);
            v[s] = find(0, vm.at(xid[0][s]));
        }
        std::vector<std::map<std::vector<Index>, Index>> lookup(cap + 1);
        for (int n = 0; n <= cap; ++n)
            for (Index s = 0; s < y->sizes[n]; ++s)
            {
                std::vector<Index> seq;
                for (int k = 0; k <= n; ++k)
                    seq.push_back(y->vertex(n, s, k));
                if (!lookup[n].emplace(seq, s).second)
                    throw SchemaError(what + ": target simplices are not determined by their vertices");
            }
        for (int n = 0; n <= cap; ++n)
            for (Index s = 0; s < x->sizes[n]; ++s)
            {
                std::vector<Index> seq;
                for (int k = 0; k <= n; ++k)
                    seq.push_back(v[x->vertex(n, s, k)]);
                auto it = lookup[n].find(seq);
                if (it == lookup[n].end())
                    throw InputError(what + ": vertex map does not extend to a simplicial map");
                f.level[n].push_back(it->second);
            }
        return f;
    }
    throw SchemaError(what + ": map needs \"constant\", \"vertices\" or \"levels\"");
}

} // namespace detail

/// Loads a diagram at the caller's cap (cap >= 0) or at the document's.
/// Stored values above the requested cap are truncated; values below it are
/// a CapError.
inline Diagram diagramFromJson(Json const& j, std::filesystem::path const& base, int cap)
{
    FinCat const shape = categoryFromJson(detail::member(j, "shape", "diagram"), base);
    if (j.contains("cap"))
    {
        int const own = detail::asInt(j.at("cap"), "cap");
        if (cap >= 0 && own < cap)
            throw CapError("diagram has cap " + std::to_string(own) + ", requested " + std::to_string(cap));
        if (cap < 0)
            cap = own;
    }
    Json const& values = detail::member(j, "values", "diagram");
    Diagram d{shape, {}, std::vector<SMap>(shape.morphismCount())};
    for (auto const& o : shape.objects)
    {
        if (!values.contains(o))
            throw SchemaError("diagram has no value at " + o);
        SSet x = ssetFromJson(values.at(o), cap);
        if (cap < 0)
            cap = x.cap;
        else if (x.cap != cap)
            throw CapError("value at " + o + " has cap " + std::to_string(x.cap) + ", expected " + std::to_string(cap));
        d.values.push_back(share(std::move(x)));
    }
    Json const empty = Json::object();
    Json const& arrows = j.contains("arrows") ? j.at("arrows") : empty;
    for (auto const& [id, _] : arrows.items())
        shape.morphismIndex(id);   // rejects unknown ids
    Presentation const p = presentation(shape);
    for (Index x = 0; x < shape.objectCount(); ++x)
        d.arrows[shape.identity(x)] = identityMap(d.values[x]);
    for (Index m : p.order)
    {
        std::string const& id = shape.morphisms[m].id;
        SSetPtr const& src = d.values[shape.src(m)];
        SSetPtr const& tgt = d.values[shape.tgt(m)];
        if (arrows.contains(id))
            d.arrows[m] = detail::mapFromJson(arrows.at(id), src, tgt, "arrow " + id);
        else if (p.derivation[m].first != npos)
            d.arrows[m] = compose(d.arrows[p.derivation[m].first], d.arrows[p.derivation[m].second]);
        else if (std::all_of(tgt->sizes.begin(), tgt->sizes.end(), [](Index s) { return s == 1; }))
            d.arrows[m] = constantMap(src, tgt, 0);
        else
            throw SchemaError("diagram has no map for arrow " + id);
    }
    if (auto err = auditDiagram(d))
        throw InputError("not a diagram: " + *err);
    return d;
}

inline Json diagramToJson(Diagram const& d)
{
    Json j;
    j["shape"] = categoryToJson(d.shape);
    j["cap"] = d.cap();
    j["values"] = Json::object();
    for (Index x = 0; x < d.shape.objectCount(); ++x)
        j["values"][d.shape.objects[x]] = ssetToJson(*d.values[x]);
    j["arrows"] = Json::object();
    for (Index m = 0; m < d.shape.morphismCount(); ++m)
        if (!d.shape.isIdentity(m))
            j["arrows"][d.shape.morphisms[m].id] = mapLevelsToJson(d.arrows[m]);
    return j;
}

// ---------------------------------------------------------------------
// Homology and verdicts

inline Json homologyToJson(HomologySummary const& h)
{
    Json a = Json::array();
    for (auto const& d : h.degrees)
    {
        Json t = Json::array();
        for (auto const& f : d.torsion)
        {
            // small factors as numbers, anything wider as a decimal string
            if (f <= Integer(std::numeric_limits<long long>::max()))
                t.push_back(static_cast<long long>(f));
            else
                t.push_back(f.str());
        }
        a.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", t}});
    }
    return a;
}

inline Json verdictToJson(Verdict const& v)
{
    return {{"status", v.status}, {"witness", v.witness}};
}

inline Json provenance(std::string const& construction, int cap, std::vector<std::string> const& invocation)
{
    Json j{{"construction", construction}, {"invocation", invocation}};
    if (cap >= 0)
        j["cap"] = cap;
    return j;
}

} // namespace hocolimkit

#endif // HOCOLIMKIT_IO_HPP
