#include <gtest/gtest.h>

#include <sstream>

#include "hocolimkit/io.hpp"
#include "hocolimkit/roster.hpp"

using namespace hocolimkit;

namespace
{

std::filesystem::path const kData = HOCOLIMKIT_DATA_DIR;

Json load(std::string const& name)
{
    std::istringstream none;
    return readDocument((kData / name).string(), none).json;
}

// Same objects, same morphism ids with the same ends, same composites by id.
void expectSameTables(FinCat const& a, FinCat const& b)
{
    ASSERT_EQ(a.objects, b.objects);
    ASSERT_EQ(a.morphismCount(), b.morphismCount());
    for (Index m = 0; m < a.morphismCount(); ++m)
    {
        Index const n = b.morphismIndex(a.morphisms[m].id);
        EXPECT_EQ(a.objects[a.src(m)], b.objects[b.src(n)]);
        EXPECT_EQ(a.objects[a.tgt(m)], b.objects[b.tgt(n)]);
    }
    for (Index g = 0; g < a.morphismCount(); ++g)
        for (Index f = 0; f < a.morphismCount(); ++f)
        {
            if (a.tgt(f) != a.src(g))
                continue;
            Index const gb = b.morphismIndex(a.morphisms[g].id), fb = b.morphismIndex(a.morphisms[f].id);
            EXPECT_EQ(a.morphisms[a.compose(g, f)].id, b.morphisms[b.compose(gb, fb)].id);
        }
}

} // namespace

TEST(CategoryJson, RoundTrip)
{
    std::vector<FinCat> cs;
    for (auto const& c : curatedCategories())
        cs.push_back(c.category);
    for (Index k = 0; k < 20; ++k)
    {
        Rng rng = instanceRng(0, "io", k);
        cs.push_back(randomCategory(rng).category);
    }
    for (auto const& c : cs)
        expectSameTables(c, categoryFromJson(categoryToJson(c), "."));
}

TEST(CategoryJson, Names)
{
    expectSameTables(categoryFromJson(Json("poset:2"), "."), posetCategory(2));
    EXPECT_EQ(categoryFromJson(Json("discrete:3"), ".").morphismCount(), 3u);
    expectSameTables(categoryFromJson(Json("span"), "."), spanCategory());
    EXPECT_THROW(categoryFromJson(Json("poset:x"), "."), SchemaError);
    EXPECT_THROW(categoryFromJson(Json("no-such-file.json"), "."), SchemaError);
}

TEST(CategoryJson, DataFiles)
{
    expectSameTables(categoryFromJson(load("span_category.json"), kData), spanCategory());
    FinCat const sq = categoryFromJson(load("square.json"), kData);
    EXPECT_TRUE(validateCategory(sq).ok);
    EXPECT_EQ(sq.morphismCount(), 9u);
    EXPECT_FALSE(validateCategory(categoryFromJson(load("broken_identity.json"), kData)).ok);
    EXPECT_THROW(categoryFromJson(load("missing_composite.json"), kData), SchemaError);
}

TEST(CategoryJson, MissingField)
{
    EXPECT_THROW(categoryFromJson(Json::parse(R"({"morphisms": []})"), "."), SchemaError);
}

TEST(FunctorJson, DataFilesAndRoundTrip)
{
    for (char const* name : {"terminal_inclusion.json", "initial_inclusion.json", "span_to_point.json",
                             "parallel_to_point.json"})
    {
        Functor const f = functorFromJson(load(name), kData);
        EXPECT_FALSE(auditFunctor(f).has_value()) << name;
        Functor const g = functorFromJson(functorToJson(f), ".");
        EXPECT_EQ(g.objMap, f.objMap) << name;
        EXPECT_EQ(g.morMap, f.morMap) << name;
    }
}

TEST(FunctorJson, NonFunctorRejected)
{
    Json j = Json::parse(R"({"source": "poset:2", "target": "poset:2",
        "obj_map": {"0": "0", "1": "1", "2": "2"},
        "mor_map": {"0<1": "0<1", "1<2": "1<2", "0<2": "0<1"}})");
    EXPECT_THROW(functorFromJson(j, "."), InputError);
    j["mor_map"].erase("0<2");
    EXPECT_THROW(functorFromJson(j, "."), SchemaError);
}

TEST(SSetJson, RoundTrip)
{
    Quotient const circ = quotient(standardSimplex(1, 3), std::vector<RelationPair>{{0, 0, 1}});
    for (SSet const& x : {point(2), standardSimplex(2, 3), boundarySimplex(2, 3), circ.quotient,
                          nerve(spanCategory(), 2).sset, product(standardSimplex(1, 2), boundarySimplex(2, 2))})
        EXPECT_EQ(ssetFromJson(ssetToJson(x), -1), x);
}

TEST(SSetJson, Names)
{
    EXPECT_EQ(ssetFromJson(Json("delta:2"), 2), standardSimplex(2, 2));
    EXPECT_EQ(ssetFromJson(Json("boundary:2"), 3), boundarySimplex(2, 3));
    EXPECT_EQ(ssetFromJson(Json("point"), 1), point(1));
    EXPECT_EQ(ssetFromJson(Json("circle"), 2).sizes, (std::vector<Index>{1, 2, 3}));
    EXPECT_THROW(ssetFromJson(Json("point"), -1), SchemaError);
    EXPECT_THROW(ssetFromJson(Json("torus"), 2), SchemaError);
    EXPECT_THROW(ssetFromJson(Json("delta:-1"), 2), SchemaError);
}

TEST(SSetJson, ExplicitCircle)
{
    SSet const c = ssetFromJson(load("circle.json"), -1);
    EXPECT_EQ(c.sizes, (std::vector<Index>{1, 2, 3}));
    EXPECT_THROW(ssetFromJson(load("circle.json"), 3), CapError);
    EXPECT_EQ(ssetFromJson(load("circle.json"), 1).cap, 1);
}

TEST(SSetJson, BrokenTablesRejected)
{
    Json j = load("circle.json");
    j["face"]["2,0"]["e0"] = "v0";
    EXPECT_THROW(ssetFromJson(j, -1), InputError);
    j = load("circle.json");
    j["face"].erase("1,1");
    EXPECT_THROW(ssetFromJson(j, -1), SchemaError);
    j = load("circle.json");
    j["simplices"][1] = {"e", "e"};
    EXPECT_THROW(ssetFromJson(j, -1), SchemaError);
}

TEST(DiagramJson, SpanFromData)
{
    Diagram const x = diagramFromJson(load("span.json"), kData, 3);
    EXPECT_FALSE(auditDiagram(x).has_value());
    EXPECT_EQ(x.cap(), 3);
    EXPECT_EQ(x.at(1).sizes, boundarySimplex(1, 3).sizes);
}

TEST(DiagramJson, VertexMaps)
{
    Diagram const x = diagramFromJson(load("boundary_inclusion.json"), kData, 2);
    SMap const& f = x.arrows[x.shape.morphismIndex("0<1")];
    EXPECT_EQ(f(0, 0), 0u);
    EXPECT_EQ(f(0, 1), 1u);
}

TEST(DiagramJson, RoundTrip)
{
    Diagram const x = diagramFromJson(load("boundary_inclusion.json"), kData, 3);
    Diagram const y = diagramFromJson(diagramToJson(x), ".", -1);
    ASSERT_EQ(y.values.size(), x.values.size());
    for (Index i = 0; i < x.values.size(); ++i)
        EXPECT_EQ(*y.values[i], *x.values[i]);
    for (Index m = 0; m < x.arrows.size(); ++m)
        EXPECT_TRUE(sameLevels(x.arrows[m], y.arrows[m]));
}

TEST(DiagramJson, Errors)
{
    Json j = load("span.json");
    j["values"].erase("b");
    EXPECT_THROW(diagramFromJson(j, kData, 2), SchemaError);

    j = load("span.json");
    j["arrows"]["q"] = {{"constant", "0"}};
    EXPECT_THROW(diagramFromJson(j, kData, 2), SchemaError);

    // a map from S0 to S0 must be given explicitly
    j = Json::parse(R"({"shape": "poset:1", "values": {"0": "boundary:1", "1": "boundary:1"}})");
    EXPECT_THROW(diagramFromJson(j, ".", 2), SchemaError);

    // the vertex map 0,1 -> 0,1 of Delta[1] -> S0 does not extend
    j = Json::parse(R"({"shape": "poset:1", "values": {"0": "delta:1", "1": "boundary:1"},
                        "arrows": {"0<1": {"vertices": {"0": "0", "1": "1"}}}})");
    EXPECT_THROW(diagramFromJson(j, ".", 2), InputError);

    j = Json::parse(R"({"shape": "poset:0", "cap": 2, "values": {"0": "point"}})");
    EXPECT_THROW(diagramFromJson(j, ".", 3), CapError);
}

TEST(Output, HomologyAndProvenance)
{
    Json const h = homologyToJson(homologyOf(boundarySimplex(2, 3), 1));
    EXPECT_EQ(h.dump(), R"([{"betti":1,"degree":0,"torsion":[]},{"betti":1,"degree":1,"torsion":[]}])");
    Json const p = provenance("nerve", 2, {"nerve", "span", "--cap", "2"});
    EXPECT_EQ(p["cap"], 2);
    EXPECT_EQ(p["invocation"].size(), 4u);
}
