#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hocolimkit/cli.hpp"

using namespace hocolimkit;

namespace
{

std::filesystem::path const kData = HOCOLIMKIT_DATA_DIR;

std::string data(std::string const& name)
{
    return (kData / name).string();
}

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, std::string const& stdinText = "")
{
    args.insert(args.begin(), "hocolim");
    std::istringstream in(stdinText);
    std::ostringstream out, err;
    int const code = cli::run(args, cli::Streams{in, out, err});
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SpanHocolimIsACircle)
{
    Result const h = call({"hocolim", data("span.json"), "--cap", "3"});
    ASSERT_EQ(h.code, 0) << h.err;
    Result const r = call({"homology", "-", "--max-degree", "2", "--format", "text"}, h.out);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "H0 = Z, H1 = Z, H2 = 0\n");
}

TEST(Cli, BkAndVoevodskyAgreeOnHomology)
{
    Result const v = call({"hocolim", data("span.json"), "--cap", "3", "--max-degree", "2", "--format", "text"});
    Result const b = call({"hocolim", data("span.json"), "--cap", "3", "--max-degree", "2", "--format", "text",
                           "--method", "bk"});
    ASSERT_EQ(v.code, 0) << v.err;
    ASSERT_EQ(b.code, 0) << b.err;
    auto const lastLine = [](std::string const& s) {
        std::string t = s.substr(0, s.size() - 1);
        return t.substr(t.rfind('\n') + 1);
    };
    EXPECT_EQ(lastLine(v.out), "H0 = Z, H1 = Z, H2 = 0");
    EXPECT_EQ(lastLine(b.out), lastLine(v.out));
}

TEST(Cli, MissingCompositeNamesThePair)
{
    Result const r = call({"nerve", data("missing_composite.json"), "--cap", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("(g, f)"), std::string::npos) << r.err;
}

TEST(Cli, Validate)
{
    Result const bad = call({"validate", data("broken_identity.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(Json::parse(bad.out)["ok"], false);
    EXPECT_FALSE(Json::parse(bad.out)["witness"].empty());

    Result const good = call({"validate", data("square.json"), "--format", "text"});
    EXPECT_EQ(good.code, 0);
    EXPECT_EQ(good.out, "ok\n");

    EXPECT_EQ(call({"validate", "poset:2"}).code, 0);
}

TEST(Cli, CapViolationOnStdin)
{
    Result const r = call({"hocolim", "-", "--cap", "3"}, R"({"shape":"poset:0","cap":2,"values":{"0":"point"}})");
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HomologyRangeAboveCap)
{
    EXPECT_EQ(call({"homology", "circle", "--cap", "2", "--max-degree", "2"}).code, 2);
    Result const r = call({"homology", "circle", "--cap", "3", "--max-degree", "2", "--format", "text"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "H0 = Z, H1 = Z, H2 = 0\n");
}

TEST(Cli, CheckCofinal)
{
    Result const t = call({"check-cofinal", data("terminal_inclusion.json"), "--cap", "3"});
    EXPECT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(Json::parse(t.out)["passes"], true);

    Result const i = call({"check-cofinal", data("initial_inclusion.json"), "--cap", "3"});
    EXPECT_EQ(i.code, 1);
    Json const j = Json::parse(i.out);
    EXPECT_EQ(j["passes"], false);
    bool failed = false;
    for (auto const& o : j["objects"])
        failed = failed || o["verdict"]["status"] == "certified-fail";
    EXPECT_TRUE(failed);
}

TEST(Cli, ColimOfSpanIsAPoint)
{
    Result const r = call({"colim", data("span.json"), "--cap", "2", "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "colim sizes [1, 1, 1]\n");
}

TEST(Cli, KanAlongSpanToPoint)
{
    Result const k = call({"kan", data("span.json"), "--functor", data("span_to_point.json"), "--cap", "3"});
    ASSERT_EQ(k.code, 0) << k.err;
    Diagram const d = diagramFromJson(Json::parse(k.out), ".", -1);
    ASSERT_EQ(d.values.size(), 1u);
    EXPECT_EQ(describe(homologyOf(*d.values[0], 2)), "H0 = Z, H1 = Z, H2 = 0");
}

TEST(Cli, VerifyIsDeterministic)
{
    Result const a = call({"verify", "decalage", "--seed", "0"});
    Result const b = call({"verify", "decalage", "--seed", "0"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::string const last = a.out.substr(a.out.rfind('\n', a.out.size() - 2) + 1);
    Json const s = Json::parse(last)["summary"];
    EXPECT_EQ(s["fail"], 0);
    EXPECT_EQ(s["ok"], true);
}

TEST(Cli, UnknownNamesExitTwo)
{
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"verify", "no_such_suite"}).code, 2);
    EXPECT_EQ(call({"nerve", "no_such_category", "--cap", "2"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
}

TEST(Cli, OutWritesAFile)
{
    auto const path = std::filesystem::temp_directory_path() / "hocolimkit_cli_out.json";
    std::filesystem::remove(path);
    Result const r = call({"nerve", "span", "--cap", "2", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    Json const j = Json::parse(f);
    EXPECT_EQ(j["sizes"], Json::parse("[3, 5, 7]"));
    std::filesystem::remove(path);
}

TEST(Cli, ProvenanceRecordsInvocation)
{
    Result const r = call({"nerve", "poset:1", "--cap", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json const p = Json::parse(r.out)["provenance"];
    EXPECT_EQ(p["cap"], 2);
    EXPECT_EQ(p["invocation"], Json::parse(R"(["nerve", "poset:1", "--cap", "2"])"));
}
