// cli.hpp
//
// The hocolim command line. run() is the whole program; main() only forwards
// argv and the standard streams, so tests drive it in-process.
//
// Exit codes: 0 success, 1 a checked property failed (the output carries the
// witness), 2 malformed input, unknown names or a cap violation.

#ifndef HOCOLIMKIT_CLI_HPP
#define HOCOLIMKIT_CLI_HPP

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "error.hpp"
#include "fincat.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "replace.hpp"
#include "sset.hpp"
#include "verify.hpp"

namespace hocolimkit::cli
{

struct Streams
{
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

namespace detail
{

struct Common
{
    std::string out = "-";
    std::string format = "json";
};

inline void addCommon(CLI::App* sub, Common& c)
{
    sub->add_option("--out,-o", c.out, "output file, - for stdout");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

inline void emit(Streams& s, Common const& c, std::string const& text)
{
    if (c.out == "-")
    {
        s.out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw SchemaError("cannot write " + c.out);
    f << text;
}

inline std::string sizesText(std::vector<Index> const& sizes)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < sizes.size(); ++k)
        os << (k ? ", " : "") << sizes[k];
    os << "]";
    return os.str();
}

inline void requireRange(int cap, int maxDegree)
{
    if (maxDegree < 0)
        throw CapError("max degree must be non-negative");
    if (cap < maxDegree + 1)
        throw CapError("cap " + std::to_string(cap) + " is below max degree + 1 = " + std::to_string(maxDegree + 1));
}

} // namespace detail

inline int run(std::vector<std::string> const& args, Streams s)
{
    CLI::App app{"Homotopy colimits of finite diagrams of simplicial sets", "hocolim"};
    app.require_subcommand(1);
    std::vector<std::string> const invocation(args.begin() + (args.empty() ? 0 : 1), args.end());

    detail::Common common;
    std::string input;
    int cap = -1;
    int maxDegree = -1;
    std::string method = "voevodsky";
    std::string functorPath;
    std::string suite;
    std::uint64_t seed = 0;
    int randomCount = -1;

    auto* validate = app.add_subcommand("validate", "check a category table");
    validate->add_option("category", input)->required();
    detail::addCommon(validate, common);

    auto* nerveCmd = app.add_subcommand("nerve", "nerve of a category");
    nerveCmd->add_option("category", input)->required();
    nerveCmd->add_option("--cap", cap)->required();
    detail::addCommon(nerveCmd, common);

    auto* hocolimCmd = app.add_subcommand("hocolim", "homotopy colimit of a diagram");
    hocolimCmd->add_option("diagram", input)->required();
    hocolimCmd->add_option("--method", method)->check(CLI::IsMember({"voevodsky", "bk"}));
    hocolimCmd->add_option("--cap", cap)->required();
    hocolimCmd->add_option("--max-degree", maxDegree, "also report homology through this degree");
    detail::addCommon(hocolimCmd, common);

    auto* kanCmd = app.add_subcommand("kan", "pointwise homotopy left Kan extension");
    kanCmd->add_option("diagram", input)->required();
    kanCmd->add_option("--functor", functorPath)->required();
    kanCmd->add_option("--cap", cap)->required();
    detail::addCommon(kanCmd, common);

    auto* homologyCmd = app.add_subcommand("homology", "integral homology of a simplicial set");
    homologyCmd->add_option("sset", input)->required();
    homologyCmd->add_option("--max-degree", maxDegree)->required();
    homologyCmd->add_option("--cap", cap, "read the input at this cap");
    detail::addCommon(homologyCmd, common);

    auto* cofinalCmd = app.add_subcommand("check-cofinal", "homotopy right cofinality of a functor");
    cofinalCmd->add_option("functor", input)->required();
    cofinalCmd->add_option("--cap", cap)->required();
    detail::addCommon(cofinalCmd, common);

    auto* colimCmd = app.add_subcommand("colim", "colimit of a diagram");
    colimCmd->add_option("diagram", input)->required();
    colimCmd->add_option("--cap", cap);
    detail::addCommon(colimCmd, common);

    auto* verifyCmd = app.add_subcommand("verify", "run theorem suites");
    std::vector<std::string> suites = suiteNames();
    suites.push_back("all");
    verifyCmd->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
    verifyCmd->add_option("--seed", seed);
    verifyCmd->add_option("--random", randomCount, "random instances per suite (default: per suite)");
    detail::addCommon(verifyCmd, common);

    std::vector<char const*> argv;
    for (auto const& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("hocolim");
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        s.out << app.help();
        return 0;
    }
    catch (CLI::CallForAllHelp const&)
    {
        s.out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (CLI::ParseError const& e)
    {
        s.err << "error: " << e.what() << "\n";
        return 2;
    }

    bool const text = common.format == "text";
    try
    {
        if (*validate)
        {
            FinCat const c = readCategory(input, s.in);
            ValidationReport const r = validateCategory(c);
            if (text)
                detail::emit(s, common, r.ok ? std::string("ok\n") : "fail: " + r.violation + "\n");
            else
            {
                Json j{{"ok", r.ok}, {"provenance", provenance("validate", -1, invocation)}};
                if (!r.ok)
                {
                    j["violation"] = r.violation;
                    j["witness"] = r.witness;
                }
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return r.ok ? 0 : 1;
        }
        if (*nerveCmd)
        {
            if (cap < 0)
                throw CapError("cap must be non-negative");
            FinCat const c = readCategory(input, s.in);
            ValidationReport const r = validateCategory(c);
            if (!r.ok)
                throw SchemaError("invalid category: " + r.violation);
            Nerve const nv = nerve(c, cap);
            if (text)
                detail::emit(s, common, "nerve cap " + std::to_string(cap) + " sizes " + detail::sizesText(nv.sset.sizes) + "\n");
            else
            {
                Json j = ssetToJson(nv.sset);
                j["provenance"] = provenance("nerve", cap, invocation);
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (*hocolimCmd)
        {
            if (maxDegree >= 0)
                detail::requireRange(cap, maxDegree);
            if (cap < 0)
                throw CapError("cap must be non-negative");
            Document const doc = readDocument(input, s.in);
            Diagram const x = diagramFromJson(doc.json, doc.base, cap);
            SSetPtr const h = method == "bk" ? bousfieldKanHocolim(x).sset : voevodskyHocolim(x, cap).sset;
            if (text)
            {
                std::string t = "hocolim (" + method + ") cap " + std::to_string(cap) + " sizes " + detail::sizesText(h->sizes) + "\n";
                if (maxDegree >= 0)
                    t += describe(homologyOf(*h, maxDegree)) + "\n";
                detail::emit(s, common, t);
            }
            else
            {
                Json j = ssetToJson(*h);
                if (maxDegree >= 0)
                    j["homology"] = homologyToJson(homologyOf(*h, maxDegree));
                j["provenance"] = provenance(method == "bk" ? "bousfield-kan hocolim" : "voevodsky hocolim", cap, invocation);
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (*kanCmd)
        {
            if (cap < 0)
                throw CapError("cap must be non-negative");
            Document const doc = readDocument(input, s.in);
            Diagram const x = diagramFromJson(doc.json, doc.base, cap);
            Document const fdoc = readDocument(functorPath, s.in);
            Functor const f = functorFromJson(fdoc.json, fdoc.base);
            if (f.source.objects != x.shape.objects || f.source.morphismCount() != x.shape.morphismCount())
                throw SchemaError("functor source does not match the diagram shape");
            for (Index m = 0; m < f.source.morphismCount(); ++m)
                if (f.source.morphisms[m].id != x.shape.morphisms[m].id)
                    throw SchemaError("functor source does not match the diagram shape");
            KanExtension const k = homotopyLeftKan(f, x, cap);
            if (auto err = auditDiagram(k.diagram))
            {
                s.err << "Kan extension is not functorial: " << *err << "\n";
                return 1;
            }
            if (text)
            {
                std::string t;
                for (Index j = 0; j < f.target.objectCount(); ++j)
                    t += f.target.objects[j] + ": sizes " + detail::sizesText(k.diagram.values[j]->sizes) + "\n";
                detail::emit(s, common, t);
            }
            else
            {
                Json j = diagramToJson(k.diagram);
                j["provenance"] = provenance("homotopy left Kan extension", cap, invocation);
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (*homologyCmd)
        {
            SSet const x = readSSet(input, s.in, cap);
            detail::requireRange(x.cap, maxDegree);
            HomologySummary const h = homologyOf(x, maxDegree);
            if (text)
                detail::emit(s, common, describe(h) + "\n");
            else
            {
                Json j{{"homology", homologyToJson(h)}, {"provenance", provenance("homology", x.cap, invocation)}};
                j["provenance"]["max_degree"] = maxDegree;
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (*cofinalCmd)
        {
            if (cap < 1)
                throw CapError("cofinality check needs cap >= 1");
            Document const doc = readDocument(input, s.in);
            Functor const f = functorFromJson(doc.json, doc.base);
            CofinalityReport const r = checkHomotopyRightCofinal(f, cap);
            if (text)
            {
                std::string t;
                for (auto const& o : r.objects)
                    t += o.object + ": " + o.verdict.status + " (" + o.verdict.witness + ")\n";
                detail::emit(s, common, t);
            }
            else
            {
                Json j{{"passes", r.passes()}, {"objects", Json::array()}};
                for (auto const& o : r.objects)
                    j["objects"].push_back({{"object", o.object}, {"verdict", verdictToJson(o.verdict)}});
                j["provenance"] = provenance("check-cofinal", cap, invocation);
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return r.passes() ? 0 : 1;
        }
        if (*colimCmd)
        {
            Document const doc = readDocument(input, s.in);
            Diagram const x = diagramFromJson(doc.json, doc.base, cap);
            ColimAugmentation const c = colimAugmentation(x);
            if (text)
                detail::emit(s, common, "colim sizes " + detail::sizesText(c.colim.sizes) + "\n");
            else
            {
                Json j = ssetToJson(c.colim);
                j["provenance"] = provenance("colim", x.cap(), invocation);
                detail::emit(s, common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (*verifyCmd)
        {
            SuiteOptions opt;
            opt.seed = seed;
            opt.randomCount = randomCount;
            std::vector<std::string> const run = suite == "all" ? suiteNames() : std::vector<std::string>{suite};
            std::ostringstream os;
            SuiteSummary total;
            Json perSuite = Json::object();
            for (auto const& name : run)
            {
                auto const reports = runSuite(name, opt);
                SuiteSummary const sum = summarize(reports);
                for (auto const& r : reports)
                {
                    total.add(r);
                    if (text)
                    {
                        os << r.suite << " #" << r.index << ": " << r.status;
                        if (r.status == "control")
                            os << (r.refuted ? " (refuted)" : " (not refuted)");
                        os << "\n";
                    }
                    else
                        os << r.toJson().dump() << "\n";
                }
                perSuite[name] = sum.toJson();
            }
            if (text)
                os << "total: " << total.pass << " pass, " << total.fail << " fail, " << total.controls
                   << " controls (" << total.refuted << " refuted)\n";
            else
            {
                Json summary = total.toJson();
                summary["suites"] = perSuite;
                summary["ok"] = total.ok();
                summary["provenance"] = provenance("verify " + suite, -1, invocation);
                os << Json{{"summary", summary}}.dump() << "\n";
            }
            detail::emit(s, common, os.str());
            return total.ok() ? 0 : 1;
        }
    }
    catch (Error const& e)
    {
        s.err << e.what() << "\n";
        return 2;
    }
    catch (nlohmann::json::exception const& e)
    {
        s.err << "schema error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace hocolimkit::cli

#endif // HOCOLIMKIT_CLI_HPP
