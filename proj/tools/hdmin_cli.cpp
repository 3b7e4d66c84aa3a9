#include "hdmin/cobuchi_min.hpp"
#include "hdmin/core.hpp"
#include "hdmin/games.hpp"
#include "hdmin/gencobuchi_min.hpp"
#include "hdmin/hardness.hpp"
#include "hdmin/io.hpp"
#include "hdmin/transforms.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hdmin;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Output {
    std::string path;
    bool hoa = false;

    void add(CLI::App* cmd)
    {
        cmd->add_option("-o,--output", path, "Write the result here instead of standard output");
        cmd->add_flag("--hoa", hoa, "Write HOA instead of the native format");
    }
    void write(const Automaton& a) const
    {
        std::string text = hoa ? exportHOA(a) : serialiseNative(a);
        if (path.empty())
            std::cout << text;
        else
            writeTextFile(path, text);
    }
    void writeText(const std::string& text) const
    {
        if (path.empty())
            std::cout << text;
        else
            writeTextFile(path, text);
    }
};

const char* yesNo(bool b) { return b ? "yes" : "no"; }

int runMinimize(const std::string& in, const std::string& mode, const Output& out)
{
    Automaton a = loadAutomaton(in);
    if (a.acceptance() != Acceptance::GenCoBuchi)
        throw InputError("minimize expects a coBuchi-type automaton");
    if (mode == "hd-cobuchi")
        out.write(minimiseHDcoBuchi(a));
    else
        out.write(minimiseHDgenCoBuchi(a));
    return kYes;
}

int runCheckHD(const std::string& in)
{
    bool hd = isHistoryDeterministic(loadAutomaton(in));
    std::cout << "history-deterministic: " << yesNo(hd) << "\n";
    return hd ? kYes : kNo;
}

int runCheckProps(const std::string& in)
{
    Automaton a = loadAutomaton(in);
    auto reach = reachableStates(a);
    bool reachable = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    if (a.acceptance() == Acceptance::GenCoBuchi && a.colours() == 1) {
        CanonicityReport r = checkCanonicity(a);
        std::cout << "reachable: " << yesNo(r.reachableOnly) << "\n"
                  << "semantically-deterministic: " << yesNo(r.semanticallyDeterministic) << "\n"
                  << "normal-form: " << yesNo(r.normalForm) << "\n"
                  << "safe-deterministic: " << yesNo(r.safeDeterministic) << "\n"
                  << "safe-minimal: " << yesNo(r.safeMinimal) << "\n"
                  << "safe-centralised: " << yesNo(r.safeCentralised) << "\n"
                  << "nice: "
                  << yesNo(r.reachableOnly && r.semanticallyDeterministic && r.normalForm && r.safeDeterministic)
                  << "\n";
        return r.all() ? kYes : kNo;
    }
    // the safe-component flags only make sense for one colour
    std::cout << "reachable: " << yesNo(reachable) << "\n"
              << "deterministic: " << yesNo(a.isDeterministic()) << "\n";
    bool ok = reachable;
    if (a.acceptance() == Acceptance::GenCoBuchi) {
        bool sd = checkSemanticDeterminism(a, languagePartition(a));
        std::cout << "semantically-deterministic: " << yesNo(sd) << "\n";
        ok = ok && sd;
    }
    std::cout << "safe-component flags: need exactly one colour\n";
    return ok ? kYes : kNo;
}

int runEquiv(const std::string& left, const std::string& right, const std::string& mode)
{
    Automaton a = loadAutomaton(left);
    Automaton b = loadAutomaton(right);
    if (!(a.alphabet() == b.alphabet()))
        throw InputError("the automata use different alphabets");
    bool eq;
    if (mode == "det") {
        if (!a.isDeterministic() || !b.isDeterministic())
            throw InputError("--mode det needs deterministic automata");
        Lasso w;
        eq = equivalentDeterministic(a, b, &w);
        if (!eq)
            std::cout << "counterexample: " << formatLasso(a.alphabet(), w) << "\n";
    } else {
        eq = equivalent(a, b, EquivMode::HD);
    }
    std::cout << "equivalent: " << yesNo(eq) << "\n";
    return eq ? kYes : kNo;
}

Graph loadGraph(const std::string& path) { return parseEdges(readTextFile(path)); }

int runGadgetGraph(const std::string& in, const std::string& colouring, const Output& out)
{
    Graph g = loadGraph(in);
    Colouring c;
    if (colouring == "trivial") {
        c = trivialColouring(g);
    } else if (colouring == "auto") {
        int k = chromaticNumber(g);
        c = *graphColouring(g, k);
    } else {
        c = parseColouring(readTextFile(colouring), g);
        if (!isProperColouring(g, c))
            throw InputError("the colouring in " + colouring + " is not proper");
    }
    Automaton a = colouringToAutomaton(g, c);
    a.setName("LG");
    out.write(a);
    return kYes;
}

int runGadgetPseudoPath(const std::string& in, const std::string& init, const Output& out)
{
    Graph g = loadGraph(in);
    int v = g.vertexIndex(init);
    if (v < 0)
        throw InputError("unknown vertex '" + init + "'");
    if (!isConnected(g))
        throw InputError("the graph must be connected");
    for (int u = 0; u < g.vertexCount(); ++u)
        if (g.degree(u) < 2)
            throw InputError("vertex '" + g.name(u) + "' has degree below 2");
    out.write(pseudoPathAutomaton(g, v));
    return kYes;
}

int runRecolor(const std::string& in, const Output& out)
{
    Automaton a = loadAutomaton(in);
    if (!a.isDeterministic())
        throw InputError("recolor expects a deterministic automaton");
    Automaton r = recolourGreedy(a);
    std::cerr << "colours: " << a.colours() << " -> " << r.colours() << "\n";
    out.write(r);
    return kYes;
}

int runExactMin(const std::string& in, int states, int colours, const std::string& mode, double budget,
                const Output& out)
{
    ExactMinQuery q{loadAutomaton(in), states, colours, mode == "hd" ? ExactMode::HD : ExactMode::Det, budget};
    ExactMinStats stats;
    auto r = exactMinimise(q, &stats);
    std::cerr << "structures: " << stats.structures << ", colour searches: " << stats.colourSearches
              << ", game checks: " << stats.gameChecks << "\n";
    if (!r) {
        std::cout << "infeasible\n";
        return kNo;
    }
    out.write(*r);
    return kYes;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimisation and analysis of history-deterministic generalised (co)Buchi automata"};
    app.require_subcommand(1);
    int code = kYes;

    std::string in, in2, mode, colouring = "trivial", init;
    int n = 0, maxStates = 1, maxColours = 1;
    double budget = 1e10;
    Output out;

    auto* minimize = app.add_subcommand("minimize", "Minimal HD coBuchi or generalised coBuchi automaton");
    minimize->add_option("input", in, "Automaton file")->required();
    mode = "hd-gencobuchi";
    minimize->add_option("--mode", mode)->check(CLI::IsMember({"hd-gencobuchi", "hd-cobuchi"}));
    out.add(minimize);
    minimize->callback([&] { code = runMinimize(in, mode, out); });

    auto* check = app.add_subcommand("check", "Property checks");
    check->require_subcommand(1);
    auto* checkHD = check->add_subcommand("hd", "Is the automaton history-deterministic");
    checkHD->add_option("input", in)->required();
    checkHD->callback([&] { code = runCheckHD(in); });
    auto* checkProps = check->add_subcommand("props", "Nice, safe-minimal and safe-centralised report");
    checkProps->add_option("input", in)->required();
    checkProps->callback([&] { code = runCheckProps(in); });

    auto* equiv = app.add_subcommand("equiv", "Language equivalence");
    equiv->add_option("a", in)->required();
    equiv->add_option("b", in2)->required();
    std::string equivMode = "det";
    equiv->add_option("--mode", equivMode)->check(CLI::IsMember({"det", "hd"}));
    equiv->callback([&] { code = runEquiv(in, in2, equivMode); });

    auto* gadget = app.add_subcommand("gadget", "Hardness gadgets");
    gadget->require_subcommand(1);
    auto* gGraph = gadget->add_subcommand("graph", "Colouring automaton of a graph");
    gGraph->add_option("edges", in)->required();
    gGraph->add_option("--colouring", colouring, "trivial, auto or a colouring file");
    out.add(gGraph);
    gGraph->callback([&] { code = runGadgetGraph(in, colouring, out); });
    auto* gPath = gadget->add_subcommand("pseudopath", "Pseudo-path automaton of a graph");
    gPath->add_option("edges", in)->required();
    gPath->add_option("--init", init)->required();
    out.add(gPath);
    gPath->callback([&] { code = runGadgetPseudoPath(in, init, out); });
    auto* gExp = gadget->add_subcommand("expfamily", "Two-colour family needing many colours on one state");
    gExp->add_option("n", n)->required()->check(CLI::Range(1, 31));
    out.add(gExp);
    gExp->callback([&] { out.write(expFamily(n)); });
    auto* gTri = gadget->add_subcommand("trianglefull", "Triangle-full 4-clique-free graph, same 3-colourability");
    gTri->add_option("edges", in)->required();
    out.add(gTri);
    gTri->callback([&] { out.writeText(serialiseEdges(triangleFullTransform(loadGraph(in)))); });

    auto* recolor = app.add_subcommand("recolor", "Greedy colour removal");
    recolor->add_option("input", in)->required();
    out.add(recolor);
    recolor->callback([&] { code = runRecolor(in, out); });

    auto* exact = app.add_subcommand("exactmin", "Exhaustive search for a small equivalent automaton");
    exact->add_option("input", in)->required();
    exact->add_option("--max-states", maxStates)->check(CLI::PositiveNumber);
    exact->add_option("--max-colours", maxColours)->check(CLI::NonNegativeNumber);
    std::string exactMode = "det";
    exact->add_option("--mode", exactMode)->check(CLI::IsMember({"det", "hd"}));
    exact->add_option("--budget", budget, "Largest estimated number of candidates");
    out.add(exact);
    exact->callback([&] { code = runExactMin(in, maxStates, maxColours, exactMode, budget, out); });

    auto* convert = app.add_subcommand("convert", "Rewrite an automaton in canonical native form or HOA");
    convert->add_option("input", in)->required();
    out.add(convert);
    convert->callback([&] { out.write(loadAutomaton(in)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kYes : kError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return code;
}
