// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "hdmin/cobuchi_min.hpp"
#include "hdmin/fixtures.hpp"
#include "hdmin/games.hpp"
#include "hdmin/gencobuchi_min.hpp"
#include "hdmin/hardness.hpp"
#include "hdmin/io.hpp"
#include "hdmin/transforms.hpp"

#include "oracles.hpp"
#include "random_gen.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace hdmin;

namespace {

struct Check {
    bool ok = true;
    std::string firstFailure;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            firstFailure = what;
        }
    }
};

int runCli(const std::string& args)
{
    std::string cmd = std::string(HDMIN_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string fixture(const std::string& name) { return std::string(HDMIN_FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratchDir()
{
    auto dir = std::filesystem::temp_directory_path() / ("hdmin_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

bool twoWayContains(const Automaton& a, const Automaton& b) { return containsHD(a, b) && containsHD(b, a); }

// 1
void criterionL3(Check& c)
{
    auto dir = scratchDir();
    std::string t3 = fixture("t3.aut");
    std::string coOut = (dir / "t3_co.aut").string(), genOut = (dir / "t3_gen.aut").string();
    c.expect(runCli("minimize --mode hd-cobuchi " + t3 + " -o " + coOut) == 0, "minimize hd-cobuchi failed");
    c.expect(runCli("minimize --mode hd-gencobuchi " + t3 + " -o " + genOut) == 0, "minimize hd-gencobuchi failed");
    if (!c.ok)
        return;
    Automaton ref = loadAutomaton(t3);
    Automaton co = loadAutomaton(coOut);
    Automaton gen = loadAutomaton(genOut);
    c.expect(co.stateCount() == 6, "coBuchi output has " + std::to_string(co.stateCount()) + " states");
    c.expect(gen.stateCount() == 2, "generalised output has " + std::to_string(gen.stateCount()) + " states");
    c.expect(gen.colours() == 3, "generalised output has " + std::to_string(gen.colours()) + " colours");
    c.expect(isHistoryDeterministic(co) && isHistoryDeterministic(gen), "output not HD");
    c.expect(twoWayContains(ref, co), "coBuchi output not equivalent to T3");
    c.expect(twoWayContains(ref, gen), "generalised output not equivalent to T3");
    std::filesystem::remove_all(dir);
}

// 2
void criterionFinBC(Check& c)
{
    for (const Automaton& in : {fixtures::xbc(), fixtures::fig1()}) {
        Automaton co = minimiseHDcoBuchi(in);
        Automaton gen = minimiseHDgenCoBuchi(in);
        c.expect(co.stateCount() == 2, in.name() + ": coBuchi output has " + std::to_string(co.stateCount()) + " states");
        c.expect(gen.stateCount() == 1 && gen.colours() == 2,
                 in.name() + ": generalised output has " + std::to_string(gen.stateCount()) + " states, " +
                     std::to_string(gen.colours()) + " colours");
        c.expect(twoWayContains(in, co) && twoWayContains(in, gen), in.name() + ": outputs not equivalent");
    }
    Automaton ref = fixtures::xbc();
    // 1 state is optimal for the generalised case: found with 2 colours
    c.expect(exactMinimise({ref, 1, 2, ExactMode::HD}).has_value(), "no 1-state 2-colour HD automaton found");
    // 2 states optimal for coBuchi: nothing with 1 state and 1 colour, deterministic or HD
    c.expect(!exactMinimise({ref, 1, 1, ExactMode::HD}).has_value(), "1-state HD coBuchi automaton found");
    c.expect(!exactMinimise({ref, 1, 1, ExactMode::Det}).has_value(), "1-state det coBuchi automaton found");
    c.expect(exactMinimise({ref, 2, 1, ExactMode::HD}).has_value(), "no 2-state HD coBuchi automaton found");
}

// 3
void criterionCanonicity(Check& c)
{
    gen::Rng rng(31);
    int exactChecked = 0;
    for (int i = 0; i < 100 && c.ok; ++i) {
        gen::AutomatonShape shape;
        shape.states = 2 + static_cast<int>(rng() % 5);
        shape.letters = 2 + static_cast<int>(rng() % 2);
        shape.colourProb = 0.35;
        Automaton in = gen::randomAutomaton(rng, shape);
        std::string tag = "random #" + std::to_string(i);
        Automaton out = minimiseHDcoBuchi(in);
        CanonicityReport r = checkCanonicity(out);
        c.expect(r.all(), tag + ": " + describe(r));
        c.expect(isHistoryDeterministic(out), tag + ": output not HD");
        c.expect(twoWayContains(in, out), tag + ": output not equivalent");
        c.expect(!oracle::lassoDisagreement(in, out, 2, 3), tag + ": lasso oracle disagrees");
        if (out.stateCount() <= 4 && out.stateCount() >= 2) {
            ++exactChecked;
            c.expect(!exactMinimise({in, out.stateCount() - 1, 1, ExactMode::HD}).has_value(),
                     tag + ": smaller HD coBuchi automaton exists");
        }
    }
    c.expect(exactChecked > 0, "no output small enough for the exact check");
}

// 4
void criterionSizeLaws(Check& c)
{
    std::vector<Automaton> canon = {fixtures::l3can(), minimiseHDcoBuchi(fixtures::xbc()),
                                    minimiseHDcoBuchi(fixtures::t3()), minimiseHDcoBuchi(fixtures::tinit()),
                                    minimiseHDcoBuchi(fixtures::fig1())};
    gen::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        gen::AutomatonShape shape;
        shape.states = 2 + static_cast<int>(rng() % 5);
        shape.letters = 2 + static_cast<int>(rng() % 2);
        canon.push_back(minimiseHDcoBuchi(gen::randomAutomaton(rng, shape)));
    }
    for (const Automaton& amin : canon) {
        SizeProfile p = sizeProfile(amin);
        int comps = static_cast<int>(safeComponents(amin).components.size());
        Automaton general = buildGeneral(amin);
        int sum = std::accumulate(p.size.begin(), p.size.end(), 0);
        c.expect(general.stateCount() == sum, amin.name() + ": general size differs from the sum of n_j");
        c.expect(general.colours() == comps, amin.name() + ": colour count differs from safe components");
        if (p.classCount == 1) {
            Automaton pi = buildPrefixIndependent(amin);
            c.expect(pi.stateCount() == p.nMax, amin.name() + ": prefix-independent size differs from n_max");
            c.expect(pi.colours() == comps, amin.name() + ": colour count differs from safe components");
        }
    }
}

// 5
void criterionHD(Check& c)
{
    for (const Automaton& a : {fixtures::t3(), fixtures::xbc(), fixtures::tinit(), fixtures::l3can()})
        c.expect(isHistoryDeterministic(a), a.name() + " reported not HD");
    c.expect(isHistoryDeterministic(fixtures::gcb2()), "GCB2 reported not HD");
    c.expect(isHistoryDeterministic(fixtures::fig1()), "FIG1 reported not HD");
    c.expect(!isHistoryDeterministic(fixtures::nonhd3()), "NONHD3 reported HD");
    for (const Automaton& a : {fixtures::fig1(), fixtures::nonhd3()})
        c.expect(oracle::letterGameHD(a) == isHistoryDeterministic(a), a.name() + ": letter game disagrees");
    gen::Rng rng(53);
    int compared = 0, positive = 0, negative = 0;
    for (int tries = 0; compared < 50 && tries < 2000; ++tries) {
        gen::AutomatonShape shape;
        shape.states = 2 + static_cast<int>(rng() % 4);
        shape.letters = 2;
        shape.colours = 1 + static_cast<int>(rng() % 2);
        shape.deterministic = false;
        shape.extra = 0.35;
        shape.missing = 0.1;
        Automaton a = gen::randomAutomaton(rng, shape);
        auto brute = oracle::letterGameHD(a);
        if (!brute)
            continue;
        ++compared;
        bool hd = isHistoryDeterministic(a);
        (hd ? positive : negative)++;
        c.expect(hd == *brute, "random automaton " + std::to_string(compared) + ": verdict differs");
    }
    c.expect(compared == 50, "only " + std::to_string(compared) + " automata compared");
    c.expect(positive > 0 && negative > 0, "random sample lacks one of the verdicts");
}

// 6
void criterionGames(Check& c)
{
    gen::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        GameArena g = gen::randomArena(rng, n, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
        GR1Solution sol = solveGR1(g);
        std::vector<bool> oracleRegion = solveGR1ByParity(g);
        std::string tag = "arena #" + std::to_string(i);
        c.expect(sol.eveWins == oracleRegion, tag + ": regions differ");
        for (int v = 0; v < n; ++v)
            if (sol.eveWins[v])
                c.expect(oracle::strategyPlaysWin(g, sol.strategy, v), tag + ": strategy loses a play");
        c.expect(verifyStrategy(g, sol.eveWins, sol.strategy), tag + ": strategy check failed");
    }
}

// Graphs on n vertices up to isomorphism.
std::vector<Graph> allGraphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    std::vector<int> perm(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint32_t best = mask;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t m = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1U) {
                    int a = std::min(perm[pairs[e].first], perm[pairs[e].second]);
                    int b = std::max(perm[pairs[e].first], perm[pairs[e].second]);
                    m |= 1u << (std::find(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
                }
            best = std::min(best, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second)
            continue;
        Graph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((best >> e) & 1U)
                g.addEdge(pairs[e].first, pairs[e].second);
        out.push_back(g);
    }
    return out;
}

// Colourings as restricted growth strings: one per partition of the vertices.
void forEachPartitionColouring(int n, const std::function<void(const Colouring&, int)>& f)
{
    Colouring c(n, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            f(c, used);
            return;
        }
        for (int col = 0; col <= used && col < n; ++col) {
            c[v] = col;
            rec(v + 1, std::max(used, col + 1));
        }
    };
    rec(0, 0);
}

// 7
void criterionGadget(Check& c)
{
    int graphs = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : allGraphs(n)) {
            if (!isTriangleFull(g) || hasFourClique(g))
                continue;
            ++graphs;
            Automaton lg = colouringToAutomaton(g, trivialColouring(g));
            bool colourable = graphColouring(g, 3).has_value();
            bool feasible = exactMinimise({lg, 3, g.vertexCount(), ExactMode::Det}).has_value();
            c.expect(colourable == feasible, "graph with " + std::to_string(n) + " vertices: correspondence fails");
            forEachPartitionColouring(n, [&](const Colouring& col, int) {
                if (isProperColouring(g, col))
                    c.expect(equivalentDeterministic(colouringToAutomaton(g, col), lg),
                             "a proper colouring gives a different language");
            });
        }
    c.expect(graphs > 0, "no triangle-full graphs enumerated");
    // beyond 5 vertices: a non-3-colourable triangle-full 4-clique-free graph
    Graph ms = moserSpindle();
    c.expect(isTriangleFull(ms) && !hasFourClique(ms) && !graphColouring(ms, 3), "Moser spindle fixture broken");
    c.expect(!exactMinimise({colouringToAutomaton(ms, trivialColouring(ms)), 3, ms.vertexCount(), ExactMode::Det}),
             "Moser spindle language fits in 3 states");
}

// 8
void criterionExpFamily(Check& c)
{
    for (int n = 1; n <= 3; ++n) {
        ColourMinResult r = exactColourMinOneState(expFamily(n));
        c.expect(r.feasible && r.colours == (1 << n),
                 "n=" + std::to_string(n) + ": got " + std::to_string(r.colours) + " colours");
    }
    for (int n = 1; n <= 2; ++n)
        c.expect(oracle::bruteOneStateColours(expFamily(n), 1 << n) == (1 << n),
                 "n=" + std::to_string(n) + ": brute-force colour count differs");
}

Lasso randomLasso(gen::Rng& rng, int letters)
{
    Lasso w;
    int s = static_cast<int>(rng() % 6), cl = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < s; ++i)
        w.stem.push_back(static_cast<int>(rng() % letters));
    for (int i = 0; i < cl; ++i)
        w.cycle.push_back(static_cast<int>(rng() % letters));
    return w;
}

// 9
void criterionDuality(Check& c)
{
    gen::Rng rng(71);
    Graph k3(3);
    k3.addEdge(0, 1);
    k3.addEdge(1, 2);
    k3.addEdge(0, 2);
    std::vector<Automaton> det = {fixtures::t3(), fixtures::xbc(), fixtures::tinit(), fixtures::l3can(),
                                  colouringToAutomaton(k3, trivialColouring(k3))};
    for (const Automaton& a : det) {
        Automaton d = dualise(a);
        int violations = 0;
        for (int i = 0; i < 1000; ++i) {
            Lasso w = randomLasso(rng, a.letterCount());
            if (lassoAccepts(a, w) == lassoAccepts(d, w))
                ++violations;
        }
        c.expect(violations == 0, a.name() + ": " + std::to_string(violations) + " duality violations");
    }
    for (int i = 0; i < 100; ++i) {
        gen::AutomatonShape shape;
        shape.states = 1 + static_cast<int>(rng() % 5);
        shape.letters = 2 + static_cast<int>(rng() % 2);
        shape.colours = 1 + static_cast<int>(rng() % 4);
        shape.acceptance = Acceptance::GenBuchi;
        shape.colourProb = 0.5;
        Automaton a = gen::randomAutomaton(rng, shape);
        Automaton r = recolourGreedy(a);
        c.expect(equivalentDeterministic(a, r), "recolouring changed the language of random #" + std::to_string(i));
        c.expect(recolourGreedy(r) == r, "recolouring not idempotent on random #" + std::to_string(i));
        c.expect(r.colours() <= a.colours(), "recolouring added colours");
    }
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limitSeconds;
        void (*run)(Check&);
    };
    const Criterion criteria[] = {
        {1, "L3 end-to-end minimisation", 5, criterionL3},
        {2, "fin-b or fin-c minimisation and optimality", 5, criterionFinBC},
        {3, "canonicity on 100 random deterministic coBuchi automata", 600, criterionCanonicity},
        {4, "size laws of the generalised construction", 600, criterionSizeLaws},
        {5, "history-determinism checking", 300, criterionHD},
        {6, "GR(1) solver cross-validation", 120, criterionGames},
        {7, "gadget correspondence", 900, criterionGadget},
        {8, "exponential colour family", 120, criterionExpFamily},
        {9, "duality and recolouring", 120, criterionDuality},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream limit;
        limit << std::fixed << std::setprecision(2) << secs << " s";
        c.expect(secs < cr.limitSeconds, "took " + limit.str() + ", limit " + std::to_string(int(cr.limitSeconds)) + " s");
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " (" << limit.str()
                  << ")";
        if (!c.ok)
            std::cout << " -- " << c.firstFailure;
        std::cout << std::endl;
        failures += c.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
