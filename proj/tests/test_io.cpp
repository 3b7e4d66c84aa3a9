#include "hdmin/fixtures.hpp"
#include "hdmin/io.hpp"

#include "random_gen.hpp"

#include <doctest.h>

using namespace hdmin;

namespace {

std::string fixturePath(const std::string& name) { return std::string(HDMIN_FIXTURE_DIR) + "/" + name; }

bool throwsWithLine(const std::string& text, const std::string& needle)
{
    try {
        parseNative(text);
    } catch (const InputError& e) {
        std::string msg = e.what();
        return msg.rfind("line ", 0) == 0 && msg.find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("native round trip")
{
    for (const Automaton& a : {fixtures::t3(), fixtures::xbc(), fixtures::fig1(), fixtures::nonhd3(),
                               fixtures::tinit(), fixtures::l3can(), fixtures::gcb2()}) {
        std::string text = serialiseNative(a);
        Automaton b = parseNative(text);
        CHECK(b == a);
        CHECK(serialiseNative(b) == text);
    }
    gen::Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        gen::AutomatonShape s;
        s.states = 1 + static_cast<int>(rng() % 5);
        s.letters = 1 + static_cast<int>(rng() % 3);
        s.colours = static_cast<int>(rng() % 4);
        s.deterministic = false;
        s.acceptance = i % 2 ? Acceptance::GenBuchi : Acceptance::GenCoBuchi;
        Automaton a = gen::randomAutomaton(rng, s);
        CHECK(parseNative(serialiseNative(a)) == a);
    }
}

TEST_CASE("T3 fixture file")
{
    Automaton a = loadAutomaton(fixturePath("t3.aut"));
    CHECK(a.stateCount() == 3);
    CHECK(a.acceptance() == Acceptance::GenCoBuchi);
    CHECK(a.colours() == 3);
    CHECK(a == fixtures::t3());
    CHECK(serialiseNative(a) == readTextFile(fixturePath("t3.aut")));
}

TEST_CASE("native parse errors carry positions")
{
    const std::string head = "alphabet a b\nacceptance gen-buchi 1\nstates p q\n";
    CHECK(throwsWithLine(head + "trans p a q {1}\n", "out of range"));
    CHECK(throwsWithLine(head + "trans p a r {0}\n", "unknown state 'r'"));
    CHECK(throwsWithLine(head + "trans p z q {0}\n", "unknown letter"));
    CHECK(throwsWithLine("alphabet a\nacceptance rabin 1\n", "unknown acceptance kind"));
    CHECK(throwsWithLine(head + "initial x\n", "unknown state 'x'"));
    CHECK(throwsWithLine(head + "bogus\n", "unknown keyword"));
    CHECK(throwsWithLine("acceptance gen-buchi 1\nstates p\n", "missing alphabet"));
    try {
        parseNative(head + "\n\ntrans p a q {0,4}\n");
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).rfind("line 6:", 0) == 0);
    }
}

TEST_CASE("native comments and defaults")
{
    Automaton a = parseNative("# header\nalphabet a\nacceptance cobuchi\nstates s # one state\ntrans s a s {0}\n");
    CHECK(a.colours() == 1);
    CHECK(a.acceptance() == Acceptance::GenCoBuchi);
    CHECK(a.initial() == 0);
    CHECK(a.transitionCount() == 1);
}

TEST_CASE("HOA export")
{
    Automaton x = fixtures::xbc();
    std::string h = exportHOA(x);
    CHECK(h.find("Acceptance: 1 Fin(0)\n") != std::string::npos);
    CHECK(h.find("AP: 2") != std::string::npos);

    Automaton two(Alphabet({"x", "y"}), 2, Acceptance::GenBuchi);
    two.addState();
    two.addTransition(0, 0, 0, 1);
    two.addTransition(0, 1, 0, 2);
    std::string h2 = exportHOA(two);
    CHECK(h2.find("AP: 1 \"p0\"") != std::string::npos);
    CHECK(h2.find("[!0] 0 {0}") != std::string::npos);
    CHECK(h2.find("[0] 0 {1}") != std::string::npos);
    CHECK(h2.find("Acceptance: 2 Inf(0)&Inf(1)") != std::string::npos);

    Automaton none(Alphabet({"x"}), 0, Acceptance::GenCoBuchi);
    none.addState();
    CHECK(exportHOA(none).find("Acceptance: 0 f") != std::string::npos);
}

TEST_CASE("HOA round trip")
{
    for (const Automaton& a : {fixtures::t3(), fixtures::xbc(), fixtures::fig1(), fixtures::gcb2()})
        CHECK(importHOA(exportHOA(a)) == a);
    gen::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        gen::AutomatonShape s;
        s.states = 1 + static_cast<int>(rng() % 4);
        s.letters = 1 + static_cast<int>(rng() % 5);
        s.colours = static_cast<int>(rng() % 3);
        s.deterministic = false;
        s.acceptance = i % 2 ? Acceptance::GenBuchi : Acceptance::GenCoBuchi;
        Automaton a = gen::randomAutomaton(rng, s);
        CHECK(importHOA(exportHOA(a)) == a);
    }
    CHECK(loadAutomaton(fixturePath("t3.hoa")) == fixtures::t3());
}

TEST_CASE("HOA features outside the subset")
{
    auto message = [](const std::string& text) -> std::string {
        try {
            importHOA(text);
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    const std::string head = "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"p\"\n";
    CHECK(message(head + "Acceptance: 1 Inf(0)\n--BODY--\nState: 0 {0}\n[0] 0\n--END--\n").find("state-based") !=
          std::string::npos);
    CHECK(message("HOA: v1\nStates: 2\nStart: 0&1\nAP: 1 \"p\"\nAcceptance: 0 t\n--BODY--\n--END--\n")
              .find("alternation") != std::string::npos);
    CHECK(message(head + "Acceptance: 2 Inf(0)|Fin(1)\n--BODY--\n--END--\n").find("acceptance condition") !=
          std::string::npos);
    CHECK(message(head + "Acceptance: 0 t\n--BODY--\nState: 0\n0\n--END--\n").find("implicit") != std::string::npos);
    CHECK(message(head + "Acceptance: 0 t\n--BODY--\nState: 0\n[0] 0&0\n--END--\n").find("alternation") !=
          std::string::npos);
}

TEST_CASE("HOA import without letter names")
{
    Automaton a = importHOA(
        "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"p\"\nAcceptance: 1 Fin(0)\n--BODY--\nState: 0\n[t] 0 {0}\n--END--\n");
    CHECK(a.letterCount() == 2);
    CHECK(a.acceptance() == Acceptance::GenCoBuchi);
    CHECK(a.transitionCount() == 2);
}

TEST_CASE("edge lists")
{
    Graph g = parseEdges("a b\nb c\n# comment\nb a\nd\n");
    CHECK(g.vertexCount() == 4);
    CHECK(g.edges().size() == 2);
    CHECK(g.hasEdge(0, 1));
    CHECK_THROWS_AS(parseEdges("a a\n"), InputError);
    CHECK_THROWS_AS(parseEdges("a b c\n"), InputError);
    Graph back = parseEdges(serialiseEdges(g));
    CHECK(back.vertexCount() == 4);
    CHECK(back.edges() == g.edges());

    Colouring c = parseColouring("a 1\nb 2\nc 1\nd 3\n", g);
    CHECK(c == Colouring{0, 1, 0, 2});
    CHECK_THROWS_AS(parseColouring("a 1\n", g), InputError);
    CHECK_THROWS_AS(parseColouring("z 1\n", g), InputError);
}
