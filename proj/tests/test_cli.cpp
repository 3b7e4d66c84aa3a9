#include "hdmin/fixtures.hpp"
#include "hdmin/games.hpp"
#include "hdmin/io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

using namespace hdmin;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args)
{
    std::string cmd = std::string(HDMIN_CLI_PATH) + " " + args + " 2>&1";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(HDMIN_FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "hdmin_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("history determinism verdicts")
{
    Result fig = run("check hd " + fixture("fig1.aut"));
    CHECK(fig.code == 0);
    CHECK(fig.out.find("history-deterministic: yes") != std::string::npos);
    Result n = run("check hd " + fixture("nonhd3.aut"));
    CHECK(n.code == 1);
    CHECK(n.out.find("history-deterministic: no") != std::string::npos);
}

TEST_CASE("canonicity flags")
{
    Result l = run("check props " + fixture("l3can.aut"));
    CHECK(l.code == 0);
    CHECK(l.out.find("nice: yes") != std::string::npos);
    Result f = run("check props " + fixture("fig1.aut"));
    CHECK(f.code == 1);
    CHECK(f.out.find("safe-centralised: no") != std::string::npos);
}

TEST_CASE("minimize writes an equivalent automaton")
{
    auto out = scratch("t3_gen.aut");
    Result r = run("minimize --mode hd-gencobuchi " + fixture("t3.aut") + " -o " + out.string());
    REQUIRE(r.code == 0);
    Automaton g = loadAutomaton(out.string());
    CHECK(g.stateCount() == 2);
    CHECK(g.colours() == 3);
    CHECK(containsHD(g, fixtures::t3()));
    CHECK(containsHD(fixtures::t3(), g));

    Result co = run("minimize --mode hd-cobuchi " + fixture("t3.aut"));
    REQUIRE(co.code == 0);
    CHECK(parseNative(co.out).stateCount() == 6);

    Result hoa = run("minimize --mode hd-cobuchi --hoa " + fixture("xbc.aut"));
    REQUIRE(hoa.code == 0);
    CHECK(importHOA(hoa.out).stateCount() == 2);
}

TEST_CASE("equivalence")
{
    Result same = run("equiv " + fixture("t3.aut") + " " + fixture("t3.hoa") + " --mode det");
    CHECK(same.code == 0);
    CHECK(same.out.find("equivalent: yes") != std::string::npos);
    Result diff = run("equiv " + fixture("t3.aut") + " " + fixture("xbc.aut") + " --mode det");
    CHECK(diff.code == 1);
    CHECK(diff.out.find("counterexample:") != std::string::npos);
    Result hd = run("equiv " + fixture("t3.aut") + " " + fixture("gcb2.aut") + " --mode hd");
    CHECK(hd.code == 0);
}

TEST_CASE("gadgets")
{
    Result g = run("gadget graph " + fixture("k3.edges") + " --colouring " + fixture("k3.colouring"));
    REQUIRE(g.code == 0);
    CHECK(parseNative(g.out).stateCount() == 3);
    Result p = run("gadget pseudopath " + fixture("k3.edges") + " --init a");
    REQUIRE(p.code == 0);
    CHECK(parseNative(p.out).stateCount() == 7);
    Result e = run("gadget expfamily 3");
    REQUIRE(e.code == 0);
    CHECK(parseNative(e.out).stateCount() == 4);
    Result t = run("gadget trianglefull " + fixture("k3.edges"));
    REQUIRE(t.code == 0);
    CHECK(parseEdges(t.out).vertexCount() == 9);
    Result bad = run("gadget pseudopath " + fixture("p3.edges") + " --init a");
    CHECK(bad.code == 2);
}

TEST_CASE("exact minimisation")
{
    Result one = run("exactmin " + fixture("xbc.aut") + " --max-states 1 --max-colours 1 --mode hd");
    CHECK(one.code == 1);
    CHECK(one.out.find("infeasible") != std::string::npos);
    Result two = run("exactmin " + fixture("xbc.aut") + " --max-states 1 --max-colours 2 --mode hd");
    CHECK(two.code == 0);
    Result budget =
        run("exactmin " + fixture("t3.aut") + " --max-states 5 --max-colours 1 --mode hd --budget 1000");
    CHECK(budget.code == 2);
    CHECK(budget.out.find("budget") != std::string::npos);
}

TEST_CASE("conversion round trip")
{
    auto hoa = scratch("t3.hoa");
    REQUIRE(run("convert " + fixture("t3.aut") + " --hoa -o " + hoa.string()).code == 0);
    Result back = run("convert " + hoa.string());
    REQUIRE(back.code == 0);
    CHECK(parseNative(back.out) == fixtures::t3());
}

TEST_CASE("errors exit with 2")
{
    CHECK(run("check hd /nonexistent/file.aut").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    auto broken = scratch("broken.aut");
    writeTextFile(broken.string(), "alphabet a\nacceptance gen-buchi 1\nstates p\ntrans p a p {3}\n");
    Result r = run("check hd " + broken.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("line 4") != std::string::npos);
}
