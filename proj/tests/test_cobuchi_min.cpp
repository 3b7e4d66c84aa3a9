#include "hdmin/cobuchi_min.hpp"
#include "hdmin/fixtures.hpp"
#include "hdmin/games.hpp"
#include "hdmin/hardness.hpp"
#include "hdmin/transforms.hpp"

#include "oracles.hpp"
#include "random_gen.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace hdmin;

namespace {

Automaton randomDetCoBuchi(gen::Rng& rng, int states, int letters)
{
    gen::AutomatonShape s;
    s.states = states;
    s.letters = letters;
    s.colours = 1;
    s.acceptance = Acceptance::GenCoBuchi;
    s.deterministic = true;
    s.colourProb = 0.35;
    return gen::randomAutomaton(rng, s);
}

// Safe SCC sizes, largest first.
std::vector<int> componentSizes(const Automaton& a)
{
    SafeDecomposition d = safeComponents(a);
    std::map<int, int> count;
    for (int s : d.sccOf)
        ++count[s];
    std::vector<int> sizes;
    for (auto [id, n] : count)
        sizes.push_back(n);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

// Injection of the small multiset into the large one with size domination.
bool sizesEmbed(const std::vector<int>& small, const std::vector<int>& large)
{
    if (small.size() > large.size())
        return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > large[i])
            return false;
    return true;
}

}  // namespace

TEST_CASE("safe components")
{
    SafeDecomposition l3 = safeComponents(fixtures::l3can());
    CHECK(l3.components.size() == 3);
    for (const SafeComponent& c : l3.components)
        CHECK(c.states.size() == 2);
    Automaton l = fixtures::l3can();
    CHECK(l3.componentOf[l.stateIndex("q0")] == l3.componentOf[l.stateIndex("q1")]);
    CHECK(l3.componentOf[l.stateIndex("q0")] != l3.componentOf[l.stateIndex("p0")]);

    Automaton x = fixtures::xbc();
    SafeDecomposition xd = safeComponents(x);
    CHECK(xd.components.size() == 2);
    CHECK(xd.componentOf[0] != xd.componentOf[1]);
    CHECK(xd.componentOf[0] >= 0);

    Automaton dotted(Alphabet({"a"}), 1, Acceptance::GenCoBuchi);
    dotted.addState();
    dotted.addState();
    dotted.addTransition(0, 0, 1, 1);
    dotted.addTransition(1, 0, 0, 1);
    SafeDecomposition dd = safeComponents(dotted);
    CHECK(dd.components.empty());
    CHECK(dd.componentOf == std::vector<int>{-1, -1});

    CHECK_THROWS_AS(safeComponents(fixtures::t3()), ContractError);
}

TEST_CASE("safe language comparison")
{
    Automaton f = fixtures::fig1();
    int q1 = f.stateIndex("q1"), q2 = f.stateIndex("q2");
    CHECK(compareSafeLanguages(f, q1, q1) == SafeRelation::Equal);
    CHECK(compareSafeLanguages(f, q1, q2) == SafeRelation::StrictSubset);
    CHECK(compareSafeLanguages(f, q2, q1) == SafeRelation::StrictSuperset);

    Automaton l = fixtures::l3can();
    int a0 = l.stateIndex("q0"), b0 = l.stateIndex("p0");
    CHECK(compareSafeLanguages(l, a0, b0) == SafeRelation::Incomparable);
    // witnesses: (bb)^w stays safe from q0 only, (aa)^w from p0 only
    auto safeRun = [&](int q, const std::string& letter) {
        int lt = l.alphabet().indexOf(letter);
        for (int i = 0; i < 8; ++i) {
            const Edge* e = nullptr;
            for (const Edge& x : l.edges(q))
                if (x.letter == lt && x.colours == 0)
                    e = &x;
            if (!e)
                return false;
            q = e->dst;
        }
        return true;
    };
    CHECK(safeRun(a0, "b"));
    CHECK_FALSE(safeRun(a0, "a"));
    CHECK(safeRun(b0, "a"));
    CHECK_FALSE(safeRun(b0, "b"));

    Automaton split(Alphabet({"a"}), 1, Acceptance::GenCoBuchi);
    split.addState();
    split.addState();
    split.addTransition(0, 0, 0, 0);
    split.addTransition(0, 0, 1, 0);
    split.addTransition(1, 0, 1, 0);
    CHECK_THROWS_AS(compareSafeLanguages(split, 0, 1), ContractError);
}

TEST_CASE("normal form dots crossing safe transitions")
{
    Automaton a(Alphabet({"a", "b"}), 1, Acceptance::GenCoBuchi);
    a.addState();
    a.addState();
    a.addTransition(0, 0, 0, 0);
    a.addTransition(0, 1, 1, 0);  // crosses from {0} to {1}
    a.addTransition(1, 0, 1, 0);
    a.addTransition(1, 1, 1, 1);
    Automaton n = normalForm(a);
    CHECK(*n.colourOf(0, 1, 1) == 1);
    CHECK(*n.colourOf(0, 0, 0) == 0);
    CHECK(*n.colourOf(1, 0, 1) == 0);
    CHECK(equivalentDeterministic(a, n));
    Automaton nice = toNiceForm(a);
    CHECK(checkCanonicity(nice).normalForm);

    // already in normal form: only colours may change
    Automaton x = fixtures::xbc();
    Automaton nx = toNiceForm(x);
    CHECK(nx.stateCount() == x.stateCount());
    CHECK(nx.transitionCount() == x.transitionCount());
}

TEST_CASE("canonicity checks")
{
    CHECK(checkCanonicity(fixtures::l3can()).all());
    CanonicityReport f = checkCanonicity(fixtures::fig1());
    CHECK_FALSE(f.safeCentralised);
    CHECK(f.semanticallyDeterministic);
    CHECK_FALSE(checkCanonicity(fixtures::nonhd3()).semanticallyDeterministic);

    Automaton one(Alphabet({"a", "b"}), 1, Acceptance::GenCoBuchi);
    one.addState();
    one.addTransition(0, 0, 0, 0);
    one.addTransition(0, 1, 0, 0);
    CHECK(checkCanonicity(one).all());
}

TEST_CASE("minimisation of fixtures")
{
    Automaton t = minimiseHDcoBuchi(degeneralise(fixtures::t3()));
    CHECK(t.stateCount() == 6);
    CHECK(checkCanonicity(t).all());
    CHECK(componentSizes(t) == std::vector<int>{2, 2, 2});

    Automaton f = minimiseHDcoBuchi(fixtures::fig1());
    CHECK(f.stateCount() == 2);
    CHECK(checkCanonicity(f).all());
    CHECK(isHistoryDeterministic(f));
    CHECK(equivalent(f, fixtures::fig1(), EquivMode::HD));
    ExactMinQuery q{fixtures::fig1(), 1, 1, ExactMode::HD};
    CHECK_FALSE(exactMinimise(q).has_value());

    Automaton x = minimiseHDcoBuchi(fixtures::xbc());
    CHECK(x.stateCount() == 2);
    CHECK(equivalent(x, fixtures::xbc(), EquivMode::HD));

    CoBuchiMinimisation d = minimiseHDcoBuchiDetailed(fixtures::fig1());
    CHECK(d.reference.isDeterministic());
    REQUIRE(static_cast<int>(d.shadow.size()) == d.reference.stateCount());
    for (int r = 0; r < d.reference.stateCount(); ++r) {
        int s = d.shadow[r];
        REQUIRE(s >= 0);
        CHECK_FALSE(oracle::lassoDisagreement(withInitial(d.reference, r), withInitial(d.automaton, s), 2, 3).has_value());
    }
}

TEST_CASE("minimisation of random deterministic automata")
{
    gen::Rng rng(59);
    for (int i = 0; i < 30; ++i) {
        Automaton x = randomDetCoBuchi(rng, 2 + static_cast<int>(rng() % 4), 2);
        Automaton e = minimiseHDcoBuchi(x);
        CanonicityReport r = checkCanonicity(e);
        CHECK_MESSAGE(r.all(), describe(r));
        CHECK(isHistoryDeterministic(e));
        CHECK(containsHD(e, x));
        CHECK(containsHD(x, e));
        CHECK_FALSE(oracle::lassoDisagreement(x, e, 2, 3).has_value());
        CHECK(e.stateCount() <= std::max(1, trim(x).stateCount()));

        Automaton again = minimiseHDcoBuchi(e);
        CHECK(again.stateCount() == e.stateCount());
        CHECK(checkCanonicity(again).all());

        // nice automata for the same language carry the safe components of e
        Automaton y = toNiceForm(x);
        CanonicityReport ry = checkCanonicity(y);
        CHECK(ry.reachableOnly);
        CHECK(ry.normalForm);
        CHECK(ry.safeDeterministic);
        CHECK(equivalentDeterministic(x, y));
        CHECK(y.stateCount() <= trim(x).stateCount());
        if (!isEmpty(x))
            CHECK(sizesEmbed(componentSizes(e), componentSizes(y)));
    }
}

TEST_CASE("minimality on small outputs")
{
    gen::Rng rng(61);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        Automaton e = minimiseHDcoBuchi(randomDetCoBuchi(rng, 3, 2));
        if (e.stateCount() < 2 || e.stateCount() > 3)
            continue;
        ExactMinQuery q{e, e.stateCount() - 1, 1, ExactMode::HD};
        CHECK_FALSE(exactMinimise(q).has_value());
        ++checked;
    }
    CHECK(checked > 0);
}
