#include "hdmin/fixtures.hpp"
#include "hdmin/cobuchi_min.hpp"
#include "hdmin/gencobuchi_min.hpp"

namespace hdmin::fixtures {

namespace {

Alphabet abc() { return Alphabet({"a", "b", "c"}); }

constexpr ColourSet kSafe = 0;
constexpr ColourSet kDot = 1;

}  // namespace

Automaton t3()
{
    Automaton a(abc(), 3, Acceptance::GenCoBuchi);
    a.setName("T3");
    for (const char* s : {"a", "b", "c"})
        a.addState(s);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            a.addTransition(x, y, y, x == y ? colourBit(x) : 0);
    a.setInitial(0);
    return a;
}

Automaton xbc()
{
    Automaton a(abc(), 1, Acceptance::GenCoBuchi);
    a.setName("XBC");
    int x = a.addState("x"), y = a.addState("y");
    a.addTransition(x, 0, x, kSafe);
    a.addTransition(x, 2, x, kSafe);
    a.addTransition(x, 1, y, kDot);
    a.addTransition(y, 0, y, kSafe);
    a.addTransition(y, 1, y, kSafe);
    a.addTransition(y, 2, x, kDot);
    a.setInitial(x);
    return a;
}

Automaton fig1()
{
    Automaton a(abc(), 1, Acceptance::GenCoBuchi);
    a.setName("FIG1");
    int q0 = a.addState("q0"), q1 = a.addState("q1"), q2 = a.addState("q2");
    a.addTransition(q0, 0, q0, kSafe);
    a.addTransition(q0, 1, q0, kSafe);
    a.addTransition(q0, 2, q1, kDot);
    a.addTransition(q2, 0, q2, kSafe);
    a.addTransition(q2, 2, q2, kSafe);
    a.addTransition(q2, 1, q1, kDot);
    a.addTransition(q1, 0, q0, kDot);
    a.addTransition(q1, 0, q2, kDot);
    a.addTransition(q1, 1, q0, kDot);
    a.addTransition(q1, 2, q2, kDot);
    a.setInitial(q0);
    return a;
}

Automaton nonhd3()
{
    Automaton a(abc(), 1, Acceptance::GenCoBuchi);
    a.setName("NONHD3");
    int q0 = a.addState("q0"), q1 = a.addState("q1"), q2 = a.addState("q2");
    for (int l = 0; l < 3; ++l) {
        a.addTransition(q0, l, q1, kDot);
        a.addTransition(q0, l, q2, kDot);
    }
    // q1: finitely many b, q2: finitely many a
    a.addTransition(q1, 0, q1, kSafe);
    a.addTransition(q1, 2, q1, kSafe);
    a.addTransition(q1, 1, q1, kDot);
    a.addTransition(q2, 1, q2, kSafe);
    a.addTransition(q2, 2, q2, kSafe);
    a.addTransition(q2, 0, q2, kDot);
    a.setInitial(q0);
    return a;
}

Automaton tinit()
{
    Automaton base = t3();
    Automaton a(abc(), 3, Acceptance::GenCoBuchi);
    a.setName("TINIT");
    int i = a.addState("i");
    for (int q = 0; q < base.stateCount(); ++q)
        a.addState(base.stateName(q));
    for (const Transition& t : base.transitions())
        a.addTransition(t.src + 1, t.letter, t.dst + 1, t.colours);
    a.addTransition(i, 0, 1, 0);
    a.setInitial(i);
    return a;
}

Automaton l3can()
{
    Automaton a(abc(), 1, Acceptance::GenCoBuchi);
    a.setName("L3CAN");
    // pair x avoids the factor xx; its second state remembers a trailing x
    const char* names[3][2] = {{"q0", "q1"}, {"p0", "p1"}, {"t0", "t1"}};
    int s[3][2];
    for (int x = 0; x < 3; ++x)
        for (int h = 0; h < 2; ++h)
            s[x][h] = a.addState(names[x][h]);
    for (int x = 0; x < 3; ++x)
        for (int h = 0; h < 2; ++h)
            for (int l = 0; l < 3; ++l) {
                if (l != x)
                    a.addTransition(s[x][h], l, s[x][0], kSafe);
                else if (h == 0)
                    a.addTransition(s[x][0], l, s[x][1], kSafe);
                else
                    a.addTransition(s[x][1], l, s[(x + 1) % 3][0], kDot);
            }
    a.setInitial(s[0][0]);
    return a;
}

Automaton gcb2()
{
    Automaton a = buildPrefixIndependent(minimiseHDcoBuchi(t3()));
    a.setName("GCB2");
    return a;
}

}  // namespace hdmin::fixtures
