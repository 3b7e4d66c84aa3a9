#pragma once

#include "hdmin/core.hpp"

namespace hdmin::fixtures {

// Deterministic generalised coBuchi automaton over {a,b,c}: some factor xx occurs finitely often.
Automaton t3();
// Deterministic coBuchi automaton for "finitely many b or finitely many c".
Automaton xbc();
// Three-state HD coBuchi automaton for the same language.
Automaton fig1();
// Not HD: the first letter commits to "finitely many b" or to "finitely many a".
Automaton nonhd3();
// t3 behind a fresh initial state that reads a.
Automaton tinit();
// Canonical six-state HD coBuchi automaton for the language of t3.
Automaton l3can();
// Two-state, three-colour HD generalised coBuchi automaton for the language of t3.
Automaton gcb2();

}  // namespace hdmin::fixtures
