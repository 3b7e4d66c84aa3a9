#pragma once

#include "hdmin/core.hpp"
#include "hdmin/hardness.hpp"

#include <string>

namespace hdmin {

// Native text format:
//   name <token>
//   alphabet <letter>...
//   acceptance gen-buchi|gen-cobuchi <k>
//   states <state>...
//   initial <state>
//   trans <src> <letter> <dst> {c,...}
// '#' starts a comment. Errors carry "line N:".
Automaton parseNative(const std::string& text);
std::string serialiseNative(const Automaton& a);

// HOA v1 subset: explicit transition labels over binary-encoded letters,
// transition-based Inf/Fin acceptance. Letter names travel in a "letters:" header.
std::string exportHOA(const Automaton& a);
Automaton importHOA(const std::string& text);

// One undirected edge "u v" per line; a line with a single name declares a vertex.
Graph parseEdges(const std::string& text);
std::string serialiseEdges(const Graph& g);
// Lines "vertex colour" with colours 1..k; returns 0-based colours.
Colouring parseColouring(const std::string& text, const Graph& g);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);
// Native or HOA, chosen by the first token.
Automaton loadAutomaton(const std::string& path);

}  // namespace hdmin
