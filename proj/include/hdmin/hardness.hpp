#pragma once

#include "hdmin/core.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hdmin {

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertices);
    Graph(std::vector<std::string> names);

    int addVertex(std::string name = "");
    void addEdge(int u, int v);  // self-loops rejected, duplicates collapsed

    int vertexCount() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(v); }
    int vertexIndex(const std::string& name) const;  // -1 if absent
    bool hasEdge(int u, int v) const;
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<int> neighbours(int v) const;
    int degree(int v) const;

private:
    std::vector<std::string> names_;
    std::set<std::pair<int, int>> edges_;
};

// vertex -> colour in 0..k-1
using Colouring = std::vector<int>;

bool isProperColouring(const Graph& g, const Colouring& c);
std::optional<Colouring> graphColouring(const Graph& g, int k);
int chromaticNumber(const Graph& g);
bool hasFourClique(const Graph& g);
bool isTriangleFull(const Graph& g);
bool isConnected(const Graph& g);
Graph moserSpindle();
Graph triangleFullTransform(const Graph& g);

// Deterministic complete generalised Buchi automaton with one state per colour.
Automaton colouringToAutomaton(const Graph& g, const Colouring& c);
Colouring trivialColouring(const Graph& g);

Automaton pseudoPathAutomaton(const Graph& g, int vInit);
// Same structure, colours taken from a proper k-colouring of the graph.
Automaton pseudoPathRecolouring(const Graph& g, int vInit, const Colouring& c, int k);

Automaton expFamily(int n);

struct ColourMinResult {
    bool feasible = false;
    int colours = 0;
};
// Least number of colours of a one-state generalised Buchi automaton over the same
// alphabet with the same language; infeasible if the language is not a monotone
// property of the set of letters seen infinitely often.
ColourMinResult exactColourMinOneState(const Automaton& a);
// One-state automaton realising the minimum found above.
std::optional<Automaton> oneStateAutomaton(const Automaton& a);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExactMode { Det, HD };

struct ExactMinQuery {
    Automaton reference;
    int maxStates = 1;
    int maxColours = 1;
    ExactMode mode = ExactMode::Det;
    double budget = 1e10;  // bound on the estimated number of candidate structures
};

struct ExactMinStats {
    std::uint64_t structures = 0;
    std::uint64_t colourSearches = 0;
    std::uint64_t gameChecks = 0;
};

std::optional<Automaton> exactMinimise(const ExactMinQuery& q, ExactMinStats* stats = nullptr);
// Colouring of the structure of a (deterministic) with at most k colours keeping its language.
std::optional<Automaton> recolourWith(const Automaton& a, int k);

}  // namespace hdmin
