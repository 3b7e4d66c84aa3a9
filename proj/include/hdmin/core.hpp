#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdmin {

// Colour sets are bit vectors over colour indices 0..63.
using ColourSet = std::uint64_t;
constexpr int kMaxColours = 64;

inline ColourSet colourBit(int i) { return ColourSet{1} << i; }
inline ColourSet allColours(int k) { return k >= kMaxColours ? ~ColourSet{0} : colourBit(k) - 1; }
inline bool hasColour(ColourSet s, int i) { return (s >> i) & 1U; }
inline int colourCount(ColourSet s) { return std::popcount(s); }
std::string formatColours(ColourSet s);

// Broken precondition of a library operation.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed user-provided data (bad letters, bad files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Acceptance { GenBuchi, GenCoBuchi };

std::string acceptanceName(Acceptance acc);

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& name(int a) const { return letters_.at(a); }
    const std::vector<std::string>& letters() const { return letters_; }
    int indexOf(const std::string& letter) const;  // -1 if absent

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

private:
    std::vector<std::string> letters_;
};

struct Edge {
    int letter;
    int dst;
    ColourSet colours;
    bool operator==(const Edge&) const = default;
};

struct Transition {
    int src;
    int letter;
    int dst;
    ColourSet colours;
    bool operator==(const Transition&) const = default;
};

// Transition-based generalised (co)Buchi automaton.
class Automaton {
public:
    Automaton() = default;
    Automaton(Alphabet alphabet, int colours, Acceptance acc);

    int addState(std::string name = "");
    // Parallel (src, letter, dst) edges are merged by colour union.
    void addTransition(int src, int letter, int dst, ColourSet colours);
    void setInitial(int q);
    void setName(std::string name) { name_ = std::move(name); }
    void setStateName(int q, std::string name);
    void setAcceptance(Acceptance acc, int colours);
    void removeTransition(int src, int letter, int dst);
    void setColours(int src, int letter, int dst, ColourSet colours);

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int letterCount() const { return alphabet_.size(); }
    int stateCount() const { return static_cast<int>(out_.size()); }
    int initial() const { return initial_; }
    int colours() const { return colours_; }
    ColourSet fullColours() const { return allColours(colours_); }
    Acceptance acceptance() const { return acc_; }
    bool isGenBuchi() const { return acc_ == Acceptance::GenBuchi; }

    const std::vector<Edge>& edges(int q) const { return out_.at(q); }
    std::vector<Transition> transitions() const;
    std::size_t transitionCount() const;
    std::vector<int> successors(int q, int a) const;
    std::optional<ColourSet> colourOf(int src, int letter, int dst) const;
    const std::string& stateName(int q) const { return names_.at(q); }
    int stateIndex(const std::string& name) const;  // -1 if absent

    bool isDeterministic() const;
    bool isComplete() const;
    // Colour union accepted by the condition on an infinite run visiting exactly these colours.
    bool acceptsColours(ColourSet inf) const;

    bool operator==(const Automaton& o) const;

private:
    std::string name_;
    Alphabet alphabet_;
    int colours_ = 0;
    Acceptance acc_ = Acceptance::GenBuchi;
    int initial_ = 0;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::string> names_;
};

// Ultimately periodic word stem . cycle^omega, as letter indices.
struct Lasso {
    std::vector<int> stem;
    std::vector<int> cycle;
    bool operator==(const Lasso&) const = default;
};

std::string formatLasso(const Alphabet& sigma, const Lasso& w);
Lasso makeLasso(const Alphabet& sigma, const std::vector<std::string>& stem,
                const std::vector<std::string>& cycle);

struct ResidualPartition {
    std::vector<int> classOf;
    int classCount = 0;
    int initialClass = 0;
    std::vector<int> representative;  // least state of each class
    std::map<std::pair<int, int>, Lasso> separators;  // keyed by (lower class, higher class)

    const Lasso* separator(int c1, int c2) const;
};

// Structural helpers.
std::vector<bool> reachableStates(const Automaton& a);
Automaton trim(const Automaton& a);                  // drop unreachable states
Automaton restrictStates(const Automaton& a, const std::vector<bool>& keep);
Automaton withInitial(const Automaton& a, int q);
Automaton complete(const Automaton& a);              // adds a rejecting sink if needed
std::vector<int> sccIds(const std::vector<std::vector<int>>& adj, int* count = nullptr);
std::vector<bool> nonEmptyStates(const Automaton& a);

bool lassoAccepts(const Automaton& a, const Lasso& w);
std::optional<Lasso> acceptedLasso(const Automaton& a);
bool isEmpty(const Automaton& a, Lasso* witness = nullptr);
// A lasso accepted by both automata, if any.
std::optional<Lasso> commonLasso(const Automaton& a, const Automaton& b);

Automaton dualise(const Automaton& a);
// L(a) included in L(b) for deterministic b.
bool includedInDeterministic(const Automaton& a, const Automaton& b, Lasso* counterexample = nullptr);
bool equivalentDeterministic(const Automaton& a, const Automaton& b, Lasso* counterexample = nullptr);

ResidualPartition residualPartition(const Automaton& a);
// References: refs[q] is deterministic and recognises the language of state q.
ResidualPartition residualPartition(const Automaton& a, const std::vector<Automaton>& refs);
bool checkSemanticDeterminism(const Automaton& a, const ResidualPartition& p);

}  // namespace hdmin
