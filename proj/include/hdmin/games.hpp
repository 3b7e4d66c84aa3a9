#pragma once

#include "hdmin/core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hdmin {

enum class Player { Eve, Adam };

struct GameMove {
    int from;
    int to;
    ColourSet premise;     // assumption colours
    ColourSet conclusion;  // guarantee colours
};

// Eve wins a play iff (every assumption recurs) implies (every guarantee recurs).
class GameArena {
public:
    int addPosition(Player owner);
    int addMove(int from, int to, ColourSet premise, ColourSet conclusion);

    int positionCount() const { return static_cast<int>(owner_.size()); }
    int moveCount() const { return static_cast<int>(moves_.size()); }
    Player owner(int v) const { return owner_.at(v); }
    const GameMove& move(int m) const { return moves_.at(m); }
    const std::vector<int>& movesFrom(int v) const { return from_.at(v); }
    bool isComplete() const;

    int initial = 0;
    int assumptions = 0;
    int guarantees = 0;

private:
    std::vector<Player> owner_;
    std::vector<GameMove> moves_;
    std::vector<std::vector<int>> from_;
};

// Finite-memory strategy. For arenas, choice maps (position, memory) to a move index.
struct Strategy {
    int memoryCount = 1;
    int initialMemory = 0;
    std::function<int(int position, int memory)> choice;
    std::function<int(int memory, int move)> update;
};

struct GR1Solution {
    std::vector<bool> eveWins;
    Strategy strategy;
};

GR1Solution solveGR1(const GameArena& arena);

// Max-parity game on vertices; Eve wins plays whose highest recurring priority is even.
struct ParityGame {
    std::vector<Player> owner;
    std::vector<int> priority;
    std::vector<std::vector<int>> succ;
};

std::vector<bool> solveParity(const ParityGame& game);
// Counter reduction; positionVertex[v] is the parity vertex standing for arena position v.
ParityGame gr1ToParity(const GameArena& arena, std::vector<int>* positionVertex);
std::vector<bool> solveGR1ByParity(const GameArena& arena);

// Exhaustive check that every play consistent with the strategy from a position
// in region stays in region and satisfies the objective.
bool verifyStrategy(const GameArena& arena, const std::vector<bool>& region, const Strategy& strategy,
                    std::string* why = nullptr);

GameArena buildG2(const Automaton& a);
bool isHistoryDeterministic(const Automaton& a);
// L(a) included in L(b), for history-deterministic b.
bool containsHD(const Automaton& a, const Automaton& b);

enum class EquivMode { Det, HD };
bool equivalent(const Automaton& a, const Automaton& b, EquivMode mode);

}  // namespace hdmin
