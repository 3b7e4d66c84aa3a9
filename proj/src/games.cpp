#include "hdmin/games.hpp"
#include "hdmin/graph_search.hpp"

#include <deque>
#include <map>
#include <memory>
#include <tuple>

namespace hdmin {

int GameArena::addPosition(Player owner)
{
    owner_.push_back(owner);
    from_.emplace_back();
    return positionCount() - 1;
}

int GameArena::addMove(int from, int to, ColourSet premise, ColourSet conclusion)
{
    if (from < 0 || from >= positionCount() || to < 0 || to >= positionCount())
        throw ContractError("game move endpoint out of range");
    moves_.push_back({from, to, premise, conclusion});
    from_[from].push_back(moveCount() - 1);
    return moveCount() - 1;
}

bool GameArena::isComplete() const
{
    for (const auto& list : from_)
        if (list.empty())
            return false;
    return true;
}

namespace {

using Set = std::vector<bool>;

// Positions and moves as one graph: node v < P is a position, node P + m is move m.
struct Expanded {
    const GameArena& arena;
    int positions;
    int nodes;

    explicit Expanded(const GameArena& a) : arena(a), positions(a.positionCount()), nodes(a.positionCount() + a.moveCount()) {}

    Set cpre(const Set& s) const
    {
        Set r(nodes, false);
        for (int v = 0; v < positions; ++v) {
            const auto& ms = arena.movesFrom(v);
            if (arena.owner(v) == Player::Eve) {
                for (int m : ms)
                    if (s[positions + m]) {
                        r[v] = true;
                        break;
                    }
            } else {
                bool all = true;
                for (int m : ms)
                    all = all && s[positions + m];
                r[v] = all;
            }
        }
        for (int m = 0; m < arena.moveCount(); ++m)
            r[positions + m] = s[arena.move(m).to];
        return r;
    }

    bool premise(int node, int i) const
    {
        return node >= positions && hasColour(arena.move(node - positions).premise, i);
    }
    bool conclusion(int node, int j) const
    {
        return node >= positions && hasColour(arena.move(node - positions).conclusion, j);
    }
};

Set unite(const Set& a, const Set& b)
{
    Set r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] || b[i];
    return r;
}

struct Layer {
    Set start;
    std::vector<Set> x;  // one per assumption
    Set y;
};

// Least fixpoint for guarantee j relative to z, with every approximation kept.
std::vector<Layer> layersFor(const Expanded& g, const Set& z, int j)
{
    const GameArena& arena = g.arena;
    std::vector<Layer> layers;
    Set y(g.nodes, false);
    Set cz = g.cpre(z);
    Set goal(g.nodes, false);
    for (int v = 0; v < g.nodes; ++v)
        goal[v] = g.conclusion(v, j) && cz[v];
    while (true) {
        Layer layer;
        layer.start = unite(goal, g.cpre(y));
        layer.y = layer.start;
        for (int i = 0; i < arena.assumptions; ++i) {
            Set x(g.nodes, true);
            while (true) {
                Set cx = g.cpre(x);
                Set nx(g.nodes);
                for (int v = 0; v < g.nodes; ++v)
                    nx[v] = layer.start[v] || (!g.premise(v, i) && cx[v]);
                if (nx == x)
                    break;
                x = std::move(nx);
            }
            layer.y = unite(layer.y, x);
            layer.x.push_back(std::move(x));
        }
        if (layer.y == y)
            break;
        y = layer.y;
        layers.push_back(std::move(layer));
    }
    return layers;
}

}  // namespace

GR1Solution solveGR1(const GameArena& arena)
{
    if (!arena.isComplete())
        throw ContractError("solveGR1: every position needs an outgoing move");
    Expanded g(arena);
    GR1Solution sol;
    std::vector<int> fallback;
    for (int v = 0; v < arena.positionCount(); ++v)
        fallback.push_back(arena.movesFrom(v).front());
    auto firstMove = [fallback](int v, int) { return fallback[v]; };
    if (arena.guarantees == 0) {
        sol.eveWins.assign(arena.positionCount(), true);
        sol.strategy.choice = firstMove;
        sol.strategy.update = [](int, int) { return 0; };
        return sol;
    }

    Set z(g.nodes, true);
    while (true) {
        Set nz(g.nodes, true);
        for (int j = 0; j < arena.guarantees; ++j) {
            auto layers = layersFor(g, z, j);
            Set y = layers.empty() ? Set(g.nodes, false) : layers.back().y;
            for (int v = 0; v < g.nodes; ++v)
                nz[v] = nz[v] && y[v];
        }
        if (nz == z)
            break;
        z = std::move(nz);
    }

    int kg = arena.guarantees;
    auto table = std::make_shared<std::vector<int>>(static_cast<std::size_t>(arena.positionCount()) * kg, -1);
    for (int j = 0; j < kg; ++j) {
        auto layers = layersFor(g, z, j);
        for (int v = 0; v < arena.positionCount(); ++v) {
            if (arena.owner(v) != Player::Eve || !z[v])
                continue;
            int pick = -1;
            for (std::size_t r = 0; r < layers.size() && pick < 0; ++r) {
                if (!layers[r].y[v])
                    continue;
                if (layers[r].start[v]) {
                    // v reaches the previous layer (positions carry no guarantee themselves).
                    for (int m : arena.movesFrom(v))
                        if (r > 0 && layers[r - 1].y[g.positions + m]) {
                            pick = m;
                            break;
                        }
                } else {
                    for (int i = 0; i < arena.assumptions && pick < 0; ++i) {
                        if (!layers[r].x[i][v])
                            continue;
                        for (int m : arena.movesFrom(v))
                            if (layers[r].x[i][g.positions + m]) {
                                pick = m;
                                break;
                            }
                    }
                }
                if (pick < 0)
                    throw std::logic_error("solveGR1: inconsistent ranking");
            }
            (*table)[static_cast<std::size_t>(v) * kg + j] = pick;
        }
    }

    sol.eveWins.assign(arena.positionCount(), false);
    for (int v = 0; v < arena.positionCount(); ++v)
        sol.eveWins[v] = z[v];
    sol.strategy.memoryCount = kg;
    sol.strategy.initialMemory = 0;
    std::vector<ColourSet> conclusions;
    for (int m = 0; m < arena.moveCount(); ++m)
        conclusions.push_back(arena.move(m).conclusion);
    sol.strategy.update = [conclusions, kg](int mem, int m) {
        return hasColour(conclusions[m], mem) ? (mem + 1) % kg : mem;
    };
    sol.strategy.choice = [table, kg, fallback](int v, int mem) {
        int m = (*table)[static_cast<std::size_t>(v) * kg + mem];
        return m >= 0 ? m : fallback[v];
    };
    return sol;
}

namespace {

Set attractor(const ParityGame& game, const Set& alive, const Set& target, Player player)
{
    int n = static_cast<int>(game.owner.size());
    std::vector<std::vector<int>> pred(n);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!alive[v])
            continue;
        for (int w : game.succ[v])
            if (alive[w]) {
                pred[w].push_back(v);
                ++count[v];
            }
    }
    Set attr(n, false);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
        if (alive[v] && target[v]) {
            attr[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int v : pred[w]) {
            if (attr[v])
                continue;
            if (game.owner[v] == player || --count[v] == 0) {
                attr[v] = true;
                queue.push_back(v);
            }
        }
    }
    return attr;
}

// Returns the winning region of Eve within alive.
Set zielonka(const ParityGame& game, const Set& alive)
{
    int n = static_cast<int>(game.owner.size());
    int top = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v])
            top = std::max(top, game.priority[v]);
    if (top < 0)
        return Set(n, false);
    Player p = top % 2 == 0 ? Player::Eve : Player::Adam;
    Player opp = p == Player::Eve ? Player::Adam : Player::Eve;
    Set u(n, false);
    for (int v = 0; v < n; ++v)
        u[v] = alive[v] && game.priority[v] == top;
    Set a = attractor(game, alive, u, p);
    Set rest(n, false);
    for (int v = 0; v < n; ++v)
        rest[v] = alive[v] && !a[v];
    Set eve1 = zielonka(game, rest);
    Set oppWin(n, false);
    bool oppEmpty = true;
    for (int v = 0; v < n; ++v) {
        bool eveHere = eve1[v];
        oppWin[v] = rest[v] && (opp == Player::Eve ? eveHere : !eveHere);
        oppEmpty = oppEmpty && !oppWin[v];
    }
    if (oppEmpty) {
        Set r(n, false);
        for (int v = 0; v < n; ++v)
            r[v] = alive[v] && p == Player::Eve;
        return r;
    }
    Set b = attractor(game, alive, oppWin, opp);
    Set rest2(n, false);
    for (int v = 0; v < n; ++v)
        rest2[v] = alive[v] && !b[v];
    Set eve2 = zielonka(game, rest2);
    Set r(n, false);
    for (int v = 0; v < n; ++v)
        r[v] = alive[v] && (b[v] ? opp == Player::Eve : eve2[v]);
    return r;
}

}  // namespace

std::vector<bool> solveParity(const ParityGame& game)
{
    Set alive(game.owner.size(), true);
    return zielonka(game, alive);
}

ParityGame gr1ToParity(const GameArena& arena, std::vector<int>* positionVertex)
{
    int ka = std::max(arena.assumptions, 1);
    int kg = std::max(arena.guarantees, 1);
    int P = arena.positionCount();
    int nodes = P + arena.moveCount();
    auto vid = [&](int node, int ca, int cg) { return (node * ka + ca) * kg + cg; };
    ParityGame game;
    int total = nodes * ka * kg;
    game.owner.assign(total, Player::Eve);
    game.priority.assign(total, 0);
    game.succ.assign(total, {});
    auto advance = [](int counter, int count, ColourSet seen, bool& wrapped) {
        wrapped = false;
        if (count == 0) {
            wrapped = true;
            return 0;
        }
        while (counter < count && hasColour(seen, counter))
            ++counter;
        if (counter == count) {
            wrapped = true;
            counter = 0;
        }
        return counter;
    };
    for (int ca = 0; ca < ka; ++ca)
        for (int cg = 0; cg < kg; ++cg) {
            for (int v = 0; v < P; ++v) {
                int id = vid(v, ca, cg);
                game.owner[id] = arena.owner(v);
                for (int m : arena.movesFrom(v))
                    game.succ[id].push_back(vid(P + m, ca, cg));
            }
            for (int m = 0; m < arena.moveCount(); ++m) {
                const GameMove& mv = arena.move(m);
                bool wa, wg;
                int na = advance(ca, arena.assumptions, mv.premise, wa);
                int ng = advance(cg, arena.guarantees, mv.conclusion, wg);
                int id = vid(P + m, ca, cg);
                game.priority[id] = wg ? 2 : (wa ? 1 : 0);
                game.succ[id].push_back(vid(mv.to, na, ng));
            }
        }
    if (positionVertex) {
        positionVertex->resize(P);
        for (int v = 0; v < P; ++v)
            (*positionVertex)[v] = vid(v, 0, 0);
    }
    return game;
}

std::vector<bool> solveGR1ByParity(const GameArena& arena)
{
    std::vector<int> vertex;
    ParityGame game = gr1ToParity(arena, &vertex);
    auto win = solveParity(game);
    std::vector<bool> r(arena.positionCount());
    for (int v = 0; v < arena.positionCount(); ++v)
        r[v] = win[vertex[v]];
    return r;
}

bool verifyStrategy(const GameArena& arena, const std::vector<bool>& region, const Strategy& strategy,
                    std::string* why)
{
    if (arena.assumptions + arena.guarantees > kMaxColours)
        throw ContractError("verifyStrategy: too many colours");
    int mems = strategy.memoryCount;
    int P = arena.positionCount();
    auto id = [&](int v, int mem) { return v * mems + mem; };
    LabelledGraph g;
    g.nodes = P * mems + 1;
    int root = P * mems;
    std::vector<bool> seen(g.nodes, false);
    std::deque<int> queue;
    auto push = [&](int node) {
        if (!seen[node]) {
            seen[node] = true;
            queue.push_back(node);
        }
    };
    for (int v = 0; v < P; ++v)
        if (region[v]) {
            g.arcs.push_back({root, id(v, strategy.initialMemory), 0, 0});
            push(id(v, strategy.initialMemory));
        }
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        int v = node / mems, mem = node % mems;
        if (!region[v]) {
            if (why)
                *why = "play leaves the winning region at position " + std::to_string(v);
            return false;
        }
        std::vector<int> options;
        if (arena.owner(v) == Player::Eve) {
            int m = strategy.choice(v, mem);
            if (m < 0 || m >= arena.moveCount() || arena.move(m).from != v) {
                if (why)
                    *why = "strategy picks an invalid move at position " + std::to_string(v);
                return false;
            }
            options.push_back(m);
        } else {
            options = arena.movesFrom(v);
        }
        for (int m : options) {
            const GameMove& mv = arena.move(m);
            int nm = strategy.update(mem, m);
            int to = id(mv.to, nm);
            g.arcs.push_back({node, to, 0, mv.premise | (mv.conclusion << arena.assumptions)});
            push(to);
        }
    }
    PathCondition bad;
    bad.infAll = allColours(arena.assumptions);
    bad.finSome.push_back(arena.guarantees == 0 ? 0 : allColours(arena.guarantees) << arena.assumptions);
    if (findAcceptingPath(g, root, bad)) {
        if (why)
            *why = "a consistent play satisfies every assumption but misses a guarantee";
        return false;
    }
    return true;
}

GameArena buildG2(const Automaton& input)
{
    Automaton a = complete(input);
    int n = a.stateCount();
    int k = a.colours();
    bool buchi = a.isGenBuchi();
    if ((buchi && k * k > kMaxColours) || (!buchi && 2 * k > kMaxColours))
        throw ContractError("buildG2: too many colours");
    GameArena arena;
    arena.assumptions = buchi ? k * k : k;
    arena.guarantees = buchi ? k : 2 * k;

    std::map<std::tuple<int, int, int, int, int>, int> index;  // (stage, p, q1, q2, letter)
    std::deque<std::tuple<int, int, int, int, int>> queue;
    auto intern = [&](int stage, int p, int q1, int q2, int l) {
        auto key = std::tuple{stage, p, q1, q2, l};
        auto it = index.find(key);
        if (it != index.end())
            return it->second;
        int v = arena.addPosition(stage == 1 ? Player::Eve : Player::Adam);
        index.emplace(key, v);
        queue.push_back(key);
        return v;
    };
    int q0 = a.initial();
    arena.initial = intern(0, q0, q0, q0, -1);
    (void)n;
    while (!queue.empty()) {
        auto [stage, p, q1, q2, l] = queue.front();
        queue.pop_front();
        int v = index.at({stage, p, q1, q2, l});
        if (stage == 0) {
            for (int letter = 0; letter < a.letterCount(); ++letter)
                arena.addMove(v, intern(1, p, q1, q2, letter), 0, 0);
        } else if (stage == 1) {
            for (const Edge& e : a.edges(p)) {
                if (e.letter != l)
                    continue;
                int to = intern(2, e.dst, q1, q2, l);
                if (buchi)
                    arena.addMove(v, to, 0, e.colours);
                else
                    arena.addMove(v, to, e.colours, 0);
            }
        } else {
            for (const Edge& e1 : a.edges(q1)) {
                if (e1.letter != l)
                    continue;
                for (const Edge& e2 : a.edges(q2)) {
                    if (e2.letter != l)
                        continue;
                    int to = intern(0, p, e1.dst, e2.dst, -1);
                    if (buchi) {
                        ColourSet premise = 0;
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j)
                                if (hasColour(e1.colours, i) || hasColour(e2.colours, j))
                                    premise |= colourBit(i * k + j);
                        arena.addMove(v, to, premise, 0);
                    } else {
                        arena.addMove(v, to, 0, e1.colours | (e2.colours << k));
                    }
                }
            }
        }
    }
    return arena;
}

bool isHistoryDeterministic(const Automaton& a)
{
    if (a.stateCount() == 0)
        return true;
    GameArena arena = buildG2(a);
    return solveGR1(arena).eveWins[arena.initial];
}

bool containsHD(const Automaton& inA, const Automaton& inB)
{
    if (inA.acceptance() != inB.acceptance())
        throw ContractError("containsHD: acceptance families differ");
    if (!(inA.alphabet() == inB.alphabet()))
        throw ContractError("containsHD: alphabets differ");
    if (inA.stateCount() == 0)
        return true;
    if (inB.stateCount() == 0)
        return isEmpty(inA);
    Automaton a = complete(inA), b = complete(inB);
    bool buchi = a.isGenBuchi();
    GameArena arena;
    arena.assumptions = buchi ? a.colours() : b.colours();
    arena.guarantees = buchi ? b.colours() : a.colours();
    std::map<std::tuple<int, int, int>, int> index;  // (p, q, letter or -1)
    std::deque<std::tuple<int, int, int>> queue;
    auto intern = [&](int p, int q, int l) {
        auto key = std::tuple{p, q, l};
        auto it = index.find(key);
        if (it != index.end())
            return it->second;
        int v = arena.addPosition(l < 0 ? Player::Adam : Player::Eve);
        index.emplace(key, v);
        queue.push_back(key);
        return v;
    };
    arena.initial = intern(a.initial(), b.initial(), -1);
    while (!queue.empty()) {
        auto [p, q, l] = queue.front();
        queue.pop_front();
        int v = index.at({p, q, l});
        if (l < 0) {
            for (const Edge& e : a.edges(p)) {
                int to = intern(e.dst, q, e.letter);
                if (buchi)
                    arena.addMove(v, to, e.colours, 0);
                else
                    arena.addMove(v, to, 0, e.colours);
            }
        } else {
            for (const Edge& e : b.edges(q)) {
                if (e.letter != l)
                    continue;
                int to = intern(p, e.dst, -1);
                if (buchi)
                    arena.addMove(v, to, 0, e.colours);
                else
                    arena.addMove(v, to, e.colours, 0);
            }
        }
    }
    return solveGR1(arena).eveWins[arena.initial];
}

bool equivalent(const Automaton& a, const Automaton& b, EquivMode mode)
{
    if (mode == EquivMode::Det)
        return equivalentDeterministic(a, b);
    if (!isHistoryDeterministic(a) || !isHistoryDeterministic(b))
        throw ContractError("hd equivalence needs two history-deterministic automata");
    return containsHD(a, b) && containsHD(b, a);
}

}  // namespace hdmin
