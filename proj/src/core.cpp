#include "hdmin/core.hpp"
#include "hdmin/graph_search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace hdmin {

std::string formatColours(ColourSet s)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxColours; ++i) {
        if (!hasColour(s, i))
            continue;
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string acceptanceName(Acceptance acc)
{
    return acc == Acceptance::GenBuchi ? "gen-buchi" : "gen-cobuchi";
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters))
{
    if (letters_.empty())
        throw ContractError("alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.empty())
            throw ContractError("alphabet letters must be non-empty names");
        if (!seen.insert(l).second)
            throw ContractError("duplicate letter '" + l + "' in alphabet");
    }
}

int Alphabet::indexOf(const std::string& letter) const
{
    auto it = std::find(letters_.begin(), letters_.end(), letter);
    return it == letters_.end() ? -1 : static_cast<int>(it - letters_.begin());
}

Automaton::Automaton(Alphabet alphabet, int colours, Acceptance acc)
    : alphabet_(std::move(alphabet)), colours_(colours), acc_(acc)
{
    if (colours < 0 || colours > kMaxColours)
        throw ContractError("colour count out of range: " + std::to_string(colours));
}

int Automaton::addState(std::string name)
{
    int q = stateCount();
    out_.emplace_back();
    names_.push_back(name.empty() ? "q" + std::to_string(q) : std::move(name));
    return q;
}

void Automaton::addTransition(int src, int letter, int dst, ColourSet colours)
{
    if (src < 0 || src >= stateCount() || dst < 0 || dst >= stateCount())
        throw ContractError("transition endpoint out of range");
    if (letter < 0 || letter >= letterCount())
        throw ContractError("transition letter out of range");
    if ((colours & ~fullColours()) != 0)
        throw ContractError("transition colour out of range: " + formatColours(colours));
    auto& list = out_[src];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair{letter, dst}, [](const Edge& e, const auto& key) {
        return std::pair{e.letter, e.dst} < key;
    });
    if (it != list.end() && it->letter == letter && it->dst == dst)
        it->colours |= colours;
    else
        list.insert(it, Edge{letter, dst, colours});
}

void Automaton::removeTransition(int src, int letter, int dst)
{
    auto& list = out_.at(src);
    std::erase_if(list, [&](const Edge& e) { return e.letter == letter && e.dst == dst; });
}

void Automaton::setColours(int src, int letter, int dst, ColourSet colours)
{
    for (Edge& e : out_.at(src))
        if (e.letter == letter && e.dst == dst) {
            e.colours = colours;
            return;
        }
    throw ContractError("setColours: no such transition");
}

void Automaton::setInitial(int q)
{
    if (q < 0 || q >= stateCount())
        throw ContractError("initial state out of range");
    initial_ = q;
}

void Automaton::setStateName(int q, std::string name) { names_.at(q) = std::move(name); }

void Automaton::setAcceptance(Acceptance acc, int colours)
{
    if (colours < 0 || colours > kMaxColours)
        throw ContractError("colour count out of range");
    for (const auto& list : out_)
        for (const Edge& e : list)
            if ((e.colours & ~allColours(colours)) != 0)
                throw ContractError("setAcceptance: existing transition uses a dropped colour");
    acc_ = acc;
    colours_ = colours;
}

std::vector<Transition> Automaton::transitions() const
{
    std::vector<Transition> ts;
    for (int q = 0; q < stateCount(); ++q)
        for (const Edge& e : out_[q])
            ts.push_back({q, e.letter, e.dst, e.colours});
    return ts;
}

std::size_t Automaton::transitionCount() const
{
    std::size_t n = 0;
    for (const auto& list : out_)
        n += list.size();
    return n;
}

std::vector<int> Automaton::successors(int q, int a) const
{
    std::vector<int> r;
    for (const Edge& e : out_.at(q))
        if (e.letter == a)
            r.push_back(e.dst);
    return r;
}

std::optional<ColourSet> Automaton::colourOf(int src, int letter, int dst) const
{
    for (const Edge& e : out_.at(src))
        if (e.letter == letter && e.dst == dst)
            return e.colours;
    return std::nullopt;
}

int Automaton::stateIndex(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Automaton::isDeterministic() const
{
    for (const auto& list : out_)
        for (std::size_t i = 1; i < list.size(); ++i)
            if (list[i].letter == list[i - 1].letter)
                return false;
    return true;
}

bool Automaton::isComplete() const
{
    for (const auto& list : out_) {
        std::vector<bool> seen(letterCount(), false);
        for (const Edge& e : list)
            seen[e.letter] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            return false;
    }
    return true;
}

bool Automaton::acceptsColours(ColourSet inf) const
{
    bool all = (inf & fullColours()) == fullColours();
    return acc_ == Acceptance::GenBuchi ? all : !all;
}

bool Automaton::operator==(const Automaton& o) const
{
    return name_ == o.name_ && alphabet_ == o.alphabet_ && colours_ == o.colours_ && acc_ == o.acc_ &&
           initial_ == o.initial_ && out_ == o.out_ && names_ == o.names_;
}

std::string formatLasso(const Alphabet& sigma, const Lasso& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.stem.size(); ++i)
        os << (i ? " " : "") << sigma.name(w.stem[i]);
    os << (w.stem.empty() ? "(" : " (");
    for (std::size_t i = 0; i < w.cycle.size(); ++i)
        os << (i ? " " : "") << sigma.name(w.cycle[i]);
    os << ")^w";
    return os.str();
}

Lasso makeLasso(const Alphabet& sigma, const std::vector<std::string>& stem, const std::vector<std::string>& cycle)
{
    Lasso w;
    auto conv = [&](const std::vector<std::string>& in, std::vector<int>& out) {
        for (const auto& l : in) {
            int a = sigma.indexOf(l);
            if (a < 0)
                throw InputError("letter '" + l + "' is not in the alphabet");
            out.push_back(a);
        }
    };
    conv(stem, w.stem);
    conv(cycle, w.cycle);
    if (w.cycle.empty())
        throw InputError("lasso cycle must be non-empty");
    return w;
}

const Lasso* ResidualPartition::separator(int c1, int c2) const
{
    auto it = separators.find({std::min(c1, c2), std::max(c1, c2)});
    return it == separators.end() ? nullptr : &it->second;
}

std::vector<int> sccIds(const std::vector<std::vector<int>>& adj, int* count)
{
    // Iterative Tarjan.
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> onStack(n, false);
    int next = 0, comps = 0;
    std::vector<std::pair<int, std::size_t>> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = next++;
        stack.push_back(root);
        onStack[root] = true;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    onStack[w] = true;
                    call.push_back({w, 0});
                } else if (onStack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            int done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    if (count)
        *count = comps;
    return comp;
}

std::vector<bool> reachableStates(const Automaton& a)
{
    std::vector<bool> seen(a.stateCount(), false);
    if (a.stateCount() == 0)
        return seen;
    std::vector<int> stack{a.initial()};
    seen[a.initial()] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const Edge& e : a.edges(q))
            if (!seen[e.dst]) {
                seen[e.dst] = true;
                stack.push_back(e.dst);
            }
    }
    return seen;
}

Automaton restrictStates(const Automaton& a, const std::vector<bool>& keep)
{
    if (!keep.at(a.initial()))
        throw ContractError("restrictStates: the initial state must be kept");
    Automaton r(a.alphabet(), a.colours(), a.acceptance());
    r.setName(a.name());
    std::vector<int> idx(a.stateCount(), -1);
    for (int q = 0; q < a.stateCount(); ++q)
        if (keep[q])
            idx[q] = r.addState(a.stateName(q));
    for (int q = 0; q < a.stateCount(); ++q)
        if (keep[q])
            for (const Edge& e : a.edges(q))
                if (keep[e.dst])
                    r.addTransition(idx[q], e.letter, idx[e.dst], e.colours);
    r.setInitial(idx[a.initial()]);
    return r;
}

Automaton trim(const Automaton& a) { return restrictStates(a, reachableStates(a)); }

Automaton withInitial(const Automaton& a, int q)
{
    Automaton r = a;
    r.setInitial(q);
    return r;
}

Automaton complete(const Automaton& a)
{
    if (a.isComplete())
        return a;
    Automaton r = a;
    if (a.isGenBuchi() && a.colours() == 0) {
        // everything accepts with no colours; the sink needs one to reject
        r = Automaton(a.alphabet(), 1, Acceptance::GenBuchi);
        r.setName(a.name());
        for (int q = 0; q < a.stateCount(); ++q)
            r.addState(a.stateName(q));
        for (const Transition& t : a.transitions())
            r.addTransition(t.src, t.letter, t.dst, colourBit(0));
        r.setInitial(a.initial());
    }
    std::string name = "sink";
    while (r.stateIndex(name) >= 0)
        name += "'";
    int sink = r.addState(name);
    ColourSet loop = r.isGenBuchi() ? 0 : r.fullColours();
    for (int q = 0; q < r.stateCount(); ++q) {
        std::vector<bool> seen(a.letterCount(), false);
        for (const Edge& e : r.edges(q))
            seen[e.letter] = true;
        for (int l = 0; l < a.letterCount(); ++l)
            if (!seen[l])
                r.addTransition(q, l, sink, loop);
    }
    return r;
}

std::vector<bool> nonEmptyStates(const Automaton& a)
{
    LabelledGraph g = graphOf(a);
    PathCondition cond = conditionFor(a.acceptance(), a.colours());
    std::vector<bool> r(a.stateCount(), false);
    for (int q = 0; q < a.stateCount(); ++q)
        r[q] = findAcceptingPath(g, q, cond).has_value();
    return r;
}

bool lassoAccepts(const Automaton& a, const Lasso& w)
{
    if (w.cycle.empty())
        throw InputError("lasso cycle must be non-empty");
    for (int l : w.stem)
        if (l < 0 || l >= a.letterCount())
            throw InputError("lasso letter out of range");
    for (int l : w.cycle)
        if (l < 0 || l >= a.letterCount())
            throw InputError("lasso letter out of range");
    if (a.stateCount() == 0)
        return false;
    int len = static_cast<int>(w.stem.size() + w.cycle.size());
    int stemLen = static_cast<int>(w.stem.size());
    auto letterAt = [&](int pos) { return pos < stemLen ? w.stem[pos] : w.cycle[pos - stemLen]; };
    auto node = [&](int q, int pos) { return q * len + pos; };
    LabelledGraph g;
    g.nodes = a.stateCount() * len;
    for (int q = 0; q < a.stateCount(); ++q)
        for (int pos = 0; pos < len; ++pos) {
            int nextPos = pos + 1 < len ? pos + 1 : stemLen;
            int l = letterAt(pos);
            for (const Edge& e : a.edges(q))
                if (e.letter == l)
                    g.arcs.push_back({node(q, pos), node(e.dst, nextPos), l, e.colours});
        }
    return findAcceptingPath(g, node(a.initial(), 0), conditionFor(a.acceptance(), a.colours())).has_value();
}

std::optional<Lasso> acceptedLasso(const Automaton& a)
{
    if (a.stateCount() == 0)
        return std::nullopt;
    LabelledGraph g = graphOf(a);
    auto path = findAcceptingPath(g, a.initial(), conditionFor(a.acceptance(), a.colours()));
    if (!path)
        return std::nullopt;
    return lettersOf(g, *path);
}

bool isEmpty(const Automaton& a, Lasso* witness)
{
    auto w = acceptedLasso(a);
    if (w && witness)
        *witness = *w;
    return !w.has_value();
}

std::optional<Lasso> commonLasso(const Automaton& a, const Automaton& b)
{
    if (!(a.alphabet() == b.alphabet()))
        throw ContractError("product of automata over different alphabets");
    if (a.colours() + b.colours() > kMaxColours)
        throw ContractError("product needs more than 64 colours");
    if (a.stateCount() == 0 || b.stateCount() == 0)
        return std::nullopt;
    int nb = b.stateCount();
    std::vector<int> id(static_cast<std::size_t>(a.stateCount()) * nb, -1);
    LabelledGraph g;
    std::deque<std::pair<int, int>> queue;
    auto visit = [&](int p, int q) {
        int& slot = id[static_cast<std::size_t>(p) * nb + q];
        if (slot < 0) {
            slot = g.nodes++;
            queue.push_back({p, q});
        }
        return slot;
    };
    visit(a.initial(), b.initial());
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        int from = id[static_cast<std::size_t>(p) * nb + q];
        for (const Edge& ea : a.edges(p))
            for (const Edge& eb : b.edges(q))
                if (ea.letter == eb.letter) {
                    int to = visit(ea.dst, eb.dst);
                    g.arcs.push_back({from, to, ea.letter, ea.colours | (eb.colours << a.colours())});
                }
    }
    PathCondition cond = conjunction(conditionFor(a.acceptance(), a.colours()),
                                     conditionFor(b.acceptance(), b.colours(), a.colours()));
    auto path = findAcceptingPath(g, 0, cond);
    if (!path)
        return std::nullopt;
    return lettersOf(g, *path);
}

Automaton dualise(const Automaton& a)
{
    if (!a.isDeterministic())
        throw ContractError("dualise requires a deterministic automaton: complementing by swapping the "
                            "acceptance condition is unsound under nondeterminism");
    Automaton r = complete(a);
    r.setAcceptance(a.isGenBuchi() ? Acceptance::GenCoBuchi : Acceptance::GenBuchi, a.colours());
    return r;
}

bool includedInDeterministic(const Automaton& a, const Automaton& b, Lasso* counterexample)
{
    auto w = commonLasso(a, dualise(b));
    if (w && counterexample)
        *counterexample = *w;
    return !w.has_value();
}

bool equivalentDeterministic(const Automaton& a, const Automaton& b, Lasso* counterexample)
{
    if (!a.isDeterministic() || !b.isDeterministic())
        throw ContractError("deterministic equivalence needs two deterministic automata");
    return includedInDeterministic(a, b, counterexample) && includedInDeterministic(b, a, counterexample);
}

namespace {

ResidualPartition partitionWith(const Automaton& a, const std::function<std::optional<Lasso>(int, int)>& differ)
{
    ResidualPartition p;
    p.classOf.assign(a.stateCount(), -1);
    for (int q = 0; q < a.stateCount(); ++q) {
        std::vector<Lasso> seps;
        for (int c = 0; c < p.classCount; ++c) {
            auto sep = differ(q, p.representative[c]);
            if (!sep) {
                p.classOf[q] = c;
                break;
            }
            seps.push_back(*sep);
        }
        if (p.classOf[q] >= 0)
            continue;
        int c = p.classCount++;
        p.classOf[q] = c;
        p.representative.push_back(q);
        for (int d = 0; d < c; ++d)
            p.separators[{d, c}] = seps[d];
    }
    if (a.stateCount() > 0)
        p.initialClass = p.classOf[a.initial()];
    return p;
}

std::optional<Lasso> separate(const Automaton& x, const Automaton& y)
{
    if (auto w = commonLasso(x, dualise(y)))
        return w;
    return commonLasso(y, dualise(x));
}

}  // namespace

ResidualPartition residualPartition(const Automaton& a)
{
    if (!a.isDeterministic())
        throw ContractError("residualPartition: nondeterministic input needs per-state deterministic references");
    return partitionWith(a, [&](int q, int r) { return separate(withInitial(a, q), withInitial(a, r)); });
}

ResidualPartition residualPartition(const Automaton& a, const std::vector<Automaton>& refs)
{
    if (static_cast<int>(refs.size()) != a.stateCount())
        throw ContractError("residualPartition: one reference per state is required");
    for (const auto& r : refs)
        if (!r.isDeterministic())
            throw ContractError("residualPartition: references must be deterministic");
    return partitionWith(a, [&](int q, int r) { return separate(refs[q], refs[r]); });
}

bool checkSemanticDeterminism(const Automaton& a, const ResidualPartition& p)
{
    for (int q = 0; q < a.stateCount(); ++q) {
        std::map<int, int> classOnLetter;
        for (const Edge& e : a.edges(q)) {
            auto [it, fresh] = classOnLetter.emplace(e.letter, p.classOf[e.dst]);
            if (!fresh && it->second != p.classOf[e.dst])
                return false;
        }
    }
    return true;
}

}  // namespace hdmin
