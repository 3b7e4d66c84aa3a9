#include "hdmin/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hdmin {

namespace {

[[noreturn]] void failAt(int line, const std::string& msg)
{
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> splitWords(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;)
        out.push_back(w);
    return out;
}

bool plainToken(const std::string& s)
{
    if (s.empty())
        return false;
    return std::none_of(s.begin(), s.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == ',' || c == '#' ||
               c == '"';
    });
}

ColourSet parseColourSet(const std::string& text, int k, int line)
{
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        failAt(line, "colour set must look like {0,1}");
    s = s.substr(1, s.size() - 2);
    ColourSet c = 0;
    if (s.empty())
        return c;
    std::istringstream is(s);
    for (std::string item; std::getline(is, item, ',');) {
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size())
                v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0)
            failAt(line, "bad colour '" + item + "'");
        if (v >= k)
            failAt(line, "colour " + std::to_string(v) + " out of range for " + std::to_string(k) + " colours");
        c |= colourBit(v);
    }
    return c;
}

std::vector<std::string> uniqueNames(const Automaton& a)
{
    std::vector<std::string> names;
    std::set<std::string> used;
    for (int q = 0; q < a.stateCount(); ++q) {
        std::string n = a.stateName(q);
        if (!plainToken(n))
            n = "q" + std::to_string(q);
        while (used.count(n))
            n += "'";
        used.insert(n);
        names.push_back(n);
    }
    return names;
}

}  // namespace

Automaton parseNative(const std::string& text)
{
    std::istringstream in(text);
    std::string name;
    std::optional<Alphabet> sigma;
    std::optional<Acceptance> acc;
    int k = 0;
    std::optional<Automaton> a;
    std::optional<std::pair<std::string, int>> initial;
    struct Pending {
        std::vector<std::string> words;
        std::string colours;
        int line;
    };
    std::vector<Pending> trans;
    std::vector<std::string> states;
    int statesLine = 0;

    int lineNo = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineNo;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto words = splitWords(line);
        if (words.empty())
            continue;
        const std::string& key = words[0];
        if (key == "name") {
            if (words.size() != 2)
                failAt(lineNo, "name takes one token");
            name = words[1];
        } else if (key == "alphabet") {
            if (sigma)
                failAt(lineNo, "alphabet given twice");
            if (words.size() < 2)
                failAt(lineNo, "empty alphabet");
            std::vector<std::string> letters(words.begin() + 1, words.end());
            std::set<std::string> seen(letters.begin(), letters.end());
            if (seen.size() != letters.size())
                failAt(lineNo, "duplicate letter");
            sigma = Alphabet(letters);
        } else if (key == "acceptance") {
            if (words.size() < 2 || words.size() > 3)
                failAt(lineNo, "acceptance takes a kind and a colour count");
            const std::string& kind = words[1];
            if (kind == "gen-buchi" || kind == "buchi")
                acc = Acceptance::GenBuchi;
            else if (kind == "gen-cobuchi" || kind == "cobuchi")
                acc = Acceptance::GenCoBuchi;
            else
                failAt(lineNo, "unknown acceptance kind '" + kind + "'");
            if (words.size() == 3) {
                try {
                    k = std::stoi(words[2]);
                } catch (const std::exception&) {
                    failAt(lineNo, "bad colour count '" + words[2] + "'");
                }
            } else {
                k = 1;
            }
            if ((kind == "buchi" || kind == "cobuchi") && k != 1)
                failAt(lineNo, kind + " means exactly one colour");
            if (k < 0 || k > kMaxColours)
                failAt(lineNo, "colour count out of range");
        } else if (key == "states") {
            states.assign(words.begin() + 1, words.end());
            statesLine = lineNo;
        } else if (key == "initial") {
            if (words.size() != 2)
                failAt(lineNo, "initial takes one state");
            initial = std::pair{words[1], lineNo};
        } else if (key == "trans") {
            if (words.size() < 4)
                failAt(lineNo, "trans needs source, letter, target and colours");
            auto brace = line.find('{');
            std::string colours = brace == std::string::npos ? "" : line.substr(brace);
            auto head = splitWords(line.substr(0, brace));
            if (head.size() != 4)
                failAt(lineNo, "trans needs source, letter, target and colours");
            trans.push_back({head, colours, lineNo});
        } else {
            failAt(lineNo, "unknown keyword '" + key + "'");
        }
    }
    if (!sigma)
        throw InputError("line " + std::to_string(lineNo) + ": missing alphabet");
    if (!acc)
        throw InputError("line " + std::to_string(lineNo) + ": missing acceptance");
    if (states.empty())
        throw InputError("line " + std::to_string(lineNo) + ": missing states");
    Automaton r(*sigma, k, *acc);
    r.setName(name);
    std::map<std::string, int> index;
    for (const auto& s : states) {
        if (!index.emplace(s, r.stateCount()).second)
            failAt(statesLine, "duplicate state '" + s + "'");
        r.addState(s);
    }
    auto stateOf = [&](const std::string& s, int line) {
        auto it = index.find(s);
        if (it == index.end())
            failAt(line, "unknown state '" + s + "'");
        return it->second;
    };
    for (const auto& t : trans) {
        int src = stateOf(t.words[1], t.line);
        int letter = sigma->indexOf(t.words[2]);
        if (letter < 0)
            failAt(t.line, "unknown letter '" + t.words[2] + "'");
        int dst = stateOf(t.words[3], t.line);
        if (t.colours.empty())
            failAt(t.line, "missing colour set");
        r.addTransition(src, letter, dst, parseColourSet(t.colours, k, t.line));
    }
    r.setInitial(initial ? stateOf(initial->first, initial->second) : 0);
    return r;
}

std::string serialiseNative(const Automaton& a)
{
    for (const auto& l : a.alphabet().letters())
        if (!plainToken(l))
            throw ContractError("letter '" + l + "' cannot be written in the native format");
    auto names = uniqueNames(a);
    std::ostringstream os;
    if (plainToken(a.name()))
        os << "name " << a.name() << "\n";
    os << "alphabet";
    for (const auto& l : a.alphabet().letters())
        os << ' ' << l;
    os << "\nacceptance " << (a.isGenBuchi() ? "gen-buchi" : "gen-cobuchi") << ' ' << a.colours() << "\nstates";
    for (const auto& n : names)
        os << ' ' << n;
    os << "\ninitial " << names[a.initial()] << "\n";
    for (const Transition& t : a.transitions())
        os << "trans " << names[t.src] << ' ' << a.alphabet().name(t.letter) << ' ' << names[t.dst] << ' '
           << formatColours(t.colours) << "\n";
    return os.str();
}

// ---- HOA -------------------------------------------------------------------------

namespace {

int apCount(int letters)
{
    int n = 0;
    while ((1 << n) < letters)
        ++n;
    return n;
}

std::string letterLabel(int letter, int aps)
{
    if (aps == 0)
        return "t";
    std::string s;
    for (int j = 0; j < aps; ++j) {
        if (j)
            s += '&';
        if (!((letter >> j) & 1))
            s += '!';
        s += std::to_string(j);
    }
    return s;
}

std::string quoted(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            r += '\\';
        r += c;
    }
    return r + "\"";
}

struct HoaToken {
    enum Kind { Header, String, Word, Label, Set } kind;
    std::string text;
    int line;
};

std::vector<HoaToken> tokenizeHOA(const std::string& s)
{
    std::vector<HoaToken> out;
    int line = 1;
    std::size_t i = 0;
    auto bad = [&](const std::string& msg) { failAt(line, msg); };
    while (i < s.size()) {
        char c = s[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            auto end = s.find("*/", i + 2);
            if (end == std::string::npos)
                bad("unterminated comment");
            line += static_cast<int>(std::count(s.begin() + i, s.begin() + end, '\n'));
            i = end + 2;
        } else if (c == '"') {
            std::string v;
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size())
                    ++i;
                if (s[i] == '\n')
                    ++line;
                v += s[i++];
            }
            if (i >= s.size())
                bad("unterminated string");
            ++i;
            out.push_back({HoaToken::String, v, line});
        } else if (c == '[' || c == '{') {
            char close = c == '[' ? ']' : '}';
            auto end = s.find(close, i);
            if (end == std::string::npos)
                bad(std::string("missing '") + close + "'");
            out.push_back({c == '[' ? HoaToken::Label : HoaToken::Set, s.substr(i + 1, end - i - 1), line});
            i = end + 1;
        } else {
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '"' && s[j] != '[' &&
                   s[j] != '{')
                ++j;
            std::string w = s.substr(i, j - i);
            bool header = w.size() > 1 && w.back() == ':' && w.rfind("--", 0) != 0;
            out.push_back({header ? HoaToken::Header : HoaToken::Word, w, line});
            i = j;
        }
    }
    return out;
}

int parseInt(const HoaToken& t)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(t.text, &used);
        if (used == t.text.size() && v >= 0)
            return v;
    } catch (const std::exception&) {
    }
    failAt(t.line, "expected a number, got '" + t.text + "'");
}

[[noreturn]] void unsupported(int line, const std::string& feature)
{
    failAt(line, "unsupported HOA feature: " + feature);
}

// Letters matched by a conjunction of literals over aps atomic propositions.
std::vector<int> labelLetters(const std::string& label, int aps, int letters, int line)
{
    std::string s;
    for (char c : label)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.find('|') != std::string::npos || s.find('(') != std::string::npos)
        unsupported(line, "labels other than conjunctions of literals");
    int mustOn = 0, mustOff = 0;
    if (s == "f")
        return {};
    if (s != "t") {
        std::istringstream is(s);
        for (std::string lit; std::getline(is, lit, '&');) {
            bool neg = !lit.empty() && lit[0] == '!';
            std::string num = neg ? lit.substr(1) : lit;
            int v = -1;
            try {
                std::size_t used = 0;
                v = std::stoi(num, &used);
                if (used != num.size())
                    v = -1;
            } catch (const std::exception&) {
            }
            if (v < 0 || v >= aps)
                failAt(line, "bad literal '" + lit + "'");
            (neg ? mustOff : mustOn) |= 1 << v;
        }
    }
    std::vector<int> r;
    for (int l = 0; l < letters; ++l)
        if ((l & mustOn) == mustOn && (l & mustOff) == 0)
            r.push_back(l);
    return r;
}

}  // namespace

std::string exportHOA(const Automaton& a)
{
    int aps = apCount(a.letterCount());
    int k = a.colours();
    std::ostringstream os;
    os << "HOA: v1\n";
    if (!a.name().empty())
        os << "name: " << quoted(a.name()) << "\n";
    os << "States: " << a.stateCount() << "\nStart: " << a.initial() << "\nAP: " << aps;
    for (int j = 0; j < aps; ++j)
        os << " \"p" << j << "\"";
    os << "\nletters:";
    for (const auto& l : a.alphabet().letters())
        os << ' ' << quoted(l);
    os << "\n";
    if (a.isGenBuchi())
        os << "acc-name: generalized-Buchi " << k << "\n";
    else
        os << "acc-name: generalized-co-Buchi " << k << "\n";
    os << "Acceptance: " << k << ' ';
    if (k == 0) {
        os << (a.isGenBuchi() ? "t" : "f");
    } else {
        for (int i = 0; i < k; ++i)
            os << (i ? (a.isGenBuchi() ? "&" : "|") : "") << (a.isGenBuchi() ? "Inf(" : "Fin(") << i << ")";
    }
    os << "\nproperties: trans-labels explicit-labels trans-acc\n--BODY--\n";
    for (int q = 0; q < a.stateCount(); ++q) {
        os << "State: " << q << ' ' << quoted(a.stateName(q)) << "\n";
        for (const Edge& e : a.edges(q)) {
            os << '[' << letterLabel(e.letter, aps) << "] " << e.dst;
            if (e.colours) {
                std::string c = formatColours(e.colours);
                std::replace(c.begin(), c.end(), ',', ' ');
                os << ' ' << c;
            }
            os << "\n";
        }
    }
    os << "--END--\n";
    return os.str();
}

Automaton importHOA(const std::string& text)
{
    auto toks = tokenizeHOA(text);
    std::size_t i = 0;
    auto atEnd = [&] { return i >= toks.size(); };
    auto lastLine = [&] { return toks.empty() ? 1 : toks.back().line; };
    if (atEnd() || toks[0].text != "HOA:")
        failAt(1, "missing 'HOA:' header");
    ++i;
    if (atEnd() || toks[i].text != "v1")
        failAt(toks.empty() ? 1 : toks[0].line, "only HOA v1 is supported");
    ++i;

    int states = -1, start = -1, aps = -1, k = -1;
    std::string name;
    std::vector<std::string> letterNames;
    std::optional<Acceptance> acc;
    while (!atEnd() && toks[i].text != "--BODY--") {
        const HoaToken& h = toks[i];
        if (h.kind != HoaToken::Header)
            failAt(h.line, "expected a header, got '" + h.text + "'");
        ++i;
        std::vector<HoaToken> args;
        while (!atEnd() && toks[i].kind != HoaToken::Header && toks[i].text != "--BODY--")
            args.push_back(toks[i++]);
        const std::string& key = h.text;
        if (key == "States:") {
            if (args.size() != 1)
                failAt(h.line, "States: takes one number");
            states = parseInt(args[0]);
        } else if (key == "Start:") {
            if (start >= 0)
                unsupported(h.line, "several initial states");
            if (args.size() != 1 || args[0].text.find('&') != std::string::npos)
                unsupported(h.line, "alternation in Start:");
            start = parseInt(args[0]);
        } else if (key == "AP:") {
            if (args.empty())
                failAt(h.line, "AP: needs a count");
            aps = parseInt(args[0]);
            if (static_cast<int>(args.size()) != aps + 1)
                failAt(h.line, "AP: count does not match the names");
        } else if (key == "letters:") {
            for (const auto& t : args)
                letterNames.push_back(t.text);
        } else if (key == "name:") {
            if (!args.empty())
                name = args[0].text;
        } else if (key == "Acceptance:") {
            if (args.size() < 2)
                failAt(h.line, "Acceptance: needs a count and a condition");
            k = parseInt(args[0]);
            std::string cond;
            for (std::size_t j = 1; j < args.size(); ++j)
                cond += args[j].text;
            if (k > kMaxColours)
                unsupported(h.line, "more than 64 acceptance sets");
            if (k == 0 && cond == "t") {
                acc = Acceptance::GenBuchi;
            } else if (k == 0 && cond == "f") {
                acc = Acceptance::GenCoBuchi;
            } else {
                std::string expectInf, expectFin;
                for (int j = 0; j < k; ++j) {
                    expectInf += (j ? "&" : "") + std::string("Inf(") + std::to_string(j) + ")";
                    expectFin += (j ? "|" : "") + std::string("Fin(") + std::to_string(j) + ")";
                }
                if (cond == expectInf)
                    acc = Acceptance::GenBuchi;
                else if (cond == expectFin)
                    acc = Acceptance::GenCoBuchi;
                else
                    unsupported(h.line, "acceptance condition '" + cond + "'");
            }
        } else if (key == "Alias:") {
            unsupported(h.line, "aliases");
        } else if (!key.empty() && std::isupper(static_cast<unsigned char>(key[0]))) {
            unsupported(h.line, "header " + key);
        }
        // other lower-case headers carry no semantics
    }
    if (atEnd())
        failAt(lastLine(), "missing --BODY--");
    ++i;
    if (states < 0)
        failAt(lastLine(), "missing States:");
    if (aps < 0)
        failAt(lastLine(), "missing AP:");
    if (!acc)
        failAt(lastLine(), "missing Acceptance:");
    if (aps > 16)
        unsupported(lastLine(), "more than 16 atomic propositions");
    int letters = 1 << aps;
    if (letterNames.empty()) {
        for (int l = 0; l < letters; ++l)
            letterNames.push_back(std::to_string(l));
    } else if (static_cast<int>(letterNames.size()) > letters) {
        failAt(lastLine(), "more letters than AP valuations");
    }
    letters = static_cast<int>(letterNames.size());

    Automaton a(Alphabet(letterNames), k, *acc);
    a.setName(name);
    for (int q = 0; q < states; ++q)
        a.addState();
    int current = -1;
    while (!atEnd() && toks[i].text != "--END--") {
        const HoaToken& t = toks[i];
        if (t.text == "State:") {
            ++i;
            if (atEnd())
                failAt(t.line, "State: without a number");
            if (toks[i].kind == HoaToken::Label)
                unsupported(t.line, "state labels");
            current = parseInt(toks[i++]);
            if (current >= states)
                failAt(t.line, "state number out of range");
            if (!atEnd() && toks[i].kind == HoaToken::String)
                a.setStateName(current, toks[i++].text);
            if (!atEnd() && toks[i].kind == HoaToken::Set)
                unsupported(t.line, "state-based acceptance");
            continue;
        }
        if (current < 0)
            failAt(t.line, "edge before any State:");
        if (t.kind != HoaToken::Label)
            unsupported(t.line, "implicit edge labels");
        auto ls = labelLetters(t.text, aps, letters, t.line);
        ++i;
        if (atEnd())
            failAt(t.line, "edge without a target");
        const HoaToken& dstTok = toks[i++];
        if (dstTok.text.find('&') != std::string::npos)
            unsupported(dstTok.line, "alternation");
        int dst = parseInt(dstTok);
        if (dst >= states)
            failAt(dstTok.line, "target out of range");
        if (!atEnd() && toks[i].kind == HoaToken::Word && toks[i].text == "&")
            unsupported(toks[i].line, "alternation");
        ColourSet c = 0;
        if (!atEnd() && toks[i].kind == HoaToken::Set) {
            std::istringstream is(toks[i].text);
            for (std::string w; is >> w;) {
                int v = parseInt({HoaToken::Word, w, toks[i].line});
                if (v >= k)
                    failAt(toks[i].line, "acceptance set " + w + " out of range");
                c |= colourBit(v);
            }
            ++i;
        }
        for (int l : ls)
            a.addTransition(current, l, dst, c);
    }
    if (atEnd())
        failAt(lastLine(), "missing --END--");
    if (start < 0 || start >= std::max(states, 1))
        failAt(lastLine(), "missing or bad Start:");
    if (states == 0)
        failAt(lastLine(), "automaton without states");
    a.setInitial(start);
    return a;
}

// ---- graphs ------------------------------------------------------------------------

Graph parseEdges(const std::string& text)
{
    Graph g;
    std::istringstream in(text);
    int lineNo = 0;
    auto vertex = [&](const std::string& n) {
        int v = g.vertexIndex(n);
        return v >= 0 ? v : g.addVertex(n);
    };
    for (std::string line; std::getline(in, line);) {
        ++lineNo;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto w = splitWords(line);
        if (w.empty())
            continue;
        if (w.size() > 2)
            failAt(lineNo, "expected 'u v'");
        if (w.size() == 1) {
            vertex(w[0]);
            continue;
        }
        if (w[0] == w[1])
            failAt(lineNo, "self-loop on '" + w[0] + "'");
        int u = vertex(w[0]);
        int v = vertex(w[1]);
        g.addEdge(u, v);
    }
    return g;
}

std::string serialiseEdges(const Graph& g)
{
    std::ostringstream os;
    std::vector<bool> touched(g.vertexCount(), false);
    for (auto [u, v] : g.edges()) {
        os << g.name(u) << ' ' << g.name(v) << "\n";
        touched[u] = touched[v] = true;
    }
    for (int v = 0; v < g.vertexCount(); ++v)
        if (!touched[v])
            os << g.name(v) << "\n";
    return os.str();
}

Colouring parseColouring(const std::string& text, const Graph& g)
{
    Colouring c(g.vertexCount(), -1);
    std::istringstream in(text);
    int lineNo = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineNo;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto w = splitWords(line);
        if (w.empty())
            continue;
        if (w.size() != 2)
            failAt(lineNo, "expected 'vertex colour'");
        int v = g.vertexIndex(w[0]);
        if (v < 0)
            failAt(lineNo, "unknown vertex '" + w[0] + "'");
        int col = 0;
        try {
            col = std::stoi(w[1]);
        } catch (const std::exception&) {
            col = 0;
        }
        if (col < 1)
            failAt(lineNo, "colours are numbered from 1");
        c[v] = col - 1;
    }
    for (int v = 0; v < g.vertexCount(); ++v)
        if (c[v] < 0)
            throw InputError("vertex '" + g.name(v) + "' has no colour");
    return c;
}

std::string readTextFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeTextFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

Automaton loadAutomaton(const std::string& path)
{
    std::string text = readTextFile(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text.compare(first, 4, "HOA:") == 0)
        return importHOA(text);
    try {
        return parseNative(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace hdmin
