// io.cpp

#include "gshift/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gshift/error.hpp"

namespace gshift::io {

namespace {

using nlohmann::json;

struct Token {
    std::string text;
    std::size_t column = 0;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
};

// Nonblank lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            if (i > start)
                line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(ErrorKind kind, std::string_view source, std::size_t line, std::size_t column,
                       const std::string& msg)
{
    throw Error(kind, std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

[[noreturn]] void fail(ErrorKind kind, std::string_view source, const Line& line, const Token& tok,
                       const std::string& msg)
{
    fail(kind, source, line.number, tok.column, msg);
}

Rational rational_at(std::string_view source, const Line& line, const Token& tok)
{
    try {
        return parse_rational(tok.text);
    } catch (const Error&) {
        fail(ErrorKind::ParseError, source, line, tok, "'" + tok.text + "' is not a rational number");
    }
}

std::size_t intern(std::vector<std::string>& names, std::map<std::string, std::size_t>& index, const std::string& s)
{
    auto [it, fresh] = index.emplace(s, names.size());
    if (fresh)
        names.push_back(s);
    return it->second;
}

bool is_directive(const Line& line, std::string_view name)
{
    return line.tokens.front().text == std::string(name) + ":";
}

// Re-attaches the source to errors raised by a validating constructor.
template <typename F>
auto validated(std::string_view source, F&& build)
{
    try {
        return build();
    } catch (const Error& e) {
        std::string_view msg = e.what();
        msg.remove_prefix(kind_name(e.kind()).size() + 2);
        throw Error(e.kind(), std::string(source) + ": " + std::string(msg));
    }
}

} // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SoficPresentation parse_presentation(std::string_view text, std::string_view source)
{
    std::vector<std::string> symbols, states;
    std::map<std::string, std::size_t> symbol_index, state_index;
    bool fixed_alphabet = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen; // (state, symbol) -> line
    std::vector<Edge> edges;
    for (const Line& line : tokenize(text)) {
        if (is_directive(line, "alphabet")) {
            if (fixed_alphabet || !edges.empty())
                fail(ErrorKind::ParseError, source, line, line.tokens.front(), "alphabet line must come first");
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                if (intern(symbols, symbol_index, line.tokens[i].text) + 1 != symbols.size())
                    fail(ErrorKind::ParseError, source, line, line.tokens[i], "repeated symbol");
            fixed_alphabet = true;
            continue;
        }
        if (line.tokens.size() != 3)
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), "expected `src symbol dst`");
        const Token& sym = line.tokens[1];
        if (fixed_alphabet && !symbol_index.count(sym.text))
            fail(ErrorKind::ParseError, source, line, sym, "symbol '" + sym.text + "' is not in the alphabet");
        std::size_t src = intern(states, state_index, line.tokens[0].text);
        std::size_t s = intern(symbols, symbol_index, sym.text);
        std::size_t dst = intern(states, state_index, line.tokens[2].text);
        if (auto [it, fresh] = seen.emplace(std::make_pair(src, s), line.number); !fresh)
            fail(ErrorKind::InvariantViolation, source, line, sym,
                 "second edge labeled '" + sym.text + "' leaving '" + states[src] + "' (first on line "
                     + std::to_string(it->second) + "); the graph must be right-resolving");
        edges.push_back({static_cast<State>(src), static_cast<Symbol>(s), static_cast<State>(dst)});
    }
    if (edges.empty())
        fail(ErrorKind::ParseError, source, 1, 1, "no edges");
    return validated(source, [&] { return SoficPresentation(Alphabet(symbols), states, edges); });
}

SftSpec parse_forbidden(std::string_view text, std::string_view source)
{
    std::optional<Alphabet> alphabet;
    std::vector<Word> forbidden;
    for (const Line& line : tokenize(text)) {
        if (is_directive(line, "alphabet")) {
            if (alphabet)
                fail(ErrorKind::ParseError, source, line, line.tokens.front(), "second alphabet line");
            std::vector<std::string> names;
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                names.push_back(line.tokens[i].text);
            alphabet = validated(source, [&] { return Alphabet(names); });
            continue;
        }
        if (!alphabet)
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), "an `alphabet:` line must come first");
        std::string word;
        for (const Token& t : line.tokens)
            word += (word.empty() ? "" : " ") + t.text;
        try {
            forbidden.push_back(alphabet->parse(word));
        } catch (const Error& e) {
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), e.what());
        }
    }
    if (!alphabet)
        fail(ErrorKind::ParseError, source, 1, 1, "missing `alphabet:` line");
    return {*alphabet, std::move(forbidden)};
}

GFunction parse_weights(const SoficPresentation& pres, std::string_view text, std::string_view source)
{
    WeightRows rows(pres.num_states(), std::vector<Rational>(pres.alphabet().size(), 0));
    std::vector<std::vector<bool>> given(pres.num_states(), std::vector<bool>(pres.alphabet().size(), false));
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() != 3)
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), "expected `state symbol p/q`");
        auto q = pres.find_state(line.tokens[0].text);
        if (!q)
            fail(ErrorKind::ParseError, source, line, line.tokens[0], "unknown state '" + line.tokens[0].text + "'");
        auto s = pres.alphabet().find(line.tokens[1].text);
        if (!s)
            fail(ErrorKind::ParseError, source, line, line.tokens[1], "unknown symbol '" + line.tokens[1].text + "'");
        if (given[*q][*s])
            fail(ErrorKind::ParseError, source, line, line.tokens[1], "weight given twice");
        given[*q][*s] = true;
        Rational w = rational_at(source, line, line.tokens[2]);
        if (w < 0)
            fail(ErrorKind::InvariantViolation, source, line, line.tokens[2], "negative weight");
        if (w != 0 && pres.next(*q, *s) == no_state)
            fail(ErrorKind::InvariantViolation, source, line, line.tokens[1], "no such edge in the graph");
        rows[*q][*s] = w;
    }
    return validated(source, [&] { return GFunction(pres, rows); });
}

BipartiteCoding parse_coding(const SoficPresentation& domain, std::string_view text, std::string_view source)
{
    const Alphabet& sigma = domain.alphabet();
    std::vector<std::string> delta, delta_t, sigma_t;
    std::map<std::string, std::size_t> delta_i, delta_t_i, sigma_t_i;
    std::vector<std::optional<std::pair<Symbol, Symbol>>> psi(sigma.size());
    std::vector<std::pair<Symbol, Symbol>> psit;
    for (const Line& line : tokenize(text)) {
        bool is_psi = is_directive(line, "psi");
        if (!is_psi && !is_directive(line, "psitilde"))
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), "expected `psi:` or `psitilde:`");
        if (line.tokens.size() != 5 || line.tokens[2].text != "->")
            fail(ErrorKind::ParseError, source, line, line.tokens.front(),
                 is_psi ? "expected `psi: s -> d dt`" : "expected `psitilde: st -> dt d`");
        const Token& sym = line.tokens[1];
        if (is_psi) {
            auto s = sigma.find(sym.text);
            if (!s)
                fail(ErrorKind::ParseError, source, line, sym, "'" + sym.text + "' is not a symbol of the domain");
            if (psi[*s])
                fail(ErrorKind::ParseError, source, line, sym, "psi given twice for '" + sym.text + "'");
            psi[*s] = {static_cast<Symbol>(intern(delta, delta_i, line.tokens[3].text)),
                       static_cast<Symbol>(intern(delta_t, delta_t_i, line.tokens[4].text))};
        } else {
            std::size_t before = sigma_t.size();
            if (intern(sigma_t, sigma_t_i, sym.text) != before)
                fail(ErrorKind::ParseError, source, line, sym, "psitilde given twice for '" + sym.text + "'");
            psit.emplace_back(static_cast<Symbol>(intern(delta_t, delta_t_i, line.tokens[3].text)),
                              static_cast<Symbol>(intern(delta, delta_i, line.tokens[4].text)));
        }
    }
    std::vector<std::pair<Symbol, Symbol>> psi_pairs;
    for (Symbol s = 0; s < sigma.size(); ++s) {
        if (!psi[s])
            fail(ErrorKind::InvariantViolation, source, 1, 1, "psi is not given for '" + sigma.name(s) + "'");
        psi_pairs.push_back(*psi[s]);
    }
    return validated(source, [&] {
        return BipartiteCoding(domain, Alphabet(delta), Alphabet(delta_t), psi_pairs, Alphabet(sigma_t), psit);
    });
}

VertexSet parse_vertices(const GFunction& g, std::string_view text, std::string_view source)
{
    auto carrier = make_carrier(g);
    const SoficPresentation& p = g.presentation();
    std::vector<MeasureVertex> members;
    std::vector<std::string> names;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() != 2)
            fail(ErrorKind::ParseError, source, line, line.tokens.front(), "expected `name state:p/q,...`");
        std::vector<Rational> initial(p.num_states(), 0);
        const Token& spec = line.tokens[1];
        std::size_t pos = 0;
        Rational total = 0;
        while (pos <= spec.text.size()) {
            std::size_t end = spec.text.find(',', pos);
            if (end == std::string::npos)
                end = spec.text.size();
            std::string item = spec.text.substr(pos, end - pos);
            std::size_t colon = item.find(':');
            std::size_t col = spec.column + pos;
            if (colon == std::string::npos)
                fail(ErrorKind::ParseError, source, line.number, col, "expected `state:p/q`");
            auto q = p.find_state(item.substr(0, colon));
            if (!q)
                fail(ErrorKind::ParseError, source, line.number, col, "unknown state '" + item.substr(0, colon) + "'");
            Rational w = rational_at(source, line, {item.substr(colon + 1), col + colon + 1});
            if (w < 0)
                fail(ErrorKind::InvariantViolation, source, line.number, col, "negative mass");
            initial[*q] += w;
            total += w;
            pos = end + 1;
        }
        if (total != 1)
            fail(ErrorKind::InvariantViolation, source, line, spec,
                 "initial masses sum to " + to_string(total) + ", not 1");
        members.emplace_back(carrier, std::move(initial));
        names.push_back(line.tokens[0].text);
    }
    if (members.empty())
        fail(ErrorKind::ParseError, source, 1, 1, "no vertices");
    return validated(source, [&] { return VertexSet(members, names); });
}

namespace {

json parse_json(std::string_view text, std::string_view source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line and column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorKind::ParseError, source, line, col, "malformed JSON");
    }
}

[[noreturn]] void schema(std::string_view source, const std::string& msg)
{
    throw Error(ErrorKind::ParseError, std::string(source) + ": " + msg);
}

Rational json_rational(const json& v, std::string_view source, const std::string& where)
{
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error&) {
        }
    } else if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    schema(source, where + " must be a rational string `p/q`");
}

std::vector<std::string> string_list(const json& v, std::string_view source, const std::string& where)
{
    if (!v.is_array())
        schema(source, where + " must be an array of strings");
    std::vector<std::string> out;
    for (const json& x : v) {
        if (!x.is_string())
            schema(source, where + " must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

} // namespace

ShiftMeasureTable parse_measure_table(std::string_view text, std::string_view source)
{
    json doc = parse_json(text, source);
    if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("depth") || !doc.contains("values"))
        schema(source, "a measure table needs `alphabet`, `depth` and `values`");
    Alphabet alphabet = validated(source, [&] { return Alphabet(string_list(doc["alphabet"], source, "alphabet")); });
    if (!doc["depth"].is_number_unsigned())
        schema(source, "depth must be a nonnegative integer");
    ShiftMeasureTable table{alphabet, doc["depth"].get<std::size_t>(), {}};
    if (!doc["values"].is_object())
        schema(source, "values must be an object");
    for (const auto& [key, value] : doc["values"].items()) {
        Word w = validated(source, [&] { return alphabet.parse(key); });
        if (w.size() > table.depth)
            schema(source, "word '" + key + "' is longer than the depth");
        Rational r = json_rational(value, source, "value of '" + key + "'");
        if (r < 0)
            throw Error(ErrorKind::InvariantViolation, std::string(source) + ": negative value at '" + key + "'");
        table.values[w] = r;
    }
    return table;
}

std::string format_measure_table(const ShiftMeasureTable& table)
{
    json values = json::object();
    for (const auto& [w, v] : table.values)
        values[table.alphabet.format(w)] = to_string(v);
    json doc = {{"alphabet", table.alphabet.names()}, {"depth", table.depth}, {"values", values}};
    return doc.dump(2) + "\n";
}

FiltrationInput parse_filtration(std::string_view text, std::string_view source)
{
    json doc = parse_json(text, source);
    if (!doc.is_object() || !doc.contains("carrier") || !doc.contains("window") || !doc.contains("sets"))
        schema(source, "a filtration needs `carrier`, `window` and `sets`");
    std::vector<std::string> carrier = string_list(doc["carrier"], source, "carrier");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (!index.emplace(carrier[i], i).second)
            schema(source, "carrier element '" + carrier[i] + "' repeated");
    const json& window = doc["window"];
    if (!window.is_array() || window.size() != 2 || !window[0].is_number_integer() || !window[1].is_number_integer())
        schema(source, "window must be [lo, hi]");
    int lo = window[0].get<int>(), hi = window[1].get<int>();
    if (!doc["sets"].is_array() || static_cast<int>(doc["sets"].size()) != hi - lo + 1)
        schema(source, "sets must list F_lo .. F_hi");
    auto element = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
            schema(source, "'" + name + "' is not in the carrier");
        return it->second;
    };
    std::vector<Subset> sets;
    for (const json& s : doc["sets"]) {
        std::set<std::size_t> members;
        for (const std::string& name : string_list(s, source, "each set"))
            members.insert(element(name));
        sets.emplace_back(members.begin(), members.end());
    }
    FiltrationInput input{validated(source, [&] { return FiltrationModel(carrier, lo, sets); }), {}, {}};
    auto weight_map = [&](const json& obj, const std::string& where) {
        if (!obj.is_object())
            schema(source, where + " must be an object");
        std::vector<Rational> out(carrier.size(), 0);
        for (const auto& [key, value] : obj.items())
            out[element(key)] = json_rational(value, source, where + " at '" + key + "'");
        return out;
    };
    if (doc.contains("weights"))
        input.weights = weight_map(doc["weights"], "weights");
    if (doc.contains("chain")) {
        if (!doc["chain"].is_array())
            schema(source, "chain must be an array");
        NormalizedChain chain{lo, {}};
        for (const json& m : doc["chain"])
            chain.measures.push_back(weight_map(m, "chain entry"));
        validated(source, [&] {
            validate_chain(chain, input.model);
            return 0;
        });
        input.chain = std::move(chain);
    }
    return input;
}

} // namespace gshift::io
