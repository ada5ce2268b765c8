// language.cpp

#include "gshift/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gshift/error.hpp"
#include "gshift/monoid.hpp"

namespace gshift {

namespace {

bool has_factor(const Word& word, const Word& factor)
{
    return std::search(word.begin(), word.end(), factor.begin(), factor.end()) != word.end();
}

bool avoids(const Word& word, const std::vector<Word>& forbidden)
{
    return std::none_of(forbidden.begin(), forbidden.end(),
                        [&](const Word& f) { return has_factor(word, f); });
}

std::string join_name(const Alphabet& alphabet, const Word& word)
{
    if (word.empty())
        return "*";
    if (alphabet.single_char())
        return alphabet.format(word);
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0)
            out += '.';
        out += alphabet.name(word[i]);
    }
    return out;
}

} // namespace

SoficPresentation sft_to_presentation(const SftSpec& spec)
{
    std::size_t m = 1;
    for (const Word& f : spec.forbidden) {
        if (f.empty())
            throw Error(ErrorKind::InvariantViolation, "forbidden words must be nonempty");
        for (Symbol s : f)
            if (s >= spec.alphabet.size())
                throw Error(ErrorKind::InvariantViolation, "forbidden word uses a symbol outside the alphabet");
        m = std::max(m, f.size());
    }
    const std::size_t k = spec.alphabet.size();
    std::vector<Word> states;
    for (Word& w : all_words(k, m - 1))
        if (avoids(w, spec.forbidden))
            states.push_back(std::move(w));
    std::map<Word, State> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < states.size(); ++i) {
        index.emplace(states[i], static_cast<State>(i));
        names.push_back(join_name(spec.alphabet, states[i]));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (Symbol s = 0; s < k; ++s) {
            Word longer = states[i];
            longer.push_back(s);
            if (!avoids(longer, spec.forbidden))
                continue;
            Word target(longer.begin() + 1, longer.end());
            edges.push_back({static_cast<State>(i), s, index.at(target)});
        }
    }
    if (states.empty())
        throw Error(ErrorKind::EmptyLanguage, "no allowed words of length " + std::to_string(m - 1));
    return SoficPresentation::essential_part(spec.alphabet, std::move(names), edges);
}

SoficPresentation to_presentation(const SubshiftSpec& spec)
{
    if (const auto* sft = std::get_if<SftSpec>(&spec))
        return sft_to_presentation(*sft);
    return std::get<SoficPresentation>(spec);
}

std::vector<Word> language_words(const SoficPresentation& pres, std::size_t n)
{
    return readable_words(pres, pres.all_states(), n);
}

std::vector<Word> extension_set(const SoficPresentation& pres, const Word& a, std::size_t n,
                                Direction direction)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "extension length must be at least 1");
    if (!pres.accepts(a))
        throw Error(ErrorKind::NotAdmissible, "'" + pres.alphabet().format(a) + "' is not in the language");
    if (direction == Direction::Forward)
        return readable_words(pres, pres.image(pres.all_states(), a), n);
    std::vector<Word> out;
    for (Word& b : language_words(pres, n))
        if (pres.accepts(concat(b, a)))
            out.push_back(std::move(b));
    return out;
}

Word BlockPresentation::encode(const Word& w) const
{
    if (w.size() < block_length)
        throw Error(ErrorKind::TooShort, "word shorter than the block length");
    Word out;
    for (std::size_t i = 0; i + block_length <= w.size(); ++i) {
        Word block(w.begin() + static_cast<std::ptrdiff_t>(i),
                   w.begin() + static_cast<std::ptrdiff_t>(i + block_length));
        auto it = std::lower_bound(blocks.begin(), blocks.end(), block);
        if (it == blocks.end() || *it != block)
            throw Error(ErrorKind::NotAdmissible, "block not in the language");
        out.push_back(static_cast<Symbol>(it - blocks.begin()));
    }
    return out;
}

Word BlockPresentation::decode(const Word& coded) const
{
    Word out;
    for (Symbol s : coded)
        out.push_back(blocks.at(s).front());
    if (!coded.empty()) {
        const Word& last = blocks.at(coded.back());
        out.insert(out.end(), last.begin() + 1, last.end());
    }
    return out;
}

BlockPresentation higher_block(const SoficPresentation& pres, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "block length must be at least 1");
    const Alphabet& alpha = pres.alphabet();
    if (n == 1) {
        std::vector<Word> blocks;
        for (Symbol s = 0; s < alpha.size(); ++s)
            blocks.push_back({s});
        return {pres, blocks, 1};
    }
    std::vector<Word> blocks = language_words(pres, n);
    std::vector<std::string> symbol_names;
    for (const Word& b : blocks)
        symbol_names.push_back(join_name(alpha, b));
    Alphabet block_alpha(symbol_names);

    // states: (p, u) with u a word of length n-1 readable from p
    std::vector<std::pair<State, Word>> states;
    std::map<std::pair<State, Word>, State> index;
    std::vector<std::string> names;
    for (State p = 0; p < pres.num_states(); ++p) {
        for (Word& u : readable_words(pres, StateSet::singleton(p), n - 1)) {
            index.emplace(std::make_pair(p, u), static_cast<State>(states.size()));
            names.push_back(pres.state_name(p) + "|" + join_name(alpha, u));
            states.emplace_back(p, std::move(u));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& [p, u] = states[i];
        for (Symbol s = 0; s < alpha.size(); ++s) {
            Word block = u;
            block.push_back(s);
            if (pres.follow(p, block) == no_state)
                continue;
            State p2 = pres.next(p, u.front());
            Word u2(block.begin() + 1, block.end());
            auto b = std::lower_bound(blocks.begin(), blocks.end(), block);
            edges.push_back({static_cast<State>(i), static_cast<Symbol>(b - blocks.begin()),
                             index.at({p2, u2})});
        }
    }
    return {SoficPresentation::essential_part(block_alpha, std::move(names), edges), blocks, n};
}

std::optional<Word> language_difference(const SoficPresentation& a, const SoficPresentation& b)
{
    if (!(a.alphabet() == b.alphabet()))
        throw Error(ErrorKind::DomainMismatch, "presentations use different alphabets");
    using Pair = std::pair<StateSet, StateSet>;
    std::map<Pair, std::pair<Pair, Symbol>> parent;
    Pair start{a.all_states(), b.all_states()};
    parent.emplace(start, std::make_pair(start, 0));
    std::deque<Pair> queue{start};
    auto trace = [&](Pair node, Symbol last) {
        Word w{last};
        while (node != start) {
            const auto& [prev, sym] = parent.at(node);
            w.push_back(sym);
            node = prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    while (!queue.empty()) {
        Pair node = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            Pair next{a.image(node.first, s), b.image(node.second, s)};
            if (next.first.empty() != next.second.empty())
                return trace(node, s);
            if (next.first.empty())
                continue;
            if (parent.emplace(next, std::make_pair(node, s)).second)
                queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool same_language(const SoficPresentation& a, const SoficPresentation& b)
{
    return !language_difference(a, b).has_value();
}

EventuallyPeriodicPast normalize_past(const EventuallyPeriodicPast& past)
{
    Word cycle = past.cycle();
    for (std::size_t p = 1; p < cycle.size(); ++p) {
        if (cycle.size() % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < cycle.size() && periodic; ++i)
            periodic = cycle[i] == cycle[i - p];
        if (periodic) {
            cycle.resize(p);
            break;
        }
    }
    Word tail = past.tail();
    std::size_t drop = 0;
    // ...v v u0 u' with u0 = v0 regroups as ...(v1..v0)(v1..v0) u'
    while (drop < tail.size() && tail[drop] == cycle.front()) {
        std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        ++drop;
    }
    tail.erase(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(drop));
    return EventuallyPeriodicPast(std::move(cycle), std::move(tail));
}

bool past_admissible(const SoficPresentation& pres, const EventuallyPeriodicPast& past)
{
    for (Symbol s : past.cycle())
        if (s >= pres.alphabet().size())
            return false;
    for (Symbol s : past.tail())
        if (s >= pres.alphabet().size())
            return false;
    auto stable = stabilize_past(pres.num_states(), pres.letter_maps(), past);
    return !map_image(stable.map).empty();
}

void require_admissible(const SoficPresentation& pres, const EventuallyPeriodicPast& past)
{
    if (!past_admissible(pres, past))
        throw Error(ErrorKind::NotAdmissible,
                    "past " + format_past(pres.alphabet(), past) + " is not admissible");
}

std::vector<EventuallyPeriodicPast> enumerate_periodic_pasts(const SoficPresentation& pres,
                                                             std::size_t max_cycle, std::size_t max_tail)
{
    const std::size_t k = pres.alphabet().size();
    std::vector<EventuallyPeriodicPast> out;
    for (std::size_t len = 1; len <= max_cycle; ++len) {
        for (const Word& cycle : all_words(k, len)) {
            if (normalize_past(EventuallyPeriodicPast(cycle)).cycle().size() != len)
                continue;
            if (!past_admissible(pres, EventuallyPeriodicPast(cycle)))
                continue;
            for (std::size_t t = 0; t <= max_tail; ++t) {
                for (const Word& tail : all_words(k, t)) {
                    if (!tail.empty() && tail.front() == cycle.front())
                        continue;
                    EventuallyPeriodicPast past(cycle, tail);
                    if (past_admissible(pres, past))
                        out.push_back(std::move(past));
                }
            }
        }
    }
    return out;
}

} // namespace gshift
