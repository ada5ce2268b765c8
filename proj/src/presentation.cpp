// presentation.cpp

#include "gshift/presentation.hpp"

#include <algorithm>
#include <set>

#include "gshift/error.hpp"

namespace gshift {

StateSet::StateSet(std::vector<State> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StateSet::contains(State s) const
{
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool StateSet::is_subset_of(const StateSet& other) const
{
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SoficPresentation::SoficPresentation(Alphabet alphabet, std::vector<std::string> state_names,
                                     const std::vector<Edge>& edges)
    : alphabet_(std::move(alphabet)), names_(std::move(state_names))
{
    const std::size_t n = names_.size();
    const std::size_t k = alphabet_.size();
    if (n == 0)
        throw Error(ErrorKind::InvariantViolation, "presentation has no states");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n)
        throw Error(ErrorKind::InvariantViolation, "duplicate state names");
    next_.assign(n * k, no_state);
    std::vector<bool> has_in(n, false), has_out(n, false);
    for (const Edge& e : edges) {
        if (e.source >= n || e.target >= n || e.symbol >= k)
            throw Error(ErrorKind::InvariantViolation, "edge refers to unknown state or symbol");
        State& slot = next_[e.source * k + e.symbol];
        if (slot != no_state)
            throw Error(ErrorKind::InvariantViolation,
                        "not right-resolving: state '" + names_[e.source] + "' has two edges labeled '"
                            + alphabet_.name(e.symbol) + "'");
        slot = e.target;
        has_out[e.source] = true;
        has_in[e.target] = true;
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!has_in[q] || !has_out[q])
            throw Error(ErrorKind::InvariantViolation,
                        "not essential: state '" + names_[q] + "' lacks an "
                            + (has_in[q] ? "outgoing" : "incoming") + " edge");
    }
}

SoficPresentation SoficPresentation::essential_part(Alphabet alphabet, std::vector<std::string> state_names,
                                                    const std::vector<Edge>& edges)
{
    const std::size_t n = state_names.size();
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> has_in(n, false), has_out(n, false);
        for (const Edge& e : edges) {
            if (alive[e.source] && alive[e.target]) {
                has_out[e.source] = true;
                has_in[e.target] = true;
            }
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (alive[q] && (!has_in[q] || !has_out[q])) {
                alive[q] = false;
                changed = true;
            }
        }
    }
    std::vector<State> renumber(n, no_state);
    std::vector<std::string> names;
    for (std::size_t q = 0; q < n; ++q) {
        if (alive[q]) {
            renumber[q] = static_cast<State>(names.size());
            names.push_back(state_names[q]);
        }
    }
    if (names.empty())
        throw Error(ErrorKind::EmptyLanguage, "no bi-infinite paths remain");
    std::vector<Edge> kept;
    for (const Edge& e : edges)
        if (alive[e.source] && alive[e.target])
            kept.push_back({renumber[e.source], e.symbol, renumber[e.target]});
    return SoficPresentation(std::move(alphabet), std::move(names), kept);
}

std::optional<State> SoficPresentation::find_state(const std::string& name) const
{
    for (std::size_t q = 0; q < names_.size(); ++q)
        if (names_[q] == name)
            return static_cast<State>(q);
    return std::nullopt;
}

State SoficPresentation::follow(State q, const Word& word) const
{
    for (Symbol s : word) {
        if (q == no_state)
            return no_state;
        q = next(q, s);
    }
    return q;
}

StateSet SoficPresentation::all_states() const
{
    std::vector<State> all(num_states());
    for (std::size_t q = 0; q < all.size(); ++q)
        all[q] = static_cast<State>(q);
    return StateSet(std::move(all));
}

StateSet SoficPresentation::image(const StateSet& states, Symbol s) const
{
    std::vector<State> out;
    for (State q : states)
        if (State t = next(q, s); t != no_state)
            out.push_back(t);
    return StateSet(std::move(out));
}

StateSet SoficPresentation::image(const StateSet& states, const Word& word) const
{
    StateSet current = states;
    for (Symbol s : word) {
        if (current.empty())
            break;
        current = image(current, s);
    }
    return current;
}

bool SoficPresentation::accepts(const Word& word) const
{
    return !image(all_states(), word).empty();
}

std::vector<Edge> SoficPresentation::edges() const
{
    std::vector<Edge> out;
    const std::size_t k = alphabet_.size();
    for (std::size_t q = 0; q < num_states(); ++q)
        for (std::size_t s = 0; s < k; ++s)
            if (State t = next_[q * k + s]; t != no_state)
                out.push_back({static_cast<State>(q), static_cast<Symbol>(s), t});
    return out;
}

std::vector<std::vector<State>> SoficPresentation::letter_maps() const
{
    const std::size_t k = alphabet_.size();
    std::vector<std::vector<State>> maps(k, std::vector<State>(num_states(), no_state));
    for (std::size_t q = 0; q < num_states(); ++q)
        for (std::size_t s = 0; s < k; ++s)
            maps[s][q] = next_[q * k + s];
    return maps;
}

std::vector<Word> readable_words(const SoficPresentation& pres, const StateSet& from, std::size_t n)
{
    std::vector<Word> out;
    Word word;
    // depth-first in lexicographic order keeps the output sorted
    auto visit = [&](auto&& self, const StateSet& current) -> void {
        if (word.size() == n) {
            out.push_back(word);
            return;
        }
        for (Symbol s = 0; s < pres.alphabet().size(); ++s) {
            StateSet next = pres.image(current, s);
            if (next.empty())
                continue;
            word.push_back(s);
            self(self, next);
            word.pop_back();
        }
    };
    if (!from.empty())
        visit(visit, from);
    return out;
}

} // namespace gshift
