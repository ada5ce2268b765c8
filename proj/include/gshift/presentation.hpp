// presentation.hpp -- right-resolving labeled graphs (Shannon graphs) and state sets.

#ifndef GSHIFT_PRESENTATION_HPP
#define GSHIFT_PRESENTATION_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gshift/alphabet.hpp"

namespace gshift {

using State = std::uint32_t;
inline constexpr State no_state = std::numeric_limits<State>::max();

/// A sorted set of states of one presentation.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::vector<State> members);

    static StateSet singleton(State s) { return StateSet(std::vector<State>{s}); }

    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(State s) const;
    bool is_subset_of(const StateSet& other) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<State>& members() const noexcept { return members_; }

    auto operator<=>(const StateSet&) const = default;

private:
    std::vector<State> members_;
};

struct Edge {
    State source;
    Symbol symbol;
    State target;
    auto operator<=>(const Edge&) const = default;
};

/**
 * Finite right-resolving labeled graph: for every state and symbol there
 * is at most one outgoing edge. The constructor enforces essentiality
 * (every state has an incoming and an outgoing edge); use
 * essential_part() to trim an arbitrary edge list first.
 */
class SoficPresentation {
public:
    SoficPresentation(Alphabet alphabet, std::vector<std::string> state_names,
                      const std::vector<Edge>& edges);

    /// Trims stranded states until the remaining graph is essential.
    /// Throws Error(EmptyLanguage) if nothing remains.
    static SoficPresentation essential_part(Alphabet alphabet,
                                            std::vector<std::string> state_names,
                                            const std::vector<Edge>& edges);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    const std::string& state_name(State q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const noexcept { return names_; }
    std::optional<State> find_state(const std::string& name) const;

    /// Target of the edge leaving `q` labeled `s`, or no_state.
    State next(State q, Symbol s) const { return next_[q * alphabet_.size() + s]; }
    /// End state of the path from `q` labeled `word`, or no_state.
    State follow(State q, const Word& word) const;

    StateSet all_states() const;
    /// f_s(S): end states of s-edges leaving S.
    StateSet image(const StateSet& states, Symbol s) const;
    StateSet image(const StateSet& states, const Word& word) const;

    /// True when `word` labels some path.
    bool accepts(const Word& word) const;
    std::vector<Edge> edges() const;

    /// The partial map q -> next(q, s), one per symbol.
    std::vector<std::vector<State>> letter_maps() const;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<State> next_;
};

/// Label sequences of length `n` readable from some state of `from`.
std::vector<Word> readable_words(const SoficPresentation& pres, const StateSet& from, std::size_t n);

} // namespace gshift

#endif // GSHIFT_PRESENTATION_HPP
