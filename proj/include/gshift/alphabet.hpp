// alphabet.hpp -- alphabets, words over symbol indices, eventually periodic pasts.

#ifndef GSHIFT_ALPHABET_HPP
#define GSHIFT_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gshift {

using Symbol = std::uint32_t;

/// A finite word stored as symbol indices. Lexicographic order on the
/// indices is the canonical order used in every emitted set or table.
using Word = std::vector<Symbol>;

/**
 * A closed, ordered alphabet. Symbol identifiers are arbitrary
 * whitespace-free strings; a symbol's index is its position in the list.
 */
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(Symbol s) const { return symbols_.at(s); }
    const std::vector<std::string>& names() const noexcept { return symbols_; }

    std::optional<Symbol> find(std::string_view name) const;
    /// Like find() but throws Error(InvalidArgument) for unknown symbols.
    Symbol index(std::string_view name) const;

    /// True when every symbol is a single character; words are then
    /// written without separators ("0110"), otherwise space separated.
    bool single_char() const noexcept { return single_char_; }

    std::string format(const Word& word) const;
    Word parse(std::string_view text) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    bool single_char_ = true;
};

/// Left-infinite ray ...cycle·cycle·tail, with the last symbol of `tail`
/// (or of `cycle` when the tail is empty) sitting at coordinate 0.
class EventuallyPeriodicPast {
public:
    EventuallyPeriodicPast(Word cycle, Word tail = {});

    const Word& cycle() const noexcept { return cycle_; }
    const Word& tail() const noexcept { return tail_; }

    /// Symbol at coordinate -k (k = 0 is the most recent symbol).
    Symbol at(std::size_t k) const;
    /// The block x_(-length, 0].
    Word suffix(std::size_t length) const;
    /// The past followed by `word`.
    EventuallyPeriodicPast extended(const Word& word) const;

    bool operator==(const EventuallyPeriodicPast&) const = default;

private:
    Word cycle_;
    Word tail_;
};

std::string format_past(const Alphabet& alphabet, const EventuallyPeriodicPast& past);

Word concat(const Word& a, const Word& b);

/// All words of the given length over `size` symbols, lexicographic.
std::vector<Word> all_words(std::size_t size, std::size_t length);

} // namespace gshift

#endif // GSHIFT_ALPHABET_HPP
