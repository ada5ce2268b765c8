// alphabet.cpp

#include "gshift/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gshift/error.hpp"

namespace gshift {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols))
{
    if (symbols_.empty())
        throw Error(ErrorKind::InvariantViolation, "alphabet must be nonempty");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty())
            throw Error(ErrorKind::InvariantViolation, "empty symbol name");
        if (std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }))
            throw Error(ErrorKind::InvariantViolation, "symbol '" + s + "' contains whitespace");
        if (!seen.insert(s).second)
            throw Error(ErrorKind::InvariantViolation, "duplicate symbol '" + s + "'");
        if (s.size() != 1)
            single_char_ = false;
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name)
            return static_cast<Symbol>(i);
    return std::nullopt;
}

Symbol Alphabet::index(std::string_view name) const
{
    if (auto s = find(name))
        return *s;
    throw Error(ErrorKind::InvalidArgument, "unknown symbol '" + std::string(name) + "'");
}

std::string Alphabet::format(const Word& word) const
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!single_char_ && i > 0)
            out += ' ';
        out += name(word[i]);
    }
    return out;
}

Word Alphabet::parse(std::string_view text) const
{
    Word word;
    if (single_char_) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            word.push_back(index(std::string_view(&c, 1)));
        }
        return word;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',')
            ++j;
        if (j > i)
            word.push_back(index(text.substr(i, j - i)));
        i = j;
    }
    return word;
}

EventuallyPeriodicPast::EventuallyPeriodicPast(Word cycle, Word tail)
    : cycle_(std::move(cycle)), tail_(std::move(tail))
{
    if (cycle_.empty())
        throw Error(ErrorKind::InvalidArgument, "eventually periodic past needs a nonempty cycle");
}

Symbol EventuallyPeriodicPast::at(std::size_t k) const
{
    if (k < tail_.size())
        return tail_[tail_.size() - 1 - k];
    std::size_t r = (k - tail_.size()) % cycle_.size();
    return cycle_[cycle_.size() - 1 - r];
}

Word EventuallyPeriodicPast::suffix(std::size_t length) const
{
    Word out(length);
    for (std::size_t k = 0; k < length; ++k)
        out[length - 1 - k] = at(k);
    return out;
}

EventuallyPeriodicPast EventuallyPeriodicPast::extended(const Word& word) const
{
    return EventuallyPeriodicPast(cycle_, concat(tail_, word));
}

std::string format_past(const Alphabet& alphabet, const EventuallyPeriodicPast& past)
{
    std::string out = "(" + alphabet.format(past.cycle()) + ")^inf";
    if (!past.tail().empty())
        out += " " + alphabet.format(past.tail());
    return out;
}

Word concat(const Word& a, const Word& b)
{
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Word> all_words(std::size_t size, std::size_t length)
{
    std::vector<Word> out;
    Word w(length, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (++w[i] < size)
                break;
            w[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (length == 0)
            return out;
    }
}

} // namespace gshift
