// language.hpp -- subshift specifications, languages, extension sets, higher block recoding.

#ifndef GSHIFT_LANGUAGE_HPP
#define GSHIFT_LANGUAGE_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/presentation.hpp"

namespace gshift {

/// Shift of finite type given by forbidden words.
struct SftSpec {
    Alphabet alphabet;
    std::vector<Word> forbidden;
};

using SubshiftSpec = std::variant<SftSpec, SoficPresentation>;

/**
 * Memory-graph presentation of an SFT: states are the allowed words of
 * length m-1 (m = longest forbidden word), edges append a symbol and drop the
 * oldest one. The empty-word state is named "*". Trimmed to its essential part.
 */
SoficPresentation sft_to_presentation(const SftSpec& spec);
/// Sofic specs pass through unchanged.
SoficPresentation to_presentation(const SubshiftSpec& spec);

/// Length-n label sequences of paths, lexicographic.
std::vector<Word> language_words(const SoficPresentation& pres, std::size_t n);

enum class Direction { Forward, Backward };

/// Gamma^+_n(a) (forward) or Gamma^-_n(a) (backward). Throws NotAdmissible.
std::vector<Word> extension_set(const SoficPresentation& pres, const Word& a, std::size_t n,
                                Direction direction);

/// N-block recoding together with the block list (symbol i of the new
/// alphabet is blocks[i]).
struct BlockPresentation {
    SoficPresentation pres;
    std::vector<Word> blocks;
    std::size_t block_length = 1;

    /// Sliding N-block image of w (length |w|-N+1). Throws TooShort.
    Word encode(const Word& w) const;
    /// Inverse of encode on images of admissible words.
    Word decode(const Word& coded) const;
};

BlockPresentation higher_block(const SoficPresentation& pres, std::size_t n);

/// A shortest, then lexicographically least, word in exactly one of the two
/// languages; nullopt when the languages agree. Alphabets must coincide.
std::optional<Word> language_difference(const SoficPresentation& a, const SoficPresentation& b);
bool same_language(const SoficPresentation& a, const SoficPresentation& b);

/// Rewrites a past into its shortest-tail form with a primitive cycle.
EventuallyPeriodicPast normalize_past(const EventuallyPeriodicPast& past);

/// True when the left-infinite ray labels a path.
bool past_admissible(const SoficPresentation& pres, const EventuallyPeriodicPast& past);

/// Throws NotAdmissible naming the past unless past_admissible().
void require_admissible(const SoficPresentation& pres, const EventuallyPeriodicPast& past);

/// Admissible pasts with primitive cycle length <= max_cycle and tail length
/// <= max_tail, in normalized form, without repetitions.
std::vector<EventuallyPeriodicPast> enumerate_periodic_pasts(const SoficPresentation& pres,
                                                             std::size_t max_cycle, std::size_t max_tail);

} // namespace gshift

#endif // GSHIFT_LANGUAGE_HPP
