// shannon.hpp -- omega sets, the left-limit family, property (D) and the graph G_D.

#ifndef GSHIFT_SHANNON_HPP
#define GSHIFT_SHANNON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/monoid.hpp"
#include "gshift/presentation.hpp"

namespace gshift {

/// Merges states with identical forward contexts (Moore refinement). A merged
/// state keeps the name of its lowest-index member.
SoficPresentation follower_separate(const SoficPresentation& pres);

/// The family A = { T_inf(x^-) } of left-limit state sets, with witnesses.
using StateSetFamily = std::vector<LimitImage>;

StateSetFamily limit_family(const SoficPresentation& pres);

/// Union of the collections C_0 = {Q}, C_(k+1) = { f_s(S) != {} } over
/// their limit cycle. Always contains limit_family(); kept for comparison.
std::vector<StateSet> limit_family_by_collections(const SoficPresentation& pres);

/// A collection of nonempty state sets, sorted and without repetition.
using Collection = std::vector<StateSet>;

/// { f_w(S) : S in c } with empty images dropped.
Collection collection_image(const SoficPresentation& pres, const Collection& c, const Word& w);

/// Words of length n readable from every member of `sets` (lexicographic).
/// An empty collection reads everything in the full Sigma^n.
std::vector<Word> jointly_readable(const SoficPresentation& pres, const Collection& sets, std::size_t n);

enum class OmegaMode { Omega, OmegaInfinity };

struct OmegaPastResult {
    std::vector<Word> words;
    /// Suffix depth K at which the left-reading data became periodic.
    std::size_t suffix_depth = 0;
    /// Largest m that had to be examined (omega_infinity mode; n otherwise).
    std::size_t stabilization = 0;
};

/// Certificate that sigma is forced after a·b.
struct DCertificate {
    Word b;
    Symbol sigma = 0;
    Word a;
};

struct DCounterexample {
    Word b;
    Symbol sigma = 0;
    /// Number of collections that can follow some left extension of b.
    std::size_t tracked_collections = 0;
};

struct PropertyDReport {
    bool holds = false;
    std::vector<DCertificate> certificates;
    std::optional<DCounterexample> counterexample;
    std::size_t collections = 0; ///< size of the reachable collection set R
    std::size_t z_states = 0;    ///< reachable states of the subset automaton over R
};

/// Presenting graph G_D at finite resolution.
struct GDGraph {
    SoficPresentation graph;
    /// Language of length `depth` readable from each vertex.
    std::vector<std::vector<Word>> vertex_languages;
    /// The state set of the input presentation behind each vertex.
    std::vector<StateSet> vertex_sets;
};

/**
 * Omega calculus on one presentation; caches the left-limit family. All
 * queries are exact.
 */
class OmegaCalculus {
public:
    explicit OmegaCalculus(SoficPresentation pres);

    const SoficPresentation& presentation() const noexcept { return pres_; }
    const StateSetFamily& family() const noexcept { return family_; }
    /// The family as a collection (C(empty word)).
    Collection base_collection() const;

    /// { f_a(S) : S in A } minus the empty set. Throws NotAdmissible.
    Collection after(const Word& a) const;

    /// omega^+_n(a). Throws NotAdmissible, InvalidArgument for n = 0.
    std::vector<Word> omega_plus(const Word& a, std::size_t n) const;
    OmegaPastResult omega_past(const EventuallyPeriodicPast& past, std::size_t n, OmegaMode mode) const;

    /// Collection reached from A after the suffix of `past` at its stabilized depth.
    Collection after_past(const EventuallyPeriodicPast& past, std::size_t* depth = nullptr) const;

    PropertyDReport check_property_D(std::size_t certificate_limit = 4096) const;
    bool has_property_D() const;

    /// Shortest (then lexicographic) a with |a| <= max_length and sigma in
    /// omega^+_1(ab), by enumeration.
    std::optional<Word> find_witness_bounded(const Word& b, Symbol sigma, std::size_t max_length) const;

    GDGraph build_GD(std::size_t depth) const;

    bool e_window_membership(const Word& a, std::size_t k) const;

private:
    struct Lattice;
    Lattice explore() const;

    SoficPresentation pres_;
    std::vector<PartialMap> letter_maps_;
    StateSetFamily family_;
};

std::vector<Word> omega_plus(const SoficPresentation& pres, const Word& a, std::size_t n);
OmegaPastResult omega_past(const SoficPresentation& pres, const EventuallyPeriodicPast& past, std::size_t n,
                           OmegaMode mode);
PropertyDReport check_property_D(const SoficPresentation& pres);
bool has_property_D(const SoficPresentation& pres);
GDGraph build_GD(const SoficPresentation& pres, std::size_t depth);
bool e_window_membership(const SoficPresentation& pres, const Word& a, std::size_t k);

/// "{A,B}" style rendering of a state set.
std::string format_state_set(const SoficPresentation& pres, const StateSet& set);

} // namespace gshift

#endif // GSHIFT_SHANNON_HPP
