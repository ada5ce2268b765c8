// measure_graph.hpp -- graph-carried measures on one-sided sequences and the
// Shannon graph they span under conditioning.

#ifndef GSHIFT_MEASURE_GRAPH_HPP
#define GSHIFT_MEASURE_GRAPH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gshift/gfunction.hpp"
#include "gshift/monoid.hpp"

namespace gshift {

/// A weighted graph carrying measures, with a basis of the span of the
/// vectors M_a 1 (M_a the weighted transfer matrix of the word a). Two
/// initial vectors give the same measure iff they agree on that basis.
class MeasureCarrier {
public:
    explicit MeasureCarrier(GFunction g);

    const GFunction& gfunction() const noexcept { return g_; }
    const Alphabet& alphabet() const noexcept { return g_.presentation().alphabet(); }
    std::size_t num_states() const noexcept { return g_.presentation().num_states(); }
    std::vector<Rational> signature(const std::vector<Rational>& initial) const;

private:
    GFunction g_;
    std::vector<std::vector<Rational>> basis_;
};

/// mu(C(a)) = sum_V initial(V) * product of weights along the a-path from V.
class MeasureVertex {
public:
    MeasureVertex(std::shared_ptr<const MeasureCarrier> carrier, std::vector<Rational> initial);

    /// Point mass at one state of the carrier.
    static MeasureVertex delta(std::shared_ptr<const MeasureCarrier> carrier, State q);

    const std::shared_ptr<const MeasureCarrier>& carrier() const noexcept { return carrier_; }
    const std::vector<Rational>& initial() const noexcept { return initial_; }
    const Alphabet& alphabet() const noexcept { return carrier_->alphabet(); }

    /// Equality of measures (not of representations).
    bool operator==(const MeasureVertex& other) const;

private:
    std::shared_ptr<const MeasureCarrier> carrier_;
    std::vector<Rational> initial_;
};

std::shared_ptr<const MeasureCarrier> make_carrier(GFunction g);

Rational cylinder(const MeasureVertex& mu, const Word& a);
/// The conditional measure given C(sigma). Throws ZeroMass.
MeasureVertex tau_measure(const MeasureVertex& mu, Symbol sigma);
MeasureVertex tau_measure(const MeasureVertex& mu, const Word& w);
/// max over a in Sigma^k of |mu(C(a)) - nu(C(a))|.
Rational dk_distance(const MeasureVertex& mu, const MeasureVertex& nu, std::size_t k);

/// A finite set of measures; members are pairwise distinct.
class VertexSet {
public:
    VertexSet(std::vector<MeasureVertex> members, std::vector<std::string> names);

    std::size_t size() const noexcept { return members_.size(); }
    const MeasureVertex& member(std::size_t i) const { return members_.at(i); }
    const std::vector<MeasureVertex>& members() const noexcept { return members_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Alphabet& alphabet() const { return members_.front().alphabet(); }

    std::optional<std::size_t> find(const MeasureVertex& mu) const;

    /// Index of tau(s) member(i): no_state if member(i)(C(s)) = 0, and
    /// `outside` if the conditional measure is not a member.
    State tau_index(std::size_t i, Symbol s) const { return tau_[i][s]; }
    static constexpr State outside = no_state - 1;

    bool transition_complete() const;
    /// Per-symbol partial maps on member indices. Throws NotTransitionComplete.
    std::vector<PartialMap> letter_maps() const;

    /// Same measures, in any order and under any names.
    bool same_measures(const VertexSet& other) const;

private:
    std::vector<MeasureVertex> members_;
    std::vector<std::string> names_;
    std::vector<std::vector<State>> tau_;
};

/// The members with tau edges of positive mass, as a labeled graph. Throws
/// NotTransitionComplete, or InvariantViolation if some member has no
/// incoming edge.
SoficPresentation vertex_graph(const VertexSet& set);

/// Members nu with d_k(nu, mu) <= eps for some mu in the limit set
/// M(x^-); the limit set itself is exact for finite transition-complete sets.
/// Returns member indices in increasing order. Throws NotAdmissible,
/// NotTransitionComplete.
std::vector<std::size_t> m_of_past(const VertexSet& set, const EventuallyPeriodicPast& past, std::size_t k,
                                   const Rational& eps);

/// Members mu with M(y^-) = {mu} for some eventually periodic y^-, with y^-.
std::vector<std::pair<std::size_t, EventuallyPeriodicPast>> anchors(const VertexSet& set);

inline const Rational default_epsilon{1, 1024};
inline constexpr std::size_t default_resolution = 4;

struct ConditionIWitness {
    std::size_t member = 0;
    std::size_t source = 0;
    Symbol alpha = 0;
};

struct PastSample {
    EventuallyPeriodicPast past;
    std::vector<std::size_t> limit_members;
    /// Number of distinct marginals on Sigma^n, n = 1..k.
    std::vector<std::size_t> marginal_counts;
    bool in_d_infinity = false;
    /// A past in D_infinity ending in the same k symbols.
    std::optional<EventuallyPeriodicPast> ii_witness;
    /// For each limit member: a D_infinity past ending in the same k
    /// symbols whose measure lies within eps of it.
    std::vector<std::pair<std::size_t, std::optional<EventuallyPeriodicPast>>> iii_witnesses;
};

struct ContractivityReport {
    std::size_t k = default_resolution;
    Rational epsilon = default_epsilon;
    bool cond_i = false;
    std::vector<ConditionIWitness> cond_i_witnesses;
    std::vector<std::size_t> cond_i_failures;
    std::vector<std::pair<std::size_t, EventuallyPeriodicPast>> anchors;
    std::vector<PastSample> samples;
    bool cond_ii = false;
    bool cond_iii = false;

    bool contractive() const noexcept { return cond_i && cond_ii && cond_iii; }
};

/// Admissible pasts of the vertex graph with cycles and tails of length <= 2.
std::vector<EventuallyPeriodicPast> default_pasts(const VertexSet& set);

/// Throws NotTransitionComplete.
ContractivityReport check_residually_contractive(const VertexSet& set, std::size_t k, const Rational& eps,
                                                 const std::vector<EventuallyPeriodicPast>& pasts);
ContractivityReport check_residually_contractive(const VertexSet& set);

/// g on the vertex graph: weights are first-symbol marginals. Throws
/// NotContractive unless the default check passes.
GFunction g_from_M(const VertexSet& set);

/// The distinct future laws started at the states of g (closed under tau).
VertexSet M_from_g(const GFunction& g);

/// First admissible word (by length, then lexicographic) of length <= depth
/// after which g1 and g2 differ in resolution status or in the agreed row.
/// Throws DomainMismatch when the languages differ.
std::optional<Word> compare_g_functions(const GFunction& g1, const GFunction& g2, std::size_t depth);

} // namespace gshift

#endif // GSHIFT_MEASURE_GRAPH_HPP
