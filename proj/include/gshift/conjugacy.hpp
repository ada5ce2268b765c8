// conjugacy.hpp -- bipartite codings and the transport of g-functions and g-measures.
//
// Conventions: psi(s) = (d, dt) with d in Delta, dt in Delta~; psit(st) = (dt, d).
// The coded point is phi(x)_i = psit^-1(dt(x_(i-1)), d(x_i)), so a word w of
// length n codes to the word of length n-1 with letters psit^-1(dt(w_i), d(w_(i+1))).

#ifndef GSHIFT_CONJUGACY_HPP
#define GSHIFT_CONJUGACY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gshift/gfunction.hpp"
#include "gshift/gmeasure.hpp"

namespace gshift {

/// A specification pair between a domain subshift over Sigma and the coded
/// subshift over Sigma~. Validated at construction.
class BipartiteCoding {
public:
    /// psi[s] = (d, dt) as indices into delta / delta_tilde; psit[st] = (dt, d).
    BipartiteCoding(SoficPresentation domain, Alphabet delta, Alphabet delta_tilde,
                    std::vector<std::pair<Symbol, Symbol>> psi, Alphabet sigma_tilde,
                    std::vector<std::pair<Symbol, Symbol>> psit);

    const SoficPresentation& domain() const noexcept { return domain_; }
    /// Presentation of the coded subshift built on domain().
    const SoficPresentation& codomain() const noexcept { return codomain_; }
    const Alphabet& sigma() const noexcept { return domain_.alphabet(); }
    const Alphabet& sigma_tilde() const noexcept { return sigma_tilde_; }
    const Alphabet& delta() const noexcept { return delta_; }
    const Alphabet& delta_tilde() const noexcept { return delta_tilde_; }
    const std::vector<std::pair<Symbol, Symbol>>& psi() const noexcept { return psi_; }
    const std::vector<std::pair<Symbol, Symbol>>& psit() const noexcept { return psit_; }

    /// psi^-1(d, dt); empty when undefined.
    std::optional<Symbol> psi_inverse(Symbol d, Symbol dt) const;
    std::optional<Symbol> psit_inverse(Symbol dt, Symbol d) const;

    /// The coding in the opposite direction (domain = codomain()).
    BipartiteCoding reversed() const;

private:
    SoficPresentation domain_;
    Alphabet delta_, delta_tilde_;
    std::vector<std::pair<Symbol, Symbol>> psi_;
    Alphabet sigma_tilde_;
    std::vector<std::pair<Symbol, Symbol>> psit_;
    SoficPresentation codomain_;
};

/// The coding with Delta = Sigma, Delta~ = barred copies, psi(s) = (s, s~).
/// The coded alphabet is the set of admissible 2-blocks, named by the block.
BipartiteCoding doubling_coding(const SoficPresentation& pres);

/// Coded word of length |w|-1. Throws TooShort, NotAdmissible.
Word apply_coding(const BipartiteCoding& coding, const Word& w);
/// The inverse 2-block map: letter i is psi^-1(d(wt_i), dt(wt_(i+1))).
Word apply_inverse_coding(const BipartiteCoding& coding, const Word& wt);

/// The presentation of the coded subshift on top of `pres`: states (q, d)
/// for d the first half of some label leaving q.
SoficPresentation coded_presentation(const BipartiteCoding& coding, const SoficPresentation& pres,
                                     std::vector<std::pair<State, Symbol>>* state_data = nullptr);

/// Image of g under the coding. Throws DomainMismatch, Unresolvable.
GFunction transport_g(const BipartiteCoding& coding, const GFunction& g);

struct TransportViolation {
    State vertex = 0;
    Symbol sigma_tilde = 0;
    Rational lhs, rhs;
};

/// Replays the transport identity at every vertex of gt (which must come
/// from transport_g(coding, g)); returns the vertices where it fails.
std::vector<TransportViolation> check_transport_identity(const BipartiteCoding& coding, const GFunction& g,
                                                       const GFunction& gt);

/// Push-forward of a table: value(at) = sum of value(a) over preimages a.
/// Depth drops by one. Throws DepthTooSmall for depth < 2.
ShiftMeasureTable transport_measure(const BipartiteCoding& coding, const ShiftMeasureTable& table);

struct RangeInvariantReport {
    std::vector<Rational> range;
    std::size_t depth = 0;
    /// Distinct future cylinder tables of the vertices, to `depth`.
    std::size_t future_tables = 0;
};

RangeInvariantReport range_invariants(const GFunction& g, std::size_t depth = 6);

/// Codings applied in order; each codomain language must match the next domain.
using ConjugacyChain = std::vector<BipartiteCoding>;

GFunction transport_chain(const ConjugacyChain& chain, const GFunction& g);
ConjugacyChain reversed_chain(const ConjugacyChain& chain);

} // namespace gshift

#endif // GSHIFT_CONJUGACY_HPP
