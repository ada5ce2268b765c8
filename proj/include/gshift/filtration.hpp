// filtration.hpp -- decreasing filtrations of a finite carrier, the sigma-finite
// weights they support, and the normalized chains that classify those weights
// up to scale.

#ifndef GSHIFT_FILTRATION_HPP
#define GSHIFT_FILTRATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gshift/gfunction.hpp"
#include "gshift/rational.hpp"

namespace gshift {

/// Sorted, duplicate-free carrier indices.
using Subset = std::vector<std::size_t>;

/// F_lo ⊇ F_(lo+1) ⊇ ... ⊇ F_hi with lo <= 0 <= hi and F_lo the whole carrier.
class FiltrationModel {
public:
    /// sets[j] is F_(lo+j). Throws InvariantViolation.
    FiltrationModel(std::vector<std::string> carrier, int lo, std::vector<Subset> sets);

    std::size_t size() const noexcept { return carrier_.size(); }
    const std::vector<std::string>& carrier() const noexcept { return carrier_; }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(sets_.size()) - 1; }
    /// F_i for lo <= i <= hi. Throws InvalidArgument outside the window.
    const Subset& set(int i) const;
    bool contains(int i, std::size_t x) const;

    /// Keeps F_(jL) for every j with jL in the window; F_(jL) becomes F'_j.
    /// Throws InvariantViolation if the lowest kept set is not the carrier.
    FiltrationModel subsample(int stride) const;
    /// Inserts s strictly between F_i and F_(i+1) (F_i ⊇ s ⊇ F_(i+1)); F_0 keeps
    /// its index. Throws InvariantViolation.
    FiltrationModel interleave(int i, Subset s) const;

    bool operator==(const FiltrationModel&) const = default;

private:
    std::vector<std::string> carrier_;
    int lo_ = 0;
    std::vector<Subset> sets_;
};

/// Nonnegative weight per carrier element.
using SigmaFiniteWeights = std::vector<Rational>;

/// measures[j] is the probability vector mu_(lo+j), zero off F_(lo+j).
struct NormalizedChain {
    int lo = 0;
    std::vector<std::vector<Rational>> measures;

    int hi() const noexcept { return lo + static_cast<int>(measures.size()) - 1; }
    const std::vector<Rational>& at(int i) const { return measures.at(static_cast<std::size_t>(i - lo)); }
    bool operator==(const NormalizedChain&) const = default;
};

Rational mass(const std::vector<Rational>& weights, const Subset& s);

/// (mu restricted to F_i / mu(F_i)) over the window. Throws ZeroMass,
/// InvariantViolation on a negative weight or a size mismatch.
NormalizedChain eta(const SigmaFiniteWeights& mu, const FiltrationModel& model);

/// Throws InvariantViolation naming the first broken chain condition.
void validate_chain(const NormalizedChain& chain, const FiltrationModel& model);

/// The representative with mu restricted to F_0 equal to mu_0; shell
/// F_(-k) - F_(-k+1) gets mu_(-k) / mu_(-k)(F_0). Throws ZeroMass,
/// InvariantViolation.
SigmaFiniteWeights eta_inverse(const NormalizedChain& chain, const FiltrationModel& model);

/// mu' = alpha mu for some alpha > 0 (two zero vectors are equivalent).
bool scale_equivalent(const SigmaFiniteWeights& mu, const SigmaFiniteWeights& nu);

/// The chain restricted to the indices kept by model.subsample(stride).
NormalizedChain subsample(const NormalizedChain& chain, int stride);

/// Filtration of the length-|y| continuations after `past`: F_i holds the
/// words that begin with y_0..y_(i-1), window [0, |y|].
FiltrationModel continuation_filtration(const GFunction& g, const Word& past, const Word& y);

/// The conditional laws mu_g(. | past, y_0..y_(i-1)) on that filtration.
/// Throws ZeroMass when y has zero probability, Undefined when unresolved.
NormalizedChain continuation_chain(const GFunction& g, const Word& past, const Word& y);

} // namespace gshift

#endif // GSHIFT_FILTRATION_HPP
