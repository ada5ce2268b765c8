// gfunction.hpp -- g-functions carried by weighted Shannon graphs.

#ifndef GSHIFT_GFUNCTION_HPP
#define GSHIFT_GFUNCTION_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/presentation.hpp"
#include "gshift/rational.hpp"
#include "gshift/shannon.hpp"

namespace gshift {

/// Per-state weight rows indexed [state][symbol]; 0 where there is no edge.
using WeightRows = std::vector<std::vector<Rational>>;

/**
 * A presentation with one probability row per state. Construction checks
 * that weights sit on edges, are nonnegative, sum to exactly 1 per state,
 * and that the presentation has property (D).
 */
class GFunction {
public:
    GFunction(SoficPresentation pres, WeightRows weights);

    const SoficPresentation& presentation() const noexcept { return calc_->presentation(); }
    const OmegaCalculus& calculus() const noexcept { return *calc_; }
    const WeightRows& weights() const noexcept { return weights_; }
    const std::vector<Rational>& row(State q) const { return weights_.at(q); }
    const Rational& weight(State q, Symbol s) const { return weights_.at(q).at(s); }

    /// Distinct weight values over all edges, ascending.
    std::vector<Rational> weight_range() const;

private:
    std::shared_ptr<const OmegaCalculus> calc_;
    WeightRows weights_;
};

/// All outgoing edges of a state share the row's mass equally.
GFunction uniform(const SoficPresentation& pres);

struct ResolveResult {
    StateSet candidates;
    std::optional<std::vector<Rational>> agreed_weights;

    bool resolved() const noexcept { return agreed_weights.has_value(); }
};

/// Candidates after a finite past are f_w(Q); after a periodic past they are
/// T_inf(x^-). Throws NotAdmissible.
ResolveResult resolve(const GFunction& g, const Word& past);
ResolveResult resolve(const GFunction& g, const EventuallyPeriodicPast& past);
/// Resolution of an explicit candidate set.
ResolveResult resolve_candidates(const GFunction& g, const StateSet& candidates);

/// g(past, sigma). Throws Undefined when the past does not resolve.
Rational g_eval(const GFunction& g, const Word& past, Symbol sigma);
Rational g_eval(const GFunction& g, const EventuallyPeriodicPast& past, Symbol sigma);

/// Product of g-values along `a` after the past; 0 once a factor vanishes
/// or `a` leaves the language. Throws Undefined on an unresolved step.
Rational mu_g_cylinder(const GFunction& g, const Word& past, const Word& a);
Rational mu_g_cylinder(const GFunction& g, const EventuallyPeriodicPast& past, const Word& a);

/// Cylinder values mu^(g)(past)(C(a)) for every a in Gamma^+_k(past), k <= depth.
struct CylinderTable {
    std::size_t depth = 0;
    std::map<Word, Rational> values;
};

CylinderTable cylinder_table(const GFunction& g, const EventuallyPeriodicPast& past, std::size_t depth);
CylinderTable cylinder_table(const GFunction& g, const Word& past, std::size_t depth);

/**
 * Finite check of membership of the point past.window in E(g): at every
 * position inside the window the past resolves, the next symbol has
 * positive weight, and every admissible extension of length <= depth
 * resolves as well.
 */
bool eg_membership(const GFunction& g, const EventuallyPeriodicPast& past, const Word& window,
                   std::size_t depth);

} // namespace gshift

#endif // GSHIFT_GFUNCTION_HPP
