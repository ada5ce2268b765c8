// gfunction.cpp

#include "gshift/gfunction.hpp"

#include <set>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

GFunction::GFunction(SoficPresentation pres, WeightRows weights)
    : calc_(std::make_shared<const OmegaCalculus>(std::move(pres))), weights_(std::move(weights))
{
    const SoficPresentation& p = calc_->presentation();
    const std::size_t k = p.alphabet().size();
    if (weights_.size() != p.num_states())
        throw Error(ErrorKind::InvariantViolation, "one weight row per state is required");
    for (State q = 0; q < p.num_states(); ++q) {
        if (weights_[q].size() != k)
            throw Error(ErrorKind::InvariantViolation, "weight row of '" + p.state_name(q) + "' has wrong length");
        Rational sum = 0;
        for (Symbol s = 0; s < k; ++s) {
            const Rational& w = weights_[q][s];
            if (w < 0)
                throw Error(ErrorKind::InvariantViolation,
                            "negative weight at state '" + p.state_name(q) + "'");
            if (w != 0 && p.next(q, s) == no_state)
                throw Error(ErrorKind::InvariantViolation, "weight on missing edge '" + p.state_name(q) + "' -"
                                                               + p.alphabet().name(s) + "->");
            sum += w;
        }
        if (sum != 1)
            throw Error(ErrorKind::InvariantViolation,
                        "weights at state '" + p.state_name(q) + "' sum to " + to_string(sum) + ", not 1");
    }
    if (!calc_->has_property_D())
        throw Error(ErrorKind::PropertyDFailed, "a g-function needs a presentation with property (D)");
}

std::vector<Rational> GFunction::weight_range() const
{
    std::set<Rational> values;
    for (const Edge& e : presentation().edges())
        values.insert(weights_[e.source][e.symbol]);
    return {values.begin(), values.end()};
}

GFunction uniform(const SoficPresentation& pres)
{
    WeightRows rows(pres.num_states(), std::vector<Rational>(pres.alphabet().size(), 0));
    for (State q = 0; q < pres.num_states(); ++q) {
        std::size_t out = 0;
        for (Symbol s = 0; s < pres.alphabet().size(); ++s)
            out += pres.next(q, s) != no_state;
        for (Symbol s = 0; s < pres.alphabet().size(); ++s)
            if (pres.next(q, s) != no_state)
                rows[q][s] = Rational(1, static_cast<long long>(out));
    }
    return GFunction(pres, std::move(rows));
}

ResolveResult resolve_candidates(const GFunction& g, const StateSet& candidates)
{
    ResolveResult r{candidates, std::nullopt};
    if (candidates.empty())
        return r;
    const auto& first = g.row(*candidates.begin());
    for (State q : candidates)
        if (g.row(q) != first)
            return r;
    r.agreed_weights = first;
    return r;
}

ResolveResult resolve(const GFunction& g, const Word& past)
{
    const SoficPresentation& p = g.presentation();
    StateSet c = p.image(p.all_states(), past);
    if (c.empty())
        throw Error(ErrorKind::NotAdmissible, "'" + p.alphabet().format(past) + "' is not in the language");
    return resolve_candidates(g, c);
}

namespace {

StateSet limit_candidates(const GFunction& g, const EventuallyPeriodicPast& past)
{
    const SoficPresentation& p = g.presentation();
    require_admissible(p, past);
    return map_image(stabilize_past(p.num_states(), p.letter_maps(), past).map);
}

Rational g_from(const GFunction& g, const StateSet& candidates, Symbol sigma, const std::string& where)
{
    ResolveResult r = resolve_candidates(g, candidates);
    if (!r.resolved())
        throw Error(ErrorKind::Undefined, "g is not defined at " + where);
    return r.agreed_weights->at(sigma);
}

Rational cylinder_from(const GFunction& g, StateSet candidates, const Word& a, const std::string& where)
{
    const SoficPresentation& p = g.presentation();
    Rational value = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (p.image(candidates, a[i]).empty())
            return 0;
        ResolveResult r = resolve_candidates(g, candidates);
        if (!r.resolved())
            throw Error(ErrorKind::Undefined,
                        "g is not defined at " + where + " extended by '"
                            + p.alphabet().format(Word(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)))
                            + "'");
        value *= (*r.agreed_weights)[a[i]];
        if (value == 0)
            return 0;
        candidates = p.image(candidates, a[i]);
    }
    return value;
}

CylinderTable table_from(const GFunction& g, const StateSet& candidates, std::size_t depth, const std::string& where)
{
    CylinderTable t;
    t.depth = depth;
    for (std::size_t k = 0; k <= depth; ++k)
        for (const Word& a : readable_words(g.presentation(), candidates, k))
            t.values.emplace(a, cylinder_from(g, candidates, a, where));
    return t;
}

} // namespace

ResolveResult resolve(const GFunction& g, const EventuallyPeriodicPast& past)
{
    return resolve_candidates(g, limit_candidates(g, past));
}

Rational g_eval(const GFunction& g, const Word& past, Symbol sigma)
{
    return g_from(g, resolve(g, past).candidates, sigma, "'" + g.presentation().alphabet().format(past) + "'");
}

Rational g_eval(const GFunction& g, const EventuallyPeriodicPast& past, Symbol sigma)
{
    return g_from(g, limit_candidates(g, past), sigma, format_past(g.presentation().alphabet(), past));
}

Rational mu_g_cylinder(const GFunction& g, const Word& past, const Word& a)
{
    return cylinder_from(g, resolve(g, past).candidates, a, "'" + g.presentation().alphabet().format(past) + "'");
}

Rational mu_g_cylinder(const GFunction& g, const EventuallyPeriodicPast& past, const Word& a)
{
    return cylinder_from(g, limit_candidates(g, past), a, format_past(g.presentation().alphabet(), past));
}

CylinderTable cylinder_table(const GFunction& g, const EventuallyPeriodicPast& past, std::size_t depth)
{
    return table_from(g, limit_candidates(g, past), depth, format_past(g.presentation().alphabet(), past));
}

CylinderTable cylinder_table(const GFunction& g, const Word& past, std::size_t depth)
{
    return table_from(g, resolve(g, past).candidates, depth, "'" + g.presentation().alphabet().format(past) + "'");
}

bool eg_membership(const GFunction& g, const EventuallyPeriodicPast& past, const Word& window, std::size_t depth)
{
    const SoficPresentation& p = g.presentation();
    StateSet candidates = limit_candidates(g, past);
    if (p.image(candidates, window).empty())
        throw Error(ErrorKind::NotAdmissible, "point " + format_past(p.alphabet(), past) + "."
                                                  + p.alphabet().format(window) + " is not admissible");
    for (Symbol s : window) {
        ResolveResult r = resolve_candidates(g, candidates);
        if (!r.resolved() || (*r.agreed_weights)[s] <= 0)
            return false;
        for (std::size_t k = 1; k <= depth; ++k)
            for (const Word& a : readable_words(p, candidates, k))
                if (!resolve_candidates(g, p.image(candidates, a)).resolved())
                    return false;
        candidates = p.image(candidates, s);
    }
    return true;
}

} // namespace gshift
