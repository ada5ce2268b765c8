// conjugacy.cpp

#include "gshift/conjugacy.hpp"

#include <map>
#include <set>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

namespace {

using Halves = std::vector<std::pair<Symbol, Symbol>>;

void check_injective(const Halves& map, std::size_t a, std::size_t b, const std::string& what)
{
    std::set<std::pair<Symbol, Symbol>> seen;
    for (const auto& [x, y] : map) {
        if (x >= a || y >= b)
            throw Error(ErrorKind::InvariantViolation, what + " refers to an unknown half-symbol");
        if (!seen.insert({x, y}).second)
            throw Error(ErrorKind::InvariantViolation, what + " is not injective");
    }
}

std::string block_name(const Alphabet& alpha, Symbol a, Symbol b)
{
    return alpha.single_char() ? alpha.name(a) + alpha.name(b) : alpha.name(a) + "." + alpha.name(b);
}

} // namespace

BipartiteCoding::BipartiteCoding(SoficPresentation domain, Alphabet delta, Alphabet delta_tilde, Halves psi,
                                 Alphabet sigma_tilde, Halves psit)
    : domain_(std::move(domain)), delta_(std::move(delta)), delta_tilde_(std::move(delta_tilde)),
      psi_(std::move(psi)), sigma_tilde_(std::move(sigma_tilde)), psit_(std::move(psit)), codomain_(domain_)
{
    for (const std::string& name : delta_.names())
        if (delta_tilde_.find(name))
            throw Error(ErrorKind::InvariantViolation, "half alphabets share the symbol '" + name + "'");
    if (psi_.size() != domain_.alphabet().size())
        throw Error(ErrorKind::InvariantViolation, "psi must be defined on every symbol");
    if (psit_.size() != sigma_tilde_.size())
        throw Error(ErrorKind::InvariantViolation, "psi~ must be defined on every coded symbol");
    check_injective(psi_, delta_.size(), delta_tilde_.size(), "psi");
    check_injective(psit_, delta_tilde_.size(), delta_.size(), "psi~");

    // (dt(a1), d(a2)) over admissible a1 a2 must be exactly the image of psi~
    std::set<std::pair<Symbol, Symbol>> inner, image(psit_.begin(), psit_.end());
    for (const Word& w : language_words(domain_, 2))
        inner.insert({psi_[w[0]].second, psi_[w[1]].first});
    if (inner != image)
        throw Error(ErrorKind::InvariantViolation,
                    "specification identity fails: middle halves of 2-blocks differ from the image of psi~");
    codomain_ = coded_presentation(*this, domain_);
    std::set<std::pair<Symbol, Symbol>> back, psi_image(psi_.begin(), psi_.end());
    for (const Word& w : language_words(codomain_, 2))
        back.insert({psit_[w[0]].second, psit_[w[1]].first});
    if (back != psi_image)
        throw Error(ErrorKind::InvariantViolation,
                    "specification identity fails on the coded side: middle halves differ from the image of psi");
}

std::optional<Symbol> BipartiteCoding::psi_inverse(Symbol d, Symbol dt) const
{
    for (Symbol s = 0; s < psi_.size(); ++s)
        if (psi_[s] == std::make_pair(d, dt))
            return s;
    return std::nullopt;
}

std::optional<Symbol> BipartiteCoding::psit_inverse(Symbol dt, Symbol d) const
{
    for (Symbol s = 0; s < psit_.size(); ++s)
        if (psit_[s] == std::make_pair(dt, d))
            return s;
    return std::nullopt;
}

BipartiteCoding BipartiteCoding::reversed() const
{
    return BipartiteCoding(codomain_, delta_tilde_, delta_, psit_, domain_.alphabet(), psi_);
}

BipartiteCoding doubling_coding(const SoficPresentation& pres)
{
    const Alphabet& alpha = pres.alphabet();
    std::vector<std::string> bars;
    Halves psi;
    for (Symbol s = 0; s < alpha.size(); ++s) {
        bars.push_back(alpha.name(s) + "~");
        psi.emplace_back(s, s);
    }
    std::vector<std::string> coded;
    Halves psit;
    for (const Word& w : language_words(pres, 2)) {
        coded.push_back(block_name(alpha, w[0], w[1]));
        psit.emplace_back(w[0], w[1]);
    }
    return BipartiteCoding(pres, alpha, Alphabet(bars), psi, Alphabet(coded), psit);
}

Word apply_coding(const BipartiteCoding& coding, const Word& w)
{
    if (w.size() < 2)
        throw Error(ErrorKind::TooShort, "coding needs a word of length at least 2");
    if (!coding.domain().accepts(w))
        throw Error(ErrorKind::NotAdmissible, "'" + coding.sigma().format(w) + "' is not in the language");
    Word out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        out.push_back(*coding.psit_inverse(coding.psi()[w[i]].second, coding.psi()[w[i + 1]].first));
    return out;
}

Word apply_inverse_coding(const BipartiteCoding& coding, const Word& wt)
{
    if (wt.size() < 2)
        throw Error(ErrorKind::TooShort, "inverse coding needs a word of length at least 2");
    Word out;
    for (std::size_t i = 0; i + 1 < wt.size(); ++i) {
        auto s = coding.psi_inverse(coding.psit()[wt[i]].second, coding.psit()[wt[i + 1]].first);
        if (!s)
            throw Error(ErrorKind::NotAdmissible, "'" + coding.sigma_tilde().format(wt) + "' is not codable");
        out.push_back(*s);
    }
    return out;
}

SoficPresentation coded_presentation(const BipartiteCoding& coding, const SoficPresentation& pres,
                                     std::vector<std::pair<State, Symbol>>* state_data)
{
    if (!(pres.alphabet() == coding.sigma()))
        throw Error(ErrorKind::DomainMismatch, "presentation alphabet differs from the coding's");
    const auto& psi = coding.psi();
    std::map<std::pair<State, Symbol>, State> index;
    std::vector<std::pair<State, Symbol>> states;
    std::vector<std::string> names;
    for (State q = 0; q < pres.num_states(); ++q) {
        std::set<Symbol> firsts;
        for (Symbol s = 0; s < psi.size(); ++s)
            if (pres.next(q, s) != no_state)
                firsts.insert(psi[s].first);
        for (Symbol d : firsts) {
            index.emplace(std::make_pair(q, d), static_cast<State>(states.size()));
            states.emplace_back(q, d);
            names.push_back(pres.state_name(q) + "/" + coding.delta().name(d));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [q, d] = states[i];
        for (Symbol s1 = 0; s1 < psi.size(); ++s1) {
            if (psi[s1].first != d)
                continue;
            State q2 = pres.next(q, s1);
            if (q2 == no_state)
                continue;
            std::set<Symbol> next_firsts;
            for (Symbol s2 = 0; s2 < psi.size(); ++s2)
                if (pres.next(q2, s2) != no_state)
                    next_firsts.insert(psi[s2].first);
            for (Symbol d2 : next_firsts) {
                auto st = coding.psit_inverse(psi[s1].second, d2);
                if (!st)
                    throw Error(ErrorKind::InvariantViolation, "2-block has no coded symbol");
                edges.push_back({static_cast<State>(i), *st, index.at({q2, d2})});
            }
        }
    }
    SoficPresentation out = SoficPresentation::essential_part(coding.sigma_tilde(), names, edges);
    if (state_data) {
        state_data->clear();
        for (State v = 0; v < out.num_states(); ++v) {
            auto pos = std::find(names.begin(), names.end(), out.state_name(v)) - names.begin();
            state_data->push_back(states[static_cast<std::size_t>(pos)]);
        }
    }
    return out;
}

namespace {

// Mass of the symbols leaving q whose first half is d.
Rational first_half_mass(const BipartiteCoding& coding, const GFunction& g, State q, Symbol d)
{
    const SoficPresentation& p = g.presentation();
    Rational m = 0;
    for (Symbol s = 0; s < coding.psi().size(); ++s)
        if (coding.psi()[s].first == d && p.next(q, s) != no_state)
            m += g.weight(q, s);
    return m;
}

} // namespace

GFunction transport_g(const BipartiteCoding& coding, const GFunction& g)
{
    const SoficPresentation& p = g.presentation();
    if (!(p.alphabet() == coding.sigma()))
        throw Error(ErrorKind::DomainMismatch, "g-function alphabet differs from the coding's");
    if (auto diff = language_difference(coding.domain(), p))
        throw Error(ErrorKind::DomainMismatch, "g-function language differs from the coding domain at '"
                                                   + p.alphabet().format(*diff) + "'");
    std::vector<std::pair<State, Symbol>> data;
    SoficPresentation coded = coded_presentation(coding, p, &data);
    WeightRows rows(coded.num_states(), std::vector<Rational>(coding.sigma_tilde().size(), 0));
    for (State v = 0; v < coded.num_states(); ++v) {
        const auto [q, d] = data[v];
        Rational denom = first_half_mass(coding, g, q, d);
        if (denom == 0)
            throw Error(ErrorKind::Unresolvable, "no mass leaves vertex '" + coded.state_name(v)
                                                     + "'; the coded presentation cannot carry the transport");
        for (Symbol st = 0; st < coding.sigma_tilde().size(); ++st) {
            State target = coded.next(v, st);
            if (target == no_state)
                continue;
            const auto [dt, d2] = coding.psit()[st];
            Symbol s1 = *coding.psi_inverse(d, dt);
            rows[v][st] = g.weight(q, s1) * first_half_mass(coding, g, p.next(q, s1), d2) / denom;
        }
    }
    return GFunction(coded, std::move(rows));
}

std::vector<TransportViolation> check_transport_identity(const BipartiteCoding& coding, const GFunction& g,
                                                       const GFunction& gt)
{
    const SoficPresentation& p = g.presentation();
    std::vector<std::pair<State, Symbol>> data;
    SoficPresentation coded = coded_presentation(coding, p, &data);
    if (coded.state_names() != gt.presentation().state_names())
        throw Error(ErrorKind::DomainMismatch, "g~ does not live on the coded presentation of g");
    std::vector<TransportViolation> out;
    const auto& psi = coding.psi();
    for (State v = 0; v < coded.num_states(); ++v) {
        const auto [q, d] = data[v];
        for (Symbol st = 0; st < coding.sigma_tilde().size(); ++st) {
            if (coded.next(v, st) == no_state)
                continue;
            Rational lhs = gt.weight(v, st) * first_half_mass(coding, g, q, d);
            Rational rhs = 0;
            for (Symbol s1 = 0; s1 < psi.size(); ++s1) {
                State q1 = p.next(q, s1);
                if (q1 == no_state || psi[s1].first != d)
                    continue;
                for (Symbol s2 = 0; s2 < psi.size(); ++s2) {
                    if (p.next(q1, s2) == no_state)
                        continue;
                    if (coding.psit_inverse(psi[s1].second, psi[s2].first) == st)
                        rhs += g.weight(q, s1) * g.weight(q1, s2);
                }
            }
            if (lhs != rhs)
                out.push_back({v, st, lhs, rhs});
        }
    }
    return out;
}

ShiftMeasureTable transport_measure(const BipartiteCoding& coding, const ShiftMeasureTable& table)
{
    if (table.depth < 2)
        throw Error(ErrorKind::DepthTooSmall, "transport needs a table of depth at least 2");
    if (!(table.alphabet == coding.sigma()))
        throw Error(ErrorKind::DomainMismatch, "table alphabet differs from the coding's");
    ShiftMeasureTable out{coding.sigma_tilde(), table.depth - 1, {}};
    out.values.emplace(Word{}, 1);
    for (const auto& [a, value] : table.values) {
        if (a.size() < 2)
            continue;
        Word coded;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            auto st = coding.psit_inverse(coding.psi()[a[i]].second, coding.psi()[a[i + 1]].first);
            if (!st)
                throw Error(ErrorKind::NotAdmissible, "table word '" + coding.sigma().format(a) + "' is not codable");
            coded.push_back(*st);
        }
        out.values[coded] += value;
    }
    return out;
}

RangeInvariantReport range_invariants(const GFunction& g, std::size_t depth)
{
    const SoficPresentation& p = g.presentation();
    RangeInvariantReport report;
    report.range = g.weight_range();
    report.depth = depth;
    std::set<std::vector<Rational>> tables;
    for (State q = 0; q < p.num_states(); ++q) {
        std::vector<Rational> row;
        for (std::size_t len = 1; len <= depth; ++len) {
            for (const Word& a : language_words(p, len)) {
                Rational v = 1;
                State cur = q;
                for (Symbol s : a) {
                    State next = p.next(cur, s);
                    if (next == no_state) {
                        v = 0;
                        break;
                    }
                    v *= g.weight(cur, s);
                    cur = next;
                }
                row.push_back(v);
            }
        }
        tables.insert(std::move(row));
    }
    report.future_tables = tables.size();
    return report;
}

GFunction transport_chain(const ConjugacyChain& chain, const GFunction& g)
{
    GFunction current = g;
    for (const BipartiteCoding& c : chain)
        current = transport_g(c, current);
    return current;
}

ConjugacyChain reversed_chain(const ConjugacyChain& chain)
{
    ConjugacyChain out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        out.push_back(it->reversed());
    return out;
}

} // namespace gshift
