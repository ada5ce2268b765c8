// measure_graph.cpp

#include "gshift/measure_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

namespace {

using Vec = std::vector<Rational>;

// Row-echelon accumulator used to test linear independence exactly.
class Echelon {
public:
    bool add(Vec v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[pivots_[r]];
            if (c != 0)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] -= c * rows_[r][j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (it == v.end())
            return false;
        const std::size_t p = static_cast<std::size_t>(it - v.begin());
        const Rational lead = v[p];
        for (Rational& x : v)
            x /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Spanning vectors of { M_a 1 } for a weighted graph given as per-symbol
// (target, weight) tables over `n` states.
template <typename Apply>
std::vector<Vec> forward_basis(std::size_t n, std::size_t symbols, Apply apply)
{
    std::vector<Vec> basis;
    Echelon ech;
    Vec one(n, 1);
    ech.add(one);
    basis.push_back(one);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (Symbol s = 0; s < symbols; ++s) {
            Vec w = apply(basis[i], s);
            if (ech.add(w))
                basis.push_back(std::move(w));
        }
    }
    return basis;
}

// (M_s v)(V) = g(V, s) v(next(V, s)).
Vec apply_word_matrix(const GFunction& g, const Vec& v, Symbol s, std::size_t offset = 0)
{
    const SoficPresentation& p = g.presentation();
    Vec out(p.num_states(), 0);
    for (State q = 0; q < p.num_states(); ++q)
        if (State t = p.next(q, s); t != no_state)
            out[q] = g.weight(q, s) * v[offset + t];
    return out;
}

Rational dot(const Vec& a, const Vec& b)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            sum += a[i] * b[i];
    return sum;
}

} // namespace

MeasureCarrier::MeasureCarrier(GFunction g) : g_(std::move(g))
{
    basis_ = forward_basis(num_states(), alphabet().size(),
                           [this](const Vec& v, Symbol s) { return apply_word_matrix(g_, v, s); });
}

std::vector<Rational> MeasureCarrier::signature(const std::vector<Rational>& initial) const
{
    Vec sig;
    for (const Vec& b : basis_)
        sig.push_back(dot(initial, b));
    return sig;
}

std::shared_ptr<const MeasureCarrier> make_carrier(GFunction g)
{
    return std::make_shared<const MeasureCarrier>(std::move(g));
}

MeasureVertex::MeasureVertex(std::shared_ptr<const MeasureCarrier> carrier, std::vector<Rational> initial)
    : carrier_(std::move(carrier)), initial_(std::move(initial))
{
    if (!carrier_)
        throw Error(ErrorKind::InvalidArgument, "measure vertex needs a carrier");
    if (initial_.size() != carrier_->num_states())
        throw Error(ErrorKind::InvariantViolation, "initial distribution has the wrong length");
    Rational sum = 0;
    for (const Rational& x : initial_) {
        if (x < 0)
            throw Error(ErrorKind::InvariantViolation, "initial distribution has a negative entry");
        sum += x;
    }
    if (sum != 1)
        throw Error(ErrorKind::InvariantViolation, "initial distribution sums to " + to_string(sum) + ", not 1");
}

MeasureVertex MeasureVertex::delta(std::shared_ptr<const MeasureCarrier> carrier, State q)
{
    Vec init(carrier->num_states(), 0);
    init.at(q) = 1;
    return MeasureVertex(std::move(carrier), std::move(init));
}

bool MeasureVertex::operator==(const MeasureVertex& other) const
{
    if (!(alphabet() == other.alphabet()))
        return false;
    if (carrier_ == other.carrier_)
        return carrier_->signature(initial_) == carrier_->signature(other.initial_);
    // direct sum of the two carriers; the difference must vanish on the span
    const GFunction& g1 = carrier_->gfunction();
    const GFunction& g2 = other.carrier_->gfunction();
    const std::size_t n1 = carrier_->num_states();
    const std::size_t n2 = other.carrier_->num_states();
    auto basis = forward_basis(n1 + n2, alphabet().size(), [&](const Vec& v, Symbol s) {
        Vec out = apply_word_matrix(g1, v, s, 0);
        Vec second = apply_word_matrix(g2, v, s, n1);
        out.insert(out.end(), second.begin(), second.end());
        return out;
    });
    Vec diff = initial_;
    for (const Rational& x : other.initial_)
        diff.push_back(-x);
    return std::all_of(basis.begin(), basis.end(), [&](const Vec& b) { return dot(diff, b) == 0; });
}

Rational cylinder(const MeasureVertex& mu, const Word& a)
{
    const GFunction& g = mu.carrier()->gfunction();
    const SoficPresentation& p = g.presentation();
    Vec mass = mu.initial();
    for (Symbol s : a) {
        if (s >= p.alphabet().size())
            return 0;
        Vec next(p.num_states(), 0);
        for (State q = 0; q < p.num_states(); ++q)
            if (mass[q] != 0)
                if (State t = p.next(q, s); t != no_state)
                    next[t] += mass[q] * g.weight(q, s);
        mass = std::move(next);
    }
    Rational total = 0;
    for (const Rational& x : mass)
        total += x;
    return total;
}

MeasureVertex tau_measure(const MeasureVertex& mu, Symbol sigma)
{
    const GFunction& g = mu.carrier()->gfunction();
    const SoficPresentation& p = g.presentation();
    Vec next(p.num_states(), 0);
    Rational total = 0;
    for (State q = 0; q < p.num_states(); ++q) {
        if (mu.initial()[q] == 0)
            continue;
        if (State t = p.next(q, sigma); t != no_state) {
            Rational m = mu.initial()[q] * g.weight(q, sigma);
            next[t] += m;
            total += m;
        }
    }
    if (total == 0)
        throw Error(ErrorKind::ZeroMass, "cylinder of '" + p.alphabet().name(sigma) + "' has measure 0");
    for (Rational& x : next)
        x /= total;
    return MeasureVertex(mu.carrier(), std::move(next));
}

MeasureVertex tau_measure(const MeasureVertex& mu, const Word& w)
{
    MeasureVertex out = mu;
    for (Symbol s : w)
        out = tau_measure(out, s);
    return out;
}

Rational dk_distance(const MeasureVertex& mu, const MeasureVertex& nu, std::size_t k)
{
    if (!(mu.alphabet() == nu.alphabet()))
        throw Error(ErrorKind::DomainMismatch, "measures live on different alphabets");
    Rational best = 0;
    for (const Word& a : all_words(mu.alphabet().size(), k))
        best = std::max(best, abs(cylinder(mu, a) - cylinder(nu, a)));
    return best;
}

VertexSet::VertexSet(std::vector<MeasureVertex> members, std::vector<std::string> names)
    : members_(std::move(members)), names_(std::move(names))
{
    if (members_.empty())
        throw Error(ErrorKind::InvariantViolation, "vertex set is empty");
    if (names_.size() != members_.size())
        throw Error(ErrorKind::InvariantViolation, "one name per member is required");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
        throw Error(ErrorKind::InvariantViolation, "duplicate member names");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (!(members_[i].alphabet() == members_[0].alphabet()))
            throw Error(ErrorKind::InvariantViolation, "members use different alphabets");
        for (std::size_t j = 0; j < i; ++j)
            if (members_[i] == members_[j])
                throw Error(ErrorKind::InvariantViolation,
                            "members '" + names_[j] + "' and '" + names_[i] + "' are the same measure");
    }
    const std::size_t k = alphabet().size();
    tau_.assign(members_.size(), std::vector<State>(k, no_state));
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (Symbol s = 0; s < k; ++s) {
            if (cylinder(members_[i], {s}) == 0)
                continue;
            auto j = find(tau_measure(members_[i], s));
            tau_[i][s] = j ? static_cast<State>(*j) : outside;
        }
    }
}

std::optional<std::size_t> VertexSet::find(const MeasureVertex& mu) const
{
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i] == mu)
            return i;
    return std::nullopt;
}

bool VertexSet::transition_complete() const
{
    for (const auto& row : tau_)
        for (State t : row)
            if (t == outside)
                return false;
    return true;
}

std::vector<PartialMap> VertexSet::letter_maps() const
{
    const std::size_t k = alphabet().size();
    std::vector<PartialMap> maps(k, PartialMap(members_.size(), no_state));
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (Symbol s = 0; s < k; ++s) {
            if (tau_[i][s] == outside)
                throw Error(ErrorKind::NotTransitionComplete,
                            "tau(" + alphabet().name(s) + ") of '" + names_[i] + "' is not a member");
            maps[s][i] = tau_[i][s];
        }
    }
    return maps;
}

bool VertexSet::same_measures(const VertexSet& other) const
{
    if (size() != other.size())
        return false;
    return std::all_of(members_.begin(), members_.end(),
                       [&](const MeasureVertex& mu) { return other.find(mu).has_value(); });
}

namespace {

std::vector<Edge> vertex_edges(const VertexSet& set)
{
    auto maps = set.letter_maps();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (Symbol s = 0; s < maps.size(); ++s)
            if (maps[s][i] != no_state)
                edges.push_back({static_cast<State>(i), s, maps[s][i]});
    return edges;
}

std::vector<std::size_t> limit_members(const VertexSet& set, const std::vector<PartialMap>& maps,
                                       const EventuallyPeriodicPast& past)
{
    for (Symbol s : past.cycle())
        if (s >= set.alphabet().size())
            throw Error(ErrorKind::InvalidArgument, "symbol index out of range");
    for (Symbol s : past.tail())
        if (s >= set.alphabet().size())
            throw Error(ErrorKind::InvalidArgument, "symbol index out of range");
    StateSet image = map_image(stabilize_past(set.size(), maps, past).map);
    if (image.empty())
        throw Error(ErrorKind::NotAdmissible,
                    "past " + format_past(set.alphabet(), past) + " is not admissible for the vertex set");
    return {image.begin(), image.end()};
}

// Members reachable by tau from anchors, each with a past in D_infinity
// whose limit measure it is.
std::map<std::size_t, EventuallyPeriodicPast> realizable(const std::vector<PartialMap>& maps,
                                                         const std::vector<std::pair<std::size_t, EventuallyPeriodicPast>>& anchor_list)
{
    std::map<std::size_t, EventuallyPeriodicPast> out;
    std::deque<std::size_t> queue;
    for (const auto& [m, past] : anchor_list)
        if (out.emplace(m, past).second)
            queue.push_back(m);
    while (!queue.empty()) {
        std::size_t m = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < maps.size(); ++s) {
            State t = maps[s][m];
            if (t != no_state && !out.count(t)) {
                out.emplace(t, out.at(m).extended({s}));
                queue.push_back(t);
            }
        }
    }
    return out;
}

} // namespace

SoficPresentation vertex_graph(const VertexSet& set)
{
    return SoficPresentation(set.alphabet(), set.names(), vertex_edges(set));
}

std::vector<std::size_t> m_of_past(const VertexSet& set, const EventuallyPeriodicPast& past, std::size_t k,
                                   const Rational& eps)
{
    auto maps = set.letter_maps();
    std::vector<std::size_t> limit = limit_members(set, maps, past);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < set.size(); ++j) {
        bool near = std::any_of(limit.begin(), limit.end(), [&](std::size_t i) {
            return i == j || dk_distance(set.member(i), set.member(j), k) <= eps;
        });
        if (near)
            out.push_back(j);
    }
    return out;
}

std::vector<std::pair<std::size_t, EventuallyPeriodicPast>> anchors(const VertexSet& set)
{
    std::vector<std::pair<std::size_t, EventuallyPeriodicPast>> out;
    for (const LimitImage& li : limit_images(set.size(), set.letter_maps()))
        if (li.image.size() == 1)
            out.emplace_back(*li.image.begin(), normalize_past(li.witness));
    return out;
}

std::vector<EventuallyPeriodicPast> default_pasts(const VertexSet& set)
{
    SoficPresentation graph = SoficPresentation::essential_part(set.alphabet(), set.names(), vertex_edges(set));
    std::vector<EventuallyPeriodicPast> out = enumerate_periodic_pasts(graph, 2, 2);
    for (const auto& [m, past] : anchors(set))
        if (std::find(out.begin(), out.end(), past) == out.end())
            out.push_back(past);
    return out;
}

ContractivityReport check_residually_contractive(const VertexSet& set, std::size_t k, const Rational& eps,
                                                 const std::vector<EventuallyPeriodicPast>& pasts)
{
    auto maps = set.letter_maps();
    ContractivityReport report;
    report.k = k;
    report.epsilon = eps;

    for (std::size_t m = 0; m < set.size(); ++m) {
        bool found = false;
        for (std::size_t src = 0; src < set.size() && !found; ++src) {
            for (Symbol s = 0; s < maps.size() && !found; ++s) {
                if (maps[s][src] == m) {
                    report.cond_i_witnesses.push_back({m, src, s});
                    found = true;
                }
            }
        }
        if (!found)
            report.cond_i_failures.push_back(m);
    }
    report.cond_i = report.cond_i_failures.empty();

    report.anchors = anchors(set);
    auto reach = realizable(maps, report.anchors);

    report.cond_ii = true;
    report.cond_iii = true;
    for (const EventuallyPeriodicPast& past : pasts) {
        PastSample sample{past, limit_members(set, maps, past), {}, false, std::nullopt, {}};
        sample.in_d_infinity = sample.limit_members.size() == 1;
        std::vector<std::size_t> near = m_of_past(set, past, k, eps);
        for (std::size_t n = 1; n <= k; ++n) {
            std::set<std::vector<Rational>> marginals;
            for (std::size_t j : near) {
                std::vector<Rational> row;
                for (const Word& a : all_words(set.alphabet().size(), n))
                    row.push_back(cylinder(set.member(j), a));
                marginals.insert(std::move(row));
            }
            sample.marginal_counts.push_back(marginals.size());
        }
        const Word w = past.suffix(k);
        for (const auto& [rho, y] : reach) {
            if (cylinder(set.member(rho), w) > 0) {
                sample.ii_witness = y.extended(w);
                break;
            }
        }
        for (std::size_t mu : sample.limit_members) {
            std::optional<EventuallyPeriodicPast> witness;
            // exact hits first, then eps-close ones
            for (int pass = 0; pass < 2 && !witness; ++pass) {
                for (const auto& [rho, y] : reach) {
                    if (cylinder(set.member(rho), w) == 0)
                        continue;
                    MeasureVertex moved = tau_measure(set.member(rho), w);
                    bool ok = pass == 0 ? moved == set.member(mu) : dk_distance(moved, set.member(mu), k) <= eps;
                    if (ok) {
                        witness = y.extended(w);
                        break;
                    }
                }
            }
            if (!witness)
                report.cond_iii = false;
            sample.iii_witnesses.emplace_back(mu, witness);
        }
        if (!sample.ii_witness)
            report.cond_ii = false;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

ContractivityReport check_residually_contractive(const VertexSet& set)
{
    return check_residually_contractive(set, default_resolution, default_epsilon, default_pasts(set));
}

GFunction g_from_M(const VertexSet& set)
{
    ContractivityReport report = check_residually_contractive(set);
    if (!report.contractive())
        throw Error(ErrorKind::NotContractive,
                    std::string("vertex set fails condition ")
                        + (!report.cond_i ? "(I)" : !report.cond_ii ? "(II)" : "(III)"));
    SoficPresentation graph = vertex_graph(set);
    WeightRows rows(set.size(), std::vector<Rational>(set.alphabet().size(), 0));
    for (std::size_t i = 0; i < set.size(); ++i)
        for (Symbol s = 0; s < set.alphabet().size(); ++s)
            rows[i][s] = cylinder(set.member(i), {s});
    try {
        return GFunction(graph, std::move(rows));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PropertyDFailed)
            throw Error(ErrorKind::NotContractive, "vertex graph lacks property (D)");
        throw;
    }
}

VertexSet M_from_g(const GFunction& g)
{
    auto carrier = make_carrier(g);
    std::vector<MeasureVertex> members;
    std::vector<std::string> names;
    for (State q = 0; q < g.presentation().num_states(); ++q) {
        MeasureVertex mu = MeasureVertex::delta(carrier, q);
        if (std::find(members.begin(), members.end(), mu) != members.end())
            continue;
        members.push_back(std::move(mu));
        names.push_back(g.presentation().state_name(q));
    }
    return VertexSet(std::move(members), std::move(names));
}

std::optional<Word> compare_g_functions(const GFunction& g1, const GFunction& g2, std::size_t depth)
{
    if (auto diff = language_difference(g1.presentation(), g2.presentation()))
        throw Error(ErrorKind::DomainMismatch,
                    "languages differ at '" + g1.presentation().alphabet().format(*diff) + "'");
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const Word& a : language_words(g1.presentation(), len)) {
            ResolveResult r1 = resolve(g1, a);
            ResolveResult r2 = resolve(g2, a);
            if (r1.agreed_weights != r2.agreed_weights)
                return a;
        }
    }
    return std::nullopt;
}

} // namespace gshift
