// shannon.cpp

#include "gshift/shannon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Collection normalized(std::vector<StateSet> sets)
{
    sets.erase(std::remove_if(sets.begin(), sets.end(), [](const StateSet& s) { return s.empty(); }),
               sets.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

bool readable_from_all(const SoficPresentation& pres, const Collection& c, Symbol s)
{
    return std::all_of(c.begin(), c.end(), [&](const StateSet& set) { return !pres.image(set, s).empty(); });
}

std::string not_admissible(const SoficPresentation& pres, const Word& a)
{
    return "'" + pres.alphabet().format(a) + "' is not in the language";
}

} // namespace

std::string format_state_set(const SoficPresentation& pres, const StateSet& set)
{
    std::string out = "{";
    bool first = true;
    for (State q : set) {
        if (!first)
            out += ',';
        out += pres.state_name(q);
        first = false;
    }
    return out + "}";
}

SoficPresentation follower_separate(const SoficPresentation& pres)
{
    const std::size_t n = pres.num_states();
    const std::size_t k = pres.alphabet().size();
    std::vector<std::size_t> cls(n, 0);
    std::size_t count = 1;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next_cls(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::size_t> sig{cls[q]};
            for (Symbol s = 0; s < k; ++s) {
                State t = pres.next(static_cast<State>(q), s);
                sig.push_back(t == no_state ? npos : cls[t]);
            }
            next_cls[q] = ids.emplace(sig, ids.size()).first->second;
        }
        cls = std::move(next_cls);
        if (ids.size() == count)
            break;
        count = ids.size();
    }
    std::vector<State> rep(count, no_state);
    std::vector<std::string> names(count);
    for (std::size_t q = 0; q < n; ++q) {
        if (rep[cls[q]] == no_state) {
            rep[cls[q]] = static_cast<State>(q);
            names[cls[q]] = pres.state_name(static_cast<State>(q));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < count; ++c)
        for (Symbol s = 0; s < k; ++s)
            if (State t = pres.next(rep[c], s); t != no_state)
                edges.push_back({static_cast<State>(c), s, static_cast<State>(cls[t])});
    return SoficPresentation(pres.alphabet(), std::move(names), edges);
}

StateSetFamily limit_family(const SoficPresentation& pres)
{
    StateSetFamily family = limit_images(pres.num_states(), pres.letter_maps());
    for (LimitImage& li : family)
        li.witness = normalize_past(li.witness);
    return family;
}

std::vector<StateSet> limit_family_by_collections(const SoficPresentation& pres)
{
    std::map<Collection, std::size_t> seen;
    std::vector<Collection> sequence;
    Collection current{pres.all_states()};
    while (!seen.count(current)) {
        seen.emplace(current, sequence.size());
        sequence.push_back(current);
        std::vector<StateSet> next;
        for (const StateSet& s : current)
            for (Symbol a = 0; a < pres.alphabet().size(); ++a)
                next.push_back(pres.image(s, a));
        current = normalized(std::move(next));
    }
    std::set<StateSet> out;
    for (std::size_t i = seen.at(current); i < sequence.size(); ++i)
        out.insert(sequence[i].begin(), sequence[i].end());
    return {out.begin(), out.end()};
}

Collection collection_image(const SoficPresentation& pres, const Collection& c, const Word& w)
{
    std::vector<StateSet> out;
    for (const StateSet& s : c)
        out.push_back(pres.image(s, w));
    return normalized(std::move(out));
}

std::vector<Word> jointly_readable(const SoficPresentation& pres, const Collection& sets, std::size_t n)
{
    std::vector<Word> out;
    Word word;
    auto visit = [&](auto&& self, const Collection& current) -> void {
        if (word.size() == n) {
            out.push_back(word);
            return;
        }
        for (Symbol s = 0; s < pres.alphabet().size(); ++s) {
            Collection next;
            bool alive = true;
            for (const StateSet& set : current) {
                StateSet img = pres.image(set, s);
                if (img.empty()) {
                    alive = false;
                    break;
                }
                next.push_back(std::move(img));
            }
            if (!alive)
                continue;
            word.push_back(s);
            self(self, normalized(std::move(next)));
            word.pop_back();
        }
    };
    visit(visit, sets);
    return out;
}

OmegaCalculus::OmegaCalculus(SoficPresentation pres)
    : pres_(std::move(pres)), letter_maps_(pres_.letter_maps()), family_(limit_family(pres_))
{
}

Collection OmegaCalculus::base_collection() const
{
    std::vector<StateSet> sets;
    for (const LimitImage& li : family_)
        sets.push_back(li.image);
    return normalized(std::move(sets));
}

Collection OmegaCalculus::after(const Word& a) const
{
    for (Symbol s : a)
        if (s >= pres_.alphabet().size())
            throw Error(ErrorKind::InvalidArgument, "symbol index out of range");
    Collection c = collection_image(pres_, base_collection(), a);
    if (c.empty())
        throw Error(ErrorKind::NotAdmissible, not_admissible(pres_, a));
    return c;
}

std::vector<Word> OmegaCalculus::omega_plus(const Word& a, std::size_t n) const
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    return jointly_readable(pres_, after(a), n);
}

Collection OmegaCalculus::after_past(const EventuallyPeriodicPast& past, std::size_t* depth) const
{
    require_admissible(pres_, past);
    StabilizedSuffix stable = stabilize_past(pres_.num_states(), letter_maps_, past);
    std::vector<StateSet> sets;
    for (const LimitImage& li : family_)
        sets.push_back(map_image(stable.map, li.image));
    if (depth)
        *depth = stable.depth;
    return normalized(std::move(sets));
}

OmegaPastResult OmegaCalculus::omega_past(const EventuallyPeriodicPast& past, std::size_t n, OmegaMode mode) const
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    OmegaPastResult result;
    Collection d = after_past(past, &result.suffix_depth);
    std::vector<Word> candidates = jointly_readable(pres_, d, n);
    result.stabilization = n;
    if (mode == OmegaMode::Omega) {
        result.words = std::move(candidates);
        return result;
    }
    const std::size_t k = pres_.alphabet().size();
    for (Word& c : candidates) {
        std::set<Collection> alive{collection_image(pres_, d, c)};
        std::set<std::set<Collection>> history;
        std::size_t j = 0;
        while (!alive.empty() && history.insert(alive).second) {
            std::set<Collection> next;
            for (const Collection& t : alive) {
                for (Symbol s = 0; s < k; ++s) {
                    if (!readable_from_all(pres_, t, s))
                        continue;
                    next.insert(collection_image(pres_, t, {s}));
                }
            }
            alive = std::move(next);
            ++j;
        }
        result.stabilization = std::max(result.stabilization, n + j);
        if (!alive.empty())
            result.words.push_back(std::move(c));
    }
    return result;
}

// Collections reachable from A, plus the subset automaton over them.
struct OmegaCalculus::Lattice {
    std::vector<Collection> r;
    std::vector<Word> r_witness;
    std::vector<std::vector<std::size_t>> r_step;

    std::vector<std::vector<std::size_t>> z;
    std::vector<std::size_t> z_parent;
    std::vector<Symbol> z_via;
    std::vector<std::vector<std::size_t>> z_step;

    Word z_word(std::size_t i) const
    {
        Word w;
        for (; i != 0; i = z_parent[i])
            w.push_back(z_via[i]);
        std::reverse(w.begin(), w.end());
        return w;
    }
};

OmegaCalculus::Lattice OmegaCalculus::explore() const
{
    const std::size_t k = pres_.alphabet().size();
    Lattice lat;
    std::map<Collection, std::size_t> r_index;
    lat.r.push_back(base_collection());
    lat.r_witness.push_back({});
    r_index.emplace(lat.r[0], 0);
    for (std::size_t i = 0; i < lat.r.size(); ++i) {
        lat.r_step.emplace_back(k, npos);
        for (Symbol s = 0; s < k; ++s) {
            Collection next = collection_image(pres_, lat.r[i], {s});
            if (next.empty())
                continue;
            auto [it, inserted] = r_index.emplace(next, lat.r.size());
            if (inserted) {
                lat.r.push_back(std::move(next));
                lat.r_witness.push_back(concat(lat.r_witness[i], {s}));
            }
            lat.r_step[i][s] = it->second;
        }
    }

    std::map<std::vector<std::size_t>, std::size_t> z_index;
    std::vector<std::size_t> all(lat.r.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    lat.z.push_back(all);
    lat.z_parent.push_back(0);
    lat.z_via.push_back(0);
    z_index.emplace(all, 0);
    for (std::size_t i = 0; i < lat.z.size(); ++i) {
        lat.z_step.emplace_back(k, npos);
        for (Symbol s = 0; s < k; ++s) {
            std::set<std::size_t> next;
            for (std::size_t c : lat.z[i])
                if (lat.r_step[c][s] != npos)
                    next.insert(lat.r_step[c][s]);
            if (next.empty())
                continue;
            std::vector<std::size_t> key(next.begin(), next.end());
            auto [it, inserted] = z_index.emplace(key, lat.z.size());
            if (inserted) {
                lat.z.push_back(std::move(key));
                lat.z_parent.push_back(i);
                lat.z_via.push_back(s);
            }
            lat.z_step[i][s] = it->second;
        }
    }
    return lat;
}

PropertyDReport OmegaCalculus::check_property_D(std::size_t certificate_limit) const
{
    const std::size_t k = pres_.alphabet().size();
    Lattice lat = explore();
    PropertyDReport report;
    report.collections = lat.r.size();
    report.z_states = lat.z.size();
    report.holds = true;
    for (std::size_t i = 0; i < lat.z.size() && report.holds; ++i) {
        for (Symbol s = 0; s < k; ++s) {
            if (lat.z_step[i][s] == npos)
                continue;
            bool forced = std::any_of(lat.z[i].begin(), lat.z[i].end(),
                                      [&](std::size_t c) { return readable_from_all(pres_, lat.r[c], s); });
            if (!forced) {
                report.holds = false;
                report.counterexample = DCounterexample{lat.z_word(i), s, lat.z[i].size()};
                break;
            }
        }
    }

    // certificates for every admissible b s with |b| <= |Q|
    for (std::size_t len = 0; len <= pres_.num_states(); ++len) {
        for (const Word& b : language_words(pres_, len)) {
            for (Symbol s = 0; s < k; ++s) {
                if (report.certificates.size() >= certificate_limit)
                    return report;
                if (!pres_.accepts(concat(b, {s})))
                    continue;
                for (std::size_t c = 0; c < lat.r.size(); ++c) {
                    Collection after_b = collection_image(pres_, lat.r[c], b);
                    if (!after_b.empty() && readable_from_all(pres_, after_b, s)) {
                        report.certificates.push_back({b, s, lat.r_witness[c]});
                        break;
                    }
                }
            }
        }
    }
    return report;
}

bool OmegaCalculus::has_property_D() const
{
    return check_property_D(0).holds;
}

std::optional<Word> OmegaCalculus::find_witness_bounded(const Word& b, Symbol sigma, std::size_t max_length) const
{
    Collection base = base_collection();
    for (std::size_t len = 0; len <= max_length; ++len) {
        for (const Word& a : language_words(pres_, len)) {
            Collection c = collection_image(pres_, base, concat(a, b));
            if (!c.empty() && readable_from_all(pres_, c, sigma))
                return a;
        }
    }
    return std::nullopt;
}

GDGraph OmegaCalculus::build_GD(std::size_t depth) const
{
    if (depth == 0)
        throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
    if (!has_property_D())
        throw Error(ErrorKind::PropertyDFailed, "presentation does not have property (D)");
    const std::size_t k = pres_.alphabet().size();
    Lattice lat = explore();
    std::set<StateSet> vertices;
    std::deque<StateSet> queue;
    for (const Collection& c : lat.r)
        if (c.size() == 1 && vertices.insert(c.front()).second)
            queue.push_back(c.front());
    if (vertices.empty())
        throw Error(ErrorKind::Unresolvable, "no synchronizing left context");
    while (!queue.empty()) {
        StateSet v = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < k; ++s) {
            StateSet t = pres_.image(v, s);
            if (!t.empty() && vertices.insert(t).second)
                queue.push_back(t);
        }
    }
    std::vector<StateSet> sets(vertices.begin(), vertices.end());
    auto index_of = [&](const StateSet& s) {
        return static_cast<State>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin());
    };

    // label each vertex by its depth-language; equal labels are merged
    std::vector<std::vector<Word>> langs;
    std::map<std::vector<Word>, State> by_lang;
    std::vector<State> cls(sets.size());
    std::vector<State> rep;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<Word> lang = readable_words(pres_, sets[i], depth);
        auto [it, inserted] = by_lang.emplace(lang, static_cast<State>(rep.size()));
        if (inserted) {
            rep.push_back(static_cast<State>(i));
            langs.push_back(std::move(lang));
        }
        cls[i] = it->second;
    }
    std::vector<std::string> names;
    for (State r : rep)
        names.push_back(format_state_set(pres_, sets[r]));
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < rep.size(); ++c) {
        for (Symbol s = 0; s < k; ++s) {
            StateSet t = pres_.image(sets[rep[c]], s);
            if (!t.empty())
                edges.push_back({static_cast<State>(c), s, cls[index_of(t)]});
        }
    }
    SoficPresentation graph = SoficPresentation::essential_part(pres_.alphabet(), names, edges);
    GDGraph out{graph, {}, {}};
    for (State q = 0; q < graph.num_states(); ++q) {
        auto pos = std::find(names.begin(), names.end(), graph.state_name(q)) - names.begin();
        out.vertex_languages.push_back(langs[static_cast<std::size_t>(pos)]);
        out.vertex_sets.push_back(sets[rep[static_cast<std::size_t>(pos)]]);
    }
    return out;
}

bool OmegaCalculus::e_window_membership(const Word& a, std::size_t k) const
{
    if (a.size() != k + 1)
        throw Error(ErrorKind::InvalidArgument, "window must have length k+1");
    if (!pres_.accepts(a))
        throw Error(ErrorKind::NotAdmissible, not_admissible(pres_, a));
    Word prefix(a.begin(), a.end() - 1);
    return readable_from_all(pres_, after(prefix), a.back());
}

std::vector<Word> omega_plus(const SoficPresentation& pres, const Word& a, std::size_t n)
{
    return OmegaCalculus(pres).omega_plus(a, n);
}

OmegaPastResult omega_past(const SoficPresentation& pres, const EventuallyPeriodicPast& past, std::size_t n,
                           OmegaMode mode)
{
    return OmegaCalculus(pres).omega_past(past, n, mode);
}

PropertyDReport check_property_D(const SoficPresentation& pres)
{
    return OmegaCalculus(pres).check_property_D();
}

bool has_property_D(const SoficPresentation& pres)
{
    return OmegaCalculus(pres).has_property_D();
}

GDGraph build_GD(const SoficPresentation& pres, std::size_t depth)
{
    return OmegaCalculus(pres).build_GD(depth);
}

bool e_window_membership(const SoficPresentation& pres, const Word& a, std::size_t k)
{
    return OmegaCalculus(pres).e_window_membership(a, k);
}

} // namespace gshift
