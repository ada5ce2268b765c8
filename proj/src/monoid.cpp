// monoid.cpp

#include "gshift/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gshift {

PartialMap identity_map(std::size_t n)
{
    PartialMap id(n);
    for (std::size_t i = 0; i < n; ++i)
        id[i] = static_cast<State>(i);
    return id;
}

PartialMap compose(const PartialMap& outer, const PartialMap& inner)
{
    PartialMap out(inner.size(), no_state);
    for (std::size_t s = 0; s < inner.size(); ++s)
        if (inner[s] != no_state)
            out[s] = outer[inner[s]];
    return out;
}

StateSet map_image(const PartialMap& map)
{
    std::vector<State> out;
    for (State t : map)
        if (t != no_state)
            out.push_back(t);
    return StateSet(std::move(out));
}

StateSet map_image(const PartialMap& map, const StateSet& domain)
{
    std::vector<State> out;
    for (State s : domain)
        if (map[s] != no_state)
            out.push_back(map[s]);
    return StateSet(std::move(out));
}

namespace {

struct MonoidGraph {
    std::vector<PartialMap> nodes;
    std::vector<std::vector<std::pair<Symbol, std::size_t>>> out;
    std::vector<std::size_t> parent;
    std::vector<Symbol> via;
};

MonoidGraph explore(std::size_t n, const std::vector<PartialMap>& letter_maps)
{
    MonoidGraph g;
    std::map<PartialMap, std::size_t> index;
    g.nodes.push_back(identity_map(n));
    g.out.emplace_back();
    g.parent.push_back(0);
    g.via.push_back(0);
    index.emplace(g.nodes[0], 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (Symbol c = 0; c < letter_maps.size(); ++c) {
            PartialMap next = compose(g.nodes[u], letter_maps[c]);
            if (std::all_of(next.begin(), next.end(), [](State t) { return t == no_state; }))
                continue;
            auto [it, inserted] = index.emplace(next, g.nodes.size());
            if (inserted) {
                g.nodes.push_back(std::move(next));
                g.out.emplace_back();
                g.parent.push_back(u);
                g.via.push_back(c);
                queue.push_back(it->second);
            }
            g.out[u].emplace_back(c, it->second);
        }
    }
    return g;
}

// Shortest (then lexicographically least, in reading order) nonempty letter
// sequence leading from `start` back to `start`, or empty if none.
std::vector<Symbol> shortest_cycle(const MonoidGraph& g, std::size_t start)
{
    std::vector<std::size_t> parent(g.nodes.size(), g.nodes.size());
    std::vector<Symbol> via(g.nodes.size(), 0);
    std::deque<std::size_t> queue;
    for (auto [c, v] : g.out[start]) {
        if (v == start)
            return {c};
        if (parent[v] == g.nodes.size()) {
            parent[v] = start;
            via[v] = c;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (auto [c, v] : g.out[u]) {
            if (v == start) {
                std::vector<Symbol> letters{c};
                for (std::size_t w = u; w != start; w = parent[w])
                    letters.push_back(via[w]);
                std::reverse(letters.begin(), letters.end());
                return letters;
            }
            if (parent[v] == g.nodes.size() && v != start) {
                parent[v] = u;
                via[v] = c;
                queue.push_back(v);
            }
        }
    }
    return {};
}

} // namespace

std::vector<LimitImage> limit_images(std::size_t n, const std::vector<PartialMap>& letter_maps)
{
    MonoidGraph g = explore(n, letter_maps);
    std::map<StateSet, std::pair<std::size_t, EventuallyPeriodicPast>> best;
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        std::vector<Symbol> cycle = shortest_cycle(g, u);
        if (cycle.empty())
            continue;
        std::vector<Symbol> path;
        for (std::size_t w = u; w != 0; w = g.parent[w])
            path.push_back(g.via[w]);
        // path holds the reading order reversed; reading order maps back to
        // left-to-right order by reversal
        Word tail(path.begin(), path.end());
        Word cyc(cycle.rbegin(), cycle.rend());
        EventuallyPeriodicPast witness(std::move(cyc), std::move(tail));
        StateSet image = map_image(g.nodes[u]);
        std::size_t cost = witness.tail().size() + witness.cycle().size();
        auto it = best.find(image);
        if (it == best.end() || cost < it->second.first)
            best.insert_or_assign(image, std::make_pair(cost, witness));
    }
    std::vector<LimitImage> out;
    for (auto& [image, entry] : best)
        out.push_back({image, entry.second});
    return out;
}

StabilizedSuffix stabilize_past(std::size_t n, const std::vector<PartialMap>& letter_maps,
                                const EventuallyPeriodicPast& past)
{
    const std::size_t tail = past.tail().size();
    const std::size_t period = past.cycle().size();
    std::set<std::pair<PartialMap, std::size_t>> seen;
    PartialMap map = identity_map(n);
    for (std::size_t k = 0;; ++k) {
        if (k >= tail) {
            std::size_t phase = (k - tail) % period;
            if (!seen.emplace(map, phase).second)
                return {map, k};
        }
        map = compose(map, letter_maps[past.at(k)]);
    }
}

} // namespace gshift
