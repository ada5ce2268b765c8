// gmeasure.cpp

#include "gshift/gmeasure.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

Rational ShiftMeasureTable::value(const Word& a) const
{
    auto it = values.find(a);
    return it == values.end() ? Rational(0) : it->second;
}

std::vector<std::vector<Rational>> vertex_chain(const GFunction& g)
{
    const SoficPresentation& p = g.presentation();
    const std::size_t n = p.num_states();
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, 0));
    for (const Edge& e : p.edges())
        P[e.source][e.target] += g.weight(e.source, e.symbol);
    return P;
}

namespace {

bool strongly_connected(const std::vector<std::vector<Rational>>& P)
{
    const std::size_t n = P.size();
    auto reach_all = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                const Rational& w = forward ? P[u][v] : P[v][u];
                if (w > 0 && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reach_all(true) && reach_all(false);
}

// Solves A x = b exactly; A is square and nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw Error(ErrorKind::Reducible, "stationary equations are singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

std::vector<Rational> stationary_law(const GFunction& g)
{
    auto P = vertex_chain(g);
    const std::size_t n = P.size();
    if (!strongly_connected(P))
        throw Error(ErrorKind::Reducible, "the positive-weight vertex chain is not irreducible");
    // rows j < n-1: sum_i pi_i (P_ij - delta_ij) = 0; last row: sum pi = 1
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
    std::vector<Rational> b(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            a[j][i] = P[i][j] - (i == j ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i)
        a[n - 1][i] = 1;
    b[n - 1] = 1;
    return solve(std::move(a), std::move(b));
}

ShiftMeasureTable stationary_g_measure(const GFunction& g, std::size_t depth)
{
    const SoficPresentation& p = g.presentation();
    std::vector<Rational> pi = stationary_law(g);
    ShiftMeasureTable table{p.alphabet(), depth, {}};
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const Word& a : language_words(p, len)) {
            Rational total = 0;
            for (State q = 0; q < p.num_states(); ++q) {
                if (pi[q] == 0)
                    continue;
                Rational prod = pi[q];
                State cur = q;
                for (Symbol s : a) {
                    State next = p.next(cur, s);
                    if (next == no_state) {
                        prod = 0;
                        break;
                    }
                    prod *= g.weight(cur, s);
                    cur = next;
                }
                total += prod;
            }
            table.values.emplace(a, total);
        }
    }
    return table;
}

bool shift_invariant(const ShiftMeasureTable& table)
{
    const std::size_t k = table.alphabet.size();
    for (std::size_t len = 0; len < table.depth; ++len) {
        for (const Word& a : all_words(k, len)) {
            Rational left = 0, right = 0;
            for (Symbol s = 0; s < k; ++s) {
                left += table.value(concat({s}, a));
                right += table.value(concat(a, {s}));
            }
            Rational v = table.value(a);
            if (left != v || right != v)
                return false;
        }
    }
    return table.value({}) == 1;
}

GMeasureReport verify_g_measure(const GFunction& g, const ShiftMeasureTable& table, std::size_t depth)
{
    if (table.depth < depth + 1)
        throw Error(ErrorKind::DepthTooSmall, "table depth " + std::to_string(table.depth)
                                                  + " cannot verify depth " + std::to_string(depth));
    const SoficPresentation& p = g.presentation();
    if (!(table.alphabet == p.alphabet()))
        throw Error(ErrorKind::DomainMismatch, "table and g-function use different alphabets");
    GMeasureReport report;
    for (std::size_t len = 1; len <= depth; ++len) {
        for (const Word& a : language_words(p, len)) {
            ResolveResult r = resolve(g, a);
            if (!r.resolved()) {
                report.unresolved.push_back(a);
                continue;
            }
            for (Symbol s = 0; s < p.alphabet().size(); ++s) {
                ++report.checked;
                Rational expected = table.value(a) * (*r.agreed_weights)[s];
                Rational actual = table.value(concat(a, {s}));
                if (expected != actual)
                    report.violations.push_back({a, s, expected, actual});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

Word sample_path(const GFunction& g, State start, std::uint64_t seed, std::size_t length)
{
    const SoficPresentation& p = g.presentation();
    if (length == 0)
        throw Error(ErrorKind::InvalidArgument, "sample length must be at least 1");
    if (start >= p.num_states())
        throw Error(ErrorKind::InvalidArgument, "unknown start state");
    // per state: cumulative thresholds u / 2^64 < num / den as (symbol, num * 2^64, den)
    const BigInt scale = BigInt(1) << 64;
    std::vector<std::vector<std::tuple<Symbol, BigInt, BigInt>>> cuts(p.num_states());
    for (State q = 0; q < p.num_states(); ++q) {
        Rational cum = 0;
        for (Symbol s = 0; s < p.alphabet().size(); ++s) {
            if (g.weight(q, s) == 0)
                continue;
            cum += g.weight(q, s);
            cuts[q].emplace_back(s, numerator(cum) * scale, denominator(cum));
        }
    }
    std::mt19937_64 rng(seed);
    Word out;
    out.reserve(length);
    State cur = start;
    for (std::size_t i = 0; i < length; ++i) {
        const BigInt u = rng();
        Symbol chosen = std::get<0>(cuts[cur].back());
        for (const auto& [s, num, den] : cuts[cur]) {
            if (u * den < num) {
                chosen = s;
                break;
            }
        }
        out.push_back(chosen);
        cur = p.next(cur, chosen);
    }
    return out;
}

} // namespace gshift
