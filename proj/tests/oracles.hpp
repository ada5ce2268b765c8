// oracles.hpp -- brute-force reference computations for the tests. They use
// only the raw edge table of a presentation (next()), never the calculus.

#ifndef GSHIFT_TESTS_ORACLES_HPP
#define GSHIFT_TESTS_ORACLES_HPP

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/gfunction.hpp"
#include "gshift/presentation.hpp"
#include "gshift/rational.hpp"

namespace oracle {

using gshift::Rational;
using gshift::SoficPresentation;
using gshift::State;
using gshift::Symbol;
using gshift::Word;

inline std::vector<Word> words(std::size_t k, std::size_t n)
{
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (Symbol s = 0; s < k; ++s) {
                Word v = w;
                v.push_back(s);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

/// End states of paths labeled w, from any state.
inline std::set<State> ends(const SoficPresentation& p, const Word& w)
{
    std::set<State> cur;
    for (State q = 0; q < p.num_states(); ++q)
        cur.insert(q);
    for (Symbol s : w) {
        std::set<State> next;
        for (State q : cur)
            if (p.next(q, s) != gshift::no_state)
                next.insert(p.next(q, s));
        cur = std::move(next);
    }
    return cur;
}

inline bool admissible(const SoficPresentation& p, const Word& w) { return !ends(p, w).empty(); }

/// Length-n words readable from some state of `from`.
inline std::set<Word> readable(const SoficPresentation& p, const std::set<State>& from, std::size_t n)
{
    std::set<Word> out;
    for (const Word& u : words(p.alphabet().size(), n)) {
        for (State q : from) {
            State cur = q;
            for (Symbol s : u) {
                cur = p.next(cur, s);
                if (cur == gshift::no_state)
                    break;
            }
            if (cur != gshift::no_state) {
                out.insert(u);
                break;
            }
        }
    }
    return out;
}

inline std::set<Word> gamma_plus(const SoficPresentation& p, const Word& a, std::size_t n)
{
    return readable(p, ends(p, a), n);
}

/// Intersection of Gamma^+_n(c a) over admissible left extensions c of length
/// 2^|Q| + n.
inline std::set<Word> omega_plus(const SoficPresentation& p, const Word& a, std::size_t n)
{
    const std::size_t len = (std::size_t{1} << p.num_states()) + n;
    std::set<std::set<State>> seen;
    std::optional<std::set<Word>> out;
    for (const Word& c : words(p.alphabet().size(), len)) {
        Word ca = gshift::concat(c, a);
        std::set<State> e = ends(p, ca);
        if (e.empty() || !seen.insert(e).second)
            continue;
        std::set<Word> g = readable(p, e, n);
        if (!out) {
            out = g;
        } else {
            std::set<Word> keep;
            for (const Word& w : *out)
                if (g.count(w))
                    keep.insert(w);
            out = std::move(keep);
        }
    }
    return out.value_or(std::set<Word>{});
}

/// omega^+_m of an eventually periodic past: union over suffix depths <= kmax.
inline std::set<Word> omega_of_past(const SoficPresentation& p, const gshift::EventuallyPeriodicPast& past,
                                    std::size_t m, std::size_t kmax)
{
    std::set<Word> out;
    for (std::size_t k = 0; k <= kmax; ++k)
        for (const Word& w : oracle::omega_plus(p, past.suffix(k), m))
            out.insert(w);
    return out;
}

/// Intersection over m in [n, bound] of the length-n prefixes of omega^+_m(past).
inline std::set<Word> omega_infinity_prefix(const SoficPresentation& p, const gshift::EventuallyPeriodicPast& past,
                                            std::size_t n, std::size_t bound, std::size_t kmax)
{
    std::optional<std::set<Word>> out;
    for (std::size_t m = n; m <= bound; ++m) {
        std::set<Word> prefixes;
        for (const Word& w : omega_of_past(p, past, m, kmax))
            prefixes.insert(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)));
        if (!out) {
            out = prefixes;
        } else {
            std::set<Word> keep;
            for (const Word& w : *out)
                if (prefixes.count(w))
                    keep.insert(w);
            out = std::move(keep);
        }
    }
    return *out;
}

/// Shortest a with |a| <= max_len, ab admissible and sigma in omega^+_1(ab).
inline std::optional<Word> d_witness(const SoficPresentation& p, const Word& b, Symbol sigma, std::size_t max_len)
{
    for (std::size_t len = 0; len <= max_len; ++len)
        for (const Word& a : words(p.alphabet().size(), len)) {
            Word ab = gshift::concat(a, b);
            if (admissible(p, ab) && oracle::omega_plus(p, ab, 1).count(Word{sigma}))
                return a;
        }
    return std::nullopt;
}

/// Stationary law of a two-state chain: pi_0 = P_10 / (P_01 + P_10).
inline std::vector<Rational> two_state_stationary(const Rational& p01, const Rational& p10)
{
    return {p10 / (p01 + p10), p01 / (p01 + p10)};
}

/// mu(C(a)) = sum_q init(q) * product of g along the a-path from q.
inline Rational path_mass(const gshift::GFunction& g, const std::vector<Rational>& init, const Word& a)
{
    const SoficPresentation& p = g.presentation();
    Rational total = 0;
    for (State q = 0; q < p.num_states(); ++q) {
        Rational prod = init[q];
        State cur = q;
        for (Symbol s : a) {
            if (prod == 0)
                break;
            State nx = p.next(cur, s);
            if (nx == gshift::no_state) {
                prod = 0;
                break;
            }
            prod *= g.weight(cur, s);
            cur = nx;
        }
        total += prod;
    }
    return total;
}

/// Dense solve in doubles (partial pivoting); small systems only.
inline std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c]))
                piv = r;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

/// Asymptotic variance of (1/N) * #{i : x_i = sigma} for the g-chain, computed
/// on the edge chain with the fundamental matrix Z = (I - P + 1 pi)^-1:
/// var = 2 <f, Z f>_pi - <f, f>_pi for centered f.
inline double symbol_asymptotic_variance(const gshift::GFunction& g, const std::vector<Rational>& pi_states,
                                         Symbol sigma)
{
    const SoficPresentation& p = g.presentation();
    struct E {
        State src, dst;
        Symbol s;
        double w;
    };
    std::vector<E> edges;
    for (const gshift::Edge& e : p.edges())
        if (g.weight(e.source, e.symbol) > 0)
            edges.push_back({e.source, e.target, e.symbol, g.weight(e.source, e.symbol).convert_to<double>()});
    const std::size_t n = edges.size();
    std::vector<double> pi(n), f(n);
    double mean = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pi[i] = pi_states[edges[i].src].convert_to<double>() * edges[i].w;
        f[i] = edges[i].s == sigma ? 1.0 : 0.0;
        mean += pi[i] * f[i];
    }
    for (double& x : f)
        x -= mean;
    // (I - P + 1 pi) z = f
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double pij = edges[j].src == edges[i].dst ? edges[j].w : 0.0;
            a[i][j] = (i == j ? 1.0 : 0.0) - pij + pi[j];
        }
    std::vector<double> z = solve(a, f);
    double fz = 0, ff = 0;
    for (std::size_t i = 0; i < n; ++i) {
        fz += pi[i] * f[i] * z[i];
        ff += pi[i] * f[i] * f[i];
    }
    return 2 * fz - ff;
}

} // namespace oracle

#endif // GSHIFT_TESTS_ORACLES_HPP
