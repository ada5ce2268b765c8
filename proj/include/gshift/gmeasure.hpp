// gmeasure.hpp -- stationary g-measures, exact verification, path sampling.

#ifndef GSHIFT_GMEASURE_HPP
#define GSHIFT_GMEASURE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gshift/gfunction.hpp"

namespace gshift {

/// Cylinder values of a shift-invariant measure on admissible words of
/// length <= depth. Absent words have value 0.
struct ShiftMeasureTable {
    Alphabet alphabet;
    std::size_t depth = 0;
    std::map<Word, Rational> values;

    Rational value(const Word& a) const;
};

/// Transition matrix P(V, tau(s)V) += g(V, s) of the vertex chain.
std::vector<std::vector<Rational>> vertex_chain(const GFunction& g);

/// Unique solution of pi P = pi, sum pi = 1. Throws Reducible unless the
/// positive-weight vertex chain is strongly connected.
std::vector<Rational> stationary_law(const GFunction& g);

/// value(a) = sum_V pi(V) * product of weights along the a-path from V.
ShiftMeasureTable stationary_g_measure(const GFunction& g, std::size_t depth);

/// value(a) = sum_s value(s a) = sum_s value(a s) and per-length
/// normalization, for all |a| < depth.
bool shift_invariant(const ShiftMeasureTable& table);

struct GMeasureViolation {
    Word a;
    Symbol alpha = 0;
    Rational expected; ///< value(a) * g(a, alpha)
    Rational actual;   ///< value(a alpha)
};

struct GMeasureReport {
    bool holds = true;
    std::size_t checked = 0;
    std::vector<GMeasureViolation> violations;
    /// Admissible words at which g is not defined; not checked.
    std::vector<Word> unresolved;
};

/// Checks value(a alpha) = value(a) g(a, alpha) for every admissible a with
/// 1 <= |a| <= depth that resolves. Throws DepthTooSmall unless
/// table.depth >= depth + 1.
GMeasureReport verify_g_measure(const GFunction& g, const ShiftMeasureTable& table, std::size_t depth);

/// Emits `length` symbols starting at vertex `start`, drawing each symbol
/// from the current weight row. Deterministic in `seed`.
Word sample_path(const GFunction& g, State start, std::uint64_t seed, std::size_t length);

} // namespace gshift

#endif // GSHIFT_GMEASURE_HPP
