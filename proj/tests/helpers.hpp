// helpers.hpp -- small conveniences shared by the unit tests.

#ifndef GSHIFT_TESTS_HELPERS_HPP
#define GSHIFT_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/rational.hpp"

namespace th {

inline gshift::Rational R(long long p, long long q = 1) { return gshift::Rational(p, q); }

/// Formats a list of words, e.g. {"00", "01"}.
inline std::vector<std::string> fmt(const gshift::Alphabet& a, const std::vector<gshift::Word>& ws)
{
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(a.format(w));
    return out;
}

inline std::set<gshift::Word> as_set(const std::vector<gshift::Word>& ws) { return {ws.begin(), ws.end()}; }

inline std::string data(const std::string& file) { return std::string(GSHIFT_DATA_DIR) + "/" + file; }

} // namespace th

#endif // GSHIFT_TESTS_HELPERS_HPP
