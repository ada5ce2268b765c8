// catalog.cpp

#include "gshift/catalog.hpp"

#include <string>

#include "gshift/error.hpp"

namespace gshift::catalog {

namespace {

Alphabet digits(std::size_t k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        names.push_back(std::to_string(i));
    return Alphabet(names);
}

Rational r(long long p, long long q = 1) { return Rational(p, q); }

} // namespace

SoficPresentation full_shift(std::size_t k)
{
    std::vector<Edge> edges;
    for (Symbol s = 0; s < k; ++s)
        edges.push_back({0, s, 0});
    return SoficPresentation(digits(k), {"*"}, edges);
}

SoficPresentation golden_mean()
{
    return SoficPresentation(digits(2), {"A", "B"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
}

SoficPresentation even_shift()
{
    return SoficPresentation(digits(2), {"E", "O"}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
}

SoficPresentation reducible_no_d()
{
    return SoficPresentation(Alphabet({"a", "b", "c"}), {"p", "r", "s"},
                             {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 2, 2}, {2, 1, 0}});
}

GFunction bernoulli(const Rational& p)
{
    if (p <= 0 || p >= 1)
        throw Error(ErrorKind::InvalidArgument, "Bernoulli parameter must lie strictly between 0 and 1");
    return GFunction(full_shift(2), {{1 - p, p}});
}

GFunction golden_mean_g()
{
    return GFunction(golden_mean(), {{r(1, 2), r(1, 2)}, {r(1), r(0)}});
}

GFunction even_shift_g()
{
    return GFunction(even_shift(), {{r(1, 2), r(1, 2)}, {r(0), r(1)}});
}

} // namespace gshift::catalog
