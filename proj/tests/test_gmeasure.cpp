#include <doctest.h>

#include <cmath>

#include "gshift/catalog.hpp"
#include "gshift/error.hpp"
#include "gshift/gmeasure.hpp"
#include "gshift/language.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gshift;
using th::R;

TEST_SUITE("gmeasure")
{
    TEST_CASE("stationary law of the golden mean chain")
    {
        auto g = catalog::golden_mean_g();
        CHECK(stationary_law(g) == oracle::two_state_stationary(R(1, 2), R(1)));
        auto t = stationary_g_measure(g, 4);
        CHECK(t.value(Word{0}) == R(2, 3));
        CHECK(t.value(Word{1}) == R(1, 3));
        CHECK(t.value(Word{1, 1}) == R(0));
        CHECK(t.value(Word{}) == R(1));
    }

    TEST_CASE("table values match the path product oracle")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g(), catalog::bernoulli(R(1, 3))}) {
            auto pi = stationary_law(g);
            auto t = stationary_g_measure(g, 5);
            for (std::size_t n = 0; n <= 5; ++n)
                for (const Word& a : oracle::words(g.presentation().alphabet().size(), n))
                    CHECK(t.value(a) == oracle::path_mass(g, pi, a));
            CHECK(shift_invariant(t));
        }
    }

    TEST_CASE("uniform full shift gives 2^-|a|")
    {
        auto t = stationary_g_measure(uniform(catalog::full_shift()), 5);
        for (std::size_t n = 0; n <= 5; ++n)
            for (const Word& a : oracle::words(2, n))
                CHECK(t.value(a) == Rational(1, 1 << n));
        CHECK(verify_g_measure(catalog::bernoulli(R(1, 2)), t, 4).holds);
    }

    TEST_CASE("verify_g_measure")
    {
        auto g = catalog::golden_mean_g();
        auto t = stationary_g_measure(g, 5);
        auto ok = verify_g_measure(g, t, 4);
        CHECK(ok.holds);
        CHECK(ok.checked > 0);
        CHECK(ok.violations.empty());
        auto bad = t;
        bad.values[Word{0, 1}] += R(1, 100);
        auto rep = verify_g_measure(g, bad, 4);
        CHECK_FALSE(rep.holds);
        bool at01 = false;
        for (const auto& v : rep.violations)
            at01 = at01 || (v.a == Word{0} && v.alpha == 1) || v.a == Word{0, 1};
        CHECK(at01);
        // every depth below the table depth
        auto even = catalog::even_shift_g();
        auto te = stationary_g_measure(even, 6);
        for (std::size_t d = 0; d <= 5; ++d)
            CHECK(verify_g_measure(even, te, d).holds);
    }

    TEST_CASE("reducible chains are rejected")
    {
        GFunction g(catalog::golden_mean(), {{R(1), R(0)}, {R(1), R(0)}});
        CHECK_THROWS_AS(stationary_law(g), Error);
        try {
            stationary_g_measure(g, 2);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Reducible);
        }
    }

    TEST_CASE("sample_path")
    {
        auto g = catalog::golden_mean_g();
        auto a = sample_path(g, 0, 7, 200);
        CHECK(a == sample_path(g, 0, 7, 200));
        CHECK(a.size() == 200);
        CHECK(g.presentation().accepts(a));
        CHECK(sample_path(g, 0, 7, 1).size() == 1);
        CHECK_THROWS_AS(sample_path(g, 0, 7, 0), Error);
        GFunction stuck(catalog::golden_mean(), {{R(1), R(0)}, {R(1), R(0)}});
        for (Symbol s : sample_path(stuck, 0, 3, 50))
            CHECK(s == 0);
        const std::size_t n = 100000;
        auto long_path = sample_path(g, 0, 11, n);
        double ones = 0;
        for (Symbol s : long_path)
            ones += s == 1 ? 1 : 0;
        double var = oracle::symbol_asymptotic_variance(g, stationary_law(g), 1);
        CHECK(std::fabs(ones / n - 1.0 / 3) <= 3 * std::sqrt(var / n));
    }
}
