#include <doctest.h>

#include <functional>

#include "gshift/catalog.hpp"
#include "gshift/error.hpp"
#include "gshift/gfunction.hpp"
#include "gshift/language.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gshift;
using th::R;

namespace {

bool is_error(ErrorKind kind, const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_SUITE("gfunction")
{
    TEST_CASE("construction validates the weights")
    {
        auto golden = catalog::golden_mean();
        CHECK(is_error(ErrorKind::InvariantViolation, [&] { GFunction(golden, {{R(1, 2), R(1, 3)}, {R(1), R(0)}}); }));
        CHECK(is_error(ErrorKind::InvariantViolation, [&] { GFunction(golden, {{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}}); }));
        CHECK(is_error(ErrorKind::InvariantViolation, [&] { GFunction(golden, {{R(3, 2), R(-1, 2)}, {R(1), R(0)}}); }));
        CHECK(is_error(ErrorKind::InvariantViolation, [&] { GFunction(golden, {{R(1)}}); }));
        CHECK(is_error(ErrorKind::PropertyDFailed, [&] { uniform(catalog::reducible_no_d()); }));
        // uniform weights exist for every presentation with (D)
        for (const auto& p : {catalog::full_shift(), catalog::full_shift(3), golden, catalog::even_shift()})
            CHECK_NOTHROW(uniform(p));
    }

    TEST_CASE("resolve")
    {
        auto golden = catalog::golden_mean_g();
        auto r = resolve(golden, Word{0});
        CHECK(r.candidates.members() == std::vector<State>{0});
        CHECK(r.resolved());
        auto even = catalog::even_shift_g();
        auto one = resolve(even, Word{1});
        CHECK(one.candidates.members() == std::vector<State>{0, 1});
        CHECK_FALSE(one.resolved());
        auto zero = resolve(even, Word{0});
        CHECK(zero.candidates.members() == std::vector<State>{0});
        CHECK(zero.resolved());
        CHECK(is_error(ErrorKind::NotAdmissible, [&] { resolve(golden, Word{1, 1}); }));
        CHECK_FALSE(resolve(even, EventuallyPeriodicPast({1})).resolved());
        CHECK(resolve(even, EventuallyPeriodicPast({1}, {0})).resolved());
    }

    TEST_CASE("once resolved, always resolved")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g()}) {
            const auto& p = g.presentation();
            for (std::size_t n = 1; n <= 6; ++n)
                for (const Word& a : language_words(p, n)) {
                    auto r = resolve(g, a);
                    if (r.candidates.size() != 1)
                        continue;
                    State v = r.candidates.members().front();
                    for (Symbol s = 0; s < p.alphabet().size(); ++s) {
                        if (p.next(v, s) == no_state)
                            continue;
                        auto next = resolve(g, concat(a, {s}));
                        CHECK(next.candidates.members() == std::vector<State>{p.next(v, s)});
                    }
                }
        }
    }

    TEST_CASE("g_eval")
    {
        auto g = catalog::golden_mean_g();
        CHECK(g_eval(g, Word{0}, 1) == R(1, 2));
        CHECK(g_eval(g, Word{1}, 0) == R(1));
        CHECK(g_eval(g, Word{1}, 1) == R(0));
        CHECK(g_eval(g, Word{0}, 0) + g_eval(g, Word{0}, 1) == R(1));
        auto even = catalog::even_shift_g();
        CHECK(is_error(ErrorKind::Undefined, [&] { g_eval(even, Word{1}, 0); }));
        CHECK(is_error(ErrorKind::NotAdmissible, [&] { g_eval(g, Word{1, 1}, 0); }));
    }

    TEST_CASE("positive weight implies omega membership")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g()}) {
            const auto& p = g.presentation();
            for (const auto& past : enumerate_periodic_pasts(p, 2, 2)) {
                if (!resolve(g, past).resolved())
                    continue;
                auto om = th::as_set(omega_past(p, past, 1, OmegaMode::Omega).words);
                for (Symbol s = 0; s < p.alphabet().size(); ++s)
                    if (g_eval(g, past, s) > 0)
                        CHECK(om.count(Word{s}));
            }
        }
    }

    TEST_CASE("mu_g_cylinder")
    {
        auto g = catalog::golden_mean_g();
        CHECK(mu_g_cylinder(g, Word{0}, Word{0, 1}) == R(1, 4));
        CHECK(mu_g_cylinder(g, Word{0}, Word{1, 0}) == R(1, 2));
        CHECK(mu_g_cylinder(g, Word{0}, Word{1, 1}) == R(0));
        CHECK(mu_g_cylinder(g, Word{0}, Word{}) == R(1));
    }

    TEST_CASE("cylinder tables are normalized and prefix consistent")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g(), catalog::bernoulli(R(1, 3))}) {
            const auto& p = g.presentation();
            for (const auto& past : enumerate_periodic_pasts(p, 2, 2)) {
                if (!resolve(g, past).resolved())
                    continue;
                auto t = cylinder_table(g, past, 4);
                for (std::size_t k = 1; k <= 4; ++k) {
                    Rational total = 0;
                    for (const auto& [w, v] : t.values)
                        if (w.size() == k)
                            total += v;
                    CHECK(total == 1);
                }
                for (const auto& [w, v] : t.values) {
                    CHECK(v >= 0);
                    CHECK(v <= 1);
                    if (w.size() == 4)
                        continue;
                    Rational sum = 0;
                    for (Symbol s = 0; s < p.alphabet().size(); ++s) {
                        auto it = t.values.find(concat(w, {s}));
                        if (it != t.values.end())
                            sum += it->second;
                    }
                    CHECK(sum == v);
                }
            }
        }
    }

    TEST_CASE("eg_membership")
    {
        auto g = catalog::golden_mean_g();
        CHECK(eg_membership(g, EventuallyPeriodicPast({0}), Word{0, 0, 0}, 3));
        // zero weight on the edge A -1-> B
        GFunction stuck(catalog::golden_mean(), {{R(1), R(0)}, {R(1), R(0)}});
        CHECK_FALSE(eg_membership(stuck, EventuallyPeriodicPast({0}), Word{0, 1, 0}, 2));
        CHECK(eg_membership(stuck, EventuallyPeriodicPast({0}), Word{0, 0}, 2));
        auto even = catalog::even_shift_g();
        CHECK_FALSE(eg_membership(even, EventuallyPeriodicPast({1}), Word{1}, 2));
        CHECK(is_error(ErrorKind::NotAdmissible, [&] { eg_membership(g, EventuallyPeriodicPast({1}), Word{0}, 1); }));
    }
}
