#include <doctest.h>

#include "gshift/catalog.hpp"
#include "gshift/error.hpp"
#include "gshift/language.hpp"
#include "gshift/measure_graph.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gshift;
using th::R;

namespace {

MeasureVertex bern(const Rational& p) { return MeasureVertex::delta(make_carrier(catalog::bernoulli(p)), 0); }

} // namespace

TEST_SUITE("measure_graph")
{
    TEST_CASE("cylinder")
    {
        CHECK(cylinder(bern(R(1, 2)), Word{0, 1}) == R(1, 4));
        auto c = make_carrier(catalog::golden_mean_g());
        auto muA = MeasureVertex::delta(c, 0);
        CHECK(cylinder(muA, Word{1, 1}) == R(0));
        CHECK(cylinder(muA, Word{1, 0}) == R(1, 2));
        CHECK(cylinder(muA, Word{}) == R(1));
        CHECK_THROWS_AS(MeasureVertex(c, {R(1, 2), R(1, 3)}), Error);
    }

    TEST_CASE("tau_measure")
    {
        auto b = bern(R(1, 3));
        CHECK(tau_measure(b, 0) == b);
        CHECK(tau_measure(b, 1) == b);
        auto c = make_carrier(catalog::golden_mean_g());
        auto muA = MeasureVertex::delta(c, 0);
        auto muB = MeasureVertex::delta(c, 1);
        CHECK(tau_measure(muA, 1) == muB);
        CHECK(tau_measure(muA, 0) == muA);
        try {
            tau_measure(muB, 1);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroMass);
        }
    }

    TEST_CASE("tau formula holds exactly")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g()}) {
            auto c = make_carrier(g);
            MeasureVertex mu(c, {R(2, 5), R(3, 5)});
            for (Symbol s = 0; s < 2; ++s) {
                if (cylinder(mu, Word{s}) == 0)
                    continue;
                auto t = tau_measure(mu, s);
                for (std::size_t n = 0; n <= 6; ++n)
                    for (const Word& b : oracle::words(2, n))
                        CHECK(cylinder(t, b) * cylinder(mu, Word{s}) == cylinder(mu, concat({s}, b)));
            }
        }
    }

    TEST_CASE("dk_distance")
    {
        auto h = bern(R(1, 2));
        auto t = bern(R(1, 3));
        CHECK(dk_distance(h, h, 3) == 0);
        CHECK(dk_distance(h, t, 1) == R(1, 6));
        CHECK(dk_distance(h, t, 2) == R(7, 36));
        CHECK(dk_distance(t, h, 2) == dk_distance(h, t, 2));
        auto u = bern(R(1, 5));
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(dk_distance(h, u, k) <= dk_distance(h, t, k) + dk_distance(t, u, k));
        // zero at every k <= K iff the tables agree to depth K
        auto c = make_carrier(catalog::golden_mean_g());
        auto muA = MeasureVertex::delta(c, 0);
        auto mix = MeasureVertex(c, {R(1, 2), R(1, 2)});
        CHECK(dk_distance(muA, mix, 1) > 0);
        CHECK(dk_distance(muA, MeasureVertex::delta(c, 0), 4) == 0);
    }

    TEST_CASE("M_from_g")
    {
        auto golden = M_from_g(catalog::golden_mean_g());
        CHECK(golden.size() == 2);
        CHECK(golden.transition_complete());
        auto c = golden.member(0).carrier();
        CHECK(golden.find(MeasureVertex::delta(c, 0)));
        CHECK(golden.find(MeasureVertex::delta(c, 1)));
        CHECK(M_from_g(uniform(catalog::full_shift())).size() == 1);
        CHECK(M_from_g(catalog::even_shift_g()).size() == 2);
        // the presented subshift is the one of g
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g()}) {
            auto vg = vertex_graph(M_from_g(g));
            for (std::size_t n = 1; n <= 6; ++n)
                CHECK(language_words(vg, n) == language_words(g.presentation(), n));
        }
    }

    TEST_CASE("every member comes back from some past")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g()}) {
            auto set = M_from_g(g);
            for (const auto& [i, past] : anchors(set)) {
                auto got = m_of_past(set, past, default_resolution, default_epsilon);
                CHECK(std::find(got.begin(), got.end(), i) != got.end());
            }
        }
    }

    TEST_CASE("m_of_past")
    {
        auto set = M_from_g(catalog::golden_mean_g());
        auto c = set.member(0).carrier();
        std::size_t a = *set.find(MeasureVertex::delta(c, 0));
        std::size_t b = *set.find(MeasureVertex::delta(c, 1));
        CHECK(m_of_past(set, EventuallyPeriodicPast({0}), 4, default_epsilon) == std::vector<std::size_t>{a});
        CHECK(m_of_past(set, EventuallyPeriodicPast({0}, {1}), 4, default_epsilon) == std::vector<std::size_t>{b});
        auto full = M_from_g(uniform(catalog::full_shift()));
        for (const auto& p : enumerate_periodic_pasts(catalog::full_shift(), 2, 1))
            CHECK(m_of_past(full, p, 4, default_epsilon).size() == 1);
        auto even = M_from_g(catalog::even_shift_g());
        CHECK(m_of_past(even, EventuallyPeriodicPast({1}), 4, default_epsilon).size() == 2);
        CHECK_THROWS_AS(m_of_past(set, EventuallyPeriodicPast({1}), 4, default_epsilon), Error);
    }

    TEST_CASE("check_residually_contractive")
    {
        auto golden = check_residually_contractive(M_from_g(catalog::golden_mean_g()));
        CHECK(golden.cond_i);
        CHECK(golden.contractive());
        for (const auto& w : golden.cond_i_witnesses) {
            auto set = M_from_g(catalog::golden_mean_g());
            CHECK(tau_measure(set.member(w.source), w.alpha) == set.member(w.member));
        }
        auto full = check_residually_contractive(M_from_g(uniform(catalog::full_shift())));
        CHECK(full.contractive());
        for (const auto& s : full.samples)
            CHECK(s.in_d_infinity);
        auto even_set = M_from_g(catalog::even_shift_g());
        auto even = check_residually_contractive(even_set, 4, default_epsilon, {EventuallyPeriodicPast({1})});
        REQUIRE(even.samples.size() == 1);
        CHECK_FALSE(even.samples[0].in_d_infinity);
        REQUIRE_FALSE(even.samples[0].marginal_counts.empty());
        CHECK(even.samples[0].marginal_counts[0] == 2);
        // a set that is not transition complete
        auto c = make_carrier(catalog::golden_mean_g());
        VertexSet lone({MeasureVertex::delta(c, 0)}, {"mu_A"});
        CHECK_FALSE(lone.transition_complete());
        try {
            check_residually_contractive(lone);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotTransitionComplete);
        }
    }

    TEST_CASE("g and M round trip")
    {
        for (const auto& g : {catalog::golden_mean_g(), catalog::even_shift_g(), catalog::bernoulli(R(1, 3))}) {
            auto set = M_from_g(g);
            auto back = g_from_M(set);
            CHECK_FALSE(compare_g_functions(g, back, 5));
            CHECK(M_from_g(back).same_measures(set));
        }
        auto g = g_from_M(M_from_g(catalog::golden_mean_g()));
        CHECK(g_eval(g, Word{0}, 1) == R(1, 2));
        CHECK(g_eval(g, Word{1}, 0) == R(1));
    }
}
