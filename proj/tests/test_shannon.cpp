#include <doctest.h>

#include "gshift/catalog.hpp"
#include "gshift/error.hpp"
#include "gshift/language.hpp"
#include "gshift/shannon.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gshift;
using th::fmt;

namespace {

std::vector<std::string> family_names(const SoficPresentation& p)
{
    std::vector<std::string> out;
    for (const auto& li : limit_family(p))
        out.push_back(format_state_set(p, li.image));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> omega1(const SoficPresentation& p, const std::string& a)
{
    return fmt(p.alphabet(), omega_plus(p, p.alphabet().parse(a), 1));
}

} // namespace

TEST_SUITE("shannon")
{
    TEST_CASE("follower_separate")
    {
        Alphabet a({"0", "1"});
        SoficPresentation twin(a, {"P", "Q"}, {{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}});
        CHECK(follower_separate(twin).num_states() == 1);
        auto golden = catalog::golden_mean();
        CHECK(follower_separate(golden).num_states() == 2);
        CHECK(follower_separate(catalog::even_shift()).num_states() == 2);
        auto once = follower_separate(twin);
        CHECK(follower_separate(once).num_states() == once.num_states());
        CHECK(same_language(once, twin));
    }

    TEST_CASE("limit_family")
    {
        CHECK(family_names(catalog::full_shift()) == std::vector<std::string>{"{*}"});
        CHECK(family_names(catalog::golden_mean()) == std::vector<std::string>{"{A}", "{B}"});
        CHECK(family_names(catalog::even_shift()) == std::vector<std::string>{"{E,O}", "{E}", "{O}"});
    }

    TEST_CASE("limit_family is contained in the collection iteration")
    {
        for (const auto& p : {catalog::golden_mean(), catalog::even_shift(), catalog::reducible_no_d()}) {
            auto by_collections = limit_family_by_collections(p);
            for (const auto& li : limit_family(p))
                CHECK(std::find(by_collections.begin(), by_collections.end(), li.image) != by_collections.end());
        }
    }

    TEST_CASE("omega_plus examples")
    {
        auto full = catalog::full_shift();
        CHECK(omega1(full, "0110") == std::vector<std::string>{"0", "1"});
        auto golden = catalog::golden_mean();
        CHECK(omega1(golden, "1") == std::vector<std::string>{"0"});
        auto even = catalog::even_shift();
        CHECK(omega1(even, "1") == std::vector<std::string>{"1"});
        CHECK(omega1(even, "011") == std::vector<std::string>{"0", "1"});
        CHECK_THROWS_AS(omega_plus(golden, {1, 1}, 1), Error);
        CHECK_THROWS_AS(omega_plus(golden, {1}, 0), Error);
    }

    TEST_CASE("omega_plus grows under left extension and sits inside gamma")
    {
        for (const auto& p : {catalog::golden_mean(), catalog::even_shift()}) {
            OmegaCalculus calc(p);
            for (std::size_t len = 0; len <= 5; ++len)
                for (const Word& a : language_words(p, len))
                    for (std::size_t n = 1; n <= 2; ++n) {
                        auto om = th::as_set(calc.omega_plus(a, n));
                        auto gamma = th::as_set(extension_set(p, a, n, Direction::Forward));
                        for (const Word& w : om)
                            CHECK(gamma.count(w));
                        for (Symbol c = 0; c < p.alphabet().size(); ++c) {
                            Word ca = concat({c}, a);
                            if (!p.accepts(ca))
                                continue;
                            auto bigger = th::as_set(calc.omega_plus(ca, n));
                            for (const Word& w : om)
                                CHECK(bigger.count(w));
                        }
                    }
        }
    }

    TEST_CASE("omega equals gamma for SFTs past the memory")
    {
        auto golden = catalog::golden_mean();
        for (std::size_t len = 1; len <= 5; ++len)
            for (const Word& a : language_words(golden, len))
                CHECK(th::as_set(omega_plus(golden, a, 2))
                      == th::as_set(extension_set(golden, a, 2, Direction::Forward)));
    }

    TEST_CASE("omega_past examples")
    {
        auto full = catalog::full_shift();
        for (auto mode : {OmegaMode::Omega, OmegaMode::OmegaInfinity})
            CHECK(omega_past(full, EventuallyPeriodicPast({0, 1}), 2, mode).words.size() == 4);
        auto golden = catalog::golden_mean();
        CHECK(fmt(golden.alphabet(), omega_past(golden, EventuallyPeriodicPast({0}), 1, OmegaMode::Omega).words)
              == std::vector<std::string>{"0", "1"});
        auto even = catalog::even_shift();
        auto r = omega_past(even, EventuallyPeriodicPast({1}), 1, OmegaMode::OmegaInfinity);
        std::set<Word> brute = oracle::omega_infinity_prefix(even, EventuallyPeriodicPast({1}), 1, r.stabilization, 12);
        CHECK(th::as_set(r.words) == brute);
        CHECK(fmt(even.alphabet(), r.words) == std::vector<std::string>{"1"});
        CHECK_THROWS_AS(omega_past(golden, EventuallyPeriodicPast({1}), 1, OmegaMode::Omega), Error);
    }

    TEST_CASE("omega mode equals the union over suffix depths")
    {
        for (const auto& p : {catalog::golden_mean(), catalog::even_shift()}) {
            for (const auto& past : enumerate_periodic_pasts(p, 2, 2))
                for (std::size_t n = 1; n <= 2; ++n) {
                    auto r = omega_past(p, past, n, OmegaMode::Omega);
                    CHECK(th::as_set(r.words) == oracle::omega_of_past(p, past, n, std::max<std::size_t>(10, r.suffix_depth)));
                }
        }
    }

    TEST_CASE("nonempty omega-infinity prefixes iff nonempty omega sets")
    {
        for (const auto& p : {catalog::golden_mean(), catalog::even_shift()})
            for (const auto& past : enumerate_periodic_pasts(p, 2, 2))
                for (std::size_t n = 1; n <= 3; ++n) {
                    bool inf = !omega_past(p, past, n, OmegaMode::OmegaInfinity).words.empty();
                    bool all = true;
                    for (std::size_t m = 1; m <= n; ++m)
                        all = all && !omega_past(p, past, m, OmegaMode::Omega).words.empty();
                    CHECK(inf == all);
                }
    }

    TEST_CASE("check_property_D")
    {
        auto full = check_property_D(catalog::full_shift());
        CHECK(full.holds);
        for (const auto& c : full.certificates)
            CHECK(c.a.empty());
        auto golden = check_property_D(catalog::golden_mean());
        CHECK(golden.holds);
        auto even = catalog::even_shift();
        OmegaCalculus calc(even);
        CHECK(calc.has_property_D());
        // ("1", "0") needs a left extension
        auto w = calc.find_witness_bounded({1}, 0, 6);
        REQUIRE(w);
        CHECK(th::as_set(calc.omega_plus(concat(*w, {1}), 1)).count(Word{0}));
        CHECK(oracle::d_witness(even, {1}, 0, 6).has_value());
        auto bad = check_property_D(catalog::reducible_no_d());
        CHECK_FALSE(bad.holds);
        REQUIRE(bad.counterexample);
        CHECK_FALSE(oracle::d_witness(catalog::reducible_no_d(), bad.counterexample->b, bad.counterexample->sigma, 6));
    }

    TEST_CASE("property (D) iff every admissible window has a passing extension")
    {
        for (const auto& p : {catalog::golden_mean(), catalog::even_shift(), catalog::reducible_no_d()}) {
            OmegaCalculus calc(p);
            bool every = true;
            for (std::size_t len = 1; len <= 3; ++len)
                for (const Word& bs : language_words(p, len)) {
                    bool found = false;
                    for (std::size_t k = 0; k <= 4 && !found; ++k)
                        for (const Word& a : oracle::words(p.alphabet().size(), k)) {
                            Word w = concat(a, bs);
                            if (p.accepts(w) && calc.e_window_membership(w, w.size() - 1)) {
                                found = true;
                                break;
                            }
                        }
                    every = every && found;
                }
            CHECK(every == calc.has_property_D());
        }
    }

    TEST_CASE("e_window_membership")
    {
        Alphabet a({"0", "1"});
        CHECK(e_window_membership(catalog::full_shift(), a.parse("01"), 1));
        CHECK(e_window_membership(catalog::even_shift(), a.parse("11"), 1));
        CHECK_FALSE(e_window_membership(catalog::even_shift(), a.parse("10"), 1));
        CHECK_THROWS_AS(e_window_membership(catalog::golden_mean(), a.parse("11"), 1), Error);
    }

    TEST_CASE("build_GD")
    {
        auto full = build_GD(catalog::full_shift(), 3);
        CHECK(full.graph.num_states() == 1);
        auto golden = build_GD(catalog::golden_mean(), 4);
        CHECK(golden.graph.num_states() == 2);
        CHECK(same_language(golden.graph, catalog::golden_mean()));
        auto even = build_GD(catalog::even_shift(), 4);
        std::vector<std::string> sets;
        for (const auto& s : even.vertex_sets)
            sets.push_back(format_state_set(catalog::even_shift(), s));
        CHECK(sets == std::vector<std::string>{"{E}", "{O}"});
        for (std::size_t n = 1; n <= 4; ++n)
            CHECK(language_words(even.graph, n) == language_words(catalog::even_shift(), n));
        CHECK_THROWS_AS(build_GD(catalog::reducible_no_d(), 3), Error);
    }
}
