#include <doctest.h>

#include "gshift/catalog.hpp"
#include "gshift/error.hpp"
#include "gshift/language.hpp"
#include "gshift/monoid.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gshift;
using th::fmt;

TEST_SUITE("core")
{
    TEST_CASE("alphabet parse and format")
    {
        Alphabet bin({"0", "1"});
        CHECK(bin.format(bin.parse("0110")) == "0110");
        CHECK(bin.parse("").empty());
        CHECK_THROWS_AS(bin.parse("012"), Error);
        Alphabet multi({"ab", "c"});
        CHECK_FALSE(multi.single_char());
        CHECK(multi.format(multi.parse("ab c ab")) == "ab c ab");
        CHECK_THROWS_AS(Alphabet({"0", "0"}), Error);
        CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
    }

    TEST_CASE("rationals render as p/q")
    {
        CHECK(to_string(th::R(2, 4)) == "1/2");
        CHECK(to_string(th::R(1)) == "1/1");
        CHECK(parse_rational("3/6") == th::R(1, 2));
        CHECK(parse_rational("0.45") == th::R(9, 20));
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("x"), Error);
    }

    TEST_CASE("eventually periodic pasts read right to left")
    {
        EventuallyPeriodicPast p({0, 1}, {1, 1});
        CHECK(p.at(0) == 1);
        CHECK(p.at(1) == 1);
        CHECK(p.at(2) == 1);
        CHECK(p.at(3) == 0);
        CHECK(p.suffix(5) == Word{1, 0, 1, 1, 1});
        CHECK(p.extended({0}).suffix(2) == Word{1, 0});
        CHECK_THROWS_AS(EventuallyPeriodicPast({}), Error);
    }

    TEST_CASE("normalize_past absorbs the tail and makes the cycle primitive")
    {
        Alphabet a({"0", "1"});
        auto n = normalize_past(EventuallyPeriodicPast({0, 1, 0, 1}, {0}));
        CHECK(format_past(a, n) == "(10)^inf");
        auto m = normalize_past(EventuallyPeriodicPast({1, 0}, {1}));
        CHECK(format_past(a, m) == "(01)^inf");
        // normalization never changes the ray
        for (std::size_t k = 0; k < 12; ++k)
            CHECK(EventuallyPeriodicPast({0, 1, 0, 1}, {0}).at(k) == n.at(k));
    }

    TEST_CASE("presentations enforce right resolution and essentiality")
    {
        Alphabet a({"0", "1"});
        CHECK_THROWS_AS(SoficPresentation(a, {"A"}, {{0, 0, 0}, {0, 0, 0}}), Error);
        // B has no way in
        CHECK_THROWS_AS(SoficPresentation(a, {"A", "B"}, {{0, 0, 0}, {1, 1, 0}}), Error);
        auto trimmed = SoficPresentation::essential_part(a, {"A", "B"}, {{0, 0, 0}, {1, 1, 0}});
        CHECK(trimmed.num_states() == 1);
        CHECK_THROWS_AS(SoficPresentation::essential_part(a, {"A", "B"}, {{0, 0, 1}}), Error);
    }

    TEST_CASE("language_words")
    {
        auto full = catalog::full_shift();
        CHECK(fmt(full.alphabet(), language_words(full, 2)) == std::vector<std::string>{"00", "01", "10", "11"});
        auto golden = catalog::golden_mean();
        CHECK(fmt(golden.alphabet(), language_words(golden, 2)) == std::vector<std::string>{"00", "01", "10"});
        auto even = catalog::even_shift();
        auto w3 = fmt(even.alphabet(), language_words(even, 3));
        CHECK(std::find(w3.begin(), w3.end(), "010") == w3.end());
        CHECK(w3.size() == 7);
        // path enumeration oracle
        for (const auto& pres : {golden, even, full})
            for (std::size_t n = 0; n <= 6; ++n) {
                std::set<Word> brute;
                for (const Word& w : oracle::words(pres.alphabet().size(), n))
                    if (oracle::admissible(pres, w))
                        brute.insert(w);
                CHECK(th::as_set(language_words(pres, n)) == brute);
            }
    }

    TEST_CASE("every admissible word extends both ways")
    {
        for (const auto& pres : {catalog::golden_mean(), catalog::even_shift(), catalog::reducible_no_d()})
            for (std::size_t n = 1; n <= 5; ++n)
                for (const Word& w : language_words(pres, n)) {
                    CHECK_FALSE(extension_set(pres, w, 1, Direction::Forward).empty());
                    CHECK_FALSE(extension_set(pres, w, 1, Direction::Backward).empty());
                }
    }

    TEST_CASE("extension_set")
    {
        auto golden = catalog::golden_mean();
        const Alphabet& a = golden.alphabet();
        CHECK(fmt(a, extension_set(golden, a.parse("1"), 1, Direction::Forward)) == std::vector<std::string>{"0"});
        CHECK(fmt(a, extension_set(golden, a.parse("0"), 2, Direction::Forward))
              == std::vector<std::string>{"00", "01", "10"});
        auto even = catalog::even_shift();
        CHECK(fmt(a, extension_set(even, a.parse("01"), 1, Direction::Backward))
              == std::vector<std::string>{"0", "1"});
        CHECK_THROWS_AS(extension_set(golden, a.parse("11"), 1, Direction::Forward), Error);
        // projection to n-1 agrees with the shorter extension set
        for (const Word& w : language_words(even, 3)) {
            std::set<Word> cut;
            for (Word b : extension_set(even, w, 3, Direction::Forward)) {
                b.pop_back();
                cut.insert(b);
            }
            CHECK(cut == th::as_set(extension_set(even, w, 2, Direction::Forward)));
        }
    }

    TEST_CASE("sft_to_presentation")
    {
        Alphabet a({"0", "1"});
        auto full = sft_to_presentation({a, {}});
        CHECK(full.num_states() == 1);
        auto golden = sft_to_presentation({a, {{1, 1}}});
        CHECK(golden.num_states() == 2);
        CHECK(same_language(golden, catalog::golden_mean()));
        auto alt = sft_to_presentation({a, {{0, 0}, {1, 1}}});
        CHECK(alt.num_states() == 2);
        CHECK(fmt(a, language_words(alt, 3)) == std::vector<std::string>{"010", "101"});
        CHECK_THROWS_AS(sft_to_presentation({a, {{0}, {1}}}), Error);
        // direct filtering oracle for a memory-3 SFT
        SftSpec spec{a, {{1, 1, 1}, {0, 1, 0}}};
        auto p = sft_to_presentation(spec);
        for (std::size_t n = 0; n <= 6; ++n) {
            std::set<Word> allowed;
            for (const Word& w : oracle::words(2, n)) {
                bool ok = true;
                for (const Word& f : spec.forbidden)
                    for (std::size_t i = 0; ok && i + f.size() <= w.size(); ++i)
                        ok = !std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i));
                // bi-infinite extendability: keep words that sit inside a longer allowed word
                if (ok)
                    allowed.insert(w);
            }
            std::set<Word> got = th::as_set(language_words(p, n));
            for (const Word& w : got)
                CHECK(allowed.count(w));
        }
    }

    TEST_CASE("higher_block")
    {
        auto golden = catalog::golden_mean();
        auto hb = higher_block(golden, 2);
        CHECK(hb.pres.alphabet().size() == 3);
        CHECK(hb.pres.num_states() == 3);
        for (std::size_t n = 2; n <= 7; ++n)
            for (const Word& w : language_words(golden, n)) {
                Word coded = hb.encode(w);
                CHECK(coded.size() == n - 1);
                CHECK(hb.pres.accepts(coded));
                CHECK(hb.decode(coded) == w);
            }
        auto full = higher_block(catalog::full_shift(), 2);
        CHECK(full.pres.alphabet().size() == 4);
        auto same = higher_block(golden, 1);
        CHECK(same_language(same.pres, golden));
    }

    TEST_CASE("language_difference")
    {
        CHECK_FALSE(language_difference(catalog::golden_mean(), catalog::golden_mean()));
        auto d = language_difference(catalog::golden_mean(), catalog::full_shift());
        REQUIRE(d);
        CHECK(*d == Word{1, 1});
        CHECK_THROWS_AS(language_difference(catalog::golden_mean(), catalog::full_shift(3)), Error);
    }

    TEST_CASE("enumerate_periodic_pasts lists admissible normalized pasts once")
    {
        auto even = catalog::even_shift();
        auto pasts = enumerate_periodic_pasts(even, 2, 2);
        std::set<std::string> seen;
        for (const auto& p : pasts) {
            CHECK(past_admissible(even, p));
            CHECK(normalize_past(p) == p);
            CHECK(seen.insert(format_past(even.alphabet(), p)).second);
        }
        CHECK_FALSE(past_admissible(even, EventuallyPeriodicPast({0}, {1, 0})));
        CHECK_THROWS_AS(require_admissible(catalog::golden_mean(), EventuallyPeriodicPast({1})), Error);
    }

    TEST_CASE("limit images of the transition monoid")
    {
        auto even = catalog::even_shift();
        auto imgs = limit_images(even.num_states(), even.letter_maps());
        std::set<std::vector<State>> sets;
        for (const auto& li : imgs) {
            sets.insert(li.image.members());
            // the witness past really ends in that set: read a long suffix
            StateSet cur = even.all_states();
            cur = even.image(cur, li.witness.suffix(24));
            CHECK(cur == li.image);
        }
        CHECK(sets == std::set<std::vector<State>>{{0}, {1}, {0, 1}});
    }
}
