#include "doctest.h"

#include "cycont/error.hpp"
#include "cycont/words.hpp"
#include "oracles.hpp"

using namespace cycont;
using oracle::word;

namespace {

std::string fmt(const Word& w) { return Alphabet::letters(26).format(w); }
std::string fmt(const CyclicWord& w) { return fmt(w.canonical()); }

Ordering key_order(const oracle::Sym& u, const oracle::Sym& v, bool alt) {
    if (u == v) return Ordering::Equal;
    return oracle::precedes(u, v, alt) ? Ordering::Less : Ordering::Greater;
}

}  // namespace

TEST_CASE("reverse") {
    CHECK(fmt(reverse(word("abc"))) == "cba");
    CHECK(reverse(Word{}).empty());
    CHECK(fmt(reverse(word("aab"))) == "baa");
    oracle::for_each_word(5, 3, [](const oracle::Sym& s) {
        Word w(s);
        CHECK(reverse(reverse(w)) == w);
    });
}

TEST_CASE("reverse_cyclic") {
    CHECK(fmt(reverse_cyclic(canonicalize(word("ab")))) == "ab");
    CHECK(fmt(reverse_cyclic(canonicalize(word("aab")))) == "aab");
    CHECK(reverse_cyclic(canonicalize(word("aabab"))) == canonicalize(word("babaa")));
    // independent of the representative, and an involution
    oracle::for_each_word(6, 3, [](const oracle::Sym& s) {
        auto w = canonicalize(Word(s));
        auto expected = oracle::min_rotation(oracle::reversed(s));
        for (std::size_t r = 0; r < s.size(); ++r)
            CHECK(reverse_cyclic(canonicalize(Word(oracle::rotate(s, r)))).canonical().symbols() == expected);
        CHECK(reverse_cyclic(reverse_cyclic(w)) == w);
    });
}

TEST_CASE("compare_lex examples") {
    CHECK(compare_lex(word("ab"), word("ac")) == Ordering::Less);
    CHECK(compare_lex(word("aba"), word("ab")) == Ordering::Less);
    CHECK(compare_lex(word("ab"), word("aba")) == Ordering::Greater);
    CHECK(compare_lex(word("ab"), word("ab")) == Ordering::Equal);
}

TEST_CASE("compare_alt examples") {
    CHECK(compare_alt(word("ab"), word("ac")) == Ordering::Greater);
    CHECK(compare_alt(word("ba"), word("aa")) == Ordering::Greater);
    CHECK(compare_alt(word("abab"), word("ab")) == Ordering::Less);
    CHECK(compare_alt(word("aba"), word("a")) == Ordering::Greater);
    CHECK(compare_alt(word("ab"), word("abab")) == Ordering::Greater);
}

TEST_CASE("orders agree with key oracle on all pairs up to length 4") {
    std::vector<oracle::Sym> all;
    for (std::size_t n = 0; n <= 4; ++n) oracle::for_each_word(n, 3, [&](const oracle::Sym& s) { all.push_back(s); });
    for (const auto& u : all)
        for (const auto& v : all) {
            CHECK(compare_lex(u, v) == key_order(u, v, false));
            CHECK(compare_alt(u, v) == key_order(u, v, true));
            CHECK(compare_lex(v, u) == flip(compare_lex(u, v)));
            CHECK(compare_alt(v, u) == flip(compare_alt(u, v)));
        }
}

TEST_CASE("compare_lex agrees with dictionary order on equal lengths") {
    oracle::for_each_word(3, 3, [](const oracle::Sym& u) {
        oracle::for_each_word(3, 3, [&](const oracle::Sym& v) {
            Ordering dict = u < v ? Ordering::Less : u == v ? Ordering::Equal : Ordering::Greater;
            CHECK(compare_lex(u, v) == dict);
        });
    });
}

TEST_CASE("non-palindromes never compare equal to their reversal") {
    for (std::size_t n = 1; n <= 7; ++n)
        oracle::for_each_word(n, 3, [](const oracle::Sym& u) {
            Word w(u);
            if (w.is_palindrome()) {
                CHECK(compare_with_reverse(u, OrderKind::Plain) == Ordering::Equal);
                return;
            }
            CHECK(compare_lex(w, w.reversed()) != Ordering::Equal);
            CHECK(compare_with_reverse(u, OrderKind::Plain) == compare_lex(w, w.reversed()));
            CHECK(compare_with_reverse(u, OrderKind::Alt) == compare_alt(w, w.reversed()));
        });
}

TEST_CASE("value links of the orders") {
    // Over values >= 2 and equal lengths: u ≺_alt v iff [u] > [v], and
    // u ≺ v iff [u]• > [v]•.
    auto alphabet = Alphabet::letters(3, std::vector<std::uint64_t>{2, 3, 4});
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<oracle::Sym> words;
        oracle::for_each_word(n, 3, [&](const oracle::Sym& s) { words.push_back(s); });
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u == v) continue;
                auto cu = cf_value(Word(u), alphabet, ContinuantKind::Regular);
                auto cv = cf_value(Word(v), alphabet, ContinuantKind::Regular);
                CHECK((compare_alt(u, v) == Ordering::Less) == (cu > cv));
                auto su = cf_value(Word(u), alphabet, ContinuantKind::Semiregular);
                auto sv = cf_value(Word(v), alphabet, ContinuantKind::Semiregular);
                CHECK((compare_lex(u, v) == Ordering::Less) == (su > sv));
            }
    }
}

TEST_CASE("parikh") {
    CHECK(parikh(word("abbcacad"), 4) == ParikhVector{3, 2, 2, 1});
    CHECK(parikh(word("acbcbcbcadad"), 4) == ParikhVector{3, 3, 4, 2});
    CHECK(parikh(Word{}, 3).is_zero());
    auto w = word("abbcacad");
    CHECK(parikh(w.reversed(), 4) == parikh(w, 4));
    CHECK(parikh(w.rotated(3), 4) == parikh(w, 4));
}

TEST_CASE("canonicalize") {
    CHECK(fmt(canonicalize(word("bca"))) == "abc");
    CHECK(fmt(canonicalize(word("aaaa"))) == "aaaa");
    CHECK(fmt(canonicalize(word("cdd"))) == "cdd");
    CHECK_THROWS_AS(canonicalize(Word{}), DomainError);
    for (std::size_t n = 1; n <= 8; ++n)
        oracle::for_each_word(n, 2, [](const oracle::Sym& s) {
            CHECK(canonicalize(Word(s)).canonical().symbols() == oracle::min_rotation(s));
        });
}

TEST_CASE("least_rotation returns the first minimal start") {
    oracle::for_each_word(6, 2, [](const oracle::Sym& s) {
        std::size_t expect = 0;
        for (std::size_t r = 1; r < s.size(); ++r)
            if (oracle::rotate(s, r) < oracle::rotate(s, expect)) expect = r;
        CHECK(least_rotation(s) == expect);
    });
}

TEST_CASE("enumerate_class examples") {
    auto names = [](const ParikhVector& v) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_class(v)) out.push_back(fmt(w));
        return out;
    };
    CHECK(names({2, 1}) == std::vector<std::string>{"aab"});
    CHECK(names({2, 2}) == std::vector<std::string>{"aabb", "abab"});
    auto c = names({2, 2, 2});
    for (const char* w : {"aabccb", "abcabc", "abbcac"}) CHECK(std::count(c.begin(), c.end(), fmt(canonicalize(word(w)))) == 1);
    CHECK_THROWS_AS(enumerate_class({0, 0}), DomainError);
}

TEST_CASE("enumerate_class matches brute force: totals <= 12 over <= 3 letters, <= 9 over 4") {
    for (std::size_t k = 1; k <= 4; ++k) {
        std::size_t hi = k <= 3 ? 12 : 9;
        for (const auto& counts : oracle::vectors(k, 1, hi)) {
            auto expected = oracle::necklaces(counts);
            auto got = enumerate_class(ParikhVector(counts));
            REQUIRE(got.size() == expected.size());
            std::size_t i = 0;
            for (const auto& w : expected) CHECK(got[i++].canonical().symbols() == w);
        }
    }
}

TEST_CASE("split_points") {
    CHECK(split_points(canonicalize(word("ab"))).empty());
    auto has = [](const CyclicWord& w, const std::string& u, const std::string& v) {
        for (const auto& s : split_points(w))
            if (fmt(s.u) == u && fmt(s.v) == v) return true;
        return false;
    };
    auto w = canonicalize(word("aaaabab"));
    CHECK(has(w, "aaaab", "ab"));
    CHECK(has(w, "aab", "abaa"));

    auto x = canonicalize(word("aabccb"));
    auto splits = split_points(x);
    CHECK(!splits.empty());
    std::size_t expected = 0;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t m = 1; m < 6; ++m) {
            auto rot = x.canonical().rotated(r);
            if (!rot.slice(0, m).is_palindrome() && !rot.slice(m, 6 - m).is_palindrome()) ++expected;
        }
    CHECK(splits.size() == expected);
    for (const auto& s : splits) {
        CHECK(!s.u.is_palindrome());
        CHECK(!s.v.is_palindrome());
        CHECK(canonicalize(concat(s.u, s.v)) == x);
    }
    std::size_t visited = 0;
    for_each_split(x, [&](auto, auto) { return ++visited, true; });
    CHECK(visited == splits.size());
}

TEST_CASE("alphabet") {
    auto a = Alphabet::letters(3, std::vector<std::uint64_t>{2, 3, 4});
    CHECK(a.single_char());
    CHECK(a.value(2) == 4);
    CHECK(a.parse("cab") == Word{2, 0, 1});
    CHECK(a.parse("c,a,b") == Word{2, 0, 1});
    CHECK_THROWS_AS(a.parse("abz"), ParseError);
    CHECK_THROWS_AS(Alphabet::letters(3, std::vector<std::uint64_t>{2, 2, 4}), DomainError);
    CHECK_THROWS_AS(Alphabet::letters(2, std::vector<std::uint64_t>{0, 2}), DomainError);
    CHECK_THROWS(Alphabet({"a", "a"}));

    Alphabet multi({"x1", "x2", "x10"});
    CHECK(!multi.single_char());
    Word w = multi.parse("x10,x1,x2");
    CHECK(w == Word{2, 0, 1});
    CHECK(multi.format(w) == "x10,x1,x2");
    CHECK(multi.parse(multi.format(w)) == w);
}
