#include "support.hpp"

#include <doctest.h>

using namespace tt;

TEST_CASE("antimorphism images") {
    const auto a = abc();
    CHECK(to_text(apply_antimorphism(tr(a), W(a, "ab"))) == "ba");
    CHECK(to_text(apply_antimorphism(swap_ab(a), W(a, "ab"))) == "ab");
    CHECK(apply_antimorphism(swap_ab(a), W(a, "")).empty());
    CHECK(apply_antimorphism(tr(a), W(a, "")).empty());
}

TEST_CASE("theta palindromes") {
    const auto a = abc();
    CHECK(is_theta_palindrome(tr(a), W(a, "aba")));
    CHECK_FALSE(is_theta_palindrome(swap_ab(a), W(a, "a")));
    CHECK(is_theta_palindrome(swap_ab(a), W(a, "abab")));
    CHECK(is_theta_palindrome(swap_ab(a), W(a, "")));
}

TEST_CASE("non-involutive pairings are rejected") {
    const auto a = abc("abc");
    CHECK_THROWS_AS(Antimorphism(a, {1, 2, 0}), InputError);
    try {
        Antimorphism(a, {1, 2, 0});
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("Θ² = Id") != std::string::npos);
    }
    CHECK_THROWS_AS(Antimorphism::from_pairs(a, {{"a", "b"}}), InputError);
    CHECK_THROWS_AS(Antimorphism::from_pairs(a, {{"a", "b"}, {"b", "c"}, {"c", "c"}}), InputError);
}

TEST_CASE("morphisms") {
    const auto src = make_alphabet({"0", "1"});
    const auto a = abc();
    const Morphism phi(src, a, {W(a, "ab"), W(a, "a")});
    CHECK(to_text(apply_morphism(phi, Word::parse(src, "01"))) == "aba");
    CHECK(apply_morphism(phi, Word(src)).empty());
    const auto one = make_alphabet({"0"});
    const Morphism sq(one, a, {W(a, "aa")});
    CHECK(to_text(apply_morphism(sq, Word::parse(one, "000"))) == "aaaaaa");
    CHECK_FALSE(phi.is_erasing());
    CHECK(Morphism(src, a, {W(a, "ab"), Word(a)}).is_erasing());
}

TEST_CASE("gamma") {
    const auto a = abc();
    CHECK(gamma(tr(a), W(a, "abba")) == 0);
    CHECK(gamma(swap_ab(a), W(a, "ab")) == 1);
    CHECK(gamma(swap_ab(a), W(a, "aaa")) == 1);
    const auto d = abc("abcd");
    const auto theta = Antimorphism::from_pairs(d, {{"a", "b"}, {"c", "c"}, {"d", "d"}});
    CHECK(gamma(theta, W(d, "acd")) == 1);
}

TEST_CASE("gamma matches the oracle on random words") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const std::size_t k = 1 + rng() % 4;
        const auto a = first_letters(k);
        const auto theta = Antimorphism::from_pairs(a, random_pairs(rng, k));
        const std::string s = random_word(rng, rng() % 20, k);
        CHECK(gamma(theta, W(a, s)) == gamma_oracle(pairing_of(theta), s));
    }
}

TEST_CASE("occurrences and factor sets") {
    const auto a = abc("abc");
    CHECK(occurrences(W(a, "abaab"), W(a, "a")) == std::vector<std::size_t>{0, 2, 3});
    CHECK(occurrences(W(a, "abaab"), W(a, "c")).empty());
    CHECK(occurrences(W(a, "aaa"), W(a, "aa")) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(occurrences(W(a, "aaa"), W(a, "")), InputError);

    const auto f = factor_set(W(a, "abab"), 2);
    CHECK(f == std::set<Word>{W(a, "ab"), W(a, "ba")});
    CHECK(factor_set(W(a, "abab"), 0) == std::set<Word>{Word(a)});
    CHECK(factor_set(W(a, "aaaa"), 3) == std::set<Word>{W(a, "aaa")});
}

TEST_CASE("words and alphabets") {
    const auto a = make_alphabet({"[0]", "[1]", "x"});
    const Word w = Word::parse_tokens(a, "[0] [1]\n x [0]");
    CHECK(w.size() == 4);
    CHECK(to_text(w) == "[0] [1] x [0]");
    CHECK_THROWS_AS(Word::parse(abc(), "abc"), InputError);
    CHECK_THROWS_AS(make_alphabet({"a", "a"}), InputError);
    CHECK_THROWS_AS(make_alphabet({}), InputError);
    const auto u = alphabet_from_chars("αβ");
    CHECK(u->size() == 2);
    CHECK(to_text(Word::parse(u, "αββ")) == "αββ");
}
