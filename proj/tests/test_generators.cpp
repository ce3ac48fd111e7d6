#include "thetarich/generators.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace tt;

namespace {

std::string closure_oracle(const Pairing& p, const std::string& w) {
    for (std::size_t k = 0;; ++k) {
        const std::string c = w + image(p, w.substr(0, k));
        if (is_pal(p, c)) return c;
    }
}

std::string iterate_oracle(const Pairing& p, const std::string& seed, const std::string& pre,
                           const std::string& period, std::size_t n) {
    std::string w = closure_oracle(p, seed);
    for (std::size_t k = 0; w.size() < n; ++k) {
        const char d = k < pre.size() ? pre[k] : period[(k - pre.size()) % period.size()];
        w = closure_oracle(p, w + d);
    }
    return w.substr(0, n);
}

std::string tribonacci(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        for (char c : w) next += c == 'a' ? "ab" : c == 'b' ? "ac" : "a";
        w = next;
    }
    return w.substr(0, n);
}

}  // namespace

TEST_CASE("periodic and Thue-Morse sources") {
    const auto a = abc("abc");
    CHECK(to_text(periodic_source(W(a, "ab")).prefix(5)) == "ababa");
    CHECK(to_text(periodic_source(W(a, "a")).prefix(3)) == "aaa");
    CHECK(to_text(periodic_source(W(a, "abc")).prefix(4)) == "abca");
    CHECK(to_text(thue_morse_source().prefix(8)) == "abbabaab");
    CHECK(to_text(thue_morse_source().prefix(1)) == "a");
    CHECK(to_text(thue_morse_source().prefix(2)) == "ab");
    CHECK(to_text(thue_morse_source().prefix(4096)) == thue_morse(4096));
}

TEST_CASE("episturmian sources") {
    const auto a = abc();
    const auto fib = episturmian_source(DirectiveSequence::parse(a, "(ab)"));
    CHECK(to_text(fib.prefix(13)) == "abaababaabaab");
    CHECK(to_text(fib.prefix(5000)) == fibonacci(5000));
    CHECK(fib.construction_log(12) == std::vector<std::size_t>{0, 1, 3, 6, 11, 19});
    const auto a3 = abc("abc");
    CHECK(to_text(episturmian_source(DirectiveSequence::parse(a3, "(abc)")).prefix(3000)) == tribonacci(3000));
    CHECK(to_text(episturmian_source(DirectiveSequence::parse(a, "(a)")).prefix(6)) == "aaaaaa");
}

TEST_CASE("theta-standard words with seed follow the closure iteration") {
    const auto a = abc();
    CHECK(to_text(theta_standard_with_seed_source(tr(a), Word(a), DirectiveSequence::parse(a, "(ab)")).prefix(2000)) ==
          fibonacci(2000));
    const auto e = swap_ab(a);
    const Pairing pe = pairing_of(e);
    const auto s1 = theta_standard_with_seed_source(e, Word(a), DirectiveSequence::parse(a, "(a)"));
    CHECK(to_text(s1.prefix(2)) == "ab");
    CHECK(to_text(s1.prefix(4)) == "abab");
    CHECK(to_text(s1.prefix(500)) == iterate_oracle(pe, "", "", "a", 500));
    const auto s2 = theta_standard_with_seed_source(e, W(a, "aa"), DirectiveSequence::parse(a, "(ab)"));
    CHECK(to_text(s2.prefix(3000)) == iterate_oracle(pe, "aa", "", "ab", 3000));
    const auto a3 = abc("abc");
    const auto t3 = swap_ab(a3);
    const auto s3 = theta_standard_with_seed_source(t3, W(a3, "ca"), DirectiveSequence::parse(a3, "b(abc)"));
    CHECK(to_text(s3.prefix(3000)) == iterate_oracle(pairing_of(t3), "ca", "b", "abc", 3000));
}

TEST_CASE("prefixes are consistent across lengths") {
    const auto a = abc();
    const auto s = theta_standard_with_seed_source(swap_ab(a), W(a, "ba"), DirectiveSequence::parse(a, "(ab)"));
    const Word long_prefix = s.prefix(4000);
    for (std::size_t n : {0u, 1u, 7u, 100u, 3999u}) CHECK(s.prefix(n) == long_prefix.prefix(n));
}

TEST_CASE("directive parsing") {
    const auto a = abc();
    const auto d = DirectiveSequence::parse(a, "ab(ba)");
    CHECK(d.at(0) == 0);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 1);
    CHECK(d.at(5) == 0);
    CHECK(d.str() == "ab(ba)");
    CHECK_THROWS_AS(DirectiveSequence::parse(a, "ab()"), InputError);
    CHECK_THROWS_AS(DirectiveSequence::parse(a, "a(b"), InputError);
}

TEST_CASE("Arnoux-Rauzy check") {
    const auto a = abc();
    CHECK(arnoux_rauzy_check(W(a, fibonacci(10000)), 100, 2).holds);
    const auto tm = arnoux_rauzy_check(W(a, thue_morse(10000)), 100, 2);
    CHECK_FALSE(tm.holds);
    CHECK(tm.first_failure.has_value());
    std::string p;
    while (p.size() < 1000) p += "aab";
    CHECK_FALSE(arnoux_rauzy_check(W(a, p), 10, 2).holds);
    const auto a3 = abc("abc");
    CHECK(arnoux_rauzy_check(W(a3, tribonacci(20000)), 100, 3).holds);
}
