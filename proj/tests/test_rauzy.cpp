#include "thetarich/complexity.hpp"
#include "thetarich/rauzy.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace tt;

namespace {

std::set<std::string> words_of(const std::vector<SpecialFactor>& fs) {
    std::set<std::string> out;
    for (const auto& f : fs) out.insert(to_text(f.word));
    return out;
}

}  // namespace

TEST_CASE("special factors") {
    const auto a = abc();
    const Word fib = W(a, fibonacci(10000));
    const auto sf = special_factors(fib, 1);
    CHECK(words_of(sf.left_special) == std::set<std::string>{"a"});
    CHECK(words_of(sf.right_special) == std::set<std::string>{"a"});
    const auto tm = special_factors(W(a, thue_morse(10000)), 1);
    CHECK(words_of(tm.left_special) == std::set<std::string>{"a", "b"});
    CHECK(words_of(tm.right_special) == std::set<std::string>{"a", "b"});
    const auto a1 = abc("a");
    for (std::size_t n : {1u, 3u, 7u}) CHECK(special_factors(W(a1, std::string(100, 'a')), n).empty());
}

TEST_CASE("special factors and simple paths agree with the oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
        const std::size_t k = 2 + rng() % 2;
        const auto a = first_letters(k);
        const std::string s = random_word(rng, 30 + rng() % 50, k);
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto sf = special_factors(W(a, s), n);
            CHECK(words_of(sf.left_special) == left_special(s, n));
            CHECK(words_of(sf.right_special) == right_special(s, n));
            std::set<std::string> paths;
            for (const auto& p : simple_paths(W(a, s), n).paths) paths.insert(to_text(p.word));
            CHECK(paths == simple_paths_oracle(s, n));
        }
    }
}

TEST_CASE("Fibonacci simple paths") {
    const auto a = abc();
    const std::string fib = fibonacci(10000);
    std::set<std::string> paths;
    for (const auto& p : simple_paths(W(a, fib), 1).paths) paths.insert(to_text(p.word));
    CHECK(paths == std::set<std::string>{"aa", "aba"});
    std::set<std::string> paths2;
    for (const auto& p : simple_paths(W(a, fib), 2).paths) paths2.insert(to_text(p.word));
    CHECK(paths2 == simple_paths_oracle(fib, 2));
    CHECK(simple_paths(W(abc("a"), std::string(50, 'a')), 2).paths.empty());
}

TEST_CASE("Fibonacci graph at n = 1") {
    const auto a = abc();
    const auto g = build_graph(tr(a), W(a, fibonacci(10000)), 1);
    REQUIRE(g.vertices.size() == 1);
    CHECK(g.vertices[0].label() == "a|a");
    REQUIRE(g.edges.size() == 2);
    for (const auto& e : g.edges) {
        CHECK(e.is_loop());
        CHECK(e.palindromic());
    }
    const auto check = check_proposition1(g);
    CHECK(check.loops_palindromic);
    CHECK(check.tree_after_loop_removal);
    std::ostringstream dot;
    g.write_dot(dot);
    CHECK(dot.str().find("graph G1 {") == 0);
    CHECK(dot.str().find("\"a|a\" -- \"a|a\"") != std::string::npos);
}

TEST_CASE("empty graph is vacuously fine") {
    const auto a1 = abc("a");
    const auto g = build_graph(tr(a1), W(a1, std::string(200, 'a')), 1);
    CHECK(g.empty());
    CHECK(check_proposition1(g).holds());
}

TEST_CASE("Thue-Morse fails the criterion where T is nonzero") {
    const auto a = abc();
    const Word tm = W(a, thue_morse(20000));
    const auto t = complexity_table(tr(a), tm, 40);
    const auto first = is_rich_by_T(t).first_nonzero;
    REQUIRE(first);
    CHECK_FALSE(check_proposition1(build_graph(tr(a), tm, *first)).holds());
    const auto g2 = build_graph(tr(a), tm, 2);
    CHECK(check_proposition1(g2).holds() == (*t.row(2).gap == 0));
}

TEST_CASE("T(n) = 0 iff loop and tree criterion on small corpus") {
    const auto a = abc();
    struct Case {
        std::string word;
        Antimorphism theta;
    };
    std::vector<Case> corpus{{fibonacci(8000), tr(a)}, {thue_morse(8000), tr(a)}};
    std::string periodic;
    while (periodic.size() < 8000) periodic += "aab";
    corpus.push_back({periodic, tr(a)});
    for (const auto& c : corpus) {
        const Word w = W(a, c.word);
        const auto t = complexity_table(c.theta, w, default_safe_length(w.size()));
        for (std::size_t n = 1; n <= t.safe_length; ++n) {
            if (!t.closed_up_to(n)) break;
            const auto g = build_graph(c.theta, w, n);
            CHECK_MESSAGE(check_proposition1(g).holds() == (*t.row(n).gap == 0), "n = ", n);
        }
    }
}

TEST_CASE("graph input checks") {
    const auto a = abc();
    CHECK_THROWS_AS(build_graph(tr(a), W(a, "abab"), 0), PreconditionError);
    CHECK_THROWS_AS(build_graph(tr(a), W(a, "abab"), 4), PreconditionError);
}
