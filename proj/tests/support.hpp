#pragma once

// Helpers and brute-force oracles shared by the test suites. The oracles work
// on std::string with a char -> char pairing and never call library code.

#include "thetarich/core.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace tt {

using namespace thetarich;

inline AlphabetPtr abc(std::string_view letters = "ab") { return alphabet_from_chars(letters); }

inline Word W(const AlphabetPtr& a, std::string_view s) { return Word::parse(a, s); }

inline Antimorphism tr(const AlphabetPtr& a) { return Antimorphism::reversal(a); }

// a <-> b, every other letter fixed
inline Antimorphism swap_ab(const AlphabetPtr& a) {
    std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}};
    for (const auto& l : a->letters())
        if (l != "a" && l != "b") pairs.emplace_back(l, l);
    return Antimorphism::from_pairs(a, pairs);
}

// ---- string oracles ----

using Pairing = std::map<char, char>;

inline Pairing identity_pairing(std::string_view letters) {
    Pairing p;
    for (char c : letters) p[c] = c;
    return p;
}

inline Pairing pairing_of(const Antimorphism& theta) {
    Pairing p;
    const auto& a = *theta.alphabet();
    for (Letter x = 0; x < a.size(); ++x) p[a.name(x)[0]] = a.name(theta.image(x))[0];
    return p;
}

inline std::string image(const Pairing& p, const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = p.at(c);
    return out;
}

inline bool is_pal(const Pairing& p, const std::string& w) { return image(p, w) == w; }

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

inline std::set<std::string> all_factors(const std::string& w) {
    std::set<std::string> out{""};
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t n = 1; i + n <= w.size(); ++n) out.insert(w.substr(i, n));
    return out;
}

inline std::set<std::string> pal_factors(const Pairing& p, const std::string& w) {
    std::set<std::string> out;
    for (const auto& f : all_factors(w))
        if (is_pal(p, f)) out.insert(f);
    return out;
}

inline std::size_t gamma_oracle(const Pairing& p, const std::string& w) {
    std::set<std::pair<char, char>> pairs;
    for (char c : w)
        if (p.at(c) != c) pairs.insert({std::min(c, p.at(c)), std::max(c, p.at(c))});
    return pairs.size();
}

inline long defect_oracle(const Pairing& p, const std::string& w) {
    return static_cast<long>(w.size() + 1 - gamma_oracle(p, w)) - static_cast<long>(pal_factors(p, w).size());
}

// T(n) over the windows of a prefix
inline long gap_oracle(const Pairing& p, const std::string& w, std::size_t n) {
    auto pal_count = [&](std::size_t k) {
        long c = 0;
        for (const auto& f : factors(w, k)) c += is_pal(p, f);
        return c;
    };
    return static_cast<long>(factors(w, n + 1).size()) - static_cast<long>(factors(w, n).size()) + 2 -
           pal_count(n + 1) - pal_count(n);
}

struct Ext {
    std::set<char> left, right;
};

inline std::map<std::string, Ext> extensions(const std::string& w, std::size_t n) {
    std::map<std::string, Ext> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        auto& e = out[w.substr(i, n)];
        if (i > 0) e.left.insert(w[i - 1]);
        if (i + n < w.size()) e.right.insert(w[i + n]);
    }
    return out;
}

inline std::set<std::string> left_special(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    for (const auto& [f, e] : extensions(w, n))
        if (e.left.size() > 1) out.insert(f);
    return out;
}

inline std::set<std::string> right_special(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    for (const auto& [f, e] : extensions(w, n))
        if (e.right.size() > 1) out.insert(f);
    return out;
}

// factors between consecutive occurrences of special factors of length n
inline std::set<std::string> simple_paths_oracle(const std::string& w, std::size_t n) {
    const auto ls = left_special(w, n), rs = right_special(w, n);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        const std::string f = w.substr(i, n);
        if (ls.count(f) || rs.count(f)) pos.push_back(i);
    }
    std::set<std::string> out;
    for (std::size_t k = 0; k + 1 < pos.size(); ++k) out.insert(w.substr(pos[k], pos[k + 1] + n - pos[k]));
    return out;
}

inline std::vector<std::string> complete_returns_oracle(const std::string& w, const std::string& f) {
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
        if (w.compare(i, f.size(), f) == 0) occ.push_back(i);
    std::vector<std::string> out;
    for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
        const std::string r = w.substr(occ[k], occ[k + 1] + f.size() - occ[k]);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

// Fibonacci word by the substitution a -> ab, b -> a
inline std::string fibonacci(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        for (char c : w) next += c == 'a' ? "ab" : "a";
        w = next;
    }
    return w.substr(0, n);
}

// Thue-Morse by the substitution a -> ab, b -> ba
inline std::string thue_morse(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        for (char c : w) next += c == 'a' ? "ab" : "ba";
        w = next;
    }
    return w.substr(0, n);
}

// ---- random inputs ----

inline std::string random_word(std::mt19937_64& rng, std::size_t len, std::size_t k) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
    std::string w(len, 'a');
    for (char& c : w) c = static_cast<char>('a' + d(rng));
    return w;
}

// random involution on the first k letters
inline std::vector<std::pair<std::string, std::string>> random_pairs(std::mt19937_64& rng, std::size_t k) {
    std::vector<int> letters(k);
    for (std::size_t i = 0; i < k; ++i) letters[i] = static_cast<int>(i);
    std::shuffle(letters.begin(), letters.end(), rng);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::bernoulli_distribution pair_up(0.5);
    std::size_t i = 0;
    while (i < k) {
        const std::string a(1, static_cast<char>('a' + letters[i]));
        if (i + 1 < k && pair_up(rng)) {
            pairs.emplace_back(a, std::string(1, static_cast<char>('a' + letters[i + 1])));
            i += 2;
        } else {
            pairs.emplace_back(a, a);
            i += 1;
        }
    }
    return pairs;
}

inline AlphabetPtr first_letters(std::size_t k) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += static_cast<char>('a' + i);
    return alphabet_from_chars(s);
}

}  // namespace tt
