#pragma once

/**
 * @file rauzy.hpp
 * @brief Special factors, n-simple paths and super reduced Rauzy graphs.
 *
 * Vertices of G_n are unordered pairs (w, θ(w)) of length-n factors that
 * are left or right special. An n-simple path is a factor whose only special
 * length-n factors are its length-n prefix and suffix; each pair (e, θ(e))
 * of simple paths is one (possibly looping, possibly parallel) edge.
 *
 * Everything is read off a finite prefix, so special factors near the end
 * of the prefix can be misclassified. Callers keep n within the prefix's
 * safe length.
 */

#include "thetarich/core.hpp"
#include "thetarich/factors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace thetarich {

struct SpecialFactor {
    Word word;
    std::size_t left_valence = 0;   ///< distinct left extensions seen in the prefix
    std::size_t right_valence = 0;
};

struct SpecialFactors {
    std::size_t n = 0;
    std::vector<SpecialFactor> left_special;    ///< sorted by word
    std::vector<SpecialFactor> right_special;
    std::vector<Word> bispecial;
    /// w is LS exactly when θ(w) is RS, on the observed sets.
    bool theta_symmetric = true;

    bool empty() const { return left_special.empty() && right_special.empty(); }
};

struct SimplePath {
    Word word;
    Word begin;                     ///< length-n prefix
    Word end;                       ///< length-n suffix
    std::size_t first_occurrence = 0;
    std::size_t occurrences = 0;
};

struct SimplePathScan {
    std::vector<SimplePath> paths;          ///< distinct words, by first occurrence
    std::vector<std::size_t> special_positions;  ///< s_0 < s_1 < ... in the prefix
    std::vector<std::size_t> path_of_step;  ///< index into `paths` for each (s_k, s_{k+1})
    /// θ(e) was witnessed for every witnessed path e.
    bool theta_complete = true;
    std::string diagnostic;
};

struct RauzyVertex {
    Word word;        ///< lexicographically smaller member of (w, θ(w))
    Word image;
    std::string label() const;
};

struct RauzyEdge {
    Word word;        ///< lexicographically smaller member of (e, θ(e))
    Word image;
    std::size_t from = 0;   ///< vertex indices, from <= to
    std::size_t to = 0;
    bool is_loop() const { return from == to; }
    bool palindromic() const { return word == image; }
};

struct SuperReducedRauzyGraph {
    std::size_t n = 0;
    std::vector<RauzyVertex> vertices;  ///< sorted by word
    std::vector<RauzyEdge> edges;       ///< sorted by (from, to, word)

    bool empty() const { return vertices.empty(); }
    void write_dot(std::ostream& os) const;
};

struct Proposition1Check {
    bool loops_palindromic = true;
    bool tree_after_loop_removal = true;
    bool holds() const { return loops_palindromic && tree_after_loop_removal; }
};

// Ladder-based forms; the ladder must be at length n >= 1.
SpecialFactors special_factors(const FactorLadder& ladder, const AlphabetPtr& alphabet);
SimplePathScan simple_paths(const FactorLadder& ladder, const AlphabetPtr& alphabet,
                            const Antimorphism& theta);
SuperReducedRauzyGraph build_graph(const FactorLadder& ladder, const Antimorphism& theta);

SpecialFactors special_factors(const Antimorphism& theta, const Word& prefix, std::size_t n);
/// Special factors do not depend on θ; reversal only drives the symmetry flag here.
SpecialFactors special_factors(const Word& prefix, std::size_t n);
SimplePathScan simple_paths(const Word& prefix, std::size_t n);
SimplePathScan simple_paths(const Antimorphism& theta, const Word& prefix, std::size_t n);
SuperReducedRauzyGraph build_graph(const Antimorphism& theta, const Word& prefix, std::size_t n);

Proposition1Check check_proposition1(const SuperReducedRauzyGraph& g);

}  // namespace thetarich
