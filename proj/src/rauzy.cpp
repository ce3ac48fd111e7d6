#include "thetarich/rauzy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>

namespace thetarich {

namespace {

constexpr Letter kNone = ~Letter{0};
constexpr Letter kMany = kNone - 1;

struct Extensions {
    std::vector<Letter> left, right;   // kNone, a single letter, or kMany
    std::vector<char> special;
};

void note(Letter& slot, Letter a) {
    if (slot == kNone)
        slot = a;
    else if (slot != a)
        slot = kMany;
}

Extensions extensions(const FactorLadder& ladder) {
    const std::size_t windows = ladder.window_count();
    const std::size_t n = ladder.length();
    const LetterSpan text = ladder.prefix();
    Extensions ext;
    ext.left.assign(ladder.class_count(), kNone);
    ext.right.assign(ladder.class_count(), kNone);
    ext.special.assign(ladder.class_count(), 0);
    for (std::size_t i = 0; i < windows; ++i) {
        if (i >= 1) note(ext.left[ladder.id(i)], text[i - 1]);
        if (i + n < text.size()) note(ext.right[ladder.id(i)], text[i + n]);
    }
    for (std::size_t c = 0; c < ext.special.size(); ++c)
        ext.special[c] = ext.left[c] == kMany || ext.right[c] == kMany;
    return ext;
}

Word window(const FactorLadder& ladder, const AlphabetPtr& alphabet, std::size_t i, std::size_t len) {
    const LetterSpan text = ladder.prefix().subspan(i, len);
    return Word(alphabet, {text.begin(), text.end()});
}

Word canonical(const Antimorphism& theta, const Word& w) {
    Word image(w.alphabet(), theta.apply(w.view()));
    return std::min(w, image);
}

void require_ladder(const FactorLadder& ladder) {
    if (ladder.length() == 0) throw PreconditionError("Rauzy analysis needs n >= 1");
}

FactorLadder ladder_at(const Antimorphism& theta, const Word& prefix, std::size_t n) {
    require_alphabet(theta, prefix);
    if (n == 0 || n >= prefix.size()) throw PreconditionError("n must satisfy 1 <= n < |prefix|");
    FactorLadder ladder(theta, prefix.view());
    while (ladder.length() < n) ladder.advance();
    return ladder;
}

}  // namespace

std::string RauzyVertex::label() const { return to_text(word) + "|" + to_text(image); }

SpecialFactors special_factors(const FactorLadder& ladder, const AlphabetPtr& alphabet) {
    require_ladder(ladder);
    const Extensions ext = extensions(ladder);
    const std::size_t n = ladder.length();
    const auto first = ladder.first_window();

    // distinct extension letters of special classes
    std::map<std::uint32_t, std::pair<std::set<Letter>, std::set<Letter>>> valence;
    const LetterSpan text = ladder.prefix();
    for (std::size_t i = 0; i < ladder.window_count(); ++i) {
        const std::uint32_t c = ladder.id(i);
        if (!ext.special[c]) continue;
        auto& [l, r] = valence[c];
        if (i >= 1) l.insert(text[i - 1]);
        if (i + n < text.size()) r.insert(text[i + n]);
    }

    SpecialFactors out;
    out.n = n;
    for (const auto& [c, lr] : valence) {
        SpecialFactor f{window(ladder, alphabet, static_cast<std::size_t>(first[c]), n), lr.first.size(),
                        lr.second.size()};
        const bool ls = ext.left[c] == kMany, rs = ext.right[c] == kMany;
        if (ls && rs) out.bispecial.push_back(f.word);
        if (ls) out.left_special.push_back(f);
        if (rs) out.right_special.push_back(std::move(f));
        // θ(w) must be RS exactly when w is LS
        const std::uint32_t image = ladder.mirror_id(static_cast<std::size_t>(first[c]));
        const bool image_in_prefix = image < first.size() && first[image] >= 0;
        const bool image_rs = image_in_prefix && ext.right[image] == kMany;
        const bool image_ls = image_in_prefix && ext.left[image] == kMany;
        if (ls != image_rs || rs != image_ls) out.theta_symmetric = false;
    }
    auto by_word = [](const SpecialFactor& a, const SpecialFactor& b) { return a.word < b.word; };
    std::sort(out.left_special.begin(), out.left_special.end(), by_word);
    std::sort(out.right_special.begin(), out.right_special.end(), by_word);
    std::sort(out.bispecial.begin(), out.bispecial.end());
    return out;
}

SimplePathScan simple_paths(const FactorLadder& ladder, const AlphabetPtr& alphabet, const Antimorphism& theta) {
    require_ladder(ladder);
    const Extensions ext = extensions(ladder);
    const std::size_t n = ladder.length();
    SimplePathScan scan;
    for (std::size_t i = 0; i < ladder.window_count(); ++i)
        if (ext.special[ladder.id(i)]) scan.special_positions.push_back(i);
    if (scan.special_positions.empty()) {
        scan.diagnostic = "no special factors of length " + std::to_string(n) + " (eventually periodic input)";
        return scan;
    }

    std::map<std::vector<Letter>, std::size_t> index;
    const LetterSpan text = ladder.prefix();
    for (std::size_t k = 0; k + 1 < scan.special_positions.size(); ++k) {
        const std::size_t from = scan.special_positions[k];
        const std::size_t len = scan.special_positions[k + 1] + n - from;
        std::vector<Letter> key(text.begin() + static_cast<std::ptrdiff_t>(from),
                                text.begin() + static_cast<std::ptrdiff_t>(from + len));
        auto [it, inserted] = index.try_emplace(std::move(key), scan.paths.size());
        if (inserted) {
            Word w(alphabet, it->first);
            scan.paths.push_back({w, w.prefix(n), w.suffix(n), from, 0});
        }
        ++scan.paths[it->second].occurrences;
        scan.path_of_step.push_back(it->second);
    }
    for (const auto& p : scan.paths)
        if (!index.count(theta.apply(p.word.view()))) {
            scan.theta_complete = false;
            scan.diagnostic = "θ-image of simple path " + to_text(p.word) + " not witnessed; prefix may be too short";
            break;
        }
    return scan;
}

SuperReducedRauzyGraph build_graph(const FactorLadder& ladder, const Antimorphism& theta) {
    require_ladder(ladder);
    const AlphabetPtr& alphabet = theta.alphabet();
    const Extensions ext = extensions(ladder);
    const std::size_t n = ladder.length();
    const auto first = ladder.first_window();

    SuperReducedRauzyGraph g;
    g.n = n;
    std::set<Word> vertex_keys;
    for (std::size_t c = 0; c < first.size(); ++c)
        if (first[c] >= 0 && ext.special[c])
            vertex_keys.insert(canonical(theta, window(ladder, alphabet, static_cast<std::size_t>(first[c]), n)));
    std::map<Word, std::size_t> vertex_of;
    for (const Word& w : vertex_keys) {
        vertex_of.emplace(w, g.vertices.size());
        g.vertices.push_back({w, Word(alphabet, theta.apply(w.view()))});
    }

    const SimplePathScan scan = simple_paths(ladder, alphabet, theta);
    std::set<Word> edge_keys;
    for (const auto& p : scan.paths) edge_keys.insert(canonical(theta, p.word));
    for (const Word& e : edge_keys) {
        std::size_t a = vertex_of.at(canonical(theta, e.prefix(n)));
        std::size_t b = vertex_of.at(canonical(theta, e.suffix(n)));
        if (a > b) std::swap(a, b);
        g.edges.push_back({e, Word(alphabet, theta.apply(e.view())), a, b});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const RauzyEdge& x, const RauzyEdge& y) {
        return std::tie(x.from, x.to, x.word) < std::tie(y.from, y.to, y.word);
    });
    return g;
}

SpecialFactors special_factors(const Antimorphism& theta, const Word& prefix, std::size_t n) {
    return special_factors(ladder_at(theta, prefix, n), prefix.alphabet());
}

SpecialFactors special_factors(const Word& prefix, std::size_t n) {
    return special_factors(Antimorphism::reversal(prefix.alphabet()), prefix, n);
}

SimplePathScan simple_paths(const Antimorphism& theta, const Word& prefix, std::size_t n) {
    return simple_paths(ladder_at(theta, prefix, n), prefix.alphabet(), theta);
}

SimplePathScan simple_paths(const Word& prefix, std::size_t n) {
    return simple_paths(Antimorphism::reversal(prefix.alphabet()), prefix, n);
}

SuperReducedRauzyGraph build_graph(const Antimorphism& theta, const Word& prefix, std::size_t n) {
    return build_graph(ladder_at(theta, prefix, n), theta);
}

Proposition1Check check_proposition1(const SuperReducedRauzyGraph& g) {
    Proposition1Check out;
    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t tree_edges = 0;
    for (const auto& e : g.edges) {
        if (e.is_loop()) {
            if (!e.palindromic()) out.loops_palindromic = false;
            continue;
        }
        ++tree_edges;
        const std::size_t a = find(e.from), b = find(e.to);
        if (a == b) out.tree_after_loop_removal = false;  // cycle or parallel edge
        parent[a] = b;
    }
    if (!g.vertices.empty()) {
        if (tree_edges != g.vertices.size() - 1) out.tree_after_loop_removal = false;
    } else if (tree_edges != 0) {
        out.tree_after_loop_removal = false;
    }
    return out;
}

void SuperReducedRauzyGraph::write_dot(std::ostream& os) const {
    os << "graph G" << n << " {\n";
    for (const auto& v : vertices) os << "  \"" << v.label() << "\";\n";
    for (const auto& e : edges) {
        os << "  \"" << vertices[e.from].label() << "\" -- \"" << vertices[e.to].label() << "\" [label=\""
           << to_text(e.word);
        if (!e.palindromic()) os << "|" << to_text(e.image);
        os << "\"];\n";
    }
    os << "}\n";
}

}  // namespace thetarich
