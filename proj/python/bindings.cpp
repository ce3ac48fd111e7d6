#include "thetarich/complexity.hpp"
#include "thetarich/decompose.hpp"
#include "thetarich/io.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/rauzy.hpp"
#include "thetarich/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace thetarich;

namespace {

struct Loaded {
    Word word;
    Antimorphism theta;
};

Loaded load(const std::string& text, const std::string& theta, bool tokens) {
    const ThetaSpec spec = parse_theta_spec(theta);
    std::vector<std::string> letters = split_letters(text, tokens);
    std::vector<std::string> distinct = letters;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const AlphabetPtr alphabet = alphabet_of({distinct, spec.mentioned()});
    std::vector<Letter> symbols;
    for (const auto& l : letters) symbols.push_back(alphabet->index(l));
    return {Word(alphabet, std::move(symbols)), spec.build(alphabet)};
}

std::string render(const Word& w, bool tokens) { return tokens ? w.str(" ") : to_text(w); }

DecomposeOptions decompose_options(double margin, std::size_t budget, std::uint64_t seed, std::size_t samples) {
    DecomposeOptions o;
    o.margin = margin;
    o.budget = budget;
    o.seed = seed;
    o.eq4_samples = samples;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Θ-palindromes, Θ-defect, Rauzy graphs and rich-word decompositions";
    m.attr("__version__") = THETARICH_VERSION;
    m.attr("REPORT_SCHEMA") = kReportSchema;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "apply_antimorphism",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return render(apply_antimorphism(in.theta, in.word), tokens);
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "is_theta_palindrome",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return is_theta_palindrome(in.theta, in.word);
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "palindrome_count",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            PalIndex idx(in.theta);
            idx.append(in.word.view());
            return idx.palindrome_count();
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false,
        "Distinct Θ-palindromic factors, ε included.");
    m.def(
        "gamma",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return gamma(in.theta, in.word);
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "defect",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return defect(in.theta, in.word);
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "defect_profile",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return defect_profile(in.theta, in.word).values;
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "closure",
        [](const std::string& w, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            return render(theta_pal_closure(in.theta, in.word), tokens);
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("tokens") = false,
        "Shortest Θ-palindrome having the word as a prefix.");
    m.def(
        "complexity_table",
        [](const std::string& w, const std::string& theta, std::size_t max_n, bool tokens) {
            const auto in = load(w, theta, tokens);
            const ComplexityTable t = complexity_table(in.theta, in.word, max_n);
            std::vector<py::dict> rows;
            for (const auto& r : t.rows) {
                py::dict d;
                d["n"] = r.n;
                d["C"] = r.factors;
                d["P"] = r.palindromes;
                d["T"] = r.gap ? py::cast(*r.gap) : py::none();
                d["closed"] = r.closed;
                rows.push_back(d);
            }
            return rows;
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("max_n") = 10, py::arg("tokens") = false);
    m.def(
        "generate",
        [](const std::string& gen, std::size_t length, const std::optional<std::string>& theta,
           const std::optional<std::string>& directive, const std::optional<std::string>& seed) {
            std::optional<ThetaSpec> spec;
            if (theta) spec = parse_theta_spec(*theta);
            auto [source, antimorphism] = make_source(parse_generator_spec(gen, directive, seed), spec);
            return to_text(source.prefix(length));
        },
        py::arg("gen"), py::arg("length"), py::arg("theta") = py::none(), py::arg("directive") = py::none(),
        py::arg("seed") = py::none());
    m.def(
        "analyze",
        [](const std::string& w, const std::string& theta, std::size_t max_n, std::uint64_t seed, bool tokens) {
            const auto in = load(w, theta, tokens);
            AnalyzeOptions o;
            o.input = "python";
            o.antimorphism = theta;
            o.max_n = max_n;
            o.seed = seed;
            return dump(analyze(in.theta, in.word, o));
        },
        py::arg("word"), py::arg("theta") = "reversal", py::arg("max_n") = 0, py::arg("seed") = 0,
        py::arg("tokens") = false, "JSON analysis report.");
    m.def(
        "rauzy",
        [](const std::string& w, std::size_t n, const std::string& theta, bool tokens) {
            const auto in = load(w, theta, tokens);
            const SuperReducedRauzyGraph g = build_graph(in.theta, in.word, n);
            const Proposition1Check check = check_proposition1(g);
            std::ostringstream dot;
            g.write_dot(dot);
            py::dict d;
            d["n"] = n;
            d["vertices"] = g.vertices.size();
            d["edges"] = g.edges.size();
            d["loops_palindromic"] = check.loops_palindromic;
            d["tree_after_loop_removal"] = check.tree_after_loop_removal;
            d["dot"] = dot.str();
            return d;
        },
        py::arg("word"), py::arg("n"), py::arg("theta") = "reversal", py::arg("tokens") = false);
    m.def(
        "decompose",
        [](const std::string& w, const std::string& method, const std::string& theta, std::size_t n,
           const std::optional<std::string>& p, double margin, std::size_t budget, std::uint64_t seed,
           std::size_t samples, bool tokens) {
            const auto in = load(w, theta, tokens);
            const DecomposeOptions o = decompose_options(margin, budget, seed, samples);
            if (method == "path") {
                if (!n) return dump(to_json(theorem1_pipeline(in.theta, in.word, o)));
                Theorem1Result r;
                SimplePathCoding c = theorem1_decompose(in.theta, in.word, n, o);
                r.conditions = richness_conditions_check(c.theta2, c.v_prefix);
                r.refactorization = apply_morphism(c.phi, c.v_prefix) ==
                                    in.word.slice(c.covered_begin, c.covered_end - c.covered_begin);
                r.verdict = r.conditions->holds() && r.refactorization ? Verdict::pass : Verdict::fail;
                r.tried.push_back(c.n);
                r.coding = std::move(c);
                return dump(to_json(r));
            }
            if (method == "return") {
                std::optional<Word> hint;
                if (p) hint = tokens ? Word::parse_tokens(in.word.alphabet(), *p) : Word::parse(in.word.alphabet(), *p);
                return dump(to_json(theorem2_pipeline(in.theta, in.word, hint, o)));
            }
            if (method == "theorem3") return dump(to_json(theorem3_on_prefix(in.theta, in.word, o)));
            throw InputError("method must be path, return or theorem3");
        },
        py::arg("word"), py::arg("method") = "return", py::arg("theta") = "reversal", py::arg("n") = 0,
        py::arg("p") = py::none(), py::arg("margin") = 2.0, py::arg("budget") = 0, py::arg("seed") = 0,
        py::arg("samples") = 1000, py::arg("tokens") = false, "JSON decomposition report.");
}
