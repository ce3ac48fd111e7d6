#include "thetarich/complexity.hpp"
#include "thetarich/decompose.hpp"
#include "thetarich/io.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/rauzy.hpp"
#include "thetarich/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace thetarich;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultLength = 10000;

struct Input {
    std::string gen;
    std::string word_file;
    bool tokens = false;
    std::string theta;
    std::size_t len = 0;
    std::optional<std::string> directive;
    std::optional<std::string> word_seed;
    std::optional<std::string> seed;
    std::uint64_t rng_seed = 0;

    void add_to(CLI::App* app) {
        auto* g = app->add_option("--gen", gen, "generator: fibonacci, tribonacci, thue_morse, periodic:<word>, "
                                                 "episturmian, theta_standard or a JSON config");
        auto* f = app->add_option("--word-file", word_file, "file holding the word");
        g->excludes(f);
        app->add_flag("--tokens", tokens, "letters are whitespace-separated tokens");
        app->add_option("--theta", theta, "antimorphism: reversal, pairs:a-b,c-c or a JSON file")->default_str("reversal");
        app->add_option("--len", len, "prefix length (generators default to 10000, files to the whole word)");
        app->add_option("--directive", directive, "directive sequence 'pre(period)'");
        app->add_option("--word-seed", word_seed, "seed word of a theta_standard generator");
        app->add_option("--seed", seed, "random seed (the seed word for --gen theta_standard)");
        app->add_option("--rng-seed", rng_seed, "random seed when --seed names a seed word");
    }

    std::optional<ThetaSpec> theta_spec() const {
        if (theta.empty()) return std::nullopt;
        return parse_theta_spec(theta);
    }

    bool seed_is_word() const {
        return !word_seed && seed && !gen.empty() &&
               parse_generator_spec(gen).kind == SourceKind::theta_standard_seed;
    }

    std::uint64_t random_seed() const {
        if (!seed || seed_is_word()) return rng_seed;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(seed->data(), seed->data() + seed->size(), v);
        if (ec != std::errc() || ptr != seed->data() + seed->size())
            throw InputError("--seed expects a non-negative integer, got '" + *seed + "'");
        return v;
    }

    struct Loaded {
        Word word;
        Antimorphism theta;
        std::string descriptor;
    };

    Loaded load() const {
        const auto th = theta_spec();
        if (!gen.empty()) {
            const std::optional<std::string> wseed = seed_is_word() ? seed : word_seed;
            const GeneratorSpec spec = parse_generator_spec(gen, directive, wseed);
            auto [source, antimorphism] = make_source(spec, th);
            const std::size_t n = len ? len : kDefaultLength;
            return {source.prefix(n), antimorphism, source.describe()};
        }
        if (!word_file.empty()) {
            auto [word, antimorphism] = load_word(word_file, tokens, th);
            if (len && len < word.size()) word = word.prefix(len);
            return {word, antimorphism, "file:" + word_file};
        }
        throw InputError("give an input with --gen or --word-file");
    }
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
}

int run_analyze(const Input& in, std::size_t max_n, const std::string& out, const std::string& csv) {
    const auto loaded = in.load();
    AnalyzeOptions options;
    options.input = loaded.descriptor;
    options.antimorphism = in.theta.empty() ? "reversal" : in.theta;
    options.max_n = max_n;
    options.seed = in.random_seed();
    emit(dump(analyze(loaded.theta, loaded.word, options)), out);
    if (!csv.empty()) {
        const std::size_t safe = std::min(default_safe_length(loaded.word.size()), loaded.word.size() - 1);
        std::ostringstream table, profile;
        complexity_table(loaded.theta, loaded.word, safe, safe, loaded.descriptor).write_csv(table);
        defect_profile(loaded.theta, loaded.word).write_csv(profile);
        write_file(csv + "_complexity.csv", table.str());
        write_file(csv + "_defect.csv", profile.str());
    }
    return 0;
}

int run_rauzy(const Input& in, std::size_t n, const std::string& dot, const std::string& out) {
    const auto loaded = in.load();
    const Word& u = loaded.word;
    const std::size_t safe = default_safe_length(u.size());
    if (n == 0) throw InputError("--n must be at least 1");
    if (n > safe)
        throw PreconditionError("n = " + std::to_string(n) + " exceeds the safe length " + std::to_string(safe) +
                                " of a prefix of length " + std::to_string(u.size()) +
                                "; special factors that long are not reliable here (use a longer --len)");
    const ClosureReport closure = closed_under_theta(loaded.theta, u, n + 1);
    const SuperReducedRauzyGraph g = build_graph(loaded.theta, u, n);
    const ComplexityTable table = complexity_table(loaded.theta, u, n + 1, safe);
    json report = envelope("rauzy", in.random_seed());
    report["input"] = {{"descriptor", loaded.descriptor}, {"prefix_length", u.size()}};
    report["antimorphism"] = theta_to_json(loaded.theta);
    report["closed"] = closure.closed;
    report["graph"] = rauzy_json(g, check_proposition1(g), closure.closed ? table.rows[n].gap : std::nullopt);
    json vertices = json::array(), edges = json::array();
    for (const auto& v : g.vertices) vertices.push_back(v.label());
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"word", to_text(e.word)}, {"image", to_text(e.image)}});
    report["graph"]["vertex_labels"] = vertices;
    report["graph"]["edge_list"] = edges;
    if (!dot.empty()) {
        std::ostringstream os;
        g.write_dot(os);
        write_file(dot, os.str());
    }
    emit(dump(report), out);
    return 0;
}

struct DecomposeArgs {
    std::string method = "return";
    std::size_t n = 0;
    std::string p;
    double margin = 2.0;
    std::size_t budget = 0;
    std::size_t samples = 1000;
};

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 1;
}

int run_decompose(const Input& in, const DecomposeArgs& args, const std::string& out) {
    const auto loaded = in.load();
    DecomposeOptions options;
    options.margin = args.margin;
    options.budget = args.budget;
    options.seed = in.random_seed();
    options.eq4_samples = args.samples;
    json report = envelope("decompose", options.seed);
    report["input"] = {{"descriptor", loaded.descriptor}, {"prefix_length", loaded.word.size()}};
    report["antimorphism"] = theta_to_json(loaded.theta);
    Verdict verdict = Verdict::inconclusive;
    if (args.method == "path") {
        Theorem1Result r;
        if (args.n) {
            SimplePathCoding coding = theorem1_decompose(loaded.theta, loaded.word, args.n, options);
            r.conditions = richness_conditions_check(coding.theta2, coding.v_prefix);
            r.refactorization = apply_morphism(coding.phi, coding.v_prefix) ==
                                loaded.word.slice(coding.covered_begin, coding.covered_end - coding.covered_begin);
            r.tried.push_back(coding.n);
            r.verdict = r.conditions->holds() && r.refactorization ? Verdict::pass : Verdict::fail;
            r.message = "coding at the requested n = " + std::to_string(coding.n);
            r.coding = std::move(coding);
        } else {
            r = theorem1_pipeline(loaded.theta, loaded.word, options);
        }
        verdict = r.verdict;
        report["result"] = to_json(r);
    } else if (args.method == "return") {
        std::optional<Word> hint;
        if (!args.p.empty()) hint = Word::parse(loaded.word.alphabet(), args.p);
        const Theorem2Result r = theorem2_pipeline(loaded.theta, loaded.word, hint, options);
        verdict = r.verdict;
        report["result"] = to_json(r);
    } else if (args.method == "theorem3") {
        Theorem3Result r = theorem3_on_prefix(loaded.theta, loaded.word, options);
        r.source = loaded.descriptor;
        verdict = r.verdict;
        report["result"] = to_json(r);
    } else {
        throw InputError("--method must be path, return or theorem3");
    }
    report["verdict"] = to_string(verdict);
    emit(dump(report), out);
    return exit_code(verdict);
}

int run_generate(const Input& in, const std::string& out) {
    if (in.gen.empty()) throw InputError("generate needs --gen");
    const auto loaded = in.load();
    std::string text = in.tokens ? loaded.word.str(" ") : to_text(loaded.word);
    emit(text + "\n", out);
    return 0;
}

int run_apply(const std::string& morphism_file, const Input& in, const std::string& out) {
    const Morphism phi = morphism_from_json(parse_json(read_file(morphism_file), morphism_file));
    if (in.word_file.empty()) throw InputError("apply needs --word-file");
    const auto letters = split_letters(read_file(in.word_file), in.tokens, in.word_file);
    std::vector<Letter> symbols;
    for (const auto& l : letters) symbols.push_back(phi.source()->index(l));
    const Word image = apply_morphism(phi, Word(phi.source(), std::move(symbols)));
    emit(to_text(image) + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Θ-palindromes, Θ-defect, Rauzy graphs and rich-word decompositions"};
    app.set_version_flag("--version", std::string(THETARICH_VERSION));
    app.require_subcommand(1);

    Input analyze_in, rauzy_in, decompose_in, generate_in, apply_in;
    std::string out, dot, csv, morphism;
    std::size_t max_n = 0, n = 0;
    DecomposeArgs dargs;

    auto* analyze_cmd = app.add_subcommand("analyze", "defect, complexity, closure, Rauzy and return-word scans");
    analyze_in.add_to(analyze_cmd);
    analyze_cmd->add_option("--max-n,--n", max_n, "largest n for the Rauzy checks (default: safe length)");
    analyze_cmd->add_option("--out", out, "write the JSON report here");
    analyze_cmd->add_option("--csv", csv, "write <prefix>_complexity.csv and <prefix>_defect.csv");

    auto* rauzy_cmd = app.add_subcommand("rauzy", "super reduced Rauzy graph G_n and its loop/tree criterion");
    rauzy_in.add_to(rauzy_cmd);
    rauzy_cmd->add_option("--n", n, "factor length")->required();
    rauzy_cmd->add_option("--dot", dot, "write the graph in DOT format");
    rauzy_cmd->add_option("--out", out, "write the JSON report here");

    auto* decompose_cmd = app.add_subcommand("decompose", "recode the word as a morphic image of a rich word");
    decompose_in.add_to(decompose_cmd);
    decompose_cmd->add_option("--method", dargs.method, "path, return or theorem3")
        ->check(CLI::IsMember({"path", "return", "theorem3"}));
    decompose_cmd->add_option("--n", dargs.n, "simple-path length (path method; default: empirical threshold)");
    decompose_cmd->add_option("--p", dargs.p, "Θ-palindromic prefix (return method)");
    decompose_cmd->add_option("--margin", dargs.margin, "multiplier on the last observed violation");
    decompose_cmd->add_option("--budget", dargs.budget, "largest n or |p| tried (default: safe length)");
    decompose_cmd->add_option("--samples", dargs.samples, "random words for the morphism identity check");
    decompose_cmd->add_option("--out", out, "write the JSON report here");

    auto* generate_cmd = app.add_subcommand("generate", "write a prefix of a generated word");
    generate_in.add_to(generate_cmd);
    generate_cmd->add_option("--out", out, "output file (default: stdout)");

    auto* apply_cmd = app.add_subcommand("apply", "apply a morphism exported by decompose to a word");
    apply_cmd->add_option("--morphism", morphism, "morphism JSON")->required();
    apply_cmd->add_option("--word-file", apply_in.word_file, "word over the morphism's source alphabet")->required();
    apply_cmd->add_flag("--tokens", apply_in.tokens, "whitespace-separated letters");
    apply_cmd->add_option("--out", out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_in, max_n, out, csv);
        if (*rauzy_cmd) return run_rauzy(rauzy_in, n, dot, out);
        if (*decompose_cmd) return run_decompose(decompose_in, dargs, out);
        if (*generate_cmd) return run_generate(generate_in, out);
        if (*apply_cmd) return run_apply(morphism, apply_in, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
