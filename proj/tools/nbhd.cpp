// nbhd: generate graphs, compute neighbourhood-complex homology, analyze, verify.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbhd/chordal.hpp"
#include "nbhd/coloring.hpp"
#include "nbhd/complex.hpp"
#include "nbhd/connectivity.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/folds.hpp"
#include "nbhd/generators.hpp"
#include "nbhd/graph_io.hpp"
#include "nbhd/homology.hpp"
#include "nbhd/verify.hpp"

using namespace nbhd;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options
{
    int max_dim = 4;
    std::uint64_t seed = 1;
    int count = -1;
    std::string format = "json";
    std::string output;
    bool complex_input = false;
    int chromatic_cap = default_chromatic_cap;
    int wt_cap = default_weak_triangulation_cap;
    int fold_cap = default_fold_search_cap;
    int verify_fold_cap = 40;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void emit(const Options & o, const std::string & text)
{
    if (o.output.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + o.output);
    out << text << '\n';
}

int to_int(const std::string & s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw UsageError("expected an integer, got \"" + s + "\"");
    return v;
}

std::vector<int> split_ints(const std::string & s)
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ','))
        out.push_back(to_int(part));
    return out;
}

/// A file path, or an inline spec: complete:P, cycle:K, path:K, queen:M,N, king:M,N, figure2.
Graph load_graph(const std::string & input)
{
    if (std::filesystem::exists(input))
        return read_graph_file(input);
    auto colon = input.find(':');
    std::string kind = input.substr(0, colon);
    std::vector<int> args = colon == std::string::npos ? std::vector<int>{} : split_ints(input.substr(colon + 1));
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw UsageError("spec \"" + input + "\" needs " + std::to_string(k) + " argument(s)");
    };
    if (kind == "complete") {
        need(1);
        return complete_graph(args[0]);
    }
    if (kind == "cycle") {
        need(1);
        return cycle_graph(args[0]);
    }
    if (kind == "path") {
        need(1);
        return path_graph(args[0]);
    }
    if (kind == "queen") {
        need(2);
        return queen_graph(args[0], args[1]);
    }
    if (kind == "king") {
        need(2);
        return king_graph(args[0], args[1]);
    }
    if (kind == "figure2") {
        need(0);
        return figure2_graph();
    }
    throw UsageError("no such file or graph spec: " + input);
}

// ---------------------------------------------------------------- homology

std::string homology_table(const std::vector<std::string> & ids, const std::vector<HomologyReport> & reports, int max_dim)
{
    std::vector<std::vector<std::string>> cells(max_dim + 2);
    cells[0].push_back("k");
    for (const auto & id : ids)
        cells[0].push_back(id);
    for (int k = 0; k <= max_dim; ++k) {
        cells[k + 1].push_back(std::to_string(k));
        for (const auto & r : reports)
            cells[k + 1].push_back(describe(r.group(k)));
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto & row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t c = 0; c < cells[r].size(); ++c)
            out << (c ? "  " : "") << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
        if (r + 1 < cells.size())
            out << '\n';
    }
    return out.str();
}

int cmd_homology(const Options & o, const std::vector<std::string> & inputs)
{
    if (o.max_dim < 0)
        throw UsageError("--max-dim must be non-negative");
    std::vector<HomologyReport> reports;
    std::vector<std::string> json;
    for (const auto & input : inputs) {
        SimplicialComplex x = o.complex_input ? complex_from_json(read_text_file(input)) : neighbourhood_complex(load_graph(input));
        reports.push_back(reduced_homology(x, o.max_dim));
        json.push_back(homology_to_json(reports.back(), input));
    }
    if (o.format == "table") {
        emit(o, homology_table(inputs, reports, o.max_dim));
    } else if (json.size() == 1) {
        emit(o, json.front());
    } else {
        std::string all = "[";
        for (std::size_t i = 0; i < json.size(); ++i)
            all += (i ? "," : "") + json[i];
        emit(o, all + "]");
    }
    return 0;
}

// ---------------------------------------------------------------- analyze

ordered_json named(const Graph & g, const std::vector<int> & vs)
{
    if (g.labels().empty())
        return vs;
    std::vector<std::string> out;
    for (int v : vs)
        out.push_back(g.label(v));
    return out;
}

int cmd_analyze(const Options & o, const std::string & input)
{
    Graph g = load_graph(input);
    ordered_json j;
    j["n"] = g.order();
    j["edges"] = g.size();

    if (g.order() > 0) {
        auto cut = vertex_connectivity(g);
        j["kappa"] = cut.kappa;
        j["kappa_witness"] = cut.witness_cut ? named(g, cut.witness_cut->to_vector()) : ordered_json(nullptr);
    }
    auto ch = is_chordal(g);
    j["chordal"] = ch.chordal;
    if (!ch.chordal)
        j["induced_cycle"] = named(g, ch.induced_cycle);
    try {
        auto wt = is_weakly_triangulated(g, o.wt_cap);
        j["weakly_triangulated"] = wt.weakly_triangulated;
    } catch (const TooLarge &) {
        j["weakly_triangulated"] = "skipped(cap)";
    }
    auto trace = fold_reduce(g);
    j["stiff"] = trace.steps.empty();
    j["fold_trace_length"] = trace.steps.size();
    j["stiff_residual_order"] = trace.result.order();
    j["max_clique"] = clique_number(g);
    if (g.order() == 0) {
        j["chromatic_number"] = 0;
    } else {
        try {
            j["chromatic_number"] = chromatic_number(g, o.chromatic_cap);
        } catch (const TooLarge &) {
            j["chromatic_number"] = "skipped(cap)";
        }
    }
    if (o.format == "table") {
        std::ostringstream out;
        bool first = true;
        for (const auto & [key, value] : j.items()) {
            out << (first ? "" : "\n") << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump());
            first = false;
        }
        emit(o, out.str());
    } else {
        emit(o, j.dump());
    }
    return 0;
}

// ---------------------------------------------------------------- verify

const std::vector<std::string> & verifier_ids()
{
    static const std::vector<std::string> ids{
        "table1",       "counterexample",       "queen-king",           "lovasz",
        "chordal-main", "chordal-n-connected",  "fold-invariance",      "mycielskian",
        "cut-theorem",  "vertexconnectivity-i", "vertexconnectivity-ii", "weakly-triangulated",
    };
    return ids;
}

VerificationReport run_verifier(const std::string & id, const Options & o)
{
    auto count = [&](int fallback) { return o.count > 0 ? o.count : fallback; };
    auto chordal = [&] {
        std::vector<Graph> out;
        for (auto & c : chordal_corpus(count(100), o.seed))
            out.push_back(std::move(c.graph));
        return out;
    };
    if (id == "table1")
        return verify_table1();
    if (id == "counterexample")
        return fixture_counterexample().report;
    if (id == "queen-king")
        return verify_queen_king_simply_connected(4, 4);
    if (id == "lovasz")
        return verify_lovasz(chordal(), o.seed);
    if (id == "chordal-main")
        return verify_chordal_main(stiff_chordal_corpus(count(100), o.seed).graphs, o.seed);
    if (id == "chordal-n-connected")
        return verify_chordal_n_connected(chordal(), o.verify_fold_cap, o.seed);
    if (id == "fold-invariance")
        return verify_fold_invariance(fold_corpus(count(100), o.seed), o.seed);
    if (id == "mycielskian")
        return verify_mycielskian(mycielski_corpus(count(20), o.seed), o.seed);
    if (id == "cut-theorem")
        return verify_cut_theorem(cut_theorem_corpus());
    if (id == "vertexconnectivity-i")
        return verify_vertexconnectivity_theorem(vertexconnectivity_corpus(count(200), o.seed), Variant::i, o.seed);
    if (id == "vertexconnectivity-ii")
        return verify_vertexconnectivity_theorem(vertexconnectivity_corpus(count(200), o.seed), Variant::ii, o.seed);
    if (id == "weakly-triangulated")
        return verify_weakly_triangulated(weakly_triangulated_corpus(count(40), o.seed), o.seed);
    throw UsageError("unknown verifier \"" + id + "\"");
}

int cmd_verify(const Options & o, const std::string & which)
{
    std::vector<std::string> ids;
    if (which == "all")
        ids = verifier_ids();
    else
        ids.push_back(which);

    std::vector<VerificationReport> reports;
    for (const auto & id : ids) {
        reports.push_back(run_verifier(id, o));
        const auto & r = reports.back();
        std::cerr << r.theorem_id << ": " << (r.passed() ? "pass" : "FAIL") << ", checked " << r.instances_checked
                  << " instances, " << r.failures.size() << " failures, " << r.inconclusive.size() << " inconclusive, "
                  << r.skipped.size() << " skipped (" << to_string(r.regime) << ")\n";
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const VerificationReport & r) { return r.passed(); });

    if (o.format == "table") {
        std::ostringstream out;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto & r = reports[i];
            out << (i ? "\n" : "") << (r.passed() ? "pass " : "FAIL ") << r.theorem_id << " checked=" << r.instances_checked
                << " failures=" << r.failures.size() << " inconclusive=" << r.inconclusive.size()
                << " skipped=" << r.skipped.size() << " regime=" << to_string(r.regime);
        }
        emit(o, out.str());
    } else if (reports.size() == 1) {
        emit(o, report_to_json(reports.front()));
    } else {
        std::string all = "[";
        for (std::size_t i = 0; i < reports.size(); ++i)
            all += (i ? "," : "") + report_to_json(reports[i]);
        emit(o, all + "]");
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Neighbourhood complexes of graphs: homology, connectivity, chordality, folds"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--output", o.output, "Write machine output here instead of stdout");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    };

    // gen
    auto * gen = app.add_subcommand("gen", "Generate a graph as canonical JSON");
    gen->require_subcommand(1);
    gen->fallthrough();
    gen->add_option("--output", o.output, "Write the graph here instead of stdout");
    int a = 0, b = 0;
    std::string file;
    RandomChordalParams params;
    auto * g_complete = gen->add_subcommand("complete", "K_p");
    g_complete->add_option("p", a)->required();
    auto * g_cycle = gen->add_subcommand("cycle", "C_k");
    g_cycle->add_option("k", a)->required();
    auto * g_path = gen->add_subcommand("path", "Path on k vertices");
    g_path->add_option("k", a)->required();
    auto * g_queen = gen->add_subcommand("queen", "m x n queen graph");
    g_queen->add_option("m", a)->required();
    g_queen->add_option("n", b)->required();
    auto * g_king = gen->add_subcommand("king", "m x n king graph");
    g_king->add_option("m", a)->required();
    g_king->add_option("n", b)->required();
    auto * g_myc = gen->add_subcommand("mycielskian", "Mycielskian of a graph file");
    g_myc->add_option("file", file)->required();
    auto * g_fig2 = gen->add_subcommand("figure2", "The 12-vertex 1-connected counterexample");
    auto * g_chordal = gen->add_subcommand("random-chordal", "Random chordal graph from glued cliques");
    g_chordal->add_option("--cliques", params.num_cliques, "Number of cliques")->capture_default_str();
    g_chordal->add_option("--min-size", params.min_clique_size, "Smallest clique")->capture_default_str();
    g_chordal->add_option("--max-size", params.max_clique_size, "Largest clique")->capture_default_str();
    g_chordal->add_option("--overlap-min", params.overlap_min, "Smallest overlap with earlier cliques")->capture_default_str();
    g_chordal->add_option("--seed", o.seed, "Random seed")->capture_default_str();

    // homology
    auto * hom = app.add_subcommand("homology", "Reduced integral homology of N(G) (or of a complex with --complex)");
    std::vector<std::string> inputs;
    hom->add_option("inputs", inputs, "Graph files or specs (complete:P, cycle:K, path:K, queen:M,N, king:M,N, figure2)")
        ->required();
    hom->add_option("--max-dim", o.max_dim, "Highest dimension reported")->capture_default_str();
    hom->add_flag("--complex", o.complex_input, "Inputs are complex JSON files");
    add_common(hom);

    // analyze
    auto * ana = app.add_subcommand("analyze", "Graph invariants summary");
    std::string input;
    ana->add_option("input", input, "Graph file or spec")->required();
    ana->add_option("--chromatic-cap", o.chromatic_cap, "Vertex cap for the exact chromatic number")->capture_default_str();
    ana->add_option("--wt-cap", o.wt_cap, "Vertex cap for weak-triangulation search")->capture_default_str();
    add_common(ana);

    // verify
    auto * ver = app.add_subcommand("verify", "Run theorem verifiers; exit 1 on any failure");
    std::string which;
    std::string ids = "all";
    for (const auto & id : verifier_ids())
        ids += ", " + id;
    ver->add_option("which", which, "One of: " + ids)->required();
    ver->add_option("--seed", o.seed, "Corpus seed")->capture_default_str();
    ver->add_option("--count", o.count, "Corpus size (default depends on the verifier)");
    ver->add_option("--fold-cap", o.verify_fold_cap, "Vertex cap for the exhaustive fold-onto-clique search")
        ->capture_default_str();
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Graph g;
            if (g_complete->parsed())
                g = complete_graph(a);
            else if (g_cycle->parsed())
                g = cycle_graph(a);
            else if (g_path->parsed())
                g = path_graph(a);
            else if (g_queen->parsed())
                g = queen_graph(a, b);
            else if (g_king->parsed())
                g = king_graph(a, b);
            else if (g_myc->parsed())
                g = mycielskian(read_graph_file(file));
            else if (g_fig2->parsed())
                g = figure2_graph();
            else if (g_chordal->parsed())
                g = random_chordal(params, o.seed).graph;
            emit(o, graph_to_json(g));
            return 0;
        }
        if (hom->parsed())
            return cmd_homology(o, inputs);
        if (ana->parsed())
            return cmd_analyze(o, input);
        if (ver->parsed())
            return cmd_verify(o, which);
    } catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TooLarge & e) {
        std::cerr << "too large: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
