// singtope: command-line front end.
//
// Exit codes: 0 ok, 1 census counterexample, 2 parse or parameter error,
// 3 verdict refused (or trace of a non-negative-definite graph),
// 4 any other runtime error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "singtope/singtope.hpp"

using namespace singtope;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kRefused = 3, kRuntime = 4 };

struct UsageError : Error {
    using Error::Error;
};

struct Input {
    std::string path;
    std::string star;
    std::string family;
};

WeightedGraph load(const Input& in)
{
    const int given = !in.path.empty() + !in.star.empty() + !in.family.empty();
    if (given != 1)
        throw UsageError("give exactly one of: a graph file, --star, --family");
    if (!in.star.empty())
        return parse_star(in.star);
    if (!in.family.empty())
        return generate(parse_family_params(in.family));
    std::string text;
    if (in.path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(in.path);
        if (!f)
            throw ParseError("cannot open '" + in.path + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_graph(text);
}

LauferOptions laufer_options()
{
    LauferOptions o;
    if (const char* env = std::getenv("SINGTOPE_STEP_BUDGET")) {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception&) {
        }
        if (v <= 0 || used != std::string(env).size())
            throw UsageError(std::string("SINGTOPE_STEP_BUDGET must be a positive integer (got '") + env + "')");
        o.step_budget = static_cast<std::size_t>(v);
    }
    return o;
}

std::string join(const std::vector<std::int64_t>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

std::string join_ids(const std::vector<VertexId>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + std::to_string(xs[i]);
    return s.empty() ? "-" : s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string report_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << "vertices: " << r.graph.size() << '\n';
    out << "negative definite: " << yes_no(r.negative_definite) << '\n';
    if (r.trace)
        out << "zmin: " << join(r.trace->final_cycle.values()) << '\n';
    out << "rational: " << yes_no(r.rational) << '\n';
    if (r.l_nodes)
        out << "l-nodes: " << join_ids(*r.l_nodes) << '\n';
    if (r.node_count)
        out << "nodes: " << *r.node_count << '\n';
    out << "metrically conical: "
        << (r.metrically_conical ? yes_no(*r.metrically_conical) : "undetermined") << '\n';
    out << "family: ";
    if (r.family)
        out << "G(" << r.family->n << ',' << r.family->k << ',' << r.family->l << ")\n";
    else
        out << "none\n";
    if (r.lcm)
        out << "center multiplicity: " << r.lcm->center_mult << ", lcm of arm p: " << r.lcm->lcm << '\n';
    for (const auto& d : r.diagnostics)
        out << "note: " << d << '\n';
    return out.str();
}

std::string trace_text(const WeightedGraph& g, const LauferTrace& t)
{
    std::ostringstream out;
    Cycle z(g.size(), 1);
    out << "Z_1 = " << join(z.values()) << '\n';
    out << "step  vertex  dot  max_dot  multiplicities\n";
    for (const auto& s : t.steps) {
        z[s.vertex] += 1;
        out << std::left << std::setw(6) << s.index << std::setw(8) << s.vertex << std::setw(5) << s.dot
            << std::setw(9) << s.max_dot << join(z.values()) << '\n';
    }
    out << "Z_min = " << join(t.final_cycle.values()) << '\n';
    out << "additions: " << t.steps.size() << '\n';
    out << "rational: " << yes_no(t.rational_verdict) << '\n';
    if (t.violation)
        out << "violation: state " << t.violation->step << ", vertex " << t.violation->vertex << ", dot "
            << t.violation->value << '\n';
    return out.str();
}

std::string decomposition_text(const Decomposition& d)
{
    std::ostringstream out;
    out << "blow-ups: " << d.blowups_performed << '\n';
    out << "l-nodes: " << join_ids(d.l_nodes) << '\n';
    for (const auto& p : d.thick_pieces) {
        out << "thick piece at " << p.l_node << ':';
        for (const auto& b : p.bamboos)
            out << " [" << join_ids(b) << ']';
        out << '\n';
    }
    for (const auto& t : d.thin_pieces)
        out << "thin piece: " << join_ids(t) << '\n';
    out << "thick: " << d.thick_pieces.size() << ", thin: " << d.thin_pieces.size() << '\n';
    return out.str();
}

std::string census_text(const CensusReport& r)
{
    std::ostringstream out;
    out << "shape: " << to_string(r.shape) << ", max vertices: " << r.max_vertices
        << ", weights: " << r.min_weight << "..-2\n";
    out << "total: " << r.total << '\n';
    out << "negative definite: " << r.negative_definite << '\n';
    out << "rational: " << r.rational << '\n';
    out << "conical: " << r.conical << '\n';
    out << "family matched: " << r.family_matched << '\n';
    out << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples)
        out << "  " << c.key << '\n';
    out << "invariant failures: " << r.invariant_failures.size() << '\n';
    for (const auto& f : r.invariant_failures)
        out << "  " << f.key << ": " << f.what << '\n';
    return out.str();
}

std::string emit_graph(const WeightedGraph& g, const std::string& format)
{
    if (format == "dot")
        return emit_dot(g);
    if (format == "text")
        return emit_text(g);
    return graph_to_json(g).dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational surface singularity graphs: Laufer sequences, thick-thin decompositions, "
                 "metric conicality"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string seed = "none";
    std::size_t jobs = 1;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text", "dot"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Only 'none' is accepted; the tool is deterministic")
        ->check(CLI::IsMember({"none"}));
    app.add_option("--jobs", jobs, "Census worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    Input in;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("graph", in.path, "Graph file (text, JSON or star shorthand); '-' for stdin");
        sub->add_option("--star", in.star, "Star shorthand, e.g. \"center=-2 arms=[-2|-2|-2]\"");
        sub->add_option("--family", in.family, "Family member n,k,l");
        sub->fallthrough();
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
    add_input(analyze_cmd);
    bool require_conical = false;
    analyze_cmd->add_flag("--require-conical", require_conical,
                          "Exit 3 when conicality is not topologically determined");

    auto* family_cmd = app.add_subcommand("family", "Generate G_{n,k,l}");
    std::string params;
    bool emit = false, family_analyze = false;
    family_cmd->add_option("params", params, "n,k,l")->required();
    auto* emit_flag = family_cmd->add_flag("--emit", emit, "Emit the graph (default)");
    family_cmd->add_flag("--analyze", family_analyze, "Emit the analysis report")->excludes(emit_flag);
    family_cmd->fallthrough();

    auto* census_cmd = app.add_subcommand("census", "Check the classification on all small trees");
    std::size_t max_vertices = 7;
    int min_weight = -4;
    bool stars = false, bamboos = false;
    census_cmd->add_option("--max-vertices", max_vertices)->capture_default_str();
    census_cmd->add_option("--min-weight", min_weight)->capture_default_str();
    auto* stars_flag = census_cmd->add_flag("--stars", stars, "Star-shaped trees (bamboos included)");
    census_cmd->add_flag("--bamboos", bamboos, "Bamboos with at least two vertices")->excludes(stars_flag);
    census_cmd->fallthrough();

    auto* trace_cmd = app.add_subcommand("trace", "Laufer computation sequence");
    add_input(trace_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Thick-thin decomposition");
    add_input(decompose_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const LauferOptions lo = laufer_options();
        if (analyze_cmd->parsed()) {
            const WeightedGraph g = load(in);
            AnalyzeOptions ao;
            ao.laufer = lo;
            const AnalysisReport r = analyze(g, ao);
            if (format == "dot")
                std::cout << emit_dot(g);
            else if (format == "text")
                std::cout << report_text(r);
            else
                std::cout << report_to_json(r).dump(2) << '\n';
            if (require_conical && !r.metrically_conical) {
                std::cerr << "error: conicality not topologically determined for this graph\n";
                return kRefused;
            }
            return kOk;
        }
        if (family_cmd->parsed()) {
            const WeightedGraph g = generate(parse_family_params(params));
            if (!family_analyze) {
                std::cout << emit_graph(g, format);
                return kOk;
            }
            AnalyzeOptions ao;
            ao.laufer = lo;
            const AnalysisReport r = analyze(g, ao);
            std::cout << (format == "text" ? report_text(r) : report_to_json(r).dump(2) + "\n");
            return kOk;
        }
        if (census_cmd->parsed()) {
            if (format == "dot")
                throw UsageError("census has no dot output");
            CensusOptions co;
            co.max_vertices = max_vertices;
            co.min_weight = min_weight;
            co.shape = stars ? CensusShape::Stars : bamboos ? CensusShape::Bamboos : CensusShape::Trees;
            co.jobs = jobs;
            co.laufer = lo;
            if (auto err = census_options_error(co))
                throw UsageError(*err);
            const CensusReport r = census(co);
            std::cout << (format == "text" ? census_text(r) : census_to_json(r).dump(2) + "\n");
            return r.counterexamples.empty() ? kOk : kCounterexample;
        }
        if (trace_cmd->parsed()) {
            const WeightedGraph g = load(in);
            const LauferTrace t = laufer_zmin(g, lo);
            if (format == "text")
                std::cout << trace_text(g, t);
            else if (format == "dot")
                std::cout << emit_dot(g);
            else
                std::cout << trace_to_json(t).dump(2) << '\n';
            return kOk;
        }
        if (decompose_cmd->parsed()) {
            const WeightedGraph g = load(in);
            ThickThinOptions to;
            to.laufer = lo;
            const Decomposition d = thick_thin(g, to);
            if (format == "text")
                std::cout << decomposition_text(d);
            else if (format == "dot")
                std::cout << emit_dot(d.working_graph);
            else
                std::cout << decomposition_to_json(d).dump(2) << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotNegativeDefinite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRefused;
    } catch (const VerdictRefused& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
