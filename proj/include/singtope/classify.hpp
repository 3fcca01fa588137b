#pragma once

// Combinatorial thick-thin decomposition of rational singularities and the
// metric-conicality verdict.
//
// For a rational singularity the maximal ideal cycle equals Z_min, so the
// L-nodes (curves met by the strict transform of a generic linear form) are
// exactly the vertices with Z_min . E_v < 0. Conical iff the graph has a
// single node (valence >= 3 or L-node) and it is the unique L-node;
// equivalently the decomposition has one thick piece and no thin piece.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singtope/arms.hpp"
#include "singtope/canonical.hpp"
#include "singtope/error.hpp"
#include "singtope/family.hpp"
#include "singtope/graph.hpp"
#include "singtope/io.hpp"
#include "singtope/laufer.hpp"

namespace singtope {

inline std::vector<VertexId> l_nodes(const WeightedGraph& g, const Cycle& zmin)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.size(); ++v)
        if (dot(g, zmin, v) < 0)
            out.push_back(v);
    return out;
}

inline std::size_t node_count(const WeightedGraph& g, const std::vector<VertexId>& lnodes)
{
    std::size_t count = 0;
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.neighbors(v).size() >= 3 || std::find(lnodes.begin(), lnodes.end(), v) != lnodes.end())
            ++count;
    return count;
}

namespace detail {

    /// Laufer trace for a graph that must be negative definite and rational
    /// for a topological verdict to exist.
    inline LauferTrace require_rational(const WeightedGraph& g, const LauferOptions& opt)
    {
        if (!is_negative_definite(g))
            throw VerdictRefused("conicality not topologically determined: graph is not negative definite");
        LauferOptions o = opt;
        o.require_negative_definite = false;
        LauferTrace t = laufer_zmin(g, o);
        if (!t.rational_verdict)
            throw VerdictRefused("conicality not topologically determined: singularity is not rational");
        return t;
    }

    inline bool conical_from(const WeightedGraph& g, const std::vector<VertexId>& lnodes)
    {
        if (lnodes.size() != 1 || node_count(g, lnodes) != 1)
            return false;
        return true; // the only node is then the L-node
    }

} // namespace detail

/// Throws VerdictRefused for non-rational (or non-negative-definite) input.
inline bool is_metrically_conical(const WeightedGraph& g, const LauferOptions& opt = {})
{
    const LauferTrace t = detail::require_rational(g, opt);
    return detail::conical_from(g, l_nodes(g, t.final_cycle));
}

struct ThickPiece {
    VertexId l_node = 0;
    std::vector<std::vector<VertexId>> bamboos;
};

struct Decomposition {
    WeightedGraph working_graph; ///< input after separating adjacent L-nodes
    Cycle zmin;                  ///< on the working graph
    std::vector<VertexId> l_nodes;
    std::vector<ThickPiece> thick_pieces;
    std::vector<std::vector<VertexId>> tjurina_components;
    std::vector<std::vector<VertexId>> thin_pieces;
    std::size_t blowups_performed = 0;
};

struct ThickThinOptions {
    LauferOptions laufer;
    std::optional<std::size_t> max_blowups; ///< default 2 * vertex count
};

inline Decomposition thick_thin(const WeightedGraph& input, const ThickThinOptions& opt = {})
{
    WeightedGraph g = input;
    LauferTrace trace = detail::require_rational(g, opt.laufer);
    const std::size_t cap = opt.max_blowups.value_or(2 * input.size());
    std::size_t blowups = 0;
    std::vector<VertexId> lnodes;
    for (;;) {
        lnodes = l_nodes(g, trace.final_cycle);
        std::optional<Edge> adjacent;
        for (const Edge& e : g.edges()) {
            if (std::binary_search(lnodes.begin(), lnodes.end(), e.a)
                && std::binary_search(lnodes.begin(), lnodes.end(), e.b)) {
                adjacent = e;
                break;
            }
        }
        if (!adjacent)
            break;
        if (blowups >= cap)
            throw Error("thick_thin: more than " + std::to_string(cap)
                        + " blow-ups needed to separate L-nodes");
        g = blow_up_edge(g, adjacent->a, adjacent->b);
        ++blowups;
        LauferOptions o = opt.laufer;
        o.require_negative_definite = false; // preserved by blow-up
        trace = laufer_zmin(g, o);
    }

    Decomposition d{g, trace.final_cycle, lnodes, {}, {}, {}, blowups};
    std::vector<char> is_l(g.size(), 0);
    for (VertexId v : lnodes)
        is_l[v] = 1;
    std::vector<int> comp(g.size(), -1);
    for (VertexId s = 0; s < g.size(); ++s) {
        if (is_l[s] || comp[s] >= 0)
            continue;
        const int id = static_cast<int>(d.tjurina_components.size());
        std::vector<VertexId> members{s};
        comp[s] = id;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (VertexId u : g.neighbors(members[i]))
                if (!is_l[u] && comp[u] < 0) {
                    comp[u] = id;
                    members.push_back(u);
                }
        std::sort(members.begin(), members.end());
        d.tjurina_components.push_back(std::move(members));
    }
    for (VertexId v : lnodes)
        d.thick_pieces.push_back({v, {}});
    for (const auto& c : d.tjurina_components) {
        // a bamboo: valence-2 vertices ending in one valence-1 vertex,
        // valences taken in the working graph
        std::size_t ones = 0;
        bool ok = true;
        for (VertexId v : c) {
            const auto val = g.neighbors(v).size();
            if (val == 1)
                ++ones;
            else if (val != 2)
                ok = false;
        }
        if (ok && ones == 1) {
            VertexId attach = 0;
            for (VertexId v : c)
                for (VertexId u : g.neighbors(v))
                    if (is_l[u])
                        attach = u;
            for (auto& piece : d.thick_pieces)
                if (piece.l_node == attach)
                    piece.bamboos.push_back(c);
        } else {
            d.thin_pieces.push_back(c);
        }
    }
    return d;
}

struct AnalysisReport {
    WeightedGraph graph;
    bool negative_definite = false;
    std::optional<LauferTrace> trace{};
    bool rational = false;
    std::optional<std::vector<VertexId>> l_nodes{};
    std::optional<std::size_t> node_count{};
    std::optional<Decomposition> decomposition{};
    std::optional<bool> metrically_conical{};
    std::optional<FamilyParams> family{};
    std::optional<StarDecomposition> star{};
    std::optional<MulteqReport> arms{};
    std::optional<LcmReport> lcm{};
    std::vector<std::string> diagnostics{};
};

struct AnalyzeOptions {
    LauferOptions laufer;
    bool decompose = true;
    bool arm_reports = true;
};

inline AnalysisReport analyze(const WeightedGraph& g, const AnalyzeOptions& opt = {})
{
    AnalysisReport r{.graph = g};
    r.family = recognize(g);
    r.star = is_starshaped(g);
    r.negative_definite = is_negative_definite(g);
    if (!r.negative_definite) {
        r.diagnostics.push_back("not negative definite: not the resolution graph of a singularity");
        return r;
    }
    LauferOptions lo = opt.laufer;
    lo.require_negative_definite = false;
    try {
        r.trace = laufer_zmin(g, lo);
    } catch (const Error& e) {
        r.diagnostics.push_back(e.what());
        return r;
    }
    r.rational = r.trace->rational_verdict;
    const Cycle& zmin = r.trace->final_cycle;

    if (opt.arm_reports && r.star) {
        const bool minimal_arms = std::all_of(g.vertices().begin(), g.vertices().end(),
                                              [&](const Vertex& v) { return v.weight <= -2; });
        if (minimal_arms) {
            r.arms = check_multeq(g, *r.star, zmin);
            r.lcm = lcm_report(g, *r.star, zmin);
        }
    }

    if (!r.rational) {
        if (!g.all_genus_zero())
            r.diagnostics.push_back("not rational: some curve has positive genus");
        else
            r.diagnostics.push_back("not rational: Laufer sequence reaches Z.E >= 2");
        r.diagnostics.push_back("conicality not topologically determined for non-rational graphs");
        return r;
    }
    r.l_nodes = l_nodes(g, zmin);
    r.node_count = node_count(g, *r.l_nodes);
    r.metrically_conical = detail::conical_from(g, *r.l_nodes);
    if (opt.decompose) {
        try {
            ThickThinOptions to;
            to.laufer = opt.laufer;
            r.decomposition = thick_thin(g, to);
        } catch (const Error& e) {
            r.diagnostics.push_back(e.what());
        }
    }
    return r;
}

inline nlohmann::json decomposition_to_json(const Decomposition& d)
{
    nlohmann::json thick = nlohmann::json::array();
    for (const auto& p : d.thick_pieces)
        thick.push_back({{"l_node", p.l_node}, {"bamboos", p.bamboos}});
    return {{"l_nodes", d.l_nodes},
            {"thick_pieces", thick},
            {"tjurina_components", d.tjurina_components},
            {"thin_pieces", d.thin_pieces},
            {"blowups_performed", d.blowups_performed},
            {"working_graph", graph_to_json(d.working_graph)},
            {"zmin", d.zmin.values()}};
}

inline nlohmann::json report_to_json(const AnalysisReport& r)
{
    using nlohmann::json;
    json j;
    j["schema"] = 1;
    j["graph"] = graph_to_json(r.graph);
    j["negative_definite"] = r.negative_definite;
    j["zmin"] = r.trace ? json(r.trace->final_cycle.values()) : json(nullptr);
    if (r.trace) {
        std::int64_t max_dot = 0;
        for (const auto& s : r.trace->steps)
            max_dot = std::max(max_dot, s.max_dot);
        json violation = nullptr;
        if (r.trace->violation)
            violation = {{"step", r.trace->violation->step},
                         {"vertex", r.trace->violation->vertex},
                         {"value", r.trace->violation->value}};
        j["trace"] = {{"additions", r.trace->steps.size()}, {"max_dot", max_dot}, {"violation", violation}};
    } else {
        j["trace"] = nullptr;
    }
    j["rational"] = r.rational;
    j["l_nodes"] = r.l_nodes ? json(*r.l_nodes) : json(nullptr);
    j["node_count"] = r.node_count ? json(*r.node_count) : json(nullptr);
    j["metrically_conical"] = r.metrically_conical ? json(*r.metrically_conical) : json(nullptr);
    j["decomposition"] = r.decomposition ? decomposition_to_json(*r.decomposition) : json(nullptr);
    j["family"] = family_to_json(r.family);
    if (r.star && r.trace) {
        j["center"] = {{"id", r.star->center}, {"multiplicity", r.trace->final_cycle[r.star->center]}};
    } else {
        j["center"] = nullptr;
    }
    if (r.arms) {
        json arms = json::array();
        for (const auto& a : r.arms->arms)
            arms.push_back(arm_report_to_json(a));
        j["arms"] = arms;
        j["multeq_holds"] = r.arms->holds;
    } else {
        j["arms"] = nullptr;
        j["multeq_holds"] = nullptr;
    }
    j["lcm"] = r.lcm ? json{{"center_mult", r.lcm->center_mult}, {"lcm", r.lcm->lcm}, {"p", r.lcm->p},
                            {"holds", r.lcm->holds}}
                     : json(nullptr);
    j["diagnostics"] = r.diagnostics;
    return j;
}

} // namespace singtope
