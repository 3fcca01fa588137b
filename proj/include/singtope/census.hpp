#pragma once

// Exhaustive census of small weighted trees (all genus 0, weights in
// [min_weight, -2]) checking
//
//     (rational and metrically conical)  <=>  recognized as some G_{n,k,l}
//
// together with the decomposition and lcm invariants on every graph.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "singtope/canonical.hpp"
#include "singtope/classify.hpp"
#include "singtope/error.hpp"
#include "singtope/family.hpp"
#include "singtope/graph.hpp"
#include "singtope/io.hpp"

namespace singtope {

enum class CensusShape { Trees, Stars, Bamboos };

inline constexpr std::size_t kCensusMaxVertices = 12;
inline constexpr int kCensusMinWeight = -9;

struct CensusOptions {
    std::size_t max_vertices = 7;
    int min_weight = -4;
    CensusShape shape = CensusShape::Trees;
    std::size_t jobs = 1;
    LauferOptions laufer;
};

inline std::string to_string(CensusShape s)
{
    switch (s) {
    case CensusShape::Trees:
        return "trees";
    case CensusShape::Stars:
        return "stars";
    case CensusShape::Bamboos:
        return "bamboos";
    }
    return "?";
}

inline std::optional<std::string> census_options_error(const CensusOptions& o)
{
    if (o.max_vertices < 1 || o.max_vertices > kCensusMaxVertices)
        return "max_vertices must be in 1.." + std::to_string(kCensusMaxVertices);
    if (o.min_weight < kCensusMinWeight || o.min_weight > -2)
        return "min_weight must be in " + std::to_string(kCensusMinWeight) + "..-2";
    if (o.jobs < 1)
        return "jobs must be at least 1";
    return std::nullopt;
}

struct CensusCounterexample {
    CanonicalKey key;
    WeightedGraph graph;
    bool rational = false;
    std::optional<bool> conical;
    std::optional<FamilyParams> family;
};

struct InvariantFailure {
    CanonicalKey key;
    std::string kind; ///< "node", "partition", "decomposition" or "lcm"
    std::string what;
};

struct CensusReport {
    CensusShape shape = CensusShape::Trees;
    std::size_t max_vertices = 0;
    int min_weight = 0;
    std::size_t total = 0;
    std::size_t negative_definite = 0;
    std::size_t rational = 0;
    std::size_t conical = 0;
    std::size_t family_matched = 0;
    std::vector<CensusCounterexample> counterexamples;
    std::vector<InvariantFailure> invariant_failures;
};

// ---------------------------------------------------------------- enumeration

namespace detail {

    /// All sequences over [min_w, -2] of the given length, in lexicographic
    /// order of the weight values.
    template <class F>
    void for_each_sequence(std::size_t len, int min_w, F&& f)
    {
        std::vector<int> seq(len, min_w);
        for (;;) {
            f(seq);
            std::size_t i = len;
            while (i > 0 && seq[i - 1] == -2)
                seq[--i] = min_w;
            if (i == 0)
                return;
            ++seq[i - 1];
        }
    }

    /// Unweighted tree shapes with exactly m vertices, for m = 1..max.
    inline std::vector<std::vector<WeightedGraph>> tree_shapes(std::size_t max)
    {
        std::vector<std::vector<WeightedGraph>> by_size(max + 1);
        by_size[1].push_back(WeightedGraph({Vertex{}}, {}));
        for (std::size_t m = 2; m <= max; ++m) {
            std::set<CanonicalKey> seen;
            for (const auto& t : by_size[m - 1]) {
                for (VertexId v = 0; v < t.size(); ++v) {
                    std::vector<Vertex> vs = t.vertices();
                    vs.push_back(Vertex{});
                    std::vector<Edge> es = t.edges();
                    es.emplace_back(v, m - 1);
                    WeightedGraph g(std::move(vs), es);
                    if (seen.insert(canonical_form(g)).second)
                        by_size[m].push_back(std::move(g));
                }
            }
        }
        return by_size;
    }

    inline WeightedGraph with_weights(const WeightedGraph& shape, const std::vector<int>& w)
    {
        std::vector<Vertex> vs;
        for (int x : w)
            vs.push_back(Vertex{x, 0});
        return WeightedGraph(std::move(vs), shape.edges());
    }

} // namespace detail

/// Bamboos with lo..hi vertices, one per isomorphism class (a weight
/// sequence is kept when it is not larger than its reverse).
template <class F>
void for_each_bamboo(std::size_t lo, std::size_t hi, int min_w, F&& visit)
{
    for (std::size_t len = std::max<std::size_t>(lo, 1); len <= hi; ++len)
        detail::for_each_sequence(len, min_w, [&](const std::vector<int>& seq) {
            if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end()))
                return;
            visit(make_bamboo(seq));
        });
}

/// Stars with at least three arms and at most max vertices, one per
/// isomorphism class: arms are taken as a non-decreasing index sequence into
/// a fixed list of arm weight sequences.
template <class F>
void for_each_proper_star(std::size_t max, int min_w, F&& visit)
{
    if (max < 4)
        return;
    std::vector<std::vector<int>> arm_list;
    for (std::size_t len = 1; len + 3 <= max; ++len)
        detail::for_each_sequence(len, min_w, [&](const std::vector<int>& s) { arm_list.push_back(s); });
    std::vector<std::vector<int>> arms;
    auto rec = [&](auto& self, std::size_t from, std::size_t used) -> void {
        if (arms.size() >= 3)
            for (int c = min_w; c <= -2; ++c)
                visit(make_star(c, arms));
        for (std::size_t i = from; i < arm_list.size(); ++i) {
            const std::size_t len = arm_list[i].size();
            // remaining arms need at least one vertex each to reach three
            const std::size_t still = arms.size() + 1 >= 3 ? 0 : 3 - (arms.size() + 1);
            if (1 + used + len + still > max)
                break; // arm_list is sorted by length
            arms.push_back(arm_list[i]);
            self(self, i, used + len);
            arms.pop_back();
        }
    };
    rec(rec, 0, 0);
}

/// Candidate stream for one census shape, restricted to the partition units
/// with index = worker mod jobs. Stars and bamboos are one unit per graph;
/// trees are one unit per unweighted shape so the dedup stays local.
template <class F>
void for_each_census_graph(const CensusOptions& o, F&& visit, std::size_t jobs = 1, std::size_t worker = 0)
{
    std::size_t index = 0;
    auto emit = [&](const WeightedGraph& g) {
        if (index++ % jobs == worker)
            visit(g);
    };
    switch (o.shape) {
    case CensusShape::Bamboos:
        for_each_bamboo(2, o.max_vertices, o.min_weight, emit);
        break;
    case CensusShape::Stars:
        for_each_bamboo(1, o.max_vertices, o.min_weight, emit);
        for_each_proper_star(o.max_vertices, o.min_weight, emit);
        break;
    case CensusShape::Trees: {
        const auto shapes = detail::tree_shapes(o.max_vertices);
        for (std::size_t m = 1; m <= o.max_vertices; ++m)
            for (const auto& shape : shapes[m]) {
                if (index++ % jobs != worker)
                    continue;
                std::set<CanonicalKey> seen;
                detail::for_each_sequence(m, o.min_weight, [&](const std::vector<int>& w) {
                    WeightedGraph g = detail::with_weights(shape, w);
                    if (seen.insert(canonical_form(g)).second)
                        visit(g);
                });
            }
        break;
    }
    }
}

// ---------------------------------------------------------------- checking

/// Runs analyze on g and folds the outcome into the report.
inline void census_check(const WeightedGraph& g, const LauferOptions& laufer, CensusReport& out)
{
    AnalyzeOptions ao;
    ao.laufer = laufer;
    const AnalysisReport r = analyze(g, ao);
    ++out.total;
    out.negative_definite += r.negative_definite;
    out.rational += r.rational;
    const bool conical = r.metrically_conical.value_or(false);
    out.conical += conical;
    out.family_matched += r.family.has_value();

    auto fail = [&](std::string kind, std::string what) {
        out.invariant_failures.push_back({canonical_form(g), std::move(kind), std::move(what)});
    };

    if ((r.rational && conical) != r.family.has_value())
        out.counterexamples.push_back({canonical_form(g), g, r.rational, r.metrically_conical, r.family});

    if (!r.rational)
        return;
    if (conical && (r.node_count != 1u || r.l_nodes->size() != 1))
        fail("node", "conical graph without a unique node equal to the unique L-node");
    if (!r.decomposition) {
        fail("decomposition", "no decomposition for a rational graph");
        return;
    }
    const Decomposition& d = *r.decomposition;
    std::vector<int> cover(d.working_graph.size(), 0);
    for (const auto& p : d.thick_pieces) {
        ++cover[p.l_node];
        for (const auto& b : p.bamboos)
            for (VertexId v : b)
                ++cover[v];
    }
    for (const auto& t : d.thin_pieces)
        for (VertexId v : t)
            ++cover[v];
    if (!std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }))
        fail("partition", "thick and thin pieces do not partition the vertices");
    const bool one_thick = d.thick_pieces.size() == 1 && d.thin_pieces.empty();
    if (one_thick != conical)
        fail("decomposition", conical ? "conical but decomposition has thin pieces or several thick pieces"
                     : "not conical but decomposition has one thick piece and no thin piece");
    if (conical && r.star && (!r.lcm || !r.lcm->holds))
        fail("lcm", "central multiplicity of Z_min differs from lcm of arm numerators");
}

inline void merge_into(CensusReport& into, CensusReport&& part)
{
    into.total += part.total;
    into.negative_definite += part.negative_definite;
    into.rational += part.rational;
    into.conical += part.conical;
    into.family_matched += part.family_matched;
    for (auto& c : part.counterexamples)
        into.counterexamples.push_back(std::move(c));
    for (auto& f : part.invariant_failures)
        into.invariant_failures.push_back(std::move(f));
}

/// Worker w handles the candidates whose partition index is w mod jobs.
/// Lists are sorted by canonical key, so the result does not depend on jobs.
inline CensusReport census(const CensusOptions& o)
{
    if (auto err = census_options_error(o))
        throw Error("census: " + *err);
    CensusReport report;
    report.shape = o.shape;
    report.max_vertices = o.max_vertices;
    report.min_weight = o.min_weight;

    std::vector<CensusReport> parts(o.jobs);
    auto work = [&](std::size_t w) {
        for_each_census_graph(
            o, [&](const WeightedGraph& g) { census_check(g, o.laufer, parts[w]); }, o.jobs, w);
    };
    if (o.jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < o.jobs; ++w)
            threads.emplace_back(work, w);
    }
    for (auto& p : parts)
        merge_into(report, std::move(p));
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    std::sort(report.invariant_failures.begin(), report.invariant_failures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.key, a.kind, a.what) < std::tie(b.key, b.kind, b.what);
    });
    return report;
}

inline nlohmann::json census_to_json(const CensusReport& r)
{
    using nlohmann::json;
    json ce = json::array();
    for (const auto& c : r.counterexamples)
        ce.push_back({{"key", c.key},
                      {"graph", graph_to_json(c.graph)},
                      {"rational", c.rational},
                      {"conical", c.conical ? json(*c.conical) : json(nullptr)},
                      {"family", family_to_json(c.family)}});
    json inv = json::array();
    for (const auto& f : r.invariant_failures)
        inv.push_back({{"key", f.key}, {"kind", f.kind}, {"what", f.what}});
    json j;
    j["schema"] = 1;
    j["shape"] = to_string(r.shape);
    j["max_vertices"] = r.max_vertices;
    j["min_weight"] = r.min_weight;
    j["total"] = r.total;
    j["negative_definite"] = r.negative_definite;
    j["rational"] = r.rational;
    j["conical"] = r.conical;
    j["family_matched"] = r.family_matched;
    j["counterexamples"] = ce;
    j["invariant_failures"] = inv;
    return j;
}

} // namespace singtope
