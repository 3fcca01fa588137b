#pragma once

// Cycles supported on the exceptional set, Laufer's computation sequence for
// the fundamental cycle Z_min, and Laufer's rationality criterion.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singtope/definite.hpp"
#include "singtope/error.hpp"
#include "singtope/graph.hpp"

namespace singtope {

/// Multiplicity vector sum_v m_v E_v, indexed by vertex id.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::size_t n, std::int64_t fill = 0) : mult_(n, fill) {}
    explicit Cycle(std::vector<std::int64_t> mult) : mult_(std::move(mult)) {}
    Cycle(std::initializer_list<std::int64_t> mult) : mult_(mult) {}

    std::size_t size() const { return mult_.size(); }
    std::int64_t operator[](VertexId v) const { return mult_[v]; }
    std::int64_t& operator[](VertexId v) { return mult_[v]; }
    const std::vector<std::int64_t>& values() const { return mult_; }

    bool is_zero() const
    {
        return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m == 0; });
    }
    bool is_effective() const
    {
        return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m >= 0; });
    }
    std::int64_t total() const { return std::accumulate(mult_.begin(), mult_.end(), std::int64_t{0}); }

    /// Componentwise <=.
    bool dominated_by(const Cycle& other) const
    {
        for (std::size_t i = 0; i < mult_.size(); ++i)
            if (mult_[i] > other.mult_[i])
                return false;
        return true;
    }

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<std::int64_t> mult_;
};

inline void check_length(const WeightedGraph& g, const Cycle& z)
{
    if (z.size() != g.size())
        throw GraphError("cycle has " + std::to_string(z.size()) + " entries, graph has "
                         + std::to_string(g.size()) + " vertices");
}

/// Z . E_v
inline std::int64_t dot(const WeightedGraph& g, const Cycle& z, VertexId v)
{
    check_length(g, z);
    if (v >= g.size())
        throw GraphError("unknown vertex " + std::to_string(v));
    std::int64_t s = z[v] * g.weight(v);
    for (VertexId u : g.neighbors(v))
        s += z[u];
    return s;
}

/// Z != 0 effective with Z . E_v <= 0 for every v.
inline bool is_in_Ztop(const WeightedGraph& g, const Cycle& z)
{
    check_length(g, z);
    if (z.is_zero() || !z.is_effective())
        return false;
    for (VertexId v = 0; v < g.size(); ++v)
        if (dot(g, z, v) > 0)
            return false;
    return true;
}

struct LauferStep {
    std::size_t index = 0;  ///< i such that Z_{i+1} = Z_i + E_vertex
    VertexId vertex = 0;
    std::int64_t dot = 0;     ///< Z_i . E_vertex
    std::int64_t max_dot = 0; ///< max_v Z_i . E_v

    friend bool operator==(const LauferStep&, const LauferStep&) = default;
};

struct LauferViolation {
    std::size_t step = 0;
    VertexId vertex = 0;
    std::int64_t value = 0;

    friend bool operator==(const LauferViolation&, const LauferViolation&) = default;
};

struct LauferTrace {
    std::vector<LauferStep> steps;
    Cycle final_cycle;
    bool rational_verdict = false;
    std::optional<LauferViolation> violation;
};

enum class TieBreak {
    MaxDotLowestId, ///< default; reproducible traces
    MinDotHighestId,
};

struct LauferOptions {
    TieBreak tie_break = TieBreak::MaxDotLowestId;
    std::optional<std::size_t> step_budget; ///< default_step_budget(g) when unset
    bool require_negative_definite = true;
};

inline std::size_t default_step_budget(const WeightedGraph& g)
{
    return 64 * g.size() * static_cast<std::size_t>(std::max(1, g.max_abs_weight()));
}

/// Runs the computation sequence Z_1 = E, Z_{i+1} = Z_i + E_v while some
/// Z_i . E_v > 0. The rationality verdict fails if any vertex, chosen or
/// not, ever has Z_i . E_v >= 2, or if some curve has positive genus.
inline LauferTrace laufer_zmin(const WeightedGraph& g, const LauferOptions& opt = {})
{
    if (opt.require_negative_definite && !is_negative_definite(g))
        throw NotNegativeDefinite();

    const std::size_t n = g.size();
    const std::size_t budget = opt.step_budget.value_or(default_step_budget(g));
    LauferTrace trace;
    Cycle z(n, 1);
    std::vector<std::int64_t> dots(n);
    for (VertexId v = 0; v < n; ++v)
        dots[v] = g.weight(v) + static_cast<std::int64_t>(g.neighbors(v).size());

    for (std::size_t i = 1;; ++i) {
        std::int64_t max_dot = dots[0];
        VertexId argmax = 0;
        std::optional<VertexId> pick;
        for (VertexId v = 0; v < n; ++v) {
            if (dots[v] > max_dot) {
                max_dot = dots[v];
                argmax = v;
            }
            if (dots[v] <= 0)
                continue;
            if (!pick) {
                pick = v;
            } else if (opt.tie_break == TieBreak::MaxDotLowestId) {
                if (dots[v] > dots[*pick])
                    pick = v;
            } else if (dots[v] <= dots[*pick]) {
                pick = v;
            }
        }
        if (max_dot >= 2 && !trace.violation)
            trace.violation = LauferViolation{i, argmax, max_dot};
        if (!pick)
            break;
        if (trace.steps.size() >= budget)
            throw StepBudgetExceeded("Laufer step budget of " + std::to_string(budget)
                                     + " exceeded; is the graph negative definite?");
        const VertexId v = *pick;
        trace.steps.push_back({i, v, dots[v], max_dot});
        z[v] += 1;
        dots[v] += g.weight(v);
        for (VertexId u : g.neighbors(v))
            dots[u] += 1;
    }
    trace.final_cycle = std::move(z);
    trace.rational_verdict = g.all_genus_zero() && !trace.violation;
    return trace;
}

/// A non-negative-definite graph is not the resolution graph of any normal
/// surface singularity, so it is never the graph of a rational one.
inline bool is_rational(const WeightedGraph& g, LauferOptions opt = {})
{
    if (!is_negative_definite(g))
        return false;
    opt.require_negative_definite = false;
    return laufer_zmin(g, opt).rational_verdict;
}

inline constexpr std::size_t kOracleMaxVertices = 8;
inline constexpr std::int64_t kOracleMaxBox = 12;

/// Exhaustive search of the box [0..box]^n for the componentwise-minimal
/// element of Z_top. Independent of laufer_zmin: uses only dot products.
inline Cycle zmin_oracle(const WeightedGraph& g, std::int64_t box)
{
    const std::size_t n = g.size();
    if (n > kOracleMaxVertices)
        throw GraphError("zmin_oracle supports at most 8 vertices");
    if (box < 1 || box > kOracleMaxBox)
        throw GraphError("zmin_oracle box must be in 1..12");

    // Assign in BFS order. Unassigned neighbors only raise a dot, so an
    // assigned vertex whose partial dot is already positive cuts the branch.
    std::vector<VertexId> order{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (VertexId u : g.neighbors(order[i]))
            if (!seen[u]) {
                seen[u] = 1;
                order.push_back(u);
            }
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[order[i]] = i;
    // watch[d]: assigned vertices whose partial dot changes at depth d
    std::vector<std::vector<VertexId>> watch(n);
    for (VertexId v = 0; v < n; ++v) {
        watch[pos[v]].push_back(v);
        for (VertexId u : g.neighbors(v))
            if (pos[u] < pos[v])
                watch[pos[v]].push_back(u);
    }

    std::vector<Cycle> minimal;
    Cycle z(n);
    std::vector<char> assigned(n, 0);
    auto record = [&]() {
        if (z.is_zero())
            return;
        for (const Cycle& m : minimal)
            if (m.dominated_by(z))
                return;
        std::erase_if(minimal, [&](const Cycle& m) { return z.dominated_by(m); });
        minimal.push_back(z);
    };
    auto rec = [&](auto& self, std::size_t depth) -> void {
        if (depth == n) {
            record();
            return;
        }
        const VertexId v = order[depth];
        assigned[v] = 1;
        for (std::int64_t m = 0; m <= box; ++m) {
            z[v] = m;
            std::optional<VertexId> bad;
            for (VertexId c : watch[depth]) {
                std::int64_t s = z[c] * g.weight(c);
                for (VertexId u : g.neighbors(c))
                    if (assigned[u])
                        s += z[u];
                if (s > 0) {
                    bad = c;
                    break;
                }
            }
            if (!bad)
                self(self, depth + 1);
            else if (*bad != v)
                break; // a neighbor's dot only grows with m
        }
        z[v] = 0;
        assigned[v] = 0;
    };
    rec(rec, 0);

    if (minimal.empty())
        throw Error("zmin_oracle: no element of Z_top in the box [0.." + std::to_string(box) + "]");
    if (minimal.size() > 1)
        throw Error("zmin_oracle: Z_top has " + std::to_string(minimal.size())
                    + " minimal elements in the box");
    return minimal.front();
}

inline nlohmann::json trace_to_json(const LauferTrace& t)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"i", s.index}, {"vertex", s.vertex}, {"dot", s.dot}, {"max_dot", s.max_dot}});
    nlohmann::json violation = nullptr;
    if (t.violation)
        violation = {{"step", t.violation->step}, {"vertex", t.violation->vertex}, {"value", t.violation->value}};
    return {{"steps", steps},
            {"zmin", t.final_cycle.values()},
            {"rational", t.rational_verdict},
            {"violation", violation}};
}

} // namespace singtope
