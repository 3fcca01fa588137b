#pragma once

// Weighted dual resolution graphs and the two plumbing moves used on them.
//
// Vertices are exceptional curves: weight is the self-intersection E_v^2 and
// genus is the genus of E_v. Edges are transverse intersection points. Only
// trees are representable; every graph is validated on construction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singtope/error.hpp"

namespace singtope {

using VertexId = std::size_t;

struct Vertex {
    int weight = -2;
    int genus = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered edge, stored with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId u, VertexId v) : a(std::min(u, v)), b(std::max(u, v)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class WeightedGraph {
public:
    /// Throws GraphError unless the input is a connected simple tree with
    /// every weight <= -1 and every genus >= 0.
    WeightedGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
        : vertices_(std::move(vertices)), adj_(vertices_.size())
    {
        if (vertices_.empty())
            throw GraphError("graph has no vertices");
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].weight >= 0)
                throw GraphError("nonnegative weight " + std::to_string(vertices_[i].weight)
                                 + " at vertex " + std::to_string(i));
            if (vertices_[i].genus < 0)
                throw GraphError("negative genus at vertex " + std::to_string(i));
        }
        for (const Edge& e : edges) {
            if (e.b >= vertices_.size())
                throw GraphError("edge references unknown vertex " + std::to_string(e.b));
            if (e.a == e.b)
                throw GraphError("self-loop at vertex " + std::to_string(e.a));
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
            throw GraphError("duplicate edge " + std::to_string(dup->a) + " " + std::to_string(dup->b));
        for (const Edge& e : edges_) {
            adj_[e.a].push_back(e.b);
            adj_[e.b].push_back(e.a);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
        if (!connected())
            throw GraphError("disconnected graph");
        if (edges_.size() != vertices_.size() - 1)
            throw GraphError("graph contains a cycle; only trees are supported");
    }

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
    int weight(VertexId v) const { return vertices_.at(v).weight; }
    int genus(VertexId v) const { return vertices_.at(v).genus; }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }

    bool has_edge(VertexId u, VertexId v) const
    {
        if (u >= size() || v >= size())
            return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    int max_abs_weight() const
    {
        int m = 0;
        for (const Vertex& v : vertices_)
            m = std::max(m, -v.weight);
        return m;
    }

    bool all_genus_zero() const
    {
        return std::all_of(vertices_.begin(), vertices_.end(),
                           [](const Vertex& v) { return v.genus == 0; });
    }

    /// Labeled equality: same ids, same weights, same edges.
    friend bool operator==(const WeightedGraph& x, const WeightedGraph& y)
    {
        return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
    }

private:
    bool connected() const
    {
        std::vector<char> seen(size(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == size();
    }

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

/// Dense square integer matrix, row major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : n_(rows.size()), entries_()
    {
        for (const auto& row : rows) {
            if (row.size() != n_)
                throw GraphError("matrix is not square");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    std::size_t size() const { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> entries_;
};

/// E_i . E_j for a good resolution with transverse intersections.
using IntersectionMatrix = IntegerMatrix;

inline IntersectionMatrix intersection_matrix(const WeightedGraph& g)
{
    IntersectionMatrix m(g.size());
    for (VertexId v = 0; v < g.size(); ++v)
        m(v, v) = g.weight(v);
    for (const Edge& e : g.edges()) {
        m(e.a, e.b) = 1;
        m(e.b, e.a) = 1;
    }
    return m;
}

inline std::size_t valence(const WeightedGraph& g, VertexId v)
{
    if (v >= g.size())
        throw GraphError("unknown vertex " + std::to_string(v));
    return g.neighbors(v).size();
}

/// Center plus arms; each arm lists vertex ids from the center outward.
struct StarDecomposition {
    VertexId center = 0;
    std::vector<std::vector<VertexId>> arms;
};

inline std::vector<int> arm_weights(const WeightedGraph& g, const std::vector<VertexId>& arm)
{
    std::vector<int> w;
    w.reserve(arm.size());
    for (VertexId v : arm)
        w.push_back(g.weight(v));
    return w;
}

inline bool is_bamboo(const WeightedGraph& g)
{
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.neighbors(v).size() > 2)
            return false;
    return true;
}

/// Some(decomposition) iff g has at most one vertex of valence >= 3.
/// A bamboo is centered at its lowest-id end vertex.
inline std::optional<StarDecomposition> is_starshaped(const WeightedGraph& g)
{
    std::optional<VertexId> center;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (g.neighbors(v).size() >= 3) {
            if (center)
                return std::nullopt;
            center = v;
        }
    }
    if (!center) {
        for (VertexId v = 0; v < g.size() && !center; ++v)
            if (g.neighbors(v).size() <= 1)
                center = v;
    }
    StarDecomposition star;
    star.center = *center;
    for (VertexId first : g.neighbors(star.center)) {
        std::vector<VertexId> arm{first};
        VertexId prev = star.center;
        VertexId cur = first;
        while (g.neighbors(cur).size() == 2) {
            VertexId next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
            arm.push_back(cur);
        }
        star.arms.push_back(std::move(arm));
    }
    return star;
}

/// Builds a star-shaped graph. Vertex 0 is the center; arm vertices follow
/// arm by arm, each arm center-outward.
inline WeightedGraph make_star(int center_weight, const std::vector<std::vector<int>>& arms,
                               int center_genus = 0)
{
    std::vector<Vertex> vs{{center_weight, center_genus}};
    std::vector<Edge> es;
    for (const auto& arm : arms) {
        VertexId prev = 0;
        for (int w : arm) {
            VertexId id = vs.size();
            vs.push_back({w, 0});
            es.emplace_back(prev, id);
            prev = id;
        }
    }
    return WeightedGraph(std::move(vs), es);
}

inline WeightedGraph make_bamboo(const std::vector<int>& weights)
{
    if (weights.empty())
        throw GraphError("bamboo needs at least one vertex");
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({weights[i], 0});
        if (i > 0)
            es.emplace_back(i - 1, i);
    }
    return WeightedGraph(std::move(vs), es);
}

/// Inserts a genus-0 (-1)-vertex on edge {u,v}; the new vertex gets id size().
inline WeightedGraph blow_up_edge(const WeightedGraph& g, VertexId u, VertexId v)
{
    if (!g.has_edge(u, v))
        throw GraphError("blow-up: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    std::vector<Vertex> vs = g.vertices();
    vs[u].weight -= 1;
    vs[v].weight -= 1;
    VertexId w = vs.size();
    vs.push_back({-1, 0});
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!(e == Edge(u, v)))
            es.push_back(e);
    es.emplace_back(u, w);
    es.emplace_back(w, v);
    return WeightedGraph(std::move(vs), es);
}

/// Genus-0 (-1)-vertices of valence <= 2 that may be contracted. A lone
/// vertex is never contractible.
inline std::vector<VertexId> contractible_vertices(const WeightedGraph& g)
{
    std::vector<VertexId> out;
    if (g.size() == 1)
        return out;
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.weight(v) == -1 && g.genus(v) == 0 && g.neighbors(v).size() <= 2)
            out.push_back(v);
    return out;
}

/// Contracts one (-1)-vertex. Remaining vertices keep their relative order.
inline WeightedGraph blow_down_vertex(const WeightedGraph& g, VertexId v)
{
    if (v >= g.size())
        throw GraphError("unknown vertex " + std::to_string(v));
    if (g.weight(v) != -1 || g.genus(v) != 0)
        throw GraphError("blow-down: vertex " + std::to_string(v) + " is not a genus-0 (-1)-curve");
    auto nb = g.neighbors(v);
    if (nb.size() > 2)
        throw GraphError("blow-down: vertex " + std::to_string(v) + " has valence > 2");
    if (g.size() == 1)
        throw GraphError("blow-down: cannot remove the only vertex");
    if (nb.size() == 2 && g.has_edge(nb[0], nb[1]))
        throw GraphError("blow-down would create a multi-edge");

    std::vector<VertexId> remap(g.size());
    std::vector<Vertex> vs;
    for (VertexId u = 0; u < g.size(); ++u) {
        if (u == v)
            continue;
        remap[u] = vs.size();
        vs.push_back(g.vertex(u));
    }
    for (VertexId u : nb)
        vs[remap[u]].weight += 1;
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.a != v && e.b != v)
            es.emplace_back(remap[e.a], remap[e.b]);
    if (nb.size() == 2)
        es.emplace_back(remap[nb[0]], remap[nb[1]]);
    // A neighbor raised to weight 0 is not a valid curve of a resolution of a
    // negative-definite configuration; report it rather than build it.
    for (VertexId u : nb)
        if (vs[remap[u]].weight >= 0)
            throw GraphError("blow-down produces nonnegative weight at a neighbor of vertex "
                             + std::to_string(v));
    return WeightedGraph(std::move(vs), es);
}

/// Contracts (-1)-vertices to a fixed point, always taking the lowest id.
inline WeightedGraph blow_down(const WeightedGraph& g)
{
    WeightedGraph cur = g;
    for (;;) {
        auto cand = contractible_vertices(cur);
        if (cand.empty())
            return cur;
        cur = blow_down_vertex(cur, cand.front());
    }
}

} // namespace singtope
