#pragma once

// Isomorphism-invariant keys for weighted trees (weight- and
// genus-preserving isomorphism).
//
//   star with a unique vertex of valence >= 3:
//       "S" center weight/genus, then the sorted arm sequences
//   bamboo (including a single vertex):
//       "B" the lexicographically smaller of the two readings
//   any other tree (<= kMaxGeneralVertices):
//       "T" AHU code rooted at the tree center(s), minimum over centers
//
// Which branch applies is itself an isomorphism invariant, so equal keys
// hold exactly for isomorphic graphs.

#include <algorithm>
#include <string>
#include <vector>

#include "singtope/graph.hpp"

namespace singtope {

using CanonicalKey = std::string;

inline constexpr std::size_t kMaxGeneralVertices = 16;

namespace detail {

    inline std::string vertex_token(const Vertex& v)
    {
        std::string s = std::to_string(v.weight);
        if (v.genus != 0)
            s += "g" + std::to_string(v.genus);
        return s;
    }

    inline std::string sequence_token(const WeightedGraph& g, const std::vector<VertexId>& seq)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i)
                s += ',';
            s += vertex_token(g.vertex(seq[i]));
        }
        return s + "]";
    }

    inline std::string rooted_code(const WeightedGraph& g, VertexId v, VertexId parent)
    {
        std::vector<std::string> kids;
        for (VertexId u : g.neighbors(v))
            if (u != parent)
                kids.push_back(rooted_code(g, u, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + vertex_token(g.vertex(v));
        for (const auto& k : kids)
            s += k;
        return s + ")";
    }

    /// One or two centers of a tree (by repeated leaf stripping).
    inline std::vector<VertexId> tree_centers(const WeightedGraph& g)
    {
        const std::size_t n = g.size();
        if (n == 1)
            return {0};
        std::vector<std::size_t> deg(n);
        std::vector<VertexId> layer;
        for (VertexId v = 0; v < n; ++v) {
            deg[v] = g.neighbors(v).size();
            if (deg[v] <= 1)
                layer.push_back(v);
        }
        std::size_t remaining = n;
        while (remaining > 2) {
            remaining -= layer.size();
            std::vector<VertexId> next;
            for (VertexId v : layer)
                for (VertexId u : g.neighbors(v))
                    if (--deg[u] == 1)
                        next.push_back(u);
            layer = std::move(next);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    }

} // namespace detail

inline CanonicalKey canonical_form(const WeightedGraph& g)
{
    if (is_bamboo(g)) {
        std::vector<VertexId> path;
        VertexId start = 0;
        for (VertexId v = 0; v < g.size(); ++v)
            if (g.neighbors(v).size() <= 1) {
                start = v;
                break;
            }
        VertexId prev = start, cur = start;
        path.push_back(start);
        while (path.size() < g.size()) {
            for (VertexId u : g.neighbors(cur))
                if (u != prev) {
                    prev = cur;
                    cur = u;
                    break;
                }
            path.push_back(cur);
        }
        std::string fwd = detail::sequence_token(g, path);
        std::reverse(path.begin(), path.end());
        std::string bwd = detail::sequence_token(g, path);
        return "B" + std::min(fwd, bwd);
    }
    if (auto star = is_starshaped(g)) {
        std::vector<std::string> arms;
        for (const auto& arm : star->arms)
            arms.push_back(detail::sequence_token(g, arm));
        std::sort(arms.begin(), arms.end());
        std::string key = "S" + detail::vertex_token(g.vertex(star->center)) + ":";
        for (const auto& a : arms)
            key += a;
        return key;
    }
    if (g.size() > kMaxGeneralVertices)
        throw GraphError("canonical_form: general tree with " + std::to_string(g.size())
                         + " vertices exceeds the limit of " + std::to_string(kMaxGeneralVertices));
    std::string best;
    for (VertexId c : detail::tree_centers(g)) {
        std::string code = detail::rooted_code(g, c, c);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return "T" + best;
}

inline bool isomorphic(const WeightedGraph& a, const WeightedGraph& b)
{
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace singtope
