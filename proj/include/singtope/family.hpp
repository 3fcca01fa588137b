#pragma once

// The star-shaped family G_{n,k,l}.
//
// k >= 1: center -(n+1) with n+2 arms
//   n arms of lk (-2)-vertices,
//   arm A of length k: (-2)s ending in -(l+1),
//   arm B of length l: -(k+1) next to the center, then (-2)s.
// k == 0: the unreduced chain (-2)^(l-1), (-1), -(n+1), which blows down to
//   a single vertex of weight l-(n+1). Requires n > l (n == l is smooth).

#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singtope/canonical.hpp"
#include "singtope/error.hpp"
#include "singtope/graph.hpp"

namespace singtope {

struct FamilyParams {
    int n = 1;
    int k = 0;
    int l = 1;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

inline std::optional<std::string> family_params_error(const FamilyParams& p)
{
    if (p.n < 1 || p.k < 0 || p.l < 1)
        return "family parameters need n >= 1, k >= 0 and l >= 1";
    if (p.k == 0 && !(p.n > p.l))
        return "if k = 0 then n > l is required";
    return std::nullopt;
}

inline void validate(const FamilyParams& p)
{
    if (auto err = family_params_error(p))
        throw GraphError(*err + " (got " + std::to_string(p.n) + "," + std::to_string(p.k) + ","
                         + std::to_string(p.l) + ")");
}

inline std::size_t family_vertex_count(const FamilyParams& p)
{
    if (p.k == 0)
        return 1 + static_cast<std::size_t>(p.l);
    return 1 + static_cast<std::size_t>(p.n) * p.l * p.k + p.k + p.l;
}

/// Vertex 0 is the center. Arms in order: the n (-2)-arms, A, B.
inline WeightedGraph generate(const FamilyParams& p)
{
    validate(p);
    if (p.k == 0) {
        std::vector<int> chain(static_cast<std::size_t>(p.l - 1), -2);
        chain.push_back(-1);
        // center first, then the chain read from the center outward
        std::vector<int> arm(chain.rbegin(), chain.rend());
        return make_star(-(p.n + 1), {arm});
    }
    std::vector<std::vector<int>> arms;
    for (int i = 0; i < p.n; ++i)
        arms.emplace_back(static_cast<std::size_t>(p.l * p.k), -2);
    std::vector<int> arm_a(static_cast<std::size_t>(p.k), -2);
    arm_a.back() = -(p.l + 1);
    std::vector<int> arm_b(static_cast<std::size_t>(p.l), -2);
    arm_b.front() = -(p.k + 1);
    arms.push_back(std::move(arm_a));
    arms.push_back(std::move(arm_b));
    return make_star(-(p.n + 1), arms);
}

namespace detail {

    inline std::optional<WeightedGraph> try_reduce(const WeightedGraph& g)
    {
        try {
            return blow_down(g);
        } catch (const GraphError&) {
            return std::nullopt;
        }
    }

} // namespace detail

/// Lexicographically smallest (n,k,l) whose generated graph has the same
/// reduced form as g. The reduced vertex count and the center weight fix
/// n and bound k,l, so the candidate set is tiny.
inline std::optional<FamilyParams> recognize(const WeightedGraph& g)
{
    auto reduced = detail::try_reduce(g);
    if (!reduced || !reduced->all_genus_zero())
        return std::nullopt;
    const auto& r = *reduced;
    if (r.size() == 1) {
        // G_{n,0,l} reduces to weight l-(n+1); smallest triple is l = 1.
        const int p = -r.weight(0);
        if (p < 2)
            return std::nullopt;
        return FamilyParams{p, 0, 1};
    }
    auto star = is_starshaped(r);
    if (!star || star->arms.size() < 3)
        return std::nullopt;
    const int n = -r.weight(star->center) - 1;
    if (n < 1 || static_cast<int>(star->arms.size()) != n + 2)
        return std::nullopt;
    const auto target = canonical_form(r);
    const int rest = static_cast<int>(r.size()) - 1; // = n l k + k + l
    for (int k = 1; k <= rest; ++k) {
        for (int l = 1; n * l * k + k + l <= rest; ++l) {
            if (n * l * k + k + l != rest)
                continue;
            if (canonical_form(generate({n, k, l})) == target)
                return FamilyParams{n, k, l};
        }
    }
    return std::nullopt;
}

/// Brute force over every valid triple whose generated graph has at most
/// bound * |g| + 2 vertices. Reference for recognize().
inline std::optional<FamilyParams> recognize_exhaustive(const WeightedGraph& g, int bound = 2)
{
    auto reduced = detail::try_reduce(g);
    if (!reduced)
        return std::nullopt;
    const auto target = canonical_form(*reduced);
    const int cap = bound * static_cast<int>(g.size()) + 2;
    for (int n = 1; n <= cap; ++n)
        for (int k = 0; k <= cap; ++k)
            for (int l = 1; l <= cap; ++l) {
                FamilyParams p{n, k, l};
                if (family_params_error(p) || static_cast<int>(family_vertex_count(p)) > cap)
                    continue;
                auto red = detail::try_reduce(generate(p));
                if (red && red->size() == reduced->size() && canonical_form(*red) == target)
                    return p;
            }
    return std::nullopt;
}

inline nlohmann::json family_to_json(const std::optional<FamilyParams>& p)
{
    if (!p)
        return nullptr;
    return {{"n", p->n}, {"k", p->k}, {"l", p->l}};
}

/// Parses "n,k,l".
inline FamilyParams parse_family_params(const std::string& s)
{
    FamilyParams p;
    char c1 = 0, c2 = 0;
    int used = 0;
    int n = 0, k = 0, l = 0;
    if (std::sscanf(s.c_str(), "%d %c %d %c %d%n", &n, &c1, &k, &c2, &l, &used) != 5 || c1 != ','
        || c2 != ',' || static_cast<std::size_t>(used) != s.size())
        throw ParseError("family parameters must be written n,k,l (got '" + s + "')");
    p = {n, k, l};
    if (auto err = family_params_error(p))
        throw ParseError(*err);
    return p;
}

} // namespace singtope
