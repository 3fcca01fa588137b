#pragma once

// Graph description formats.
//
// Line format:
//     vertices: 3
//     v 0 -2
//     v 1 -3 genus=1
//     e 0 1
// Blank lines and '#' comments are ignored.
//
// JSON:
//     {"vertices":[{"id":0,"weight":-2,"genus":0},...],"edges":[[0,1],...]}
//
// Star shorthand (the leading "star" is optional):
//     star center=-2 arms=[-2,-2|-3|-2]

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "singtope/error.hpp"
#include "singtope/graph.hpp"

namespace singtope {

using nlohmann::json;

namespace detail {

    inline std::string_view trim(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    inline long long parse_int(std::string_view s, std::string_view what, std::size_t line)
    {
        s = trim(s);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            std::string where = line ? " on line " + std::to_string(line) : std::string();
            throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'" + where);
        }
        return value;
    }

    inline std::vector<std::string_view> split_ws(std::string_view s)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
                ++j;
            if (j > i)
                out.push_back(s.substr(i, j - i));
            i = j;
        }
        return out;
    }

    inline WeightedGraph build(std::vector<Vertex> vs, const std::vector<Edge>& es)
    {
        try {
            return WeightedGraph(std::move(vs), es);
        } catch (const GraphError& e) {
            throw ParseError(e.what());
        }
    }

} // namespace detail

inline WeightedGraph parse_text_graph(std::string_view text)
{
    std::optional<std::size_t> declared;
    std::vector<std::optional<Vertex>> slots;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const std::string at = " on line " + std::to_string(lineno);
        if (line.starts_with("vertices:")) {
            if (declared)
                throw ParseError("duplicate 'vertices:' header" + at);
            long long n = detail::parse_int(line.substr(9), "vertex count", lineno);
            if (n <= 0)
                throw ParseError("vertex count must be positive" + at);
            declared = static_cast<std::size_t>(n);
            slots.assign(*declared, std::nullopt);
            continue;
        }
        if (!declared)
            throw ParseError("expected 'vertices: n' header before" + at.substr(1));
        auto tok = detail::split_ws(line);
        if (tok[0] == "v") {
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError("malformed vertex line" + at);
            long long id = detail::parse_int(tok[1], "vertex id", lineno);
            long long w = detail::parse_int(tok[2], "weight", lineno);
            long long genus = 0;
            if (tok.size() == 4) {
                if (!tok[3].starts_with("genus="))
                    throw ParseError("malformed genus annotation" + at);
                genus = detail::parse_int(tok[3].substr(6), "genus", lineno);
            }
            if (id < 0 || static_cast<std::size_t>(id) >= *declared)
                throw ParseError("vertex id " + std::to_string(id) + " out of range" + at);
            if (slots[id])
                throw ParseError("vertex " + std::to_string(id) + " defined twice" + at);
            if (w >= 0)
                throw ParseError("nonnegative weight " + std::to_string(w) + at);
            slots[id] = Vertex{static_cast<int>(w), static_cast<int>(genus)};
        } else if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError("malformed edge line" + at);
            long long a = detail::parse_int(tok[1], "vertex id", lineno);
            long long b = detail::parse_int(tok[2], "vertex id", lineno);
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= *declared
                || static_cast<std::size_t>(b) >= *declared)
                throw ParseError("edge references unknown vertex" + at);
            edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        } else {
            throw ParseError("unrecognized line '" + std::string(line) + "'" + at);
        }
    }
    if (!declared)
        throw ParseError("missing 'vertices: n' header");
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i])
            throw ParseError("vertex " + std::to_string(i) + " is declared but not defined");
        vs.push_back(*slots[i]);
    }
    return detail::build(std::move(vs), edges);
}

inline WeightedGraph graph_from_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("vertices"))
            throw ParseError("graph JSON needs a \"vertices\" array");
        const auto& jv = j.at("vertices");
        if (!jv.is_array())
            throw ParseError("\"vertices\" must be an array");
        std::vector<std::optional<Vertex>> slots(jv.size());
        for (const auto& item : jv) {
            auto id = item.at("id").get<long long>();
            auto w = item.at("weight").get<long long>();
            long long genus = item.value("genus", 0LL);
            if (id < 0 || static_cast<std::size_t>(id) >= slots.size())
                throw ParseError("vertex id " + std::to_string(id) + " out of range (ids must be 0..n-1)");
            if (slots[id])
                throw ParseError("vertex " + std::to_string(id) + " defined twice");
            if (w >= 0)
                throw ParseError("nonnegative weight " + std::to_string(w));
            slots[id] = Vertex{static_cast<int>(w), static_cast<int>(genus)};
        }
        std::vector<Vertex> vs;
        for (auto& s : slots)
            vs.push_back(*s);
        std::vector<Edge> es;
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("edge must be a pair of vertex ids");
                auto a = e[0].get<long long>();
                auto b = e[1].get<long long>();
                if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vs.size()
                    || static_cast<std::size_t>(b) >= vs.size())
                    throw ParseError("edge references unknown vertex");
                es.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
            }
        }
        return detail::build(std::move(vs), es);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
}

inline WeightedGraph parse_json_graph(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
}

inline WeightedGraph parse_star(std::string_view text)
{
    text = detail::trim(text);
    if (text.starts_with("star"))
        text = detail::trim(text.substr(4));
    std::optional<int> center;
    int center_genus = 0;
    std::optional<std::vector<std::vector<int>>> arms;
    for (auto tok : detail::split_ws(text)) {
        if (tok.starts_with("center=")) {
            center = static_cast<int>(detail::parse_int(tok.substr(7), "center weight", 0));
        } else if (tok.starts_with("genus=")) {
            center_genus = static_cast<int>(detail::parse_int(tok.substr(6), "genus", 0));
        } else if (tok.starts_with("arms=")) {
            auto body = tok.substr(5);
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw ParseError("arms must be written as [w,w|w|...]");
            body = body.substr(1, body.size() - 2);
            arms.emplace();
            if (body.empty())
                continue;
            std::size_t start = 0;
            while (start <= body.size()) {
                auto bar = body.find('|', start);
                auto piece = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
                std::vector<int> arm;
                std::size_t s = 0;
                while (s <= piece.size()) {
                    auto comma = piece.find(',', s);
                    auto num = piece.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
                    long long w = detail::parse_int(num, "arm weight", 0);
                    if (w >= 0)
                        throw ParseError("nonnegative weight " + std::to_string(w));
                    arm.push_back(static_cast<int>(w));
                    if (comma == std::string_view::npos)
                        break;
                    s = comma + 1;
                }
                arms->push_back(std::move(arm));
                if (bar == std::string_view::npos)
                    break;
                start = bar + 1;
            }
        } else {
            throw ParseError("unrecognized star token '" + std::string(tok) + "'");
        }
    }
    if (!center)
        throw ParseError("star description needs center=<weight>");
    if (*center >= 0)
        throw ParseError("nonnegative weight " + std::to_string(*center));
    try {
        return make_star(*center, arms.value_or(std::vector<std::vector<int>>{}), center_genus);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

/// Dispatches on the first non-blank character: '{' JSON, "star"/"center="
/// shorthand, anything else the line format.
inline WeightedGraph parse_graph(std::string_view text)
{
    auto t = detail::trim(text);
    if (t.starts_with("{"))
        return parse_json_graph(t);
    if (t.starts_with("star") || t.starts_with("center="))
        return parse_star(t);
    return parse_text_graph(t);
}

inline json graph_to_json(const WeightedGraph& g)
{
    json vs = json::array();
    for (VertexId v = 0; v < g.size(); ++v)
        vs.push_back({{"id", v}, {"weight", g.weight(v)}, {"genus", g.genus(v)}});
    json es = json::array();
    for (const Edge& e : g.edges())
        es.push_back({e.a, e.b});
    return {{"vertices", vs}, {"edges", es}};
}

inline std::string emit_text(const WeightedGraph& g)
{
    std::ostringstream out;
    out << "vertices: " << g.size() << '\n';
    for (VertexId v = 0; v < g.size(); ++v) {
        out << "v " << v << ' ' << g.weight(v);
        if (g.genus(v) != 0)
            out << " genus=" << g.genus(v);
        out << '\n';
    }
    for (const Edge& e : g.edges())
        out << "e " << e.a << ' ' << e.b << '\n';
    return out.str();
}

/// Vertices in id order so the output diffs cleanly.
inline std::string emit_dot(const WeightedGraph& g, std::string_view name = "G")
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.size(); ++v) {
        out << "  " << v << " [label=\"" << g.weight(v);
        if (g.genus(v) != 0)
            out << '[' << g.genus(v) << ']';
        out << "\"];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.a << " -- " << e.b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace singtope
