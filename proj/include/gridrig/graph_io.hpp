#pragma once

// Readers and writers for three interchange formats:
//   graph6  - compact one-line ascii, no labels
//   dimacs  - "p edge n m" header plus "e u v" lines, 1-based, no labels
//   json    - {"vertices": [...], "edges": [...]}, carries vertex labels
// Readers reject malformed input with std::invalid_argument and a message
// naming the offending line or byte.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "gridrig/graph.hpp"

namespace gridrig {

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 258047)
        throw std::invalid_argument("to_graph6: at most 258047 vertices supported");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](const char* what) {
        if (pos >= text.size())
            throw std::invalid_argument(std::string("from_graph6: truncated input, expected ") + what);
        unsigned char c = (unsigned char)text[pos++];
        if (c < 63 || c > 126)
            throw std::invalid_argument("from_graph6: byte " + std::to_string(pos - 1) +
                                        " out of range");
        return (int)c;
    };
    int n;
    int first = need("vertex count");
    if (first == 126) {
        int a = need("vertex count") - 63;
        int b = need("vertex count") - 63;
        int c = need("vertex count") - 63;
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first - 63;
    }
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = need("adjacency bits") - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    if (pos != text.size())
        throw std::invalid_argument("from_graph6: trailing bytes after adjacency data");
    return g;
}

// ---------------------------------------------------------------------------
// DIMACS

inline void write_dimacs(const Graph& g, std::ostream& os) {
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

inline Graph read_dimacs(std::istream& is) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0, seen = 0;
    Graph g;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (have_header)
                throw std::invalid_argument("read_dimacs: duplicate p line at line " +
                                            std::to_string(lineno));
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw std::invalid_argument("read_dimacs: bad p line at line " +
                                            std::to_string(lineno));
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                throw std::invalid_argument("read_dimacs: e line before p line at line " +
                                            std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("read_dimacs: bad e line at line " +
                                            std::to_string(lineno));
            g.add_edge(u - 1, v - 1);
            ++seen;
            continue;
        }
        throw std::invalid_argument("read_dimacs: unknown line tag '" + tag + "' at line " +
                                    std::to_string(lineno));
    }
    if (!have_header) throw std::invalid_argument("read_dimacs: missing p line");
    if (seen != m)
        throw std::invalid_argument("read_dimacs: header announces " + std::to_string(m) +
                                    " edges, found " + std::to_string(seen));
    return g;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline const char* role_name(Role r) {
    switch (r) {
        case Role::Plain: return "plain";
        case Role::Grid: return "grid";
        case Role::Apex: return "apex";
        case Role::EdgeSubdivision: return "edge_subdivision";
        case Role::ApexSubdivision: return "apex_subdivision";
        case Role::Path: return "path";
    }
    throw std::logic_error("role_name: unhandled role");
}

inline Role role_from_name(const std::string& s) {
    if (s == "plain") return Role::Plain;
    if (s == "grid") return Role::Grid;
    if (s == "apex") return Role::Apex;
    if (s == "edge_subdivision") return Role::EdgeSubdivision;
    if (s == "apex_subdivision") return Role::ApexSubdivision;
    if (s == "path") return Role::Path;
    throw std::invalid_argument("unknown vertex role '" + s + "'");
}

} // namespace detail

inline nlohmann::json label_to_json(const VertexLabel& lab) {
    nlohmann::json j;
    j["role"] = detail::role_name(lab.role);
    if (lab.copy != 0) j["copy"] = lab.copy;
    switch (lab.role) {
        case Role::Plain:
            break;
        case Role::Grid:
            j["col"] = lab.col;
            j["row"] = lab.row;
            break;
        case Role::Apex:
            break;
        case Role::EdgeSubdivision:
            j["end_a"] = lab.end_a;
            j["end_b"] = lab.end_b;
            j["index"] = lab.index;
            break;
        case Role::ApexSubdivision:
            j["col"] = lab.col;
            j["row"] = lab.row;
            j["index"] = lab.index;
            break;
        case Role::Path:
            j["path"] = lab.path;
            j["pos"] = lab.pos;
            break;
    }
    return j;
}

inline VertexLabel label_from_json(const nlohmann::json& j) {
    VertexLabel lab;
    lab.role = detail::role_from_name(j.at("role").get<std::string>());
    lab.copy = j.value("copy", 0);
    switch (lab.role) {
        case Role::Plain:
            break;
        case Role::Grid:
            lab.col = j.at("col").get<int>();
            lab.row = j.at("row").get<int>();
            break;
        case Role::Apex:
            break;
        case Role::EdgeSubdivision:
            lab.end_a = j.at("end_a").get<VertexId>();
            lab.end_b = j.at("end_b").get<VertexId>();
            lab.index = j.at("index").get<int>();
            break;
        case Role::ApexSubdivision:
            lab.col = j.at("col").get<int>();
            lab.row = j.at("row").get<int>();
            lab.index = j.at("index").get<int>();
            break;
        case Role::Path:
            lab.path = j.at("path").get<int>();
            lab.pos = j.at("pos").get<int>();
            break;
    }
    return lab;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json verts = nlohmann::json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json jv;
        jv["id"] = v;
        if (!(g.label(v) == VertexLabel{})) jv["label"] = label_to_json(g.label(v));
        verts.push_back(std::move(jv));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back(nlohmann::json::array({u, v}));
    return nlohmann::json{{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    const auto& verts = j.at("vertices");
    if (!verts.is_array()) throw std::invalid_argument("graph json: vertices must be an array");
    Graph g((int)verts.size());
    int expect = 0;
    for (const auto& jv : verts) {
        int id = jv.at("id").get<int>();
        if (id != expect)
            throw std::invalid_argument("graph json: vertex ids must be 0..n-1 in order, got " +
                                        std::to_string(id) + " at position " +
                                        std::to_string(expect));
        ++expect;
        if (jv.contains("label")) g.set_label(id, label_from_json(jv.at("label")));
    }
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a two-element array");
        g.add_edge(je.at(0).get<int>(), je.at(1).get<int>());
    }
    return g;
}

} // namespace gridrig
