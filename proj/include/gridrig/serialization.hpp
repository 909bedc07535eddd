#pragma once

// JSON forms of the compound structures: construction bundles, minor
// models, region representations, and tree decompositions. Serialization
// is loss-free and deterministic; readers validate shape and re-derive
// nothing.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridrig/constructions.hpp"
#include "gridrig/graph_io.hpp"
#include "gridrig/minor_search.hpp"
#include "gridrig/rig.hpp"
#include "gridrig/tree_decomposition.hpp"

namespace gridrig {

namespace detail {

inline nlohmann::json vertex_sets_to_json(const std::vector<std::vector<VertexId>>& sets) {
    nlohmann::json out = nlohmann::json::object();
    for (size_t i = 0; i < sets.size(); ++i) out[std::to_string(i)] = sets[i];
    return out;
}

inline std::vector<std::vector<VertexId>> vertex_sets_from_json(const nlohmann::json& j,
                                                                const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
    std::vector<std::vector<VertexId>> sets(j.size());
    for (const auto& [key, value] : j.items()) {
        size_t idx = 0;
        try {
            idx = std::stoul(key);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad index key '" + key + "'");
        }
        if (idx >= sets.size())
            throw std::invalid_argument(std::string(what) + ": index keys are not 0.." +
                                        std::to_string(sets.size() - 1));
        sets[idx] = value.get<std::vector<VertexId>>();
    }
    return sets;
}

} // namespace detail

inline nlohmann::json bundle_to_json(const ConstructionBundle& b) {
    nlohmann::json j;
    j["params"] = {{"g", b.params.g}, {"n", b.params.n}};
    j["graph"] = graph_to_json(b.graph);
    j["order"] = b.order;
    j["bIndex"] = b.b_index;
    j["extraEdges"] = nlohmann::json::array();
    for (auto [u, v] : b.extra_edges) j["extraEdges"].push_back({u, v});
    j["copyRanges"] = nlohmann::json::array();
    for (const CopyRange& r : b.copy_ranges)
        j["copyRanges"].push_back({{"copy", r.copy}, {"begin", r.begin}, {"end", r.end}});
    j["pathAttach"] = nlohmann::json::array();
    for (const auto& [ji, v] : b.path_attach)
        j["pathAttach"].push_back({ji.first, ji.second, v});
    return j;
}

inline ConstructionBundle bundle_from_json(const nlohmann::json& j) {
    ConstructionBundle b;
    b.params.g = j.at("params").at("g").get<int>();
    b.params.n = j.at("params").at("n").get<int>();
    b.graph = graph_from_json(j.at("graph"));
    b.order = j.at("order").get<std::vector<VertexId>>();
    b.b_index = j.at("bIndex").get<std::vector<VertexId>>();
    for (const auto& e : j.at("extraEdges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("bundle: extraEdges entries must be pairs");
        b.extra_edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    for (const auto& r : j.at("copyRanges"))
        b.copy_ranges.push_back(
            {r.at("copy").get<int>(), r.at("begin").get<int>(), r.at("end").get<int>()});
    for (const auto& t : j.at("pathAttach")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("bundle: pathAttach entries must be triples");
        b.path_attach[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<VertexId>();
    }
    return b;
}

inline nlohmann::json model_to_json(const MinorModel& m) {
    nlohmann::json j;
    j["kind"] = m.kind == ModelKind::Induced ? "induced" : "ordinary";
    j["assignment"] = detail::vertex_sets_to_json(m.assignment);
    return j;
}

inline MinorModel model_from_json(const nlohmann::json& j) {
    MinorModel m;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "induced")
        m.kind = ModelKind::Induced;
    else if (kind == "ordinary")
        m.kind = ModelKind::Ordinary;
    else
        throw std::invalid_argument("model: kind must be 'ordinary' or 'induced'");
    m.assignment = detail::vertex_sets_from_json(j.at("assignment"), "model assignment");
    return m;
}

inline nlohmann::json rep_to_json(const RIGRepresentation& rep) {
    nlohmann::json j;
    j["host"] = graph_to_json(rep.host);
    j["regions"] = detail::vertex_sets_to_json(rep.regions);
    return j;
}

inline RIGRepresentation rep_from_json(const nlohmann::json& j) {
    RIGRepresentation rep;
    rep.host = graph_from_json(j.at("host"));
    rep.regions = detail::vertex_sets_from_json(j.at("regions"), "representation regions");
    return rep;
}

inline nlohmann::json td_to_json(const TreeDecomposition& td) {
    nlohmann::json j;
    j["tree"] = graph_to_json(td.tree);
    j["bags"] = detail::vertex_sets_to_json(td.bags);
    return j;
}

inline TreeDecomposition td_from_json(const nlohmann::json& j) {
    TreeDecomposition td;
    td.tree = graph_from_json(j.at("tree"));
    td.bags = detail::vertex_sets_from_json(j.at("bags"), "decomposition bags");
    return td;
}

} // namespace gridrig
