#include "dplab/instance_io.hpp"

#include <fstream>

#include "json.hpp"

namespace dplab {

using nlohmann::json;

std::string instance_to_json(const InstanceBundle& bundle, int indent) {
    json j;
    j["x_points"] = bundle.op.space.points;
    json graph;
    graph["vertices"] = bundle.op.graph.vertices;
    graph["edges"] = json::array();
    for (const auto& [u, v] : bundle.op.graph.edges)
        graph["edges"].push_back(json::array({u, v}));
    j["y_graph"] = graph;
    j["rows"] = bundle.op.rows;
    json meta;
    if (bundle.expected_eps) meta["expected_eps"] = *bundle.expected_eps;
    if (bundle.expected_dist) meta["expected_dist"] = *bundle.expected_dist;
    meta["provenance"] = bundle.provenance;
    j["meta"] = meta;
    return j.dump(indent);
}

InstanceBundle instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance parse error: ") + e.what());
    }
    InstanceBundle bundle;
    try {
        bundle.op.space.points = j.at("x_points").get<std::vector<std::string>>();
        const json& graph = j.at("y_graph");
        bundle.op.graph.vertices = graph.at("vertices").get<std::vector<std::string>>();
        for (const auto& e : graph.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2)
                throw ValidationError("instance: each edge must be a pair of indices");
            bundle.op.graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        bundle.op.rows = j.at("rows").get<std::vector<std::vector<double>>>();
        if (j.contains("meta")) {
            const json& meta = j["meta"];
            if (meta.contains("expected_eps"))
                bundle.expected_eps = meta["expected_eps"].get<double>();
            if (meta.contains("expected_dist"))
                bundle.expected_dist = meta["expected_dist"].get<double>();
            bundle.provenance = meta.value("provenance", "");
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance schema error: ") + e.what());
    }
    validate(bundle.op);
    return bundle;
}

InstanceBundle read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return instance_from_json(text);
}

void write_instance_file(const InstanceBundle& bundle, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << instance_to_json(bundle) << '\n';
}

}  // namespace dplab
