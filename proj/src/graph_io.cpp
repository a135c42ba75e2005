#include "ccfc/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccfc {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["format"] = "ccfc-graph/1";
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    json lm = json::object();
    for (const auto& [name, id] : g.landmarks()) lm[name] = id;
    j["landmarks"] = std::move(lm);
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::IoError, std::string("graph json parse: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "ccfc-graph/1")
        fail(ErrorCode::IoError, "missing format tag ccfc-graph/1");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail(ErrorCode::IoError, "malformed edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<std::string, int> landmarks;
    if (j.contains("landmarks"))
        for (auto it = j["landmarks"].begin(); it != j["landmarks"].end(); ++it)
            landmarks[it.key()] = it.value().get<int>();
    return Graph::build(n, edges, landmarks);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << graph_to_json(g) << "\n";
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::map<int, std::string> labels;
    for (const auto& [lname, id] : g.landmarks()) {
        if (labels.count(id)) labels[id] += "," + lname;
        else labels[id] = lname;
    }
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const auto& [id, label] : labels)
        out << "  " << id << " [label=\"" << label << "\"];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string fnv1a_graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace ccfc
