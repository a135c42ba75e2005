#include "ccfc/coloring_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccfc {

using nlohmann::json;

PrecolorData precolor_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::IoError, std::string("precolor json parse: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "ccfc-precolor/1")
        fail(ErrorCode::IoError, "missing format tag ccfc-precolor/1");
    PrecolorData data;
    data.k = j.at("k").get<int>();
    data.mode = j.at("mode").get<std::string>();
    if (data.mode != "circular" && data.mode != "fractional")
        fail(ErrorCode::IoError, "mode must be circular or fractional");
    const json& assignments = j.at("assignments");
    for (auto it = assignments.begin(); it != assignments.end(); ++it) {
        int vertex = 0;
        try {
            vertex = std::stoi(it.key());
        } catch (const std::exception&) {
            fail(ErrorCode::IoError, "vertex key '" + it.key() + "' is not an integer");
        }
        if (data.mode == "circular") {
            data.circular[vertex] = it.value().get<int>();
        } else {
            data.fractional[vertex] = it.value().get<std::vector<int>>();
        }
    }
    return data;
}

PrecolorData load_precolor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return precolor_from_json(buf.str());
}

CircularColoring to_circular_precoloring(const PrecolorData& data, int n, int d) {
    if (data.mode != "circular") fail(ErrorCode::IoError, "precoloring is not circular");
    CircularColoring col(data.k, d, n);
    for (const auto& [vertex, residue] : data.circular) {
        if (vertex < 0 || vertex >= n)
            fail(ErrorCode::BadVertex, "precolored vertex " + std::to_string(vertex));
        col.assignment[vertex] = residue;
    }
    return col;
}

FractionalColoring to_fractional_precoloring(const PrecolorData& data, int n) {
    if (data.mode != "fractional") fail(ErrorCode::IoError, "precoloring is not fractional");
    FractionalColoring col(data.k, (data.k - 1) / 2, n);
    for (const auto& [vertex, colors] : data.fractional) {
        if (vertex < 0 || vertex >= n)
            fail(ErrorCode::BadVertex, "precolored vertex " + std::to_string(vertex));
        SetMask m = 0;
        for (int c : colors) {
            if (c < 0 || c >= data.k)
                fail(ErrorCode::IoError, "color " + std::to_string(c) + " outside palette");
            m |= (1u << c);
        }
        col.assignment[vertex] = m;
    }
    return col;
}

std::string circular_coloring_to_json(const CircularColoring& col) {
    json j;
    j["format"] = "ccfc-precolor/1";
    j["k"] = col.modulus;
    j["d"] = col.gap;
    j["mode"] = "circular";
    json assignments = json::object();
    for (int v = 0; v < col.size(); ++v)
        if (col.assigned(v)) assignments[std::to_string(v)] = col.assignment[v];
    j["assignments"] = std::move(assignments);
    return j.dump(2);
}

std::string fractional_coloring_to_json(const FractionalColoring& col) {
    json j;
    j["format"] = "ccfc-precolor/1";
    j["k"] = col.palette;
    j["b"] = col.subset_size;
    j["mode"] = "fractional";
    json assignments = json::object();
    for (int v = 0; v < col.size(); ++v) {
        if (!col.assigned(v)) continue;
        json colors = json::array();
        for (int c = 0; c < col.palette; ++c)
            if ((col.assignment[v] >> c) & 1u) colors.push_back(c);
        assignments[std::to_string(v)] = std::move(colors);
    }
    j["assignments"] = std::move(assignments);
    return j.dump(2);
}

}  // namespace ccfc
