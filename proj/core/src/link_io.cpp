#include "seglink/link_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seglink {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw parse_error("invalid JSON");
    return doc;
}

Vec3 to_vec3(const json& node, const char* what) {
    if (!node.is_array() || node.size() != 3 || !node[0].is_number() ||
        !node[1].is_number() || !node[2].is_number()) {
        throw parse_error(std::string(what) + ": expected [x, y, z]");
    }
    Vec3 v{node[0].get<double>(), node[1].get<double>(), node[2].get<double>()};
    if (!is_finite(v)) throw parse_error(std::string(what) + ": non-finite coordinate");
    return v;
}

std::vector<Vec3> to_vertices(const json& node) {
    if (!node.is_array() || node.size() < 2) {
        throw parse_error("component needs a \"vertices\" array of at least 2 points");
    }
    std::vector<Vec3> verts;
    verts.reserve(node.size());
    for (const json& p : node) verts.push_back(to_vec3(p, "vertex"));
    return verts;
}

Segment to_segment(const json& node, const char* what) {
    if (!node.is_object() || !node.contains("a") || !node.contains("b")) {
        throw parse_error(std::string(what) + ": expected {\"a\":[...],\"b\":[...]}");
    }
    return {to_vec3(node["a"], what), to_vec3(node["b"], what)};
}

json from_vec3(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

PolyLink read_link_json(const std::string& text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array()) {
        throw parse_error("expected top-level object with a \"components\" array");
    }
    const json& comps = doc["components"];
    if (comps.size() != 2) {
        throw parse_error("expected exactly 2 components, got " + std::to_string(comps.size()));
    }

    PolyLink link;
    for (std::size_t i = 0; i < 2; ++i) {
        const json& c = comps[i];
        if (!c.is_object() || !c.contains("vertices")) {
            throw parse_error("component " + std::to_string(i) + ": expected object with \"vertices\"");
        }
        auto verts = to_vertices(c["vertices"]);
        const bool closed = c.value("closed", true);
        if (i == 0) {
            link.comp1 = std::move(verts);
            link.closed1 = closed;
        } else {
            link.comp2 = std::move(verts);
            link.closed2 = closed;
        }
    }
    return link;
}

PolyLink read_link_file(const std::string& path) { return read_link_json(slurp(path)); }

std::string write_link_json(const PolyLink& link) {
    json comps = json::array();
    for (int i = 0; i < 2; ++i) {
        const auto& verts = (i == 0) ? link.comp1 : link.comp2;
        json jverts = json::array();
        for (const Vec3& v : verts) jverts.push_back(from_vec3(v));
        comps.push_back(json{{"vertices", std::move(jverts)},
                             {"closed", i == 0 ? link.closed1 : link.closed2}});
    }
    return json{{"components", std::move(comps)}}.dump(2) + "\n";
}

LatticeSpec read_lattice_json(const std::string& text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("probe") || !doc.contains("cell") ||
        !doc.contains("directions")) {
        throw parse_error("expected object with \"probe\", \"cell\" and \"directions\"");
    }

    LatticeSpec spec;
    spec.probe = to_segment(doc["probe"], "probe");
    if (!doc["cell"].is_array() || doc["cell"].empty()) {
        throw parse_error("\"cell\" must be a non-empty array of segments");
    }
    for (const json& s : doc["cell"]) spec.cell.push_back(to_segment(s, "cell segment"));
    if (!doc["directions"].is_array() || doc["directions"].empty() ||
        doc["directions"].size() > 3) {
        throw parse_error("\"directions\" must hold 1 to 3 vectors");
    }
    for (const json& v : doc["directions"]) spec.directions.push_back(to_vec3(v, "direction"));
    return spec;
}

LatticeSpec read_lattice_file(const std::string& path) { return read_lattice_json(slurp(path)); }

}  // namespace seglink
