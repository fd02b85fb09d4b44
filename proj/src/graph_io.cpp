#include "atcert/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace atcert {

namespace {

using nlohmann::json;

std::vector<VertexId> parseVertexList(const json& j, const std::string& field) {
    if (!j.is_array()) throw ValidationError("field '" + field + "' must be a list");
    std::vector<VertexId> out;
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw ValidationError("field '" + field + "' must contain strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::pair<VertexId, VertexId> parsePair(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw ValidationError("field '" + field + "' entries must be 2-lists of strings");
    }
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

NearTriangulation GraphFile::toNearTriangulation() const {
    if (!outerCycle || !distinguished) {
        throw ValidationError("graph file lacks outer_cycle / distinguished_edge");
    }
    return NearTriangulation::validate(graph, *outerCycle, *distinguished);
}

GraphFile parseGraphJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("graph file must hold one JSON object");

    static const std::set<std::string> known{
        "format", "vertices", "edges", "outer_cycle", "distinguished_edge",
        "matching"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw ValidationError("unknown field '" + key + "'");
    }
    if (!j.contains("format") || j["format"] != "atcert-graph/v1") {
        throw ValidationError("missing or unsupported format marker");
    }
    if (!j.contains("vertices") || !j.contains("edges")) {
        throw ValidationError("graph file needs 'vertices' and 'edges'");
    }

    GraphFile out;
    for (const auto& v : parseVertexList(j["vertices"], "vertices")) {
        out.graph.addVertex(v);
    }
    if (!j["edges"].is_array()) throw ValidationError("field 'edges' must be a list");
    for (const auto& e : j["edges"]) {
        auto [u, v] = parsePair(e, "edges");
        out.graph.addEdge(u, v);
    }
    if (j.contains("outer_cycle")) {
        out.outerCycle = parseVertexList(j["outer_cycle"], "outer_cycle");
    }
    if (j.contains("distinguished_edge")) {
        auto [u, v] = parsePair(j["distinguished_edge"], "distinguished_edge");
        out.distinguished = Edge(u, v);
    }
    if (j.contains("matching")) {
        if (!j["matching"].is_array()) {
            throw ValidationError("field 'matching' must be a list");
        }
        std::vector<std::pair<VertexId, VertexId>> m;
        for (const auto& e : j["matching"]) m.push_back(parsePair(e, "matching"));
        out.matching = m;
    }
    return out;
}

GraphFile readGraphFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseGraphJson(buf.str());
}

std::string graphToJson(
    const Graph& g, const std::optional<std::vector<VertexId>>& outerCycle,
    const std::optional<Edge>& distinguished,
    const std::optional<std::vector<std::pair<VertexId, VertexId>>>& matching) {
    json j;
    j["format"] = "atcert-graph/v1";
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    if (outerCycle) j["outer_cycle"] = *outerCycle;
    if (distinguished) j["distinguished_edge"] = {distinguished->u, distinguished->v};
    if (matching) {
        json m = json::array();
        for (const auto& [r, gr] : *matching) m.push_back({r, gr});
        j["matching"] = m;
    }
    return j.dump(2) + "\n";
}

void writeGraphFile(const std::string& path, const Graph& g,
                    const std::optional<std::vector<VertexId>>& outerCycle,
                    const std::optional<Edge>& distinguished) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write graph file " + path);
    out << graphToJson(g, outerCycle, distinguished);
}

}  // namespace atcert
