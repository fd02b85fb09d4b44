#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "atcert/graph.hpp"

namespace atcert {

/// On-disk graph description: a single JSON object with fields `format`
/// ("atcert-graph/v1"), `vertices`, `edges`, and optionally `outer_cycle`,
/// `distinguished_edge` and `matching`. Unknown fields are rejected.
struct GraphFile {
    Graph graph;
    std::optional<std::vector<VertexId>> outerCycle;
    std::optional<Edge> distinguished;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> matching;

    NearTriangulation toNearTriangulation() const;
};

GraphFile readGraphFile(const std::string& path);
GraphFile parseGraphJson(const std::string& text);

std::string graphToJson(const Graph& g,
                        const std::optional<std::vector<VertexId>>& outerCycle,
                        const std::optional<Edge>& distinguished,
                        const std::optional<std::vector<std::pair<VertexId, VertexId>>>&
                            matching = std::nullopt);

void writeGraphFile(const std::string& path, const Graph& g,
                    const std::optional<std::vector<VertexId>>& outerCycle,
                    const std::optional<Edge>& distinguished);

}  // namespace atcert
