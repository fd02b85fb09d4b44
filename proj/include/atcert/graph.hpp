#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "atcert/common.hpp"

namespace atcert {

/// Undirected edge stored with endpoints in ascending order.
struct Edge {
    VertexId u, v;

    Edge(VertexId a, VertexId b) {
        if (a == b) throw ValidationError("degenerate edge " + a + "-" + b);
        if (b < a) std::swap(a, b);
        u = std::move(a);
        v = std::move(b);
    }

    auto operator<=>(const Edge&) const = default;

    VertexId other(const VertexId& w) const { return w == u ? v : u; }
    std::string render() const { return u + "-" + v; }
};

/// Simple undirected graph with deterministic vertex order.
class Graph {
public:
    void addVertex(const VertexId& v);
    void addEdge(const VertexId& u, const VertexId& v);

    bool hasVertex(const VertexId& v) const;
    bool hasEdge(const VertexId& u, const VertexId& v) const;

    /// Neighbors in ascending vertex-id order.
    std::vector<VertexId> neighbors(const VertexId& v) const;
    int degree(const VertexId& v) const;

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t vertexCount() const { return vertices_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }

    bool connected() const;

    Graph minusVertex(const VertexId& v) const;
    Graph minusEdges(const std::set<Edge>& drop) const;

    /// FNV-1a over the canonical serialization; stable across runs.
    std::string fingerprint() const;

private:
    std::vector<VertexId> vertices_;
    std::set<VertexId> vertexSet_;
    std::set<Edge> edges_;
};

/// One induction step of the peel recursion: the removed outer vertex v,
/// its outer-cycle neighbors b and t, and the link path of interior
/// neighbors between them (in order from b to t).
struct PeelStep {
    VertexId removed;
    VertexId bNeighbor;
    VertexId tNeighbor;
    std::vector<VertexId> link;

    /// Splits the link into green candidates (x_1..x_k, already-green
    /// vertices of the given set, in link order) and the remaining
    /// neighbors (y_1..y_l).
    std::pair<std::vector<VertexId>, std::vector<VertexId>> classify(
        const std::set<VertexId>& greens) const;
};

/// A matching with red/green vertex roles: red endpoints are interior and
/// get relaxed degree caps, green endpoints get tightened ones.
struct RoleAssignment {
    std::vector<std::pair<VertexId, VertexId>> matching;  // (red, green) pairs
    std::set<VertexId> red;
    std::set<VertexId> green;

    bool empty() const { return matching.empty(); }
    static RoleAssignment fromPairs(
        const std::vector<std::pair<VertexId, VertexId>>& pairs);
};

/// Validated planar near-triangulation: every inner face of the embedding
/// implied by the outer cycle is a triangle. The outer cycle is normalized
/// so that traversal starts a, b and continues through v, t.
class NearTriangulation {
public:
    static NearTriangulation validate(const Graph& g,
                                      const std::vector<VertexId>& outerCycle,
                                      const Edge& distinguished);

    const Graph& graph() const { return graph_; }
    const std::vector<VertexId>& outer() const { return outer_; }
    const VertexId& a() const { return outer_[0]; }
    const VertexId& b() const { return outer_[1]; }
    Edge distinguished() const { return Edge(outer_[0], outer_[1]); }

    bool isOuter(const VertexId& v) const;
    std::vector<VertexId> interiorVertices() const;
    std::size_t outerLength() const { return outer_.size(); }

private:
    NearTriangulation() = default;
    Graph graph_;
    std::vector<VertexId> outer_;
    std::set<VertexId> outerSet_;
};

/// Lexicographically least chord of the outer cycle, or nullopt.
std::optional<Edge> findChord(const NearTriangulation& nt);

/// Splits at chord f into (G1 containing the distinguished edge, G2 whose
/// distinguished edge becomes f).
std::pair<NearTriangulation, NearTriangulation> splitAtChord(
    const NearTriangulation& nt, const Edge& f);

/// Removes the outer vertex v that follows b, rerouting the outer cycle
/// through v's link. Requires a chordless outer cycle and |V| > 3.
std::pair<NearTriangulation, PeelStep> peel(const NearTriangulation& nt);

}  // namespace atcert
