#include "atcert/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>

namespace atcert {

void Graph::addVertex(const VertexId& v) {
    if (v.empty()) throw ValidationError("empty vertex id");
    if (vertexSet_.insert(v).second) vertices_.push_back(v);
}

void Graph::addEdge(const VertexId& u, const VertexId& v) {
    if (!hasVertex(u) || !hasVertex(v)) {
        throw ValidationError("edge " + u + "-" + v + " references unknown vertex");
    }
    Edge e(u, v);
    if (!edges_.insert(e).second) {
        throw ValidationError("duplicate edge " + e.render());
    }
}

bool Graph::hasVertex(const VertexId& v) const { return vertexSet_.count(v) > 0; }

bool Graph::hasEdge(const VertexId& u, const VertexId& v) const {
    return edges_.count(Edge(u, v)) > 0;
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        else if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(const VertexId& v) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.u == v || e.v == v) ++d;
    }
    return d;
}

bool Graph::connected() const {
    if (vertices_.empty()) return true;
    std::set<VertexId> seen{vertices_[0]};
    std::deque<VertexId> todo{vertices_[0]};
    while (!todo.empty()) {
        VertexId cur = todo.front();
        todo.pop_front();
        for (const auto& n : neighbors(cur)) {
            if (seen.insert(n).second) todo.push_back(n);
        }
    }
    return seen.size() == vertices_.size();
}

Graph Graph::minusVertex(const VertexId& v) const {
    Graph g;
    for (const auto& w : vertices_) {
        if (w != v) g.addVertex(w);
    }
    for (const auto& e : edges_) {
        if (e.u != v && e.v != v) g.addEdge(e.u, e.v);
    }
    return g;
}

Graph Graph::minusEdges(const std::set<Edge>& drop) const {
    Graph g;
    for (const auto& w : vertices_) g.addVertex(w);
    for (const auto& e : edges_) {
        if (!drop.count(e)) g.addEdge(e.u, e.v);
    }
    return g;
}

std::string Graph::fingerprint() const {
    std::vector<VertexId> vs = vertices_;
    std::sort(vs.begin(), vs.end());
    std::ostringstream os;
    for (const auto& v : vs) os << v << '|';
    os << '#';
    for (const auto& e : edges_) os << e.u << '-' << e.v << '|';
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex;
    for (int i = 15; i >= 0; --i) hex << "0123456789abcdef"[(h >> (i * 4)) & 0xf];
    return hex.str();
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> PeelStep::classify(
    const std::set<VertexId>& greens) const {
    std::vector<VertexId> xs, ys;
    for (const auto& w : link) {
        (greens.count(w) ? xs : ys).push_back(w);
    }
    return {xs, ys};
}

RoleAssignment RoleAssignment::fromPairs(
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    RoleAssignment r;
    r.matching = pairs;
    for (const auto& [red, green] : pairs) {
        r.red.insert(red);
        r.green.insert(green);
    }
    return r;
}

namespace {

std::optional<Edge> chordOf(const Graph& g, const std::vector<VertexId>& outer) {
    const std::size_t s = outer.size();
    std::optional<Edge> best;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == s - 1);
            if (consecutive) continue;
            if (g.hasEdge(outer[i], outer[j])) {
                Edge e(outer[i], outer[j]);
                if (!best || e < *best) best = e;
            }
        }
    }
    return best;
}

// Hamiltonian path from `from` to `to` whose interior visits exactly `link`.
bool linkPathSearch(const Graph& g, const VertexId& cur, const VertexId& to,
                    std::set<VertexId>& remaining, std::vector<VertexId>& path) {
    if (remaining.empty()) return g.hasEdge(cur, to);
    for (const auto& n : g.neighbors(cur)) {
        if (!remaining.count(n)) continue;
        remaining.erase(n);
        path.push_back(n);
        if (linkPathSearch(g, n, to, remaining, path)) return true;
        path.pop_back();
        remaining.insert(n);
    }
    return false;
}

std::optional<std::vector<VertexId>> linkPath(const Graph& g,
                                              const VertexId& from,
                                              const VertexId& to,
                                              const std::set<VertexId>& link) {
    std::set<VertexId> remaining = link;
    std::vector<VertexId> path;
    if (linkPathSearch(g, from, to, remaining, path)) return path;
    return std::nullopt;
}

struct SplitSides {
    std::vector<VertexId> outer1, outer2;  // closed cycles, chord endpoints first/last
    std::set<VertexId> verts1, verts2;
};

// Partitions the graph at chord f = (c, d) of the outer cycle. outer1 runs
// c .. d along one arc, outer2 runs d .. c along the other.
SplitSides splitSides(const Graph& g, const std::vector<VertexId>& outer,
                      const Edge& f) {
    const std::size_t s = outer.size();
    std::size_t ic = s, id = s;
    for (std::size_t i = 0; i < s; ++i) {
        if (outer[i] == f.u) ic = i;
        if (outer[i] == f.v) id = i;
    }
    if (ic == s || id == s) throw ValidationError("chord endpoint not on outer cycle");

    SplitSides out;
    for (std::size_t i = ic;; i = (i + 1) % s) {
        out.outer1.push_back(outer[i]);
        if (i == id) break;
    }
    for (std::size_t i = id;; i = (i + 1) % s) {
        out.outer2.push_back(outer[i]);
        if (i == ic) break;
    }
    if (out.outer1.size() < 3 || out.outer2.size() < 3) {
        throw ValidationError("edge " + f.render() + " is not a chord");
    }

    std::set<VertexId> arc1(out.outer1.begin() + 1, out.outer1.end() - 1);
    std::set<VertexId> arc2(out.outer2.begin() + 1, out.outer2.end() - 1);
    std::set<VertexId> outerSet(outer.begin(), outer.end());

    // A crossing chord would connect the interiors of the two arcs.
    for (const auto& e : g.edges()) {
        if (arc1.count(e.u) && arc2.count(e.v)) {
            throw ValidationError("chords " + f.render() + " and " + e.render() +
                                  " cross");
        }
        if (arc2.count(e.u) && arc1.count(e.v)) {
            throw ValidationError("chords " + f.render() + " and " + e.render() +
                                  " cross");
        }
    }

    out.verts1 = arc1;
    out.verts2 = arc2;
    out.verts1.insert(f.u);
    out.verts1.insert(f.v);
    out.verts2.insert(f.u);
    out.verts2.insert(f.v);

    // Assign interior components by which arc they attach to.
    std::set<VertexId> seen{f.u, f.v};
    for (const auto& start : g.vertices()) {
        if (seen.count(start) || outerSet.count(start)) continue;
        std::set<VertexId> comp{start};
        std::deque<VertexId> todo{start};
        while (!todo.empty()) {
            VertexId cur = todo.front();
            todo.pop_front();
            for (const auto& n : g.neighbors(cur)) {
                if (n == f.u || n == f.v || outerSet.count(n)) continue;
                if (comp.insert(n).second) todo.push_back(n);
            }
        }
        bool touches1 = false, touches2 = false;
        for (const auto& w : comp) {
            for (const auto& n : g.neighbors(w)) {
                if (arc1.count(n)) touches1 = true;
                if (arc2.count(n)) touches2 = true;
            }
        }
        if (touches1 && touches2) {
            throw ValidationError("chord " + f.render() +
                                  " does not separate the interior");
        }
        auto& side = touches2 ? out.verts2 : out.verts1;
        side.insert(comp.begin(), comp.end());
        seen.insert(comp.begin(), comp.end());
    }
    return out;
}

Graph inducedSubgraph(const Graph& g, const std::set<VertexId>& vs) {
    Graph out;
    for (const auto& v : g.vertices()) {
        if (vs.count(v)) out.addVertex(v);
    }
    for (const auto& e : g.edges()) {
        if (vs.count(e.u) && vs.count(e.v)) out.addEdge(e.u, e.v);
    }
    return out;
}

// Recursive structural check: decomposes the disk into triangles via chord
// splits and vertex peels, reporting the first face-level defect found.
void validateRecursive(const Graph& g, const std::vector<VertexId>& outer) {
    const std::size_t n = g.vertexCount();
    const std::size_t s = outer.size();

    if (n == 3) {
        if (g.edgeCount() != 3) {
            throw ValidationError("triangle base with " +
                                  std::to_string(g.edgeCount()) + " edges");
        }
        return;
    }

    if (auto f = chordOf(g, outer)) {
        SplitSides sides = splitSides(g, outer, *f);
        validateRecursive(inducedSubgraph(g, sides.verts1), sides.outer1);
        validateRecursive(inducedSubgraph(g, sides.verts2), sides.outer2);
        return;
    }

    if (n == s) {
        // Chordless polygon with more than three vertices.
        throw ValidationError("inner face of size " + std::to_string(s));
    }

    // Chordless with interior vertices: peel outer[1].
    const VertexId& v = outer[1];
    const VertexId& prev = outer[0];
    const VertexId& next = outer[2];
    std::set<VertexId> link;
    for (const auto& w : g.neighbors(v)) {
        if (w != prev && w != next) link.insert(w);
    }
    if (link.empty()) {
        throw ValidationError("outer vertex " + v +
                              " has no interior neighbors; face at " + v +
                              " is not a triangle");
    }
    auto path = linkPath(g, prev, next, link);
    if (!path) {
        throw ValidationError("link of outer vertex " + v + " is not a path");
    }
    std::vector<VertexId> newOuter{prev};
    newOuter.insert(newOuter.end(), path->begin(), path->end());
    newOuter.insert(newOuter.end(), outer.begin() + 2, outer.end());
    validateRecursive(g.minusVertex(v), newOuter);
}

}  // namespace

NearTriangulation NearTriangulation::validate(
    const Graph& g, const std::vector<VertexId>& outerCycle,
    const Edge& distinguished) {
    const std::size_t s = outerCycle.size();
    if (s < 3) throw ValidationError("outer cycle shorter than 3");
    std::set<VertexId> outerSet(outerCycle.begin(), outerCycle.end());
    if (outerSet.size() != s) throw ValidationError("outer cycle repeats a vertex");
    for (const auto& v : outerCycle) {
        if (!g.hasVertex(v)) throw ValidationError("outer cycle vertex " + v + " not in graph");
    }
    for (std::size_t i = 0; i < s; ++i) {
        const VertexId& u = outerCycle[i];
        const VertexId& w = outerCycle[(i + 1) % s];
        if (!g.hasEdge(u, w)) {
            throw ValidationError("outer cycle pair " + u + "," + w + " is not an edge");
        }
    }
    if (!g.connected()) throw ValidationError("graph is not connected");

    // Distinguished edge must be an outer-cycle edge.
    std::size_t ia = s;
    for (std::size_t i = 0; i < s; ++i) {
        if (outerCycle[i] == distinguished.u || outerCycle[i] == distinguished.v) {
            const VertexId& nxt = outerCycle[(i + 1) % s];
            if (nxt == distinguished.u || nxt == distinguished.v) ia = i;
        }
    }
    if (ia == s) {
        throw ValidationError("distinguished edge " + distinguished.render() +
                              " not on outer cycle");
    }

    validateRecursive(g, outerCycle);

    NearTriangulation nt;
    nt.graph_ = g;
    nt.outerSet_ = outerSet;

    // Normalize: rotate (and reverse if needed) so a = outer[0], b = outer[1],
    // where (a, b) are the distinguished endpoints in stored pair order.
    std::vector<VertexId> cyc = outerCycle;
    auto rotateTo = [&cyc](const VertexId& first) {
        auto it = std::find(cyc.begin(), cyc.end(), first);
        std::rotate(cyc.begin(), it, cyc.end());
    };
    rotateTo(distinguished.u);
    if (cyc[1] != distinguished.v) {
        std::reverse(cyc.begin(), cyc.end());
        rotateTo(distinguished.u);
    }
    nt.outer_ = cyc;
    return nt;
}

bool NearTriangulation::isOuter(const VertexId& v) const {
    return outerSet_.count(v) > 0;
}

std::vector<VertexId> NearTriangulation::interiorVertices() const {
    std::vector<VertexId> out;
    for (const auto& v : graph_.vertices()) {
        if (!outerSet_.count(v)) out.push_back(v);
    }
    return out;
}

std::optional<Edge> findChord(const NearTriangulation& nt) {
    return chordOf(nt.graph(), nt.outer());
}

std::pair<NearTriangulation, NearTriangulation> splitAtChord(
    const NearTriangulation& nt, const Edge& f) {
    auto chord = chordOf(nt.graph(), nt.outer());
    // f must be a chord: outer, non-consecutive, an edge.
    {
        const auto& outer = nt.outer();
        const std::size_t s = outer.size();
        std::size_t ic = s, id = s;
        for (std::size_t i = 0; i < s; ++i) {
            if (outer[i] == f.u) ic = i;
            if (outer[i] == f.v) id = i;
        }
        bool onOuter = ic < s && id < s;
        bool consecutive =
            onOuter && ((id + s - ic) % s == 1 || (ic + s - id) % s == 1);
        if (!onOuter || consecutive || !nt.graph().hasEdge(f.u, f.v)) {
            throw ValidationError("edge " + f.render() + " is not a chord");
        }
    }
    (void)chord;

    SplitSides sides = splitSides(nt.graph(), nt.outer(), f);
    Graph g1 = inducedSubgraph(nt.graph(), sides.verts1);
    Graph g2 = inducedSubgraph(nt.graph(), sides.verts2);

    Edge e = nt.distinguished();
    auto containsEdgeOnCycle = [&e](const std::vector<VertexId>& cyc) {
        const std::size_t m = cyc.size();
        for (std::size_t i = 0; i < m; ++i) {
            const VertexId& u = cyc[i];
            const VertexId& w = cyc[(i + 1) % m];
            if (Edge(u, w) == e) return true;
        }
        return false;
    };
    bool eInSide1 = containsEdgeOnCycle(sides.outer1);
    if (!eInSide1 && !containsEdgeOnCycle(sides.outer2)) {
        throw ValidationError("distinguished edge lost in split");
    }
    const auto& outerE = eInSide1 ? sides.outer1 : sides.outer2;
    const auto& outerF = eInSide1 ? sides.outer2 : sides.outer1;
    Graph& gE = eInSide1 ? g1 : g2;
    Graph& gF = eInSide1 ? g2 : g1;

    NearTriangulation part1 = NearTriangulation::validate(gE, outerE, e);
    NearTriangulation part2 = NearTriangulation::validate(gF, outerF, f);
    return {part1, part2};
}

std::pair<NearTriangulation, PeelStep> peel(const NearTriangulation& nt) {
    if (nt.graph().vertexCount() == 3) throw ValidationError("base case: cannot peel a triangle");
    if (findChord(nt)) throw ValidationError("outer cycle has a chord; split first");

    const auto& outer = nt.outer();
    const std::size_t s = outer.size();
    const VertexId& b = outer[1];
    const VertexId& v = outer[2];
    const VertexId& t = outer[3 % s];

    std::set<VertexId> link;
    for (const auto& w : nt.graph().neighbors(v)) {
        if (w != b && w != t) link.insert(w);
    }
    auto path = linkPath(nt.graph(), b, t, link);
    if (!path) throw ValidationError("link of " + v + " is not a path");

    std::vector<VertexId> newOuter{outer[0], b};
    newOuter.insert(newOuter.end(), path->begin(), path->end());
    for (std::size_t i = 3; i < s; ++i) newOuter.push_back(outer[i]);
    if (newOuter.size() < 3) {
        throw ValidationError("outer cycle collapses when peeling " + v);
    }

    NearTriangulation reduced = NearTriangulation::validate(
        nt.graph().minusVertex(v), newOuter, nt.distinguished());

    PeelStep step;
    step.removed = v;
    step.bNeighbor = b;
    step.tNeighbor = t;
    step.link = *path;
    return {reduced, step};
}

}  // namespace atcert
