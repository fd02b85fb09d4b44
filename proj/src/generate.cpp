#include "atcert/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace atcert {

NearTriangulation GeneratedGraph::toNearTriangulation() const {
    if (!outerCycle || !distinguished) {
        throw ValidationError("generated graph has no outer cycle");
    }
    return NearTriangulation::validate(graph, *outerCycle, *distinguished);
}

GeneratedGraph generateFan(int m) {
    if (m < 2) throw ValidationError("fan requires m >= 2");
    GeneratedGraph out;
    out.family = Family::Fan;
    out.graph.addVertex("h");
    std::vector<VertexId> ps;
    for (int i = 1; i <= m; ++i) {
        VertexId p = "p" + std::to_string(i);
        out.graph.addVertex(p);
        ps.push_back(p);
    }
    for (const auto& p : ps) out.graph.addEdge("h", p);
    for (int i = 0; i + 1 < m; ++i) out.graph.addEdge(ps[i], ps[i + 1]);
    std::vector<VertexId> outer{"h"};
    outer.insert(outer.end(), ps.begin(), ps.end());
    out.outerCycle = outer;
    out.distinguished = Edge("h", ps[0]);
    return out;
}

GeneratedGraph generateWheel(int m) {
    if (m < 3) throw ValidationError("wheel requires m >= 3");
    GeneratedGraph out;
    out.family = Family::Wheel;
    out.graph.addVertex("h");
    std::vector<VertexId> rim;
    for (int i = 1; i <= m; ++i) {
        VertexId r = "r" + std::to_string(i);
        out.graph.addVertex(r);
        rim.push_back(r);
    }
    for (int i = 0; i < m; ++i) {
        out.graph.addEdge(rim[i], rim[(i + 1) % m]);
        out.graph.addEdge("h", rim[i]);
    }
    out.outerCycle = rim;
    out.distinguished = Edge(rim[0], rim[1]);
    return out;
}

GeneratedGraph generateStacked(int depth) {
    if (depth < 0 || depth > 6) throw ValidationError("stacked depth out of range");
    GeneratedGraph out;
    out.family = Family::Stacked;
    out.graph.addVertex("a");
    out.graph.addVertex("b");
    out.graph.addVertex("c");
    out.graph.addEdge("a", "b");
    out.graph.addEdge("b", "c");
    out.graph.addEdge("a", "c");
    std::vector<std::array<VertexId, 3>> faces{{VertexId("a"), "b", "c"}};
    int counter = 0;
    for (int d = 0; d < depth; ++d) {
        std::vector<std::array<VertexId, 3>> next;
        for (const auto& f : faces) {
            VertexId w = "s" + std::to_string(++counter);
            out.graph.addVertex(w);
            for (const auto& corner : f) out.graph.addEdge(w, corner);
            next.push_back({f[0], f[1], w});
            next.push_back({f[0], f[2], w});
            next.push_back({f[1], f[2], w});
        }
        faces = std::move(next);
    }
    out.outerCycle = std::vector<VertexId>{"a", "b", "c"};
    out.distinguished = Edge("a", "b");
    return out;
}

GeneratedGraph generateOctahedron() {
    GeneratedGraph out;
    out.family = Family::Octahedron;
    const std::vector<VertexId> outerTri{"a", "b", "c"};
    const std::vector<VertexId> inner{"u", "v", "w"};
    for (const auto& x : outerTri) out.graph.addVertex(x);
    for (const auto& x : inner) out.graph.addVertex(x);
    // K2,2,2: every pair except the three antipodal ones (a,u), (b,v), (c,w).
    std::vector<VertexId> all = outerTri;
    all.insert(all.end(), inner.begin(), inner.end());
    std::set<Edge> anti{Edge("a", "u"), Edge("b", "v"), Edge("c", "w")};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            Edge e(all[i], all[j]);
            if (!anti.count(e)) out.graph.addEdge(e.u, e.v);
        }
    }
    out.outerCycle = outerTri;
    out.distinguished = Edge("a", "b");
    return out;
}

GeneratedGraph generateV8() {
    GeneratedGraph out;
    out.family = Family::V8;
    std::vector<VertexId> vs;
    for (int i = 0; i < 8; ++i) {
        VertexId v = "v" + std::to_string(i);
        out.graph.addVertex(v);
        vs.push_back(v);
    }
    for (int i = 0; i < 8; ++i) out.graph.addEdge(vs[i], vs[(i + 1) % 8]);
    for (int i = 0; i < 4; ++i) out.graph.addEdge(vs[i], vs[i + 4]);
    return out;
}

GeneratedGraph generateK4(const std::string& prefix) {
    GeneratedGraph out;
    out.family = Family::Stacked;
    std::vector<VertexId> vs{prefix + "a", prefix + "b", prefix + "c", prefix + "d"};
    for (const auto& v : vs) out.graph.addVertex(v);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) out.graph.addEdge(vs[i], vs[j]);
    }
    out.outerCycle = std::vector<VertexId>{vs[0], vs[1], vs[2]};
    out.distinguished = Edge(vs[0], vs[1]);
    return out;
}

GeneratedGraph generateSquareWithChord() {
    GeneratedGraph out;
    out.family = Family::Stacked;
    for (const auto& v : {"a", "b", "c", "d"}) out.graph.addVertex(v);
    out.graph.addEdge("a", "b");
    out.graph.addEdge("b", "c");
    out.graph.addEdge("c", "d");
    out.graph.addEdge("a", "d");
    out.graph.addEdge("a", "c");
    out.outerCycle = std::vector<VertexId>{"a", "b", "c", "d"};
    out.distinguished = Edge("a", "b");
    return out;
}

GeneratedGraph cliqueSum(const GeneratedGraph& g1, const GeneratedGraph& g2,
                         const std::vector<VertexId>& sharedInG1,
                         const std::vector<VertexId>& sharedInG2) {
    if (sharedInG1.size() != sharedInG2.size() || sharedInG1.empty() ||
        sharedInG1.size() > 3) {
        throw ValidationError("clique sum shared set must have 1..3 vertices");
    }
    auto checkClique = [](const Graph& g, const std::vector<VertexId>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (!g.hasVertex(vs[i])) {
                throw ValidationError("shared vertex " + vs[i] + " not in part");
            }
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!g.hasEdge(vs[i], vs[j])) {
                    throw ValidationError("shared set is not a clique: missing " +
                                          vs[i] + "-" + vs[j]);
                }
            }
        }
    };
    checkClique(g1.graph, sharedInG1);
    checkClique(g2.graph, sharedInG2);

    // Map g2 vertices into the combined namespace.
    std::map<VertexId, VertexId> rename;
    for (std::size_t i = 0; i < sharedInG2.size(); ++i) {
        rename[sharedInG2[i]] = sharedInG1[i];
    }
    for (const auto& v : g2.graph.vertices()) {
        if (rename.count(v)) continue;
        VertexId name = v;
        while (g1.graph.hasVertex(name)) name += "'";
        rename[v] = name;
    }

    GeneratedGraph out;
    out.family = Family::CliqueSum;
    out.graph = g1.graph;
    for (const auto& v : g2.graph.vertices()) {
        if (!out.graph.hasVertex(rename[v])) out.graph.addVertex(rename[v]);
    }
    for (const auto& e : g2.graph.edges()) {
        if (!out.graph.hasEdge(rename[e.u], rename[e.v])) {
            out.graph.addEdge(rename[e.u], rename[e.v]);
        }
    }

    out.parts.push_back(g1);
    GeneratedGraph part2 = g2;
    {
        Graph rg;
        for (const auto& v : g2.graph.vertices()) rg.addVertex(rename[v]);
        for (const auto& e : g2.graph.edges()) rg.addEdge(rename[e.u], rename[e.v]);
        part2.graph = rg;
        if (part2.outerCycle) {
            for (auto& v : *part2.outerCycle) v = rename[v];
        }
        if (part2.distinguished) {
            part2.distinguished = Edge(rename[part2.distinguished->u],
                                       rename[part2.distinguished->v]);
        }
    }
    out.parts.push_back(part2);
    return out;
}

GeneratedGraph generateNamed(const std::string& familySpec) {
    std::string name = familySpec;
    int param = -1;
    if (auto pos = familySpec.find(':'); pos != std::string::npos) {
        name = familySpec.substr(0, pos);
        try {
            param = std::stoi(familySpec.substr(pos + 1));
        } catch (const std::exception&) {
            throw ValidationError("bad family parameter in '" + familySpec + "'");
        }
    }
    if (name == "fan") return generateFan(param);
    if (name == "wheel") return generateWheel(param);
    if (name == "stacked") return generateStacked(param);
    if (name == "octahedron") return generateOctahedron();
    if (name == "v8") return generateV8();
    if (name == "k4") return generateK4();
    if (name == "square_chord") return generateSquareWithChord();
    throw ValidationError("unknown family '" + name + "'");
}

}  // namespace atcert
