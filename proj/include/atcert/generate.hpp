#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atcert/graph.hpp"

namespace atcert {

enum class Family {
    Fan,
    Wheel,
    Stacked,
    Octahedron,
    V8,
    CliqueSum,
};

/// A deterministically labeled generator output. Near-triangulation families
/// carry an outer cycle and a default distinguished edge; V8 and clique sums
/// may not.
struct GeneratedGraph {
    Graph graph;
    Family family;
    std::optional<std::vector<VertexId>> outerCycle;
    std::optional<Edge> distinguished;
    /// For clique sums: the validated near-triangulation parts (relabeled
    /// into the combined vertex namespace) used to seed certificate search.
    std::vector<GeneratedGraph> parts;

    NearTriangulation toNearTriangulation() const;
};

/// Fan: path p1..pm plus hub h joined to every path vertex; everything on
/// the outer cycle (h, p1, ..., pm). m >= 2.
GeneratedGraph generateFan(int m);

/// Wheel: rim cycle r1..rm with interior hub h. m >= 3.
GeneratedGraph generateWheel(int m);

/// Stacked triangulation: outer triangle (a, b, c); every inner face is
/// subdivided by a new vertex, repeated `depth` times. depth >= 0.
GeneratedGraph generateStacked(int depth);

/// Octahedron with outer triangle (a, b, c) and inner triangle (u, v, w).
GeneratedGraph generateOctahedron();

/// Wagner graph: C8 on v0..v7 plus the four long diagonals.
GeneratedGraph generateV8();

/// K4 on the given four labels, outer cycle the first three.
GeneratedGraph generateK4(const std::string& prefix = "");

/// Square a,b,c,d with chord a-c; outer cycle (a,b,c,d), e = ab.
GeneratedGraph generateSquareWithChord();

/// Glues g1 and g2 along the identified vertices (sharedInG1[i] in g1 is the
/// same vertex as sharedInG2[i] in g2). The shared set must be a clique of
/// size 1..3 in both parts. Non-shared g2 vertices that collide with g1
/// labels get a "'" suffix.
GeneratedGraph cliqueSum(const GeneratedGraph& g1, const GeneratedGraph& g2,
                         const std::vector<VertexId>& sharedInG1,
                         const std::vector<VertexId>& sharedInG2);

/// Parses "fan:5", "wheel:6", "stacked:2", "octahedron", "v8".
GeneratedGraph generateNamed(const std::string& familySpec);

}  // namespace atcert
