#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "atcert/generate.hpp"
#include "atcert/oracle.hpp"

using namespace atcert;

namespace {

ExponentVector ev(std::initializer_list<std::pair<const VertexId, int>> init) {
    return ExponentVector(init);
}

/// Small corpus with |E| <= 12 for full-expansion cross-checks.
std::vector<GeneratedGraph> smallCorpus() {
    return {generateNamed("fan:2"),     generateNamed("fan:3"),
            generateNamed("fan:4"),     generateNamed("fan:5"),
            generateNamed("wheel:3"),   generateNamed("wheel:4"),
            generateNamed("wheel:5"),   generateNamed("stacked:0"),
            generateNamed("stacked:1"), generateNamed("square_chord"),
            generateNamed("octahedron"), generateNamed("v8")};
}

DegreeCaps capsFor(const GeneratedGraph& gg) {
    if (gg.outerCycle) return theorem1Caps(gg.toNearTriangulation());
    return theorem4Caps(gg.graph, {}, false);
}

std::set<Edge> distinguishedOf(const GeneratedGraph& gg) {
    if (gg.distinguished) return {*gg.distinguished};
    return {};
}

Graph cycle4() {
    Graph g;
    for (const char* v : {"a", "b", "c", "d"}) g.addVertex(v);
    g.addEdge("a", "b");
    g.addEdge("b", "c");
    g.addEdge("c", "d");
    g.addEdge("a", "d");
    return g;
}

}  // namespace

TEST_CASE("capped expansion of P: base shapes") {
    NearTriangulation tri = generateNamed("stacked:0").toNearTriangulation();
    CoefficientLedger ledger = cappedExpandP(tri.graph(), theorem1Caps(tri),
                                             {tri.distinguished()});
    REQUIRE(ledger.entries.size() == 1);
    CHECK(ledger.coefficientOf(ev({{"c", 2}})) == 1);

    NearTriangulation k4 = generateK4().toNearTriangulation();
    CoefficientLedger k4Ledger = cappedExpandP(k4.graph(), theorem1Caps(k4),
                                               {k4.distinguished()});
    REQUIRE(k4Ledger.entries.size() == 1);
    CHECK(k4Ledger.coefficientOf(ev({{"c", 2}, {"d", 3}})) == -1);

    DegreeCaps zero;
    zero.variant = CapsVariant::Custom;
    for (const auto& v : k4.graph().vertices()) zero.caps[v] = 0;
    CHECK(cappedExpandP(k4.graph(), zero, {}).empty());
}

TEST_CASE("capped expansion of Z mirrors P through the caps offset") {
    NearTriangulation tri = generateNamed("stacked:0").toNearTriangulation();
    CoefficientLedger z = cappedExpandZ(tri.graph(), theorem1Caps(tri),
                                        {tri.distinguished()});
    REQUIRE(z.entries.size() == 1);
    CHECK(z.coefficientOf(ExponentVector{}) == 1);  // the constant nice term

    NearTriangulation k4 = generateK4().toNearTriangulation();
    DegreeCaps caps = theorem1Caps(k4);
    CoefficientLedger zk4 = cappedExpandZ(k4.graph(), caps, {k4.distinguished()});
    REQUIRE(zk4.entries.size() == 1);
    // Z-image of c^2 d^3 sits at caps - (2,3) = (0,1) on (c,d).
    CHECK(zk4.coefficientOf(ev({{"d", 1}})) == -1);

    Graph oneEdge;
    oneEdge.addVertex("a");
    oneEdge.addVertex("b");
    oneEdge.addEdge("a", "b");
    DegreeCaps zero;
    zero.caps = {{"a", 0}, {"b", 0}};
    CHECK(cappedExpandZ(oneEdge, zero, {}).empty());
}

TEST_CASE("coefficient point queries") {
    NearTriangulation tri = generateNamed("stacked:0").toNearTriangulation();
    CHECK(oracleCoefficient(tri.graph(), {tri.distinguished()},
                            ev({{"c", 2}})) == 1);

    Graph k4 = generateK4().graph;
    std::set<Edge> minusE{Edge("a", "b")};
    CHECK(oracleCoefficient(k4, minusE, ev({{"c", 2}, {"d", 3}})) == -1);
    CHECK(oracleCoefficient(k4, minusE, ev({{"c", 3}, {"d", 2}})) == 1);
    CHECK(oracleCoefficient(k4, minusE, ev({{"c", 5}})) == 0);
    CHECK(oracleCoefficient(k4, minusE, ev({{"c", 4}, {"d", 1}})) == 0);
    CHECK(oracleCoefficient(k4, minusE, ev({{"a", 1}, {"c", 1}, {"d", 3}})) == 1);
}

TEST_CASE("modular coefficients") {
    Graph k4 = generateK4().graph;
    std::set<Edge> minusE{Edge("a", "b")};
    ExponentVector m = ev({{"c", 2}, {"d", 3}});  // coefficient -1
    CHECK(oracleCoefficientMod(k4, minusE, m, 2) == 1);
    CHECK(oracleCoefficientMod(k4, minusE, m, 3) == 2);
    CHECK(oracleCoefficientMod(k4, minusE, m, 5) == 4);
    CHECK(oracleCoefficientMod(k4, minusE, m, 7) == 6);
    CHECK(oracleCoefficientMod(k4, minusE, ev({{"c", 5}}), 7) == 0);

    // A coefficient that is nonzero over the rationals but zero mod 2:
    // the all-ones monomial of the 4-cycle has coefficient -2.
    Graph c4 = cycle4();
    ExponentVector ones = ev({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    CHECK(oracleCoefficient(c4, {}, ones) == -2);
    CHECK(oracleCoefficientMod(c4, {}, ones, 2) == 0);
    CHECK(oracleCoefficientMod(c4, {}, ones, 3) == 1);

    CHECK_THROWS_AS(oracleCoefficientMod(k4, minusE, m, 6), ValidationError);
    CHECK(isPrime(2));
    CHECK(isPrime(2147483647));
    CHECK_FALSE(isPrime(1));
    CHECK_FALSE(isPrime(91));
}

TEST_CASE("pruning soundness against full expansion") {
    for (const auto& gg : smallCorpus()) {
        REQUIRE(gg.graph.edgeCount() <= 12);
        DegreeCaps caps = capsFor(gg);
        std::set<Edge> excluded = distinguishedOf(gg);
        CoefficientLedger capped = cappedExpandP(gg.graph, caps, excluded);
        SparsePolynomial full = fullExpandP(gg.graph, excluded);
        std::size_t withinCaps = 0;
        for (const auto& [m, c] : full.terms()) {
            bool inside = true;
            for (const auto& [v, e] : m.entries()) {
                if (e > caps.capOf(v)) inside = false;
            }
            if (!inside) continue;
            ++withinCaps;
            CHECK(capped.coefficientOf(m) == c);
        }
        CHECK(capped.entries.size() == withinCaps);
    }
}

TEST_CASE("duality bridge between Q and P") {
    for (const auto& gg : smallCorpus()) {
        std::set<Edge> excluded = distinguishedOf(gg);
        SparsePolynomial p = fullExpandP(gg.graph, excluded);
        SparsePolynomial q = fullExpandQ(gg.graph, excluded);
        CHECK(p.termCount() == q.termCount());
        for (const auto& [m, c] : p.terms()) {
            ExponentVector neg;
            for (const auto& [v, e] : m.entries()) neg.set(v, -e);
            CHECK(q.coefficientOf(neg) == c);
        }
    }
}

TEST_CASE("duality of the capped ledgers") {
    for (const auto& gg : smallCorpus()) {
        DegreeCaps caps = capsFor(gg);
        std::set<Edge> excluded = distinguishedOf(gg);
        CoefficientLedger p = cappedExpandP(gg.graph, caps, excluded);
        CoefficientLedger z = cappedExpandZ(gg.graph, caps, excluded);
        CHECK(p.entries.size() == z.entries.size());
        ExponentVector capVec = caps.asExponentVector();
        for (const auto& [m, c] : p.entries) {
            CHECK(z.coefficientOf(capVec.minus(m)) == c);
        }
    }
}

TEST_CASE("homogeneity of ledger entries") {
    for (const auto& gg : smallCorpus()) {
        DegreeCaps caps = capsFor(gg);
        std::set<Edge> excluded = distinguishedOf(gg);
        CoefficientLedger p = cappedExpandP(gg.graph, caps, excluded);
        int degree = static_cast<int>(gg.graph.edgeCount() - excluded.size());
        for (const auto& [m, c] : p.entries) {
            CHECK(m.totalDegree() == degree);
        }
        if (gg.outerCycle) {
            // Z-terms of a near-triangulation live at degree n - s.
            NearTriangulation nt = gg.toNearTriangulation();
            CoefficientLedger z = cappedExpandZ(gg.graph, caps, excluded);
            int interior = static_cast<int>(nt.graph().vertexCount() -
                                            nt.outerLength());
            for (const auto& [m, c] : z.entries) {
                CHECK(m.totalDegree() == interior);
            }
        }
    }
}

TEST_CASE("exclusion consistency") {
    Graph k4 = generateK4().graph;
    for (const Edge& drop : k4.edges()) {
        Graph reduced = k4.minusEdges({drop});
        DegreeCaps caps = theorem4Caps(k4, {}, false);
        CoefficientLedger ledger = cappedExpandP(k4, caps, {drop});
        for (const auto& [m, c] : ledger.entries) {
            for (const auto& [v, e] : m.entries()) {
                CHECK(e <= reduced.degree(v));
            }
        }
    }
}

TEST_CASE("determinism under edge order and worker count") {
    GeneratedGraph oct = generateOctahedron();
    NearTriangulation nt = oct.toNearTriangulation();
    DegreeCaps caps = theorem1Caps(nt);
    std::set<Edge> excluded{nt.distinguished()};

    ExpandOptions base;
    CoefficientLedger reference = cappedExpandP(oct.graph, caps, excluded, base);

    ExpandOptions reversedOrder;
    std::vector<Edge> order;
    for (const Edge& e : oct.graph.edges()) {
        if (!excluded.contains(e)) order.push_back(e);
    }
    std::reverse(order.begin(), order.end());
    reversedOrder.overrideOrder = order;
    CHECK(cappedExpandP(oct.graph, caps, excluded, reversedOrder).exportText() ==
          reference.exportText());

    ExpandOptions parallel;
    parallel.workers = 4;
    CHECK(cappedExpandP(oct.graph, caps, excluded, parallel).exportText() ==
          reference.exportText());
}

TEST_CASE("size guard") {
    GeneratedGraph oct = generateOctahedron();
    ExpandOptions tight;
    tight.maxLiveTerms = 3;
    DegreeCaps caps = theorem4Caps(oct.graph, {}, false);
    CHECK_THROWS_AS(cappedExpandP(oct.graph, caps, {}, tight), BudgetExceeded);
}

TEST_CASE("list coloring solver") {
    Graph tri = generateNamed("stacked:0").graph;
    std::map<VertexId, std::set<int>> two;
    for (const auto& v : tri.vertices()) two[v] = {1, 2};
    CHECK_FALSE(solveListColoring(tri, two).has_value());

    Graph path;
    for (const char* v : {"p1", "p2", "p3"}) path.addVertex(v);
    path.addEdge("p1", "p2");
    path.addEdge("p2", "p3");
    std::map<VertexId, std::set<int>> lists;
    for (const auto& v : path.vertices()) lists[v] = {1, 2};
    auto coloring = solveListColoring(path, lists);
    REQUIRE(coloring.has_value());
    CHECK((*coloring)["p1"] != (*coloring)["p2"]);
    CHECK((*coloring)["p2"] != (*coloring)["p3"]);

    Graph k4 = generateK4().graph;
    std::map<VertexId, std::set<int>> four;
    for (const auto& v : k4.vertices()) four[v] = {1, 2, 3, 4};
    auto k4Coloring = solveListColoring(k4, four);
    REQUIRE(k4Coloring.has_value());
    for (const Edge& e : k4.edges()) {
        CHECK((*k4Coloring)[e.u] != (*k4Coloring)[e.v]);
    }
}

TEST_CASE("adversarial choosability") {
    Graph tri = generateNamed("stacked:0").graph;
    std::map<VertexId, int> two;
    for (const auto& v : tri.vertices()) two[v] = 2;
    AdversaryVerdict bad = adversarialChoosability(tri, two, 2);
    CHECK_FALSE(bad.allColorable);
    REQUIRE(bad.failingAssignment.has_value());
    // The canonical failing assignment gives every vertex the same 2 colors.
    CHECK_FALSE(solveListColoring(
                    tri, std::map<VertexId, std::set<int>>(
                             bad.failingAssignment->begin(),
                             bad.failingAssignment->end()))
                    .has_value());

    Graph c4 = cycle4();  // also K4 minus a perfect matching
    std::map<VertexId, int> sizes;
    for (const auto& v : c4.vertices()) sizes[v] = 2;
    AdversaryVerdict good = adversarialChoosability(c4, sizes, 4);
    CHECK(good.allColorable);
    CHECK(good.universeLimited);  // universe 4 < |V| * k = 8
    CHECK(good.assignmentsChecked > 0);

    AdversaryVerdict full = adversarialChoosability(c4, sizes, 8);
    CHECK(full.allColorable);
    CHECK_FALSE(full.universeLimited);
}

TEST_CASE("ledger export format") {
    NearTriangulation tri = generateNamed("stacked:0").toNearTriangulation();
    CoefficientLedger ledger = cappedExpandP(tri.graph(), theorem1Caps(tri),
                                             {tri.distinguished()});
    std::string text = ledger.exportText();
    CHECK(text.starts_with("atcert-ledger v1\n"));
    CHECK(text.find("caps theorem1\n") != std::string::npos);
    CHECK(text.find("excluded a-b\n") != std::string::npos);
    CHECK(text.ends_with("c^2 1\n"));
}
