#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "atcert/laurent.hpp"

using namespace atcert;

namespace {

ExponentVector ev(std::initializer_list<std::pair<const VertexId, int>> init) {
    return ExponentVector(init);
}

/// Reciprocal-mode product of the given edge list, starting from `start`.
SparsePolynomial reciprocalProduct(
    const SparsePolynomial& start,
    const std::vector<std::pair<VertexId, VertexId>>& edges, bool pruneEach) {
    SparsePolynomial p = start;
    for (const auto& [u, v] : edges) {
        p = p.timesEdgeFactor(u, v, FactorMode::Reciprocal);
        if (pruneEach) p = p.pruneNonNice();
    }
    return p;
}

}  // namespace

TEST_CASE("niceness order") {
    ExponentVector m1 = ev({{"x", 3}, {"y", 1}, {"z", -1}});
    ExponentVector m2 = ev({{"x", 1}, {"z", -1}});  // (1, 0, -1)
    CHECK(nicenessGe(m1, m2));
    CHECK_FALSE(nicenessGe(m2, m1));
    CHECK(nicenessGe(m1, m1));
    CHECK_FALSE(nicenessGe(ev({{"y", 1}}), ev({{"x", 1}})));
    CHECK_FALSE(nicenessGe(ev({{"x", 1}}), ev({{"y", 1}})));
}

TEST_CASE("is_nice") {
    CHECK(ExponentVector{}.isNice());
    CHECK_FALSE(ev({{"a", -1}, {"c", 1}}).isNice());
    CHECK(ev({{"c", 2}}).isNice());
    CHECK(nicenessGe(ev({{"c", 2}}), ExponentVector{}));
}

TEST_CASE("canonical sparse form") {
    ExponentVector m = ev({{"a", 1}});
    m.add("a", -1);
    CHECK(m == ExponentVector{});
    m.set("b", 2);
    m.set("b", 0);
    CHECK(m.empty());
    CHECK(ev({{"a", 1}, {"b", 0}}) == ev({{"a", 1}}));
}

TEST_CASE("product of two good polynomials need not be good") {
    SparsePolynomial p;  // 1 + x y^-1
    p.addTerm({}, 1);
    p.addTerm(ev({{"x", 1}, {"y", -1}}), 1);
    SparsePolynomial q;  // 1 - x^-1 y
    q.addTerm({}, 1);
    q.addTerm(ev({{"x", -1}, {"y", 1}}), -1);
    CHECK(p.isGood());
    CHECK(q.isGood());

    SparsePolynomial prod = p.times(q);
    SparsePolynomial want;
    want.addTerm(ev({{"x", 1}, {"y", -1}}), 1);
    want.addTerm(ev({{"x", -1}, {"y", 1}}), -1);
    CHECK(prod == want);
    CHECK_FALSE(prod.isGood());
    CHECK(prod.pruneNonNice().isZero());
    CHECK(prod.niceTerms().isZero());
}

TEST_CASE("multiplicative identity and binomial product") {
    SparsePolynomial p;
    p.addTerm(ev({{"a", 2}}), 3);
    p.addTerm(ev({{"b", 1}}), -1);
    CHECK(p.times(SparsePolynomial::one()) == p);

    SparsePolynomial ac = SparsePolynomial::one().timesEdgeFactor(
        "a", "c", FactorMode::Plain);
    SparsePolynomial prod = ac.timesEdgeFactor("b", "c", FactorMode::Plain);
    SparsePolynomial want;
    want.addTerm(ev({{"a", 1}, {"b", 1}}), 1);
    want.addTerm(ev({{"a", 1}, {"c", 1}}), -1);
    want.addTerm(ev({{"b", 1}, {"c", 1}}), -1);
    want.addTerm(ev({{"c", 2}}), 1);
    CHECK(prod == want);
}

TEST_CASE("edge factors") {
    SparsePolynomial r = SparsePolynomial::one().timesEdgeFactor(
        "a", "c", FactorMode::Reciprocal);
    SparsePolynomial wantR;
    wantR.addTerm(ev({{"a", -1}}), 1);
    wantR.addTerm(ev({{"c", -1}}), -1);
    CHECK(r == wantR);

    SparsePolynomial p = SparsePolynomial::one().timesEdgeFactor(
        "a", "c", FactorMode::Plain);
    SparsePolynomial wantP;
    wantP.addTerm(ev({{"a", 1}}), 1);
    wantP.addTerm(ev({{"c", 1}}), -1);
    CHECK(p == wantP);

    CHECK_THROWS_AS(p.timesEdgeFactor("a", "a", FactorMode::Plain),
                    ValidationError);
}

TEST_CASE("triangle Z base case") {
    // Q_{triangle - ab} scaled by the reference monomial c^2.
    SparsePolynomial z = SparsePolynomial::monomial(ev({{"c", 2}}), 1)
                             .timesEdgeFactor("a", "c", FactorMode::Reciprocal)
                             .timesEdgeFactor("b", "c", FactorMode::Reciprocal);
    SparsePolynomial want;
    want.addTerm({}, 1);
    want.addTerm(ev({{"a", -1}, {"c", 1}}), -1);
    want.addTerm(ev({{"b", -1}, {"c", 1}}), -1);
    want.addTerm(ev({{"a", -1}, {"b", -1}, {"c", 2}}), 1);
    CHECK(z == want);

    CHECK(z.isGood());
    CHECK(z.pruneNonNice() == SparsePolynomial::one());
    CHECK(z.niceTerms() == SparsePolynomial::one());
    CHECK(z.pruneNonNice().pruneNonNice() == z.pruneNonNice());
}

TEST_CASE("goodness of the zero polynomial") {
    SparsePolynomial zero;
    CHECK(zero.isZero());
    CHECK_FALSE(zero.isGood());

    SparsePolynomial p;
    p.addTerm({}, 1);
    p.addTerm(ev({{"a", -1}, {"c", 1}}), -1);
    CHECK(p.isGood());
}

TEST_CASE("coefficients cancel exactly") {
    SparsePolynomial p;
    p.addTerm(ev({{"a", 1}}), 5);
    p.addTerm(ev({{"a", 1}}), -5);
    CHECK(p.isZero());
    CHECK(p.coefficientOf(ev({{"a", 1}})) == 0);
}

TEST_CASE("homogeneity of plain and reciprocal products") {
    std::mt19937 rng(7);
    std::vector<VertexId> vars{"a", "b", "c", "d", "e"};
    for (int trial = 0; trial < 20; ++trial) {
        int g = 1 + static_cast<int>(rng() % 8);
        SparsePolynomial plain = SparsePolynomial::one();
        SparsePolynomial recip = SparsePolynomial::one();
        for (int i = 0; i < g; ++i) {
            VertexId u = vars[rng() % vars.size()];
            VertexId v = vars[rng() % vars.size()];
            if (u == v) v = (u == "a") ? "b" : "a";
            plain = plain.timesEdgeFactor(std::min(u, v), std::max(u, v),
                                          FactorMode::Plain);
            recip = recip.timesEdgeFactor(std::min(u, v), std::max(u, v),
                                          FactorMode::Reciprocal);
        }
        for (const auto& [m, c] : plain.terms()) CHECK(m.totalDegree() == g);
        for (const auto& [m, c] : recip.terms()) CHECK(m.totalDegree() == -g);
    }
}

TEST_CASE("canonical confluence: evaluation order does not matter") {
    std::vector<std::pair<VertexId, VertexId>> edges{
        {"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}};
    std::mt19937 rng(11);
    SparsePolynomial reference = SparsePolynomial::one();
    for (const auto& [u, v] : edges) {
        reference = reference.timesEdgeFactor(u, v, FactorMode::Plain);
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = edges;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        SparsePolynomial p = SparsePolynomial::one();
        for (const auto& [u, v] : shuffled) {
            p = p.timesEdgeFactor(u, v, FactorMode::Plain);
        }
        CHECK(p == reference);
        CHECK(p.ledgerText() == reference.ledgerText());
    }
    // (p + q) r == p r + q r on the same data.
    SparsePolynomial half1 = SparsePolynomial::one().timesEdgeFactor(
        "a", "b", FactorMode::Plain);
    SparsePolynomial half2 = SparsePolynomial::one().timesEdgeFactor(
        "a", "c", FactorMode::Plain);
    SparsePolynomial r = SparsePolynomial::one().timesEdgeFactor(
        "b", "c", FactorMode::Plain);
    CHECK(half1.plus(half2).times(r) ==
          half1.times(r).plus(half2.times(r)));
}

TEST_CASE("prune soundness under monotone reciprocal context") {
    // Multiplying only reciprocal factors can never raise an exponent, so
    // pruning early must agree with pruning once at the end.
    std::mt19937 rng(23);
    std::vector<VertexId> vars{"a", "b", "c", "d"};
    for (int trial = 0; trial < 50; ++trial) {
        SparsePolynomial start = SparsePolynomial::monomial(
            ev({{"a", static_cast<int>(rng() % 4)},
                {"b", static_cast<int>(rng() % 4)},
                {"c", static_cast<int>(rng() % 4)},
                {"d", static_cast<int>(rng() % 4)}}),
            1);
        std::vector<std::pair<VertexId, VertexId>> edges;
        int g = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < g; ++i) {
            VertexId u = vars[rng() % vars.size()];
            VertexId v = vars[rng() % vars.size()];
            if (u == v) continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        SparsePolynomial lazy =
            reciprocalProduct(start, edges, false).pruneNonNice();
        SparsePolynomial eager = reciprocalProduct(start, edges, true);
        CHECK(lazy == eager);
    }
}

TEST_CASE("rendering") {
    CHECK(ExponentVector{}.render() == "1");
    CHECK(ev({{"a", 2}, {"c", -1}}).render() == "a^2 c^-1");
    SparsePolynomial p;
    p.addTerm(ev({{"c", 2}}), 1);
    p.addTerm(ev({{"a", -1}, {"c", 1}}), -1);
    CHECK(p.render() == "-1·a^-1·c^1 +1·c^2");
    CHECK(p.ledgerText() == "a^-1 c^1 -1\nc^2 1\n");
}
