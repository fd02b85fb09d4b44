#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "atcert/graph.hpp"
#include "atcert/laurent.hpp"

namespace atcert {

enum class CapsVariant {
    Theorem1,
    Theorem2DoubleStar,
    Theorem2TripleStar,
    Theorem3,
    Theorem4,
    Custom,
};

std::string capsVariantName(CapsVariant v);
CapsVariant capsVariantFromName(const std::string& name);

/// Per-vertex nonnegative degree caps (the reference monomial in exponent
/// form), tagged with the theorem variant they encode.
struct DegreeCaps {
    std::map<VertexId, int> caps;
    CapsVariant variant = CapsVariant::Custom;

    int capOf(const VertexId& v) const {
        auto it = caps.find(v);
        return it == caps.end() ? 0 : it->second;
    }
    int total() const;
    ExponentVector asExponentVector() const;
};

/// a,b = 0; other outer = 2; interior = 4.
DegreeCaps theorem1Caps(const NearTriangulation& nt);

/// Double star: a,b = 0; green outer = 1; other outer = 2; interior = 3
/// (green interior vertices also 3).
/// Triple star: as double star but red interior vertices get 4.
DegreeCaps theorem2Caps(const NearTriangulation& nt, const RoleAssignment& roles,
                        bool tripleStar);

/// Outer triangle vertices = 0; everything else 3 (red 4 in the triple-star
/// variant).
DegreeCaps theorem3Caps(const NearTriangulation& nt, const RoleAssignment& roles,
                        bool tripleStar);

/// All vertices 3; red vertices 4 in the triple-star variant.
DegreeCaps theorem4Caps(const Graph& g, const RoleAssignment& roles,
                        bool tripleStar);

DegreeCaps capsFromMonomial(const ExponentVector& m);

struct ExpandOptions {
    std::size_t maxLiveTerms = 10'000'000;
    int workers = 1;
    /// Test hook: process edge factors in exactly this order instead of the
    /// default cap-ascending heuristic.
    std::optional<std::vector<Edge>> overrideOrder;

    /// Applies the ATCERT_MAX_TERMS environment override, if set.
    static ExpandOptions fromEnvironment();
};

/// Exact coefficients of one capped expansion.
struct CoefficientLedger {
    std::map<ExponentVector, Coeff> entries;
    std::string graphFingerprint;
    DegreeCaps caps;
    std::set<Edge> excludedEdges;

    bool empty() const { return entries.empty(); }
    Coeff coefficientOf(const ExponentVector& m) const;
    /// Lexicographically least entry; throws if empty.
    const ExponentVector& leastMonomial() const;
    /// Lines "<monomial> <coefficient>" in canonical order.
    std::string bodyText() const;
    /// Versioned header plus body.
    std::string exportText() const;
};

/// All monomials of prod over E(g) minus excluded of (u - v) with exponents
/// within caps. Terms that exceed a cap during incremental multiplication
/// are discarded (sound: plain-mode exponents never decrease).
CoefficientLedger cappedExpandP(const Graph& g, const DegreeCaps& caps,
                                const std::set<Edge>& excluded,
                                const ExpandOptions& opts = {});

/// Nice part of Z = R * prod (u^-1 - v^-1): starts from the cap monomial and
/// decrements, pruning any negative exponent (sound: reciprocal-mode
/// exponents never increase).
CoefficientLedger cappedExpandZ(const Graph& g, const DegreeCaps& caps,
                                const std::set<Edge>& excluded,
                                const ExpandOptions& opts = {});

/// Exact coefficient of m in P over E minus excluded (0 if absent).
Coeff oracleCoefficient(const Graph& g, const std::set<Edge>& excluded,
                        const ExponentVector& m, const ExpandOptions& opts = {});

/// Coefficient reduced into [0, p). p must be prime and <= 2^31.
std::int64_t oracleCoefficientMod(const Graph& g, const std::set<Edge>& excluded,
                                  const ExponentVector& m, std::int64_t p,
                                  const ExpandOptions& opts = {});

bool isPrime(std::int64_t p);

/// Full symbolic expansions via the Laurent engine; intended for small
/// graphs (|E| <= ~16).
SparsePolynomial fullExpandP(const Graph& g, const std::set<Edge>& excluded);
SparsePolynomial fullExpandQ(const Graph& g, const std::set<Edge>& excluded);

// --- list coloring ---------------------------------------------------------

/// Proper coloring from per-vertex lists, or nullopt. Most-constrained
/// vertex first.
std::optional<std::map<VertexId, int>> solveListColoring(
    const Graph& g, const std::map<VertexId, std::set<int>>& lists);

struct AdversaryOptions {
    unsigned long long maxAssignments = 200'000'000ull;
};

struct AdversaryVerdict {
    bool allColorable = false;
    std::optional<std::map<VertexId, std::set<int>>> failingAssignment;
    unsigned long long assignmentsChecked = 0;
    /// True when the color universe is smaller than the theoretical
    /// adversary bound (|V| * list size), making this a partial check.
    bool universeLimited = false;
};

/// Exhausts all list assignments of the given sizes drawn from a universe of
/// universeSize colors, up to color-permutation symmetry.
AdversaryVerdict adversarialChoosability(const Graph& g,
                                         const std::map<VertexId, int>& listSizes,
                                         int universeSize,
                                         const AdversaryOptions& opts = {});

}  // namespace atcert
