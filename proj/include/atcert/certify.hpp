#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atcert/generate.hpp"
#include "atcert/graph.hpp"
#include "atcert/laurent.hpp"
#include "atcert/oracle.hpp"

namespace atcert {

/// A degree-bounded nonvanishing-monomial certificate: the monomial, its
/// exact coefficient in P over the reduced edge set, the caps it satisfies,
/// the red/green role assignment, and the induction transcript that found it.
struct Certificate {
    ExponentVector monomial;
    Coeff coefficient;
    DegreeCaps caps;
    RoleAssignment roles;
    std::set<Edge> excludedEdges;
    std::vector<std::string> transcript;
    std::string graphFingerprint;
};

std::string exportCertificate(const Certificate& cert);
Certificate parseCertificate(const std::string& text);

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct Verdict {
    std::vector<Check> checks;
    bool pass() const;
    std::string render() const;
};

/// Re-validates roles, cap conformance and the coefficient (via an
/// independent oracle recomputation), and reports per-prime status.
Verdict verifyCertificate(const Graph& g, const Certificate& cert,
                          const std::optional<NearTriangulation>& context =
                              std::nullopt,
                          const ExpandOptions& opts = {});

/// Degree-4 certificate (a,b at 0, outer at 2, interior at 4) for P_{G-e},
/// built by the chord-split / peel induction.
Certificate certifyTheorem1(const NearTriangulation& nt,
                            const ExpandOptions& opts = {});

/// Witness for the matching-augmentation lemma: given a term m of u (with v
/// absent from u), returns an exponent vector with nonzero coefficient in
///   u * (t + x_1 + ... + x_k - v) * (x_1 ... x_k) / t
/// whose degree dominates (deg_t m, deg_{x_1} m, ..., deg_{x_k} m, 0).
/// Tries the m*t candidate first and falls back to an n*v witness when it
/// cancels.
ExponentVector lemma1Witness(const SparsePolynomial& u, const ExponentVector& m,
                             const VertexId& tVar,
                             const std::vector<VertexId>& xVars,
                             const VertexId& vVar);

/// One matching with red/green roles plus the two certificates it supports:
/// the double-star one (matching removed, caps 0/1/2/3) and the triple-star
/// one (matching kept, red vertices relaxed to 4).
struct DualCertificates {
    RoleAssignment roles;
    Certificate doubleStar;
    Certificate tripleStar;
    int backtracks = 0;
};

DualCertificates certifyTheorem2(const NearTriangulation& nt,
                                 const ExpandOptions& opts = {});

/// Outer-triangle reduction: requires an outer 3-cycle; both certificates
/// have degree 0 on the whole outer triangle and exclude its edges.
DualCertificates certifyTheorem3(const NearTriangulation& nt,
                                 const ExpandOptions& opts = {});

/// Certificates with all exponents at most 3 (4 on red vertices in the
/// triple-star variant) for graphs built by the v8 / clique-sum generators.
/// The matching search is seeded from per-part results and verified by the
/// oracle.
DualCertificates certifyK5Free(const GeneratedGraph& gg,
                               const ExpandOptions& opts = {});
DualCertificates certifyK5Free(const Graph& g, const ExpandOptions& opts = {});

}  // namespace atcert
