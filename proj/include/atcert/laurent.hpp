#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "atcert/common.hpp"

namespace atcert {

/// Multidegree of one Laurent monomial: vertex id -> signed exponent.
/// Canonical sparse form: zero exponents are never stored, so map equality
/// is monomial equality.
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<std::pair<const VertexId, int>> init);

    int get(const VertexId& v) const;
    void add(const VertexId& v, int delta);
    void set(const VertexId& v, int value);

    /// True iff no exponent is negative.
    bool isNice() const;

    /// The "at least as nice" partial order: every component of
    /// (*this - other) is >= 0.
    bool dominates(const ExponentVector& other) const;

    int totalDegree() const;
    bool empty() const { return exponents_.empty(); }

    ExponentVector plus(const ExponentVector& other) const;
    ExponentVector minus(const ExponentVector& other) const;

    const std::map<VertexId, int>& entries() const { return exponents_; }

    bool operator==(const ExponentVector& other) const = default;
    bool operator<(const ExponentVector& other) const {
        return exponents_ < other.exponents_;
    }

    /// "a^2 c^-1"; the constant monomial renders as "1".
    std::string render() const;

private:
    std::map<VertexId, int> exponents_;
};

enum class FactorMode {
    Plain,       // multiply by (u - v)
    Reciprocal,  // multiply by (u^-1 - v^-1)
};

/// Exact sparse multivariate Laurent polynomial. Terms with zero coefficient
/// are never stored; the zero polynomial has no terms and is bad by
/// definition.
class SparsePolynomial {
public:
    SparsePolynomial() = default;

    static SparsePolynomial one();
    static SparsePolynomial monomial(const ExponentVector& m, const Coeff& c);

    void addTerm(const ExponentVector& m, const Coeff& c);

    SparsePolynomial plus(const SparsePolynomial& other) const;
    SparsePolynomial minus(const SparsePolynomial& other) const;
    SparsePolynomial times(const SparsePolynomial& other) const;

    /// Multiplies by one edge factor. u and v must differ; the canonical
    /// orientation puts the smaller vertex id first, so callers pass
    /// endpoints in ascending order for deterministic signs.
    SparsePolynomial timesEdgeFactor(const VertexId& u, const VertexId& v,
                                     FactorMode mode) const;

    /// Drops every term with a negative exponent. Sound only in monotone
    /// contexts where all remaining multipliers can only lower exponents.
    SparsePolynomial pruneNonNice() const;

    /// True iff some term's exponent vector is nice.
    bool isGood() const;

    /// The sub-polynomial of nice terms.
    SparsePolynomial niceTerms() const;

    Coeff coefficientOf(const ExponentVector& m) const;

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const std::map<ExponentVector, Coeff>& terms() const { return terms_; }

    bool operator==(const SparsePolynomial& other) const = default;

    /// Debug rendering: "+1·c^2 -1·a^-1·c" style, terms in canonical order.
    std::string render() const;

    /// One term per line, "<monomial> <coefficient>", canonical order.
    std::string ledgerText() const;

private:
    std::map<ExponentVector, Coeff> terms_;
};

/// niceness_ge(m1, m2): componentwise domination of m1 over m2.
inline bool nicenessGe(const ExponentVector& m1, const ExponentVector& m2) {
    return m1.dominates(m2);
}

}  // namespace atcert
