#include "atcert/laurent.hpp"

#include <sstream>

namespace atcert {

ExponentVector::ExponentVector(
    std::initializer_list<std::pair<const VertexId, int>> init) {
    for (const auto& [v, e] : init) {
        if (e != 0) exponents_.emplace(v, e);
    }
}

int ExponentVector::get(const VertexId& v) const {
    auto it = exponents_.find(v);
    return it == exponents_.end() ? 0 : it->second;
}

void ExponentVector::add(const VertexId& v, int delta) {
    if (delta == 0) return;
    auto it = exponents_.find(v);
    if (it == exponents_.end()) {
        exponents_.emplace(v, delta);
    } else {
        it->second += delta;
        if (it->second == 0) exponents_.erase(it);
    }
}

void ExponentVector::set(const VertexId& v, int value) {
    if (value == 0) {
        exponents_.erase(v);
    } else {
        exponents_[v] = value;
    }
}

bool ExponentVector::isNice() const {
    for (const auto& [v, e] : exponents_) {
        if (e < 0) return false;
    }
    return true;
}

bool ExponentVector::dominates(const ExponentVector& other) const {
    // Every component of (this - other) must be >= 0. Walk the union of keys.
    auto a = exponents_.begin();
    auto b = other.exponents_.begin();
    while (a != exponents_.end() || b != other.exponents_.end()) {
        if (b == other.exponents_.end() ||
            (a != exponents_.end() && a->first < b->first)) {
            if (a->second < 0) return false;
            ++a;
        } else if (a == exponents_.end() || b->first < a->first) {
            if (-b->second < 0) return false;
            ++b;
        } else {
            if (a->second - b->second < 0) return false;
            ++a;
            ++b;
        }
    }
    return true;
}

int ExponentVector::totalDegree() const {
    int d = 0;
    for (const auto& [v, e] : exponents_) d += e;
    return d;
}

ExponentVector ExponentVector::plus(const ExponentVector& other) const {
    ExponentVector r = *this;
    for (const auto& [v, e] : other.exponents_) r.add(v, e);
    return r;
}

ExponentVector ExponentVector::minus(const ExponentVector& other) const {
    ExponentVector r = *this;
    for (const auto& [v, e] : other.exponents_) r.add(v, -e);
    return r;
}

std::string ExponentVector::render() const {
    if (exponents_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exponents_) {
        if (!first) os << ' ';
        first = false;
        os << v << '^' << e;
    }
    return os.str();
}

SparsePolynomial SparsePolynomial::one() {
    SparsePolynomial p;
    p.terms_.emplace(ExponentVector{}, Coeff(1));
    return p;
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& m,
                                            const Coeff& c) {
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void SparsePolynomial::addTerm(const ExponentVector& m, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::plus(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.addTerm(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::minus(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.addTerm(m, -c);
    return r;
}

SparsePolynomial SparsePolynomial::times(const SparsePolynomial& other) const {
    SparsePolynomial r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : other.terms_) {
            r.addTerm(m1.plus(m2), c1 * c2);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::timesEdgeFactor(const VertexId& u,
                                                   const VertexId& v,
                                                   FactorMode mode) const {
    if (u == v) throw ValidationError("degenerate edge " + u + "-" + v);
    const int sign = mode == FactorMode::Plain ? 1 : -1;
    SparsePolynomial r;
    for (const auto& [m, c] : terms_) {
        ExponentVector mu = m;
        mu.add(u, sign);
        r.addTerm(mu, c);
        ExponentVector mv = m;
        mv.add(v, sign);
        r.addTerm(mv, -c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::pruneNonNice() const {
    SparsePolynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.isNice()) r.terms_.emplace(m, c);
    }
    return r;
}

bool SparsePolynomial::isGood() const {
    for (const auto& [m, c] : terms_) {
        if (m.isNice()) return true;
    }
    return false;
}

SparsePolynomial SparsePolynomial::niceTerms() const { return pruneNonNice(); }

Coeff SparsePolynomial::coefficientOf(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

std::string SparsePolynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << ' ';
        first = false;
        os << (c < 0 ? "-" : "+") << abs(c);
        for (const auto& [v, e] : m.entries()) {
            os << "·" << v << '^' << e;
        }
    }
    return os.str();
}

std::string SparsePolynomial::ledgerText() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        os << m.render() << ' ' << c << '\n';
    }
    return os.str();
}

}  // namespace atcert
