#include "atcert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace atcert {

std::string capsVariantName(CapsVariant v) {
    switch (v) {
        case CapsVariant::Theorem1: return "theorem1";
        case CapsVariant::Theorem2DoubleStar: return "theorem2_doublestar";
        case CapsVariant::Theorem2TripleStar: return "theorem2_triplestar";
        case CapsVariant::Theorem3: return "theorem3";
        case CapsVariant::Theorem4: return "theorem4";
        case CapsVariant::Custom: return "custom";
    }
    return "custom";
}

CapsVariant capsVariantFromName(const std::string& name) {
    if (name == "theorem1") return CapsVariant::Theorem1;
    if (name == "theorem2_doublestar") return CapsVariant::Theorem2DoubleStar;
    if (name == "theorem2_triplestar") return CapsVariant::Theorem2TripleStar;
    if (name == "theorem3") return CapsVariant::Theorem3;
    if (name == "theorem4") return CapsVariant::Theorem4;
    if (name == "custom") return CapsVariant::Custom;
    throw ValidationError("unknown caps variant '" + name + "'");
}

int DegreeCaps::total() const {
    int t = 0;
    for (const auto& [v, c] : caps) t += c;
    return t;
}

ExponentVector DegreeCaps::asExponentVector() const {
    ExponentVector m;
    for (const auto& [v, c] : caps) m.set(v, c);
    return m;
}

DegreeCaps theorem1Caps(const NearTriangulation& nt) {
    DegreeCaps out;
    out.variant = CapsVariant::Theorem1;
    for (const auto& v : nt.graph().vertices()) {
        if (v == nt.a() || v == nt.b()) out.caps[v] = 0;
        else if (nt.isOuter(v)) out.caps[v] = 2;
        else out.caps[v] = 4;
    }
    return out;
}

DegreeCaps theorem2Caps(const NearTriangulation& nt, const RoleAssignment& roles,
                        bool tripleStar) {
    DegreeCaps out;
    out.variant = tripleStar ? CapsVariant::Theorem2TripleStar
                             : CapsVariant::Theorem2DoubleStar;
    for (const auto& v : nt.graph().vertices()) {
        if (v == nt.a() || v == nt.b()) {
            out.caps[v] = 0;
        } else if (nt.isOuter(v)) {
            out.caps[v] = roles.green.count(v) ? 1 : 2;
        } else {
            out.caps[v] = (tripleStar && roles.red.count(v)) ? 4 : 3;
        }
    }
    return out;
}

DegreeCaps theorem3Caps(const NearTriangulation& nt, const RoleAssignment& roles,
                        bool tripleStar) {
    if (nt.outerLength() != 3) {
        throw ValidationError("theorem 3 caps need an outer triangle");
    }
    DegreeCaps out;
    out.variant = CapsVariant::Theorem3;
    for (const auto& v : nt.graph().vertices()) {
        if (nt.isOuter(v)) out.caps[v] = 0;
        else out.caps[v] = (tripleStar && roles.red.count(v)) ? 4 : 3;
    }
    return out;
}

DegreeCaps theorem4Caps(const Graph& g, const RoleAssignment& roles,
                        bool tripleStar) {
    DegreeCaps out;
    out.variant = CapsVariant::Theorem4;
    for (const auto& v : g.vertices()) {
        out.caps[v] = (tripleStar && roles.red.count(v)) ? 4 : 3;
    }
    return out;
}

DegreeCaps capsFromMonomial(const ExponentVector& m) {
    DegreeCaps out;
    out.variant = CapsVariant::Custom;
    for (const auto& [v, e] : m.entries()) {
        if (e < 0) throw ValidationError("caps require nonnegative exponents");
        out.caps[v] = e;
    }
    return out;
}

ExpandOptions ExpandOptions::fromEnvironment() {
    ExpandOptions opts;
    if (const char* env = std::getenv("ATCERT_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.maxLiveTerms = v;
    }
    return opts;
}

Coeff CoefficientLedger::coefficientOf(const ExponentVector& m) const {
    auto it = entries.find(m);
    return it == entries.end() ? Coeff(0) : it->second;
}

const ExponentVector& CoefficientLedger::leastMonomial() const {
    if (entries.empty()) throw ValidationError("empty ledger has no monomial");
    return entries.begin()->first;
}

std::string CoefficientLedger::bodyText() const {
    std::ostringstream os;
    for (const auto& [m, c] : entries) os << m.render() << ' ' << c << '\n';
    return os.str();
}

std::string CoefficientLedger::exportText() const {
    std::ostringstream os;
    os << "atcert-ledger v1\n";
    os << "graph " << graphFingerprint << '\n';
    os << "caps " << capsVariantName(caps.variant) << '\n';
    os << "excluded";
    for (const auto& e : excludedEdges) os << ' ' << e.render();
    os << '\n';
    os << bodyText();
    return os.str();
}

namespace {

struct OverflowEscape {};

inline void checkedAccumulate(std::int64_t& a, std::int64_t b) {
    if (__builtin_add_overflow(a, b, &a)) throw OverflowEscape{};
    if (a == INT64_MIN) throw OverflowEscape{};
}

inline void checkedAccumulate(Coeff& a, const Coeff& b) { a += b; }

// Factor order: cap-ascending so zero-cap endpoints prune immediately.
std::vector<Edge> orderedFactors(const Graph& g, const DegreeCaps& caps,
                                 const std::set<Edge>& excluded,
                                 const ExpandOptions& opts) {
    for (const auto& e : excluded) {
        if (!g.edges().count(e)) {
            throw ValidationError("excluded edge " + e.render() + " not in graph");
        }
    }
    std::vector<Edge> factors;
    for (const auto& e : g.edges()) {
        if (!excluded.count(e)) factors.push_back(e);
    }
    if (opts.overrideOrder) {
        std::set<Edge> want(factors.begin(), factors.end());
        std::set<Edge> got(opts.overrideOrder->begin(), opts.overrideOrder->end());
        if (want != got) throw ValidationError("override order edge set mismatch");
        return *opts.overrideOrder;
    }
    std::stable_sort(factors.begin(), factors.end(),
                     [&caps](const Edge& x, const Edge& y) {
                         int mx = std::min(caps.capOf(x.u), caps.capOf(x.v));
                         int my = std::min(caps.capOf(y.u), caps.capOf(y.v));
                         if (mx != my) return mx < my;
                         int Mx = std::max(caps.capOf(x.u), caps.capOf(x.v));
                         int My = std::max(caps.capOf(y.u), caps.capOf(y.v));
                         if (Mx != My) return Mx < My;
                         return x < y;
                     });
    return factors;
}

// Packed-key kernel: all exponents live in [0, cap] and the whole vector
// fits one uint64.
template <class C>
std::unordered_map<std::uint64_t, C> packedExpand(
    const std::vector<std::pair<int, int>>& factorIdx,
    const std::vector<int>& caps, int bits, bool zMode,
    const ExpandOptions& opts) {
    const std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    std::uint64_t start = 0;
    if (zMode) {
        for (std::size_t i = 0; i < caps.size(); ++i) {
            start |= static_cast<std::uint64_t>(caps[i]) << (bits * i);
        }
    }
    std::unordered_map<std::uint64_t, C> cur;
    cur.emplace(start, C(1));

    for (const auto& [ui, vi] : factorIdx) {
        std::vector<std::pair<std::uint64_t, C>> snapshot(cur.begin(), cur.end());
        cur.clear();
        auto applyRange = [&](std::size_t lo, std::size_t hi,
                              std::unordered_map<std::uint64_t, C>& out) {
            for (std::size_t i = lo; i < hi; ++i) {
                const auto& [key, c] = snapshot[i];
                for (int side = 0; side < 2; ++side) {
                    const int idx = side == 0 ? ui : vi;
                    const std::uint64_t cap =
                        static_cast<std::uint64_t>(caps[idx]);
                    const std::uint64_t shift = static_cast<std::uint64_t>(bits) * idx;
                    std::uint64_t e = (key >> shift) & mask;
                    std::uint64_t key2;
                    if (zMode) {
                        if (e == 0) continue;  // would go negative: bad term
                        key2 = key - (1ull << shift);
                    } else {
                        if (e >= cap) continue;  // would exceed the cap
                        key2 = key + (1ull << shift);
                    }
                    C delta = side == 0 ? c : C(-c);
                    auto [it, inserted] = out.try_emplace(key2, delta);
                    if (!inserted) {
                        checkedAccumulate(it->second, delta);
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
        };
        const int workers =
            (opts.workers > 1 && snapshot.size() >= 8192) ? opts.workers : 1;
        if (workers == 1) {
            applyRange(0, snapshot.size(), cur);
        } else {
            std::vector<std::unordered_map<std::uint64_t, C>> partial(workers);
            std::vector<std::thread> threads;
            std::size_t chunk = (snapshot.size() + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::size_t lo = std::min(snapshot.size(), w * chunk);
                std::size_t hi = std::min(snapshot.size(), lo + chunk);
                threads.emplace_back(
                    [&, lo, hi, w] { applyRange(lo, hi, partial[w]); });
            }
            for (auto& t : threads) t.join();
            // Exact integer addition is associative and commutative, so the
            // merge order cannot change the canonical result.
            for (auto& part : partial) {
                for (auto& [key, c] : part) {
                    auto [it, inserted] = cur.try_emplace(key, c);
                    if (!inserted) {
                        checkedAccumulate(it->second, c);
                        if (it->second == 0) cur.erase(it);
                    }
                }
            }
        }
        if (cur.size() > opts.maxLiveTerms) {
            throw BudgetExceeded("expansion exceeded live-term guard (" +
                                 std::to_string(opts.maxLiveTerms) + " terms)");
        }
    }
    return cur;
}

// Generic-key fallback for graphs or caps too large to pack.
template <class C>
std::map<std::vector<int>, C> vectorExpand(
    const std::vector<std::pair<int, int>>& factorIdx,
    const std::vector<int>& caps, bool zMode, const ExpandOptions& opts) {
    std::vector<int> start(caps.size(), 0);
    if (zMode) start = caps;
    std::map<std::vector<int>, C> cur;
    cur.emplace(start, C(1));
    for (const auto& [ui, vi] : factorIdx) {
        std::map<std::vector<int>, C> next;
        for (const auto& [key, c] : cur) {
            for (int side = 0; side < 2; ++side) {
                const int idx = side == 0 ? ui : vi;
                std::vector<int> key2 = key;
                if (zMode) {
                    if (key2[idx] == 0) continue;
                    --key2[idx];
                } else {
                    if (key2[idx] >= caps[idx]) continue;
                    ++key2[idx];
                }
                C delta = side == 0 ? c : C(-c);
                auto [it, inserted] = next.try_emplace(std::move(key2), delta);
                if (!inserted) {
                    checkedAccumulate(it->second, delta);
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        cur = std::move(next);
        if (cur.size() > opts.maxLiveTerms) {
            throw BudgetExceeded("expansion exceeded live-term guard (" +
                                 std::to_string(opts.maxLiveTerms) + " terms)");
        }
    }
    return cur;
}

template <class C>
CoefficientLedger expandImpl(const Graph& g, const DegreeCaps& caps,
                             const std::set<Edge>& excluded, bool zMode,
                             const ExpandOptions& opts) {
    std::vector<Edge> factors = orderedFactors(g, caps, excluded, opts);

    const auto& verts = g.vertices();
    std::map<VertexId, int> index;
    std::vector<int> capVec;
    for (const auto& v : verts) {
        index.emplace(v, static_cast<int>(capVec.size()));
        int c = caps.capOf(v);
        if (c < 0) throw ValidationError("negative cap for vertex " + v);
        capVec.push_back(c);
    }
    std::vector<std::pair<int, int>> factorIdx;
    for (const auto& e : factors) factorIdx.emplace_back(index[e.u], index[e.v]);

    int maxCap = 0;
    for (int c : capVec) maxCap = std::max(maxCap, c);
    const int bits =
        std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(maxCap))));
    const bool packed = static_cast<std::size_t>(bits) * capVec.size() <= 64;

    CoefficientLedger ledger;
    ledger.graphFingerprint = g.fingerprint();
    ledger.caps = caps;
    ledger.excludedEdges = excluded;

    auto emit = [&](const ExponentVector& m, Coeff c) {
        ledger.entries.emplace(m, std::move(c));
    };

    if (packed) {
        const std::uint64_t mask = (1ull << bits) - 1;
        auto result = packedExpand<C>(factorIdx, capVec, bits, zMode, opts);
        for (const auto& [key, c] : result) {
            ExponentVector m;
            for (std::size_t i = 0; i < capVec.size(); ++i) {
                int e = static_cast<int>((key >> (bits * i)) & mask);
                if (e != 0) m.set(verts[i], e);
            }
            emit(m, Coeff(c));
        }
    } else {
        auto result = vectorExpand<C>(factorIdx, capVec, zMode, opts);
        for (const auto& [key, c] : result) {
            ExponentVector m;
            for (std::size_t i = 0; i < capVec.size(); ++i) {
                if (key[i] != 0) m.set(verts[i], key[i]);
            }
            emit(m, Coeff(c));
        }
    }
    return ledger;
}

CoefficientLedger expandDispatch(const Graph& g, const DegreeCaps& caps,
                                 const std::set<Edge>& excluded, bool zMode,
                                 const ExpandOptions& opts) {
    try {
        return expandImpl<std::int64_t>(g, caps, excluded, zMode, opts);
    } catch (const OverflowEscape&) {
        // Rare: rerun with arbitrary precision coefficients.
        return expandImpl<Coeff>(g, caps, excluded, zMode, opts);
    }
}

}  // namespace

CoefficientLedger cappedExpandP(const Graph& g, const DegreeCaps& caps,
                                const std::set<Edge>& excluded,
                                const ExpandOptions& opts) {
    return expandDispatch(g, caps, excluded, /*zMode=*/false, opts);
}

CoefficientLedger cappedExpandZ(const Graph& g, const DegreeCaps& caps,
                                const std::set<Edge>& excluded,
                                const ExpandOptions& opts) {
    return expandDispatch(g, caps, excluded, /*zMode=*/true, opts);
}

Coeff oracleCoefficient(const Graph& g, const std::set<Edge>& excluded,
                        const ExponentVector& m, const ExpandOptions& opts) {
    if (!m.isNice()) {
        throw ValidationError("coefficient query requires nonnegative exponents");
    }
    CoefficientLedger ledger = cappedExpandP(g, capsFromMonomial(m), excluded, opts);
    return ledger.coefficientOf(m);
}

bool isPrime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::int64_t oracleCoefficientMod(const Graph& g, const std::set<Edge>& excluded,
                                  const ExponentVector& m, std::int64_t p,
                                  const ExpandOptions& opts) {
    if (p > (std::int64_t{1} << 31) || !isPrime(p)) {
        throw ValidationError(std::to_string(p) + " is not a prime <= 2^31");
    }
    Coeff c = oracleCoefficient(g, excluded, m, opts);
    Coeff r = c % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

SparsePolynomial fullExpandP(const Graph& g, const std::set<Edge>& excluded) {
    SparsePolynomial p = SparsePolynomial::one();
    for (const auto& e : g.edges()) {
        if (excluded.count(e)) continue;
        p = p.timesEdgeFactor(e.u, e.v, FactorMode::Plain);
    }
    return p;
}

SparsePolynomial fullExpandQ(const Graph& g, const std::set<Edge>& excluded) {
    SparsePolynomial p = SparsePolynomial::one();
    for (const auto& e : g.edges()) {
        if (excluded.count(e)) continue;
        p = p.timesEdgeFactor(e.u, e.v, FactorMode::Reciprocal);
    }
    return p;
}

// --- list coloring ---------------------------------------------------------

namespace {

bool colorStep(const Graph& g, const std::map<VertexId, std::set<int>>& lists,
               std::map<VertexId, int>& coloring) {
    // Most-constrained vertex: fewest colors compatible with colored neighbors.
    const VertexId* best = nullptr;
    std::vector<int> bestChoices;
    for (const auto& [v, list] : lists) {
        if (coloring.count(v)) continue;
        std::vector<int> choices;
        for (int c : list) {
            bool ok = true;
            for (const auto& n : g.neighbors(v)) {
                auto it = coloring.find(n);
                if (it != coloring.end() && it->second == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) choices.push_back(c);
        }
        if (!best || choices.size() < bestChoices.size()) {
            best = &v;
            bestChoices = std::move(choices);
        }
    }
    if (!best) return true;  // everything colored
    for (int c : bestChoices) {
        coloring[*best] = c;
        if (colorStep(g, lists, coloring)) return true;
        coloring.erase(*best);
    }
    return false;
}

}  // namespace

std::optional<std::map<VertexId, int>> solveListColoring(
    const Graph& g, const std::map<VertexId, std::set<int>>& lists) {
    for (const auto& v : g.vertices()) {
        if (!lists.count(v)) {
            throw ValidationError("no color list for vertex " + v);
        }
    }
    std::map<VertexId, int> coloring;
    if (colorStep(g, lists, coloring)) return coloring;
    return std::nullopt;
}

namespace {

// Bitmask list-coloring over indexed vertices; colors are bit positions.
bool maskColorable(const std::vector<std::uint32_t>& lists,
                   const std::vector<std::uint32_t>& adj,
                   std::vector<std::uint32_t>& chosen, std::size_t i) {
    if (i == lists.size()) return true;
    std::uint32_t avail = lists[i];
    // Remove colors taken by already-colored neighbors.
    for (std::size_t j = 0; j < i; ++j) {
        if (adj[i] & (1u << j)) avail &= ~chosen[j];
    }
    while (avail) {
        std::uint32_t bit = avail & (~avail + 1);
        chosen[i] = bit;
        if (maskColorable(lists, adj, chosen, i + 1)) return true;
        avail &= ~bit;
    }
    chosen[i] = 0;
    return false;
}

struct AdversaryState {
    const std::vector<std::uint32_t>* adj;
    std::vector<int> sizes;
    int universe;
    unsigned long long budget;
    unsigned long long checked = 0;
    std::vector<std::uint32_t> lists;
    std::optional<std::vector<std::uint32_t>> failing;
};

void enumerateSubsets(int universeBits, int pick, std::uint32_t acc, int from,
                      const std::function<void(std::uint32_t)>& emit) {
    if (pick == 0) {
        emit(acc);
        return;
    }
    for (int c = from; c <= universeBits - pick; ++c) {
        enumerateSubsets(universeBits, pick - 1, acc | (1u << c), c + 1, emit);
    }
}

bool adversaryDfs(AdversaryState& st, std::size_t i, int introduced) {
    if (i == st.lists.size()) {
        if (++st.checked > st.budget) {
            throw BudgetExceeded("choosability adversary budget exceeded");
        }
        std::vector<std::uint32_t> chosen(st.lists.size(), 0);
        if (!maskColorable(st.lists, *st.adj, chosen, 0)) {
            st.failing = st.lists;
            return true;
        }
        return false;
    }
    const int k = st.sizes[i];
    // Choose `oldCount` colors among those already introduced; any new colors
    // must be the next unused ones (canonical under color permutation).
    for (int newCount = 0; newCount <= k; ++newCount) {
        const int oldCount = k - newCount;
        if (oldCount > introduced) continue;
        if (introduced + newCount > st.universe) continue;
        std::uint32_t newMask = 0;
        for (int c = 0; c < newCount; ++c) newMask |= 1u << (introduced + c);
        bool found = false;
        enumerateSubsets(introduced, oldCount, 0, 0, [&](std::uint32_t oldMask) {
            if (found) return;
            st.lists[i] = oldMask | newMask;
            if (adversaryDfs(st, i + 1, introduced + newCount)) found = true;
        });
        if (found) return true;
    }
    st.lists[i] = 0;
    return false;
}

}  // namespace

AdversaryVerdict adversarialChoosability(const Graph& g,
                                         const std::map<VertexId, int>& listSizes,
                                         int universeSize,
                                         const AdversaryOptions& opts) {
    if (universeSize < 1 || universeSize > 30) {
        throw ValidationError("universe size out of supported range");
    }
    const auto& verts = g.vertices();
    if (verts.size() > 31) throw ValidationError("adversary supports at most 31 vertices");
    std::map<VertexId, int> index;
    for (const auto& v : verts) index.emplace(v, static_cast<int>(index.size()));

    AdversaryState st;
    int sizeSum = 0;
    for (const auto& v : verts) {
        auto it = listSizes.find(v);
        if (it == listSizes.end()) throw ValidationError("no list size for vertex " + v);
        if (it->second < 1 || it->second > universeSize) {
            throw ValidationError("list size out of range for vertex " + v);
        }
        st.sizes.push_back(it->second);
        sizeSum += it->second;
    }
    std::vector<std::uint32_t> adj(verts.size(), 0);
    for (const auto& e : g.edges()) {
        adj[index[e.u]] |= 1u << index[e.v];
        adj[index[e.v]] |= 1u << index[e.u];
    }
    st.adj = &adj;
    st.universe = universeSize;
    st.budget = opts.maxAssignments;
    st.lists.assign(verts.size(), 0);

    AdversaryVerdict verdict;
    verdict.universeLimited = universeSize < sizeSum;
    bool foundFailure = adversaryDfs(st, 0, 0);
    verdict.assignmentsChecked = st.checked;
    verdict.allColorable = !foundFailure;
    if (foundFailure) {
        std::map<VertexId, std::set<int>> failing;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::set<int> colors;
            for (int c = 0; c < universeSize; ++c) {
                if ((*st.failing)[i] & (1u << c)) colors.insert(c);
            }
            failing[verts[i]] = colors;
        }
        verdict.failingAssignment = failing;
    }
    return verdict;
}

}  // namespace atcert
