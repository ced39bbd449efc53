#include "ssi/hilbert.hpp"

#include <climits>
#include <stdexcept>
#include <utility>

namespace ssi {

namespace {

// C(t + shift, bottom) with an arbitrary-precision shift.
NumPoly binomialPolyBig(const Int& shift, long bottom) {
    NumPoly prod(Rat(1));
    for (long j = 0; j < bottom; ++j)
        prod = prod * NumPoly(std::vector<Rat>{Rat(shift - j), Rat(1)});
    Rat inv(1);
    inv /= Rat(factorial(static_cast<unsigned long>(bottom)));
    return inv * prod;
}

// The greedy decomposition processed one degree level at a time. At a level of
// degree a with leading coefficient L/a! (L a positive integer) the greedy
// subtracts exactly L consecutive terms C(t + a - (i-1), a), which telescope to
//   C(t + a - i0 + 2, a+1) - C(t + a - i0 - L + 2, a+1)
// for the 1-based entry index i0 of the first one. Batching the levels keeps
// the run cost O(deg^2) polynomial operations on every input, valid or not,
// even when the term counts are astronomically large.
struct LevelCounts {
    std::vector<std::pair<int, Int>> perLevel;  // (degree, count), degrees strictly decreasing
    Int total = 0;
    bool valid = false;
    Int failStep = 0;     // 1-based greedy step that aborted, when invalid
    std::string failure;  // reason, when invalid
};

LevelCounts decomposeByLevels(const NumPoly& p) {
    LevelCounts out;
    NumPoly rest = p;
    while (!rest.isZero()) {
        int a = rest.degree();
        Rat lead = rest.leadingCoeff();
        Rat scaled = lead * Rat(factorial(static_cast<unsigned long>(a)));
        if (scaled <= 0) {
            out.failStep = out.total + 1;
            out.failure = "remainder of degree " + std::to_string(a) +
                          " has non-positive leading coefficient " + toString(lead);
            return out;
        }
        if (!isInteger(scaled)) {
            out.failStep = out.total + 1;
            out.failure = "leading coefficient " + toString(lead) + " of the degree-" +
                          std::to_string(a) + " remainder is not of the form L/" +
                          std::to_string(a) + "! with L a positive integer";
            return out;
        }
        Int count = scaled.get_num();
        Int firstIndex = out.total + 1;  // i0
        rest -= binomialPolyBig(Int(a) - firstIndex + 2, a + 1) -
                binomialPolyBig(Int(a) - firstIndex - count + 2, a + 1);
        if (!rest.isZero() && rest.degree() >= a) {
            out.failStep = out.total + 1;
            out.failure = "remainder degree did not decrease";  // unreachable
            return out;
        }
        out.perLevel.emplace_back(a, count);
        out.total += count;
    }
    out.valid = true;
    return out;
}

constexpr long kMaxMaterializedTerms = 1 << 22;

}  // namespace

NumPoly GotzmannDecomposition::reconstruct() const {
    NumPoly p;
    for (size_t i = 0; i < terms.size(); ++i)
        p += binomialPoly(terms[i] - static_cast<long>(i), terms[i]);
    return p;
}

NumPoly MacaulayDecomposition::reconstruct() const {
    NumPoly p;
    for (size_t k = 0; k < m.size(); ++k) {
        long kk = static_cast<long>(k);
        p += binomialPoly(kk, kk + 1);
        p -= binomialPoly(kk - static_cast<long>(m[k]), kk + 1);
    }
    return p;
}

GotzmannResult gotzmannDecomposition(const NumPoly& p) {
    LevelCounts levels = decomposeByLevels(p);
    if (!levels.valid) return GotzmannInvalid{levels.failStep, levels.failure};
    if (levels.total > kMaxMaterializedTerms)
        throw std::overflow_error("gotzmannDecomposition: the decomposition has " +
                                  toString(levels.total) + " terms; too large to list");
    GotzmannDecomposition dec;
    dec.terms.reserve(static_cast<size_t>(levels.total.get_si()));
    for (const auto& [degree, count] : levels.perLevel)
        for (Int i = 0; i < count; ++i) dec.terms.push_back(degree);
    return dec;
}

bool isHilbertPolynomial(const NumPoly& p) { return decomposeByLevels(p).valid; }

std::optional<GotzmannInvalid> hilbertPolynomialFailure(const NumPoly& p) {
    LevelCounts levels = decomposeByLevels(p);
    if (levels.valid) return std::nullopt;
    return GotzmannInvalid{levels.failStep, levels.failure};
}

long long gotzmannNumber(const NumPoly& p) {
    LevelCounts levels = decomposeByLevels(p);
    if (!levels.valid)
        throw std::invalid_argument("gotzmannNumber: not a Hilbert polynomial (" +
                                    levels.failure + ")");
    return toLongLong(levels.total);
}

MacaulayDecomposition macaulayDecomposition(const NumPoly& p) {
    if (p.isZero())
        throw std::invalid_argument("macaulayDecomposition: polynomial must be nonzero");
    LevelCounts levels = decomposeByLevels(p);
    if (!levels.valid)
        throw std::invalid_argument("macaulayDecomposition: not a Hilbert polynomial (" +
                                    levels.failure + ")");
    int d = p.degree();
    MacaulayDecomposition mac;
    mac.m.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Int count = 0;  // m_k = #{ a_j >= k }
        for (const auto& [degree, levelCount] : levels.perLevel)
            if (degree >= k) count += levelCount;
        mac.m.push_back(toLongLong(count));
    }
    return mac;
}

std::optional<GrowthVector> growthVector(const NumPoly& p, int s, int n) {
    if (s < 1) throw std::invalid_argument("growthVector: degree s must be >= 1");
    if (n < 1) throw std::invalid_argument("growthVector: n must be >= 1");

    // D^i p(s) for i = 0..n+1
    std::vector<Rat> diff(static_cast<size_t>(n) + 2);
    NumPoly d = p;
    for (int i = 0; i <= n + 1; ++i) {
        diff[static_cast<size_t>(i)] = d.evaluate(static_cast<long>(s));
        d = finiteDifference(d);
    }
    for (const auto& v : diff)
        if (!isInteger(v))
            throw std::invalid_argument("growthVector: polynomial is not integer-valued");

    GrowthVector gv;
    gv.entries.assign(static_cast<size_t>(n) + 1, 0);
    gv.entries[static_cast<size_t>(n)] = 1;
    for (int i = 0; i < n; ++i) {
        Int value = binomial(Int(n + s - i - 1), static_cast<unsigned long>(n - i)) -
                    diff[static_cast<size_t>(i)].get_num() +
                    diff[static_cast<size_t>(i) + 1].get_num();
        if (value < 0) return std::nullopt;
        gv.entries[static_cast<size_t>(i)] = toLongLong(value);
    }
    // Partial-sum cross-check; fails exactly when deg p >= n.
    Int suffix = 0;
    for (int i = n; i >= 0; --i) {
        suffix += Int(static_cast<long>(gv.entries[static_cast<size_t>(i)]));
        Int expected = binomial(Int(n + s - i), static_cast<unsigned long>(n - i)) -
                       diff[static_cast<size_t>(i)].get_num();
        if (suffix != expected) return std::nullopt;
    }
    return gv;
}

StronglyStableIdeal lexIdeal(const NumPoly& p, int n) {
    if (p.isZero()) throw std::invalid_argument("lexIdeal: polynomial must be nonzero");
    int d = p.degree();
    if (n < d + 1)
        throw std::invalid_argument(
            "lexIdeal: need n >= deg p + 1 (no saturated ideal realizes p in this ring)");
    auto mac = macaulayDecomposition(p);

    // b_d = m_d, b_k = m_k - m_{k+1}
    std::vector<long long> b(static_cast<size_t>(d) + 1);
    b[static_cast<size_t>(d)] = mac.m[static_cast<size_t>(d)];
    for (int k = 0; k < d; ++k)
        b[static_cast<size_t>(k)] = mac.m[static_cast<size_t>(k)] - mac.m[static_cast<size_t>(k) + 1];

    int arity = n + 1;
    std::vector<Monomial> gens;
    for (int i = n; i >= d + 2; --i) gens.push_back(Monomial::variable(arity, i));

    // x_{d+1}^{b_d+1}, then x_{d+1}^{b_d} x_d^{b_{d-1}} ... x_{k+1}^{b_k + 1}
    // for k = d-1 .. 1, and finally the full product ending in x_1^{b_0}.
    auto powerTail = [&](int lowestIndex, bool bumpLowest) {
        std::vector<int> e(static_cast<size_t>(arity), 0);
        for (int k = d; k >= lowestIndex - 1; --k) {
            long long exp = b[static_cast<size_t>(k)];
            if (bumpLowest && k == lowestIndex - 1) ++exp;
            if (exp > INT_MAX) throw std::overflow_error("lexIdeal: generator exponent too large");
            e[static_cast<size_t>(k) + 1] = static_cast<int>(exp);
        }
        return Monomial(std::move(e));
    };
    for (int k = d + 1; k >= 2; --k) gens.push_back(powerTail(k, true));
    gens.push_back(powerTail(1, false));

    return StronglyStableIdeal::fromGenerators(arity, std::move(gens));
}

}  // namespace ssi
