#include "ssi/enumeration.hpp"

#include <algorithm>
#include <climits>
#include <future>
#include <set>
#include <stdexcept>
#include <utility>

namespace ssi {

namespace {

BorelSet fullPiece(int arity, int degree) {
    return BorelSet{arity, degree, allMonomials(arity, degree)};
}

// B' lives in n variables; re-read it over x1..xn inside n+1 variables.
BorelSet embedAboveX0(const BorelSet& b) {
    std::vector<Monomial> members;
    members.reserve(b.members.size());
    for (const auto& m : b.members) {
        std::vector<int> e;
        e.reserve(static_cast<size_t>(b.arity) + 1);
        e.push_back(0);
        e.insert(e.end(), m.exponents().begin(), m.exponents().end());
        members.push_back(Monomial(std::move(e)));
    }
    return BorelSet{b.arity + 1, b.degree, std::move(members)};
}

// Fixed-cardinality up-sets of the sub-poset `elems` (canonically sorted, so
// greater elements come first and covers of an element precede it). Emits the
// chosen subsets through `emit`, in a canonical branch order: at each element
// whose covers are all chosen, "include" is explored before "exclude".
class UpSetSearch {
public:
    UpSetSearch(const std::vector<Monomial>& elems, long long target)
        : elems_(elems), target_(target), included_(elems.size(), 0) {
        coverIndices_.resize(elems_.size());
        for (size_t i = 0; i < elems_.size(); ++i) {
            const Monomial& u = elems_[i];
            for (int v = 0; v + 1 < u.arity(); ++v) {
                auto up = increasingMove(u, v);
                if (!up) continue;
                auto it = std::lower_bound(elems_.begin(), elems_.end(), *up, canonicalLess);
                if (it != elems_.end() && *it == *up)
                    coverIndices_[i].push_back(static_cast<size_t>(it - elems_.begin()));
            }
        }
    }

    template <typename Emit>
    void run(Emit emit) {
        if (target_ < 0 || target_ > static_cast<long long>(elems_.size())) return;
        search(0, 0, emit);
    }

private:
    template <typename Emit>
    void search(size_t idx, long long count, Emit& emit) {
        if (count == target_) {
            std::vector<Monomial> chosen;
            chosen.reserve(static_cast<size_t>(target_));
            for (size_t i = 0; i < elems_.size(); ++i)
                if (included_[i]) chosen.push_back(elems_[i]);
            emit(std::move(chosen));
            return;
        }
        if (idx == elems_.size()) return;
        if (count + static_cast<long long>(elems_.size() - idx) < target_) return;

        bool canInclude = true;
        for (size_t c : coverIndices_[idx])
            if (!included_[c]) {
                canInclude = false;
                break;
            }
        if (canInclude) {
            included_[idx] = 1;
            search(idx + 1, count + 1, emit);
            included_[idx] = 0;
        }
        search(idx + 1, count, emit);
    }

    const std::vector<Monomial>& elems_;
    long long target_;
    std::vector<char> included_;
    std::vector<std::vector<size_t>> coverIndices_;
};

// Extends one Borel set B' (already embedded over x1..xn) to all Borel sets
// B = B' u x0*A with |A| = g0. Candidates A live in the monomials of degree
// s-1; A must be a Borel set contained in the pool
//   P(B') = { u : x0 divides u, or x1*u in B' },
// which pins down exactly the u whose product x0*u keeps B closed under
// increasing moves.
void extendByX0(const BorelSet& embedded, int arity, int s, long long g0,
                std::vector<BorelSet>& out) {
    std::vector<Monomial> pool;
    for (const auto& u : allMonomials(arity, s - 1)) {
        if (u.exponent(0) > 0 || embedded.contains(u.timesVariable(1))) pool.push_back(u);
    }
    // Largest up-closed subset of the pool: members whose covers all survive.
    std::vector<Monomial> core;
    auto inCore = [&](const Monomial& m) {
        auto it = std::lower_bound(core.begin(), core.end(), m, canonicalLess);
        return it != core.end() && *it == m;
    };
    for (const auto& u : pool) {
        bool ok = true;
        for (int v = 0; v + 1 < arity && ok; ++v) {
            auto up = increasingMove(u, v);
            if (up && !inCore(*up)) ok = false;
        }
        if (ok) core.push_back(u);  // canonical order is preserved
    }

    UpSetSearch search(core, g0);
    search.run([&](std::vector<Monomial> chosen) {
        std::vector<Monomial> members = embedded.members;
        members.reserve(members.size() + chosen.size());
        for (const auto& a : chosen) members.push_back(a.timesVariable(0));
        out.push_back(makeBorelSet(arity, s, std::move(members)));
    });
}

std::vector<BorelSet> enumerateImpl(int n, int s, const NumPoly& p, int threads) {
    if (p.isZero()) return {fullPiece(n + 1, s)};

    auto gv = growthVector(p, s, n);
    if (!gv) return {};
    long long g0 = gv->entries[0];

    std::vector<BorelSet> subs = enumerateImpl(n - 1, s, finiteDifference(p), 1);
    int arity = n + 1;

    std::vector<BorelSet> out;
    if (threads > 1 && subs.size() > 1) {
        size_t workers = std::min<size_t>(static_cast<size_t>(threads), subs.size());
        std::vector<std::future<std::vector<BorelSet>>> futures;
        for (size_t w = 0; w < workers; ++w) {
            size_t lo = subs.size() * w / workers;
            size_t hi = subs.size() * (w + 1) / workers;
            futures.push_back(std::async(std::launch::async, [&, lo, hi] {
                std::vector<BorelSet> local;
                for (size_t i = lo; i < hi; ++i)
                    extendByX0(embedAboveX0(subs[i]), arity, s, g0, local);
                return local;
            }));
        }
        for (auto& f : futures) {
            auto local = f.get();
            out.insert(out.end(), std::make_move_iterator(local.begin()),
                       std::make_move_iterator(local.end()));
        }
    } else {
        for (const auto& sub : subs) extendByX0(embedAboveX0(sub), arity, s, g0, out);
    }
    std::sort(out.begin(), out.end(), borelSetLess);
    return out;
}

}  // namespace

std::vector<BorelSet> enumerateBorelSets(int n, int s, const NumPoly& p, int threads) {
    if (n < 1) throw std::invalid_argument("enumerateBorelSets: n must be >= 1");
    if (s < 1) throw std::invalid_argument("enumerateBorelSets: degree s must be >= 1");
    if (threads < 1) throw std::invalid_argument("enumerateBorelSets: threads must be >= 1");
    if (p.isZero()) throw std::invalid_argument("enumerateBorelSets: polynomial must be nonzero");
    if (p.degree() >= n)
        throw std::invalid_argument(
            "enumerateBorelSets: need deg p < n; only proper nonzero ideals are enumerated");
    if (!isHilbertPolynomial(p))
        throw std::invalid_argument("enumerateBorelSets: not a Hilbert polynomial");
    return enumerateImpl(n, s, p, threads);
}

std::vector<StronglyStableIdeal> stronglyStableIdeals(const NumPoly& p, int n,
                                                      std::optional<long long> maxRegularity,
                                                      int threads) {
    if (maxRegularity && *maxRegularity < 1)
        throw std::invalid_argument("stronglyStableIdeals: maxRegularity must be >= 1");
    if (n < 1) throw std::invalid_argument("stronglyStableIdeals: n must be >= 1");
    if (p.isZero()) throw std::invalid_argument("stronglyStableIdeals: polynomial must be nonzero");
    if (p.degree() >= n)
        throw std::invalid_argument(
            "stronglyStableIdeals: need deg p < n; only proper nonzero ideals are enumerated");

    long long r = gotzmannNumber(p);  // throws on non-Hilbert input
    long long s64 = maxRegularity ? std::min(*maxRegularity, r) : r;
    if (s64 > INT_MAX) throw std::overflow_error("stronglyStableIdeals: Gotzmann degree too large");
    int s = static_cast<int>(s64);

    std::set<StronglyStableIdeal> ideals;
    for (const auto& b : enumerateBorelSets(n, s, p, threads))
        ideals.insert(saturate(b.arity, b.members));
    return std::vector<StronglyStableIdeal>(ideals.begin(), ideals.end());
}

}  // namespace ssi
