#include "ssi/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ssi {

StronglyStableIdeal::StronglyStableIdeal(int arity, std::vector<Monomial> minimalGens)
    : arity_(arity), gens_(std::move(minimalGens)) {}

StronglyStableIdeal StronglyStableIdeal::fromGenerators(int arity, std::vector<Monomial> generators) {
    if (arity < 1) throw std::invalid_argument("StronglyStableIdeal: arity must be >= 1");
    for (const auto& g : generators)
        if (g.arity() != arity) throw std::invalid_argument("StronglyStableIdeal: arity mismatch");
    auto mins = minimalGenerators(std::move(generators));
    if (!isStronglyStable(arity, mins))
        throw std::invalid_argument("StronglyStableIdeal: generators are not strongly stable");
    return StronglyStableIdeal(arity, std::move(mins));
}

bool StronglyStableIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool StronglyStableIdeal::isSaturated() const {
    for (const auto& g : gens_)
        if (g.exponent(0) > 0) return false;
    return true;
}

bool operator<(const StronglyStableIdeal& a, const StronglyStableIdeal& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
    return std::lexicographical_compare(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                                        b.gens_.end(), canonicalLess);
}

std::vector<Monomial> minimalGenerators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonicalLess);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> mins;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& m : mins)
            if (m.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) mins.push_back(g);
    }
    return mins;
}

bool isStronglyStable(int arity, const std::vector<Monomial>& gens) {
    auto mins = minimalGenerators(gens);
    auto inIdeal = [&](const Monomial& m) {
        for (const auto& g : mins)
            if (g.divides(m)) return true;
        return false;
    };
    for (const auto& g : mins)
        for (int i = 0; i + 1 < arity; ++i)
            if (auto up = increasingMove(g, i); up && !inIdeal(*up)) return false;
    return true;
}

StronglyStableIdeal saturate(int arity, const std::vector<Monomial>& gens) {
    std::vector<Monomial> stripped;
    stripped.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.arity() != arity) throw std::invalid_argument("saturate: arity mismatch");
        stripped.push_back(g.divideByVariable(0, g.exponent(0)));
    }
    try {
        return StronglyStableIdeal::fromGenerators(arity, std::move(stripped));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("saturate: generators are not strongly stable");
    }
}

StronglyStableIdeal saturate(const StronglyStableIdeal& ideal) {
    std::vector<Monomial> stripped;
    stripped.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        stripped.push_back(g.divideByVariable(0, g.exponent(0)));
    return StronglyStableIdeal::fromGenerators(ideal.arity(), std::move(stripped));
}

int regularity(const StronglyStableIdeal& ideal) {
    int r = 0;
    for (const auto& g : ideal.generators()) r = std::max(r, g.degree());
    return r;
}

BorelSet degreePiece(const StronglyStableIdeal& ideal, int s) {
    if (s < 0) throw std::invalid_argument("degreePiece: degree must be >= 0");
    std::vector<Monomial> members;
    for (const auto& m : allMonomials(ideal.arity(), s))
        if (ideal.contains(m)) members.push_back(m);
    return BorelSet{ideal.arity(), s, std::move(members)};
}

NumPoly hilbertPolynomialOf(const StronglyStableIdeal& ideal) {
    int n = ideal.arity() - 1;
    int m = regularity(ideal);
    if (m == 0 && !ideal.isZeroIdeal()) return NumPoly();  // unit ideal, quotient is 0
    GrowthVector gv = growthClasses(degreePiece(ideal, m));
    NumPoly p = binomialPoly(n, n);
    for (int k = 0; k <= n; ++k) {
        long count = static_cast<long>(gv.entries[static_cast<size_t>(k)]);
        if (count != 0) p -= Rat(count) * binomialPoly(k - m, k);
    }
    return p;
}

Int hilbertFunctionValue(const StronglyStableIdeal& ideal, int d) {
    if (d < 0) throw std::invalid_argument("hilbertFunctionValue: degree must be >= 0");
    int n = ideal.arity() - 1;
    Int total = binomial(Int(n + d), static_cast<unsigned long>(n));
    return total - Int(static_cast<unsigned long>(degreePiece(ideal, d).size()));
}

}  // namespace ssi
