#pragma once

#include <vector>

#include "ssi/borel.hpp"
#include "ssi/monomial.hpp"
#include "ssi/numpoly.hpp"
#include "ssi/rational.hpp"

namespace ssi {

// A strongly stable monomial ideal, held as its minimal generating set in
// canonical order. The factory rejects generator sets that are not strongly
// stable; the empty set is the zero ideal.
class StronglyStableIdeal {
public:
    static StronglyStableIdeal fromGenerators(int arity, std::vector<Monomial> generators);

    int arity() const { return arity_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool isZeroIdeal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;
    // No generator involves x0.
    bool isSaturated() const;

    friend bool operator==(const StronglyStableIdeal& a, const StronglyStableIdeal& b) {
        return a.arity_ == b.arity_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const StronglyStableIdeal& a, const StronglyStableIdeal& b) {
        return !(a == b);
    }
    friend bool operator<(const StronglyStableIdeal& a, const StronglyStableIdeal& b);

private:
    StronglyStableIdeal(int arity, std::vector<Monomial> minimalGens);
    int arity_;
    std::vector<Monomial> gens_;
};

// Drops generators divisible by another generator; sorts canonically.
std::vector<Monomial> minimalGenerators(std::vector<Monomial> gens);

// True iff every admissible increasing move of every minimal generator lands
// inside the ideal generated by the set.
bool isStronglyStable(int arity, const std::vector<Monomial>& gens);

// Saturation with respect to the irrelevant ideal: strip the x0 factor from
// every generator and minimalize. Throws if the saturation is not strongly
// stable.
StronglyStableIdeal saturate(int arity, const std::vector<Monomial>& gens);
StronglyStableIdeal saturate(const StronglyStableIdeal& ideal);

// Castelnuovo-Mumford regularity: the maximal degree of a minimal generator.
int regularity(const StronglyStableIdeal& ideal);

// Monomial basis of the homogeneous piece of degree s.
BorelSet degreePiece(const StronglyStableIdeal& ideal, int s);

// Hilbert polynomial of the quotient by the ideal, computed from the growth
// classes of the degree-m piece (m = regularity):
//   p(t) = C(n+t, n) - sum_k |B^(k)| * C(k+t-m, k).
NumPoly hilbertPolynomialOf(const StronglyStableIdeal& ideal);

// dim of the degree-d piece of the quotient: C(n+d, n) - |I_d|.
Int hilbertFunctionValue(const StronglyStableIdeal& ideal, int d);

}  // namespace ssi
