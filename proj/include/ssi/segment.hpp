#pragma once

#include <optional>
#include <vector>

#include "ssi/ideal.hpp"
#include "ssi/monomial.hpp"
#include "ssi/rational.hpp"

namespace ssi {

// Positive integer weight per variable, non-decreasing in the variable index
// (every graded term order refines the Borel order) and primitive. Restricted
// to a single degree, w certifies x^a > x^b whenever w.a > w.b.
struct WeightVector {
    std::vector<Int> weights;
};

// One block asks for every inSet monomial to outweigh every outSet monomial;
// all monomials of a block share one degree, and all blocks share the weight
// vector being sought.
struct SeparationBlock {
    std::vector<Monomial> inSet;
    std::vector<Monomial> outSet;
};

struct SeparationProblem {
    std::vector<SeparationBlock> blocks;
};

struct SeparationResult {
    std::optional<WeightVector> weights;
    long long checkedPairs = 0;  // full pairs verified against the certificate
};

// Exact rational feasibility for
//   w.a >= w.b + 1 for the reduced pairs,  w_{i+1} >= w_i,  w_0 >= 1,
// solved by Fourier-Motzkin elimination. Only Borel-minimal inSet elements
// against Borel-maximal outSet elements are constrained (monotone weights
// respect the Borel order), but any returned certificate is verified against
// every pair of every block before being returned.
SeparationResult findSeparatingWeight(const SeparationProblem& problem);

struct SegmentResult {
    bool segment = false;
    std::optional<WeightVector> weights;
    long long checkedPairs = 0;
};

// Separates the degree-r piece from its complement, r = Gotzmann number of
// the Hilbert polynomial of the ideal.
SegmentResult isHilbSegment(const StronglyStableIdeal& ideal);

// Separates the degree-m piece from its complement, m = regularity.
SegmentResult isRegSegment(const StronglyStableIdeal& ideal);

// Separates, in each generator degree s, the generators of degree s from the
// degree-s monomials outside the ideal; one weight vector for all degrees.
SegmentResult isGenSegment(const StronglyStableIdeal& ideal);

}  // namespace ssi
