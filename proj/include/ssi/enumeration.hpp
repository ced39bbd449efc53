#pragma once

#include <optional>
#include <vector>

#include "ssi/borel.hpp"
#include "ssi/hilbert.hpp"
#include "ssi/ideal.hpp"
#include "ssi/numpoly.hpp"

namespace ssi {

// All Borel sets B of the degree-s monomials in n+1 variables whose growth
// vector equals the growth vector of p in degree s (so |B| = C(n+s,n) - p(s)),
// in canonical order. Requires a nonzero Hilbert polynomial p with deg p < n
// and s >= 1. An empty result means no such Borel set exists; precondition
// violations throw instead.
std::vector<BorelSet> enumerateBorelSets(int n, int s, const NumPoly& p, int threads = 1);

// All saturated strongly stable ideals in n+1 variables with Hilbert
// polynomial p and regularity <= min(maxRegularity, Gotzmann number of p);
// with no bound this is every saturated strongly stable ideal with Hilbert
// polynomial p. Canonically sorted, duplicate-free.
std::vector<StronglyStableIdeal> stronglyStableIdeals(const NumPoly& p, int n,
                                                      std::optional<long long> maxRegularity = {},
                                                      int threads = 1);

}  // namespace ssi
