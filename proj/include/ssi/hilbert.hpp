#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssi/growth_vector.hpp"
#include "ssi/ideal.hpp"
#include "ssi/numpoly.hpp"

namespace ssi {

// Terms a_1 >= a_2 >= ... >= a_r >= 0 of the unique decomposition
//   p(t) = sum_i C(t + a_i - (i-1), a_i).
// The number of terms r is the Gotzmann number of p.
struct GotzmannDecomposition {
    std::vector<int> terms;

    NumPoly reconstruct() const;
};

// Why the greedy decomposition aborted; `step` is the 1-based index of the
// offending term.
struct GotzmannInvalid {
    Int step;
    std::string reason;
};

using GotzmannResult = std::variant<GotzmannDecomposition, GotzmannInvalid>;

// Greedy decomposition: a_i = deg p_i, p_{i+1} = p_i - C(t + a_i - (i-1), a_i),
// starting from p_1 = p. Succeeds iff some p_{r+1} = 0; any structural
// violation (leading coefficient of p_i not of the form L/a_i! with L a
// positive integer) yields GotzmannInvalid. p = 0 decomposes into zero terms.
// The steps are batched per degree level internally, so the call is cheap on
// every input; throws only when a valid decomposition is too large to list.
GotzmannResult gotzmannDecomposition(const NumPoly& p);

bool isHilbertPolynomial(const NumPoly& p);

// nullopt when p is a Hilbert polynomial; otherwise the failing greedy step.
// Never materializes the term list.
std::optional<GotzmannInvalid> hilbertPolynomialFailure(const NumPoly& p);

// Number of terms of the decomposition; throws on non-Hilbert polynomials.
long long gotzmannNumber(const NumPoly& p);

// Coefficients m_0, ..., m_d (d = deg p) of the decomposition
//   p(t) = sum_k [ C(t+k, k+1) - C(t+k-m_k, k+1) ],
// where m_k = #{ j : a_j >= k }. Requires a nonzero Hilbert polynomial.
struct MacaulayDecomposition {
    std::vector<long long> m;

    NumPoly reconstruct() const;
};

MacaulayDecomposition macaulayDecomposition(const NumPoly& p);

// Growth vector of p in degree s over n+1 variables:
//   g_n = 1,  g_i = C(n+s-i-1, n-i) - D^i p(s) + D^{i+1} p(s)  for i < n.
// Returns nullopt when no Borel set with these class sizes can exist (some
// g_i < 0, or the partial-sum identity
//   sum_{k>=i} g_k = C(n+s-i, n-i) - D^i p(s)
// fails for some i, which happens exactly when deg p >= n).
std::optional<GrowthVector> growthVector(const NumPoly& p, int s, int n);

// The saturated lexicographic ideal with Hilbert polynomial p in n+1
// variables; requires a nonzero Hilbert polynomial and n >= deg p + 1.
StronglyStableIdeal lexIdeal(const NumPoly& p, int n);

}  // namespace ssi
