#pragma once

#include <optional>
#include <vector>

namespace ssi {

// Monomial x0^a0 * x1^a1 * ... * xn^an over the variables x0 < x1 < ... < xn,
// stored as the exponent vector (a0, ..., an). Arity is n+1 and is fixed per
// monomial; operations mixing arities throw.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int arity);
    static Monomial variable(int arity, int index);

    int arity() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    // Smallest / largest index of a variable with positive exponent; -1 for 1.
    int minVariable() const;
    int maxVariable() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    Monomial timesVariable(int i) const;
    Monomial divideByVariable(int i, int power) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> exps_;
};

// Elementary move e_i^+ = x_{i+1}/x_i; admissible when the exponent of x_i is
// positive. Requires 0 <= i < arity-1.
std::optional<Monomial> increasingMove(const Monomial& m, int i);

// Elementary move e_j^- = x_{j-1}/x_j; requires 0 < j < arity.
std::optional<Monomial> decreasingMove(const Monomial& m, int j);

// a <=_B b in the Borel order (b reaches a by decreasing moves), decided by
// suffix-sum dominance: sum_{j>=i} b_j >= sum_{j>=i} a_j for every i.
// Requires equal degree and arity.
bool borelLeq(const Monomial& a, const Monomial& b);

// Canonical storage/printing order: degree first, then descending
// lexicographic on the reversed exponent vector (x_n weighs most). Within one
// degree this is a linear extension of the Borel order with greater elements
// first.
bool canonicalLess(const Monomial& a, const Monomial& b);

// All monomials of the given degree, in canonical order.
std::vector<Monomial> allMonomials(int arity, int degree);

}  // namespace ssi
