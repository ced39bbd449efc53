#pragma once

#include <vector>

#include "ssi/rational.hpp"

namespace ssi {

// Univariate numerical polynomial in t with exact rational coefficients.
// coeffs[k] is the coefficient of t^k; trailing zeros are trimmed, so the
// zero polynomial is the empty coefficient vector and has degree -1.
class NumPoly {
public:
    NumPoly() = default;
    explicit NumPoly(const Rat& constant);
    explicit NumPoly(std::vector<Rat> coeffs);

    static NumPoly variable();  // t

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat leadingCoeff() const;  // 0 for the zero polynomial

    Rat evaluate(const Int& t0) const;
    Rat evaluate(long t0) const { return evaluate(Int(t0)); }

    // p(t + delta)
    NumPoly shifted(long delta) const;

    NumPoly operator-() const;
    NumPoly& operator+=(const NumPoly& rhs);
    NumPoly& operator-=(const NumPoly& rhs);

    friend NumPoly operator+(NumPoly lhs, const NumPoly& rhs) { return lhs += rhs; }
    friend NumPoly operator-(NumPoly lhs, const NumPoly& rhs) { return lhs -= rhs; }
    friend NumPoly operator*(const NumPoly& lhs, const NumPoly& rhs);
    friend NumPoly operator*(const Rat& c, const NumPoly& p);
    friend bool operator==(const NumPoly& lhs, const NumPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const NumPoly& lhs, const NumPoly& rhs) { return !(lhs == rhs); }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// The polynomial t -> C(t + shift, bottom), of degree bottom; bottom >= 0.
NumPoly binomialPoly(long shift, long bottom);

// Delta^order p, where Delta p(t) = p(t) - p(t-1).
NumPoly finiteDifference(const NumPoly& p, int order = 1);

}  // namespace ssi
