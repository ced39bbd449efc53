#include "ssi/numpoly.hpp"

#include <stdexcept>
#include <utility>

namespace ssi {

long long toLongLong(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer value too large: " + v.get_str());
    return static_cast<long long>(v.get_si());
}

NumPoly::NumPoly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

NumPoly::NumPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

NumPoly NumPoly::variable() { return NumPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void NumPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat NumPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rat NumPoly::leadingCoeff() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat NumPoly::evaluate(const Int& t0) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

NumPoly NumPoly::shifted(long delta) const {
    // Horner on (t + delta)
    NumPoly linear(std::vector<Rat>{Rat(delta), Rat(1)});
    NumPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * linear + NumPoly(*it);
    return acc;
}

NumPoly NumPoly::operator-() const {
    NumPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NumPoly& NumPoly::operator+=(const NumPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

NumPoly& NumPoly::operator-=(const NumPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

NumPoly operator*(const NumPoly& lhs, const NumPoly& rhs) {
    if (lhs.isZero() || rhs.isZero()) return NumPoly();
    std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return NumPoly(std::move(out));
}

NumPoly operator*(const Rat& c, const NumPoly& p) {
    if (c == 0) return NumPoly();
    NumPoly r(p);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

NumPoly binomialPoly(long shift, long bottom) {
    if (bottom < 0) throw std::invalid_argument("binomialPoly: bottom index must be >= 0");
    NumPoly prod(Rat(1));
    for (long j = 0; j < bottom; ++j) {
        // factor (t + shift - j)
        prod = prod * NumPoly(std::vector<Rat>{Rat(shift - j), Rat(1)});
    }
    Rat inv(1);
    inv /= Rat(factorial(static_cast<unsigned long>(bottom)));
    return inv * prod;
}

NumPoly finiteDifference(const NumPoly& p, int order) {
    if (order < 0) throw std::invalid_argument("finiteDifference: order must be >= 0");
    NumPoly d = p;
    for (int i = 0; i < order; ++i) {
        if (d.isZero()) break;
        d = d - d.shifted(-1);
    }
    return d;
}

}  // namespace ssi
