#include "ssi/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ssi {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("Monomial: arity must be >= 1");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("Monomial: exponents must be >= 0");
}

Monomial Monomial::one(int arity) { return Monomial(std::vector<int>(static_cast<size_t>(arity), 0)); }

Monomial Monomial::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("Monomial: variable index out of range");
    std::vector<int> e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(index)] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Monomial::minVariable() const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) return static_cast<int>(i);
    return -1;
}

int Monomial::maxVariable() const {
    for (size_t i = exps_.size(); i-- > 0;)
        if (exps_[i] > 0) return static_cast<int>(i);
    return -1;
}

bool Monomial::divides(const Monomial& other) const {
    if (arity() != other.arity()) throw std::invalid_argument("Monomial::divides: arity mismatch");
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    if (arity() != other.arity()) throw std::invalid_argument("Monomial::times: arity mismatch");
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::timesVariable(int i) const {
    if (i < 0 || i >= arity()) throw std::invalid_argument("Monomial::timesVariable: index out of range");
    std::vector<int> e(exps_);
    ++e[static_cast<size_t>(i)];
    return Monomial(std::move(e));
}

Monomial Monomial::divideByVariable(int i, int power) const {
    if (i < 0 || i >= arity()) throw std::invalid_argument("Monomial::divideByVariable: index out of range");
    if (exps_[static_cast<size_t>(i)] < power)
        throw std::invalid_argument("Monomial::divideByVariable: not divisible");
    std::vector<int> e(exps_);
    e[static_cast<size_t>(i)] -= power;
    return Monomial(std::move(e));
}

std::optional<Monomial> increasingMove(const Monomial& m, int i) {
    if (i < 0 || i >= m.arity() - 1)
        throw std::invalid_argument("increasingMove: index must satisfy 0 <= i < n");
    if (m.exponent(i) == 0) return std::nullopt;
    std::vector<int> e(m.exponents());
    --e[static_cast<size_t>(i)];
    ++e[static_cast<size_t>(i) + 1];
    return Monomial(std::move(e));
}

std::optional<Monomial> decreasingMove(const Monomial& m, int j) {
    if (j <= 0 || j >= m.arity())
        throw std::invalid_argument("decreasingMove: index must satisfy 0 < j <= n");
    if (m.exponent(j) == 0) return std::nullopt;
    std::vector<int> e(m.exponents());
    --e[static_cast<size_t>(j)];
    ++e[static_cast<size_t>(j) - 1];
    return Monomial(std::move(e));
}

bool borelLeq(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("borelLeq: arity mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("borelLeq: degree mismatch");
    int sa = 0, sb = 0;
    for (int i = a.arity() - 1; i >= 0; --i) {
        sa += a.exponent(i);
        sb += b.exponent(i);
        if (sb < sa) return false;
    }
    return true;
}

bool canonicalLess(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // descending lexicographic on (a_n, ..., a_0)
    int na = a.arity(), nb = b.arity();
    for (int i = std::max(na, nb) - 1; i >= 0; --i) {
        int ea = i < na ? a.exponent(i) : 0;
        int eb = i < nb ? b.exponent(i) : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

namespace {
void collectMonomials(int arity, int index, int remaining, std::vector<int>& current,
                      std::vector<Monomial>& out) {
    if (index == arity - 1) {
        current[static_cast<size_t>(index)] = remaining;
        out.push_back(Monomial(current));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current[static_cast<size_t>(index)] = e;
        collectMonomials(arity, index + 1, remaining - e, current, out);
    }
}
}  // namespace

std::vector<Monomial> allMonomials(int arity, int degree) {
    if (arity < 1) throw std::invalid_argument("allMonomials: arity must be >= 1");
    if (degree < 0) throw std::invalid_argument("allMonomials: degree must be >= 0");
    std::vector<Monomial> out;
    std::vector<int> current(static_cast<size_t>(arity), 0);
    collectMonomials(arity, 0, degree, current, out);
    std::sort(out.begin(), out.end(), canonicalLess);
    return out;
}

}  // namespace ssi
