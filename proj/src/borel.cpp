#include "ssi/borel.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace ssi {

bool BorelSet::contains(const Monomial& m) const {
    auto it = std::lower_bound(members.begin(), members.end(), m, canonicalLess);
    return it != members.end() && *it == m;
}

BorelSet makeBorelSet(int arity, int degree, std::vector<Monomial> members) {
    if (arity < 1) throw std::invalid_argument("makeBorelSet: arity must be >= 1");
    if (degree < 0) throw std::invalid_argument("makeBorelSet: degree must be >= 0");
    for (const auto& m : members) {
        if (m.arity() != arity) throw std::invalid_argument("makeBorelSet: arity mismatch");
        if (m.degree() != degree) throw std::invalid_argument("makeBorelSet: mixed degrees");
    }
    std::sort(members.begin(), members.end(), canonicalLess);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return BorelSet{arity, degree, std::move(members)};
}

bool isBorelSet(const BorelSet& b) {
    for (const auto& m : b.members)
        for (int i = 0; i + 1 < b.arity; ++i)
            if (auto up = increasingMove(m, i); up && !b.contains(*up)) return false;
    return true;
}

BorelSet borelClosure(int arity, int degree, const std::vector<Monomial>& seed) {
    BorelSet acc = makeBorelSet(arity, degree, seed);
    std::deque<Monomial> queue(acc.members.begin(), acc.members.end());
    std::vector<Monomial> found = acc.members;
    auto insertNew = [&](const Monomial& m) {
        auto it = std::lower_bound(found.begin(), found.end(), m, canonicalLess);
        if (it != found.end() && *it == m) return false;
        found.insert(it, m);
        return true;
    };
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (int i = 0; i + 1 < arity; ++i)
            if (auto up = increasingMove(m, i); up && insertNew(*up)) queue.push_back(*up);
    }
    return BorelSet{arity, degree, std::move(found)};
}

GrowthVector growthClasses(const BorelSet& b) {
    if (b.degree == 0 && !b.members.empty())
        throw std::invalid_argument("growthClasses: degree-0 sets have no growth classes");
    GrowthVector gv;
    gv.entries.assign(static_cast<size_t>(b.arity), 0);
    for (const auto& m : b.members) ++gv.entries[static_cast<size_t>(m.minVariable())];
    return gv;
}

bool borelSetLess(const BorelSet& a, const BorelSet& b) {
    return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                        b.members.end(), canonicalLess);
}

}  // namespace ssi
