#pragma once

#include <vector>

#include "ssi/growth_vector.hpp"
#include "ssi/monomial.hpp"

namespace ssi {

// A finite set of monomials of one degree, closed under admissible increasing
// elementary moves. Members are kept in canonical order without duplicates.
struct BorelSet {
    int arity = 1;
    int degree = 0;
    std::vector<Monomial> members;

    std::size_t size() const { return members.size(); }
    bool contains(const Monomial& m) const;
};

// Sorts, deduplicates, and checks degrees/arities; does not check closure.
BorelSet makeBorelSet(int arity, int degree, std::vector<Monomial> members);

// Closure under increasing moves: true iff every admissible e_i^+ of every
// member is again a member.
bool isBorelSet(const BorelSet& b);

// Smallest Borel set containing the seed (BFS over increasing moves).
BorelSet borelClosure(int arity, int degree, const std::vector<Monomial>& seed);

// Class sizes by smallest dividing variable. Requires degree >= 1 unless the
// set is empty.
GrowthVector growthClasses(const BorelSet& b);

// Deterministic total order for lists of Borel sets.
bool borelSetLess(const BorelSet& a, const BorelSet& b);

}  // namespace ssi
