#pragma once

#include <vector>

namespace ssi {

// Entry i is the size of the i-th growth class: the number of monomials of a
// Borel set whose smallest dividing variable is x_i.
struct GrowthVector {
    std::vector<long long> entries;

    friend bool operator==(const GrowthVector& a, const GrowthVector& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const GrowthVector& a, const GrowthVector& b) { return !(a == b); }
};

}  // namespace ssi
