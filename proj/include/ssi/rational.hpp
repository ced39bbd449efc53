#pragma once

#include <gmpxx.h>
#include <string>

namespace ssi {

// Exact arithmetic types used throughout. Floating point is not used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// C(top, k) with the polynomial extension to negative top:
// top*(top-1)*...*(top-k+1) / k!.
inline Int binomial(const Int& top, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
}

inline Int factorial(unsigned long k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline bool isInteger(const Rat& q) { return q.get_den() == 1; }

// Throws if the value does not fit in long long.
long long toLongLong(const Int& v);

inline std::string toString(const Int& v) { return v.get_str(); }
inline std::string toString(const Rat& q) {
    return isInteger(q) ? q.get_num().get_str() : q.get_str();
}

}  // namespace ssi
