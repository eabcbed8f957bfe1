#pragma once

#include <gmpxx.h>

#include <vector>

#include "lecount/errors.hpp"

namespace lecount {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw IndexError("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Numerator of a rational known to be integral.
inline Int to_integer(const Rat& r) {
    if (r.get_den() != 1)
        throw NonIntegralError("expected integer, got " + r.get_str());
    return r.get_num();
}

}  // namespace lecount
