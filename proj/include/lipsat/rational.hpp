#pragma once

#include <gmpxx.h>

#include <string>

namespace lipsat {

/// Exact rational coefficients. GMP keeps values canonical (lowest terms,
/// positive denominator), which is what every certificate relies on.
using Rat = mpq_class;

inline std::string num_string(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rat& r) { return r.get_den().get_str(); }

// mpq_class(n, d) does not reduce to lowest terms by itself
inline Rat rat_of(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return num_string(r);
    return num_string(r) + "/" + den_string(r);
}

}  // namespace lipsat
