#pragma once

#include <gmpxx.h>

#include <string>

namespace qsv {

/// Exact arbitrary-precision rational; the coefficient domain of the whole
/// engine.  No floating point is used anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool fits_long(const Rat& r) {
    return is_integer(r) && r.get_num().fits_slong_p();
}

/// Lossless decimal rendering: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace qsv
