#pragma once

#include <gmpxx.h>
#include <string>

namespace schurcat {

// Exact rational scalar. All algebra in this project is over Q.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace schurcat
