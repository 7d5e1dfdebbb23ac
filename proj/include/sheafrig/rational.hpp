#pragma once

#include <gmpxx.h>

#include <string>

#include "sheafrig/error.hpp"

namespace sheafrig {

// Exact rational scalar. All core arithmetic is exact; there is no floating
// point anywhere in the library.
using Rat = mpq_class;
using BigInt = mpz_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "p", "-p" and "p/q" with arbitrary-precision components.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw PreconditionError("invalid rational literal: '" + s + "'");
    if (q.get_den() == 0) throw PreconditionError("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace sheafrig
