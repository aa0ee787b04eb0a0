#pragma once

#include <gmpxx.h>

#include <string>

#include "uniprod/errors.hpp"

namespace uniprod {

using Rational = mpq_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational rational_from(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'", 1);
    }
}

}  // namespace uniprod
