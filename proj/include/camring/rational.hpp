#ifndef CAMRING_RATIONAL_HPP
#define CAMRING_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "camring/errors.hpp"

namespace camring {

/// Exact rational number.  All arithmetic in the library is exact; there is
/// no floating point anywhere.  mpq_class keeps values canonical (lowest
/// terms, positive denominator) under arithmetic.
using Rat = mpq_class;

/// Parses "p" or "p/q" (q > 0 after canonicalization).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw ValidationError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ValidationError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw ValidationError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Serializes as "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_str();
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace camring

#endif
