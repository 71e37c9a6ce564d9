#ifndef MOMENTCARA_RATIONAL_HPP
#define MOMENTCARA_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "momentcara/error.hpp"

namespace momentcara {

// All certificate arithmetic is exact: arbitrary-precision integers and
// rationals from GMP.  mpq_class keeps values canonical (lowest terms,
// positive denominator) through arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

// ceil(a/b) for integers with b > 0; correct for negative a.
inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Serialized form: "p/q" with q > 0 in lowest terms, or bare "p".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline std::string int_to_string(const Int& n) { return n.get_str(); }

// Parses "p" or "p/q".  Rejects empty strings, zero denominators and any
// character outside an optional leading sign and decimal digits.
inline Rat rat_from_string(const std::string& text) {
    const auto fail = [&] {
        throw Error(errc::parse_error, "invalid rational '" + text + "'");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    const auto digits_ok = [&](std::size_t begin, std::size_t end) {
        if (begin >= end) return false;
        if (text[begin] == '-') ++begin;
        if (begin >= end) return false;
        for (std::size_t i = begin; i < end; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        return true;
    };
    Rat value;
    if (slash == std::string::npos) {
        if (!digits_ok(0, text.size())) fail();
        value = Rat(Int(text, 10));
    } else {
        if (!digits_ok(0, slash) || !digits_ok(slash + 1, text.size())) fail();
        Int num(text.substr(0, slash), 10);
        Int den(text.substr(slash + 1), 10);
        if (den == 0) fail();
        value = Rat(num, den);
        value.canonicalize();
    }
    return value;
}

} // namespace momentcara

#endif // MOMENTCARA_RATIONAL_HPP
