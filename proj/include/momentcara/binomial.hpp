#ifndef MOMENTCARA_BINOMIAL_HPP
#define MOMENTCARA_BINOMIAL_HPP

#include "momentcara/rational.hpp"

namespace momentcara {

// C(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n, which is
// exactly the HF(m) = 0 for m < 0 convention the bound formulas rely on.
// Product form with stepwise exact division; n may be huge (only k factors
// are touched), so binom(2e15 + 51, 51) stays cheap.
inline Int binom(const Int& n, const Int& k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int kk = k;
    if (kk > n - kk) kk = n - kk;
    Int result = 1;
    Int factor = n - kk;
    for (Int i = 1; i <= kk; ++i) {
        factor += 1;
        result *= factor;
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), i.get_mpz_t());
    }
    return result;
}

inline Int binom(long long n, long long k) {
    return binom(Int(static_cast<long>(n)), Int(static_cast<long>(k)));
}

} // namespace momentcara

#endif // MOMENTCARA_BINOMIAL_HPP
