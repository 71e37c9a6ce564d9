#ifndef MOMENTCARA_SEMIGROUP_HPP
#define MOMENTCARA_SEMIGROUP_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "momentcara/error.hpp"

namespace momentcara {

// Exponent semigroup of the sparse monomial ring R = R[t^{d_1}, ..., t^{d_r}].
// conductor: least c such that every exponent >= c occurs.
// gaps: number of missing exponents (all of them lie below the conductor).
struct SemigroupRing {
    std::vector<int> generators;   // sorted, duplicate-free, gcd 1
    int conductor = 0;
    int gaps = 0;
    std::vector<char> member;      // membership table for 0 .. conductor

    bool contains(int e) const {
        if (e < 0) return false;
        if (e >= static_cast<int>(member.size())) return true;
        return member[e] != 0;
    }

    std::vector<int> exponents_upto(int k) const {
        std::vector<int> out;
        for (int e = 0; e <= k; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    // dim R_{<= d}; equals d + 1 - gaps once d >= conductor.
    int dim_upto(int d) const { return static_cast<int>(exponents_upto(d).size()); }
};

// Brute-force semigroup closure: mark reachable exponents by dynamic
// programming until min(generators) consecutive exponents are marked (from
// there on everything is reachable).  Requires gcd(generators) = 1, else the
// conductor does not exist.
inline SemigroupRing semigroup_invariants(std::vector<int> generators) {
    if (generators.empty())
        throw Error(errc::invalid_argument, "generator list must be nonempty");
    for (int g : generators)
        if (g <= 0) throw Error(errc::invalid_argument, "generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    int g = 0;
    for (int v : generators) g = std::gcd(g, v);
    if (g != 1)
        throw Error(errc::gcd_not_one, "gcd of generators is not 1; conductor undefined");

    const int smallest = generators.front();
    const int largest = generators.back();

    // Scan up to `bound`; report the end of the first run of `smallest`
    // consecutive marked exponents, or -1 if none appeared yet.
    std::vector<char> mark;
    const auto scan = [&](int bound) -> int {
        mark.assign(static_cast<std::size_t>(bound) + 1, 0);
        mark[0] = 1;
        int run = 1;  // current streak of consecutive marks, starting at 0
        for (int e = 1; e <= bound; ++e) {
            for (int gen : generators) {
                if (gen > e) break;
                if (mark[e - gen]) {
                    mark[e] = 1;
                    break;
                }
            }
            if (mark[e]) {
                if (++run >= smallest) return e;
            } else {
                run = 0;
            }
        }
        return -1;
    };

    constexpr long long scan_limit = 1LL << 26;
    long long wanted = static_cast<long long>(smallest) * largest + largest + 1;
    int bound = static_cast<int>(std::min(wanted, scan_limit));
    int stop = scan(bound);
    while (stop < 0) {
        if (bound >= scan_limit)
            throw Error(errc::invalid_argument, "semigroup closure exceeded scan limit");
        bound = static_cast<int>(std::min(2LL * bound, scan_limit));
        stop = scan(bound);
    }

    SemigroupRing ring;
    ring.generators = std::move(generators);
    int last_missing = -1;
    int missing = 0;
    for (int e = 0; e <= stop; ++e) {
        if (!mark[e]) {
            last_missing = e;
            ++missing;
        }
    }
    ring.conductor = last_missing + 1;
    ring.gaps = missing;
    ring.member.assign(mark.begin(), mark.begin() + ring.conductor + 1);
    return ring;
}

} // namespace momentcara

#endif // MOMENTCARA_SEMIGROUP_HPP
