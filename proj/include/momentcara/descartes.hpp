#ifndef MOMENTCARA_DESCARTES_HPP
#define MOMENTCARA_DESCARTES_HPP

#include <array>
#include <utility>
#include <vector>

#include "momentcara/error.hpp"
#include "momentcara/rational.hpp"
#include "momentcara/semigroup.hpp"

namespace momentcara {

// Number of sign changes of a sequence after erasing zeros.
inline int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

struct DescartesResult {
    int k = 0;
    int value = 0;
    // sigma over the exponents <= k, in increasing exponent order.
    std::vector<std::pair<int, int>> witness_signs;
};

namespace detail {

// Positive-zero bound Var(sigma) plus negative-zero bound Var(sigma flipped
// at odd exponents) for one assignment; zeros erased by construction of the
// running state (last nonzero value of each sequence).
struct VariationState {
    int last_plus;   // last nonzero sign of the plain sequence
    int last_minus;  // last nonzero sign of the odd-exponent-flipped sequence
};

inline int flip_for_exponent(int sign, int exponent) {
    return (exponent % 2 == 0) ? sign : -sign;
}

} // namespace detail

// D_k: maximum over sign assignments sigma_e in {0,+1,-1} on the exponents
// e <= k, sigma_0 != 0, of Var(sigma) + Var(sigma alternated), i.e. the best
// total of positive and negative simple zeros Descartes' rule permits.
// The search space is 3^|E|; it is walked exactly via memoization on the
// (position, last signs) state, and the witness reported is the
// lexicographically smallest maximizing pattern (-1 < 0 < +1 entrywise).
inline DescartesResult descartes_number(const SemigroupRing& ring, int k) {
    if (k < 0) throw Error(errc::invalid_argument, "degree bound must be >= 0");
    const std::vector<int> exps = ring.exponents_upto(k);
    const int count = static_cast<int>(exps.size());
    if (count > 22)
        throw Error(errc::enumeration_limit,
                    "sign enumeration limited to 22 exponents, got " +
                        std::to_string(count));

    // best[pos][state]: maximal additional variations from position pos on,
    // where state encodes (last_plus, last_minus) in {+1,-1}^2.
    const auto state_index = [](int lp, int lm) {
        return (lp > 0 ? 2 : 0) + (lm > 0 ? 1 : 0);
    };
    std::vector<std::array<int, 4>> best(count + 1);
    best[count] = {0, 0, 0, 0};
    for (int pos = count - 1; pos >= 1; --pos) {
        for (int lp : {-1, +1}) {
            for (int lm : {-1, +1}) {
                int best_here = best[pos + 1][state_index(lp, lm)];  // sigma = 0
                for (int s : {-1, +1}) {
                    const int sf = detail::flip_for_exponent(s, exps[pos]);
                    const int gain = (s != lp) + (sf != lm);
                    const int total =
                        gain + best[pos + 1][state_index(s, sf)];
                    if (total > best_here) best_here = total;
                }
                best[pos][state_index(lp, lm)] = best_here;
            }
        }
    }

    // sigma_0 = +1 and -1 are mirror images with identical totals; the
    // lexicographically smallest witness therefore starts with -1.
    DescartesResult result;
    result.k = k;
    const int start = count > 1 ? best[1][state_index(-1, -1)] : 0;
    result.value = start;

    int lp = -1, lm = -1, remaining = result.value;
    result.witness_signs.emplace_back(exps.empty() ? 0 : exps[0], -1);
    for (int pos = 1; pos < count; ++pos) {
        bool chosen = false;
        for (int s : {-1, 0, +1}) {
            int gain = 0, nlp = lp, nlm = lm;
            if (s != 0) {
                const int sf = detail::flip_for_exponent(s, exps[pos]);
                gain = (s != lp) + (sf != lm);
                nlp = s;
                nlm = sf;
            }
            if (gain + best[pos + 1][state_index(nlp, nlm)] == remaining) {
                result.witness_signs.emplace_back(exps[pos], s);
                remaining -= gain;
                lp = nlp;
                lm = nlm;
                chosen = true;
                break;
            }
        }
        if (!chosen)
            throw Error(errc::invalid_argument, "internal: witness reconstruction failed");
    }
    return result;
}

// Bracket from the rule of signs for the zero count of a nonnegative element
// of R_{<= 2k}: lower k - (c - D_c), upper k - ceil((c - D_c - 1)/2).
inline std::pair<int, int> nonneg_zero_bounds(const SemigroupRing& ring, int k) {
    if (k < ring.conductor)
        throw Error(errc::out_of_regime,
                    "degree bound below conductor " + std::to_string(ring.conductor));
    const int dc = descartes_number(ring, ring.conductor).value;
    const int gap = ring.conductor - dc;
    return {k - gap, k - static_cast<int>(ceil_div(gap - 1, 2))};
}

// Caratheodory bracket for moment functionals on R_{<= 2k}: every functional
// needs at most `upper` atoms, and some functional needs at least `lower`.
inline std::pair<int, int> sparse_cara_bounds(const SemigroupRing& ring, int k) {
    const auto [zeros_lower, zeros_upper] = nonneg_zero_bounds(ring, k);
    return {zeros_lower, zeros_upper + 1};
}

} // namespace momentcara

#endif // MOMENTCARA_DESCARTES_HPP
