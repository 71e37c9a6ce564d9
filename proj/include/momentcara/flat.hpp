#ifndef MOMENTCARA_FLAT_HPP
#define MOMENTCARA_FLAT_HPP

#include <vector>

#include "momentcara/binomial.hpp"
#include "momentcara/error.hpp"
#include "momentcara/hilbert.hpp"
#include "momentcara/moments.hpp"

namespace momentcara {

// Extension-degree analysis for the grid witness functional of degree 2d:
// its Hankel matrix at degree D must have size binom(n+D, n) at least the
// Caratheodory number C, so the first such D is a hard lower bound on the
// flat-extension degree.  D = 2d always suffices; worst_case marks where it
// is also necessary.
struct FlatReport {
    int n = 0;
    Int d;
    Int cara_lower;  // C = grid closed form, even degree, Rn
    Int required_D;  // smallest D in [d, 2d] with binom(n+D, n) >= C
    bool worst_case = false;
};

inline FlatReport required_extension_degree(int n, const Int& d) {
    if (n < 1 || d < 1) throw Error(errc::invalid_argument, "need n >= 1 and d >= 1");
    FlatReport report;
    report.n = n;
    report.d = d;
    // Closed form directly on big integers; d can be astronomically large.
    report.cara_lower = binom(Int(n) + 2 * d, Int(n)) - Int(n) * binom(Int(n) + d, Int(n)) +
                        binom(Int(n), Int(2));

    // binom(n+D, n) is monotone in D, so the first passing D in [d, 2d] is
    // found by binary search; equivalent to the linear scan, but the
    // d = 10^15 instances stay fast.
    Int lo = d, hi = 2 * d;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (binom(Int(n) + mid, Int(n)) >= report.cara_lower)
            hi = mid;
        else
            lo = mid + 1;
    }
    report.required_D = lo;
    report.worst_case = report.required_D == 2 * d;
    return report;
}

struct WorstCaseRow {
    FlatReport report;
    bool minimal_worst_for_d = false;  // smallest worst-case n in the scanned range
};

inline std::vector<WorstCaseRow> worst_case_table(int n_min, int n_max,
                                                  const Int& d_min, const Int& d_max) {
    if (n_min < 1 || d_min < 1 || n_max < n_min || d_max < d_min)
        throw Error(errc::invalid_argument, "invalid table ranges");
    std::vector<WorstCaseRow> rows;
    for (Int d = d_min; d <= d_max; ++d) {
        int first_worst_n = -1;
        const std::size_t begin = rows.size();
        for (int n = n_min; n <= n_max; ++n) {
            WorstCaseRow row{required_extension_degree(n, d), false};
            if (row.report.worst_case && first_worst_n < 0) first_worst_n = n;
            rows.push_back(std::move(row));
        }
        if (first_worst_n >= 0)
            rows[begin + static_cast<std::size_t>(first_worst_n - n_min)].minimal_worst_for_d =
                true;
    }
    return rows;
}

struct FlatCheckReport {
    int rank_lower = 0;  // rank H_D
    int rank_upper = 0;  // rank H_{D+1}
    bool flat = false;
};

// Flatness test by two exact Hankel ranks; needs moments to degree 2D+2.
inline FlatCheckReport flat_check(const MomentSequence& s, int D) {
    if (D < 0) throw Error(errc::invalid_argument, "D must be >= 0");
    if (s.degree() < 2 * D + 2)
        throw Error(errc::degree_overflow,
                    "flat check at D needs moments to degree 2D+2 = " +
                        std::to_string(2 * D + 2));
    FlatCheckReport report;
    report.rank_lower = hankel(s, D).matrix.rank();
    report.rank_upper = hankel(s, D + 1).matrix.rank();
    report.flat = report.rank_lower == report.rank_upper;
    return report;
}

} // namespace momentcara

#endif // MOMENTCARA_FLAT_HPP
