#ifndef MOMENTCARA_HILBERT_HPP
#define MOMENTCARA_HILBERT_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "momentcara/binomial.hpp"
#include "momentcara/error.hpp"
#include "momentcara/rational.hpp"

namespace momentcara {

enum class Parity { Even, Odd };
enum class Domain { Rn, Cube };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
inline const char* to_string(Domain d) { return d == Domain::Rn ? "rn" : "cube"; }

// Hilbert function evaluator for a fixed geometric scenario.  Closed-form
// only: projective space, the unit sphere, a regular-sequence quotient of
// another profile, or an abstract Hilbert polynomial given by coefficients.
// HF(j) = 0 for j < 0 in every case.
class HilbertProfile {
public:
    static HilbertProfile projective_space(int n) {
        if (n < 1) throw Error(errc::invalid_argument, "projective space needs n >= 1");
        return HilbertProfile(ProjectiveSpace{n});
    }

    // Zariski closure of the unit sphere in R^n: HF(j) agrees with the
    // Hilbert polynomial binom(n+j-1, j) + binom(n+j-2, j-1) for all j >= 0.
    static HilbertProfile sphere(int n) {
        if (n < 2) throw Error(errc::invalid_argument, "sphere needs ambient n >= 2");
        return HilbertProfile(Sphere{n});
    }

    // Abstract Hilbert polynomial, coefficients in ascending degree order.
    // Values at nonnegative integers must be integers.
    static HilbertProfile polynomial(std::vector<Rat> coefficients) {
        return HilbertProfile(Polynomial{std::move(coefficients)});
    }

    // Quotient of `base` by a regular sequence of r forms of degree d.
    static HilbertProfile regular_quotient(HilbertProfile base, int r, int d) {
        if (r < 0) throw Error(errc::invalid_argument, "sequence length must be >= 0");
        if (d < 1) throw Error(errc::invalid_argument, "form degree must be >= 1");
        return HilbertProfile(
            RegularQuotient{std::make_shared<HilbertProfile>(std::move(base)), r, d});
    }

    Int operator()(const Int& j) const;

    Int operator()(long long j) const { return (*this)(Int(static_cast<long>(j))); }

    std::string describe() const;

private:
    struct ProjectiveSpace { int n; };
    struct Sphere { int n; };
    struct Polynomial { std::vector<Rat> coefficients; };
    struct RegularQuotient {
        std::shared_ptr<HilbertProfile> base;
        int r;
        int d;
    };
    using Kind = std::variant<ProjectiveSpace, Sphere, Polynomial, RegularQuotient>;

    explicit HilbertProfile(Kind kind) : kind_(std::move(kind)) {}

    Kind kind_;
};

// HF of base/(f_1, ..., f_r) for a regular sequence of degree-d forms:
// alternating binomial sum over shifted evaluations of the base profile,
// with HF(m) = 0 for m < 0 built into the profile.
inline Int hf_regular_quotient(const HilbertProfile& base, int r, int d, const Int& j) {
    if (r < 0) throw Error(errc::invalid_argument, "sequence length must be >= 0");
    if (d < 1) throw Error(errc::invalid_argument, "form degree must be >= 1");
    Int sum = 0;
    for (int i = 0; i <= r; ++i) {
        const Int term = binom(Int(r), Int(i)) * base(j - Int(i) * d);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

inline Int HilbertProfile::operator()(const Int& j) const {
    if (j < 0) return 0;
    if (const auto* p = std::get_if<ProjectiveSpace>(&kind_)) return binom(Int(p->n) + j, Int(p->n));
    if (const auto* s = std::get_if<Sphere>(&kind_))
        return binom(Int(s->n) + j - 1, j) + binom(Int(s->n) + j - 2, j - 1);
    if (const auto* q = std::get_if<RegularQuotient>(&kind_))
        return hf_regular_quotient(*q->base, q->r, q->d, j);
    const auto& poly = std::get<Polynomial>(kind_);
    Rat value(0);
    Rat power(1);
    for (const Rat& c : poly.coefficients) {
        value += c * power;
        power *= Rat(j);
    }
    if (!is_integer(value))
        throw Error(errc::invalid_argument,
                    "Hilbert polynomial takes non-integer value at " + j.get_str());
    return value.get_num();
}

inline std::string HilbertProfile::describe() const {
    if (const auto* p = std::get_if<ProjectiveSpace>(&kind_))
        return "projective-space(" + std::to_string(p->n) + ")";
    if (const auto* s = std::get_if<Sphere>(&kind_))
        return "sphere(" + std::to_string(s->n) + ")";
    if (const auto* q = std::get_if<RegularQuotient>(&kind_))
        return "regular-quotient(" + q->base->describe() + ", r=" + std::to_string(q->r) +
               ", d=" + std::to_string(q->d) + ")";
    return "polynomial";
}

// Caratheodory number of the grid witness: dimension of the span of the
// point evaluations on {1..d}^n (Rn) or {0..d}^n (cube) in degree 2d or
// 2d+1.  Computed as the Hilbert function of the regular-sequence quotient
// cutting out the grid; the forms have degree d for Rn and d+1 for the cube.
// For 2d evaluation degree this expands to the familiar three-term binomial
// formula; the full alternating sum is kept because the truncated formulas
// shed terms that still contribute at small d (Rn, odd, d = 1).
inline Int grid_cara_closed_form(int n, int d, Parity parity, Domain domain) {
    if (n < 1 || d < 1) throw Error(errc::invalid_argument, "need n >= 1 and d >= 1");
    const int form_degree = domain == Domain::Rn ? d : d + 1;
    const Int j = 2 * d + (parity == Parity::Odd ? 1 : 0);
    return hf_regular_quotient(HilbertProfile::projective_space(n), n, form_degree, j);
}

struct BoundReport {
    Int lower;
    Int upper;
    bool regime_violation = false;
    std::string regime_note;
};

// Lower P(2d) - k P(d) + binom(k,2) and upper P(2d) - 1 for a moment
// functional of degree 2d on a k-dimensional variety with Hilbert polynomial
// P.  Both bounds are only guaranteed for sufficiently large d; no effective
// threshold exists, so out-of-regime values are flagged, not suppressed.
inline BoundReport variety_bounds(const HilbertProfile& profile, int k, int d) {
    if (k < 1 || d < 1) throw Error(errc::invalid_argument, "need k >= 1 and d >= 1");
    BoundReport report;
    report.lower = profile(Int(2) * d) - Int(k) * profile(Int(d)) + binom(Int(k), Int(2));
    report.upper = profile(Int(2) * d) - 1;
    report.regime_violation = report.upper < report.lower || report.upper < 0;
    report.regime_note =
        report.regime_violation
            ? "out of regime at d=" + std::to_string(d) +
                  ": bounds are only valid for large enough d and are inconsistent here"
            : "valid for large enough d only; no effective threshold is known";
    return report;
}

// Smooth irreducible curve of degree e, compact real part: d*e .. d*e + 1.
inline BoundReport curve_bounds(int e, int d) {
    if (e < 1 || d < 1) throw Error(errc::invalid_argument, "need e >= 1 and d >= 1");
    BoundReport report;
    report.lower = Int(e) * d;
    report.upper = Int(e) * d + 1;
    report.regime_note = "valid for large enough d only; no effective threshold is known";
    return report;
}

inline Int sphere_hilbert(int n, int j) {
    if (n < 2) throw Error(errc::invalid_argument, "sphere needs ambient n >= 2");
    if (j < 0) throw Error(errc::invalid_argument, "degree must be >= 0");
    return HilbertProfile::sphere(n)(Int(j));
}

// Grid lower bound divided by the full monomial basis dimension, exactly.
// Tends to 1 - n/2^n as d grows and to 1 as n grows.
inline Rat asymptotic_ratio(int n, int d, Parity parity, Domain domain) {
    const Int numerator = grid_cara_closed_form(n, d, parity, domain);
    const Int dim = binom(Int(n) + 2 * d + (parity == Parity::Odd ? 1 : 0), Int(n));
    Rat ratio(numerator, dim);
    ratio.canonicalize();
    return ratio;
}

} // namespace momentcara

#endif // MOMENTCARA_HILBERT_HPP
