#ifndef MOMENTCARA_WITNESS_HPP
#define MOMENTCARA_WITNESS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "momentcara/error.hpp"
#include "momentcara/hilbert.hpp"
#include "momentcara/moments.hpp"
#include "momentcara/rational_matrix.hpp"

namespace momentcara {

struct WitnessOptions {
    std::size_t max_grid_points = 20000;
};

// Boundary moment functional supported on an integer grid, together with the
// exact rank of its atom-evaluation matrix.  The rank is the Caratheodory
// number of the functional and must reproduce the closed form.
struct GridWitness {
    int n = 0;
    int d = 0;
    Parity parity = Parity::Even;
    Domain domain = Domain::Rn;
    int degree = 0;  // 2d or 2d+1
    std::vector<std::vector<Rat>> grid;
    AtomicMeasure measure;   // unit weight per grid point
    MomentSequence sequence; // moments of the measure at `degree`
    Int closed_form;
    Int certified_cara;      // exact evaluation-matrix rank
    bool certified = false;  // rank equals closed form
};

inline std::vector<std::vector<Rat>> grid_points(int n, int d, Domain domain) {
    const int lo = domain == Domain::Rn ? 1 : 0;
    std::vector<std::vector<Rat>> points;
    std::vector<int> odo(n, lo);
    while (true) {
        std::vector<Rat> p;
        p.reserve(n);
        for (int c : odo) p.emplace_back(c);
        points.push_back(std::move(p));
        int i = n - 1;
        while (i >= 0 && odo[i] == d) odo[i--] = lo;
        if (i < 0) break;
        ++odo[i];
    }
    return points;
}

inline GridWitness build_grid_witness(int n, int d, Parity parity, Domain domain,
                                      const WitnessOptions& options = {}) {
    if (n < 1 || d < 1) throw Error(errc::invalid_argument, "need n >= 1 and d >= 1");
    const int side = domain == Domain::Rn ? d : d + 1;
    Int size = 1;
    for (int i = 0; i < n; ++i) size *= side;
    if (size > Int(static_cast<unsigned long>(options.max_grid_points)))
        throw Error(errc::grid_cap, "grid has " + size.get_str() + " points, cap is " +
                                        std::to_string(options.max_grid_points));

    GridWitness w;
    w.n = n;
    w.d = d;
    w.parity = parity;
    w.domain = domain;
    w.degree = 2 * d + (parity == Parity::Odd ? 1 : 0);
    w.grid = grid_points(n, d, domain);
    w.measure.n = n;
    for (const auto& p : w.grid) w.measure.atoms.push_back({p, Rat(1)});
    w.sequence = atomic_moments(w.measure, n, w.degree);
    w.closed_form = grid_cara_closed_form(n, d, parity, domain);
    w.certified_cara = evaluation_matrix(w.grid, n, w.degree).rank();
    w.certified = w.certified_cara == w.closed_form;
    return w;
}

// dim lin {s_A(x_i)}: exact rank of the atom-evaluation matrix.  Equals the
// Caratheodory number of the induced functional when the support is the full
// zero set of a nonnegative certificate with L(certificate) = 0; for other
// measures it is only a lower bound on nothing more than the span dimension.
inline Int boundary_cara(const AtomicMeasure& measure, int n, int degree) {
    std::vector<std::vector<Rat>> points;
    points.reserve(measure.atoms.size());
    for (const auto& atom : measure.atoms) points.push_back(atom.point);
    return Int(evaluation_matrix(points, n, degree).rank());
}

// Vanishing certificate of the grid: per coordinate the univariate factor
// with roots 1..d (Rn) or 0..d (cube); the composite sum of squares is
// nonnegative everywhere and zero exactly on the grid.
struct Certificate {
    int n = 0;
    int d = 0;
    Domain domain = Domain::Rn;
    // factors[i]: ascending coefficients of the factor in coordinate i.
    // All coordinates share the same univariate polynomial.
    std::vector<std::vector<Rat>> factors;

    int factor_degree() const { return static_cast<int>(factors.at(0).size()) - 1; }
    int composite_degree() const { return 2 * factor_degree(); }

    // Sum over i of factor_i(x_i)^2 as a multivariate coefficient map.
    PolyMap composite() const {
        const std::vector<Rat>& f = factors.at(0);
        const int deg = factor_degree();
        std::vector<Rat> square(2 * deg + 1, Rat(0));
        for (int a = 0; a <= deg; ++a)
            for (int b = 0; b <= deg; ++b) square[a + b] += f[a] * f[b];
        PolyMap p;
        for (int i = 0; i < n; ++i) {
            for (int e = 0; e <= 2 * deg; ++e) {
                if (square[e] == 0) continue;
                MultiIndex alpha(std::vector<int>(n, 0));
                alpha.entries[i] = e;
                p[alpha] += square[e];
            }
        }
        return p;
    }

    Rat evaluate(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != n)
            throw Error(errc::invalid_argument, "point dimension does not match n");
        Rat total(0);
        for (int i = 0; i < n; ++i) {
            Rat v(0);
            for (int e = factor_degree(); e >= 0; --e) v = v * x[i] + factors[i][e];
            total += v * v;
        }
        return total;
    }
};

inline Certificate certificate(int n, int d, Domain domain) {
    if (n < 1 || d < 1) throw Error(errc::invalid_argument, "need n >= 1 and d >= 1");
    // Expand (x - lo)(x - lo - 1)...(x - d) by convolution.
    const int lo = domain == Domain::Rn ? 1 : 0;
    std::vector<Rat> coeffs{Rat(1)};
    for (int root = lo; root <= d; ++root) {
        std::vector<Rat> next(coeffs.size() + 1, Rat(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= Rat(root) * coeffs[i];
        }
        coeffs = std::move(next);
    }
    Certificate c;
    c.n = n;
    c.d = d;
    c.domain = domain;
    c.factors.assign(n, coeffs);
    return c;
}

// Candidate supplier for interpolation-point search; nullopt = exhausted.
using PointStream = std::function<std::optional<std::vector<Rat>>()>;

// Nonnegative integer points in graded-lex order: (0,..,0), (0,..,1), ...
inline PointStream integer_point_stream(int n) {
    struct State {
        int n = 0;
        int weight = 0;
        std::vector<MultiIndex> layer;
        std::size_t pos = 0;
    };
    auto state = std::make_shared<State>();
    state->n = n;
    state->layer = enum_multi_indices(n, 0, DegreeMode::Exactly);
    return [state]() -> std::optional<std::vector<Rat>> {
        if (state->pos >= state->layer.size()) {
            ++state->weight;
            state->layer = enum_multi_indices(state->n, state->weight, DegreeMode::Exactly);
            state->pos = 0;
        }
        const MultiIndex& m = state->layer[state->pos++];
        std::vector<Rat> p;
        p.reserve(state->n);
        for (int e : m.entries) p.emplace_back(e);
        return p;
    };
}

// Greedy interpolation-point search: accept a candidate iff its evaluation
// vector increases the rank, stop at full rank m = dim of the degree-D basis.
// Every functional on that space is then a signed combination of the
// returned point evaluations.
inline std::vector<std::vector<Rat>> interpolation_points(int n, int degree,
                                                          const PointStream& next) {
    const std::size_t target = enum_multi_indices(n, degree).size();
    std::vector<std::vector<Rat>> points;
    // Reduced echelon rows with their pivot columns, pivot coefficient 1.
    std::vector<std::pair<std::size_t, std::vector<Rat>>> echelon;
    while (points.size() < target) {
        std::optional<std::vector<Rat>> candidate = next();
        if (!candidate)
            throw Error(errc::stream_exhausted,
                        "candidate stream exhausted at rank " +
                            std::to_string(points.size()) + " of " + std::to_string(target));
        std::vector<Rat> v = eval_vector(n, degree, *candidate);
        for (const auto& [pivot, row] : echelon) {
            if (v[pivot] == 0) continue;
            const Rat factor = v[pivot];
            for (std::size_t j = pivot; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= factor * row[j];
        }
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == v.size()) continue;  // rank-stagnant candidate
        const Rat lead = v[pivot];
        for (std::size_t j = pivot; j < v.size(); ++j) v[j] /= lead;
        echelon.emplace_back(pivot, std::move(v));
        points.push_back(std::move(*candidate));
    }
    return points;
}

// Caratheodory reduction: move weight along a linear dependence of the atom
// evaluations until some atom vanishes, repeat until the remaining
// evaluations are independent.  Moments are preserved exactly and weights
// stay positive.
inline AtomicMeasure prune(const AtomicMeasure& measure, int n, int degree) {
    for (const auto& atom : measure.atoms)
        if (atom.weight <= 0)
            throw Error(errc::nonpositive_weight, "prune needs strictly positive weights");

    AtomicMeasure current = measure;
    current.n = n;
    while (true) {
        std::vector<std::vector<Rat>> points;
        points.reserve(current.atoms.size());
        for (const auto& atom : current.atoms) points.push_back(atom.point);
        const RationalMatrix evals = evaluation_matrix(points, n, degree);
        const int rank = evals.rank();
        if (static_cast<int>(current.atoms.size()) <= rank) break;

        // Dependence sum_i v_i s_A(x_i) = 0.
        std::optional<std::vector<Rat>> v = evals.transpose().kernel_vector();
        if (!v) throw Error(errc::invalid_argument, "internal: missing kernel vector");
        bool has_positive = false;
        for (const Rat& c : *v) has_positive = has_positive || c > 0;
        if (!has_positive)
            for (Rat& c : *v) c = -c;

        bool first = true;
        Rat step;
        for (std::size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] <= 0) continue;
            const Rat ratio = current.atoms[i].weight / (*v)[i];
            if (first || ratio < step) {
                step = ratio;
                first = false;
            }
        }
        AtomicMeasure next;
        next.n = n;
        for (std::size_t i = 0; i < v->size(); ++i) {
            Rat w = current.atoms[i].weight - step * (*v)[i];
            if (w == 0) continue;  // all atoms hitting zero are dropped
            next.atoms.push_back({current.atoms[i].point, std::move(w)});
        }
        current = std::move(next);
    }
    return current;
}

} // namespace momentcara

#endif // MOMENTCARA_WITNESS_HPP
