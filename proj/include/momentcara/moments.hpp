#ifndef MOMENTCARA_MOMENTS_HPP
#define MOMENTCARA_MOMENTS_HPP

#include <map>
#include <set>
#include <vector>

#include "momentcara/error.hpp"
#include "momentcara/multi_index.hpp"
#include "momentcara/rational.hpp"
#include "momentcara/rational_matrix.hpp"

namespace momentcara {

// Finite weighted sum of Dirac masses.  Weights of any sign are allowed;
// positivity is a property, not a type.
struct AtomicMeasure {
    struct Atom {
        std::vector<Rat> point;
        Rat weight;
    };

    int n = 0;
    std::vector<Atom> atoms;

    bool positive() const {
        for (const Atom& a : atoms)
            if (a.weight <= 0) return false;
        return true;
    }

    void validate() const {
        std::set<std::vector<Rat>> seen;
        for (const Atom& a : atoms) {
            if (static_cast<int>(a.point.size()) != n)
                throw Error(errc::invalid_argument, "atom dimension does not match n");
            if (!seen.insert(a.point).second)
                throw Error(errc::invalid_argument, "atoms must be pairwise distinct");
        }
    }
};

// Polynomial as a sparse coefficient map over multi-indices.
using PolyMap = std::map<MultiIndex, Rat, GradedLexLess>;

// Truncated moment sequence: one exact rational per multi-index of total
// degree <= degree, stored densely over the graded-lex basis.
class MomentSequence {
public:
    MomentSequence() = default;
    MomentSequence(int n, int degree)
        : n_(n), degree_(degree), basis_(enum_multi_indices(n, degree)) {
        values_.assign(basis_.size(), Rat(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].entries] = i;
    }

    int dimension() const { return n_; }
    int degree() const { return degree_; }
    const std::vector<MultiIndex>& basis() const { return basis_; }

    const Rat& operator[](const MultiIndex& alpha) const { return values_[position(alpha)]; }
    Rat& operator[](const MultiIndex& alpha) { return values_[position(alpha)]; }

    const Rat& value(std::size_t i) const { return values_[i]; }
    Rat& value(std::size_t i) { return values_[i]; }

    bool operator==(const MomentSequence& other) const {
        return n_ == other.n_ && degree_ == other.degree_ && values_ == other.values_;
    }

private:
    std::size_t position(const MultiIndex& alpha) const {
        const auto it = index_.find(alpha.entries);
        if (it == index_.end())
            throw Error(errc::degree_overflow,
                        "multi-index " + alpha.to_string() + " outside truncation");
        return it->second;
    }

    int n_ = 0;
    int degree_ = 0;
    std::vector<MultiIndex> basis_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<Rat> values_;
};

// Monomial values x^alpha over the graded-lex basis of degree <= D.
inline std::vector<Rat> eval_vector(int n, int degree, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != n)
        throw Error(errc::invalid_argument, "point dimension does not match n");
    // Power tables per coordinate, then one product per basis element.
    std::vector<std::vector<Rat>> powers(n);
    for (int i = 0; i < n; ++i) {
        powers[i].resize(degree + 1);
        powers[i][0] = 1;
        for (int e = 1; e <= degree; ++e) powers[i][e] = powers[i][e - 1] * x[i];
    }
    const std::vector<MultiIndex> basis = enum_multi_indices(n, degree);
    std::vector<Rat> values;
    values.reserve(basis.size());
    for (const MultiIndex& alpha : basis) {
        Rat v(1);
        for (int i = 0; i < n; ++i)
            if (alpha.entries[i] > 0) v *= powers[i][alpha.entries[i]];
        values.push_back(v);
    }
    return values;
}

// Rows are eval vectors of the given points.
inline RationalMatrix evaluation_matrix(const std::vector<std::vector<Rat>>& points, int n,
                                        int degree) {
    const int cols = static_cast<int>(enum_multi_indices(n, degree).size());
    RationalMatrix m(static_cast<int>(points.size()), cols);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::vector<Rat> row = eval_vector(n, degree, points[i]);
        for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = row[j];
    }
    return m;
}

// s_alpha = sum_i c_i x_i^alpha, exactly.
inline MomentSequence atomic_moments(const AtomicMeasure& measure, int n, int degree) {
    if (measure.n != n && !measure.atoms.empty())
        throw Error(errc::invalid_argument, "measure dimension does not match n");
    MomentSequence s(n, degree);
    for (const AtomicMeasure::Atom& atom : measure.atoms) {
        const std::vector<Rat> row = eval_vector(n, degree, atom.point);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) s.value(j) += atom.weight * row[j];
    }
    return s;
}

// L_s(p) = sum_alpha p_alpha s_alpha.
inline Rat riesz_apply(const MomentSequence& s, const PolyMap& p) {
    Rat total(0);
    for (const auto& [alpha, coeff] : p) {
        if (alpha.degree() > s.degree())
            throw Error(errc::degree_overflow,
                        "polynomial degree exceeds truncation at " + alpha.to_string());
        if (coeff != 0) total += coeff * s[alpha];
    }
    return total;
}

// (M_beta s)_alpha = s_{alpha+beta}; drops the truncation by |beta|.
inline MomentSequence shift(const MomentSequence& s, const MultiIndex& beta) {
    if (beta.dimension() != s.dimension())
        throw Error(errc::invalid_argument, "shift index dimension does not match");
    for (int e : beta.entries)
        if (e < 0) throw Error(errc::invalid_argument, "shift index must be nonnegative");
    if (beta.degree() > s.degree())
        throw Error(errc::degree_overflow, "shift exceeds truncation degree");
    MomentSequence out(s.dimension(), s.degree() - beta.degree());
    for (const MultiIndex& alpha : out.basis()) out[alpha] = s[alpha + beta];
    return out;
}

struct HankelMatrix {
    int sub_degree = 0;
    std::vector<MultiIndex> basis;  // graded-lex, degree <= sub_degree
    RationalMatrix matrix;          // entry (alpha, beta) = s_{alpha+beta}
};

inline HankelMatrix hankel(const MomentSequence& s, int sub_degree) {
    if (sub_degree < 0) throw Error(errc::invalid_argument, "sub-degree must be >= 0");
    if (2 * sub_degree > s.degree())
        throw Error(errc::degree_overflow, "Hankel sub-degree needs moments to 2*d'");
    HankelMatrix h;
    h.sub_degree = sub_degree;
    h.basis = enum_multi_indices(s.dimension(), sub_degree);
    const int m = static_cast<int>(h.basis.size());
    h.matrix = RationalMatrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const Rat& v = s[h.basis[i] + h.basis[j]];
            h.matrix(i, j) = v;
            h.matrix(j, i) = v;
        }
    return h;
}

struct HankelRankReport {
    int rank = 0;
    int atom_count = 0;
    bool independent = false;
};

// rank H_{d'} of the measure's functional versus its atom count; equality
// means the degree-d' evaluations of the atoms are linearly independent.
inline HankelRankReport hankel_rank_analysis(const AtomicMeasure& measure, int n,
                                             int sub_degree) {
    const MomentSequence s = atomic_moments(measure, n, 2 * sub_degree);
    HankelRankReport report;
    report.rank = hankel(s, sub_degree).matrix.rank();
    report.atom_count = static_cast<int>(measure.atoms.size());
    report.independent = report.rank == report.atom_count;
    if (report.rank > report.atom_count)
        throw Error(errc::invalid_argument, "internal: Hankel rank exceeded atom count");
    return report;
}

} // namespace momentcara

#endif // MOMENTCARA_MOMENTS_HPP
