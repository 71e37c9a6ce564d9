#ifndef MOMENTCARA_RATIONAL_MATRIX_HPP
#define MOMENTCARA_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "momentcara/error.hpp"
#include "momentcara/rational.hpp"

namespace momentcara {

// Dense matrix of exact rationals.  Rank, kernel and solve run fraction-free
// (Bareiss) over arbitrary-precision integers after clearing denominators
// row-wise, so every reported rank is a certificate, not an estimate.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Rat> apply(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw Error(errc::invalid_argument, "vector length does not match columns");
        std::vector<Rat> y(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    int rank() const;
    // A nonzero v with M v = 0 when rank < cols, else nullopt.  The first
    // non-pivot column (original indexing) carries the value 1.
    std::optional<std::vector<Rat>> kernel_vector() const;
    // Exact x with M x = b; throws singular_system when none exists.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

namespace detail {

struct Echelon {
    int rank = 0;
    // Upper triangular in permuted columns: u[i][j] = 0 for j < min(i, rank).
    std::vector<std::vector<Int>> u;
    // col_perm[j] = original column index sitting at permuted position j.
    std::vector<int> col_perm;
};

// Row-wise denominator clearing; scaling rows by positive constants changes
// neither rank nor kernel nor the solution set of [A|b].
inline std::vector<std::vector<Int>> clear_denominators(const RationalMatrix& m,
                                                        const std::vector<Rat>* rhs) {
    const int extra = rhs ? 1 : 0;
    std::vector<std::vector<Int>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
        rows[i].resize(m.cols() + extra);
        for (int j = 0; j < m.cols(); ++j) {
            Rat scaled = m(i, j) * lcm;
            rows[i][j] = scaled.get_num();
        }
        if (rhs) {
            Rat scaled = (*rhs)[i] * lcm;
            rows[i][m.cols()] = scaled.get_num();
        }
    }
    return rows;
}

// Bareiss fraction-free elimination with full pivoting over the first
// `pivot_cols` columns.  Pivot choice: nonzero entry of smallest magnitude,
// ties broken by lowest row then lowest column position.  Small pivots keep
// the exact-division intermediates from blowing up, and the fixed rule makes
// every run byte-for-byte reproducible.
inline Echelon bareiss(std::vector<std::vector<Int>> m, int pivot_cols) {
    Echelon e;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    e.col_perm.resize(cols);
    for (int j = 0; j < cols; ++j) e.col_perm[j] = j;

    Int prev = 1, t1, absval;
    int r = 0;
    while (r < rows && r < pivot_cols) {
        int pi = -1, pj = -1;
        Int best;
        for (int i = r; i < rows; ++i) {
            for (int j = r; j < pivot_cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_abs(absval.get_mpz_t(), m[i][j].get_mpz_t());
                if (pi < 0 || absval < best) {
                    best = absval;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        if (pi != r) std::swap(m[pi], m[r]);
        if (pj != r) {
            for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][r]);
            std::swap(e.col_perm[pj], e.col_perm[r]);
        }
        const Int& pivot = m[r][r];
        for (int i = r + 1; i < rows; ++i) {
            const bool eliminating = (m[i][r] != 0);
            for (int j = r + 1; j < cols; ++j) {
                mpz_mul(t1.get_mpz_t(), m[i][j].get_mpz_t(), pivot.get_mpz_t());
                if (eliminating && m[r][j] != 0)
                    mpz_submul(t1.get_mpz_t(), m[i][r].get_mpz_t(), m[r][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][r] = 0;
        }
        prev = pivot;
        ++r;
    }
    e.rank = r;
    e.u = std::move(m);
    return e;
}

} // namespace detail

inline int RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return detail::bareiss(detail::clear_denominators(*this, nullptr), cols_).rank;
}

inline std::optional<std::vector<Rat>> RationalMatrix::kernel_vector() const {
    if (cols_ == 0) return std::nullopt;
    detail::Echelon e = rows_ == 0
                            ? detail::Echelon{0, {}, {}}
                            : detail::bareiss(detail::clear_denominators(*this, nullptr), cols_);
    if (e.col_perm.empty()) {
        e.col_perm.resize(cols_);
        for (int j = 0; j < cols_; ++j) e.col_perm[j] = j;
    }
    const int r = e.rank;
    if (r >= cols_) return std::nullopt;

    // First free column in original indexing gets coefficient 1.
    int free_pos = r;
    for (int j = r + 1; j < cols_; ++j)
        if (e.col_perm[j] < e.col_perm[free_pos]) free_pos = j;

    std::vector<Rat> y(cols_, Rat(0));
    y[free_pos] = 1;
    for (int i = r - 1; i >= 0; --i) {
        Rat acc(0);
        for (int j = i + 1; j < cols_; ++j)
            if (y[j] != 0 && e.u[i][j] != 0) acc += Rat(e.u[i][j]) * y[j];
        y[i] = -acc / Rat(e.u[i][i]);
    }
    std::vector<Rat> x(cols_, Rat(0));
    for (int j = 0; j < cols_; ++j) x[e.col_perm[j]] = y[j];
    return x;
}

inline std::vector<Rat> RationalMatrix::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw Error(errc::invalid_argument, "right-hand side length does not match rows");
    if (cols_ == 0) {
        for (const Rat& v : b)
            if (v != 0) throw Error(errc::singular_system, "inconsistent system");
        return {};
    }
    detail::Echelon e =
        rows_ == 0 ? detail::Echelon{0, {}, {}}
                   : detail::bareiss(detail::clear_denominators(*this, &b), cols_);
    if (e.col_perm.empty()) {
        e.col_perm.resize(cols_ + 1);
        for (int j = 0; j <= cols_; ++j) e.col_perm[j] = j;
    }
    const int r = e.rank;
    for (int i = r; i < rows_; ++i)
        if (e.u[i][cols_] != 0)
            throw Error(errc::singular_system, "inconsistent or singular system");

    std::vector<Rat> y(cols_, Rat(0));
    for (int i = r - 1; i >= 0; --i) {
        Rat acc(e.u[i][cols_]);
        for (int j = i + 1; j < cols_; ++j)
            if (y[j] != 0 && e.u[i][j] != 0) acc -= Rat(e.u[i][j]) * y[j];
        y[i] = acc / Rat(e.u[i][i]);
    }
    std::vector<Rat> x(cols_, Rat(0));
    for (int j = 0; j < cols_; ++j) x[e.col_perm[j]] = y[j];
    return x;
}

} // namespace momentcara

#endif // MOMENTCARA_RATIONAL_MATRIX_HPP
