#ifndef MOMENTCARA_RECOVER_HPP
#define MOMENTCARA_RECOVER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "momentcara/error.hpp"

namespace momentcara {

// The one floating-point corner of the library: numeric recovery of atom
// positions and weights from a 1-D sequence known to be k-atomic.  The
// positions are the generalized eigenvalues of (H(M_1 s), H(s)); they are
// computed through the Prony route: solve the k x k Hankel system for the
// characteristic polynomial, take its k complex roots, then solve a
// Vandermonde system for the weights.

struct RecoveryOptions {
    double condition_limit = 1e12;  // reject the Hankel solve beyond this
    double root_tol = 1e-10;        // relative accuracy of the root iteration
    int max_root_iterations = 500;
};

struct RecoveryResult {
    std::vector<std::complex<double>> atoms;
    std::vector<std::complex<double>> weights;
    double residual = 0.0;            // max_j |sum_i c_i z_i^j - s_j|
    double condition_estimate = 0.0;  // 1-norm condition of the Hankel block
};

namespace detail {

// Dense LU solve with partial pivoting; returns false on exact zero pivot.
template <typename Scalar>
bool lu_solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar>& b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
        if (std::abs(a[pivot][col]) == 0.0) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (int i = col + 1; i < n; ++i) {
            const Scalar factor = a[i][col] / a[col][col];
            if (factor == Scalar(0)) continue;
            for (int j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
            b[i] -= factor * b[col];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        Scalar acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a[i][j] * b[j];
        b[i] = acc / a[i][i];
    }
    return true;
}

// kappa_1 = ||A||_1 * ||A^{-1}||_1 via explicit inverse; k is desk-scale.
inline double condition_1norm(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    double norm_a = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(a[i][j]);
        norm_a = std::max(norm_a, col);
    }
    double norm_inv = 0.0;
    for (int j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        if (!lu_solve(a, e)) return std::numeric_limits<double>::infinity();
        double col = 0.0;
        for (double v : e) col += std::abs(v);
        norm_inv = std::max(norm_inv, col);
    }
    return norm_a * norm_inv;
}

// All complex roots of the monic polynomial z^k + c_{k-1} z^{k-1} + ... + c_0
// by simultaneous Weierstrass (Durand-Kerner) iteration.
inline std::vector<std::complex<double>> monic_roots(const std::vector<double>& coeffs,
                                                     double tol, int max_iterations) {
    using C = std::complex<double>;
    const int k = static_cast<int>(coeffs.size());
    if (k == 0) return {};
    if (k == 1) return {C(-coeffs[0], 0.0)};

    const auto eval = [&](C z) {
        C value(1.0, 0.0);
        for (int i = k - 1; i >= 0; --i) value = value * z + C(coeffs[i], 0.0);
        return value;
    };

    double radius = 1.0;
    for (double c : coeffs) radius = std::max(radius, 1.0 + std::abs(c));
    std::vector<C> z(k);
    const C seed(0.4, 0.9);  // off-axis seed avoids symmetric stalls
    C power = seed;
    for (int i = 0; i < k; ++i) {
        z[i] = power * (radius / std::abs(power));
        power *= seed;
    }

    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        double worst = 0.0;
        for (int i = 0; i < k; ++i) {
            C denom(1.0, 0.0);
            for (int j = 0; j < k; ++j)
                if (j != i) denom *= z[i] - z[j];
            const C delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[i])));
        }
        if (worst <= tol) return z;
    }
    throw Error(errc::no_convergence, "root iteration did not reach tolerance");
}

} // namespace detail

// s holds s_0 .. s_{2d+1}; k atoms with k <= d are recovered.
inline RecoveryResult recover_atoms_1d(const std::vector<double>& s, int k,
                                       const RecoveryOptions& options = {}) {
    if (s.size() < 4 || s.size() % 2 != 0)
        throw Error(errc::invalid_argument,
                    "sequence must be s_0..s_{2d+1} with d >= 1, got length " +
                        std::to_string(s.size()));
    const int d = static_cast<int>(s.size()) / 2 - 1;
    if (k < 1 || k > d)
        throw Error(errc::invalid_argument,
                    "atom count must satisfy 1 <= k <= d = " + std::to_string(d));

    std::vector<std::vector<double>> hankel(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) hankel[i][j] = s[i + j];

    RecoveryResult result;
    result.condition_estimate = detail::condition_1norm(hankel);
    if (!(result.condition_estimate < options.condition_limit))
        throw Error(errc::ill_conditioned,
                    "Hankel block condition estimate " +
                        std::to_string(result.condition_estimate) + " exceeds limit");

    // Prony polynomial p(z) = z^k + a_{k-1} z^{k-1} + ... + a_0 annihilates
    // the sequence: sum_j a_j s_{i+j} = -s_{i+k}.
    std::vector<double> prony(k);
    for (int i = 0; i < k; ++i) prony[i] = -s[i + k];
    if (!detail::lu_solve(hankel, prony))
        throw Error(errc::ill_conditioned, "Hankel block is numerically singular");

    result.atoms = detail::monic_roots(prony, options.root_tol, options.max_root_iterations);

    // Weights from the square Vandermonde system on s_0 .. s_{k-1}.
    using C = std::complex<double>;
    std::vector<std::vector<C>> vandermonde(k, std::vector<C>(k));
    std::vector<C> rhs(k);
    for (int j = 0; j < k; ++j) {
        rhs[j] = C(s[j], 0.0);
        for (int i = 0; i < k; ++i)
            vandermonde[j][i] = j == 0 ? C(1.0, 0.0) : vandermonde[j - 1][i] * result.atoms[i];
    }
    if (!detail::lu_solve(vandermonde, rhs))
        throw Error(errc::ill_conditioned, "Vandermonde system is numerically singular");
    result.weights = rhs;

    result.residual = 0.0;
    std::vector<C> power(k, C(1.0, 0.0));
    for (std::size_t j = 0; j < s.size(); ++j) {
        C total(0.0, 0.0);
        for (int i = 0; i < k; ++i) {
            total += result.weights[i] * power[i];
            power[i] *= result.atoms[i];
        }
        result.residual = std::max(result.residual, std::abs(total - C(s[j], 0.0)));
    }
    return result;
}

} // namespace momentcara

#endif // MOMENTCARA_RECOVER_HPP
