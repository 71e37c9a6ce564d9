#ifndef MOMENTCARA_MULTI_INDEX_HPP
#define MOMENTCARA_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "momentcara/binomial.hpp"
#include "momentcara/error.hpp"

namespace momentcara {

// Exponent vector of a monomial x^alpha.  Dimension is the entry count.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : entries(e) {}

    int dimension() const { return static_cast<int>(entries.size()); }

    int degree() const {
        int sum = 0;
        for (int e : entries) sum += e;
        return sum;
    }

    // Componentwise partial order: alpha <= beta iff alpha_i <= beta_i.
    bool componentwise_leq(const MultiIndex& other) const {
        if (entries.size() != other.entries.size()) return false;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] > other.entries[i]) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& other) const {
        MultiIndex sum = *this;
        for (std::size_t i = 0; i < entries.size(); ++i)
            sum.entries[i] += other.entries[i];
        return sum;
    }

    bool operator==(const MultiIndex& other) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(entries[i]);
        }
        s += ']';
        return s;
    }
};

// Canonical basis order used everywhere: by total degree, then
// lexicographically on the entry vector.  (0,1) precedes (1,0).
inline bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.entries < b.entries;
}

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_less(a, b);
    }
};

enum class DegreeMode { AtMost, Exactly };

namespace detail {
inline void enum_fixed_degree(int n, int d, std::vector<int>& prefix,
                              std::vector<MultiIndex>& out) {
    if (n == 1) {
        prefix.push_back(d);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = 0; head <= d; ++head) {
        prefix.push_back(head);
        enum_fixed_degree(n - 1, d - head, prefix, out);
        prefix.pop_back();
    }
}
} // namespace detail

// All multi-indices of dimension n with |alpha| <= d (or == d), in graded
// lexicographic order.  Size is binom(n+d, n) in at-most mode.
inline std::vector<MultiIndex> enum_multi_indices(int n, int d,
                                                  DegreeMode mode = DegreeMode::AtMost) {
    if (n < 1) throw Error(errc::invalid_argument, "dimension must be >= 1");
    if (d < 0) throw Error(errc::invalid_argument, "degree must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    if (mode == DegreeMode::Exactly) {
        detail::enum_fixed_degree(n, d, prefix, out);
    } else {
        out.reserve(binom(n + d, n).get_ui());
        for (int w = 0; w <= d; ++w) detail::enum_fixed_degree(n, w, prefix, out);
    }
    return out;
}

} // namespace momentcara

#endif // MOMENTCARA_MULTI_INDEX_HPP
