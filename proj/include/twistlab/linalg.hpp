#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/numeric.hpp"

#include <optional>
#include <vector>

namespace twistlab {

/// Dense square integer matrix, row-major. Sizes here are tiny (rank at
/// most a few dozen), so the representation favors clarity over blocking.
struct Mat {
    int n = 0;
    std::vector<Int> a;

    Mat() = default;
    explicit Mat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {
        if (size < 0) throw dimension_error("negative matrix size");
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Mat identity(int size) {
        Mat m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat mul(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw dimension_error("matrix product size mismatch");
    Mat out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

inline Mat transpose(const Mat& m) {
    Mat out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

inline std::vector<Int> apply(const Mat& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.n) throw dimension_error("matrix-vector size mismatch");
    std::vector<Int> out(v.size(), 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

inline Mat pow(const Mat& m, unsigned long long e) {
    Mat acc = Mat::identity(m.n);
    Mat base = m;
    while (e) {
        if (e & 1ULL) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1ULL;
    }
    return acc;
}

inline Int trace(const Mat& m) {
    Int t = 0;
    for (int i = 0; i < m.n; ++i) t += m.at(i, i);
    return t;
}

/// Coefficients of det(xI - M), leading coefficient first (always 1).
/// Faddeev-LeVerrier over exact rationals; the results are integers.
inline std::vector<Int> charpoly(const Mat& m) {
    const int n = m.n;
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = Rat(m.at(i, j));
    std::vector<Rat> c(n + 1, 0);
    c[0] = 1;
    std::vector<std::vector<Rat>> Mk(n, std::vector<Rat>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // Mk <- A * Mk + c[k-1] * I
        std::vector<std::vector<Rat>> next(n, std::vector<Rat>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (A[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += A[i][l] * Mk[l][j];
            }
        for (int i = 0; i < n; ++i) next[i][i] += c[k - 1];
        Mk = std::move(next);
        Rat tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
        c[k] = -tr / k;
    }
    std::vector<Int> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (boost::multiprecision::denominator(c[k]) != 1)
            throw error("characteristic polynomial of an integer matrix came out non-integral");
        out[k] = boost::multiprecision::numerator(c[k]);
    }
    return out;
}

inline Int determinant(const Mat& m) {
    std::vector<Int> p = charpoly(m);
    Int det = p.back();
    if (m.n % 2 == 1) det = -det;
    return det;
}

/// Evaluate a charpoly-style coefficient vector at x.
inline Int eval_poly(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = 0;
    for (const Int& c : coeffs) acc = acc * x + c;
    return acc;
}

namespace detail {

/// Row echelon form over exact rationals, pivoting only in the first
/// `pivot_cols` columns (the remaining columns ride along, e.g. an
/// augmented identity). Returns the rank; `rows` is modified in place.
inline int echelonize(std::vector<std::vector<Rat>>& rows,
                      std::size_t pivot_cols = static_cast<std::size_t>(-1)) {
    if (rows.empty()) return 0;
    const std::size_t width = rows[0].size();
    const std::size_t cols = std::min(pivot_cols, width);
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat inv = rows[rank][c];
        for (std::size_t j = c; j < width; ++j) rows[rank][j] /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            const Rat f = rows[r][c];
            for (std::size_t j = c; j < width; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

inline int rank_of(const std::vector<std::vector<Int>>& vectors) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<Rat> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
        rows.push_back(std::move(r));
    }
    return detail::echelonize(rows);
}

/// Exact test for membership of v in the rational span of `basis`.
inline bool in_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    const int r0 = rank_of(basis);
    std::vector<std::vector<Int>> ext = basis;
    ext.push_back(v);
    return rank_of(ext) == r0;
}

/// Exact inverse of an integer matrix whose inverse is again integral
/// (determinant +-1). Throws otherwise.
inline Mat inverse(const Mat& m) {
    const int n = m.n;
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(m.at(i, j));
        rows[i][n + i] = 1;
    }
    if (detail::echelonize(rows, static_cast<std::size_t>(n)) != n)
        throw domain_error("matrix is singular");
    Mat out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = rows[i][n + j];
            if (boost::multiprecision::denominator(v) != 1)
                throw domain_error("matrix inverse is not integral");
            out.at(i, j) = boost::multiprecision::numerator(v);
        }
    return out;
}

} // namespace twistlab
