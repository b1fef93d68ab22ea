#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "ats/rational.hpp"

namespace ats {

// Small dense matrices. Everything at desk scale, no sparsity games.

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        assert(cols == o.rows);
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const T& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
        return r;
    }

    Mat transposed() const {
        Mat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    T trace() const {
        T t = 0;
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }
};

using IntMat = Mat<long long>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = static_cast<long>(m.a[i]);
    return r;
}

// Row echelon in place; returns rank.
inline int echelonize(RatMat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        Rat inv = 1 / m.at(rank, col);
        for (int c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(RatMat m) { return echelonize(m); }
inline int rank_of(const IntMat& m) { return rank_of(to_rat(m)); }

// Basis of {x : Mx = 0}, one row per basis vector.
inline RatMat nullspace(RatMat m) {
    int n = m.cols;
    int rank = echelonize(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < n; ++c)
            if (m.at(r, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
    }
    RatMat basis(n - rank, n);
    int row = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis.at(row, free) = 1;
        for (int r = 0; r < rank; ++r) basis.at(row, pivot_col[r]) = -m.at(r, free);
        ++row;
    }
    return basis;
}

inline bool is_invertible(const RatMat& m) {
    return m.rows == m.cols && rank_of(m) == m.rows;
}

}  // namespace ats
