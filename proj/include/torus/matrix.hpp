#pragma once

#include <gmpxx.h>

#include <cassert>
#include <initializer_list>
#include <vector>

#include "torus/error.hpp"

namespace torus {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense row-major matrix over an exact or floating scalar type.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            assert(static_cast<int>(r.size()) == cols_);
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }
    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int l = 0; l < cols_; ++l) {
                const T& x = (*this)(i, l);
                if (x == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) m(i, j) += x * o(l, j);
            }
        return m;
    }
    Mat operator*(const T& s) const {
        Mat m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != T(0)) return false;
        return true;
    }

    /// Frobenius inner product.
    T dot(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        T s(0);
        for (size_t i = 0; i < a_.size(); ++i) s += a_[i] * o.a_[i];
        return s;
    }

    const std::vector<T>& data() const { return a_; }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

/// Exact determinant of an integer matrix by fraction-free (Bareiss) elimination.
Int bareiss_determinant(IntMat m);

/// Positive definiteness via leading principal minors (one Bareiss sweep).
/// On failure the index of the first non-positive pivot is reported.
bool is_positive_definite(IntMat m, int* failing_pivot = nullptr);

/// Exact rational inverse; throws SingularMatrixError.
RatMat rat_inverse(const RatMat& m);

/// Rank over the rationals by Gaussian elimination (input copied).
int rat_rank(RatMat m);

/// Exact determinant of a rational matrix.
Rat rat_determinant(RatMat m);

/// Solve A x = b over the rationals. Returns false if inconsistent; when the
/// system is underdetermined an arbitrary solution (free variables zero) is
/// returned.
bool rat_solve(RatMat a, std::vector<Rat> b, std::vector<Rat>& x);

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

}  // namespace torus
