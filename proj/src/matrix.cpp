#include "torus/matrix.hpp"

namespace torus {

Int bareiss_determinant(IntMat m) {
    const int n = m.rows();
    assert(n == m.cols());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return Int(0);
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

bool is_positive_definite(IntMat m, int* failing_pivot) {
    // Bareiss without pivoting: the diagonal pivot after step k equals the
    // (k+1)-st leading principal minor. A symmetric integer matrix is positive
    // definite iff all of them are > 0.
    const int n = m.rows();
    Int prev(1);
    for (int k = 0; k < n; ++k) {
        if (m(k, k) <= 0) {
            if (failing_pivot) *failing_pivot = k;
            return false;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return true;
}

RatMat rat_inverse(const RatMat& m) {
    const int n = m.rows();
    assert(n == m.cols());
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) throw SingularMatrixError("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

int rat_rank(RatMat m) {
    int rank = 0;
    const int rows = m.rows(), cols = m.cols();
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != rank)
            for (int j = c; j < cols; ++j) std::swap(m(rank, j), m(p, j));
        for (int i = rank + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(rank, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rat rat_determinant(RatMat m) {
    const int n = m.rows();
    assert(n == m.cols());
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

bool rat_solve(RatMat a, std::vector<Rat> b, std::vector<Rat>& x) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) {
            for (int j = c; j < cols; ++j) std::swap(a(r, j), a(p, j));
            std::swap(b[r], b[p]);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a(i, pivot_col[i]);
    return true;
}

}  // namespace torus
