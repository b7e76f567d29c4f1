#pragma once

#include <Eigen/Dense>

#include "torus/matrix.hpp"

namespace torus {

constexpr int kMaxDim = 8;
constexpr double kPi = 3.14159265358979323846;

/// Lattice basis: columns of `entries` generate the lattice.
class Basis {
public:
    Basis(Eigen::MatrixXd entries);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& entries() const { return m_; }

    static Basis identity(int d) { return Basis(Eigen::MatrixXd::Identity(d, d)); }

private:
    Eigen::MatrixXd m_;
};

/// Exact symmetric positive-definite integer quadratic form on Z^d.
class IntGramMatrix {
public:
    IntGramMatrix(IntMat entries);

    int dim() const { return entries_.rows(); }
    const IntMat& entries() const { return entries_; }
    const Int& operator()(int i, int j) const { return entries_(i, j); }

    /// Exact determinant (cached).
    const Int& det() const { return det_; }

    /// v^t G v, exact.
    Int form_value(const std::vector<Int>& v) const;

    static IntGramMatrix identity(int d);

private:
    IntMat entries_;
    Int det_;
};

struct NormalizedEigenvalue {
    double value;  // 4 pi^2 (det G)^{-1/d} q, scale invariant
    int k;
    int kappa;  // 2 ceil(k/2)
};

struct WeylConstants {
    double g_d;
    double omega_d;  // volume of the unit d-ball
    double h_d;
};

inline int kappa_of(int k) { return 2 * ((k + 1) / 2); }

/// B^{-t}; throws SingularMatrixError when |det| is below 1e-12 * scale.
Basis dual_basis(const Basis& b);

/// G = B^{-1} B^{-t}.
Eigen::MatrixXd gram_of_inverse(const Basis& b);

/// Floating lower-triangular Cholesky factor of an exact integer form.
/// Throws NotPositiveDefiniteError naming the failing pivot.
Eigen::MatrixXd cholesky(const IntGramMatrix& g);
Eigen::MatrixXd cholesky(const Eigen::MatrixXd& g);

/// 4 pi^2 (det g)^{-1/d} q.
double normalized_eigenvalue_from_form(const IntGramMatrix& g, const Int& q_value);

/// (det)^{-1/d} in double, stable for determinants far beyond double range.
double det_pow(const Int& det, int d, int num = -1);

WeylConstants weyl_constants(int d);

}  // namespace torus
