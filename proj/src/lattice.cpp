#include "torus/lattice.hpp"

#include <cmath>

namespace torus {

Basis::Basis(Eigen::MatrixXd entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1 || m_.rows() > kMaxDim)
        throw DimensionError("basis must be d x d with 1 <= d <= 8");
    double scale = m_.cwiseAbs().maxCoeff();
    if (std::abs(m_.determinant()) <= 1e-12 * std::max(1.0, std::pow(scale, m_.rows())))
        throw SingularMatrixError("basis matrix is singular");
}

IntGramMatrix::IntGramMatrix(IntMat entries) : entries_(std::move(entries)) {
    const int d = entries_.rows();
    if (d < 1 || d > kMaxDim || entries_.cols() != d)
        throw DimensionError("Gram matrix must be d x d with 1 <= d <= 8");
    if (!entries_.is_symmetric())
        throw Error("Gram matrix must be symmetric");
    int bad = -1;
    if (!is_positive_definite(entries_, &bad))
        throw NotPositiveDefiniteError(
            "Gram matrix is not positive definite (pivot " + std::to_string(bad) + ")", bad);
    det_ = bareiss_determinant(entries_);
}

Int IntGramMatrix::form_value(const std::vector<Int>& v) const {
    const int d = dim();
    Int q(0);
    for (int i = 0; i < d; ++i) {
        if (v[i] == 0) continue;
        q += entries_(i, i) * v[i] * v[i];
        for (int j = i + 1; j < d; ++j)
            if (v[j] != 0) q += 2 * entries_(i, j) * v[i] * v[j];
    }
    return q;
}

IntGramMatrix IntGramMatrix::identity(int d) {
    return IntGramMatrix(IntMat::identity(d));
}

Basis dual_basis(const Basis& b) {
    return Basis(b.entries().inverse().transpose());
}

Eigen::MatrixXd gram_of_inverse(const Basis& b) {
    Eigen::MatrixXd binv = b.entries().inverse();
    return binv * binv.transpose();
}

Eigen::MatrixXd cholesky(const Eigen::MatrixXd& g) {
    const int d = static_cast<int>(g.rows());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        double s = g(j, j);
        for (int k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
        if (s <= 0.0)
            throw NotPositiveDefiniteError(
                "not positive definite at pivot " + std::to_string(j), j);
        l(j, j) = std::sqrt(s);
        for (int i = j + 1; i < d; ++i) {
            double t = g(i, j);
            for (int k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
            l(i, j) = t / l(j, j);
        }
    }
    return l;
}

Eigen::MatrixXd cholesky(const IntGramMatrix& g) {
    const int d = g.dim();
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = g(i, j).get_d();
    return cholesky(m);
}

double det_pow(const Int& det, int d, int num) {
    // det^{num/d} via mantissa/exponent split so huge determinants stay finite.
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, det.get_mpz_t());
    double log_det = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    return std::exp(log_det * num / d);
}

double normalized_eigenvalue_from_form(const IntGramMatrix& g, const Int& q_value) {
    if (q_value <= 0) throw Error("form value must be positive");
    return 4.0 * kPi * kPi * det_pow(g.det(), g.dim()) * q_value.get_d();
}

WeylConstants weyl_constants(int d) {
    if (d < 1 || d > kMaxDim) throw DimensionError("dimension must be in [1,8]");
    WeylConstants w;
    w.omega_d = std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
    w.g_d = 4.0 * std::pow(w.omega_d, -2.0 / d);
    static const double h[kMaxDim + 1] = {
        0.0,
        1.0,
        2.0,
        4.0 * std::pow(3.0, -1.0 / 3.0),
        std::pow(2.0, 7.0 / 4.0),
        4.0,
        std::pow(2.0, 13.0 / 6.0),
        4.0 * std::pow(16.0 / 3.0, 1.0 / 7.0),
        std::pow(2.0, 5.0 / 2.0),
    };
    w.h_d = h[d];
    return w;
}

}  // namespace torus
