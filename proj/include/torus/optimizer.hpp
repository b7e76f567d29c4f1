#pragma once

#include <string>

#include "torus/enumeration.hpp"
#include "torus/simplex.hpp"

namespace torus {

struct OptConfig {
    int K = 50;              // extra eigenvalue constraints beyond the k-th
    double beta0 = 0.1;      // initial trust radius
    double beta_min = 1e-8;
    double beta_max = 0.5;
    double tol = 1e-10;      // stop when ||eps||_F ||B0^{-t}||_F < tol
    int max_iter = 500;
};

struct OptState {
    Eigen::MatrixXd basis_inv_t;  // current B^{-t}, det > 0
    int k = 1;
    double beta = 0.1;
    int iteration = 0;
    std::vector<LatticeVec> active_vectors;  // the k..k+K+1 shortest
    std::vector<double> lambda_history;      // accepted Lambda_k values
    double lambda = 0.0;                     // current Lambda_k
    bool converged = false;
    std::string stop_reason;
};

struct IterationRecord {
    int iter;
    double lambda, alpha, beta, step_norm;
    bool accepted;
};

using LinearProgram = LpProblem<double>;  // vars: alpha then eps row-major

/// 8 pi^2 det(B0^{-t})^{-2/d} (B0^{-t} v)(B0^{-t} v)^t - (2/d) Lambda I,
/// the gradient of the branch of Lambda following v; trace is exactly zero.
Eigen::MatrixXd sigma_matrix(const Eigen::MatrixXd& b0_inv_t, const LatticeVec& v);

/// Normalized eigenvalue of the branch following v at basis B0^{-t}.
double lambda_of_vector(const Eigen::MatrixXd& b0_inv_t, const LatticeVec& v);

/// k-th normalized eigenvalue of the torus with dual basis b_inv_t, via
/// enumeration on a rounded form with floating re-evaluation.
double lambda_k(const Eigen::MatrixXd& b_inv_t, int k);

LinearProgram build_lp(const OptState& state);

/// Optimal (alpha, eps); deterministic under Bland's rule.
std::pair<double, Eigen::MatrixXd> solve_lp(const LinearProgram& lp, int d);

OptState optimize(int d, int k, const Basis& b_init, const OptConfig& config = {},
                  std::vector<IterationRecord>* trace = nullptr);

/// LLL-reduced basis and the unimodular transform U with reduced = B U.
std::pair<Basis, IntMat> lll_reduce(const Basis& b, double delta = 0.99);

struct ScaledGram {
    IntGramMatrix gram;
    double scale;  // float matrix ~= scale * gram
    ScaledGram(IntGramMatrix g, double s) : gram(std::move(g)), scale(s) {}
};

/// Divides by the smallest-magnitude nonzero entry, reconstructs rationals
/// with denominator <= 64 by continued fractions, clears denominators.
ScaledGram rationalize_gram(const Eigen::MatrixXd& g_float, double tol = 1e-6);

/// I + sigma * uniform[-1,1] entries, determinant made positive; seedable.
Basis random_start(int d, unsigned seed, double sigma = 0.2);

}  // namespace torus
