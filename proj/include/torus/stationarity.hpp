#pragma once

#include "torus/candidate.hpp"

namespace torus {

/// One first-order eigenvalue perturbation direction. The transcendental
/// common factor 4 pi^2 (det G0)^{-1/d} is divided out, so
///   matrix = v v^t - (q/d) G0^{-1}
/// with q = v^t G0 v, and every certificate identity is exact over Q.
struct PerturbationDirection {
    int index;              // 1-based position in the supplied vector list
    RatMat matrix;          // symmetric d x d
    LatticeVec lattice_vector;
};

struct StationarityCertificate {
    std::vector<Rat> coefficients;  // >= 0, not all zero
    RatMat residual;                // sum c_j M_j; must be identically zero
};

struct SpanningCertificate {
    std::vector<int> selected_indices;  // catalog indices (ascending)
    RatMat f_matrix;                    // D x D, D = d(d+1)/2
    Rat det_value;
};

struct GordanResult {
    bool stationary;
    StationarityCertificate certificate;  // valid when stationary
    RatMat witness;                       // strictly improving dG otherwise
};

/// <dLambda/dG, dg> in the det-free normalization:
/// <-(v^t G0 v / d) G0^{-1} + v v^t, dg>.
Rat perturbation_simple(const IntGramMatrix& g0, const LatticeVec& v,
                        const RatMat& dg);

/// Directions M_j for a degenerate level; all vectors must share the same
/// form value (MixedLevelError otherwise).
std::vector<PerturbationDirection> perturbation_directions(
    const IntGramMatrix& g0, const std::vector<LatticeVec>& vectors);

/// Builds F_d from the outer products of the spanning-flagged catalog vectors
/// (upper triangular halves stacked as columns) and returns its exact
/// determinant, which must have magnitude kappa^2 / 4.
SpanningCertificate spanning_check(int k, int d);

/// Closed-form coefficients a_{k,d}, b_{k,d} (k >= 3 regime); a is placed at
/// catalog index 1, b on the red index set. b is meaningful for d >= 3 only.
std::pair<Rat, Rat> certificate_ab(int k, int d);

/// The family's closed-form certificate: all-ones for k <= 2, otherwise
/// (a, ..., b on red indices, ..., 1). Residual is checked to be exactly zero.
StationarityCertificate closed_form_certificate(int k, int d);

/// min ||c||^2 s.t. c >= 0, sum c_j M_j = 0, c_1 = 1, by an exact rational
/// active-set procedure. Throws InfeasibleError when no such c exists.
StationarityCertificate min_norm_certificate(
    const IntGramMatrix& g0, const std::vector<PerturbationDirection>& directions);

/// Gordan dichotomy: either a nonnegative certificate (normalizing each index
/// in turn) or a direction dG with <M_j, dG> >= 1 for all j. Both outcomes are
/// re-verified by substitution before returning.
GordanResult gordan_stationarity_test(
    const std::vector<PerturbationDirection>& directions);

}  // namespace torus
