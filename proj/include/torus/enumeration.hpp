#pragma once

#include <utility>
#include <vector>

#include "torus/lattice.hpp"

namespace torus {

using LatticeVec = std::vector<long long>;

/// One Laplacian eigenvalue level of the form v -> v^t G v.
struct SpectrumEntry {
    Int q_value;
    long long multiplicity;  // 2 * representatives.size()
    std::vector<LatticeVec> representatives;  // one per +-v pair, sign-normalized,
                                              // sorted lexicographically
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;  // strictly increasing q_value
    long long covered_count = 0;         // sum of multiplicities
};

struct SuccessiveMinima {
    std::vector<double> gamma;    // gamma_1 <= ... <= gamma_d
    std::vector<Int> q_values;    // exact squared values gamma_i^2
    std::vector<LatticeVec> witnesses;
};

struct EnumOptions {
    long long candidate_cap = 10'000'000;
};

/// Every nonzero v (up to sign) with v^t G v <= bound, grouped by exact value.
Spectrum enumerate_up_to(const IntGramMatrix& g, const Int& bound,
                         const EnumOptions& opts = {});

/// The k-th positive normalized eigenvalue (counted with multiplicity) and the
/// level containing it. `bound_hint` seeds the geometric bound growth; it does
/// not affect the result.
std::pair<NormalizedEigenvalue, SpectrumEntry> kth_normalized_eigenvalue(
    const IntGramMatrix& g, int k, const EnumOptions& opts = {},
    const Int& bound_hint = Int(0));

/// Exhaustive loop over the integer box [-r, r]^d; test oracle.
Spectrum brute_force_oracle(const IntGramMatrix& g, int box_radius,
                            const EnumOptions& opts = {});

/// Largest q such that the oracle with radius r certifiably contains every
/// lattice vector of form value <= q (q <= r^2 lambda_min(G)).
Int oracle_certified_bound(const IntGramMatrix& g, int box_radius);

SuccessiveMinima successive_minima(const IntGramMatrix& g,
                                   const EnumOptions& opts = {});

}  // namespace torus
