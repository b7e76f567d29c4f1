#include "torus/candidate.hpp"

#include <algorithm>
#include <cmath>

#include "catalog_data.hpp"

namespace torus {

namespace {

void check_k(int k) {
    if (k < 1) throw Error("k must be >= 1");
}

void check_d(int d) {
    if (d < 1 || d > kMaxDim) throw DimensionError("dimension must be in [1,8]");
}

uint64_t catalog_checksum() {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](long long x) {
        h ^= static_cast<uint64_t>(x + (1ll << 32));
        h *= 1099511628211ull;
    };
    for (const auto& row : detail::kCatalog) {
        mix(row.k12);
        mix(row.k3);
        for (int x : row.v) mix(x);
    }
    return h;
}

// Frozen at transcription time; guards against accidental edits to the table.
constexpr uint64_t kCatalogChecksum = 0x39edaacf87670ce1ull;

}  // namespace

IntGramMatrix script_g(int k) {
    check_k(k);
    Int kp2 = Int(kappa_of(k)) * kappa_of(k);
    const Int K = kp2, Z = 0, F = -4, E = 8;
    IntMat m = {
        {2 * K, K, K, Z, K, Z, K, F},
        {K, 2 * K, Z, Z, Z, Z, K, F},
        {K, Z, 2 * K, Z, K, Z, Z, Z},
        {Z, Z, Z, 2 * K, -K, K, -K, Z},
        {K, Z, K, -K, 2 * K, Z, K, Z},
        {Z, Z, Z, K, Z, 2 * K, -K, Z},
        {K, K, Z, -K, K, -K, 2 * K, F},
        {F, F, Z, Z, Z, Z, F, E},
    };
    return IntGramMatrix(std::move(m));
}

CandidateGram candidate_gram(int k, int d) {
    check_k(k);
    check_d(d);
    IntGramMatrix g8 = script_g(k);
    IntMat sub(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sub(i, j) = g8(8 - d + i, 8 - d + j);
    return CandidateGram{k, d, kappa_of(k), IntGramMatrix(std::move(sub))};
}

Int candidate_det_polynomial(int k, int d) {
    check_k(k);
    check_d(d);
    Int K = Int(kappa_of(k)) * kappa_of(k);  // kappa^2
    auto pw = [&K](int e) {
        Int r(1);
        for (int i = 0; i < e; ++i) r *= K;
        return r;
    };
    Int p;
    switch (d) {
        case 1: p = 1; break;
        case 2: p = 2 * (K - 1); break;
        case 3: p = K * (3 * K - 4); break;
        case 4: p = 4 * pw(2) * (K - 2); break;
        case 5: p = 4 * pw(3) * (K - 2); break;
        case 6: p = 2 * pw(4) * (2 * K - 5); break;
        case 7: p = pw(5) * (3 * K - 8); break;
        default: p = 2 * pw(6) * (K - 3); break;
    }
    return 8 * p;
}

double closed_form_lambda(int k, int d) {
    check_k(k);
    check_d(d);
    double kap = kappa_of(k);
    if (d == 1) return kPi * kPi * kap * kap;
    static const double a[kMaxDim + 1] = {0, 0, 1.0, 4.0 / 3.0, 2.0, 2.0, 2.5, 8.0 / 3.0, 3.0};
    double h = weyl_constants(d).h_d;
    double k2 = kap * kap;
    return h * kPi * kPi * std::pow(k2 * k2 / (k2 - a[d]), 1.0 / d);
}

VectorCatalog catalog_vectors(int k, int d) {
    check_k(k);
    check_d(d);
    if (catalog_checksum() != kCatalogChecksum)
        throw Error("lattice-vector catalog corrupted");
    VectorCatalog cat;
    cat.k_regime = k <= 2 ? KRegime::kLe2 : KRegime::kGe3;
    cat.k = k;
    cat.d = d;
    cat.kappa = kappa_of(k);
    cat.dim_breaks.assign(d, 0);
    auto in = [](int x, const int (&set)[36]) {
        return std::find(std::begin(set), std::end(set), x) != std::end(set);
    };
    int next_index = 1;
    for (int dim = 1; dim <= d; ++dim) {
        cat.dim_breaks[dim - 1] = static_cast<int>(cat.rows.size());
        int lo = detail::kDimStart[dim - 1];
        int hi = dim < kMaxDim ? detail::kDimStart[dim] : 120;
        for (int r = lo; r < hi; ++r) {
            const auto& raw = detail::kCatalog[r];
            if (cat.k_regime == KRegime::kGe3 && raw.k3 == 0) continue;
            CatalogRow row;
            row.global_index = cat.k_regime == KRegime::kLe2 ? raw.k12 : raw.k3;
            row.index = next_index++;
            row.vec.assign(raw.v + (8 - d), raw.v + 8);
            if (raw.k12 == 1) row.vec[d - 1] = (k + 1) / 2;  // ceil(k/2)
            row.red = raw.k3 != 0 && in(raw.k3, detail::kRedK3);
            row.spanning = raw.k3 != 0 && in(raw.k3, detail::kSpanK3);
            cat.rows.push_back(std::move(row));
        }
    }
    return cat;
}

long long predicted_multiplicity(int k, int d) {
    check_k(k);
    check_d(d);
    static const long long m1[kMaxDim + 1] = {0, 2, 6, 12, 24, 40, 72, 126, 240};
    static const long long m2[kMaxDim + 1] = {0, 2, 6, 12, 22, 38, 62, 106, 182};
    return k <= 2 ? m1[d] : m2[d];
}

double lower_bound_lambda(int k, int d) {
    check_k(k);
    if (d < 1) throw DimensionError("dimension must be >= 1");
    double kap = kappa_of(k);
    return std::pow(2.0, 2.0 - 2.0 / d) * kPi * kPi * std::pow(kap, 2.0 / d);
}

HermiteCheck hermite_check(int d) {
    check_d(d);
    double lam = closed_form_lambda(1, d);
    HermiteCheck h;
    h.hermite = lam / (4.0 * kPi * kPi);
    h.density = weyl_constants(d).omega_d * std::pow(lam / (16.0 * kPi * kPi), d / 2.0);
    return h;
}

}  // namespace torus
