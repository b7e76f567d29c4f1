#include "torus/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace torus {

namespace {

bool sign_normalized(const LatticeVec& v) {
    for (long long x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;  // zero vector
}

std::vector<Int> to_exact(const LatticeVec& v) {
    std::vector<Int> vi;
    vi.reserve(v.size());
    for (long long x : v) vi.push_back(Int(static_cast<long>(x)));
    return vi;
}

Spectrum group_levels(std::vector<std::pair<Int, LatticeVec>>&& hits) {
    std::map<Int, std::vector<LatticeVec>> levels;
    for (auto& [q, v] : hits) levels[q].push_back(std::move(v));
    Spectrum s;
    for (auto& [q, reps] : levels) {
        std::sort(reps.begin(), reps.end());
        SpectrumEntry e;
        e.q_value = q;
        e.multiplicity = 2 * static_cast<long long>(reps.size());
        e.representatives = std::move(reps);
        s.covered_count += e.multiplicity;
        s.entries.push_back(std::move(e));
    }
    return s;
}

// Depth-first Fincke-Pohst traversal with floating bounds and exact
// verification at the leaves.
struct Enumerator {
    const IntGramMatrix& g;
    Int bound;
    long long cap;
    int d;
    // R = L^t, upper triangular; q(v) = sum_i (R_ii v_i + sum_{j>i} R_ij v_j)^2
    Eigen::MatrixXd r;
    double fbound;
    LatticeVec v;
    long long leaves = 0;
    bool use_i64;
    std::vector<long long> g64;
    std::vector<std::pair<Int, LatticeVec>> hits;

    Enumerator(const IntGramMatrix& gram, const Int& b, long long candidate_cap)
        : g(gram), bound(b), cap(candidate_cap), d(gram.dim()), v(d, 0) {
        Eigen::MatrixXd l = cholesky(g);
        r = l.transpose();
        fbound = bound.get_d() * (1.0 + 1e-9) + 1e-9;
        // int64 leaf evaluation is safe when entries and coordinate ranges are
        // moderate; otherwise fall back to mpz.
        Int gmax(0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) gmax = std::max(gmax, Int(abs(g(i, j))));
        double coord_max = 0;
        for (int i = 0; i < d; ++i)
            coord_max = std::max(coord_max, std::sqrt(fbound) / r(i, i) + 2.0);
        use_i64 = gmax < Int(1) << 60 && coord_max < std::ldexp(1.0, 30);
        if (use_i64) {
            g64.resize(static_cast<size_t>(d) * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    g64[static_cast<size_t>(i) * d + j] = g(i, j).get_si();
        }
    }

    void leaf() {
        if (++leaves > cap)
            throw ResourceLimitError("enumeration candidate cap exceeded");
        if (!sign_normalized(v)) return;
        if (use_i64) {
            __int128 q = 0;
            for (int i = 0; i < d; ++i) {
                if (v[i] == 0) continue;
                const long long* row = &g64[static_cast<size_t>(i) * d];
                q += static_cast<__int128>(row[i]) * v[i] * v[i];
                for (int j = i + 1; j < d; ++j)
                    if (v[j] != 0) q += 2 * static_cast<__int128>(row[j]) * v[i] * v[j];
            }
            if (q < 0 || q > static_cast<__int128>(1) << 126) return;
            Int qz;
            if (q <= static_cast<__int128>(INT64_MAX)) {
                qz = static_cast<long>(q);
            } else {
                qz = Int(static_cast<long>(q >> 63)) << 63;
                qz += static_cast<long>(q & ((static_cast<__int128>(1) << 63) - 1));
            }
            if (qz <= bound) hits.emplace_back(std::move(qz), v);
        } else {
            Int q = g.form_value(to_exact(v));
            if (q <= bound) hits.emplace_back(std::move(q), v);
        }
    }

    // `partial` is the floating quadratic form contribution of coordinates > i.
    void descend(int i, double partial) {
        if (i < 0) {
            leaf();
            return;
        }
        double center = 0.0;
        for (int j = i + 1; j < d; ++j) center += r(i, j) * static_cast<double>(v[j]);
        center = -center / r(i, i);
        double radius = std::sqrt(std::max(0.0, fbound - partial)) / r(i, i);
        long long lo = static_cast<long long>(std::ceil(center - radius - 1e-9));
        long long hi = static_cast<long long>(std::floor(center + radius + 1e-9));
        for (long long t = lo; t <= hi; ++t) {
            v[i] = t;
            double u = r(i, i) * (static_cast<double>(t) - center);
            descend(i - 1, partial + u * u);
        }
        v[i] = 0;
    }
};

}  // namespace

Spectrum enumerate_up_to(const IntGramMatrix& g, const Int& bound,
                         const EnumOptions& opts) {
    if (bound < 0) throw Error("bound must be nonnegative");
    if (bound == 0) return {};
    Enumerator e(g, bound, opts.candidate_cap);
    e.descend(g.dim() - 1, 0.0);
    return group_levels(std::move(e.hits));
}

std::pair<NormalizedEigenvalue, SpectrumEntry> kth_normalized_eigenvalue(
    const IntGramMatrix& g, int k, const EnumOptions& opts, const Int& bound_hint) {
    if (k < 1) throw Error("k must be >= 1");
    Int b(0);
    for (int i = 0; i < g.dim(); ++i)
        if (b == 0 || g(i, i) < b) b = g(i, i);
    if (bound_hint > b) b = bound_hint;
    Spectrum s;
    for (;;) {
        s = enumerate_up_to(g, b, opts);
        if (s.covered_count >= k) break;
        b *= 2;
    }
    long long cum = 0;
    for (const auto& e : s.entries) {
        cum += e.multiplicity;
        if (cum >= k) {
            NormalizedEigenvalue nev;
            nev.value = normalized_eigenvalue_from_form(g, e.q_value);
            nev.k = k;
            nev.kappa = kappa_of(k);
            return {nev, e};
        }
    }
    throw Error("unreachable: spectrum did not cover k values");
}

Spectrum brute_force_oracle(const IntGramMatrix& g, int box_radius,
                            const EnumOptions& opts) {
    const int d = g.dim();
    if (box_radius < 0) throw Error("box radius must be nonnegative");
    double points = std::pow(2.0 * box_radius + 1.0, d);
    if (points > static_cast<double>(opts.candidate_cap))
        throw ResourceLimitError("oracle box too large");
    std::vector<std::pair<Int, LatticeVec>> hits;
    LatticeVec v(d, -box_radius);
    if (box_radius == 0) return {};
    for (;;) {
        if (sign_normalized(v)) {
            hits.emplace_back(g.form_value(to_exact(v)), v);
        }
        int i = d - 1;
        while (i >= 0 && v[i] == box_radius) v[i--] = -box_radius;
        if (i < 0) break;
        ++v[i];
    }
    return group_levels(std::move(hits));
}

Int oracle_certified_bound(const IntGramMatrix& g, int box_radius) {
    const int d = g.dim();
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = g(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    double lam_min = es.eigenvalues()(0);
    double q = static_cast<double>(box_radius) * box_radius * lam_min * (1.0 - 1e-9);
    return Int(static_cast<long>(std::floor(q)));
}

SuccessiveMinima successive_minima(const IntGramMatrix& g, const EnumOptions& opts) {
    const int d = g.dim();
    Int b(0);
    for (int i = 0; i < d; ++i)
        if (b == 0 || g(i, i) < b) b = g(i, i);
    for (;;) {
        Spectrum s = enumerate_up_to(g, b, opts);
        SuccessiveMinima sm;
        std::vector<std::vector<Rat>> basis;  // row-echelon accumulator
        auto independent = [&](const LatticeVec& v) {
            std::vector<Rat> row(d);
            for (int i = 0; i < d; ++i) row[i] = Rat(static_cast<long>(v[i]));
            for (const auto& p : basis) {
                int lead = -1;
                for (int i = 0; i < d; ++i)
                    if (p[i] != 0) { lead = i; break; }
                if (lead >= 0 && row[lead] != 0) {
                    Rat f = row[lead] / p[lead];
                    for (int i = 0; i < d; ++i) row[i] -= f * p[i];
                }
            }
            for (int i = 0; i < d; ++i)
                if (row[i] != 0) {
                    basis.push_back(std::move(row));
                    return true;
                }
            return false;
        };
        for (const auto& e : s.entries) {
            for (const auto& v : e.representatives) {
                if (static_cast<int>(sm.witnesses.size()) == d) break;
                if (independent(v)) {
                    sm.witnesses.push_back(v);
                    sm.q_values.push_back(e.q_value);
                    sm.gamma.push_back(std::sqrt(e.q_value.get_d()));
                }
            }
        }
        if (static_cast<int>(sm.witnesses.size()) == d) return sm;
        b *= 2;
    }
}

}  // namespace torus
