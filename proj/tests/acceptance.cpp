// Acceptance gate: one pass/fail line per criterion, exit nonzero on failure.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "torus/optimizer.hpp"
#include "torus/reporting.hpp"

using namespace torus;

namespace {

double now_s() {
    static const auto t0 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 4u : hw, 8u));
}

// Run fn(i) for i in [0, n) across worker threads; returns true iff all true.
bool parallel_all(int n, const std::function<bool(int)>& fn) {
    std::atomic<int> next(0);
    std::atomic<bool> ok(true);
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n || !ok.load()) return;
            try {
                if (!fn(i)) ok.store(false);
            } catch (const std::exception& e) {
                std::fprintf(stderr, "  worker error: %s\n", e.what());
                ok.store(false);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_budget(); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return ok.load();
}

// ---------------------------------------------------------------- criterion 1
bool criterion1() {
    double start = now_s();
    GoldenDiff g = golden_diff(TableName::kLamkd, 20);
    bool ok = g.cells == 80 && g.mismatches == 0 && g.max_delta < 5e-4;
    return ok && (now_s() - start) < 60.0;
}

// ---------------------------------------------------------------- criterion 2
bool criterion2() {
    static const double lam[9] = {0,       39.4784, 45.5858, 49.7397, 55.8309,
                                  59.8381, 65.7460, 71.5131, 78.9568};
    static const double dens[9] = {0,      1.0000, 0.9069, 0.7405, 0.6169,
                                   0.4653, 0.3729, 0.2953, 0.2537};
    for (int d = 1; d <= 8; ++d) {
        IntGramMatrix g = candidate_gram(1, d).gram;
        auto [nv, entry] = kth_normalized_eigenvalue(g, 1);
        if (std::abs(nv.value - lam[d]) > 5e-5 * std::max(1.0, lam[d] / 10.0)) {
            std::fprintf(stderr, "  d=%d lambda %.6f vs %.4f\n", d, nv.value, lam[d]);
            return false;
        }
        if (entry.multiplicity != predicted_multiplicity(1, d)) return false;
        double density = hermite_check(d).density;
        if (std::abs(density - dens[d]) > 5e-5) {
            std::fprintf(stderr, "  d=%d density %.6f vs %.4f\n", d, density, dens[d]);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 3
bool check_kappa_cell(int kap, int d) {
    // validates every k with 2*ceil(k/2) == kap in dimension d
    int k = kap - 1;  // odd member of the pair; k=kap behaves identically
    IntGramMatrix g = candidate_gram(k, d).gram;
    Spectrum s = enumerate_up_to(g, Int(2) * kap * kap);
    // sub-levels: q = 8 i^2, reps (0,...,0,i), i < kap/2 (absent for kap = 2)
    if (static_cast<int>(s.entries.size()) != kap / 2) return false;
    for (int i = 1; i < kap / 2; ++i) {
        const SpectrumEntry& e = s.entries[i - 1];
        if (e.q_value != 8 * i * i || e.multiplicity != 2) return false;
        LatticeVec v(d, 0);
        v[d - 1] = i;
        if (e.representatives != std::vector<LatticeVec>{v}) return false;
    }
    // the k-th eigenvalue branch lives in the last level
    const SpectrumEntry& top = s.entries.back();
    if (top.q_value != Int(2) * kap * kap) return false;
    if (top.multiplicity != predicted_multiplicity(k, d)) return false;
    long long below = 2 * (kap / 2 - 1);
    if (below >= k || below + top.multiplicity < k) return false;
    double enumerated = normalized_eigenvalue_from_form(g, top.q_value);
    double closed = closed_form_lambda(k, d);
    if (std::abs(enumerated - closed) > 1e-9 * closed) return false;
    // vector set equals the catalog up to sign
    VectorCatalog cat = catalog_vectors(k, d);
    std::set<LatticeVec> tab;
    for (const auto& r : cat.rows) {
        LatticeVec v = r.vec;
        for (long long x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        tab.insert(v);
    }
    std::set<LatticeVec> got(top.representatives.begin(), top.representatives.end());
    return got == tab;
}

bool criterion3() {
    double start = now_s();
    std::vector<std::pair<int, int>> cells;
    for (int kap = 2; kap <= 10000; kap += 2)
        for (int d = 1; d <= 8; ++d) cells.emplace_back(kap, d);
    bool ok = parallel_all(static_cast<int>(cells.size()), [&](int i) {
        auto [kap, d] = cells[i];
        if (check_kappa_cell(kap, d)) return true;
        std::fprintf(stderr, "  cell kappa=%d d=%d failed\n", kap, d);
        return false;
    });
    return ok && (now_s() - start) < 1800.0;
}

// ---------------------------------------------------------------- criterion 4
bool criterion4() {
    double start = now_s();
    std::vector<std::pair<int, int>> cells;
    for (int k = 1; k <= 100; ++k)
        for (int d = 2; d <= 8; ++d) cells.emplace_back(k, d);
    bool ok = parallel_all(static_cast<int>(cells.size()), [&](int i) {
        auto [k, d] = cells[i];
        StationarityCertificate c = closed_form_certificate(k, d);
        if (!c.residual.is_zero()) return false;
        SpanningCertificate sp = spanning_check(k, d);
        Rat expect(kappa_of(k) * kappa_of(k), 4);
        expect.canonicalize();
        return abs(sp.det_value) == expect;
    });
    return ok && (now_s() - start) < 300.0;
}

// ---------------------------------------------------------------- criterion 5
bool criterion5() {
    std::mt19937 rng(20260824);
    int done = 0;
    while (done < 100) {
        int d = 2 + static_cast<int>(rng() % 3);
        std::uniform_int_distribution<int> dist(-3, 3);
        IntMat a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = dist(rng);
        IntMat gm = a * a.transpose() + IntMat::identity(d);
        bool small = true;
        for (int i = 0; i < d && small; ++i)
            for (int j = 0; j < d; ++j)
                if (abs(gm(i, j)) > 20) { small = false; break; }
        if (!small) continue;
        IntGramMatrix g(std::move(gm));
        int r = d <= 3 ? 4 : 3;
        Int certified = oracle_certified_bound(g, r);
        if (certified <= 0) return false;
        Spectrum oracle = brute_force_oracle(g, r);
        Spectrum fast = enumerate_up_to(g, certified);
        size_t oi = 0;
        for (const auto& e : fast.entries) {
            if (oi >= oracle.entries.size()) return false;
            const auto& o = oracle.entries[oi++];
            if (o.q_value != e.q_value || o.multiplicity != e.multiplicity ||
                o.representatives != e.representatives)
                return false;
        }
        if (oi < oracle.entries.size() && oracle.entries[oi].q_value <= certified)
            return false;
        ++done;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 6
bool optimum_matches_family(const OptState& st, int k, int d) {
    auto [red, u] = lll_reduce(Basis(st.basis_inv_t));
    Eigen::MatrixXd gf = red.entries().transpose() * red.entries();
    ScaledGram sg = rationalize_gram(gf / gf.cwiseAbs().maxCoeff());
    IntGramMatrix family = candidate_gram(k, d).gram;
    // determinant compatibility: det(G) = t^d det(G_rat) for rational t
    Rat ratio = Rat(family.det()) / Rat(sg.gram.det());
    ratio.canonicalize();
    Int tn, td;
    if (mpz_root(tn.get_mpz_t(), ratio.get_num().get_mpz_t(), d) == 0) return false;
    if (mpz_root(td.get_mpz_t(), ratio.get_den().get_mpz_t(), d) == 0) return false;
    // normalized spectrum through level k+2 (scale invariant)
    for (int kk = 1; kk <= k + 2; ++kk) {
        auto [a, ea] = kth_normalized_eigenvalue(sg.gram, kk);
        auto [b, eb] = kth_normalized_eigenvalue(family, kk);
        if (std::abs(a.value - b.value) > 1e-9 * b.value) return false;
        if (ea.multiplicity != eb.multiplicity) return false;
    }
    return true;
}

bool criterion6() {
    double start = now_s();
    struct Case {
        int d, k;
        double target;
    };
    double hex = 8.0 * kPi * kPi / std::sqrt(3.0);
    double k34 = 2.0 * kPi * kPi * 16.0 / std::sqrt(15.0);
    std::vector<Case> cases = {{2, 1, hex},
                               {2, 2, hex},
                               {2, 3, k34},
                               {2, 4, k34},
                               {3, 1, 4.0 * kPi * kPi * std::pow(2.0, 1.0 / 3.0)}};
    for (const auto& c : cases) {
        int converged = 0;
        for (unsigned seed = 1; seed <= 20; ++seed) {
            OptState st = optimize(c.d, c.k, random_start(c.d, seed));
            if (std::abs(st.lambda - c.target) > 1e-5 * c.target) continue;
            if (!optimum_matches_family(st, c.k, c.d)) {
                std::fprintf(stderr, "  d=%d k=%d seed=%u: gram mismatch\n", c.d,
                             c.k, seed);
                return false;
            }
            ++converged;
        }
        if (converged < 12) {  // 60% of 20
            std::fprintf(stderr, "  d=%d k=%d: only %d/20 converged\n", c.d, c.k,
                         converged);
            return false;
        }
    }
    return (now_s() - start) < 600.0;
}

// ---------------------------------------------------------------- criterion 7
bool criterion7() {
    for (int d = 1; d <= 8; ++d) {
        DegeneracyReport r = degeneracy_report(d, 10000);
        double sum = 0.0;
        for (int i = 0; i < d; ++i) {
            double expect = r.expected_exponents[i];
            double tol = std::max(0.05 * std::abs(expect), 0.02);
            if (std::abs(r.fitted_exponents[i] - expect) > tol) {
                std::fprintf(stderr, "  d=%d mu_%d slope %.4f vs %.4f\n", d, i + 1,
                             r.fitted_exponents[i], expect);
                return false;
            }
            sum += r.fitted_exponents[i];
        }
        if (std::abs(sum) > 0.02) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8
bool criterion8() {
    bool ok = parallel_all(100, [&](int i) {
        int k = i + 1;
        Int kap2 = Int(kappa_of(k)) * kappa_of(k);
        for (int d = 1; d <= 8; ++d) {
            SuccessiveMinima sm = successive_minima(candidate_gram(k, d).gram);
            if (sm.q_values[0] != 8) return false;
            for (int j = 1; j < d; ++j)
                if (sm.q_values[j] != 2 * kap2) return false;
        }
        return true;
    });
    if (!ok) return false;
    for (int d = 1; d <= 8; ++d) {
        InjectivityReport r = injectivity_report(d, 10000);
        // the d=1 family form is constant in k, so its radius slope is zero
        double expect = d == 1 ? 0.0 : -1.0 / d;
        if (std::abs(r.slope - expect) > (d == 1 ? 0.02 : 0.05 / d)) {
            std::fprintf(stderr, "  d=%d slope %.4f vs %.4f\n", d, r.slope, expect);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 9
bool criterion9() {
    std::mt19937 rng(1729);
    std::uniform_real_distribution<double> uni(-0.25, 0.25);
    const double h = 1e-6;
    int done = 0, attempts = 0;
    while (done < 50 && attempts < 2000) {
        ++attempts;
        int d = 2 + static_cast<int>(rng() % 3);
        // eigenvalues come in +-v pairs, so probe the odd (pair-leading) index
        int k = 2 * (1 + static_cast<int>(rng() % 5)) - 1;
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) += uni(rng);
        if (std::abs(a.determinant()) < 0.3) continue;
        // stay away from level crossings: demand a clear gap around the pair
        std::vector<double> lams(k + 3);
        for (int kk = 1; kk <= k + 2; ++kk) lams[kk] = lambda_k(a, kk);
        if (k > 1 && lams[k] - lams[k - 1] < 1e-3 * lams[k]) continue;
        if (lams[k + 2] - lams[k] < 1e-3 * lams[k]) continue;
        Eigen::MatrixXd eps(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) eps(i, j) = uni(rng);
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
        double plus = lambda_k((id + h * eps) * a, k);
        double minus = lambda_k((id - h * eps) * a, k);
        double fd = (plus - minus) / (2.0 * h);
        // gradient from the branch vector attaining lambda_k: search a small
        // integer box for the k-th shortest branch
        const int R = 6;
        std::vector<std::pair<double, LatticeVec>> vals;
        std::vector<long long> c(d, -R);
        for (;;) {
            bool zero = std::all_of(c.begin(), c.end(),
                                    [](long long x) { return x == 0; });
            if (!zero) {
                LatticeVec v(c.begin(), c.end());
                vals.emplace_back(lambda_of_vector(a, v), v);
            }
            int i = 0;
            while (i < d && ++c[i] > R) c[i++] = -R;
            if (i == d) break;
        }
        std::sort(vals.begin(), vals.end());
        LatticeVec vk = vals[k - 1].second;  // each of +-v counts once
        if (std::abs(vals[k - 1].first - lams[k]) > 1e-9 * lams[k]) continue;
        double predicted = (sigma_matrix(a, vk).array() * eps.array()).sum();
        if (std::abs(predicted - fd) > 1e-5 * std::max(1.0, std::abs(fd))) {
            std::fprintf(stderr, "  fd %.8f vs sigma %.8f (d=%d k=%d)\n", fd,
                         predicted, d, k);
            return false;
        }
        ++done;
    }
    return done == 50;
}

struct Criterion {
    const char* label;
    bool (*fn)();
};

}  // namespace

int main() {
    const Criterion table[] = {
        {"1. lambda grid matches the 10x8 reference to 5e-4 in under 60 s",
         criterion1},
        {"2. principal eigenvalues, densities, multiplicities to 4 decimals",
         criterion2},
        {"3. enumeration equals closed form/catalog for d<=8, k<=10^4",
         criterion3},
        {"4. exact rational certificates and spanning dets for d=2..8, k<=100",
         criterion4},
        {"5. fast enumeration equals box oracle on 100 random forms", criterion5},
        {"6. optimizer recovers family optima from random starts", criterion6},
        {"7. degeneracy exponents 2p_i/d within 5%", criterion7},
        {"8. successive minima exact; injectivity slope -1/d", criterion8},
        {"9. sigma gradient matches finite differences on 50 cases", criterion9},
    };
    int failures = 0;
    for (const auto& c : table) {
        double t0 = now_s();
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  exception: %s\n", e.what());
        }
        std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.label,
                    now_s() - t0);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
