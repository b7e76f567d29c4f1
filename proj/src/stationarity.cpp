#include "torus/stationarity.hpp"

#include <algorithm>

#include "torus/simplex.hpp"

namespace torus {

namespace {

RatMat outer(const LatticeVec& v) {
    int d = static_cast<int>(v.size());
    RatMat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Rat(static_cast<long>(v[i] * v[j]));
    return m;
}

Int form_value(const IntGramMatrix& g, const LatticeVec& v) {
    std::vector<Int> vi;
    vi.reserve(v.size());
    for (long long x : v) vi.push_back(Int(static_cast<long>(x)));
    return g.form_value(vi);
}

RatMat direction_matrix(const RatMat& ginv, const LatticeVec& v, const Int& q, int d) {
    RatMat m = outer(v);
    Rat f = Rat(q) / d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) -= f * ginv(i, j);
    return m;
}

// Upper-triangular row-major flatten (i <= j), off-diagonals not doubled.
std::vector<Rat> flatten_ut(const RatMat& m) {
    int d = m.rows();
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(d) * (d + 1) / 2);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) out.push_back(m(i, j));
    return out;
}

// min ||c||^2, c >= 0, sum c_j M_j = 0, c_fixed = 1. Exact active-set
// procedure on the flattened system; throws InfeasibleError.
std::vector<Rat> solve_min_norm(const std::vector<PerturbationDirection>& dirs,
                                int fixed) {
    const int m = static_cast<int>(dirs.size());
    std::vector<std::vector<Rat>> cols;  // flattened directions, fixed one first
    cols.push_back(flatten_ut(dirs[fixed].matrix));
    std::vector<int> order;  // original index of cols[1..]
    for (int j = 0; j < m; ++j)
        if (j != fixed) {
            cols.push_back(flatten_ut(dirs[j].matrix));
            order.push_back(j);
        }
    const int rows = static_cast<int>(cols[0].size());
    const int n = m - 1;  // free coefficients
    std::vector<Rat> b(rows);
    for (int r = 0; r < rows; ++r) b[r] = -cols[0][r];
    std::vector<Rat> c(m, Rat(0));
    c[fixed] = 1;
    if (n == 0) {
        for (const auto& x : cols[0])
            if (x != 0) throw InfeasibleError("single nonzero direction");
        return c;
    }
    // feasibility (phase 1) by exact simplex
    LpProblem<Rat> lp;
    lp.num_vars = n;
    lp.objective.assign(n, Rat(0));
    for (int r = 0; r < rows; ++r) {
        std::vector<Rat> row(n);
        for (int j = 0; j < n; ++j) row[j] = cols[j + 1][r];
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(b[r]);
        lp.rel.push_back(Rel::kEq);
    }
    auto feas = simplex_solve(lp);
    if (feas.status != LpStatus::kOptimal)
        throw InfeasibleError("no nonnegative annihilating combination");
    std::vector<Rat> y = feas.x;  // current feasible point, length n
    // Start from the full working set: the restricted KKT solve then yields
    // the unconstrained min-norm point, which is already the optimum whenever
    // it is nonnegative (the typical case here). Variables only leave the set
    // when they block a step.
    std::vector<bool> in_f(n, true);
    for (int guard = 0; guard < 100000; ++guard) {
        std::vector<int> f;
        for (int j = 0; j < n; ++j)
            if (in_f[j]) f.push_back(j);
        const int nf = static_cast<int>(f.size());
        // KKT subproblem: (A_F A_F^t) lambda = 2 b; y*_F = A_F^t lambda / 2
        RatMat gram(rows, rows);
        for (int r = 0; r < rows; ++r)
            for (int s = r; s < rows; ++s) {
                Rat acc(0);
                for (int j : f) acc += cols[j + 1][r] * cols[j + 1][s];
                gram(r, s) = acc;
                gram(s, r) = acc;
            }
        std::vector<Rat> rhs(rows), lambda;
        for (int r = 0; r < rows; ++r) rhs[r] = 2 * b[r];
        if (!rat_solve(gram, rhs, lambda))
            throw Error("min-norm KKT system inconsistent");
        std::vector<Rat> ystar(n, Rat(0));
        for (int idx = 0; idx < nf; ++idx) {
            Rat acc(0);
            for (int r = 0; r < rows; ++r) acc += cols[f[idx] + 1][r] * lambda[r];
            ystar[f[idx]] = acc / 2;
        }
        bool neg = false;
        for (int j : f)
            if (ystar[j] < 0) { neg = true; break; }
        if (!neg) {
            y = ystar;
            // bound multipliers on inactive coordinates: need A_j . lambda <= 0
            int add = -1;
            for (int j = 0; j < n && add < 0; ++j) {
                if (in_f[j]) continue;
                Rat acc(0);
                for (int r = 0; r < rows; ++r) acc += cols[j + 1][r] * lambda[r];
                if (acc > 0) add = j;
            }
            if (add < 0) break;  // optimal
            in_f[add] = true;
            continue;
        }
        // step toward ystar, truncated at the first blocking boundary; drop
        // only the blocker (smallest index on ties) to avoid cycling on
        // degenerate steps where legitimately zero-valued members of F would
        // otherwise be evicted together with the variable just added
        Rat t(1);
        int drop = -1;
        for (int j : f) {
            if (ystar[j] >= 0) continue;
            Rat tj = y[j] / (y[j] - ystar[j]);
            if (drop < 0 || tj < t) {
                t = tj;
                drop = j;
            }
        }
        for (int j : f) y[j] = y[j] + t * (ystar[j] - y[j]);
        if (drop >= 0) {
            y[drop] = 0;
            in_f[drop] = false;
        }
    }
    for (int j = 0; j < n; ++j) c[order[j]] = y[j];
    return c;
}

RatMat residual_of(const std::vector<PerturbationDirection>& dirs,
                   const std::vector<Rat>& c) {
    int d = dirs[0].matrix.rows();
    RatMat r(d, d);
    for (size_t j = 0; j < dirs.size(); ++j)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) r(a, b) += c[j] * dirs[j].matrix(a, b);
    return r;
}

}  // namespace

Rat perturbation_simple(const IntGramMatrix& g0, const LatticeVec& v,
                        const RatMat& dg) {
    bool zero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    if (zero) throw Error("perturbation direction needs a nonzero vector");
    RatMat ginv = rat_inverse(to_rat(g0.entries()));
    Int q = form_value(g0, v);
    return direction_matrix(ginv, v, q, g0.dim()).dot(dg);
}

std::vector<PerturbationDirection> perturbation_directions(
    const IntGramMatrix& g0, const std::vector<LatticeVec>& vectors) {
    if (vectors.empty()) throw Error("no vectors supplied");
    RatMat ginv = rat_inverse(to_rat(g0.entries()));
    Int q = form_value(g0, vectors[0]);
    std::vector<PerturbationDirection> out;
    out.reserve(vectors.size());
    int idx = 1;
    for (const auto& v : vectors) {
        Int qv = form_value(g0, v);
        if (qv != q)
            throw MixedLevelError("vectors do not share an eigenvalue level");
        out.push_back({idx++, direction_matrix(ginv, v, q, g0.dim()), v});
    }
    return out;
}

SpanningCertificate spanning_check(int k, int d) {
    if (d < 1 || d > kMaxDim) throw DimensionError("dimension must be in [1,8]");
    VectorCatalog cat = catalog_vectors(k, d);
    SpanningCertificate sc;
    std::vector<LatticeVec> sel;
    for (const auto& row : cat.rows)
        if (row.spanning) {
            sc.selected_indices.push_back(row.index);
            sel.push_back(row.vec);
        }
    const int big = d * (d + 1) / 2;
    if (static_cast<int>(sel.size()) != big)
        throw Error("spanning selection has wrong cardinality");
    IntMat f(big, big);
    for (int col = 0; col < big; ++col) {
        const auto& v = sel[col];
        int r = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                f(r++, col) = Int(static_cast<long>(v[i])) * static_cast<long>(v[j]);
    }
    Int det = bareiss_determinant(f);
    if (det == 0) throw Error("spanning matrix is rank deficient");
    sc.f_matrix = to_rat(f);
    sc.det_value = Rat(det);
    return sc;
}

std::pair<Rat, Rat> certificate_ab(int k, int d) {
    if (d < 2 || d > kMaxDim) throw DimensionError("dimension must be in [2,8]");
    Int kap = kappa_of(k);
    Rat K(kap * kap);
    Rat a, b;
    switch (d) {
        case 2: a = (2 * K - 4) / K; b = 0; break;
        case 3: a = (3 * K - 8) / K; b = (2 * K - 4) / K; break;
        case 4: a = 4 * (K - 4) / K; b = 2 * (K - 4) / K; break;
        case 5: a = 6 * (K - 4) / K; b = 2 * (K - 3) / K; break;
        case 6: a = 8 * (K - 5) / K; b = 2 * (K - 4) / K; break;
        case 7: a = 4 * (3 * K - 16) / K; b = 2 * (K - 4) / K; break;
        default: a = 18 * (K - 6) / K; b = (2 * K - 9) / K; break;
    }
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

StationarityCertificate closed_form_certificate(int k, int d) {
    if (d < 2 || d > kMaxDim) throw DimensionError("dimension must be in [2,8]");
    CandidateGram cg = candidate_gram(k, d);
    VectorCatalog cat = catalog_vectors(k, d);
    std::vector<LatticeVec> vecs;
    for (const auto& row : cat.rows) vecs.push_back(row.vec);
    auto dirs = perturbation_directions(cg.gram, vecs);
    std::vector<Rat> c(vecs.size(), Rat(1));
    if (k > 2) {
        auto [a, b] = certificate_ab(k, d);
        for (size_t j = 0; j < cat.rows.size(); ++j) {
            if (cat.rows[j].index == 1) c[j] = a;
            else if (cat.rows[j].red) c[j] = b;
        }
    }
    StationarityCertificate cert;
    cert.coefficients = std::move(c);
    cert.residual = residual_of(dirs, cert.coefficients);
    if (!cert.residual.is_zero())
        throw Error("closed-form certificate residual is nonzero");
    return cert;
}

StationarityCertificate min_norm_certificate(
    const IntGramMatrix& g0, const std::vector<PerturbationDirection>& directions) {
    (void)g0;
    if (directions.empty()) throw Error("no directions supplied");
    StationarityCertificate cert;
    cert.coefficients = solve_min_norm(directions, 0);
    cert.residual = residual_of(directions, cert.coefficients);
    if (!cert.residual.is_zero())
        throw Error("min-norm certificate residual is nonzero");
    return cert;
}

GordanResult gordan_stationarity_test(
    const std::vector<PerturbationDirection>& directions) {
    if (directions.empty()) throw Error("no directions supplied");
    const int m = static_cast<int>(directions.size());
    const int d = directions[0].matrix.rows();
    for (int fixed = 0; fixed < m; ++fixed) {
        try {
            GordanResult r;
            r.stationary = true;
            r.certificate.coefficients = solve_min_norm(directions, fixed);
            r.certificate.residual = residual_of(directions, r.certificate.coefficients);
            if (!r.certificate.residual.is_zero())
                throw Error("gordan certificate residual is nonzero");
            r.witness = RatMat(d, d);
            return r;
        } catch (const InfeasibleError&) {
            // try the next normalization index
        }
    }
    // alternative: dG with <M_j, dG> >= 1 for all j
    const int big = d * (d + 1) / 2;
    LpProblem<Rat> lp;
    lp.num_vars = big;
    lp.free_vars = true;
    lp.objective.assign(big, Rat(0));
    for (const auto& dir : directions) {
        std::vector<Rat> row;
        row.reserve(big);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                row.push_back(i == j ? dir.matrix(i, j) : 2 * dir.matrix(i, j));
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rat(1));
        lp.rel.push_back(Rel::kGe);
    }
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::kOptimal)
        throw Error("gordan alternative failed on both sides");
    GordanResult r;
    r.stationary = false;
    r.witness = RatMat(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            r.witness(i, j) = sol.x[idx];
            r.witness(j, i) = sol.x[idx];
            ++idx;
        }
    for (const auto& dir : directions)
        if (dir.matrix.dot(r.witness) < 1)
            throw Error("improving direction fails verification");
    return r;
}

}  // namespace torus
