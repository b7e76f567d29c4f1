#include "torus/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace torus {

namespace {

double det_factor(const Eigen::MatrixXd& a) {
    // |det A|^{-2/d} for A = B^{-t}; equals vol(T_B)^{2/d}
    int d = static_cast<int>(a.rows());
    double det = a.determinant();
    if (std::abs(det) < 1e-300) throw SingularMatrixError("singular dual basis");
    return std::pow(std::abs(det), -2.0 / d);
}

IntGramMatrix rounded_form(const Eigen::MatrixXd& a) {
    int d = static_cast<int>(a.rows());
    Eigen::MatrixXd g = a.transpose() * a;
    double mx = g.cwiseAbs().maxCoeff();
    double s = 1e9 / mx;
    IntMat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Int e(std::lround(g(i, j) * s));
            m(i, j) = e;
            m(j, i) = e;
        }
    return IntGramMatrix(std::move(m));
}

struct ActiveSet {
    std::vector<LatticeVec> reps;    // sorted by branch value ascending
    std::vector<double> values;      // Lambda of each rep's branch
};

// Representatives covering at least `need` branch indices (2 per rep),
// ordered by true floating branch value under basis a.
ActiveSet active_set(const Eigen::MatrixXd& a, long long need) {
    IntGramMatrix g = rounded_form(a);
    Int b(0);
    for (int i = 0; i < g.dim(); ++i)
        if (b == 0 || g(i, i) < b) b = g(i, i);
    Spectrum s;
    for (;;) {
        s = enumerate_up_to(g, b);
        if (s.covered_count >= need) break;
        b *= 2;
    }
    double df = det_factor(a);
    ActiveSet out;
    long long covered = 0;
    for (const auto& e : s.entries) {
        for (const auto& v : e.representatives) {
            Eigen::VectorXd x(a.rows());
            for (int i = 0; i < a.rows(); ++i) x(i) = static_cast<double>(v[i]);
            out.reps.push_back(v);
            out.values.push_back(4.0 * kPi * kPi * df * (a * x).squaredNorm());
        }
        covered += e.multiplicity;
        if (covered >= need) break;
    }
    std::vector<size_t> order(out.reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return out.values[x] < out.values[y]; });
    ActiveSet sorted;
    for (size_t i : order) {
        sorted.reps.push_back(out.reps[i]);
        sorted.values.push_back(out.values[i]);
    }
    return sorted;
}

double kth_value(const ActiveSet& as, int k) {
    // each representative covers two consecutive branch indices
    return as.values[(k - 1) / 2];
}

// Constraint vectors for the max-min linearization: the representatives
// covering branch indices k and above.  Branches below k stay unconstrained;
// they are free to move and do not affect the k-th value.
std::vector<LatticeVec> active_slice(const ActiveSet& as, int k) {
    size_t lo = static_cast<size_t>((k - 1) / 2);
    return {as.reps.begin() + static_cast<long>(lo), as.reps.end()};
}

}  // namespace

double lambda_of_vector(const Eigen::MatrixXd& b0_inv_t, const LatticeVec& v) {
    Eigen::VectorXd x(b0_inv_t.rows());
    for (int i = 0; i < b0_inv_t.rows(); ++i) x(i) = static_cast<double>(v[i]);
    return 4.0 * kPi * kPi * det_factor(b0_inv_t) * (b0_inv_t * x).squaredNorm();
}

double lambda_k(const Eigen::MatrixXd& b_inv_t, int k) {
    return kth_value(active_set(b_inv_t, k + 1), k);
}

Eigen::MatrixXd sigma_matrix(const Eigen::MatrixXd& b0_inv_t, const LatticeVec& v) {
    int d = static_cast<int>(b0_inv_t.rows());
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x(i) = static_cast<double>(v[i]);
    Eigen::VectorXd w = b0_inv_t * x;
    double df = det_factor(b0_inv_t);
    double lam = 4.0 * kPi * kPi * df * w.squaredNorm();
    return 8.0 * kPi * kPi * df * (w * w.transpose()) -
           (2.0 / d) * lam * Eigen::MatrixXd::Identity(d, d);
}

LinearProgram build_lp(const OptState& state) {
    const int d = static_cast<int>(state.basis_inv_t.rows());
    const int nv = 1 + d * d;  // alpha, then eps row-major
    LinearProgram lp;
    lp.num_vars = nv;
    lp.free_vars = true;
    lp.objective.assign(nv, 0.0);
    lp.objective[0] = 1.0;
    for (const auto& v : state.active_vectors) {
        Eigen::MatrixXd sig = sigma_matrix(state.basis_inv_t, v);
        std::vector<double> row(nv, 0.0);
        row[0] = -1.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) row[1 + i * d + j] = sig(i, j);
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(-lambda_of_vector(state.basis_inv_t, v));
        lp.rel.push_back(Rel::kGe);
    }
    double off = d > 1 ? state.beta / (d - 1) : state.beta;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double lim = i == j ? state.beta : off;
            std::vector<double> row(nv, 0.0);
            row[1 + i * d + j] = 1.0;
            lp.rows.push_back(row);
            lp.rhs.push_back(lim);
            lp.rel.push_back(Rel::kLe);
            row[1 + i * d + j] = -1.0;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(lim);
            lp.rel.push_back(Rel::kLe);
        }
    return lp;
}

std::pair<double, Eigen::MatrixXd> solve_lp(const LinearProgram& lp, int d) {
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::kOptimal)
        throw Error("trust-region LP did not solve");
    Eigen::MatrixXd eps(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) eps(i, j) = sol.x[1 + i * d + j];
    return {sol.objective, eps};
}

namespace {

// At a symmetric saddle (e.g. the cubic lattice) the alpha-optimal face of
// the LP is degenerate and Bland's rule returns eps = 0, freezing the
// iteration even though second-order improving directions exist.  Re-solve
// over the near-optimal face with a fixed generic symmetric objective to pick
// a symmetry-breaking vertex, then project out the spectrum-preserving gauge
// directions (rotations and dilations).
Eigen::MatrixXd escape_eps(const LinearProgram& lp, double alpha, int d) {
    LinearProgram lp2 = lp;
    lp2.rows.push_back(lp.objective);
    lp2.rhs.push_back(alpha - 1e-7 * std::max(1.0, std::abs(alpha)));
    lp2.rel.push_back(Rel::kGe);
    lp2.objective.assign(lp.num_vars, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double w = std::sin(1.0 + i * d + j);
            lp2.objective[1 + i * d + j] = w;
            lp2.objective[1 + j * d + i] = w;
        }
    auto sol = simplex_solve(lp2);
    Eigen::MatrixXd eps = Eigen::MatrixXd::Zero(d, d);
    if (sol.status != LpStatus::kOptimal) return eps;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) eps(i, j) = sol.x[1 + i * d + j];
    eps = 0.5 * (eps + eps.transpose()).eval();
    eps -= (eps.trace() / d) * Eigen::MatrixXd::Identity(d, d);
    return eps;
}

}  // namespace

OptState optimize(int d, int k, const Basis& b_init, const OptConfig& config,
                  std::vector<IterationRecord>* trace) {
    OptState st;
    st.basis_inv_t = dual_basis(b_init).entries();
    if (st.basis_inv_t.determinant() < 0) st.basis_inv_t.col(0) *= -1.0;
    st.k = k;
    st.beta = config.beta0;
    long long need = k + config.K + 2;
    ActiveSet as = active_set(st.basis_inv_t, need);
    st.active_vectors = active_slice(as, k);
    st.lambda = kth_value(as, k);
    st.lambda_history.push_back(st.lambda);
    int accepts_in_row = 0;
    for (st.iteration = 0; st.iteration < config.max_iter; ++st.iteration) {
        LinearProgram lp = build_lp(st);
        auto [alpha, eps] = solve_lp(lp, d);
        double step = eps.norm() * st.basis_inv_t.norm();
        Eigen::MatrixXd cand =
            (Eigen::MatrixXd::Identity(d, d) + eps) * st.basis_inv_t;
        bool accepted = false;
        double lam_new = st.lambda;
        if (cand.determinant() > 0) {
            ActiveSet as_new = active_set(cand, need);
            lam_new = kth_value(as_new, k);
            if (lam_new >= st.lambda) {
                accepted = true;
                st.basis_inv_t = cand;
                st.active_vectors = active_slice(as_new, k);
                st.lambda = lam_new;
                st.lambda_history.push_back(lam_new);
            }
        }
        if (accepted) {
            if (++accepts_in_row >= 2) {
                st.beta = std::min(config.beta_max, st.beta * 1.5);
                accepts_in_row = 0;
            }
        } else {
            st.beta = std::max(config.beta_min, st.beta / 2.0);
            accepts_in_row = 0;
        }
        if (trace)
            trace->push_back({st.iteration, st.lambda, alpha, st.beta, step, accepted});
        if (step < config.tol) {
            // Zero step: either a genuine first-order optimum or a symmetric
            // saddle of the max-min model.  Probe a generic vertex of the
            // optimal face; stop only if it fails to strictly improve.
            Eigen::MatrixXd esc = escape_eps(lp, alpha, d);
            bool escaped = false;
            if (esc.norm() * st.basis_inv_t.norm() >= config.tol) {
                Eigen::MatrixXd cand2 =
                    (Eigen::MatrixXd::Identity(d, d) + esc) * st.basis_inv_t;
                if (cand2.determinant() > 0) {
                    ActiveSet as2 = active_set(cand2, need);
                    double lam2 = kth_value(as2, k);
                    if (lam2 > st.lambda + 1e-9 * std::max(1.0, st.lambda)) {
                        st.basis_inv_t = cand2;
                        st.active_vectors = active_slice(as2, k);
                        st.lambda = lam2;
                        st.lambda_history.push_back(lam2);
                        escaped = true;
                    }
                }
            }
            if (!escaped) {
                st.converged = true;
                st.stop_reason = "step below tolerance";
                ++st.iteration;
                return st;
            }
        }
    }
    st.stop_reason = config.max_iter == 0 ? "no iterations requested"
                                          : "max iterations reached";
    return st;
}

std::pair<Basis, IntMat> lll_reduce(const Basis& b, double delta) {
    if (delta <= 0.25 || delta >= 1.0) throw Error("delta must be in (0.25, 1)");
    const int d = b.dim();
    Eigen::MatrixXd m = b.entries();
    IntMat u = IntMat::identity(d);
    auto gso = [&](Eigen::MatrixXd& bs, Eigen::MatrixXd& mu) {
        bs = m;
        mu = Eigen::MatrixXd::Identity(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < i; ++j) {
                mu(i, j) = m.col(i).dot(bs.col(j)) / bs.col(j).squaredNorm();
                bs.col(i) -= mu(i, j) * bs.col(j);
            }
        }
    };
    Eigen::MatrixXd bs, mu;
    gso(bs, mu);
    int i = 1;
    int guard = 0;
    while (i < d) {
        if (++guard > 100000) throw Error("LLL failed to terminate");
        for (int j = i - 1; j >= 0; --j) {
            long long q = std::llround(mu(i, j));
            if (q != 0) {
                m.col(i) -= static_cast<double>(q) * m.col(j);
                for (int r = 0; r < d; ++r)
                    u(r, i) -= Int(static_cast<long>(q)) * u(r, j);
                gso(bs, mu);
            }
        }
        if (bs.col(i).squaredNorm() >=
            (delta - mu(i, i - 1) * mu(i, i - 1)) * bs.col(i - 1).squaredNorm()) {
            ++i;
        } else {
            m.col(i).swap(m.col(i - 1));
            for (int r = 0; r < d; ++r) std::swap(u(r, i), u(r, i - 1));
            gso(bs, mu);
            i = std::max(1, i - 1);
        }
    }
    return {Basis(m), u};
}

ScaledGram rationalize_gram(const Eigen::MatrixXd& g_float, double tol) {
    const int d = static_cast<int>(g_float.rows());
    if ((g_float - g_float.transpose()).cwiseAbs().maxCoeff() > tol)
        throw Error("matrix is not symmetric within tolerance");
    double smallest = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double x = std::abs(g_float(i, j));
            if (x > tol && (smallest == 0.0 || x < smallest)) smallest = x;
        }
    if (smallest == 0.0) throw Error("matrix has no nonzero entries");
    // continued-fraction reconstruction with denominator cap 64
    auto approx = [&](double x, long long& p, long long& q, double& err) {
        double target = x;
        long long p0 = 1, q0 = 0, p1 = std::llround(std::floor(x)), q1 = 1;
        double frac = x - std::floor(x);
        for (int it = 0; it < 40 && q1 <= 64; ++it) {
            if (std::abs(target - static_cast<double>(p1) / q1) < 1e-15) break;
            if (frac < 1e-15) break;
            x = 1.0 / frac;
            frac = x - std::floor(x);
            long long a = std::llround(std::floor(x));
            long long p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > 64) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        }
        p = p1;
        q = q1;
        err = std::abs(target - static_cast<double>(p1) / q1);
    };
    Mat<Rat> rats(d, d);
    double worst = 0.0;
    long long lcm = 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double x = g_float(i, j) / smallest;
            long long p, q;
            double err;
            approx(x, p, q, err);
            worst = std::max(worst, err);
            if (err > tol)
                throw NotRationalizableError("entry not close to a small rational",
                                             worst);
            rats(i, j) = Rat(static_cast<long>(p), static_cast<long>(q));
            rats(i, j).canonicalize();
            lcm = std::lcm(lcm, rats(i, j).get_den().get_si());
        }
    IntMat m(d, d);
    Int common(0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rat scaled = rats(i, j) * Rat(static_cast<long>(lcm));
            m(i, j) = scaled.get_num();
            Int g = gcd(abs(m(i, j)), common);
            common = g;
        }
    if (common > 1)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) /= common;
    double scale = smallest / static_cast<double>(lcm) * common.get_d();
    return ScaledGram(IntGramMatrix(std::move(m)), scale);
}

Basis random_start(int d, unsigned seed, double sigma) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) += sigma * uni(rng);
    if (m.determinant() < 0) {
        if (d >= 2) m.col(0).swap(m.col(1));
        else m(0, 0) = -m(0, 0);
    }
    return Basis(m);
}

}  // namespace torus
