#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "torus/json_io.hpp"
#include "torus/optimizer.hpp"
#include "torus/reporting.hpp"

namespace {

using namespace torus;

int g_threads = 1;  // TORUS_THREADS caps worker parallelism

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot open output file " + out_path);
        f << text;
    }
}

TableFormat parse_format(const std::string& s) {
    if (s == "csv") return TableFormat::kCsv;
    if (s == "json") return TableFormat::kJson;
    if (s == "markdown") return TableFormat::kMarkdown;
    throw CLI::ValidationError("--format must be csv, json or markdown");
}

IntGramMatrix load_gram(const std::string& path, int k, int d) {
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw Error("cannot open " + path);
        nlohmann::json j;
        f >> j;
        return IntGramMatrix(matrix_from_json(j));
    }
    return candidate_gram(k, d).gram;
}

int run(int argc, char** argv) {
    CLI::App app{"flat-torus spectrum toolkit"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("TORUS_THREADS"))
        g_threads = std::max(1, std::atoi(env));

    // gram
    auto* gram_cmd = app.add_subcommand("gram", "emit a family Gram matrix");
    int gk = 1, gd = 2;
    std::string gout;
    gram_cmd->add_option("-k", gk, "eigenvalue index")->check(CLI::PositiveNumber);
    gram_cmd->add_option("-d", gd, "dimension")->check(CLI::Range(1, 8));
    gram_cmd->add_option("--out", gout, "output path");

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "enumerate a spectrum");
    int sk = 1, sd = 2;
    long long sbound = 0;
    std::string sgram, sout;
    spec_cmd->add_option("-k", sk, "eigenvalue index")->check(CLI::PositiveNumber);
    spec_cmd->add_option("-d", sd, "dimension")->check(CLI::Range(1, 8));
    spec_cmd->add_option("--bound", sbound, "enumerate up to this form value");
    spec_cmd->add_option("--gram", sgram, "matrix JSON file instead of the family");
    spec_cmd->add_option("--out", sout, "output path");

    // shortvecs
    auto* sv_cmd = app.add_subcommand("shortvecs", "k-th shortest vectors");
    int vk = 1, vd = 2;
    std::string vgram, vout;
    sv_cmd->add_option("-k", vk, "eigenvalue index")->check(CLI::PositiveNumber);
    sv_cmd->add_option("-d", vd, "dimension")->check(CLI::Range(1, 8));
    sv_cmd->add_option("--gram", vgram, "matrix JSON file instead of the family");
    sv_cmd->add_option("--out", vout, "output path");

    // table
    auto* tab_cmd = app.add_subcommand("table", "emit a report table");
    std::string tname = "lamkd", tformat = "csv", tout;
    int tkmax = 20, tk = 1, td = 8;
    bool tgolden = false;
    tab_cmd->add_option("--name", tname, "lam1|eigtable|lattvecs|lamkd|cvals")
        ->required();
    tab_cmd->add_option("--kmax", tkmax, "largest eigenvalue index");
    tab_cmd->add_option("--k", tk, "eigenvalue index");
    tab_cmd->add_option("--d", td, "dimension")->check(CLI::Range(1, 8));
    tab_cmd->add_option("--format", tformat, "csv|json|markdown");
    tab_cmd->add_flag("--golden", tgolden, "diff against reference values");
    tab_cmd->add_option("--out", tout, "output path");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "check the family end to end");
    int wk1 = 1, wk2 = 20, wd1 = 1, wd2 = 8;
    std::string wout;
    ver_cmd->add_option("--kmin", wk1)->check(CLI::PositiveNumber);
    ver_cmd->add_option("--kmax", wk2)->check(CLI::PositiveNumber);
    ver_cmd->add_option("--dmin", wd1)->check(CLI::Range(1, 8));
    ver_cmd->add_option("--dmax", wd2)->check(CLI::Range(1, 8));
    ver_cmd->add_option("--out", wout, "output path");

    // optimize
    auto* opt_cmd = app.add_subcommand("optimize", "search for optimal tori");
    int od = 2, ok = 1, ostarts = 1, omax_iter = 500;
    unsigned oseed = 1;
    double otol = 1e-10;
    std::string oout;
    opt_cmd->add_option("-d", od, "dimension")->check(CLI::Range(1, 8));
    opt_cmd->add_option("-k", ok, "eigenvalue index")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--seed", oseed, "random seed");
    opt_cmd->add_option("--starts", ostarts, "number of random starts");
    opt_cmd->add_option("--tol", otol, "step tolerance");
    opt_cmd->add_option("--max-iter", omax_iter, "iteration cap")
        ->check(CLI::NonNegativeNumber);
    opt_cmd->add_option("--out", oout, "output path");

    // degeneracy
    auto* deg_cmd = app.add_subcommand("degeneracy", "Gram eigenvalue exponents");
    int dd = 2;
    long long dkmax = 10000;
    std::string dout;
    deg_cmd->add_option("-d", dd, "dimension")->check(CLI::Range(1, 8));
    deg_cmd->add_option("--kmax", dkmax, "largest eigenvalue index");
    deg_cmd->add_option("--out", dout, "output path");

    // injectivity
    auto* inj_cmd = app.add_subcommand("injectivity", "injectivity-radius scaling");
    int id = 2;
    long long ikmax = 10000;
    std::string iout;
    inj_cmd->add_option("-d", id, "dimension")->check(CLI::Range(1, 8));
    inj_cmd->add_option("--kmax", ikmax, "largest eigenvalue index");
    inj_cmd->add_option("--out", iout, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;  // bad flags
    }

    if (gram_cmd->parsed()) {
        CandidateGram cg = candidate_gram(gk, gd);
        emit(matrix_to_json(cg.gram.entries()).dump(2) + "\n", gout);
        return 0;
    }

    if (spec_cmd->parsed()) {
        IntGramMatrix g = load_gram(sgram, sk, sd);
        Spectrum s;
        if (sbound > 0) {
            s = enumerate_up_to(g, Int(static_cast<long>(sbound)));
        } else {
            auto [nev, entry] = kth_normalized_eigenvalue(g, sk);
            s = enumerate_up_to(g, entry.q_value);
        }
        emit(spectrum_to_json(g, s).dump(2) + "\n", sout);
        return 0;
    }

    if (sv_cmd->parsed()) {
        IntGramMatrix g = load_gram(vgram, vk, vd);
        auto [nev, entry] = kth_normalized_eigenvalue(g, vk);
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& v : entry.representatives) reps.push_back(v);
        nlohmann::json j{{"k", vk},
                         {"q", entry.q_value.get_str()},
                         {"lambda", nev.value},
                         {"mult", entry.multiplicity},
                         {"reps", std::move(reps)}};
        emit(j.dump(2) + "\n", vout);
        return 0;
    }

    if (tab_cmd->parsed()) {
        TableName name;
        if (tname == "lam1") name = TableName::kLam1;
        else if (tname == "eigtable") name = TableName::kEigtable;
        else if (tname == "lattvecs") name = TableName::kLattvecs;
        else if (tname == "lamkd") name = TableName::kLamkd;
        else if (tname == "cvals") name = TableName::kCvals;
        else {
            std::cerr << "unknown table name: " << tname << "\n";
            return 4;
        }
        if (tgolden) {
            GoldenDiff g = golden_diff(name, tkmax);
            nlohmann::json j{{"table", tname},
                             {"cells", g.cells},
                             {"mismatches", g.mismatches},
                             {"max_delta", g.max_delta},
                             {"notes", g.notes}};
            emit(j.dump(2) + "\n", tout);
            return g.mismatches == 0 ? 0 : 2;
        }
        Table t;
        switch (name) {
            case TableName::kLam1: t = table_lam1(); break;
            case TableName::kEigtable: t = table_eigtable(tk); break;
            case TableName::kLattvecs: t = table_lattvecs(tk, td); break;
            case TableName::kLamkd: t = table_lamkd(tkmax); break;
            case TableName::kCvals: t = table_cvals(tk); break;
        }
        emit(render(t, parse_format(tformat)), tout);
        return 0;
    }

    if (ver_cmd->parsed()) {
        std::string out;
        bool all_ok = true;
        for (int d = wd1; d <= wd2; ++d)
            for (int k = wk1; k <= wk2; ++k) {
                VerifyRecord r = verify_case(k, d);
                all_ok = all_ok && r.pass();
                out += verify_record_json(r) + "\n";
            }
        emit(out, wout);
        return all_ok ? 0 : 2;
    }

    if (opt_cmd->parsed()) {
        OptConfig cfg;
        cfg.tol = otol;
        cfg.max_iter = omax_iter;
        std::string out;
        double best_lambda = 0.0;
        Eigen::MatrixXd best;
        for (int s = 0; s < ostarts; ++s) {
            std::vector<IterationRecord> trace;
            OptState st = optimize(od, ok, random_start(od, oseed + s), cfg, &trace);
            for (const auto& t : trace) {
                nlohmann::json j{{"iter", t.iter},       {"lambda", t.lambda},
                                 {"alpha", t.alpha},     {"beta", t.beta},
                                 {"step_norm", t.step_norm}, {"accepted", t.accepted}};
                out += j.dump() + "\n";
            }
            if (st.lambda > best_lambda) {
                best_lambda = st.lambda;
                best = st.basis_inv_t;
            }
        }
        nlohmann::json summary{{"d", od}, {"k", ok}, {"best_lambda", best_lambda}};
        if (best.size() > 0) {
            try {
                Basis reduced = lll_reduce(Basis(best)).first;
                ScaledGram sg =
                    rationalize_gram(gram_of_inverse(dual_basis(reduced)), 1e-4);
                summary["gram"] = matrix_to_json(sg.gram.entries());
            } catch (const Error& e) {
                summary["gram_error"] = e.what();
            }
        }
        out += summary.dump() + "\n";
        emit(out, oout);
        return 0;
    }

    if (deg_cmd->parsed()) {
        DegeneracyReport rep = degeneracy_report(dd, dkmax);
        std::string out = "k";
        for (int i = 1; i <= dd; ++i) out += ",mu" + std::to_string(i);
        out += "\n";
        for (const auto& s : rep.samples) {
            out += std::to_string(s.k);
            for (double m : s.mu) {
                char buf[32];
                std::snprintf(buf, sizeof buf, ",%.8g", m);
                out += buf;
            }
            out += "\n";
        }
        out += "# fitted:";
        for (double e : rep.fitted_exponents) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.4f", e);
            out += buf;
        }
        out += "\n# expected:";
        for (double e : rep.expected_exponents) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.4f", e);
            out += buf;
        }
        out += "\n";
        emit(out, dout);
        return 0;
    }

    if (inj_cmd->parsed()) {
        InjectivityReport rep = injectivity_report(id, ikmax);
        std::string out = "k,radius_proxy\n";
        for (const auto& [k, r] : rep.samples) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%lld,%.8g\n", k, r);
            out += buf;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "# slope: %.5f\n", rep.slope);
        out += buf;
        emit(out, iout);
        return 0;
    }

    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const torus::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const torus::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
