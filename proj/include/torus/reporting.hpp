#pragma once

#include <string>
#include <vector>

#include "torus/stationarity.hpp"

namespace torus {

enum class TableName { kLam1, kEigtable, kLattvecs, kLamkd, kCvals };
enum class TableFormat { kCsv, kJson, kMarkdown };

struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table table_lam1();                     // principal eigenvalue, all d
Table table_eigtable(int k = 1);        // closed-form summary per dimension
Table table_lattvecs(int k, int d);     // lattice-vector catalog
Table table_lamkd(int kmax = 20);       // Lambda grid, odd k rows
Table table_cvals(int k);               // certificate coefficients a, b

std::string render(const Table& t, TableFormat f);

struct GoldenDiff {
    int cells = 0;
    int mismatches = 0;
    double max_delta = 0.0;
    std::vector<std::string> notes;
};

GoldenDiff golden_diff(TableName name, int kmax = 20);

struct DegeneracySample {
    long long k;
    std::vector<double> mu;  // eigenvalues of det-normalized Gram, ascending
};

struct DegeneracyReport {
    int d;
    std::vector<DegeneracySample> samples;
    std::vector<double> fitted_exponents;   // slopes of log mu_i vs log k
    std::vector<double> expected_exponents; // 2 p_i / d
    double exponent_sum = 0.0;
};

DegeneracyReport degeneracy_report(int d, long long k_max);

struct InjectivityReport {
    int d;
    std::vector<std::pair<long long, double>> samples;  // (k, radius proxy)
    double slope = 0.0;  // expected -1/d
};

InjectivityReport injectivity_report(int d, long long k_max);

struct VerifyRecord {
    int k = 0, d = 0;
    bool lambda_ok = false;
    bool mult_ok = false;
    bool catalog_ok = false;
    bool spanning_ok = false;
    bool residual_zero = false;
    std::string spanning_det;
    std::vector<std::string> certificate;
    bool pass() const {
        return lambda_ok && mult_ok && catalog_ok && (d < 2 || (spanning_ok && residual_zero));
    }
};

VerifyRecord verify_case(int k, int d);

std::string verify_record_json(const VerifyRecord& r);

}  // namespace torus
