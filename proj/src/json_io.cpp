#include "torus/json_io.hpp"

namespace torus {

namespace {

nlohmann::json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(static_cast<long>(j.get<long long>()));
}

}  // namespace

nlohmann::json matrix_to_json(const IntMat& m, const Int& scale_num,
                              const Int& scale_den) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"dim", m.rows()},
            {"entries", std::move(rows)},
            {"scale_num", int_to_json(scale_num)},
            {"scale_den", int_to_json(scale_den)}};
}

IntMat matrix_from_json(const nlohmann::json& j, Rat* scale) {
    int d = j.at("dim").get<int>();
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != d)
        throw Error("matrix entries do not match dim");
    IntMat m(d, static_cast<int>(rows[0].size()));
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < m.cols(); ++c) m(i, c) = int_from_json(rows[i][c]);
    if (scale) {
        Int num = j.contains("scale_num") ? int_from_json(j["scale_num"]) : Int(1);
        Int den = j.contains("scale_den") ? int_from_json(j["scale_den"]) : Int(1);
        if (den == 0) throw Error("zero scale denominator");
        *scale = Rat(num) / Rat(den);
        scale->canonicalize();
    }
    return m;
}

nlohmann::json spectrum_to_json(const IntGramMatrix& g, const Spectrum& s) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& e : s.entries) {
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& v : e.representatives) reps.push_back(v);
        levels.push_back({{"q", e.q_value.get_str()},
                          {"mult", e.multiplicity},
                          {"reps", std::move(reps)}});
    }
    return {{"gram", matrix_to_json(g.entries())}, {"levels", std::move(levels)}};
}

Spectrum spectrum_from_json(const nlohmann::json& j, IntMat* gram) {
    if (gram) *gram = matrix_from_json(j.at("gram"));
    Spectrum s;
    for (const auto& lv : j.at("levels")) {
        SpectrumEntry e;
        e.q_value = Int(lv.at("q").get<std::string>());
        e.multiplicity = lv.at("mult").get<long long>();
        for (const auto& r : lv.at("reps"))
            e.representatives.push_back(r.get<LatticeVec>());
        s.covered_count += e.multiplicity;
        s.entries.push_back(std::move(e));
    }
    return s;
}

}  // namespace torus
