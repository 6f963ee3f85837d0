#include "affbgg/json_io.hpp"

#include <sstream>

namespace affbgg {

json rat_json(const Rat& r) { return r.str(); }

json ratvec_json(const RatVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json intvec_json(const IntVec& v) {
    json arr = json::array();
    for (auto x : v) arr.push_back(x);
    return arr;
}

json root_system_json(const RootSystemData& rs) {
    json j;
    j["type"] = std::string(1, rs.type_letter);
    j["rank"] = rs.rank;
    json cartan = json::array();
    for (const auto& row : rs.cartan) cartan.push_back(intvec_json(row));
    j["cartan"] = cartan;
    json pos = json::array();
    for (const auto& r : rs.positive_roots) pos.push_back(intvec_json(r));
    j["positive_roots"] = pos;
    j["rho"] = ratvec_json(rs.rho);
    j["theta"] = intvec_json(rs.theta);
    j["theta_short"] = intvec_json(rs.theta_short);
    j["h"] = rs.h;
    j["h_check"] = rs.h_check;
    j["lacing"] = rs.lacing;
    return j;
}

json affine_root_json(const AffineRoot& r) {
    json j;
    j["classical"] = intvec_json(r.classical);
    j["n"] = r.n;
    return j;
}

json weight_json(const AffineWeight& w) {
    json j;
    j["classical"] = ratvec_json(w.classical);
    j["level"] = rat_json(w.level);
    j["delta_coeff"] = rat_json(w.delta_coeff);
    return j;
}

json integral_system_json(const IntegralSystem& sys) {
    json j;
    j["type"] = std::string(1, sys.base.type_letter);
    j["rank"] = sys.base.rank;
    j["level"] = rat_json(sys.level);
    j["p"] = sys.p;
    j["q"] = sys.q;
    j["dual_case"] = sys.dual_case;
    j["abstract_type"] = std::string(1, sys.abstract_type.type_letter);
    json pi = json::array();
    for (const auto& r : sys.pi_lambda) pi.push_back(affine_root_json(r));
    j["pi_lambda"] = pi;
    json gens = json::array();
    for (const auto& g : sys.realized_generators)
        gens.push_back(format_element(sys.base, g));
    j["realized_generators"] = gens;
    return j;
}

json admissible_weight_json(const RootSystemData& rs, const AdmissibleWeight& aw) {
    json j;
    j["weight"] = weight_json(aw.weight);
    j["twist"] = format_element(rs, aw.twist);
    j["base_weight"] = weight_json(aw.base_weight);
    return j;
}

json complex_json(const IntegralSystem& sys, const ComplexTruncation& c) {
    const RootSystemData& abs = sys.abstract_type;
    json j;
    j["type"] = std::string(1, sys.base.type_letter);
    j["rank"] = sys.base.rank;
    j["level"] = rat_json(sys.level);
    j["lambda"] = weight_json(c.lambda);
    switch (c.kind.tag) {
        case ComplexKind::one_sided:
            j["kind"] = "one-sided";
            break;
        case ComplexKind::twisted:
            j["kind"] = "twisted";
            j["twist"] = format_element(abs, c.kind.twist);
            break;
        case ComplexKind::two_sided:
            j["kind"] = "two-sided";
            break;
    }
    json grades;
    for (const auto& [g, elts] : c.grades) {
        json arr = json::array();
        for (const auto& w : elts) arr.push_back(format_element(abs, w));
        grades[std::to_string(g)] = arr;
    }
    j["grades"] = grades;
    json edges = json::array();
    for (const auto& e : c.edges) {
        json je;
        je["from"] = format_element(abs, e.from);
        je["to"] = format_element(abs, e.to);
        je["from_grade"] = e.from_grade;
        je["sign"] = e.sign;
        edges.push_back(je);
    }
    j["edges"] = edges;
    json ver;
    ver["two_ok"] = c.report.two_intermediate_ok;
    json ml = json::array();
    for (const auto& [a, b] : c.report.module_level) {
        json pair;
        pair.push_back(format_element(abs, a));
        pair.push_back(format_element(abs, b));
        ml.push_back(pair);
    }
    ver["one_module_level"] = ml;
    ver["failures"] = c.report.failures;
    j["verification"] = ver;
    json win;
    win["norm"] = c.window.max_translation_norm;
    win["delta"] = c.window.max_delta;
    j["window"] = win;
    j["grade_min"] = c.grade_min;
    j["grade_max"] = c.grade_max;
    return j;
}

json character_json(const RootSystemData& rs, const CharacterSeries& s) {
    (void)rs;
    json j;
    j["base"] = weight_json(s.base);
    j["max_depth"] = s.trunc.max_depth;
    j["classical_window"] = s.trunc.classical_window;
    json coeffs = json::array();
    for (const auto& [k, v] : s.coeff) {
        json entry;
        entry["beta"] = intvec_json(k.first);
        entry["n"] = k.second;
        entry["coefficient"] = v;
        coeffs.push_back(entry);
    }
    j["coefficients"] = coeffs;
    return j;
}

std::string character_csv(const CharacterSeries& s) {
    std::ostringstream out;
    out << "beta_coords,n,coefficient\n";
    for (const auto& [k, v] : s.coeff) {
        for (size_t i = 0; i < k.first.size(); ++i)
            out << (i ? " " : "") << k.first[i];
        out << "," << k.second << "," << v << "\n";
    }
    return out.str();
}

}  // namespace affbgg
