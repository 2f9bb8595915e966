#include "rnagrowth/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "rnagrowth/errors.hpp"
#include "rnagrowth/rational_io.hpp"

namespace rnagrowth {

json series_to_json(const PowerSeries& s) {
    json arr = json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(rational_to_string(s.coeff(n)));
    return arr;
}

PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ModelFileError("series must be a non-empty JSON array");
    std::vector<mpq_class> cs;
    for (const auto& e : j) cs.push_back(parse_rational(e.get<std::string>()));
    return PowerSeries(std::move(cs));
}

json poly_to_json(const MultiPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exponents"] = {e[0], e[1], e[2]};
        term["coeff"] = rational_to_string(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

MultiPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ModelFileError("polynomial must be a JSON term list");
    MultiPoly p;
    for (const auto& term : j) {
        if (!term.contains("exponents") || !term.contains("coeff"))
            throw ModelFileError("polynomial term needs 'exponents' and 'coeff'");
        const auto& e = term["exponents"];
        if (!e.is_array() || e.size() != 3)
            throw ModelFileError("'exponents' must be [e_z, e_S, e_T]");
        mpq_class c = parse_rational(term["coeff"].get<std::string>());
        p = p + MultiPoly::monomial(c, {{Var::z, e[0].get<unsigned>()},
                                        {Var::S, e[1].get<unsigned>()},
                                        {Var::T, e[2].get<unsigned>()}});
    }
    return p;
}

json unipoly_to_json(const UniPoly& p) { return poly_to_json(p.to_multi()); }

UniPoly unipoly_from_json(const json& j) { return UniPoly::from_multi(poly_from_json(j)); }

json counts_to_json(const CountSequence& c) {
    json out;
    out["model"] = c.model;
    out["n_max"] = c.n_max;
    json vals = json::array();
    for (const auto& v : c.values) vals.push_back(v.get_str());
    out["values"] = std::move(vals);
    return out;
}

CountSequence counts_from_json(const json& j) {
    CountSequence c;
    c.model = j.at("model").get<std::string>();
    c.n_max = j.at("n_max").get<int>();
    for (const auto& v : j.at("values")) c.values.emplace_back(v.get<std::string>());
    return c;
}

namespace {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed_str(double v, int digits) { return format_decimal(mpq_class(v), digits); }

}  // namespace

json root_set_to_json(const RootSet& rs, int digits) {
    json out;
    out["polynomial"] = unipoly_to_json(rs.poly);
    json roots = json::array();
    for (const auto& r : rs.roots) {
        json jr;
        jr["re"] = fixed_str(r.value.real(), digits);
        jr["im"] = fixed_str(r.value.imag(), digits);
        jr["modulus"] = fixed_str(std::abs(r.value), digits);
        jr["residual"] = sci(r.residual);
        jr["multiple"] = r.multiple;
        if (r.certified_real)
            jr["certified_interval"] = {rational_to_string(r.bracket_lo),
                                        rational_to_string(r.bracket_hi)};
        roots.push_back(std::move(jr));
    }
    out["roots"] = std::move(roots);
    return out;
}

json growth_report_to_json(const GrowthReport& rep, int digits) {
    json out;
    out["model"] = rep.model;
    out["R"] = rep.R;
    out["growth"] = rep.growth;
    if (rep.published_growth) {
        out["published_growth"] = *rep.published_growth;
        out["abs_rel_error"] = sci(*rep.published_rel_error);
    }
    out["tie_count"] = rep.tie_count;
    out["certified"] = rep.certified;
    out["radicand"] = json{{"source", rep.radicand_source},
                           {"terms", unipoly_to_json(rep.radicand)}};
    out["candidates"] = root_set_to_json(rep.candidates, digits);
    if (rep.lc_candidates)
        out["leading_coeff_candidates"] = root_set_to_json(*rep.lc_candidates, digits);
    out["root_test"] = json{{"n_used", rep.root_test.n_used},
                            {"max_nth_root", fixed_str(rep.root_test.max_nth_root, digits)},
                            {"max_at", rep.root_test.max_at},
                            {"final_ratio", fixed_str(rep.root_test.final_ratio, digits)},
                            {"ratio_span", rep.root_test.ratio_span},
                            {"verdict", rep.root_test.pass ? "pass" : "fail"}};
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    return out;
}

const char* kReportCsvHeader = "model,R,growth,published_growth,abs_rel_error,tie_count,root_test_verdict";

std::string growth_report_csv_row(const GrowthReport& rep) {
    std::string row = rep.model + "," + rep.R + "," + rep.growth + ",";
    if (rep.published_growth) row += *rep.published_growth;
    row += ",";
    if (rep.published_rel_error) row += sci(*rep.published_rel_error);
    row += "," + std::to_string(rep.tie_count) + "," + (rep.root_test.pass ? "pass" : "fail");
    return row;
}

ModelSpec model_from_json(const json& j) {
    ModelSpec m;
    if (!j.contains("name") || !j.contains("kind"))
        throw ModelFileError("model file needs 'name' and 'kind'");
    m.name = j["name"].get<std::string>();
    const std::string kind = j["kind"].get<std::string>();
    if (j.contains("published_growth"))
        m.published_growth = j["published_growth"].get<std::string>();
    if (j.contains("published_radicand"))
        m.published_radicand = unipoly_from_json(j["published_radicand"]);
    if (j.contains("s0")) m.s0 = parse_rational(j["s0"].get<std::string>());

    if (kind == "recurrence") {
        if (!j.contains("lambda")) throw ModelFileError("recurrence model needs 'lambda'");
        m.kind = ModelKind::Recurrence;
        m.lambda = j["lambda"].get<int>();
        if (m.lambda < 2) throw ModelFileError("lambda must be >= 2");
        m.phi = lambda_phi(m.lambda);
        m.s0 = 1;
        m.counting = true;
    } else if (kind == "algebraic") {
        if (!j.contains("phi")) throw ModelFileError("algebraic model needs 'phi'");
        m.kind = ModelKind::Algebraic;
        m.phi = poly_from_json(j["phi"]);
        if (m.phi->contains(Var::T))
            throw ModelFileError("phi must be a polynomial in (z, S) only");
        m.counting = j.value("counting", false);
    } else if (kind == "system") {
        if (!j.contains("eq1") || !j.contains("eq2"))
            throw ModelFileError("system model needs 'eq1' and 'eq2'");
        m.kind = ModelKind::System;
        m.eq1 = poly_from_json(j["eq1"]);
        m.eq2 = poly_from_json(j["eq2"]);
        m.counting = j.value("counting", false);
        m = eliminate_auxiliary(m);
    } else {
        throw ModelFileError("unknown model kind '" + kind +
                             "' (expected recurrence, algebraic, or system)");
    }
    check_branch_point(m);
    return m;
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelFileError("cannot open model file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ModelFileError("bad JSON in '" + path + "': " + e.what());
    }
    return model_from_json(j);
}

}  // namespace rnagrowth
