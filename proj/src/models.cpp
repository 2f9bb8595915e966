#include "rnagrowth/models.hpp"

#include <map>
#include <sstream>

#include "rnagrowth/errors.hpp"

namespace rnagrowth {

const char* model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::Recurrence: return "recurrence";
        case ModelKind::PrimaryFree: return "primary-free";
        case ModelKind::PrimaryWc: return "primary-wc";
        case ModelKind::Algebraic: return "algebraic";
        case ModelKind::System: return "system";
    }
    return "?";
}

MultiPoly lambda_phi(int lambda) {
    if (lambda < 2) throw DomainError("lambda must be >= 2");
    const MultiPoly z = MultiPoly::variable(Var::z);
    const MultiPoly S = MultiPoly::variable(Var::S);
    MultiPoly mid = MultiPoly::constant(1) - z;
    for (int k = 2; k <= lambda; ++k)
        mid = mid + MultiPoly::monomial(1, {{Var::z, static_cast<unsigned>(k)}});
    return z * z * S * S - mid * S + MultiPoly::constant(1);
}

void check_branch_point(const ModelSpec& m) {
    if (!m.phi) throw DomainError("model '" + m.name + "' has no implicit equation");
    std::map<Var, mpq_class> origin{{Var::z, mpq_class(0)}, {Var::S, m.s0}};
    if (m.phi->eval_rational(origin) != 0)
        throw BranchAmbiguityError("model '" + m.name + "': phi(0, s0) != 0");
    if (m.phi->derivative(Var::S).eval_rational(origin) == 0)
        throw BranchAmbiguityError("model '" + m.name +
                                   "': dphi/dS vanishes at (0, s0); branch is not simple");
}

ModelSpec eliminate_auxiliary(const ModelSpec& system) {
    if (system.kind != ModelKind::System || !system.eq1 || !system.eq2)
        throw DomainError("eliminate_auxiliary expects a system model");
    const MultiPoly& e1 = *system.eq1;
    const MultiPoly& e2 = *system.eq2;
    if (e1.degree(Var::T) < 1 || e2.degree(Var::T) < 1)
        throw VariableError("system equations must both involve T");

    MultiPoly res = resultant(e1, e2, Var::T);
    if (res.is_zero())
        throw DegenerateSystemError("system equations share a component: resultant is zero");

    ModelSpec out = system;
    out.kind = ModelKind::Algebraic;
    out.notes.push_back("phi obtained by resultant elimination of T");

    res = res.normalized();

    // strip monomial z content
    unsigned zmin = UINT32_MAX;
    for (const auto& [e, c] : res.terms()) zmin = std::min(zmin, e[0]);
    if (zmin > 0) {
        auto q = exact_divide(res, MultiPoly::monomial(1, {{Var::z, zmin}}));
        res = std::move(*q);
        out.notes.push_back("stripped content z^" + std::to_string(zmin));
    }
    // strip (1 - z) content
    const MultiPoly one_minus_z = MultiPoly::constant(1) - MultiPoly::variable(Var::z);
    int stripped = 0;
    while (true) {
        auto q = exact_divide(res, one_minus_z);
        if (!q) break;
        res = std::move(*q);
        ++stripped;
    }
    if (stripped > 0) out.notes.push_back("stripped content (1-z)^" + std::to_string(stripped));
    res = res.normalized();
    out.phi = res;

    // the initial value: a simple root of phi(0, S) matching the count of the
    // empty structure, normally 0 or 1
    std::vector<mpq_class> candidates;
    if (system.s0 != 0) candidates.push_back(system.s0);
    candidates.push_back(mpq_class(0));
    candidates.push_back(mpq_class(1));
    bool found = false;
    for (const auto& c : candidates) {
        std::map<Var, mpq_class> origin{{Var::z, mpq_class(0)}, {Var::S, c}};
        if (res.eval_rational(origin) == 0 &&
            res.derivative(Var::S).eval_rational(origin) != 0) {
            out.s0 = c;
            found = true;
            break;
        }
    }
    if (!found)
        throw BranchAmbiguityError("eliminated system '" + system.name +
                                   "': no simple root of phi(0, S) at 0 or 1");
    check_branch_point(out);
    return out;
}

namespace {

UniPoly upoly(std::vector<mpq_class> cs) { return UniPoly(std::move(cs)); }

ModelSpec make_lambda_model(const std::string& name, int lambda,
                            std::optional<UniPoly> radicand, const std::string& growth) {
    ModelSpec m;
    m.name = name;
    m.kind = ModelKind::Recurrence;
    m.lambda = lambda;
    m.phi = lambda_phi(lambda);
    m.s0 = 1;
    m.published_radicand = std::move(radicand);
    m.published_growth = growth;
    check_branch_point(m);
    return m;
}

std::map<std::string, ModelSpec> build_registry() {
    const MultiPoly z = MultiPoly::variable(Var::z);
    const MultiPoly S = MultiPoly::variable(Var::S);
    const MultiPoly T = MultiPoly::variable(Var::T);
    const MultiPoly one = MultiPoly::constant(1);

    std::map<std::string, ModelSpec> reg;

    {
        ModelSpec m;
        m.name = "primary-free";
        m.kind = ModelKind::PrimaryFree;
        m.singular_poly = upoly({1, -4});
        m.published_growth = "4";
        reg[m.name] = m;
    }
    {
        ModelSpec m;
        m.name = "primary-wc";
        m.kind = ModelKind::PrimaryWc;
        // reversed characteristic polynomial of the 4-state pairing recurrence
        m.singular_poly = upoly({1, 0, -3, 0, 1});
        m.notes.push_back("coefficient bound b^n fails at small n; growth is asymptotic only");
        reg[m.name] = m;
    }

    reg["lambda2"] = make_lambda_model("lambda2", 2, upoly({1, -2, -1, -2, 1}), "2.6180340");
    reg["lambda3"] =
        make_lambda_model("lambda3", 3, upoly({1, -2, -1, 0, -1, 2, 1}), "2.4142136");
    reg["lambda4"] = make_lambda_model("lambda4", 4, std::nullopt, "2.28879");

    {
        ModelSpec sys;
        sys.name = "saturated";
        sys.kind = ModelKind::System;
        sys.eq1 = z + z * z + z * T + z * z * T + z * z * S + z * z * S * S - S;
        sys.eq2 = z * z * S + z * z * T * S - T;
        ModelSpec m = eliminate_auxiliary(sys);
        m.published_radicand = upoly({-4, -5, 6, 35, 60, 32, -4, -4});
        m.published_growth = "2.354673";
        reg[m.name] = m;
    }
    {
        ModelSpec sys;
        sys.name = "canonical";
        sys.kind = ModelKind::System;
        sys.eq1 = z + z * S + z * z * T + z * z * S * T - S;
        sys.eq2 = z * z * z + z * z * T + z.pow(4) * S * T + z * z * z * S - T;
        ModelSpec m = eliminate_auxiliary(sys);
        m.published_radicand = upoly({1, -2, -1, 4, -1, -8, 3, 6, -2, -4, 1});
        m.published_growth = "1.967977";
        reg[m.name] = m;
    }
    {
        ModelSpec m;
        m.name = "locally-optimal";
        m.kind = ModelKind::Algebraic;
        MultiPoly b = z.pow(4) + MultiPoly::constant(2) * z.pow(3) + z * z + z - one;
        MultiPoly onepz2 = (one + z) * (one + z);
        m.phi = z * z * onepz2 * S * S + b * S + z;
        m.s0 = 0;
        // P(z) = b(z)^2 - 4 z^3 (1+z)^2
        MultiPoly P = b * b - MultiPoly::constant(4) * z.pow(3) * onepz2;
        m.published_radicand = UniPoly::from_multi(P);
        m.published_growth = "3.0795963";
        check_branch_point(m);
        reg[m.name] = m;
    }
    {
        ModelSpec m;
        m.name = "pi-shapes";
        m.kind = ModelKind::Algebraic;
        m.phi = z * z * S * S + (z * z - one) * S + z * z;
        m.s0 = 0;
        m.published_radicand = upoly({1, 0, -2, 0, -3});
        m.published_growth = "1.7320508";
        check_branch_point(m);
        reg[m.name] = m;
    }
    {
        ModelSpec m;
        m.name = "pi-shapes-compatible";
        m.kind = ModelKind::Algebraic;
        MultiPoly onemz2 = (one - z) * (one - z);
        m.phi = z * z * onemz2 * S * S + (z - one + z.pow(5) - z.pow(6)) * S + z.pow(5);
        m.s0 = 0;
        m.published_radicand = upoly({1, 0, 0, 0, 0, -2, 0, -4, 0, 0, 1});
        m.published_growth = "1.32218";
        check_branch_point(m);
        reg[m.name] = m;
    }
    return reg;
}

const std::map<std::string, ModelSpec>& registry() {
    static const std::map<std::string, ModelSpec> reg = build_registry();
    return reg;
}

}  // namespace

const ModelSpec& get_model(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::ostringstream os;
        os << "unknown model '" << name << "'; available models:";
        for (const auto& [k, v] : reg) os << " " << k;
        throw ModelLookupError(os.str());
    }
    return it->second;
}

const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : registry()) out.push_back(k);
        return out;
    }();
    return names;
}

ModelSpec resolve_model(const std::string& name_or_path) {
    const auto& reg = registry();
    auto it = reg.find(name_or_path);
    if (it != reg.end()) return it->second;
    if (name_or_path.find('.') != std::string::npos ||
        name_or_path.find('/') != std::string::npos)
        return load_model_file(name_or_path);
    return get_model(name_or_path);  // throws with the available-model list
}

}  // namespace rnagrowth
