#include "rnagrowth/counting.hpp"

#include <algorithm>

#include "rnagrowth/errors.hpp"

namespace rnagrowth {

CountSequence recurrence_counts(int lambda, int n_max) {
    if (lambda < 2) throw DomainError("lambda must be >= 2");
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    CountSequence out;
    out.model = "lambda" + std::to_string(lambda);
    out.n_max = n_max;
    out.values.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n <= lambda) {
            out.values.emplace_back(1);
            continue;
        }
        mpz_class total = out.values[static_cast<size_t>(n - 1)];
        for (int j = 0; j <= n - 1 - lambda; ++j)
            total += out.values[static_cast<size_t>(n - 2 - j)] * out.values[static_cast<size_t>(j)];
        out.values.push_back(std::move(total));
    }
    return out;
}

CountSequence wc_primary_counts(int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    CountSequence out;
    out.model = "primary-wc";
    out.n_max = n_max;
    out.values.emplace_back(1);
    mpz_class a = 1, c = 1, g = 1, u = 1;  // strings starting with A, C, G, U
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            mpz_class a2 = u, c2 = g, g2 = c + u, u2 = a + g;
            a = a2; c = c2; g = g2; u = u2;
        }
        out.values.push_back(a + c + g + u);
    }
    return out;
}

mpz_class unrestricted_primary(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, static_cast<unsigned long>(n));
    return r;
}

namespace {

// backtracking over arc sets; arcs stored as (lo, hi) with pairwise checks
struct OracleState {
    int n, lambda;
    std::vector<std::pair<int, int>> arcs;
    std::vector<bool> used;

    bool crosses(int i, int j) const {
        for (const auto& [a, b] : arcs)
            if ((a < i && i < b && b < j) || (i < a && a < j && j < b)) return true;
        return false;
    }

    mpz_class count_from(int p) {
        if (p > n) return 1;
        mpz_class total = count_from(p + 1);  // p stays unpaired
        if (!used[static_cast<size_t>(p)]) {
            for (int q = p + lambda; q <= n; ++q) {
                if (used[static_cast<size_t>(q)] || crosses(p, q)) continue;
                used[static_cast<size_t>(p)] = used[static_cast<size_t>(q)] = true;
                arcs.emplace_back(p, q);
                total += count_from(p + 1);
                arcs.pop_back();
                used[static_cast<size_t>(p)] = used[static_cast<size_t>(q)] = false;
            }
        }
        return total;
    }
};

}  // namespace

mpz_class oracle_count(int n, int lambda, int cap) {
    if (n < 0) throw DomainError("n must be >= 0");
    if (lambda < 2) throw DomainError("lambda must be >= 2");
    if (n > cap)
        throw ResourceLimitError("oracle n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
    OracleState st;
    st.n = n;
    st.lambda = lambda;
    st.used.assign(static_cast<size_t>(n) + 1, false);
    return st.count_from(1);
}

namespace {

PowerSeries poly_as_series(const UniPoly& p, int order) {
    std::vector<mpq_class> cs(static_cast<size_t>(order) + 1, mpq_class(0));
    for (int i = 0; i <= std::min(order, p.degree()); ++i) cs[static_cast<size_t>(i)] = p.coeff(i);
    return PowerSeries(std::move(cs));
}

PowerSeries eval_phi_on_series(const std::vector<UniPoly>& coeffs, const PowerSeries& s) {
    const int order = s.order();
    PowerSeries acc = poly_as_series(coeffs.back(), order);
    for (auto it = std::next(coeffs.rbegin()); it != coeffs.rend(); ++it)
        acc = series_linear_combine(1, series_mul(acc, s), 1, poly_as_series(*it, order));
    return acc;
}

std::vector<UniPoly> phi_coefficients(const MultiPoly& phi) {
    if (phi.contains(Var::T))
        throw VariableError("implicit equation must not involve the auxiliary variable T");
    std::vector<UniPoly> out;
    for (const MultiPoly& c : phi.coefficients_in(Var::S)) out.push_back(UniPoly::from_multi(c));
    return out;
}

}  // namespace

PowerSeries substitute_series(const MultiPoly& phi, const PowerSeries& s) {
    return eval_phi_on_series(phi_coefficients(phi), s);
}

PowerSeries implicit_series(const ModelSpec& model, int n_max) {
    if (!model.phi) throw DomainError("model '" + model.name + "' has no implicit equation");
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    check_branch_point(model);

    const auto coeffs = phi_coefficients(*model.phi);
    std::vector<UniPoly> dcoeffs;  // coefficients of dphi/dS
    for (size_t k = 1; k < coeffs.size(); ++k) {
        std::vector<mpq_class> cs = coeffs[k].coeffs();
        for (auto& c : cs) c *= mpq_class(static_cast<unsigned long>(k));
        dcoeffs.emplace_back(std::move(cs));
    }

    PowerSeries s = PowerSeries::constant(model.s0, 0);
    int prec = 0;  // s is correct mod z^{prec+1}
    while (prec < n_max) {
        prec = std::min(2 * prec + 1, n_max);
        s = s.extended(prec);
        PowerSeries value = eval_phi_on_series(coeffs, s);
        PowerSeries slope = eval_phi_on_series(dcoeffs, s);
        PowerSeries correction = series_mul(value, series_reciprocal(slope));
        s = series_linear_combine(1, s, -1, correction);
    }

    if (model.counting) {
        for (int n = 0; n <= n_max; ++n) {
            const mpq_class& c = s.coeff(n);
            if (c.get_den() != 1 || c < 0)
                throw ModelInconsistencyError("model '" + model.name + "': coefficient of z^" +
                                              std::to_string(n) + " is " + c.get_str() +
                                              ", not a non-negative integer");
        }
    }
    return s;
}

CountSequence model_counts(const ModelSpec& model, int n_max) {
    switch (model.kind) {
        case ModelKind::Recurrence: {
            CountSequence c = recurrence_counts(model.lambda, n_max);
            c.model = model.name;
            return c;
        }
        case ModelKind::PrimaryFree: {
            CountSequence out;
            out.model = model.name;
            out.n_max = n_max;
            mpz_class v = 1;
            for (int n = 0; n <= n_max; ++n) {
                out.values.push_back(v);
                v *= 4;
            }
            return out;
        }
        case ModelKind::PrimaryWc: {
            CountSequence c = wc_primary_counts(n_max);
            c.model = model.name;
            return c;
        }
        case ModelKind::Algebraic:
        case ModelKind::System: {
            PowerSeries s = implicit_series(model, n_max);
            CountSequence out;
            out.model = model.name;
            out.n_max = n_max;
            for (int n = 0; n <= n_max; ++n) {
                const mpq_class& c = s.coeff(n);
                if (c.get_den() != 1)
                    throw ModelInconsistencyError("model '" + model.name +
                                                  "': non-integer coefficient at n=" +
                                                  std::to_string(n));
                out.values.push_back(c.get_num());
            }
            return out;
        }
    }
    throw DomainError("unhandled model kind");
}

}  // namespace rnagrowth
