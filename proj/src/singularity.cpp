#include "rnagrowth/singularity.hpp"

#include <algorithm>
#include <cmath>

#include "rnagrowth/errors.hpp"
#include "rnagrowth/rational_io.hpp"

namespace rnagrowth {

namespace {

std::vector<std::complex<double>> monic_coeffs(const UniPoly& p) {
    const int n = p.degree();
    std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
    mpq_class lc = p.coeff(n);
    for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = mpq_class(p.coeff(i) / lc).get_d();
    return a;
}

std::complex<double> horner(const std::vector<std::complex<double>>& a, std::complex<double> x) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> horner_deriv(const std::vector<std::complex<double>>& a,
                                  std::complex<double> x) {
    std::complex<double> acc{0.0, 0.0};
    for (size_t k = a.size() - 1; k >= 1; --k) acc = acc * x + a[k] * static_cast<double>(k);
    return acc;
}

// Durand-Kerner simultaneous iteration on the monic polynomial.
bool durand_kerner(const std::vector<std::complex<double>>& a,
                   std::vector<std::complex<double>>& w, double tol, int max_iterations) {
    const size_t n = w.size();
    for (int it = 0; it < max_iterations; ++it) {
        double max_step = 0.0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> denom{1.0, 0.0};
            for (size_t j = 0; j < n; ++j)
                if (j != i) denom *= (w[i] - w[j]);
            if (std::abs(denom) == 0.0) return false;
            std::complex<double> step = horner(a, w[i]) / denom;
            w[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(w[i])));
        }
        if (max_step < tol) return true;
    }
    return false;
}

// Aberth-Ehrlich iteration, used when Durand-Kerner stalls.
bool aberth(const std::vector<std::complex<double>>& a, std::vector<std::complex<double>>& w,
            double tol, int max_iterations) {
    const size_t n = w.size();
    for (int it = 0; it < max_iterations; ++it) {
        double max_step = 0.0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> pv = horner(a, w[i]);
            std::complex<double> dv = horner_deriv(a, w[i]);
            if (std::abs(dv) == 0.0) {
                w[i] += std::complex<double>(tol, tol);
                continue;
            }
            std::complex<double> newton = pv / dv;
            std::complex<double> sum{0.0, 0.0};
            for (size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (w[i] - w[j]);
            std::complex<double> step = newton / (1.0 - newton * sum);
            w[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(w[i])));
        }
        if (max_step < tol) return true;
    }
    return false;
}

int sign_of(const mpq_class& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Exact bracket around an approximate real root: widen until a sign change
// (or an exact zero) appears, then bisect down to `width`.
std::optional<std::pair<mpq_class, mpq_class>> certify_real(const UniPoly& poly, double x,
                                                            double gap, const mpq_class& width) {
    double delta = std::max(1e-13, 1e-10 * std::max(1.0, std::fabs(x)));
    const double delta_cap = std::max(delta, gap / 3.0);
    for (; delta <= delta_cap * 1.0001; delta *= 16.0) {
        mpq_class lo(x - delta), hi(x + delta);
        int slo = sign_of(poly.eval(lo));
        int shi = sign_of(poly.eval(hi));
        if (slo == 0) return std::make_pair(lo, lo);
        if (shi == 0) return std::make_pair(hi, hi);
        if (slo * shi > 0) continue;
        while (hi - lo > width) {
            mpq_class mid = (lo + hi) / 2;
            int sm = sign_of(poly.eval(mid));
            if (sm == 0) return std::make_pair(mid, mid);
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
        return std::make_pair(lo, hi);
    }
    return std::nullopt;
}

}  // namespace

RootSet find_roots(const UniPoly& p, double tol, int max_iterations) {
    if (p.is_zero() || p.degree() < 1)
        throw DomainError("find_roots needs a nonzero polynomial of degree >= 1");
    RootSet rs;
    rs.input = p.normalized_integer();
    rs.poly = squarefree_part(p);

    const auto a = monic_coeffs(rs.poly);
    const size_t n = static_cast<size_t>(rs.poly.degree());

    double radius = 0.0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius += 1.0;
    std::vector<std::complex<double>> w(n);
    for (size_t k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.93411;
        w[k] = radius * std::complex<double>(std::cos(angle), std::sin(angle));
    }

    bool ok = durand_kerner(a, w, tol, max_iterations);
    if (!ok) ok = aberth(a, w, tol, max_iterations);
    if (!ok) {
        size_t best = 0;
        double best_res = std::abs(horner(a, w[0]));
        for (size_t i = 1; i < n; ++i) {
            double r = std::abs(horner(a, w[i]));
            if (r < best_res) { best_res = r; best = i; }
        }
        throw ConvergenceError("root iteration did not converge within " +
                                   std::to_string(max_iterations) + " iterations",
                               w[best], best_res);
    }

    // Newton polish
    for (auto& root : w) {
        for (int it = 0; it < 4; ++it) {
            std::complex<double> dv = horner_deriv(a, root);
            if (std::abs(dv) < 1e-300) break;
            std::complex<double> step = horner(a, root) / dv;
            if (std::abs(step) > 1e-3) break;
            root -= step;
        }
    }
    std::sort(w.begin(), w.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    UniPoly mult_gcd = uni_gcd(rs.input, rs.input.derivative());
    std::vector<std::complex<double>> gm;
    if (mult_gcd.degree() >= 1) gm = monic_coeffs(mult_gcd);

    const mpq_class cert_width = mpq_class(tol) > 0 ? mpq_class(tol) : mpq_class(1, 1000000);
    for (size_t i = 0; i < n; ++i) {
        RootRecord rec;
        rec.value = w[i];
        rec.residual = std::abs(horner(a, w[i]));
        if (!gm.empty()) rec.multiple = std::abs(horner(gm, w[i])) < 1e-6;
        if (std::abs(w[i].imag()) <= 1e-8 * std::max(1.0, std::abs(w[i].real()))) {
            double gap = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < n; ++j)
                if (j != i) gap = std::min(gap, std::abs(w[i] - w[j]));
            if (!std::isfinite(gap)) gap = 1.0;
            auto bracket = certify_real(rs.poly, w[i].real(), gap, cert_width);
            if (bracket) {
                rec.certified_real = true;
                rec.bracket_lo = bracket->first;
                rec.bracket_hi = bracket->second;
                mpq_class mid = (rec.bracket_lo + rec.bracket_hi) / 2;
                rec.value = {mid.get_d(), 0.0};
                rec.residual = std::abs(horner(a, rec.value));
            }
        }
        rs.roots.push_back(std::move(rec));
    }
    return rs;
}

void refine_bracket(const UniPoly& poly, mpq_class& lo, mpq_class& hi, const mpq_class& width) {
    if (lo == hi) return;
    int slo = sign_of(poly.eval(lo));
    auto too_wide = [&]() {
        if (hi - lo > width) return true;
        // reciprocal width matters because growth = 1/R is reported too
        if (lo > 0 || hi < 0) return mpq_class(1) / lo - mpq_class(1) / hi > width;
        return false;
    };
    while (too_wide()) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign_of(poly.eval(mid));
        if (sm == 0) {
            lo = hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

DominantResult dominant_singularity(const std::vector<RootSet>& candidates, Strategy strategy,
                                    double tie_tol) {
    int best_set = -1, best_root = -1;
    double best = 0.0;
    if (strategy == Strategy::PositiveReal) {
        for (size_t s = 0; s < candidates.size(); ++s) {
            const auto& set = candidates[s];
            for (size_t r = 0; r < set.roots.size(); ++r) {
                const auto& rec = set.roots[r];
                if (!rec.certified_real || rec.bracket_lo <= 0) continue;
                double v = rec.value.real();
                if (best_set < 0 || v < best) {
                    best = v;
                    best_set = static_cast<int>(s);
                    best_root = static_cast<int>(r);
                }
            }
        }
        if (best_set < 0)
            throw StrategyError(
                "no certified positive real root; retry with the min-modulus strategy");
    } else {
        for (size_t s = 0; s < candidates.size(); ++s) {
            const auto& set = candidates[s];
            for (size_t r = 0; r < set.roots.size(); ++r) {
                double v = std::abs(set.roots[r].value);
                if (v < 1e-300) continue;
                if (best_set < 0 || v < best) {
                    best = v;
                    best_set = static_cast<int>(s);
                    best_root = static_cast<int>(r);
                }
            }
        }
        if (best_set < 0) throw DomainError("no roots to select from");
    }

    const RootRecord& chosen =
        candidates[static_cast<size_t>(best_set)].roots[static_cast<size_t>(best_root)];
    DominantResult out;
    out.set_index = best_set;
    out.root_index = best_root;
    out.strategy = strategy == Strategy::PositiveReal ? "positive-real" : "min-modulus";
    out.value = strategy == Strategy::PositiveReal ? chosen.value.real() : std::abs(chosen.value);
    if (chosen.certified_real) {
        out.certified = true;
        if (chosen.bracket_lo >= 0) {
            out.lo = chosen.bracket_lo;
            out.hi = chosen.bracket_hi;
        } else {  // modulus of a certified negative root
            out.lo = -chosen.bracket_hi;
            out.hi = -chosen.bracket_lo;
        }
    }
    for (const auto& set : candidates)
        for (const auto& rec : set.roots)
            if (std::fabs(std::abs(rec.value) - out.value) <= tie_tol) ++out.tie_count;
    return out;
}

DominantResult dominant_singularity(const RootSet& roots, Strategy strategy, double tie_tol) {
    return dominant_singularity(std::vector<RootSet>{roots}, strategy, tie_tol);
}

namespace {

double log2_mpz(const mpz_class& v) {
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::fabs(d)) + static_cast<double>(exp);
}

}  // namespace

RootTestReport root_test(const CountSequence& counts, double growth, double rel_tol) {
    if (counts.n_max < 10)
        throw InsufficientDataError("root test needs counts up to n >= 10, got n_max=" +
                                    std::to_string(counts.n_max));
    if (!(growth > 1.0)) throw DomainError("root test needs growth > 1");
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");

    RootTestReport rep;
    rep.n_used = counts.n_max;
    std::vector<int> nonzero;
    for (int n = 1; n <= counts.n_max; ++n) {
        const mpz_class& v = counts.values[static_cast<size_t>(n)];
        if (v == 0) continue;
        nonzero.push_back(n);
        double nth = std::exp2(log2_mpz(v) / static_cast<double>(n));
        if (nth > rep.max_nth_root) {
            rep.max_nth_root = nth;
            rep.max_at = n;
        }
    }
    if (nonzero.size() < 2)
        throw InsufficientDataError("root test needs at least two nonzero counts");
    int a = nonzero[nonzero.size() - 1], b = nonzero[nonzero.size() - 2];
    rep.ratio_span = a - b;
    const mpz_class& va = counts.values[static_cast<size_t>(a)];
    const mpz_class& vb = counts.values[static_cast<size_t>(b)];
    rep.final_ratio = std::exp2((log2_mpz(va) - log2_mpz(vb)) / static_cast<double>(a - b));

    bool bound_ok = rep.max_nth_root <= growth * (1.0 + rel_tol);
    bool ratio_ok = std::fabs(rep.final_ratio - growth) <= rel_tol * growth;
    rep.pass = bound_ok && ratio_ok;
    return rep;
}

GrowthReport growth_report(const ModelSpec& model, int n_validate, int digits, double rel_tol,
                           Strategy strategy) {
    if (digits < 1 || digits > 30) throw DomainError("digits must be in [1, 30]");
    GrowthReport rep;
    rep.model = model.name;
    rep.published_growth = model.published_growth;
    rep.notes = model.notes;

    if (model.published_radicand) {
        rep.radicand = model.published_radicand->normalized_integer();
        rep.radicand_source = "published";
    } else if (model.phi) {
        MultiPoly disc = discriminant(*model.phi, Var::S);
        UniPoly d = UniPoly::from_multi(disc);
        auto [d1, zk] = strip_z_power(d);
        if (zk > 0) rep.notes.push_back("radicand: stripped z^" + std::to_string(zk));
        auto [d2, om] = strip_one_minus_z(d1);
        if (om > 0) rep.notes.push_back("radicand: stripped (1-z)^" + std::to_string(om));
        UniPoly sf = squarefree_part(d2);
        if (sf.degree() < d2.degree())
            rep.notes.push_back("radicand: removed square factors (degree " +
                                std::to_string(d2.degree()) + " -> " +
                                std::to_string(sf.degree()) + ")");
        rep.radicand = sf;
        rep.radicand_source = "derived";
    } else if (model.singular_poly) {
        rep.radicand = model.singular_poly->normalized_integer();
        rep.radicand_source = "denominator";
    } else {
        throw DomainError("model '" + model.name + "' has no singularity polynomial");
    }

    rep.candidates = find_roots(rep.radicand);
    std::vector<RootSet> sets{rep.candidates};

    // roots of the leading coefficient of phi in S are branch-point
    // candidates too; z = 0 is excluded (every series here has positive radius)
    if (model.phi) {
        UniPoly lc = UniPoly::from_multi(model.phi->leading_coeff(Var::S));
        auto [lc_stripped, zk] = strip_z_power(lc);
        if (lc_stripped.degree() >= 1) {
            rep.lc_candidates = find_roots(squarefree_part(lc_stripped));
            sets.push_back(*rep.lc_candidates);
        }
    }

    DominantResult dom = dominant_singularity(sets, strategy);
    rep.tie_count = dom.tie_count;
    if (dom.certified) {
        // report digits come from the exact bracket, not from the float root
        const UniPoly& owner = sets[static_cast<size_t>(dom.set_index)].poly;
        const RootRecord& chosen =
            sets[static_cast<size_t>(dom.set_index)].roots[static_cast<size_t>(dom.root_index)];
        mpq_class width = pow10_exact(-(digits + 3));
        mpq_class blo = chosen.bracket_lo, bhi = chosen.bracket_hi;
        refine_bracket(owner, blo, bhi, width);
        mpq_class lo = blo, hi = bhi;
        if (bhi < 0) {  // min-modulus may certify a negative root; report its modulus
            lo = -bhi;
            hi = -blo;
        }
        mpq_class mid = (lo + hi) / 2;
        mpq_class growth_mid;
        if (lo == hi)
            growth_mid = mpq_class(1) / mid;
        else
            growth_mid = (mpq_class(1) / lo + mpq_class(1) / hi) / 2;
        rep.R = format_decimal(mid, digits);
        rep.growth = format_decimal(growth_mid, digits);
        rep.R_value = mid.get_d();
        rep.growth_value = growth_mid.get_d();
    } else {
        rep.R_value = dom.value;
        rep.growth_value = 1.0 / dom.value;
        rep.R = format_decimal(mpq_class(rep.R_value), digits);
        rep.growth = format_decimal(mpq_class(rep.growth_value), digits);
        rep.notes.push_back("dominant singularity is not a certified real root");
    }

    CountSequence counts = model_counts(model, n_validate);
    rep.root_test = root_test(counts, rep.growth_value, rel_tol);
    rep.certified = dom.certified && rep.root_test.pass;

    if (rep.published_growth) {
        double pub = std::stod(*rep.published_growth);
        rep.published_rel_error = std::fabs(rep.growth_value - pub) / pub;
    }
    return rep;
}

}  // namespace rnagrowth
