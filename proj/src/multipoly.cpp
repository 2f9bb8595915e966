#include "rnagrowth/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "rnagrowth/errors.hpp"

namespace rnagrowth {

const char* var_name(Var v) {
    switch (v) {
        case Var::z: return "z";
        case Var::S: return "S";
        case Var::T: return "T";
    }
    return "?";
}

void MultiPoly::insert_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(const mpq_class& c) {
    MultiPoly p;
    p.insert_term({0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly p;
    Exponents e{0, 0, 0};
    e[static_cast<size_t>(v)] = 1;
    p.insert_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const mpq_class& c,
                              std::initializer_list<std::pair<Var, unsigned>> exps) {
    MultiPoly p;
    Exponents e{0, 0, 0};
    for (const auto& [v, k] : exps) e[static_cast<size_t>(v)] += k;
    p.insert_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

mpq_class MultiPoly::constant_value() const {
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<Var> MultiPoly::vars() const {
    std::array<bool, 3> seen{false, false, false};
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < 3; ++i)
            if (e[i] > 0) seen[i] = true;
    std::vector<Var> out;
    for (size_t i = 0; i < 3; ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

bool MultiPoly::contains(Var v) const { return degree(v) > 0; }

int MultiPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(v)]));
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            r.insert_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    const size_t vi = static_cast<size_t>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        Exponents e2 = e;
        e2[vi] -= 1;
        r.insert_term(e2, c * mpq_class(e[vi]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    const size_t vi = static_cast<size_t>(v);
    std::vector<MultiPoly> out(static_cast<size_t>(degree(v)) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        unsigned k = e2[vi];
        e2[vi] = 0;
        out[k].insert_term(e2, c);
    }
    return out;
}

MultiPoly MultiPoly::leading_coeff(Var v) const {
    auto cs = coefficients_in(v);
    return cs.back();
}

mpq_class MultiPoly::eval_rational(const std::map<Var, mpq_class>& point) const {
    for (Var v : vars())
        if (!point.count(v))
            throw VariableError(std::string("unbound variable ") + var_name(v) +
                                " in polynomial evaluation");
    // power tables per variable
    std::array<std::vector<mpq_class>, 3> pows;
    for (size_t i = 0; i < 3; ++i) {
        int d = degree(static_cast<Var>(i));
        pows[i].assign(static_cast<size_t>(d) + 1, mpq_class(1));
        auto it = point.find(static_cast<Var>(i));
        if (it != point.end())
            for (int k = 1; k <= d; ++k) pows[i][static_cast<size_t>(k)] = pows[i][static_cast<size_t>(k - 1)] * it->second;
    }
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_)
        acc += c * pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]];
    return acc;
}

std::complex<double> MultiPoly::eval_complex(
    const std::map<Var, std::complex<double>>& point) const {
    for (Var v : vars())
        if (!point.count(v))
            throw VariableError(std::string("unbound variable ") + var_name(v) +
                                " in polynomial evaluation");
    std::array<std::vector<std::complex<double>>, 3> pows;
    for (size_t i = 0; i < 3; ++i) {
        int d = degree(static_cast<Var>(i));
        pows[i].assign(static_cast<size_t>(d) + 1, {1.0, 0.0});
        auto it = point.find(static_cast<Var>(i));
        if (it != point.end())
            for (int k = 1; k <= d; ++k) pows[i][static_cast<size_t>(k)] = pows[i][static_cast<size_t>(k - 1)] * it->second;
    }
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_)
        acc += c.get_d() * pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]];
    return acc;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    // sign from the lexicographically greatest term
    if (std::prev(terms_.end())->second * scale < 0) scale = -scale;
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scale);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print high-to-low so the leading term comes first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = e[0] + e[1] + e[2] > 0;
        if (a != 1 || !has_var) os << a.get_str();
        for (size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    MultiPoly q, r = p;
    const auto& lt_d = *std::prev(d.terms().end());
    while (!r.is_zero()) {
        const auto& lt_r = *std::prev(r.terms().end());
        MultiPoly::Exponents e;
        bool divisible = true;
        for (size_t i = 0; i < 3; ++i) {
            if (lt_r.first[i] < lt_d.first[i]) { divisible = false; break; }
            e[i] = lt_r.first[i] - lt_d.first[i];
        }
        if (!divisible) return std::nullopt;
        MultiPoly t;
        t = MultiPoly::monomial(lt_r.second / lt_d.second,
                                {{Var::z, e[0]}, {Var::S, e[1]}, {Var::T, e[2]}});
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    const int m = p.degree(v), n = q.degree(v);
    if (m == 0 || p.is_zero())
        throw VariableError(std::string("resultant: first argument has no ") + var_name(v));
    if (n == 0 || q.is_zero())
        throw VariableError(std::string("resultant: second argument has no ") + var_name(v));
    auto cp = p.coefficients_in(v);
    auto cq = q.coefficients_in(v);
    const int N = m + n;
    std::vector<std::vector<MultiPoly>> M(static_cast<size_t>(N),
                                          std::vector<MultiPoly>(static_cast<size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = cp[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = cq[static_cast<size_t>(n - j)];

    // fraction-free Gaussian elimination (Bareiss); divisions are exact
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(1);
    for (int k = 0; k < N - 1; ++k) {
        if (M[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return MultiPoly();  // singular: resultant 0
            std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                MultiPoly num = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * M[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                                M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
                auto quot = exact_divide(num, prev);
                if (!quot) throw Error("fraction-free elimination: inexact division");
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(*quot);
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] = MultiPoly();
        }
        prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    MultiPoly det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
    return sign < 0 ? -det : det;
}

MultiPoly discriminant(const MultiPoly& p, Var v) {
    const int d = p.degree(v);
    if (d < 2)
        throw DomainError(std::string("discriminant needs degree >= 2 in ") + var_name(v));
    MultiPoly res = resultant(p, p.derivative(v), v);
    auto quot = exact_divide(res, p.leading_coeff(v));
    if (!quot) throw Error("discriminant: leading-coefficient division not exact");
    bool flip = ((d * (d - 1) / 2) % 2) != 0;
    return flip ? -*quot : *quot;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p) {
    std::vector<mpq_class> cs(static_cast<size_t>(p.degree(Var::z)) + 1, mpq_class(0));
    for (const auto& [e, c] : p.terms()) {
        if (e[1] != 0 || e[2] != 0)
            throw VariableError("polynomial is not univariate in z: " + p.to_string());
        cs[e[0]] = c;
    }
    return UniPoly(std::move(cs));
}

const mpq_class& UniPoly::coeff(int i) const {
    static const mpq_class zero(0);
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<mpq_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<mpq_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<mpq_class> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * mpq_class(static_cast<unsigned long>(i));
    return UniPoly(std::move(out));
}

mpq_class UniPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UniPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UniPoly UniPoly::normalized_integer() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (coeffs_.back() * scale < 0) scale = -scale;
    std::vector<mpq_class> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scale;
    return UniPoly(std::move(out));
}

MultiPoly UniPoly::to_multi() const {
    MultiPoly p;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) p = p + MultiPoly::monomial(coeffs_[i], {{Var::z, static_cast<unsigned>(i)}});
    return p;
}

std::string UniPoly::to_string() const { return to_multi().to_string(); }

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        // monic remainder of x by y
        UniPoly r = x;
        while (!r.is_zero() && r.degree() >= y.degree()) {
            mpq_class c = r.coeff(r.degree()) / y.coeff(y.degree());
            int shift = r.degree() - y.degree();
            std::vector<mpq_class> t(static_cast<size_t>(shift) + 1, mpq_class(0));
            t[static_cast<size_t>(shift)] = c;
            r = r - (y * UniPoly(std::move(t)));
        }
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.normalized_integer();
}

std::optional<UniPoly> uni_exact_divide(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return UniPoly();
    if (p.degree() < d.degree()) return std::nullopt;
    std::vector<mpq_class> q(static_cast<size_t>(p.degree() - d.degree()) + 1, mpq_class(0));
    UniPoly r = p;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        mpq_class c = r.coeff(r.degree()) / d.coeff(d.degree());
        int shift = r.degree() - d.degree();
        q[static_cast<size_t>(shift)] = c;
        std::vector<mpq_class> t(static_cast<size_t>(shift) + 1, mpq_class(0));
        t[static_cast<size_t>(shift)] = c;
        r = r - (d * UniPoly(std::move(t)));
    }
    if (!r.is_zero()) return std::nullopt;
    return UniPoly(std::move(q));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    if (p.degree() == 0) return p.normalized_integer();
    UniPoly g = uni_gcd(p, p.derivative());
    if (g.degree() == 0) return p.normalized_integer();
    auto q = uni_exact_divide(p, g);
    if (!q) throw Error("squarefree_part: gcd does not divide its polynomial");
    return q->normalized_integer();
}

std::pair<UniPoly, int> strip_z_power(const UniPoly& p) {
    if (p.is_zero()) return {p, 0};
    int k = 0;
    while (p.coeff(k) == 0) ++k;
    if (k == 0) return {p, 0};
    std::vector<mpq_class> out(p.coeffs().begin() + k, p.coeffs().end());
    return {UniPoly(std::move(out)), k};
}

std::pair<UniPoly, int> strip_one_minus_z(const UniPoly& p) {
    if (p.is_zero()) return {p, 0};
    UniPoly one_minus_z(std::vector<mpq_class>{1, -1});
    UniPoly cur = p;
    int m = 0;
    while (true) {
        auto q = uni_exact_divide(cur, one_minus_z);
        if (!q) break;
        cur = *q;
        ++m;
    }
    return {cur, m};
}

}  // namespace rnagrowth
