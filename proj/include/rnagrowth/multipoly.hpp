#ifndef RNAGROWTH_MULTIPOLY_HPP
#define RNAGROWTH_MULTIPOLY_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rnagrowth {

// The three variables any polynomial here can mention: z is the series
// indeterminate, S the generating function, T an auxiliary series.
enum class Var : int { z = 0, S = 1, T = 2 };

const char* var_name(Var v);

// Exact multivariate polynomial over the rationals in (z, S, T).
// Terms are keyed by exponent vector (e_z, e_S, e_T); zero coefficients are
// never stored. Values are immutable; all operations return new polynomials.
class MultiPoly {
public:
    using Exponents = std::array<unsigned, 3>;
    using TermMap = std::map<Exponents, mpq_class>;

    MultiPoly() = default;  // zero polynomial

    static MultiPoly constant(const mpq_class& c);
    static MultiPoly variable(Var v);
    static MultiPoly monomial(const mpq_class& c,
                              std::initializer_list<std::pair<Var, unsigned>> exps);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_value() const;  // coefficient of the 1 term

    // Variables with a nonzero exponent somewhere, in z < S < T order.
    std::vector<Var> vars() const;
    bool contains(Var v) const;
    int degree(Var v) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly derivative(Var v) const;

    // Coefficients of v^0, v^1, ... as polynomials in the other variables.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    MultiPoly leading_coeff(Var v) const;

    mpq_class eval_rational(const std::map<Var, mpq_class>& point) const;
    std::complex<double> eval_complex(const std::map<Var, std::complex<double>>& point) const;

    // Integer coprime coefficients with a positive lexicographically-leading
    // coefficient; the zero polynomial normalizes to itself.
    MultiPoly normalized() const;

    std::string to_string() const;

private:
    void insert_term(const Exponents& e, const mpq_class& c);
    TermMap terms_;
};

// Quotient p/d when d divides p exactly, std::nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

// Determinant of the Sylvester matrix of p and q with respect to v, computed
// by fraction-free (Bareiss) elimination over the polynomial ring.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);

// (-1)^{d(d-1)/2} resultant(p, dp/dv) / lc_v(p); b^2 - 4ac for quadratics.
MultiPoly discriminant(const MultiPoly& p, Var v);

// Dense exact univariate polynomial in z. coeff(i) multiplies z^i; the
// leading coefficient of a nonzero polynomial is nonzero.
class UniPoly {
public:
    UniPoly() = default;  // zero
    explicit UniPoly(std::vector<mpq_class> coeffs);
    static UniPoly from_multi(const MultiPoly& p);  // requires vars ⊆ {z}

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator+(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // Integer coprime coefficients, positive leading coefficient.
    UniPoly normalized_integer() const;

    MultiPoly to_multi() const;
    std::string to_string() const;

private:
    std::vector<mpq_class> coeffs_;
};

// Monic-remainder Euclid over the rationals; result normalized to integer
// coprime coefficients with positive leading coefficient.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

// Exact quotient when d divides p, std::nullopt otherwise.
std::optional<UniPoly> uni_exact_divide(const UniPoly& p, const UniPoly& d);

// p / gcd(p, p'): same roots, all simple, integer-normalized.
UniPoly squarefree_part(const UniPoly& p);

// Divides out z^k; returns the stripped polynomial and k.
std::pair<UniPoly, int> strip_z_power(const UniPoly& p);

// Divides out (1-z)^m; returns the stripped polynomial and m.
std::pair<UniPoly, int> strip_one_minus_z(const UniPoly& p);

}  // namespace rnagrowth

#endif
