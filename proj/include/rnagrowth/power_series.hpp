#ifndef RNAGROWTH_POWER_SERIES_HPP
#define RNAGROWTH_POWER_SERIES_HPP

#include <gmpxx.h>

#include <vector>

namespace rnagrowth {

// Truncated formal power series with exact rational coefficients.
// coeff(n) is the coefficient of z^n; order() is the truncation order
// (inclusive). Values are immutable after construction. Operations on two
// series require equal orders; nothing is re-truncated silently.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<mpq_class> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries constant(const mpq_class& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    // Explicit precision changes (never implicit).
    PowerSeries truncated(int order) const;
    PowerSeries extended(int order) const;

    bool operator==(const PowerSeries& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<mpq_class> coeffs_;
};

// alpha*a + beta*b, orders must match.
PowerSeries series_linear_combine(const mpq_class& alpha, const PowerSeries& a,
                                  const mpq_class& beta, const PowerSeries& b);

// Cauchy product c_n = sum_{j<=n} a_j b_{n-j}, truncated at the shared order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse mod z^{order+1}; requires a nonzero constant term.
PowerSeries series_reciprocal(const PowerSeries& a);

}  // namespace rnagrowth

#endif
