#include "rnagrowth/power_series.hpp"

#include "rnagrowth/errors.hpp"

namespace rnagrowth {

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("power series needs at least the constant term");
}

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) throw DomainError("truncation order must be non-negative");
    return PowerSeries(std::vector<mpq_class>(static_cast<size_t>(order) + 1, mpq_class(0)));
}

PowerSeries PowerSeries::constant(const mpq_class& c, int order) {
    PowerSeries s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order < 0 || order > this->order())
        throw DomainError("truncation order out of range");
    return PowerSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::extended(int order) const {
    if (order < this->order()) throw DomainError("extension order below current order");
    std::vector<mpq_class> c = coeffs_;
    c.resize(static_cast<size_t>(order) + 1, mpq_class(0));
    return PowerSeries(std::move(c));
}

static void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()));
}

PowerSeries series_linear_combine(const mpq_class& alpha, const PowerSeries& a,
                                  const mpq_class& beta, const PowerSeries& b) {
    require_same_order(a, b);
    std::vector<mpq_class> out(static_cast<size_t>(a.order()) + 1);
    for (int n = 0; n <= a.order(); ++n)
        out[static_cast<size_t>(n)] = alpha * a.coeff(n) + beta * b.coeff(n);
    return PowerSeries(std::move(out));
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    std::vector<mpq_class> out(static_cast<size_t>(n) + 1, mpq_class(0));
    mpq_class t;
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            t = a.coeff(i) * b.coeff(j);
            out[static_cast<size_t>(i + j)] += t;
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries series_reciprocal(const PowerSeries& a) {
    if (a.coeff(0) == 0) throw DomainError("series has no reciprocal: zero constant term");
    const int n = a.order();
    std::vector<mpq_class> inv(static_cast<size_t>(n) + 1, mpq_class(0));
    mpq_class lead = 1 / a.coeff(0);
    inv[0] = lead;
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += a.coeff(j) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -acc * lead;
    }
    return PowerSeries(std::move(inv));
}

}  // namespace rnagrowth
