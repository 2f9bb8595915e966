#include "rnagrowth/rational_io.hpp"

#include <cctype>
#include <stdexcept>

#include "rnagrowth/errors.hpp"

namespace rnagrowth {

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error("bad rational literal: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& value) {
    return value.get_str();
}

mpq_class pow10_exact(int exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? mpq_class(p) : mpq_class(1, p);
}

std::string format_decimal(const mpq_class& value, int frac_digits) {
    if (frac_digits < 1) throw Error("frac_digits must be >= 1");
    mpq_class scaled = value * pow10_exact(frac_digits);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    // round half to even on the fractional remainder r/den
    mpz_class twice = 2 * r;
    int c = cmp(twice, mpz_class(scaled.get_den()));
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    bool negative = q < 0;
    mpz_class a = abs(q);
    mpz_class ten_d = pow10_exact(frac_digits).get_num();
    mpz_class ipart = a / ten_d;
    mpz_class fpart = a % ten_d;
    std::string frac = fpart.get_str();
    frac.insert(0, static_cast<size_t>(frac_digits) - frac.size(), '0');
    return (negative ? "-" : "") + ipart.get_str() + "." + frac;
}

}  // namespace rnagrowth
