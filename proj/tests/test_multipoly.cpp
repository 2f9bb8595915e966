#include <doctest.h>

#include <complex>
#include <random>

#include "rnagrowth/errors.hpp"
#include "rnagrowth/json_io.hpp"
#include "rnagrowth/multipoly.hpp"
#include "rnagrowth/singularity.hpp"

using namespace rnagrowth;

namespace {

const MultiPoly Z = MultiPoly::variable(Var::z);
const MultiPoly S = MultiPoly::variable(Var::S);
const MultiPoly T = MultiPoly::variable(Var::T);
const MultiPoly One = MultiPoly::constant(1);

UniPoly upoly(std::vector<long> ints) {
    std::vector<mpq_class> cs;
    for (long v : ints) cs.emplace_back(v);
    return UniPoly(std::move(cs));
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CHECK((Z + One) * (Z - One) == Z * Z - One);
    MultiPoly p = Z * S + MultiPoly::constant(mpq_class(3, 2)) * T;
    CHECK(p + MultiPoly() == p);
    CHECK(p - p == MultiPoly());
    CHECK((p * MultiPoly()).is_zero());
}

TEST_CASE("quartic radicand from the quadratic norm") {
    MultiPoly base = One - Z + Z * Z;
    MultiPoly radicand = base * base - MultiPoly::constant(4) * Z * Z;
    CHECK(UniPoly::from_multi(radicand) == upoly({1, -2, -1, -2, 1}));
}

TEST_CASE("evaluation") {
    MultiPoly p = Z * Z - One;
    CHECK(p.eval_rational({{Var::z, mpq_class(1)}}) == 0);
    CHECK(p.eval_rational({{Var::z, mpq_class(3, 2)}}) == mpq_class(5, 4));
    CHECK_THROWS_AS(p.eval_rational({{Var::S, mpq_class(1)}}), VariableError);

    UniPoly quartic = upoly({1, -2, -1, -2, 1});
    CHECK(quartic.eval(mpq_class(0)) == 1);
    double root = (3.0 - std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(quartic.eval(std::complex<double>(root, 0.0))) < 1e-10);
}

TEST_CASE("resultant of linear polynomials") {
    MultiPoly a = Z * Z * S + Z;  // arbitrary polynomials in (z, S)
    MultiPoly b = S * S - Z;
    MultiPoly res = resultant(T - a, T - b, Var::T);
    bool matches = (res == a - b) || (res == b - a);
    CHECK(matches);
    CHECK_THROWS_AS(resultant(Z + One, T - a, Var::T), VariableError);
}

TEST_CASE("resultant swap symmetry and root product") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<mpq_class> pc, qc;
        int dp = 2 + trial % 3, dq = 1 + trial % 4;
        for (int i = 0; i < dp; ++i) pc.emplace_back(coeff(rng));
        pc.emplace_back(1 + std::abs(coeff(rng)));
        for (int i = 0; i < dq; ++i) qc.emplace_back(coeff(rng));
        qc.emplace_back(1 + std::abs(coeff(rng)));
        UniPoly p(pc), q(qc);
        if (uni_gcd(p, q).degree() != 0) continue;
        MultiPoly r1 = resultant(p.to_multi(), q.to_multi(), Var::z);
        MultiPoly r2 = resultant(q.to_multi(), p.to_multi(), Var::z);
        MultiPoly expect = ((p.degree() * q.degree()) % 2 == 1) ? -r2 : r2;
        CHECK(r1 == expect);

        // res(p, q) = lc(p)^deg(q) * prod over roots alpha of p of q(alpha)
        RootSet roots = find_roots(p);
        if (static_cast<int>(roots.roots.size()) != p.degree()) continue;
        std::complex<double> prod =
            std::pow(p.coeff(p.degree()).get_d(), static_cast<double>(q.degree()));
        for (const auto& rec : roots.roots) prod *= q.eval(rec.value);
        double expected = r1.constant_value().get_d();
        double scale = std::max(1.0, std::abs(expected));
        CHECK(std::abs(prod.real() - expected) / scale < 1e-6);
        CHECK(std::abs(prod.imag()) / scale < 1e-6);
    }
}

TEST_CASE("discriminants of the registry quadratics") {
    MultiPoly quad = Z * Z * S * S + (Z - One - Z * Z) * S + One;
    CHECK(UniPoly::from_multi(discriminant(quad, Var::S)) == upoly({1, -2, -1, -2, 1}));

    MultiPoly shapes = Z * Z * S * S + (Z * Z - One) * S + Z * Z;
    CHECK(UniPoly::from_multi(discriminant(shapes, Var::S)) == upoly({1, 0, -2, 0, -3}));

    MultiPoly a = Z * Z * T + Z + One;  // any nonzero polynomial works
    MultiPoly square = a * S * S + MultiPoly::constant(2) * a * S + a;
    CHECK(discriminant(square, Var::S).is_zero());

    CHECK_THROWS_AS(discriminant(S + Z, Var::S), DomainError);
}

TEST_CASE("discriminant of a squared polynomial vanishes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 8; ++trial) {
        MultiPoly p = S * S + MultiPoly::constant(coeff(rng)) * Z +
                      MultiPoly::constant(coeff(rng)) * Z * S + MultiPoly::constant(coeff(rng));
        CHECK(discriminant(p * p, Var::S).is_zero());
    }
}

TEST_CASE("square-free part") {
    UniPoly p = upoly({-1, 1}) * upoly({-1, 1}) * upoly({2, 1});  // (z-1)^2 (z+2)
    CHECK(squarefree_part(p) == upoly({-2, 1, 1}));  // (z-1)(z+2) normalized

    UniPoly lambda3_radicand = upoly({1, -2, -1}) * upoly({1, 0, 0, 0, -1});
    CHECK(squarefree_part(lambda3_radicand) == lambda3_radicand.normalized_integer());

    UniPoly compat = upoly({1, 0, 0, 0, 0, -2, 0, -4, 0, 0, 1});
    CHECK(squarefree_part(compat) == compat);
    CHECK(uni_gcd(compat, compat.derivative()).degree() == 0);

    CHECK_THROWS_AS(squarefree_part(UniPoly()), DomainError);
}

TEST_CASE("square-free output is coprime with its derivative") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<mpq_class> cs;
        for (int i = 0; i < 5; ++i) cs.emplace_back(coeff(rng));
        cs.emplace_back(1);
        UniPoly p(cs);
        UniPoly sq = squarefree_part(p * p * upoly({1, 1}));
        CHECK(uni_gcd(sq, sq.derivative()).degree() == 0);
    }
}

TEST_CASE("exact division") {
    auto q1 = exact_divide(One - Z * Z, One - Z);
    REQUIRE(q1.has_value());
    CHECK(*q1 == One + Z);

    auto q2 = exact_divide(Z * Z * S + Z, Z);
    REQUIRE(q2.has_value());
    CHECK(*q2 == Z * S + One);

    CHECK_FALSE(exact_divide(Z * Z + One, Z + One).has_value());

    // discriminant of the compatible-shapes quadratic, divided by its radicand
    MultiPoly b = Z - One + Z.pow(5) - Z.pow(6);
    MultiPoly disc = b * b - MultiPoly::constant(4) * Z.pow(7) * (One - Z) * (One - Z);
    UniPoly radicand = upoly({1, 0, 0, 0, 0, -2, 0, -4, 0, 0, 1});
    auto q3 = uni_exact_divide(UniPoly::from_multi(disc), radicand);
    REQUIRE(q3.has_value());
    CHECK(*q3 == upoly({1, -2, 1}));  // (1-z)^2
}

TEST_CASE("normalization and stripping") {
    UniPoly p = UniPoly(std::vector<mpq_class>{mpq_class(1, 3), mpq_class(-2, 3)});
    CHECK(p.normalized_integer() == upoly({-1, 2}));

    auto [stripped, k] = strip_z_power(upoly({0, 0, 0, 4, 5, -6}));
    CHECK(k == 3);
    CHECK(stripped == upoly({4, 5, -6}));

    auto [rest, m] = strip_one_minus_z(upoly({1, -2, 1}));
    CHECK(m == 2);
    CHECK(rest == upoly({1}));
}

TEST_CASE("polynomial json round trip") {
    MultiPoly p = Z * Z * S - MultiPoly::constant(mpq_class(7, 3)) * T + One;
    CHECK(poly_from_json(poly_to_json(p)) == p);
    json j = poly_to_json(p);
    // canonical order: terms sorted by exponent vector
    CHECK(j[0]["exponents"] == json::array({0, 0, 0}));
}
