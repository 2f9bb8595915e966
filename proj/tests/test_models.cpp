#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rnagrowth/errors.hpp"
#include "rnagrowth/json_io.hpp"
#include "rnagrowth/models.hpp"

using namespace rnagrowth;

namespace {

const MultiPoly Z = MultiPoly::variable(Var::z);
const MultiPoly S = MultiPoly::variable(Var::S);
const MultiPoly One = MultiPoly::constant(1);

UniPoly upoly(std::vector<long> ints) {
    std::vector<mpq_class> cs;
    for (long v : ints) cs.emplace_back(v);
    return UniPoly(std::move(cs));
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("rnagrowth_model_test.json");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("lambda_phi") {
    CHECK(lambda_phi(2) == Z * Z * S * S + (Z - One - Z * Z) * S + One);
    CHECK(UniPoly::from_multi(discriminant(lambda_phi(3), Var::S)) ==
          upoly({1, -2, -1, 0, -1, 2, 1}));
    CHECK(UniPoly::from_multi(discriminant(lambda_phi(4), Var::S)).degree() == 8);
    CHECK_THROWS_AS(lambda_phi(1), DomainError);
}

TEST_CASE("published lambda radicands factor as expected") {
    // 1 - 2x - x^2 - x^4 + 2x^5 + x^6 == (1 - 2x - x^2)(1 - x^4)
    CHECK(upoly({1, -2, -1}) * upoly({1, 0, 0, 0, -1}) == upoly({1, -2, -1, 0, -1, 2, 1}));
    CHECK(*get_model("lambda3").published_radicand == upoly({1, -2, -1, 0, -1, 2, 1}));
}

TEST_CASE("saturated system eliminates to the cubic") {
    const ModelSpec& m = get_model("saturated");
    MultiPoly cubic = Z.pow(4) * S.pow(3) + Z * Z * (Z * Z - MultiPoly::constant(2)) * S * S +
                      (One - Z * Z) * S - Z * (One + Z);
    REQUIRE(m.phi.has_value());
    bool up_to_sign = (*m.phi == cubic) || (*m.phi == -cubic);
    CHECK(up_to_sign);
    CHECK(m.s0 == 0);
}

TEST_CASE("canonical system discriminant equals the degree-10 radicand") {
    const ModelSpec& m = get_model("canonical");
    REQUIRE(m.phi.has_value());
    MultiPoly disc = discriminant(*m.phi, Var::S);
    UniPoly delta = upoly({1, -2, -1, 4, -1, -8, 3, 6, -2, -4, 1});
    CHECK(UniPoly::from_multi(disc) == delta);
    auto quotient = uni_exact_divide(UniPoly::from_multi(disc), delta);
    REQUIRE(quotient.has_value());
    CHECK(quotient->degree() == 0);
}

TEST_CASE("degenerate system is rejected") {
    ModelSpec sys;
    sys.name = "degenerate";
    sys.kind = ModelKind::System;
    MultiPoly eq = MultiPoly::variable(Var::T) * Z + S;
    sys.eq1 = eq;
    sys.eq2 = eq;
    CHECK_THROWS_AS(eliminate_auxiliary(sys), DegenerateSystemError);
}

TEST_CASE("registry lookups") {
    const ModelSpec& shapes = get_model("pi-shapes");
    CHECK(*shapes.phi == Z * Z * S * S + (Z * Z - One) * S + Z * Z);
    CHECK(shapes.s0 == 0);

    const ModelSpec& l2 = get_model("lambda2");
    CHECK(l2.kind == ModelKind::Recurrence);
    CHECK(l2.lambda == 2);
    CHECK(*l2.phi == lambda_phi(2));

    CHECK_THROWS_WITH_AS(get_model("nosuch"),
                         doctest::Contains("unknown model 'nosuch'"), ModelLookupError);
    try {
        get_model("nosuch");
    } catch (const ModelLookupError& e) {
        CHECK(std::string(e.what()).find("lambda2") != std::string::npos);
        CHECK(std::string(e.what()).find("saturated") != std::string::npos);
    }
}

TEST_CASE("every algebraic preset has a simple branch point at the origin") {
    for (const std::string& name : model_names()) {
        const ModelSpec& m = get_model(name);
        if (!m.has_phi()) continue;
        INFO(name);
        std::map<Var, mpq_class> origin{{Var::z, mpq_class(0)}, {Var::S, m.s0}};
        CHECK(m.phi->eval_rational(origin) == 0);
        CHECK(m.phi->derivative(Var::S).eval_rational(origin) != 0);
    }
}

TEST_CASE("locally-optimal quadratic reproduces its published radicand") {
    const ModelSpec& m = get_model("locally-optimal");
    REQUIRE(m.phi.has_value());
    MultiPoly b = Z.pow(4) + MultiPoly::constant(2) * Z.pow(3) + Z * Z + Z - One;
    MultiPoly P = b * b - MultiPoly::constant(4) * Z.pow(3) * (One + Z) * (One + Z);
    CHECK(UniPoly::from_multi(discriminant(*m.phi, Var::S)) == UniPoly::from_multi(P));
    CHECK(*m.published_radicand == UniPoly::from_multi(P));
}

TEST_CASE("model file ingestion") {
    TempFile f(R"({
        "name": "shapes-copy",
        "kind": "algebraic",
        "s0": "0",
        "counting": true,
        "phi": [
            {"exponents": [0, 1, 0], "coeff": "-1"},
            {"exponents": [2, 0, 0], "coeff": "1"},
            {"exponents": [2, 1, 0], "coeff": "1"},
            {"exponents": [2, 2, 0], "coeff": "1"}
        ]
    })");
    ModelSpec m = load_model_file(f.path);
    CHECK(m.name == "shapes-copy");
    CHECK(*m.phi == *get_model("pi-shapes").phi);
    CHECK(m.counting);
}

TEST_CASE("model file ingestion of a system") {
    TempFile f(R"({
        "name": "saturated-copy",
        "kind": "system",
        "eq1": [
            {"exponents": [1, 0, 0], "coeff": "1"},
            {"exponents": [2, 0, 0], "coeff": "1"},
            {"exponents": [1, 0, 1], "coeff": "1"},
            {"exponents": [2, 0, 1], "coeff": "1"},
            {"exponents": [2, 1, 0], "coeff": "1"},
            {"exponents": [2, 2, 0], "coeff": "1"},
            {"exponents": [0, 1, 0], "coeff": "-1"}
        ],
        "eq2": [
            {"exponents": [2, 1, 0], "coeff": "1"},
            {"exponents": [2, 1, 1], "coeff": "1"},
            {"exponents": [0, 0, 1], "coeff": "-1"}
        ]
    })");
    ModelSpec m = load_model_file(f.path);
    CHECK(m.kind == ModelKind::Algebraic);
    CHECK(*m.phi == *get_model("saturated").phi);
    CHECK(m.s0 == get_model("saturated").s0);
}

TEST_CASE("model file errors") {
    CHECK_THROWS_AS(load_model_file("does_not_exist.json"), ModelFileError);
    TempFile bad(R"({"name": "x", "kind": "quintic"})");
    CHECK_THROWS_AS(load_model_file(bad.path), ModelFileError);
    TempFile nolam(R"({"name": "x", "kind": "recurrence"})");
    CHECK_THROWS_AS(load_model_file(nolam.path), ModelFileError);
}

TEST_CASE("published radicands divide the derived discriminants") {
    // quotient must be a rational constant times powers of z and (1-z)
    for (const std::string& name : model_names()) {
        const ModelSpec& m = get_model(name);
        if (!m.published_radicand || !m.has_phi()) continue;
        INFO(name);
        UniPoly disc = UniPoly::from_multi(discriminant(*m.phi, Var::S));
        auto quotient = uni_exact_divide(disc, *m.published_radicand);
        REQUIRE(quotient.has_value());
        auto [no_z, zk] = strip_z_power(*quotient);
        auto [rest, om] = strip_one_minus_z(no_z);
        CHECK(rest.degree() == 0);
        CHECK(rest.coeff(0) != 0);
    }
}

TEST_CASE("elimination strips spurious content and records it") {
    // multiply one equation by z: the resultant picks up a z^2 content factor
    ModelSpec sys;
    sys.name = "scaled";
    sys.kind = ModelKind::System;
    const MultiPoly T = MultiPoly::variable(Var::T);
    sys.eq1 = Z * (T - S - Z);
    sys.eq2 = T - Z * S;
    ModelSpec m = eliminate_auxiliary(sys);
    // resultant = z(zS - S - z) up to sign; the content factor z is stripped
    REQUIRE(m.phi.has_value());
    CHECK_FALSE(exact_divide(*m.phi, Z).has_value());
    bool noted = false;
    for (const auto& note : m.notes) noted = noted || note.find("stripped content z") == 0;
    CHECK(noted);
}
