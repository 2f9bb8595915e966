#include <doctest.h>

#include "rnagrowth/counting.hpp"
#include "rnagrowth/errors.hpp"
#include "rnagrowth/models.hpp"

using namespace rnagrowth;

namespace {

std::vector<long> values_of(const CountSequence& c) {
    std::vector<long> out;
    for (const auto& v : c.values) out.push_back(v.get_si());
    return out;
}

}  // namespace

TEST_CASE("lambda recurrence prefixes") {
    CHECK(values_of(recurrence_counts(2, 6)) == std::vector<long>{1, 1, 1, 2, 4, 8, 17});
    CHECK(recurrence_counts(2, 7).values[7] == 37);
    CHECK(recurrence_counts(3, 4).values[4] == 2);
    CHECK_THROWS_AS(recurrence_counts(1, 5), DomainError);
    CHECK_THROWS_AS(recurrence_counts(2, -1), DomainError);
}

TEST_CASE("lambda recurrence is monotone") {
    for (int lambda : {2, 3, 4}) {
        CountSequence c = recurrence_counts(lambda, 40);
        for (int n = 1; n <= 40; ++n)
            CHECK(c.values[static_cast<size_t>(n)] >= c.values[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("watson-crick primary counts") {
    CountSequence c = wc_primary_counts(3);
    CHECK(c.values[1] == 4);
    CHECK(c.values[2] == 6);
    CHECK(c.values[3] == 10);
    CHECK_THROWS_AS(wc_primary_counts(0), DomainError);
}

TEST_CASE("watson-crick counts stay below the unrestricted count") {
    CountSequence c = wc_primary_counts(40);
    for (int n = 1; n <= 40; ++n)
        CHECK(c.values[static_cast<size_t>(n)] <= unrestricted_primary(n));
}

TEST_CASE("unrestricted primary counts") {
    CHECK(unrestricted_primary(1) == 4);
    CHECK(unrestricted_primary(2) == 16);
    CHECK(unrestricted_primary(10) == 1048576);
    CHECK_THROWS_AS(unrestricted_primary(0), DomainError);
}

TEST_CASE("brute-force oracle") {
    CHECK(oracle_count(2, 2) == 1);
    CHECK(oracle_count(3, 2) == 2);
    CHECK(oracle_count(6, 2) == 17);
    CHECK(oracle_count(0, 2) == 1);  // the empty arc set
    CHECK_THROWS_AS(oracle_count(15, 2), ResourceLimitError);
    CHECK_THROWS_AS(oracle_count(4, 1), DomainError);
    CHECK(oracle_count(15, 2, 16) > 0);  // the cap is configurable
}

TEST_CASE("three-way agreement between oracle, recurrence, and series") {
    for (int lambda : {2, 3, 4}) {
        ModelSpec model = get_model("lambda" + std::to_string(lambda));
        CountSequence rec = recurrence_counts(lambda, 12);
        PowerSeries ser = implicit_series(model, 12);
        for (int n = 0; n <= 12; ++n) {
            INFO("lambda=", lambda, " n=", n);
            mpz_class oc = oracle_count(n, lambda);
            CHECK(oc == rec.values[static_cast<size_t>(n)]);
            CHECK(mpq_class(oc) == ser.coeff(n));
        }
    }
}

TEST_CASE("implicit series for the trivial equation S = z") {
    ModelSpec m;
    m.name = "identity";
    m.kind = ModelKind::Algebraic;
    m.phi = MultiPoly::variable(Var::S) - MultiPoly::variable(Var::z);
    m.s0 = 0;
    PowerSeries s = implicit_series(m, 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == (n == 1 ? 1 : 0));
}

TEST_CASE("implicit series of the shape equation") {
    PowerSeries s = implicit_series(get_model("pi-shapes"), 8);
    std::vector<long> expected{0, 0, 1, 0, 1, 0, 2, 0, 4};
    for (int n = 0; n <= 8; ++n) CHECK(s.coeff(n) == expected[static_cast<size_t>(n)]);
}

TEST_CASE("series substituted back into its equation vanishes") {
    for (const std::string& name : model_names()) {
        const ModelSpec& m = get_model(name);
        if (!m.has_phi()) continue;
        INFO(name);
        PowerSeries s = implicit_series(m, 60);
        PowerSeries residual = substitute_series(*m.phi, s);
        for (int n = 0; n <= 60; ++n) CHECK(residual.coeff(n) == 0);
    }
}

TEST_CASE("counting series coefficients are non-negative integers up to n = 60") {
    for (const std::string& name : {"saturated", "canonical"}) {
        PowerSeries s = implicit_series(get_model(name), 60);
        for (int n = 0; n <= 60; ++n) {
            CHECK(s.coeff(n).get_den() == 1);
            CHECK(s.coeff(n) >= 0);
        }
    }
}

TEST_CASE("known prefixes of the eliminated systems") {
    PowerSeries sat = implicit_series(get_model("saturated"), 12);
    std::vector<long> sat_expected{0, 1, 1, 1, 3, 5, 8, 18, 36, 68, 145, 305, 624};
    for (int n = 0; n <= 12; ++n) CHECK(sat.coeff(n) == sat_expected[static_cast<size_t>(n)]);

    PowerSeries can = implicit_series(get_model("canonical"), 12);
    std::vector<long> can_expected{0, 1, 1, 1, 1, 2, 4, 8, 14, 23, 38, 65, 117};
    for (int n = 0; n <= 12; ++n) CHECK(can.coeff(n) == can_expected[static_cast<size_t>(n)]);
}

TEST_CASE("branch preconditions are enforced") {
    ModelSpec m;
    m.name = "double-root";
    m.kind = ModelKind::Algebraic;
    const MultiPoly S = MultiPoly::variable(Var::S);
    m.phi = S * S - MultiPoly::variable(Var::z);
    m.s0 = 0;
    CHECK_THROWS_AS(implicit_series(m, 5), BranchAmbiguityError);

    ModelSpec off;
    off.name = "off-curve";
    off.kind = ModelKind::Algebraic;
    off.phi = S - MultiPoly::constant(1);
    off.s0 = 0;
    CHECK_THROWS_AS(implicit_series(off, 5), BranchAmbiguityError);
}

TEST_CASE("counting models reject negative coefficients") {
    ModelSpec m;
    m.name = "negative";
    m.kind = ModelKind::Algebraic;
    m.phi = MultiPoly::variable(Var::S) + MultiPoly::variable(Var::z);  // S = -z
    m.s0 = 0;
    m.counting = true;
    CHECK_THROWS_AS(implicit_series(m, 5), ModelInconsistencyError);
    m.counting = false;
    PowerSeries s = implicit_series(m, 5);
    CHECK(s.coeff(1) == -1);
}

TEST_CASE("model_counts dispatch") {
    CHECK(model_counts(get_model("primary-free"), 5).values[5] == 1024);
    CHECK(model_counts(get_model("primary-wc"), 2).values[2] == 6);
    CHECK(model_counts(get_model("lambda2"), 6).values[6] == 17);
    CHECK(model_counts(get_model("pi-shapes"), 8).values[8] == 4);
}
