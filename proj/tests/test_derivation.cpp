#include "doctest.h"

#include "logdiv/derivation.hpp"
#include "logdiv/parser.hpp"
#include "test_util.hpp"

using namespace logdiv;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X123 = {"x1", "x2", "x3"};

Derivation D(const std::vector<std::string> &coeffs, const std::vector<std::string> &vars) {
    std::vector<Series> c;
    for (const auto &e : coeffs)
        c.push_back(parse_series(e, vars));
    return Derivation(std::move(c));
}

Series P(const std::string &t, const std::vector<std::string> &vars = XY) {
    return parse_series(t, vars);
}
} // namespace

TEST_CASE("apply") {
    CHECK(D({"2*x", "3*y"}, XY).apply(P("x^3 - y^2")) == P("6*x^3 - 6*y^2"));
    Series f = parse_series("(x1^3 - x2^3)*x3", X123);
    CHECK(D({"x1", "x2", "0"}, X123).apply(f) == Rat(3) * f);
    CHECK(D({"y", "0"}, XY).apply(P("y")).is_zero());
}

TEST_CASE("apply keeps order-k validity for singular derivations") {
    Series f = P("x^3 - y^2").truncated(5);
    Series g = D({"2*x", "3*y"}, XY).apply(f);
    CHECK(g.truncation() == 5);
    CHECK(g == P("6*x^3 - 6*y^2").truncated(5));
    // non-singular derivation genuinely loses one order
    Series h = D({"1", "0"}, XY).apply(f);
    CHECK(h.truncation() == 4);
}

TEST_CASE("bracket") {
    Derivation a = D({"x", "0"}, XY);
    Derivation b = D({"0", "y^2"}, XY);
    CHECK(bracket(a, b).is_zero());
    CHECK(bracket(D({"1", "0"}, XY), D({"x", "0"}, XY)) == D({"1", "0"}, XY));
    CHECK(bracket(D({"0", "x"}, XY), D({"y", "0"}, XY)) == D({"x", "-y"}, XY));
    CHECK_THROWS_AS(bracket(D({"1", "0"}, XY).truncated(4), D({"x", "0"}, XY)),
                    std::invalid_argument);
}

TEST_CASE("graded_part") {
    Derivation d = D({"1 + x + x^2", "0"}, XY);
    CHECK(graded_part(d, 0) == D({"x", "0"}, XY));
    CHECK(graded_part(d, -1) == D({"1", "0"}, XY));
    CHECK(graded_part(D({"x", "y^2"}, XY), 1) == D({"0", "y^2"}, XY));
    CHECK(graded_part(D({"y", "0"}, XY), -1).is_zero());
}

TEST_CASE("is_singular") {
    CHECK(is_singular(D({"x", "0"}, XY)));
    CHECK(!is_singular(D({"1", "0"}, XY)));
    CHECK(is_singular(D({"y", "x^2"}, XY)));
}

TEST_CASE("trace") {
    CHECK(trace(D({"-x1", "-x2", "3*x3"}, X123)) == 1);
    CHECK(trace(D({"y", "0"}, XY)) == 0);
    CHECK(trace(D({"2*x", "3*y"}, XY)) == 5);
    CHECK_THROWS_AS(trace(D({"1", "0"}, XY)), std::domain_error);
}

TEST_CASE("linear part matches its declared reconstruction") {
    testutil::Rng rng(4001);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 3, 5, false);
        RatMatrix a = linear_part(d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(a.at(i, j) == d.coeff(j).coeff(Monomial::var(n, i)));
    }
}

TEST_CASE("Leibniz rule (property)") {
    testutil::Rng rng(90210);
    for (int t = 0; t < 150; ++t) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 3, 4, false);
        Series f = rng.poly(n, 4, 5);
        Series g = rng.poly(n, 4, 5);
        CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    }
}

TEST_CASE("Jacobi identity (property)") {
    testutil::Rng rng(112233);
    for (int t = 0; t < 80; ++t) {
        int n = rng.uniform(1, 3);
        Derivation a = rng.derivation(n, 2, 3, true);
        Derivation b = rng.derivation(n, 2, 3, true);
        Derivation c = rng.derivation(n, 2, 3, true);
        Derivation jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                         bracket(c, bracket(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("trace comes from the degree-zero graded part (property)") {
    testutil::Rng rng(77001);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 3, 4, true);
        CHECK(trace(d) == trace(graded_part(d, 0)));
        Derivation shifted = d + graded_part(rng.derivation(n, 3, 4, true), 2);
        CHECK(trace(shifted) == trace(d));
    }
}

TEST_CASE("graded parts reassemble the derivation (property)") {
    testutil::Rng rng(55660);
    for (int t = 0; t < 80; ++t) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 4, 5, false);
        Derivation sum = Derivation::zero(n);
        for (int i = -1; i <= 4; ++i)
            sum += graded_part(d, i);
        CHECK(sum == d);
    }
}

TEST_CASE("linear transform of a derivation") {
    // swap coordinates: x d_y becomes y d_x
    RatMatrix t(2, 2), tinv(2, 2);
    t.at(0, 1) = 1;
    t.at(1, 0) = 1;
    tinv = t;
    CHECK(transform_linear(D({"0", "x"}, XY), t, tinv) == D({"y", "0"}, XY));
}
