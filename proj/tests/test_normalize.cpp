#include "doctest.h"

#include "logdiv/homogeneity.hpp"
#include "logdiv/normalize.hpp"
#include "logdiv/parser.hpp"
#include "test_util.hpp"

using namespace logdiv;

namespace {
const std::vector<std::string> XY = {"x", "y"};

Series P(const std::string &t) { return parse_series(t, XY); }

Derivation D(const std::vector<std::string> &coeffs) {
    std::vector<Series> c;
    for (const auto &e : coeffs)
        c.push_back(parse_series(e, XY));
    return Derivation(std::move(c));
}
} // namespace

TEST_CASE("diag_normalize: telescoping unit") {
    // lambda = (1,-1), f = xy + x^2 y: the weighted primitive of the
    // cofactor is log(1+x), so u = 1 + x exactly and g = xy.
    DiagNormalization d = diag_normalize({Rat(1), Rat(-1)}, P("x*y + x^2*y"), std::nullopt, 10);
    CHECK(d.unit.congruent(P("1 + x"), 10));
    CHECK(d.normalized.congruent(P("x*y"), 10));
    CHECK(d.eigenvalue == 0);
    CHECK(Series::mul_trunc(d.unit, d.normalized, 10).congruent(P("x*y + x^2*y"), 10));
}

TEST_CASE("diag_normalize: quasi-homogeneous input is untouched") {
    DiagNormalization d =
        diag_normalize({Rat(2), Rat(3)}, P("x^3 - y^2"), P("6").truncated(8), 8);
    CHECK(d.unit.congruent(P("1"), 8));
    CHECK(d.normalized.congruent(P("x^3 - y^2"), 8));
    CHECK(d.eigenvalue == 6);

    DiagNormalization z = diag_normalize({Rat(1), Rat(-1)}, P("x*y"), std::nullopt, 8);
    CHECK(z.unit.congruent(P("1"), 8));
    CHECK(z.normalized.congruent(P("x*y"), 8));
    CHECK(z.eigenvalue == 0);
}

TEST_CASE("diag_normalize: bad cofactor and non-logarithmic input") {
    CHECK_THROWS_AS(diag_normalize({Rat(2), Rat(3)}, P("x^3 - y^2"), P("5").truncated(8), 8),
                    std::domain_error);
    CHECK_THROWS_AS(diag_normalize({Rat(1), Rat(1)}, P("x + y^2"), std::nullopt, 8),
                    std::domain_error);
}

TEST_CASE("eigen_support_factor") {
    EigenSupportFactor a = eigen_support_factor(P("x*y + x^2*y^2"), {Rat(1), Rat(-1)});
    REQUIRE(a.monomial_type);
    CHECK(a.power == Monomial({1, 1}));
    CHECK(a.unit_part == P("1 + x*y"));

    EigenSupportFactor b = eigen_support_factor(P("x^2"), {Rat(0), Rat(1)});
    REQUIRE(b.monomial_type);
    CHECK(b.power == Monomial({2, 0}));
    CHECK(b.unit_part == P("1"));

    CHECK(!eigen_support_factor(P("x + y"), {Rat(1), Rat(-1)}).monomial_type);
    CHECK_THROWS_AS(eigen_support_factor(Series::zero(2), {Rat(1), Rat(-1)}),
                    std::domain_error);
    CHECK_THROWS_AS(eigen_support_factor(P("x"), {Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("rank_B") {
    // linear parts x d_x and (a x + y) d_x: rank 2 for every a
    for (int a : {0, 1, -3}) {
        RankB r = rank_B(D({"x", "0"}),
                         D({std::to_string(a) + "*x + y", "0"}));
        CHECK(r.rank == 2);
    }
    CHECK(rank_B(D({"x", "0"}), D({"2*x", "0"})).rank == 1);
    CHECK(rank_B(D({"y^2", "0"}), D({"0", "x^2"})).rank == 0);
    CHECK_THROWS_AS(rank_B(D({"1", "0"}), D({"x", "0"})), std::domain_error);
}

TEST_CASE("normalize_plane_basis: CASE_1 on the non-homogeneous quartic") {
    Series f = P("x^4 + y^5 + x*y^4");
    auto basis = extract_basis(f, solve_log_derivations(f, 4), 8);
    REQUIRE(basis.has_value());
    PlaneBasisNormalForm nf = normalize_plane_basis(f, *basis, 8);
    CHECK(nf.kind == PlaneBasisKind::CASE_1);
    CHECK(linear_part(nf.transformed_basis[0]).is_zero());
    // the transformed pair is still a basis: re-certify independently
    auto recert = certify_saito(nf.transformed_f, nf.transformed_basis, 8, true);
    CHECK(recert.certified());
}

TEST_CASE("normalize_plane_basis: stays CASE_1 under basis mixing") {
    // Hypotheses of the appendix deliberately violated (f not in m^3 is
    // rejected), so drive the branch through a synthetic pair on a cubic
    // with a zero-linear-part second element after mixing.
    Series f = P("x^4 + y^5 + x*y^4");
    auto basis = extract_basis(f, solve_log_derivations(f, 4), 8);
    REQUIRE(basis.has_value());
    // mixing the basis keeps it a basis; the normal form must still be CASE_1
    std::vector<Derivation> mixed = {basis->derivations[0] + basis->derivations[1],
                                     basis->derivations[1]};
    auto cert = certify_saito(f, mixed, 8, true);
    REQUIRE(cert.certified());
    PlaneBasisNormalForm nf = normalize_plane_basis(f, *cert.basis, 8);
    CHECK(nf.kind == PlaneBasisKind::CASE_1);
}

TEST_CASE("normalize_plane_basis: precondition screening") {
    Series cusp = P("x^3 - y^2");
    auto cb = extract_basis(cusp, solve_log_derivations(cusp, 2), 8);
    REQUIRE(cb.has_value());
    // cusp has order 2 < 3
    CHECK_THROWS_AS(normalize_plane_basis(cusp, *cb, 8), std::domain_error);
}

TEST_CASE("rank two forces the Euler-homogeneity refutation") {
    // rank(B) = 2 for a certified basis of a reduced non-product f in m^3
    // forces the SEH refutation at the bound.
    Series f = P("x^4 + y^5 + x*y^4");
    auto basis = extract_basis(f, solve_log_derivations(f, 4), 8);
    REQUIRE(basis.has_value());
    RankB rb = rank_B(basis->derivations[0], basis->derivations[1]);
    if (rb.rank == 2)
        CHECK(!is_strongly_euler_homogeneous(f, 3).found);
}
