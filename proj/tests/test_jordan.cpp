#include "doctest.h"

#include "logdiv/jordan.hpp"
#include "logdiv/parser.hpp"
#include "test_util.hpp"

using namespace logdiv;

namespace {
const std::vector<std::string> XY = {"x", "y"};

Derivation D(const std::vector<std::string> &coeffs, const std::vector<std::string> &vars = XY) {
    std::vector<Series> c;
    for (const auto &e : coeffs)
        c.push_back(parse_series(e, vars));
    return Derivation(std::move(c));
}

Series P(const std::string &t) { return parse_series(t, XY); }

RatMatrix M(const std::vector<std::vector<int>> &rows) {
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

bool matrix_nilpotent(const RatMatrix &a) {
    RatPoly p = charpoly(a);
    for (int i = 0; i < p.degree(); ++i)
        if (p.coeff(i) != 0)
            return false;
    return true;
}
} // namespace

TEST_CASE("induced_map") {
    InducedMap im = induced_map(D({"x", "0"}), 2);
    REQUIRE(im.basis.size() == 3); // 1, x, y
    CHECK(im.matrix == M({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));

    InducedMap nil = induced_map(D({"y", "0"}), 2);
    // [x] -> [y], everything else to zero
    CHECK(nil.matrix == M({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
    CHECK(matrix_nilpotent(nil.matrix));

    InducedMap mixed = induced_map(D({"x", "y^2"}), 3);
    REQUIRE(mixed.basis.size() == 6); // 1, x, y, x^2, x*y, y^2
    std::vector<int> diag_expected = {0, 1, 0, 2, 1, 0};
    for (int i = 0; i < 6; ++i)
        CHECK(mixed.matrix.at(i, i) == diag_expected[static_cast<size_t>(i)]);

    CHECK_THROWS_AS(induced_map(D({"1", "0"}), 3), std::domain_error);
    CHECK_THROWS_AS(induced_map(Derivation::zero(4), 15), std::invalid_argument);
}

TEST_CASE("matrix_jordan_chevalley") {
    MatrixJC jc = matrix_jordan_chevalley(M({{1, 1}, {0, 1}}));
    CHECK(jc.semisimple == RatMatrix::identity(2));
    CHECK(jc.nilpotent == M({{0, 1}, {0, 0}}));

    RatMatrix diag = M({{2, 0}, {0, 5}});
    MatrixJC jd = matrix_jordan_chevalley(diag);
    CHECK(jd.semisimple == diag);
    CHECK(jd.nilpotent.is_zero());

    // irrational/complex eigenvalues: squarefree minimal polynomial, so S = M
    RatMatrix rot = M({{0, 1}, {-1, 0}});
    MatrixJC jr = matrix_jordan_chevalley(rot);
    CHECK(jr.semisimple == rot);
    CHECK(jr.nilpotent.is_zero());
}

TEST_CASE("matrix_jordan_chevalley properties on random matrices") {
    testutil::Rng rng(60601);
    for (int t = 0; t < 30; ++t) {
        int n = rng.uniform(1, 5);
        RatMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = rng.uniform(-2, 2);
        MatrixJC jc = matrix_jordan_chevalley(a);
        CHECK(jc.semisimple + jc.nilpotent == a);
        CHECK(jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple);
        CHECK(matrix_nilpotent(jc.nilpotent));
        // minimal polynomial of S divides the squarefree part, so S is
        // semisimple: rad(char)(S) = 0
        RatPoly rad = squarefree_part(charpoly(a));
        CHECK(rad.eval_matrix(jc.semisimple).is_zero());
        // S and N commute with everything commuting with a: check against
        // random polynomials in a
        RatPoly q({rng.rat(), rng.rat(), rng.rat()});
        RatMatrix c = q.eval_matrix(a);
        CHECK(jc.semisimple * c == c * jc.semisimple);
        CHECK(jc.nilpotent * c == c * jc.nilpotent);
    }
}

TEST_CASE("sn_decompose: mixed linear and higher-order parts split exactly") {
    for (int k = 3; k <= 8; ++k) {
        SNDecomposition sn = sn_decompose(D({"x", "y^2"}), k);
        CHECK(sn.semisimple == D({"x", "0"}).truncated(k));
        CHECK(sn.nilpotent == D({"0", "y^2"}).truncated(k));
    }
}

TEST_CASE("sn_decompose: nilpotent and diagonal inputs") {
    SNDecomposition nil = sn_decompose(D({"y", "x^2"}), 5);
    CHECK(nil.semisimple.is_zero());
    CHECK(nil.nilpotent == D({"y", "x^2"}).truncated(5));

    SNDecomposition diag = sn_decompose(D({"2*x", "-3*y"}), 5);
    CHECK(diag.semisimple == D({"2*x", "-3*y"}).truncated(5));
    CHECK(diag.nilpotent.is_zero());

    CHECK_THROWS_AS(sn_decompose(D({"1", "0"}), 5), std::domain_error);
}

TEST_CASE("sn_decompose: resonant mixed case needs the genuine splitting") {
    // linear part diag(1,2) with resonant perturbation x^2 d_y:
    // delta_S = x d_x + 2 y d_y, delta_N = x^2 d_y
    SNDecomposition sn = sn_decompose(D({"x", "2*y + x^2"}), 6);
    CHECK(sn.semisimple == D({"x", "2*y"}).truncated(6));
    CHECK(sn.nilpotent == D({"0", "x^2"}).truncated(6));
    CHECK(is_semisimple_at(sn.semisimple, 6));
    CHECK(is_nilpotent(sn.nilpotent));
}

TEST_CASE("sn_decompose: non-resonant nonlinear semisimple input") {
    // pushforward of x d_x + 2 y d_y under y -> y + x^3 is semisimple
    // but not linear: delta = x d_x + (2y + x^3) d_y
    SNDecomposition sn = sn_decompose(D({"x", "2*y + x^3"}), 6);
    CHECK(sn.semisimple == D({"x", "2*y + x^3"}).truncated(6));
    CHECK(sn.nilpotent.is_zero());
    CHECK(is_semisimple_at(sn.semisimple, 6));
}

TEST_CASE("sn_decompose: random derivations satisfy the contract") {
    testutil::Rng rng(140001);
    int done = 0;
    while (done < 25) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 2, 3, true);
        SNDecomposition sn = sn_decompose(d, 4);
        CHECK(sn.semisimple + sn.nilpotent == d.truncated(4));
        CHECK(bracket(sn.semisimple, sn.nilpotent).is_zero());
        CHECK(matrix_nilpotent(linear_part(sn.nilpotent)));
        // agreement of k=4 and k=6 runs mod m^4 (uniqueness)
        SNDecomposition sn6 = sn_decompose(d, 6);
        CHECK(sn6.semisimple.truncated(4) == sn.semisimple);
        // linear parts must be the matrix Jordan-Chevalley pair
        MatrixJC jc = matrix_jordan_chevalley(linear_part(d));
        CHECK(linear_part(sn.semisimple) == jc.semisimple);
        CHECK(linear_part(sn.nilpotent) == jc.nilpotent);
        ++done;
    }
}

TEST_CASE("is_nilpotent") {
    CHECK(is_nilpotent(D({"y", "0"})));
    CHECK(!is_nilpotent(D({"x", "0"})));
    CHECK(is_nilpotent(D({"0", "y^2"}))); // no linear part at all
    CHECK_THROWS_AS(is_nilpotent(D({"1", "0"})), std::domain_error);
}

TEST_CASE("is_semisimple_at") {
    for (int k = 2; k <= 6; ++k)
        CHECK(is_semisimple_at(D({"x", "0"}), k));
    CHECK(!is_semisimple_at(D({"x", "y^2"}), 3));
    CHECK(!is_semisimple_at(D({"y", "0"}), 2));
}

TEST_CASE("induced-map nilpotency matches the linear part (property)") {
    testutil::Rng rng(90909);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(1, 3);
        Derivation d = rng.derivation(n, 2, 3, true);
        bool nil = is_nilpotent(d);
        for (int k = 2; k <= 4; ++k)
            CHECK(matrix_nilpotent(induced_map(d, k).matrix) == nil);
    }
}

TEST_CASE("nilpotent_cofactor_check") {
    auto a = nilpotent_cofactor_check(D({"2*y", "3*x^2"}), P("x^3 - y^2"));
    CHECK(a.status == CofactorStatus::FOUND);
    CHECK(a.holds);
    auto b = nilpotent_cofactor_check(D({"y", "0"}), P("y"));
    CHECK(b.holds);
    auto c = nilpotent_cofactor_check(D({"x^2", "0"}), P("x"));
    CHECK(c.holds);
    CHECK(c.constant_term == 0);
}

TEST_CASE("diagonal_form") {
    // already diagonal
    DiagonalForm d0 = diagonal_form(D({"x", "2*y"}), 6);
    REQUIRE(d0.status == DiagonalFormStatus::OK);
    CHECK(d0.weights == std::vector<Rat>{Rat(1), Rat(2)});

    // nonlinear conjugate of a diagonal derivation
    DiagonalForm d1 = diagonal_form(D({"x", "2*y + x^3"}), 7);
    REQUIRE(d1.status == DiagonalFormStatus::OK);
    CHECK(d1.weights == std::vector<Rat>{Rat(1), Rat(2)});
    // check the change really straightens: delta(change_i) o inverse = w_i y_i
    Derivation delta = D({"x", "2*y + x^3"});
    for (int i = 0; i < 2; ++i) {
        Series lhs = compose(delta.apply(d1.change[static_cast<size_t>(i)]), d1.inverse_change, 7);
        Series rhs = d1.weights[static_cast<size_t>(i)] * Series::variable(2, i);
        CHECK(lhs.congruent(rhs, 7));
    }

    // rotation: eigenvalues are complex
    CHECK(diagonal_form(D({"y", "-x"}), 5).status == DiagonalFormStatus::UNSUPPORTED_EIGENVALUES);
    // resonant genuine mix is not semisimple
    CHECK(diagonal_form(D({"x", "2*y + x^2"}), 5).status == DiagonalFormStatus::NOT_SEMISIMPLE);
}

TEST_CASE("conjugates of diagonal derivations stay semisimple (property)") {
    // push a diagonal derivation forward through a random formal change
    // with identity linear part; the result must be recognized as purely
    // semisimple, and diagonal_form must recover the sorted weights.
    testutil::Rng rng(777333);
    int done = 0;
    while (done < 12) {
        int n = rng.uniform(2, 3);
        int k = 5;
        std::vector<Rat> weights;
        for (int i = 0; i < n; ++i)
            weights.push_back(rng.uniform(-3, 3));
        std::vector<Series> chg;
        for (int i = 0; i < n; ++i) {
            Series h = rng.poly(n, 3, 2, true);
            for (int j = 0; j < n; ++j)
                h.add_term(Monomial::var(n, j), -h.coeff(Monomial::var(n, j)));
            chg.push_back(Series::variable(n, i) + h);
        }
        std::vector<Series> inv = invert_change(chg, k);
        Derivation diag = Derivation::diagonal(weights);
        std::vector<Series> coeffs;
        for (int i = 0; i < n; ++i)
            coeffs.push_back(compose(diag.apply(chg[static_cast<size_t>(i)]), inv, k));
        Derivation conj(std::move(coeffs));
        if (!is_singular(conj))
            continue;
        SNDecomposition sn = sn_decompose(conj, k);
        CHECK(sn.nilpotent.is_zero());
        CHECK(sn.semisimple == conj.truncated(k));
        DiagonalForm df = diagonal_form(conj, k);
        REQUIRE(df.status == DiagonalFormStatus::OK);
        std::vector<Rat> sorted = weights;
        std::sort(sorted.begin(), sorted.end());
        CHECK(df.weights == sorted);
        ++done;
    }
}
