#include "logdiv/normalize.hpp"

#include <algorithm>

#include "logdiv/polygcd.hpp"

namespace logdiv {

DiagNormalization diag_normalize(const std::vector<Rat> &lambda, const Series &f,
                                 const std::optional<Series> &c_in, int k) {
    int n = f.nvars();
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("diag_normalize: weight vector length mismatch");
    if (f.is_zero())
        throw std::domain_error("diag_normalize: f = 0");
    Derivation diag = Derivation::diagonal(lambda);

    Series c(n);
    if (c_in) {
        c = c_in->truncated(k);
        if (!diag.apply(f.truncated(k)).congruent(Series::mul_trunc(c, f, k), k))
            throw std::domain_error("diag_normalize: supplied cofactor fails delta(f) = c f");
    } else {
        // Order-by-order division by f loses ord(f) orders, so recompute
        // the cofactor with enough headroom to certify everything mod m^k.
        if (!f.order())
            throw std::domain_error("diag_normalize: f vanishes to infinite order");
        int kk = k + *f.order();
        if (f.truncation() && *f.truncation() < kk)
            throw std::invalid_argument("diag_normalize: f is not known to order k + ord(f)");
        CofactorResult cr = cofactor(diag.truncated(kk), f);
        if (!cr.found())
            throw std::domain_error("diag_normalize: f is not logarithmic for the diagonal "
                                    "derivation at this order");
        c = cr.witness->cofactor.truncated(k);
    }

    auto weight = [&](const Monomial &m) {
        Rat w = 0;
        for (int i = 0; i < n; ++i)
            w += lambda[static_cast<size_t>(i)] * m.exp[static_cast<size_t>(i)];
        return w;
    };

    // b = sum over alpha.lambda != 0 of c_alpha x^alpha / (alpha.lambda);
    // the weight-zero part of c must collapse to its constant term.
    int kc = *min_trunc(k, c.truncation());
    Series b(n);
    b.set_truncation(kc);
    Series czero(n);
    czero.set_truncation(kc);
    for (const auto &[m, coef] : c.terms()) {
        Rat w = weight(m);
        if (w == 0)
            czero.add_term(m, coef);
        else
            b.add_term(m, coef / w);
    }
    Rat c0 = c.constant_term();
    if (!czero.congruent(Series::constant(n, c0), k))
        throw internal_inconsistency(
            "diag_normalize: weight-zero cofactor part is not the constant term");

    Series u = exp_series(b, k);
    Series g = Series::mul_trunc(invert_unit(u, k), f, k);
    if (!Series::mul_trunc(u, g, k).congruent(f.truncated(k), k))
        throw internal_inconsistency("diag_normalize: u*g does not reproduce f");
    if (!diag.apply(g).congruent(c0 * g, k))
        throw internal_inconsistency("diag_normalize: delta(g) = c0*g fails");
    return DiagNormalization{std::move(u), std::move(g), std::move(c0), std::move(c), k};
}

EigenSupportFactor eigen_support_factor(const Series &g, const std::vector<Rat> &lambda) {
    if (g.nvars() != 2)
        throw std::invalid_argument("eigen_support_factor: two variables required");
    if (g.is_zero())
        throw std::domain_error("eigen_support_factor: g = 0");
    if (lambda.size() != 2 || (lambda[0] == 0 && lambda[1] == 0))
        throw std::invalid_argument("eigen_support_factor: weight vector must be nonzero");
    for (const auto &[m, c] : g.terms()) {
        Rat w = lambda[0] * m.exp[0] + lambda[1] * m.exp[1];
        if (w != 0)
            return EigenSupportFactor{false, Monomial(2), Series(2)};
    }
    // support lies on the weight-zero ray; its minimum is the power product
    Monomial p = g.terms().begin()->first;
    Series v(2);
    v.set_truncation(g.truncation());
    for (const auto &[m, c] : g.terms()) {
        if (!p.divides(m))
            throw internal_inconsistency("eigen_support_factor: support not on a single ray");
        v.add_term(p.quotient_of(m), c);
    }
    return EigenSupportFactor{true, std::move(p), std::move(v)};
}

namespace {

struct LinearParts {
    // delta_i0 = (a_i x + b_i y) d_x + (c_i x + d_i y) d_y
    Rat a1, b1, c1, d1, a2, b2, c2, d2;
};

LinearParts extract_parts(const Derivation &e1, const Derivation &e2) {
    auto cf = [](const Derivation &d, int coeff, int var) {
        return d.coeff(coeff).coeff(Monomial::var(2, var));
    };
    return LinearParts{cf(e1, 0, 0), cf(e1, 0, 1), cf(e1, 1, 0), cf(e1, 1, 1),
                       cf(e2, 0, 0), cf(e2, 0, 1), cf(e2, 1, 0), cf(e2, 1, 1)};
}

bool zero_linear_part(const Derivation &d) {
    return linear_part(d).is_zero();
}

PlaneBasisNormalForm finish(const Series &f, std::vector<Derivation> basis, RatMatrix t,
                            PlaneBasisKind kind, Rat a, int k) {
    RatMatrix tinv = inverse(t).value();
    Series ftrans = substitute_linear(f, tinv);
    std::vector<Derivation> trans;
    trans.reserve(basis.size());
    for (const Derivation &d : basis)
        trans.push_back(transform_linear(d, t, tinv));
    CertifyResult cert = certify_saito(ftrans, trans, k, /*skip_reduced_check=*/true);
    if (!cert.certified())
        throw internal_inconsistency("normalize_plane_basis: transformed pair fails Saito "
                                     "certification");
    // declared linear parts must match the direct extraction
    if (kind == PlaneBasisKind::CASE_1) {
        if (!zero_linear_part(trans[0]))
            throw internal_inconsistency("normalize_plane_basis: CASE_1 element has a linear part");
    } else {
        LinearParts lp = extract_parts(trans[0], trans[1]);
        bool ok = lp.a1 == 1 && lp.b1 == 0 && lp.c1 == 0 && lp.d1 == 0 && lp.a2 == a &&
                  lp.b2 == 1 && lp.c2 == 0 && lp.d2 == 0;
        if (!ok)
            throw internal_inconsistency("normalize_plane_basis: CASE_2 linear parts mismatch");
    }
    return PlaneBasisNormalForm{kind,        std::move(trans), std::move(t), std::move(tinv),
                                std::move(ftrans), std::move(a),     cert.basis->validity};
}

} // namespace

PlaneBasisNormalForm normalize_plane_basis(const Series &f, const SaitoBasis &basis, int k) {
    if (f.nvars() != 2)
        throw std::invalid_argument("normalize_plane_basis: plane curves only");
    if (!f.order() || *f.order() < 3)
        throw std::domain_error("normalize_plane_basis: f must lie in m^3");
    if (f.exact() && !is_reduced(f))
        throw std::domain_error("normalize_plane_basis: f must be reduced");
    if (basis.derivations.size() != 2)
        throw std::invalid_argument("normalize_plane_basis: need a basis of two derivations");
    for (const Derivation &d : basis.derivations)
        if (!is_singular(d))
            throw std::domain_error("normalize_plane_basis: non-singular basis element "
                                    "(f is a product)");

    const Derivation &e1 = basis.derivations[0];
    const Derivation &e2 = basis.derivations[1];
    RatMatrix id = RatMatrix::identity(2);

    if (zero_linear_part(e1))
        return finish(f, {e1, e2}, id, PlaneBasisKind::CASE_1, 0, k);
    if (zero_linear_part(e2))
        return finish(f, {e2, e1}, id, PlaneBasisKind::CASE_1, 0, k);

    LinearParts lp = extract_parts(e1, e2);
    // vanishing 2x2 minors of the degree-1 part of the Saito matrix,
    // forced by f in m^3
    if (lp.a1 * lp.c2 - lp.a2 * lp.c1 != 0 || lp.b1 * lp.d2 - lp.b2 * lp.d1 != 0 ||
        lp.a1 * lp.d2 - lp.a2 * lp.d1 + lp.b1 * lp.c2 - lp.b2 * lp.c1 != 0)
        throw internal_inconsistency("normalize_plane_basis: determinant relations fail; "
                                     "the basis does not certify an m^3 germ");

    Rat k1 = lp.a2 * lp.b1 - lp.a1 * lp.b2;
    Rat k2 = lp.a2 * lp.d1 - lp.a1 * lp.d2;
    Derivation p1 = lp.a2 * e1 - lp.a1 * e2; // linear part k1 y d_x + k2 y d_y
    Derivation p2 = lp.b1 * e2 - lp.b2 * e1; // linear part k1 x d_x + k2 x d_y

    if (k1 != 0) {
        Rat a = k2 / k1;
        // after x' = x, y' = y - a x the parts become x d_x and (a x + y) d_x
        RatMatrix t(2, 2);
        t.at(0, 0) = 1;
        t.at(1, 0) = -a;
        t.at(1, 1) = 1;
        Rat inv = 1 / k1;
        return finish(f, {inv * p2, inv * p1}, t, PlaneBasisKind::CASE_2, a, k);
    }

    if (k2 != 0)
        throw internal_inconsistency("normalize_plane_basis: k1 = 0 forces k2 = 0");

    if (lp.a1 != 0 || lp.a2 != 0 || lp.b1 != 0 || lp.b2 != 0) {
        // p1 or p2 has zero linear part and still extends to a basis
        if (lp.a2 != 0)
            return finish(f, {p1, e2}, id, PlaneBasisKind::CASE_1, 0, k);
        if (lp.a1 != 0)
            return finish(f, {p1, e1}, id, PlaneBasisKind::CASE_1, 0, k);
        if (lp.b2 != 0)
            return finish(f, {p2, e2}, id, PlaneBasisKind::CASE_1, 0, k);
        return finish(f, {p2, e1}, id, PlaneBasisKind::CASE_1, 0, k);
    }

    // both linear parts are (c_i x + d_i y) d_y
    Rat l = lp.c2 * lp.d1 - lp.c1 * lp.d2;
    if (l != 0) {
        Derivation q1 = lp.c2 * e1 - lp.c1 * e2; // part l y d_y
        Derivation q2 = lp.d1 * e2 - lp.d2 * e1; // part l x d_y
        // swap x and y: parts become x d_x and y d_x (case 2 with a = 0)
        RatMatrix swap(2, 2);
        swap.at(0, 1) = 1;
        swap.at(1, 0) = 1;
        Rat inv = 1 / l;
        return finish(f, {inv * q1, inv * q2}, swap, PlaneBasisKind::CASE_2, 0, k);
    }
    if (lp.c1 == 0 && lp.d1 == 0)
        return finish(f, {e1, e2}, id, PlaneBasisKind::CASE_1, 0, k);
    Rat eta = lp.c1 != 0 ? lp.c2 / lp.c1 : lp.d2 / lp.d1;
    return finish(f, {eta * e1 - e2, e1}, id, PlaneBasisKind::CASE_1, 0, k);
}

RankB rank_B(const Derivation &d1, const Derivation &d2) {
    if (d1.nvars() != 2 || d2.nvars() != 2)
        throw std::invalid_argument("rank_B: plane derivations required");
    if (!is_singular(d1) || !is_singular(d2))
        throw std::domain_error("rank_B: derivations must be singular");
    LinearParts lp = extract_parts(d1, d2);
    RatMatrix b(2, 4);
    b.at(0, 0) = lp.a1;
    b.at(0, 1) = lp.b1;
    b.at(0, 2) = lp.c1;
    b.at(0, 3) = lp.d1;
    b.at(1, 0) = lp.a2;
    b.at(1, 1) = lp.b2;
    b.at(1, 2) = lp.c2;
    b.at(1, 3) = lp.d2;
    int r = rank(b);
    return RankB{std::move(b), r};
}

} // namespace logdiv
