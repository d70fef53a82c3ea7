#include "logdiv/polygcd.hpp"

#include <algorithm>

namespace logdiv {

namespace {

int degree_in(const Series &f, int v) {
    int d = 0;
    for (const auto &[m, c] : f.terms())
        d = std::max(d, m.exp[static_cast<size_t>(v)]);
    return d;
}

// Coefficient of x_v^j, kept in the full ambient variable list.
Series coeff_in(const Series &f, int v, int j) {
    Series r(f.nvars());
    for (const auto &[m, c] : f.terms()) {
        if (m.exp[static_cast<size_t>(v)] != j)
            continue;
        Monomial q = m;
        q.exp[static_cast<size_t>(v)] = 0;
        r.add_term(q, c);
    }
    return r;
}

Series shift_by_var(const Series &f, int v, int j) {
    Series r(f.nvars());
    for (const auto &[m, c] : f.terms()) {
        Monomial q = m;
        q.exp[static_cast<size_t>(v)] += j;
        r.add_term(q, c);
    }
    return r;
}

// Normalize to integer coefficients, content 1, positive leading
// coefficient (in the canonical term order).
Series normalize(const Series &f) {
    if (f.is_zero())
        return f;
    std::vector<Rat> coeffs;
    coeffs.reserve(f.terms().size());
    for (const auto &[m, c] : f.terms())
        coeffs.push_back(c);
    Int l = denominator_lcm(coeffs);
    Rat scale(l);
    std::vector<Rat> ints;
    ints.reserve(coeffs.size());
    for (const Rat &c : coeffs)
        ints.push_back(c * scale);
    Int g = numerator_gcd(ints);
    scale /= Rat(g);
    if (f.terms().rbegin()->second * scale < 0)
        scale = -scale;
    Series r(f.nvars());
    for (const auto &[m, c] : f.terms())
        r.add_term(m, c * scale);
    return r;
}

// Pseudo-remainder of f by g with respect to x_v: lc_v(g)^(df-dg+1) f = q g + r.
Series pseudo_rem(Series f, const Series &g, int v) {
    int dg = degree_in(g, v);
    Series lcg = coeff_in(g, v, dg);
    int df = degree_in(f, v);
    while (!f.is_zero() && (df = degree_in(f, v)) >= dg) {
        Series lcf = coeff_in(f, v, df);
        // f <- lc_g * f - lc_f * x_v^(df-dg) * g
        f = lcg * f - shift_by_var(lcf * g, v, df - dg);
        // the x_v^df coefficient cancels exactly; loop strictly decreases df
        if (degree_in(f, v) >= df && !f.is_zero())
            throw std::logic_error("pseudo_rem: degree did not drop");
    }
    return f;
}

Series gcd_rec(Series a, Series b, int v);

// Content of f as a polynomial in x_v: gcd of its x_v-coefficients,
// computed recursively in the remaining variables.
Series content_in(const Series &f, int v) {
    Series g(f.nvars());
    for (int j = 0; j <= degree_in(f, v); ++j) {
        Series c = coeff_in(f, v, j);
        if (c.is_zero())
            continue;
        g = g.is_zero() ? normalize(c) : gcd_rec(g, c, v - 1);
        if (g.is_constant())
            return Series::constant(f.nvars(), 1);
    }
    return g;
}

// gcd treating x_0..x_v as active variables (higher ones do not occur).
Series gcd_rec(Series a, Series b, int v) {
    if (a.is_zero())
        return normalize(b);
    if (b.is_zero())
        return normalize(a);
    while (v >= 0 && degree_in(a, v) == 0 && degree_in(b, v) == 0)
        --v;
    if (v < 0)
        return Series::constant(a.nvars(), 1);
    if (degree_in(a, v) == 0 || degree_in(b, v) == 0) {
        // one operand is free of the main variable: gcd divides contents
        Series ca = content_in(a, v);
        Series cb = content_in(b, v);
        return gcd_rec(ca, cb, v - 1);
    }
    Series ca = content_in(a, v);
    Series cb = content_in(b, v);
    Series cg = gcd_rec(ca, cb, v - 1);
    Series pa = exact_divide(a, ca).value();
    Series pb = exact_divide(b, cb).value();
    // primitive PRS on the primitive parts
    while (!pb.is_zero()) {
        if (degree_in(pa, v) < degree_in(pb, v))
            std::swap(pa, pb);
        Series r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = Series::zero(a.nvars());
        } else {
            Series cr = content_in(r, v);
            pb = exact_divide(r, cr).value();
        }
    }
    return normalize(cg * pa);
}

} // namespace

Series poly_gcd(const Series &a, const Series &b) {
    if (!a.exact() || !b.exact())
        throw std::invalid_argument("poly_gcd: operands must be exact polynomials");
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("poly_gcd: variable count mismatch");
    return gcd_rec(a, b, a.nvars() - 1);
}

bool is_reduced(const Series &f) {
    if (!f.exact())
        throw std::invalid_argument("is_reduced: input must be an exact polynomial");
    if (f.is_zero())
        throw std::domain_error("is_reduced: zero input");
    Series g = f;
    for (int i = 0; i < f.nvars() && !g.is_constant(); ++i)
        g = poly_gcd(g, f.derivative(i));
    return g.is_constant();
}

} // namespace logdiv
