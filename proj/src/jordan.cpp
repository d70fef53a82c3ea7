#include "logdiv/jordan.hpp"

#include <algorithm>
#include <map>

namespace logdiv {

namespace {

// Sparse column view of the induced map, enough for Horner evaluation of
// polynomials in the map against single vectors.
struct SparseCols {
    int dim = 0;
    std::vector<std::vector<std::pair<int, Rat>>> cols;

    RatVec apply(const RatVec &v) const {
        RatVec out(static_cast<size_t>(dim), Rat(0));
        for (int j = 0; j < dim; ++j) {
            const Rat &vj = v[static_cast<size_t>(j)];
            if (vj == 0)
                continue;
            for (const auto &[i, a] : cols[static_cast<size_t>(j)])
                out[static_cast<size_t>(i)] += a * vj;
        }
        return out;
    }
};

struct QuotientBasis {
    int k = 0;
    std::vector<Monomial> mons;
    std::map<Monomial, int, GrlexLess> index;
};

QuotientBasis quotient_basis(int nvars, int k) {
    QuotientBasis b;
    b.k = k;
    b.mons = monomials_up_to(nvars, k - 1);
    int i = 0;
    for (const Monomial &m : b.mons)
        b.index.emplace(m, i++);
    return b;
}

SparseCols induced_cols(const Derivation &delta, const QuotientBasis &b) {
    SparseCols sc;
    sc.dim = static_cast<int>(b.mons.size());
    sc.cols.resize(b.mons.size());
    for (size_t j = 0; j < b.mons.size(); ++j) {
        Series img = delta.apply(Series::from_term(b.mons[j], 1)).truncated(b.k);
        for (const auto &[m, c] : img.terms())
            sc.cols[j].emplace_back(b.index.at(m), c);
    }
    return sc;
}

RatVec horner_apply(const RatPoly &s, const SparseCols &m, const RatVec &v) {
    RatVec acc(static_cast<size_t>(m.dim), Rat(0));
    for (int i = s.degree(); i >= 0; --i) {
        acc = m.apply(acc);
        const Rat c = s.coeff(i);
        if (c != 0)
            for (size_t t = 0; t < acc.size(); ++t)
                acc[t] += c * v[t];
    }
    return acc;
}

// Characteristic polynomial of the induced map through the graded block
// structure: the map is block-triangular for the degree filtration and
// the diagonal blocks are the actions of the linear part on each
// homogeneous piece, so char(M) is the product of the block char polys.
RatPoly graded_charpoly(const Derivation &delta, int k) {
    Derivation lin = graded_part(delta, 0);
    RatPoly p = RatPoly::constant(1);
    for (int d = 0; d < k; ++d) {
        std::vector<Monomial> mons = monomials_up_to(delta.nvars(), d);
        std::vector<Monomial> layer;
        for (const Monomial &m : mons)
            if (m.degree() == d)
                layer.push_back(m);
        std::map<Monomial, int, GrlexLess> idx;
        int i = 0;
        for (const Monomial &m : layer)
            idx.emplace(m, i++);
        RatMatrix block(static_cast<int>(layer.size()), static_cast<int>(layer.size()));
        for (size_t j = 0; j < layer.size(); ++j) {
            Series img = lin.apply(Series::from_term(layer[j], 1));
            for (const auto &[m, c] : img.terms())
                block.at(idx.at(m), static_cast<int>(j)) = c;
        }
        p = p * charpoly(block);
    }
    return p;
}

Rat binomial(int n, int r) {
    Rat b = 1;
    for (int i = 0; i < r; ++i)
        b = b * (n - i) / (i + 1);
    return b;
}

} // namespace

int quotient_dim(int nvars, int k) {
    Rat d = binomial(nvars + k - 1, nvars);
    return static_cast<int>(d.get_num().get_si());
}

InducedMap induced_map(const Derivation &delta, int k) {
    if (!is_singular(delta))
        throw std::domain_error("induced_map: derivation is not singular");
    if (k < 1)
        throw std::invalid_argument("induced_map: k must be positive");
    if (quotient_dim(delta.nvars(), k) > kMaxQuotientDim)
        throw std::invalid_argument("induced_map: quotient dimension exceeds guardrail");
    QuotientBasis b = quotient_basis(delta.nvars(), k);
    SparseCols sc = induced_cols(delta, b);
    RatMatrix m(sc.dim, sc.dim);
    for (int j = 0; j < sc.dim; ++j)
        for (const auto &[i, a] : sc.cols[static_cast<size_t>(j)])
            m.at(i, j) = a;
    return InducedMap{k, std::move(b.mons), std::move(m)};
}

MatrixJC matrix_jordan_chevalley(const RatMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_jordan_chevalley: matrix not square");
    RatPoly p = charpoly(m);
    RatPoly s = jordan_splitting_poly(p);
    RatMatrix sm = s.eval_matrix(m);
    return MatrixJC{sm, m - sm, std::move(s)};
}

SNDecomposition sn_decompose(const Derivation &delta, int k) {
    if (!is_singular(delta))
        throw std::domain_error("sn_decompose: derivation is not singular");
    if (k < 2)
        throw std::invalid_argument("sn_decompose: k must be >= 2");
    int n = delta.nvars();
    if (quotient_dim(n, k) > kMaxQuotientDim)
        throw std::invalid_argument("sn_decompose: quotient dimension exceeds guardrail");

    RatPoly p = graded_charpoly(delta, k);
    RatPoly rad = squarefree_part(p);

    Derivation ds = delta.truncated(k);
    Derivation dn = Derivation::zero(n).truncated(k);

    if (rad.degree() != p.degree()) {
        // Genuinely mixed case: split the induced map and read the
        // semisimple coefficients off the coordinate columns.
        RatPoly s = jordan_splitting_poly(p);
        QuotientBasis b = quotient_basis(n, k);
        SparseCols m = induced_cols(delta, b);
        std::vector<Series> coeffs;
        coeffs.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            RatVec e(static_cast<size_t>(m.dim), Rat(0));
            e[static_cast<size_t>(b.index.at(Monomial::var(n, j)))] = 1;
            RatVec w = horner_apply(s, m, e);
            Series cj(n);
            cj.set_truncation(k);
            for (size_t t = 0; t < w.size(); ++t)
                cj.add_term(b.mons[t], w[t]);
            coeffs.push_back(std::move(cj));
        }
        ds = Derivation(std::move(coeffs));
        dn = delta.truncated(k) - ds;

        // Consistency: the matrix semisimple part must act like the
        // derivation read off from the coordinate columns. Checked on
        // every basis monomial while the quotient stays small, on the
        // low-degree ones beyond that.
        int full_check_dim = 64;
        for (size_t t = 0; t < b.mons.size(); ++t) {
            const Monomial &mon = b.mons[t];
            if (m.dim > full_check_dim && mon.degree() > 2)
                continue;
            RatVec e(static_cast<size_t>(m.dim), Rat(0));
            e[t] = 1;
            RatVec w = horner_apply(s, m, e);
            Series via_matrix(n);
            via_matrix.set_truncation(k);
            for (size_t r = 0; r < w.size(); ++r)
                via_matrix.add_term(b.mons[r], w[r]);
            Series via_leibniz = ds.apply(Series::from_term(mon, 1)).truncated(k);
            if (via_matrix != via_leibniz)
                throw internal_inconsistency("sn_decompose: matrix part is not a derivation");
        }
    }

    if (!is_singular(ds))
        throw internal_inconsistency("sn_decompose: semisimple part not singular");
    if (!(ds + dn == delta.truncated(k)))
        throw internal_inconsistency("sn_decompose: parts do not sum to the input");
    if (!bracket(ds, dn).is_zero())
        throw internal_inconsistency("sn_decompose: parts do not commute mod m^k");
    RatPoly nil_char = charpoly(linear_part(dn));
    for (int i = 0; i < nil_char.degree(); ++i)
        if (nil_char.coeff(i) != 0)
            throw internal_inconsistency("sn_decompose: nilpotent part has non-nilpotent linear part");
    return SNDecomposition{std::move(ds), std::move(dn), k};
}

bool is_nilpotent(const Derivation &delta) {
    if (!is_singular(delta))
        throw std::domain_error("is_nilpotent: derivation is not singular");
    RatPoly p = charpoly(linear_part(delta));
    for (int i = 0; i < p.degree(); ++i)
        if (p.coeff(i) != 0)
            return false;
    return true;
}

RatPoly induced_min_poly(const Derivation &delta, int k) {
    if (!is_singular(delta))
        throw std::domain_error("induced_min_poly: derivation is not singular");
    if (quotient_dim(delta.nvars(), k) > kMaxQuotientDim)
        throw std::invalid_argument("induced_min_poly: quotient dimension exceeds guardrail");
    QuotientBasis b = quotient_basis(delta.nvars(), k);
    SparseCols m = induced_cols(delta, b);
    int dim = m.dim;

    // Global echelon over all Krylov spaces seen so far; a seed already in
    // the span contributes nothing new to the lcm.
    std::vector<std::pair<int, RatVec>> echelon; // (pivot, reduced vector)
    auto reduce = [&](RatVec v) {
        for (const auto &[piv, u] : echelon) {
            const Rat &c = v[static_cast<size_t>(piv)];
            if (c == 0)
                continue;
            Rat f = c / u[static_cast<size_t>(piv)];
            for (size_t t = 0; t < v.size(); ++t)
                if (u[t] != 0)
                    v[t] -= f * u[t];
        }
        return v;
    };
    auto pivot_of = [](const RatVec &v) {
        for (size_t t = 0; t < v.size(); ++t)
            if (v[t] != 0)
                return static_cast<int>(t);
        return -1;
    };

    RatPoly minpoly = RatPoly::constant(1);
    for (int seed = 0; seed < dim; ++seed) {
        RatVec v(static_cast<size_t>(dim), Rat(0));
        v[static_cast<size_t>(seed)] = 1;
        if (pivot_of(reduce(v)) < 0)
            continue;
        // Local Krylov run with coefficient tracking.
        std::vector<std::pair<int, RatVec>> local;  // reduced Krylov vectors
        std::vector<RatPoly> combos;                // their expressions in powers
        RatVec cur = v;
        RatPoly cur_poly = RatPoly::constant(1);
        RatPoly local_min;
        for (;;) {
            RatVec red = cur;
            RatPoly red_poly = cur_poly;
            for (size_t li = 0; li < local.size(); ++li) {
                const auto &[piv, u] = local[li];
                const Rat &c = red[static_cast<size_t>(piv)];
                if (c == 0)
                    continue;
                Rat f = c / u[static_cast<size_t>(piv)];
                for (size_t t = 0; t < red.size(); ++t)
                    if (u[t] != 0)
                        red[t] -= f * u[t];
                red_poly -= f * combos[li];
            }
            int piv = pivot_of(red);
            if (piv < 0) {
                local_min = red_poly.monic();
                break;
            }
            local.emplace_back(piv, red);
            combos.push_back(red_poly);
            cur = m.apply(cur);
            cur_poly = cur_poly * RatPoly::x();
        }
        // lcm(minpoly, local_min)
        RatPoly g = poly_gcd1(minpoly, local_min);
        minpoly = divrem(minpoly * local_min, g).first.monic();
        if (minpoly.degree() == dim)
            break;
        for (auto &entry : local) {
            RatVec red = reduce(entry.second);
            int rp = pivot_of(red);
            if (rp >= 0)
                echelon.emplace_back(rp, std::move(red));
        }
    }
    return minpoly;
}

bool is_semisimple_at(const Derivation &delta, int k) {
    RatPoly m = induced_min_poly(delta, k);
    return poly_gcd1(m, m.derivative()).degree() == 0;
}

NilpotentCofactorCheck nilpotent_cofactor_check(const Derivation &delta, const Series &f) {
    if (!is_nilpotent(delta))
        throw std::domain_error("nilpotent_cofactor_check: derivation is not nilpotent");
    CofactorResult c = cofactor(delta, f);
    if (!c.found())
        return {c.status, false, Rat(0)};
    Rat b0 = c.witness->cofactor.constant_term();
    return {CofactorStatus::FOUND, b0 == 0, b0};
}

DiagonalForm diagonal_form(const Derivation &delta, int k) {
    if (!is_singular(delta))
        throw std::domain_error("diagonal_form: derivation is not singular");
    int n = delta.nvars();
    RatMatrix a = linear_part(delta);
    RatPoly p = charpoly(a);

    // Rational eigenvalues with multiplicity, by root finding on the
    // content-cleared integer polynomial plus deflation.
    std::vector<Rat> roots;
    {
        RatPoly q = p;
        while (q.degree() > 0) {
            std::vector<Rat> cs = q.coeffs();
            Int den = denominator_lcm(cs);
            std::vector<Int> zs;
            for (Rat &c : cs)
                zs.push_back(Int(c * Rat(den)));
            // candidate roots r/s with r | constant, s | lead
            int low = 0;
            while (low < static_cast<int>(zs.size()) && zs[static_cast<size_t>(low)] == 0)
                ++low;
            if (low > 0) {
                for (int t = 0; t < low; ++t)
                    roots.push_back(0);
                std::vector<Rat> shifted(q.coeffs().begin() + low, q.coeffs().end());
                q = RatPoly(std::move(shifted));
                continue;
            }
            bool found = false;
            Int c0 = zs.front();
            Int cl = zs.back();
            if (c0 < 0)
                c0 = -c0;
            if (cl < 0)
                cl = -cl;
            for (Int r = 1; r <= c0 && !found; ++r) {
                if (c0 % r != 0)
                    continue;
                for (Int s = 1; s <= cl && !found; ++s) {
                    if (cl % s != 0)
                        continue;
                    for (int sgn = 1; sgn >= -1 && !found; sgn -= 2) {
                        Rat cand(sgn * r, s);
                        cand.canonicalize();
                        if (q.eval(cand) == 0) {
                            roots.push_back(cand);
                            q = divrem(q, RatPoly({-cand, Rat(1)})).first;
                            found = true;
                        }
                    }
                }
            }
            if (!found)
                return DiagonalForm{DiagonalFormStatus::UNSUPPORTED_EIGENVALUES, {}, {}, {}, k};
        }
    }

    // Eigenbasis of the linear part; rows of the linear change are
    // eigenfunctionals, eigenvalues sorted for determinism.
    std::sort(roots.begin(), roots.end());
    std::vector<Rat> weights;
    RatMatrix t(n, n);
    int row = 0;
    for (size_t i = 0; i < roots.size();) {
        size_t j = i;
        while (j < roots.size() && roots[j] == roots[i])
            ++j;
        RatMatrix shifted = a;
        for (int d = 0; d < n; ++d)
            shifted.at(d, d) -= roots[i];
        std::vector<RatVec> eig = nullspace(shifted);
        if (eig.size() != j - i)
            return DiagonalForm{DiagonalFormStatus::NOT_SEMISIMPLE, {}, {}, {}, k};
        for (const RatVec &v : eig) {
            for (int c = 0; c < n; ++c)
                t.at(row, c) = v[static_cast<size_t>(c)];
            weights.push_back(roots[i]);
            ++row;
        }
        i = j;
    }
    RatMatrix tinv = inverse(t).value();
    Derivation cur = transform_linear(delta, t, tinv).truncated(k);

    std::vector<Series> change;
    change.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Series s(n);
        for (int j = 0; j < n; ++j)
            s.add_term(Monomial::var(n, j), t.at(i, j));
        change.push_back(std::move(s));
    }

    // Kill non-resonant terms degree by degree; any resonant residue
    // contradicts semisimplicity.
    for (int d = 2; d < k; ++d) {
        Derivation wd = graded_part(cur, d - 1);
        bool any = false;
        std::vector<Series> step;
        step.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Series hi(n);
            for (const auto &[mon, c] : wd.coeff(i).terms()) {
                Rat mu = -weights[static_cast<size_t>(i)];
                for (int v = 0; v < n; ++v)
                    mu += weights[static_cast<size_t>(v)] * mon.exp[static_cast<size_t>(v)];
                if (mu == 0)
                    return DiagonalForm{DiagonalFormStatus::NOT_SEMISIMPLE, {}, {}, {}, k};
                hi.add_term(mon, -c / mu);
                any = true;
            }
            step.push_back(Series::variable(n, i) + hi);
        }
        if (!any)
            continue;
        std::vector<Series> step_inv = invert_change(step, k);
        std::vector<Series> nc(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            nc[static_cast<size_t>(i)] = compose(cur.apply(step[static_cast<size_t>(i)]), step_inv, k);
        cur = Derivation(std::move(nc));
        std::vector<Series> composed(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            composed[static_cast<size_t>(i)] = compose(step[static_cast<size_t>(i)], change, k);
        change = std::move(composed);
    }

    Derivation want = Derivation::diagonal(weights).truncated(k);
    if (!(cur - want).is_zero())
        throw internal_inconsistency("diagonal_form: residual after normalization");
    std::vector<Series> inverse_change = invert_change(change, k);
    return DiagonalForm{DiagonalFormStatus::OK, std::move(weights), std::move(change),
                        std::move(inverse_change), k};
}

} // namespace logdiv
