#include "logdiv/logmodule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "logdiv/polygcd.hpp"

namespace logdiv {

namespace {

// Permutation-expansion determinant; the Saito matrices here are tiny.
Series series_det(const std::vector<std::vector<Series>> &a) {
    size_t n = a.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    int nv = a[0][0].nvars();
    std::optional<int> k;
    for (const auto &row : a)
        for (const Series &e : row)
            k = min_trunc(k, e.truncation());
    Series acc(nv);
    acc.set_truncation(k);
    std::vector<size_t> c(n, 0);
    int sign = 1;
    auto add_term = [&]() {
        Series t = Series::constant(nv, sign);
        for (size_t i = 0; i < n; ++i)
            t = Series::mul_trunc(t, a[i][perm[i]], k);
        acc += t;
    };
    add_term();
    size_t i = 0;
    while (i < n) { // Heap's algorithm over the permutations
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            add_term();
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return acc;
}

} // namespace

CofactorResult cofactor(const Derivation &delta, const Series &f) {
    if (delta.nvars() != f.nvars())
        throw std::invalid_argument("cofactor: variable count mismatch");
    bool all_exact = f.exact() && delta.truncation() == std::nullopt;
    if (f.is_zero()) {
        if (all_exact)
            throw std::domain_error("cofactor: f = 0");
        return {CofactorStatus::INCONCLUSIVE, std::nullopt};
    }
    if (all_exact) {
        Series g = delta.apply(f);
        if (g.is_zero())
            return {CofactorStatus::FOUND,
                    LogWitness{delta, Series::zero(f.nvars()), Validity::exact_v()}};
        auto q = exact_divide(g, f);
        if (!q)
            return {CofactorStatus::NOT_LOGARITHMIC, std::nullopt};
        return {CofactorStatus::FOUND, LogWitness{delta, *q, Validity::exact_v()}};
    }
    if (!is_singular(delta))
        throw std::invalid_argument("cofactor: truncated work requires a singular derivation");
    Series g = delta.apply(f);
    int k = g.truncation() ? *g.truncation() : *min_trunc(f.truncation(), delta.truncation());
    if (k <= *f.order())
        return {CofactorStatus::INCONCLUSIVE, std::nullopt};
    auto a = divide_series(g, f, k);
    if (!a)
        return {CofactorStatus::NOT_LOGARITHMIC, std::nullopt};
    return {CofactorStatus::FOUND, LogWitness{delta, *a, Validity::mod(k)}};
}

std::string to_string(SaitoRejection r) {
    switch (r) {
    case SaitoRejection::NOT_LOGARITHMIC:
        return "NOT_LOGARITHMIC";
    case SaitoRejection::DET_NOT_UNIT_MULTIPLE:
        return "DET_NOT_UNIT_MULTIPLE";
    case SaitoRejection::NOT_REDUCED:
        return "NOT_REDUCED";
    }
    return "?";
}

CertifyResult certify_saito(const Series &f, const std::vector<Derivation> &candidates, int k,
                            bool skip_reduced_check) {
    int n = f.nvars();
    if (static_cast<int>(candidates.size()) != n)
        throw std::invalid_argument("certify_saito: need exactly n candidates");
    if (f.is_zero())
        throw std::domain_error("certify_saito: f = 0");
    if (!skip_reduced_check) {
        if (!f.exact())
            throw std::invalid_argument("certify_saito: reducedness undecidable on truncations "
                                        "(pass skip_reduced_check)");
        if (!is_reduced(f))
            return {std::nullopt, SaitoRejection::NOT_REDUCED, -1};
    }

    std::vector<LogWitness> witnesses;
    Validity validity = Validity::exact_v();
    for (int i = 0; i < n; ++i) {
        CofactorResult c = cofactor(candidates[static_cast<size_t>(i)], f);
        if (!c.found())
            return {std::nullopt, SaitoRejection::NOT_LOGARITHMIC, i};
        validity = validity.meet(c.witness->validity);
        witnesses.push_back(std::move(*c.witness));
    }

    std::vector<std::vector<Series>> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)].push_back(candidates[static_cast<size_t>(i)].coeff(j));
    Series det_a = series_det(a);

    Series quotient(n);
    if (det_a.exact() && f.exact()) {
        auto q = exact_divide(det_a, f);
        if (!q || !q->is_unit())
            return {std::nullopt, SaitoRejection::DET_NOT_UNIT_MULTIPLE, -1};
        quotient = *q;
        if (!quotient.is_constant())
            validity = validity.meet(Validity::mod(k));
    } else {
        auto q = divide_series(det_a, f, k);
        if (!q || !q->is_unit())
            return {std::nullopt, SaitoRejection::DET_NOT_UNIT_MULTIPLE, -1};
        quotient = *q;
        validity = validity.meet(Validity::mod(k));
    }
    Series u = invert_unit(quotient, k);

    SaitoBasis basis{candidates, std::move(a), std::move(det_a), std::move(u), std::move(witnesses),
                     validity};
    return {std::move(basis), SaitoRejection::NOT_LOGARITHMIC, -1};
}

std::vector<LogWitness> solve_log_derivations(const Series &f, int degree_bound) {
    if (!f.exact())
        throw std::invalid_argument("solve_log_derivations: f must be an exact polynomial");
    if (f.is_zero())
        throw std::domain_error("solve_log_derivations: f = 0");
    if (degree_bound < 1)
        throw std::invalid_argument("solve_log_derivations: degree bound must be >= 1");

    int n = f.nvars();
    int d = degree_bound;
    std::vector<Monomial> coef_mons = monomials_up_to(n, d);
    std::vector<Monomial> cof_mons = monomials_up_to(n, std::max(d - 1, 0));
    size_t ncols = static_cast<size_t>(n) * coef_mons.size() + cof_mons.size();

    // Columns are the expansions of x^mu * d_i(f) and -x^nu * f; rows are
    // indexed by every monomial that occurs.
    std::vector<Series> columns;
    columns.reserve(ncols);
    for (int i = 0; i < n; ++i) {
        Series partial = f.derivative(i);
        for (const Monomial &mu : coef_mons)
            columns.push_back(Series::from_term(mu, 1) * partial);
    }
    for (const Monomial &nu : cof_mons)
        columns.push_back(Rat(-1) * (Series::from_term(nu, 1) * f));

    std::map<Monomial, int, GrlexLess> row_of;
    for (const Series &col : columns)
        for (const auto &[m, c] : col.terms())
            row_of.emplace(m, 0);
    int nrows = 0;
    for (auto &[m, idx] : row_of)
        idx = nrows++;

    RatMatrix sys(nrows, static_cast<int>(ncols));
    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto &[m, c] : columns[j].terms())
            sys.at(row_of.at(m), static_cast<int>(j)) = c;

    // Canonical echelon basis of the solution space: row-reduce the raw
    // kernel vectors so the output is ordered by leading unknown.
    std::vector<RatVec> kernel = nullspace(sys);
    std::vector<RatVec> echelon;
    if (!kernel.empty()) {
        RatMatrix sol(static_cast<int>(kernel.size()), static_cast<int>(ncols));
        for (size_t r = 0; r < kernel.size(); ++r)
            for (size_t cidx = 0; cidx < ncols; ++cidx)
                sol.at(static_cast<int>(r), static_cast<int>(cidx)) = kernel[r][cidx];
        size_t nontrivial = rref(sol).size();
        for (size_t r = 0; r < nontrivial; ++r) {
            RatVec v(ncols);
            for (size_t cidx = 0; cidx < ncols; ++cidx)
                v[cidx] = sol.at(static_cast<int>(r), static_cast<int>(cidx));
            echelon.push_back(std::move(v));
        }
    }

    std::vector<LogWitness> out;
    for (RatVec &v : echelon) {
        make_primitive(v);
        std::vector<Series> coeffs(static_cast<size_t>(n), Series::zero(n));
        size_t pos = 0;
        for (int i = 0; i < n; ++i)
            for (const Monomial &mu : coef_mons)
                coeffs[static_cast<size_t>(i)].add_term(mu, v[pos++]);
        Series cof(n);
        for (const Monomial &nu : cof_mons)
            cof.add_term(nu, v[pos++]);
        Derivation delta(std::move(coeffs));
        if (!(delta.apply(f) - cof * f).is_zero())
            throw internal_inconsistency("solve_log_derivations: solution fails to verify");
        out.push_back(LogWitness{std::move(delta), std::move(cof), Validity::exact_v()});
    }
    return out;
}

std::optional<SaitoBasis> extract_basis(const Series &f, const std::vector<LogWitness> &generators,
                                        int k) {
    int n = f.nvars();
    int m = static_cast<int>(generators.size());
    if (m > 12)
        throw std::invalid_argument("extract_basis: more than 12 generators");
    if (m < n)
        return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<Derivation> cand;
        cand.reserve(static_cast<size_t>(n));
        for (int i : idx)
            cand.push_back(generators[static_cast<size_t>(i)].derivation);
        CertifyResult res = certify_saito(f, cand, k, /*skip_reduced_check=*/true);
        if (res.certified())
            return std::move(res.basis);
        // next lexicographic n-combination of {0..m-1}
        int i = n - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - n + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

ProductResult is_product(const Series &f, int degree_bound) {
    if (f.is_zero())
        throw std::domain_error("is_product: f = 0");
    for (LogWitness &w : solve_log_derivations(f, degree_bound))
        if (!is_singular(w.derivation))
            return {true, degree_bound, std::move(w)};
    return {false, degree_bound, std::nullopt};
}

ProductSplit split_product(const Series &f, const LogWitness &witness, int k) {
    const Derivation &delta = witness.derivation;
    int n = delta.nvars();
    if (is_singular(delta))
        throw std::invalid_argument("split_product: witness must be non-singular");
    if (f.nvars() != n)
        throw std::invalid_argument("split_product: variable count mismatch");
    if (!f.order() || *f.order() >= k)
        throw std::invalid_argument("split_product: truncation order does not see f");

    // Linear change sending the constant part of delta to d_n.
    std::vector<Rat> c0(static_cast<size_t>(n));
    int p = -1;
    for (int i = 0; i < n; ++i) {
        c0[static_cast<size_t>(i)] = delta.coeff(i).constant_term();
        if (p < 0 && c0[static_cast<size_t>(i)] != 0)
            p = i;
    }
    RatMatrix t(n, n);
    int row = 0;
    for (int q = 0; q < n; ++q) {
        if (q == p)
            continue;
        t.at(row, q) = 1;
        t.at(row, p) = -c0[static_cast<size_t>(q)] / c0[static_cast<size_t>(p)];
        ++row;
    }
    t.at(n - 1, p) = 1 / c0[static_cast<size_t>(p)];
    RatMatrix tinv = inverse(t).value();
    Derivation tilted = transform_linear(delta, t, tinv);

    // Straighten: solve (d_n + eps)(y_i + h_i) = [i == n-1] order by order.
    std::vector<Series> ec(tilted.coeffs());
    ec[static_cast<size_t>(n - 1)] -= Series::constant(n, 1);
    Derivation eps(std::move(ec));
    int kw = k + 1;
    std::vector<Series> psi;
    psi.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Series h = Series::zero(n).truncated(kw);
        const Series &target = eps.coeff(i);
        for (int pass = 0; pass <= kw; ++pass) {
            Series next = -((target + eps.apply(h)).truncated(kw - 1).integral(n - 1));
            if (next == h)
                break;
            h = next;
        }
        psi.push_back(Series::variable(n, i) + h);
    }

    // Full change x -> psi(Tx) and its inverse; re-check the straightening.
    std::vector<Series> change;
    change.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        change.push_back(substitute_linear(psi[static_cast<size_t>(i)], t));
    std::vector<Series> inv = invert_change(change, kw);
    for (int i = 0; i < n; ++i) {
        Series straightened = compose(delta.apply(change[static_cast<size_t>(i)]), inv, k);
        Series want = i == n - 1 ? Series::constant(n, 1) : Series::zero(n);
        if (!straightened.congruent(want, k))
            throw internal_inconsistency("split_product: straightening failed");
    }

    Series ftilde = compose(f, inv, k);
    Series g = ftilde.substitute_zero(n - 1);
    if (g.is_zero())
        throw internal_inconsistency("split_product: transformed f vanishes on the slice");
    auto u = divide_series(ftilde, g, k);
    if (!u || !u->is_unit())
        throw internal_inconsistency("split_product: unit split failed");
    if (!Series::mul_trunc(*u, g, k).congruent(ftilde, k))
        throw internal_inconsistency("split_product: u*g does not reproduce f");
    return ProductSplit{std::move(change), std::move(inv), n - 1, std::move(*u), std::move(g), k};
}

} // namespace logdiv
