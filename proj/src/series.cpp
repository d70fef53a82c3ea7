#include "logdiv/series.hpp"

#include <algorithm>

namespace logdiv {

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

Series Series::constant(int nvars, const Rat &c) {
    Series s(nvars);
    s.add_term(Monomial::one(nvars), c);
    return s;
}

Series Series::variable(int nvars, int i) {
    Series s(nvars);
    s.add_term(Monomial::var(nvars, i), 1);
    return s;
}

Series Series::from_term(const Monomial &m, const Rat &c) {
    Series s(m.nvars());
    s.add_term(m, c);
    return s;
}

std::optional<int> Series::order() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.degree();
}

int Series::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.degree();
}

Rat Series::coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Series::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Series::add_term(const Monomial &m, const Rat &c) {
    if (c == 0)
        return;
    if (m.nvars() != nvars_)
        throw std::invalid_argument("Series::add_term: variable count mismatch");
    if (trunc_ && m.degree() >= *trunc_)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Series::set_truncation(std::optional<int> k) {
    trunc_ = k;
    if (trunc_) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.degree() >= *trunc_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
}

Series Series::truncated(int k) const {
    Series r = *this;
    r.set_truncation(min_trunc(trunc_, k));
    return r;
}

Series Series::initial_form() const {
    if (terms_.empty())
        throw std::domain_error("initial_form: zero series");
    int d = terms_.begin()->first.degree();
    return graded_piece(d);
}

Series Series::graded_piece(int d) const {
    Series r(nvars_);
    r.trunc_ = trunc_;
    for (const auto &[m, c] : terms_) {
        int dm = m.degree();
        if (dm > d)
            break;
        if (dm == d)
            r.terms_.emplace(m, c);
    }
    return r;
}

Series Series::derivative(int i) const {
    Series r(nvars_);
    if (trunc_)
        r.trunc_ = *trunc_ - 1;
    for (const auto &[m, c] : terms_) {
        int e = m.exp[static_cast<size_t>(i)];
        if (e == 0)
            continue;
        Monomial q = m;
        q.exp[static_cast<size_t>(i)] = e - 1;
        r.add_term(q, c * e);
    }
    return r;
}

Series Series::integral(int i) const {
    Series r(nvars_);
    if (trunc_)
        r.trunc_ = *trunc_ + 1;
    for (const auto &[m, c] : terms_) {
        Monomial q = m;
        int e = ++q.exp[static_cast<size_t>(i)];
        r.add_term(q, c / e);
    }
    return r;
}

Series Series::substitute_zero(int i) const {
    Series r(nvars_);
    r.trunc_ = trunc_;
    for (const auto &[m, c] : terms_)
        if (m.exp[static_cast<size_t>(i)] == 0)
            r.terms_.emplace(m, c);
    return r;
}

Series Series::drop_var(int i) const {
    Series r(nvars_ - 1);
    r.trunc_ = trunc_;
    for (const auto &[m, c] : terms_) {
        if (m.exp[static_cast<size_t>(i)] != 0)
            throw std::domain_error("drop_var: series depends on dropped variable");
        Monomial q(nvars_ - 1);
        for (int j = 0, t = 0; j < nvars_; ++j)
            if (j != i)
                q.exp[static_cast<size_t>(t++)] = m.exp[static_cast<size_t>(j)];
        r.terms_.emplace(q, c);
    }
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

void Series::check_compatible(const Series &o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Series: variable count mismatch");
}

Series &Series::operator+=(const Series &o) {
    check_compatible(o);
    set_truncation(min_trunc(trunc_, o.trunc_));
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Series &Series::operator-=(const Series &o) {
    check_compatible(o);
    set_truncation(min_trunc(trunc_, o.trunc_));
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Series Series::mul_trunc(const Series &a, const Series &b, std::optional<int> k) {
    a.check_compatible(b);
    Series r(a.nvars_);
    r.trunc_ = k;
    for (const auto &[ma, ca] : a.terms_) {
        int da = ma.degree();
        if (k && da >= *k)
            break;
        for (const auto &[mb, cb] : b.terms_) {
            if (k && da + mb.degree() >= *k)
                break;
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

Series operator*(const Series &a, const Series &b) {
    return Series::mul_trunc(a, b, min_trunc(a.trunc_, b.trunc_));
}

Series operator*(const Rat &c, Series s) {
    if (c == 0) {
        s.terms_.clear();
        return s;
    }
    for (auto &[m, v] : s.terms_)
        v *= c;
    return s;
}

bool Series::congruent(const Series &o, int k) const {
    Series d = *this - o;
    for (const auto &[m, c] : d.terms_)
        if (m.degree() < k)
            return false;
    return true;
}

Series invert_unit(const Series &u, int k) {
    if (u.constant_term() == 0)
        throw std::domain_error("invert_unit: constant term is zero");
    Rat u0 = u.constant_term();
    if (u.is_constant() && u.exact())
        return Series::constant(u.nvars(), 1 / u0);
    std::vector<Series> upiece, vpiece;
    upiece.reserve(static_cast<size_t>(k));
    for (int d = 0; d < k; ++d)
        upiece.push_back(u.graded_piece(d));
    Series v = Series::constant(u.nvars(), 1 / u0);
    vpiece.push_back(v);
    for (int d = 1; d < k; ++d) {
        Series acc(u.nvars());
        for (int j = 1; j <= d; ++j)
            acc += Series::mul_trunc(upiece[static_cast<size_t>(j)],
                                     vpiece[static_cast<size_t>(d - j)], std::nullopt);
        Series piece = (Rat(-1) / u0) * acc;
        vpiece.push_back(piece);
        v += piece;
    }
    return v.truncated(*min_trunc(u.truncation(), k));
}

Series exp_series(const Series &s, int k) {
    if (s.constant_term() != 0)
        throw std::domain_error("exp_series: nonzero constant term");
    Series result = Series::constant(s.nvars(), 1).truncated(k);
    Series power = result;
    Rat factorial = 1;
    for (int j = 1; j < k; ++j) {
        power = Series::mul_trunc(power, s, k);
        if (power.is_zero())
            break;
        factorial *= j;
        result += (Rat(1) / factorial) * power;
    }
    if (auto ks = s.truncation())
        result = result.truncated(*ks);
    return result;
}

std::map<Rat, Series> weight_split(const Series &s, const std::vector<Rat> &lambda) {
    if (static_cast<int>(lambda.size()) != s.nvars())
        throw std::invalid_argument("weight_split: weight vector length mismatch");
    std::map<Rat, Series> parts;
    for (const auto &[m, c] : s.terms()) {
        Rat w = 0;
        for (size_t i = 0; i < lambda.size(); ++i)
            w += lambda[i] * m.exp[i];
        auto it = parts.find(w);
        if (it == parts.end()) {
            Series p(s.nvars());
            p.set_truncation(s.truncation());
            it = parts.emplace(w, std::move(p)).first;
        }
        it->second.add_term(m, c);
    }
    return parts;
}

Series compose(const Series &f, const std::vector<Series> &phi, int k) {
    int n = f.nvars();
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("compose: substitution arity mismatch");
    std::optional<int> kr = k;
    for (const Series &p : phi) {
        if (p.constant_term() != 0)
            throw std::domain_error("compose: substitution does not vanish at the origin");
        kr = min_trunc(kr, p.truncation());
    }
    kr = min_trunc(kr, f.truncation());
    int kk = *kr;
    // Memoized powers of each substituted coordinate.
    std::vector<std::vector<Series>> pow(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        pow[static_cast<size_t>(i)].push_back(Series::constant(phi[0].nvars(), 1).truncated(kk));
    auto power = [&](int i, int e) -> const Series & {
        auto &cache = pow[static_cast<size_t>(i)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(Series::mul_trunc(cache.back(), phi[static_cast<size_t>(i)], kk));
        return cache[static_cast<size_t>(e)];
    };
    Series r(phi[0].nvars());
    r.set_truncation(kk);
    for (const auto &[m, c] : f.terms()) {
        if (m.degree() >= kk)
            break; // phi_i in m, so x^alpha contributes only below order k
        Series t = Series::constant(phi[0].nvars(), c).truncated(kk);
        for (int i = 0; i < n; ++i)
            if (m.exp[static_cast<size_t>(i)] != 0)
                t = Series::mul_trunc(t, power(i, m.exp[static_cast<size_t>(i)]), kk);
        r += t;
    }
    return r;
}

namespace {

// Tiny dense inverse for the linear part of a coordinate change.
std::vector<std::vector<Rat>> invert_small(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("invert_change: linear part not invertible");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::vector<Series> invert_change(const std::vector<Series> &phi, int k) {
    int n = static_cast<int>(phi.size());
    std::vector<std::vector<Rat>> lin(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        if (phi[static_cast<size_t>(i)].constant_term() != 0)
            throw std::domain_error("invert_change: change does not fix the origin");
        for (int j = 0; j < n; ++j)
            lin[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                phi[static_cast<size_t>(i)].coeff(Monomial::var(n, j));
    }
    auto linv = invert_small(lin);
    // Nonlinear tail h of phi, and the linear start psi = L^{-1} y.
    std::vector<Series> h(phi);
    std::vector<Series> start(static_cast<size_t>(n), Series::zero(n));
    for (int i = 0; i < n; ++i) {
        Series s(n);
        s.set_truncation(k);
        for (int j = 0; j < n; ++j) {
            h[static_cast<size_t>(i)].add_term(
                Monomial::var(n, j), -lin[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            s.add_term(Monomial::var(n, j), linv[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        start[static_cast<size_t>(i)] = s;
    }
    // psi = L^{-1}(y - h(psi)); each pass fixes one more order.
    std::vector<Series> psi = start;
    for (int pass = 0; pass < k; ++pass) {
        std::vector<Series> hpsi(static_cast<size_t>(n), Series::zero(n));
        for (int j = 0; j < n; ++j)
            hpsi[static_cast<size_t>(j)] = compose(h[static_cast<size_t>(j)], psi, k);
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            Series cand = start[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j)
                cand -= linv[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                        hpsi[static_cast<size_t>(j)];
            if (cand != psi[static_cast<size_t>(i)]) {
                psi[static_cast<size_t>(i)] = cand;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return psi;
}

std::optional<Series> exact_divide(const Series &a, const Series &b) {
    if (!a.exact() || !b.exact())
        throw std::invalid_argument("exact_divide: operands must be exact polynomials");
    if (b.is_zero())
        throw std::domain_error("exact_divide: division by zero");
    Series r = a;
    Series q(a.nvars());
    const Monomial &lb = b.terms().rbegin()->first;
    const Rat &cb = b.terms().rbegin()->second;
    while (!r.is_zero()) {
        const Monomial &lr = r.terms().rbegin()->first;
        if (!lb.divides(lr))
            return std::nullopt;
        Series t = Series::from_term(lb.quotient_of(lr), r.terms().rbegin()->second / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// Exact division of homogeneous polynomials (same truncation-free maps).
std::optional<Series> homogeneous_divide(const Series &h, const Series &g) {
    if (h.is_zero())
        return Series::zero(h.nvars());
    Series r = h;
    r.set_truncation(std::nullopt);
    Series gg = g;
    gg.set_truncation(std::nullopt);
    return exact_divide(r, gg);
}

} // namespace

std::optional<Series> divide_series(const Series &num, const Series &den, int k) {
    if (den.is_zero())
        throw std::domain_error("divide_series: division by zero");
    Series init = den.initial_form();
    int m0 = *den.order();
    k = *min_trunc(k, min_trunc(num.truncation(), den.truncation()));
    Series r = num.truncated(k);
    Series q(num.nvars());
    q.set_truncation(std::max(k - m0, 0));
    while (!r.is_zero()) {
        int t = *r.order();
        if (t >= k)
            break;
        auto piece = homogeneous_divide(r.graded_piece(t), init);
        if (!piece)
            return std::nullopt;
        Series qp = *piece; // homogeneous of degree t - m0
        q += qp;
        r -= Series::mul_trunc(qp, den, k);
    }
    return q;
}

} // namespace logdiv
