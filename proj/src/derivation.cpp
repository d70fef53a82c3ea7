#include "logdiv/derivation.hpp"

#include <stdexcept>

namespace logdiv {

Derivation::Derivation(std::vector<Series> coeffs) : coeffs_(std::move(coeffs)) {
    int n = static_cast<int>(coeffs_.size());
    for (const Series &s : coeffs_)
        if (s.nvars() != n)
            throw std::invalid_argument("Derivation: coefficient variable count mismatch");
}

Derivation Derivation::zero(int nvars) {
    return Derivation(std::vector<Series>(static_cast<size_t>(nvars), Series::zero(nvars)));
}

Derivation Derivation::partial(int nvars, int i) {
    auto c = std::vector<Series>(static_cast<size_t>(nvars), Series::zero(nvars));
    c[static_cast<size_t>(i)] = Series::constant(nvars, 1);
    return Derivation(std::move(c));
}

Derivation Derivation::diagonal(const std::vector<Rat> &lambda) {
    int n = static_cast<int>(lambda.size());
    auto c = std::vector<Series>(static_cast<size_t>(n), Series::zero(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] * Series::variable(n, i);
    return Derivation(std::move(c));
}

std::optional<int> Derivation::truncation() const {
    std::optional<int> k;
    for (const Series &s : coeffs_)
        k = min_trunc(k, s.truncation());
    return k;
}

bool Derivation::is_zero() const {
    for (const Series &s : coeffs_)
        if (!s.is_zero())
            return false;
    return true;
}

Series Derivation::apply(const Series &f) const {
    if (f.nvars() != nvars())
        throw std::invalid_argument("Derivation::apply: variable count mismatch");
    // delta(f) = sum a_i d_i(f). When delta is singular and f is known
    // mod m^k the result is still valid mod m^k: the error of d_i(f)
    // lies in m^(k-1) and gets multiplied by a_i in m. Hence the raw
    // product is truncated at the combined order rather than at the
    // naive min with k-1.
    std::optional<int> k = truncation();
    if (is_singular(*this))
        k = min_trunc(k, f.truncation());
    else if (f.truncation())
        k = min_trunc(k, *f.truncation() - 1);
    Series r(nvars());
    r.set_truncation(k);
    for (int i = 0; i < nvars(); ++i) {
        const Series &a = coeffs_[static_cast<size_t>(i)];
        if (a.is_zero())
            continue;
        r += Series::mul_trunc(a, f.derivative(i), k);
    }
    return r;
}

Derivation Derivation::truncated(int k) const {
    std::vector<Series> c;
    c.reserve(coeffs_.size());
    for (const Series &s : coeffs_)
        c.push_back(s.truncated(k));
    return Derivation(std::move(c));
}

Derivation Derivation::operator-() const {
    std::vector<Series> c;
    c.reserve(coeffs_.size());
    for (const Series &s : coeffs_)
        c.push_back(-s);
    return Derivation(std::move(c));
}

Derivation &Derivation::operator+=(const Derivation &o) {
    if (o.nvars() != nvars())
        throw std::invalid_argument("Derivation: variable count mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

Derivation &Derivation::operator-=(const Derivation &o) {
    if (o.nvars() != nvars())
        throw std::invalid_argument("Derivation: variable count mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Derivation operator*(const Rat &c, Derivation d) {
    for (Series &s : d.coeffs_)
        s = c * s;
    return d;
}

Derivation operator*(const Series &s, Derivation d) {
    for (Series &a : d.coeffs_)
        a = s * a;
    return d;
}

bool is_singular(const Derivation &d) {
    for (int i = 0; i < d.nvars(); ++i)
        if (d.coeff(i).constant_term() != 0)
            return false;
    return true;
}

Derivation graded_part(const Derivation &d, int i) {
    if (i < -1)
        throw std::invalid_argument("graded_part: index below -1");
    std::vector<Series> c;
    c.reserve(static_cast<size_t>(d.nvars()));
    for (int j = 0; j < d.nvars(); ++j)
        c.push_back(d.coeff(j).graded_piece(i + 1));
    return Derivation(std::move(c));
}

RatMatrix linear_part(const Derivation &d) {
    int n = d.nvars();
    RatMatrix a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            a.at(i, j) = d.coeff(j).coeff(Monomial::var(n, i));
    return a;
}

Rat trace(const Derivation &d) {
    if (!is_singular(d))
        throw std::domain_error("trace: derivation is not singular");
    Rat t = 0;
    for (int i = 0; i < d.nvars(); ++i)
        t += d.coeff(i).coeff(Monomial::var(d.nvars(), i));
    return t;
}

Derivation bracket(const Derivation &d, const Derivation &e) {
    if (d.nvars() != e.nvars())
        throw std::invalid_argument("bracket: variable count mismatch");
    if ((d.truncation() && !is_singular(d)) || (e.truncation() && !is_singular(e)))
        throw std::invalid_argument("bracket: truncated operands must be singular");
    std::vector<Series> c;
    c.reserve(static_cast<size_t>(d.nvars()));
    for (int j = 0; j < d.nvars(); ++j)
        c.push_back(d.apply(e.coeff(j)) - e.apply(d.coeff(j)));
    return Derivation(std::move(c));
}

Series substitute_linear(const Series &f, const RatMatrix &m) {
    int n = f.nvars();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("substitute_linear: matrix shape mismatch");
    std::vector<Series> forms;
    forms.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Series l(n);
        for (int j = 0; j < n; ++j)
            l.add_term(Monomial::var(n, j), m.at(i, j));
        forms.push_back(std::move(l));
    }
    std::vector<std::vector<Series>> pw(static_cast<size_t>(n),
                                        std::vector<Series>{Series::constant(n, 1)});
    auto power = [&](int i, int e) -> const Series & {
        auto &cache = pw[static_cast<size_t>(i)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * forms[static_cast<size_t>(i)]);
        return cache[static_cast<size_t>(e)];
    };
    Series r(n);
    r.set_truncation(f.truncation());
    for (const auto &[mono, c] : f.terms()) {
        Series t = Series::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (mono.exp[static_cast<size_t>(i)] != 0)
                t = t * power(i, mono.exp[static_cast<size_t>(i)]);
        r += t;
    }
    return r;
}

Derivation transform_linear(const Derivation &d, const RatMatrix &t, const RatMatrix &tinv) {
    int n = d.nvars();
    std::vector<Series> c(static_cast<size_t>(n), Series::zero(n));
    for (int i = 0; i < n; ++i) {
        Series s(n);
        for (int l = 0; l < n; ++l)
            if (t.at(i, l) != 0)
                s += t.at(i, l) * d.coeff(l);
        c[static_cast<size_t>(i)] = substitute_linear(s, tinv);
    }
    return Derivation(std::move(c));
}

} // namespace logdiv
