#pragma once

#include <numeric>
#include <vector>

namespace logdiv {

// Exponent vector of a power product. The ambient variable count is the
// vector length and must agree across every monomial of a series.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(int nvars) : exp(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        for (int e : exp)
            if (e != 0)
                return false;
        return true;
    }

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m(nvars);
        m.exp[static_cast<size_t>(i)] = power;
        return m;
    }

    Monomial times(const Monomial &other) const {
        Monomial r = *this;
        for (size_t i = 0; i < exp.size(); ++i)
            r.exp[i] += other.exp[i];
        return r;
    }

    bool divides(const Monomial &other) const {
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > other.exp[i])
                return false;
        return true;
    }

    // other / this; caller must ensure divisibility.
    Monomial quotient_of(const Monomial &other) const {
        Monomial r = other;
        for (size_t i = 0; i < exp.size(); ++i)
            r.exp[i] -= exp[i];
        return r;
    }

    bool operator==(const Monomial &o) const { return exp == o.exp; }
    bool operator!=(const Monomial &o) const { return exp != o.exp; }
};

// Canonical term order: total degree first, ties broken lexicographically
// with the earlier variable dominating (x^2 < x*y < y^2). This is a proper
// monomial order, so leading-term division arguments apply.
struct GrlexLess {
    bool operator()(const Monomial &a, const Monomial &b) const {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        // Same degree: a comes first when its exponent vector is
        // lexicographically larger (more weight on earlier variables).
        return a.exp > b.exp;
    }
};

// All monomials of total degree <= maxdeg, in canonical order.
std::vector<Monomial> monomials_up_to(int nvars, int maxdeg);

} // namespace logdiv
