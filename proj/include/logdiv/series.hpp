#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "logdiv/monomial.hpp"
#include "logdiv/rational.hpp"

namespace logdiv {

// Multivariate polynomial / truncated formal power series with exact
// rational coefficients.
//
// Invariants:
//   - no stored zero coefficients;
//   - when truncated at order k, every stored monomial has degree < k;
//   - terms are kept in the canonical (graded, then lexicographic) order.
//
// A value without a truncation order is an exact polynomial. Arithmetic
// propagates the minimum truncation order of its operands, so precision
// loss is explicit in the result.
class Series {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Series() : nvars_(0) {}
    explicit Series(int nvars) : nvars_(nvars) {}

    static Series zero(int nvars) { return Series(nvars); }
    static Series constant(int nvars, const Rat &c);
    static Series variable(int nvars, int i);
    static Series from_term(const Monomial &m, const Rat &c);

    int nvars() const { return nvars_; }
    bool exact() const { return !trunc_.has_value(); }
    std::optional<int> truncation() const { return trunc_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Minimum total degree of the stored terms; empty for the zero series
    // (order infinity). For truncated values this is a certified lower
    // bound only below the truncation order.
    std::optional<int> order() const;

    // Maximum stored total degree; -1 for the zero series.
    int degree() const;

    Rat coeff(const Monomial &m) const;
    Rat constant_term() const { return coeff(Monomial::one(nvars_)); }
    bool is_unit() const { return constant_term() != 0; }
    bool is_constant() const;

    void add_term(const Monomial &m, const Rat &c);
    void set_truncation(std::optional<int> k);

    Series truncated(int k) const;
    Series initial_form() const;
    Series graded_piece(int d) const;
    Series derivative(int i) const;
    Series integral(int i) const;
    Series substitute_zero(int i) const;

    // Reinterprets the series in a smaller variable list; requires that no
    // stored term involves the dropped variable.
    Series drop_var(int i) const;

    Series operator-() const;
    Series &operator+=(const Series &o);
    Series &operator-=(const Series &o);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(const Series &a, const Series &b);
    friend Series operator*(const Rat &c, Series s);
    friend Series operator*(Series s, const Rat &c) { return c * std::move(s); }

    // Product of the stored terms truncated at an explicit order,
    // independent of the operands' own markers. Several operations
    // (derivation application, cofactor solving) are valid one order
    // beyond what blind min-propagation would give; they use this.
    static Series mul_trunc(const Series &a, const Series &b, std::optional<int> k);

    bool operator==(const Series &o) const {
        return nvars_ == o.nvars_ && trunc_ == o.trunc_ && terms_ == o.terms_;
    }
    bool operator!=(const Series &o) const { return !(*this == o); }

    // Termwise equality modulo m^k.
    bool congruent(const Series &o, int k) const;

private:
    void check_compatible(const Series &o) const;

    int nvars_;
    std::optional<int> trunc_;
    TermMap terms_;
};

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b);

// Inverse of a unit modulo m^k, by order-by-order recursion. Exact for
// constant input. Throws std::domain_error on a non-unit.
Series invert_unit(const Series &u, int k);

// exp of a series without constant term, truncated at order k.
Series exp_series(const Series &s, int k);

// Splits a series into weight eigencomponents for the diagonal derivation
// sum_i lambda_i x_i d_i: term x^alpha goes to the part of weight
// alpha . lambda.
std::map<Rat, Series> weight_split(const Series &s, const std::vector<Rat> &lambda);

// Substitution x_i <- phi_i truncated at order k. Each phi_i must vanish
// at the origin so the composition is defined on truncations.
Series compose(const Series &f, const std::vector<Series> &phi, int k);

// Inverse of a formal coordinate change (phi_i = linear + higher, with
// invertible linear part), computed to order k.
std::vector<Series> invert_change(const std::vector<Series> &phi, int k);

// Exact division of polynomials; empty when b does not divide a.
std::optional<Series> exact_divide(const Series &a, const Series &b);

// Order-by-order division: q with q*den = num mod m^k, or empty when some
// graded step is not divisible by the initial form of den.
std::optional<Series> divide_series(const Series &num, const Series &den, int k);

} // namespace logdiv
