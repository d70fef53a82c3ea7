#pragma once

#include <vector>

#include "logdiv/linalg.hpp"
#include "logdiv/series.hpp"

namespace logdiv {

// Derivation sum_i a_i d_i of the (truncated) power series ring, stored
// through its coefficient series a_i = delta(x_i).
class Derivation {
public:
    Derivation() = default;
    explicit Derivation(std::vector<Series> coeffs);
    static Derivation zero(int nvars);
    // The coordinate derivation d_i.
    static Derivation partial(int nvars, int i);
    // Diagonal derivation sum_i lambda_i x_i d_i.
    static Derivation diagonal(const std::vector<Rat> &lambda);

    int nvars() const { return static_cast<int>(coeffs_.size()); }
    const Series &coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Series> &coeffs() const { return coeffs_; }

    // Minimum truncation across coefficients; empty when all are exact.
    std::optional<int> truncation() const;
    bool is_zero() const;

    Series apply(const Series &f) const;
    Derivation truncated(int k) const;

    Derivation operator-() const;
    Derivation &operator+=(const Derivation &o);
    Derivation &operator-=(const Derivation &o);
    friend Derivation operator+(Derivation a, const Derivation &b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation &b) { return a -= b; }
    friend Derivation operator*(const Rat &c, Derivation d);
    friend Derivation operator*(const Series &s, Derivation d);

    bool operator==(const Derivation &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Derivation &o) const { return coeffs_ != o.coeffs_; }

private:
    std::vector<Series> coeffs_;
};

// True when every coefficient vanishes at the origin.
bool is_singular(const Derivation &d);

// Graded piece whose coefficients are homogeneous of degree i+1 (i >= -1).
Derivation graded_part(const Derivation &d, int i);

// Linear-part matrix A with delta_0 = x A d: A[i][j] is the coefficient
// of x_i in delta(x_j). Matches the Saito-matrix row convention, so the
// two compose without transposition.
RatMatrix linear_part(const Derivation &d);

// Trace of the linear part. Only defined for singular derivations.
Rat trace(const Derivation &d);

// Lie bracket [d, e](x_j) = d(e(x_j)) - e(d(x_j)). Truncated inputs must
// be singular; a truncated non-singular operand is rejected rather than
// silently losing an order of precision.
Derivation bracket(const Derivation &d, const Derivation &e);

// f(M x): every variable substituted by its row of M. Exactness and
// truncation of f are preserved.
Series substitute_linear(const Series &f, const RatMatrix &m);

// Pushforward of d under the linear change y = T x (tinv = T^{-1}):
// the coefficient of d_i becomes (sum_l T_il a_l)(T^{-1} y).
Derivation transform_linear(const Derivation &d, const RatMatrix &t, const RatMatrix &tinv);

} // namespace logdiv
