#pragma once

#include <optional>
#include <vector>

#include "logdiv/jordan.hpp"
#include "logdiv/logmodule.hpp"

namespace logdiv {

// Unit extraction along a diagonal derivation: f = u g with u = exp of
// the weighted primitive of the non-constant cofactor part, and
// delta_lambda(g) = c0 g, all mod m^k.
struct DiagNormalization {
    Series unit;
    Series normalized; // g
    Rat eigenvalue;    // c0
    Series cofactor;   // the c actually used
    int k = 0;
};

// The cofactor c may be supplied (it is then verified) or recomputed,
// which is the default and avoids stale witnesses.
DiagNormalization diag_normalize(const std::vector<Rat> &lambda, const Series &f,
                                 const std::optional<Series> &c, int k);

// g with delta_lambda(g) = 0 in two variables is a unit times a single
// power product when its support sits on one weight-zero ray.
struct EigenSupportFactor {
    bool monomial_type = false;
    Monomial power;    // (p, q)
    Series unit_part;  // v with g = v * x^p y^q
};

EigenSupportFactor eigen_support_factor(const Series &g, const std::vector<Rat> &lambda);

// Appendix-A normal form of a certified plane-curve basis. Case 1: one
// element has zero linear part. Case 2: the linear parts are x d_x and
// (a x + y) d_x after a linear change (ruled out for valid inputs by the
// rank argument, but reachable on inputs violating the hypotheses).
enum class PlaneBasisKind { CASE_1, CASE_2 };

struct PlaneBasisNormalForm {
    PlaneBasisKind kind = PlaneBasisKind::CASE_1;
    std::vector<Derivation> transformed_basis;
    RatMatrix coordinate_change;      // new coordinates = change * old
    RatMatrix inverse_change;
    Series transformed_f;
    Rat case2_parameter;              // a, for CASE_2
    Validity validity;
};

PlaneBasisNormalForm normalize_plane_basis(const Series &f, const SaitoBasis &basis, int k);

// 2x4 matrix of linear-part coefficients of a plane basis pair and its
// exact rank; rank 1 is necessary for strong Euler-homogeneity.
struct RankB {
    RatMatrix matrix; // rows (a_i, b_i, c_i, d_i)
    int rank = 0;
};

RankB rank_B(const Derivation &d1, const Derivation &d2);

} // namespace logdiv
