#pragma once

#include "logdiv/series.hpp"

namespace logdiv {

// gcd of exact polynomials over the rationals, via recursive
// content / primitive-part reduction with primitive pseudo-remainder
// sequences, one variable at a time. The result is normalized to integer
// coefficients with content 1 and positive leading coefficient.
Series poly_gcd(const Series &a, const Series &b);

// Squarefreeness of a nonzero exact polynomial: the gcd of f with all of
// its partial derivatives must be constant. Throws on zero input.
bool is_reduced(const Series &f);

} // namespace logdiv
