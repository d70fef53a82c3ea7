#pragma once

#include <optional>
#include <vector>

#include "logdiv/derivation.hpp"
#include "logdiv/linalg.hpp"
#include "logdiv/logmodule.hpp"

namespace logdiv {

// Matrix of a singular derivation acting on O/m^k, in the canonical
// monomial basis (all monomials of degree < k, graded order).
struct InducedMap {
    int k = 0;
    std::vector<Monomial> basis;
    RatMatrix matrix; // column for basis[j] = coordinates of delta(basis[j])
};

// Quotient dimension guardrail: exact linear algebra stays tractable.
constexpr int kMaxQuotientDim = 3003;

int quotient_dim(int nvars, int k);

InducedMap induced_map(const Derivation &delta, int k);

// Jordan-Chevalley decomposition of a rational square matrix: m = S + N
// with S semisimple, N nilpotent, SN = NS, both polynomials in m. The
// splitting polynomial is found by Newton iteration on the squarefree
// part of the characteristic polynomial; nothing is ever factored, so
// the result is exact for arbitrary rational input (eigenvalues may be
// irrational or complex; S stays rational).
struct MatrixJC {
    RatMatrix semisimple;
    RatMatrix nilpotent;
    RatPoly splitting; // S = splitting(m)
};

MatrixJC matrix_jordan_chevalley(const RatMatrix &m);

// delta = semisimple + nilpotent mod m^k, computed through the induced
// map on O/m^k (Gerard-Levelt at finite order).
struct SNDecomposition {
    Derivation semisimple;
    Derivation nilpotent;
    int k = 0;
};

SNDecomposition sn_decompose(const Derivation &delta, int k);

// Topological nilpotency: the linear-part matrix is nilpotent.
bool is_nilpotent(const Derivation &delta);

// Necessary semisimplicity certificate at order k: the minimal polynomial
// of the induced map on O/m^k is squarefree.
bool is_semisimple_at(const Derivation &delta, int k);

// Minimal polynomial of the induced map (Krylov construction).
RatPoly induced_min_poly(const Derivation &delta, int k);

// For nilpotent logarithmic delta the cofactor must lie in m.
struct NilpotentCofactorCheck {
    CofactorStatus status = CofactorStatus::NOT_LOGARITHMIC;
    bool holds = false; // meaningful when status == FOUND
    Rat constant_term;
};

NilpotentCofactorCheck nilpotent_cofactor_check(const Derivation &delta, const Series &f);

// Formal coordinate change putting a semisimple derivation in diagonal
// form sum_i lambda_i x_i d_i mod m^k. Only available when the linear
// part has rational eigenvalues.
enum class DiagonalFormStatus { OK, UNSUPPORTED_EIGENVALUES, NOT_SEMISIMPLE };

struct DiagonalForm {
    DiagonalFormStatus status = DiagonalFormStatus::UNSUPPORTED_EIGENVALUES;
    std::vector<Rat> weights;
    std::vector<Series> change;         // new coordinates in terms of the old
    std::vector<Series> inverse_change; // old in terms of the new
    int k = 0;
};

DiagonalForm diagonal_form(const Derivation &delta, int k);

} // namespace logdiv
