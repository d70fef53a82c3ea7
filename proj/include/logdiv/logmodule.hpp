#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logdiv/derivation.hpp"
#include "logdiv/series.hpp"

namespace logdiv {

// Raised when an internal cross-check that the underlying theory
// guarantees fails: always an implementation bug, never bad input.
class internal_inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Where an identity has been certified: exactly, or modulo m^k.
struct Validity {
    bool exact = true;
    int k = 0;

    static Validity exact_v() { return {true, 0}; }
    static Validity mod(int k) { return {false, k}; }
    Validity meet(const Validity &o) const {
        if (exact)
            return o;
        if (o.exact)
            return *this;
        return mod(std::min(k, o.k));
    }
    bool operator==(const Validity &o) const = default;
};

// A logarithmic derivation together with its certificate:
// apply(derivation, f) - cofactor * f vanishes (exactly or mod m^k).
struct LogWitness {
    Derivation derivation;
    Series cofactor;
    Validity validity;
};

enum class CofactorStatus { FOUND, NOT_LOGARITHMIC, INCONCLUSIVE };

struct CofactorResult {
    CofactorStatus status = CofactorStatus::NOT_LOGARITHMIC;
    std::optional<LogWitness> witness;

    bool found() const { return status == CofactorStatus::FOUND; }
};

// Solves delta(f) = a f. Exact polynomial division when both sides are
// exact; otherwise order-by-order from the initial form of f, valid
// mod m^k. INCONCLUSIVE when the truncation cannot even see f.
CofactorResult cofactor(const Derivation &delta, const Series &f);

// n derivations forming a certified free basis: f = unit * det(saito_matrix).
struct SaitoBasis {
    std::vector<Derivation> derivations;
    std::vector<std::vector<Series>> saito_matrix; // [i][j] = delta_i(x_j)
    Series determinant;
    Series unit;
    std::vector<LogWitness> witnesses;
    Validity validity;
};

enum class SaitoRejection { NOT_LOGARITHMIC, DET_NOT_UNIT_MULTIPLE, NOT_REDUCED };

struct CertifyResult {
    std::optional<SaitoBasis> basis;
    SaitoRejection reason = SaitoRejection::NOT_LOGARITHMIC;
    int offending_index = -1; // for NOT_LOGARITHMIC

    bool certified() const { return basis.has_value(); }
};

std::string to_string(SaitoRejection r);

// Saito's criterion on explicit candidates: each must be logarithmic and
// det(A) must be a unit multiple of f. k bounds the order used for
// truncated work (unit inversion, mod-m^k candidates).
CertifyResult certify_saito(const Series &f, const std::vector<Derivation> &candidates, int k,
                            bool skip_reduced_check = false);

// Basis of the rational vector space of polynomial derivations with
// coefficient degree <= d that admit a polynomial cofactor. Deterministic:
// echelon form of the solution space under the canonical unknown order,
// vectors rescaled to primitive integer form.
std::vector<LogWitness> solve_log_derivations(const Series &f, int degree_bound);

// Nakayama extraction: first n-element subset (lexicographic on indices)
// whose Saito determinant is a unit multiple of f mod m^k.
std::optional<SaitoBasis> extract_basis(const Series &f, const std::vector<LogWitness> &generators,
                                        int k);

struct ProductResult {
    bool is_product = false;
    int bound = 0;
    std::optional<LogWitness> witness; // non-singular when is_product
};

// f is a product iff it admits a non-singular logarithmic derivation;
// the search is degree-bounded, so a negative answer is a bounded
// certificate only.
ProductResult is_product(const Series &f, int degree_bound);

struct ProductSplit {
    std::vector<Series> change;         // new coordinates as series in the old
    std::vector<Series> inverse_change; // old coordinates as series in the new
    int straightened_var = 0;           // index of the trivialized coordinate
    Series unit;                        // f o inverse_change = unit * g mod m^k
    Series g;                           // free of the straightened variable
    int k = 0;
};

// Straightens a non-singular logarithmic witness to a coordinate
// derivation and splits off the trivial factor: in the new coordinates
// f = unit * g with g independent of the straightened variable, mod m^k.
ProductSplit split_product(const Series &f, const LogWitness &witness, int k);

} // namespace logdiv
