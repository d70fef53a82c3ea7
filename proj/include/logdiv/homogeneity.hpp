#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "logdiv/jordan.hpp"
#include "logdiv/logmodule.hpp"

namespace logdiv {

// Strong Euler-homogeneity: f = delta(f) for a derivation with
// coefficients in the maximal ideal, searched with polynomial multipliers
// of degree <= bound. A negative answer refutes only up to the bound.
struct SehResult {
    bool found = false;
    int bound = 0;
    std::optional<Derivation> euler; // delta with delta(f) = f, coefficients in m
    Validity validity;
    bool via_unit_cofactor = false; // witness derived from a basis cofactor unit
};

SehResult is_strongly_euler_homogeneous(const Series &f, int degree_bound);

// order(f) >= n+1 must hold for certified non-product, non-SEH free
// germs; a failed check falsifies one of the input verdicts.
struct OrderBoundCheck {
    bool applicable = false;
    bool holds = false;
    int order = 0;
};

OrderBoundCheck order_bound_check(const Series &f, const std::optional<SaitoBasis> &basis,
                                  const ProductResult &product, const SehResult &seh);

// Plane-curve nilpotency: for reduced non-product f in m^3 every basis
// derivation whose cofactor lies in m must be nilpotent.
struct PlaneNilpotency {
    bool applicable = false;
    std::string reason; // why not applicable
    std::vector<std::pair<int, bool>> entries; // (basis index, nilpotent?)
    bool all_nilpotent = true;
};

PlaneNilpotency plane_curve_nilpotency(const Series &f, const SaitoBasis &basis,
                                       const ProductResult &product,
                                       std::optional<bool> reduced, int k);

enum class LctVerdict { OBSTRUCTED, NOT_OBSTRUCTED, INCONCLUSIVE };

std::string to_string(LctVerdict v);

struct LctResult {
    LctVerdict verdict = LctVerdict::INCONCLUSIVE;
    int product_bound = 0; // bound at which productness was (only) refuted
    std::string note;
};

// Trace obstruction to the Logarithmic Comparison Theorem: a zero-trace
// basis of a non-product forces zero trace on all logarithmic derivations,
// so LCT cannot hold. A nonzero singular trace only clears this necessary
// condition; it does not prove LCT.
LctResult lct_trace_obstruction(const Series &f, const SaitoBasis &basis,
                                const ProductResult &product);

// Membership of a singular derivation in the left ideal D<x_1..x_n>,
// equivalent to vanishing trace.
bool in_ideal_Dx(const Derivation &delta);

struct AnalyzeOptions {
    int order = 8;       // truncation order k
    int degree = 4;      // degree bound d
    bool skip_reduced_check = false;
    bool recurse_products = true;
};

struct AnalysisReport {
    Series f;
    AnalyzeOptions options;
    std::optional<bool> reduced;
    int order_of_f = 0;

    ProductResult product;
    std::optional<ProductSplit> split;
    std::unique_ptr<AnalysisReport> reduction; // analysis of the smaller germ

    std::optional<SaitoBasis> basis;
    int generators_found = 0;
    int generators_used = 0;

    SehResult seh;
    OrderBoundCheck order_bound;
    std::optional<PlaneNilpotency> plane_nilpotency;

    std::vector<std::optional<Rat>> traces; // per basis entry; empty for non-singular
    LctResult lct;
    std::vector<std::string> notes;
};

// Full pipeline: reduced -> product (+ optional split/recursion) ->
// generators -> basis extraction -> Euler homogeneity -> order bound ->
// plane nilpotency (n = 2) -> trace obstruction.
AnalysisReport analyze(const Series &f, const AnalyzeOptions &options,
                       const std::vector<Derivation> &declared_basis = {});

} // namespace logdiv
