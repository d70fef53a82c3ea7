#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "logdiv/rational.hpp"

namespace logdiv {

using RatVec = std::vector<Rat>;

// Dense matrix over the rationals. Row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat &at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Rat &at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    bool is_zero() const;
    RatMatrix transposed() const;

    RatMatrix &operator+=(const RatMatrix &o);
    RatMatrix &operator-=(const RatMatrix &o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
    friend RatMatrix operator*(const Rat &c, RatMatrix m);
    RatVec apply(const RatVec &v) const;

    bool operator==(const RatMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMatrix &o) const { return !(*this == o); }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix &m);

int rank(RatMatrix m);
Rat det(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix &m);

// Canonical basis of the right nullspace, read off the RREF: one vector
// per free column, in column order. Deterministic.
std::vector<RatVec> nullspace(const RatMatrix &m);

// One solution of A x = b (free variables set to zero), if consistent.
std::optional<RatVec> solve(const RatMatrix &a, const RatVec &b);

// Dense univariate polynomial over the rationals, coefficients ascending.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat &c) { return RatPoly(std::vector<Rat>{c}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat> &coeffs() const { return c_; }
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rat(0);
    }
    Rat lead() const { return c_.back(); }

    RatPoly operator-() const;
    RatPoly &operator+=(const RatPoly &o);
    RatPoly &operator-=(const RatPoly &o);
    friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }
    friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
    friend RatPoly operator*(const Rat &s, RatPoly p);

    bool operator==(const RatPoly &o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly &o) const { return c_ != o.c_; }

    RatPoly derivative() const;
    RatPoly monic() const;
    Rat eval(const Rat &x) const;
    RatMatrix eval_matrix(const RatMatrix &m) const; // Horner

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly &a, const RatPoly &b);

// Monic gcd.
RatPoly poly_gcd1(RatPoly a, RatPoly b);

// g = a u + b v with g monic (or zero).
struct ExtGcd {
    RatPoly g, u, v;
};
ExtGcd ext_gcd(const RatPoly &a, const RatPoly &b);

// Yun squarefree decomposition: p = lead * prod_i out[i]^(i+1) with the
// out[i] monic, squarefree and pairwise coprime.
std::vector<RatPoly> yun_squarefree(const RatPoly &p);

// Monic squarefree part rad(p).
RatPoly squarefree_part(const RatPoly &p);

// Characteristic polynomial det(tI - M) via exact Hessenberg reduction.
RatPoly charpoly(RatMatrix m);

// Chevalley / Newton splitting polynomial: given the characteristic
// polynomial p of a matrix M, returns s with s(M) semisimple,
// M - s(M) nilpotent, both commuting polynomials in M. s is reduced
// mod p. The iteration runs on the squarefree part of p and never
// factors anything.
RatPoly jordan_splitting_poly(const RatPoly &p);

} // namespace logdiv
