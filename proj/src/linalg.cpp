#include "logdiv/linalg.hpp"

#include <stdexcept>

namespace logdiv {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const Rat &x : a_)
        if (x != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RatMatrix &RatMatrix::operator+=(const RatMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int l = 0; l < a.cols_; ++l) {
            const Rat &ail = a.at(i, l);
            if (ail == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rat &blj = b.at(l, j);
                if (blj != 0)
                    r.at(i, j) += ail * blj;
            }
        }
    return r;
}

RatMatrix operator*(const Rat &c, RatMatrix m) {
    for (Rat &x : m.a_)
        x *= c;
    return m;
}

RatVec RatMatrix::apply(const RatVec &v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("RatMatrix: vector length mismatch");
    RatVec r(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat &x = at(i, j);
            if (x != 0 && v[static_cast<size_t>(j)] != 0)
                r[static_cast<size_t>(i)] += x * v[static_cast<size_t>(j)];
        }
    return r;
}

std::vector<int> rref(RatMatrix &m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j)
                swap(m.at(piv, j), m.at(row, j));
        Rat p = m.at(row, col);
        for (int j = col; j < m.cols(); ++j)
            m.at(row, j) /= p;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            Rat f = m.at(r, col);
            if (f == 0)
                continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

Rat det(RatMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = 1 / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            Rat f = m.at(r, col) * inv;
            if (f == 0)
                continue;
            for (int j = col; j < n; ++j)
                m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<RatMatrix> inverse(const RatMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<RatVec> nullspace(const RatMatrix &m) {
    RatMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots)
        is_pivot[static_cast<size_t>(p)] = true;
    std::vector<RatVec> basis;
    for (int col = 0; col < m.cols(); ++col) {
        if (is_pivot[static_cast<size_t>(col)])
            continue;
        RatVec v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(col)] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -r.at(static_cast<int>(pi), col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix &a, const RatVec &b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt; // pivot in the constant column: inconsistent
    RatVec x(static_cast<size_t>(a.cols()), Rat(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<int>(pi), a.cols());
    return x;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (Rat &x : r.c_)
        x = -x;
    return r;
}

RatPoly &RatPoly::operator+=(const RatPoly &o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly &RatPoly::operator-=(const RatPoly &o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly &a, const RatPoly &b) {
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0)
                c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat &s, RatPoly p) {
    for (Rat &x : p.c_)
        x *= s;
    p.trim();
    return p;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1)
        return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero())
        return *this;
    return (Rat(1) / lead()) * (*this);
}

Rat RatPoly::eval(const Rat &x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

RatMatrix RatPoly::eval_matrix(const RatMatrix &m) const {
    int n = m.rows();
    RatMatrix r(n, n);
    if (is_zero())
        return r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * m;
        for (int i = 0; i < n; ++i)
            r.at(i, i) += *it;
    }
    return r;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly &a, const RatPoly &b) {
    if (b.is_zero())
        throw std::domain_error("divrem: division by zero polynomial");
    RatPoly r = a;
    std::vector<Rat> q;
    int db = b.degree();
    if (r.degree() >= db)
        q.assign(static_cast<size_t>(r.degree() - db + 1), Rat(0));
    Rat invlead = 1 / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Rat f = r.lead() * invlead;
        q[static_cast<size_t>(shift)] = f;
        std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
        sub.insert(sub.end(), b.coeffs().begin(), b.coeffs().end());
        RatPoly s{std::vector<Rat>(sub)};
        r -= f * s;
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly poly_gcd1(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic(); // normalize every step to limit coefficient growth
    }
    return a.monic();
}

ExtGcd ext_gcd(const RatPoly &a, const RatPoly &b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(1), u1;
    RatPoly v0, v1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Rat s = 1 / r0.lead();
        r0 = s * r0;
        u0 = s * u0;
        v0 = s * v0;
    }
    return {r0, u0, v0};
}

std::vector<RatPoly> yun_squarefree(const RatPoly &p) {
    std::vector<RatPoly> out;
    if (p.degree() <= 0)
        return out;
    RatPoly f = p.monic();
    RatPoly fp = f.derivative();
    RatPoly a = poly_gcd1(f, fp);
    RatPoly b = divrem(f, a).first;
    RatPoly c = divrem(fp, a).first;
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RatPoly g = poly_gcd1(b, d);
        out.push_back(g);
        b = divrem(b, g).first;
        c = divrem(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

RatPoly squarefree_part(const RatPoly &p) {
    RatPoly r = RatPoly::constant(1);
    for (const RatPoly &f : yun_squarefree(p))
        r = r * f;
    return r;
}

RatPoly charpoly(RatMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("charpoly: matrix not square");
    int n = m.rows();
    if (n == 0)
        return RatPoly::constant(1);
    // Exact similarity reduction to upper Hessenberg form.
    for (int col = 0; col < n - 2; ++col) {
        int piv = -1;
        for (int r = col + 1; r < n; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != col + 1) {
            for (int j = 0; j < n; ++j)
                swap(m.at(piv, j), m.at(col + 1, j));
            for (int i = 0; i < n; ++i)
                swap(m.at(i, piv), m.at(i, col + 1));
        }
        Rat inv = 1 / m.at(col + 1, col);
        for (int r = col + 2; r < n; ++r) {
            Rat f = m.at(r, col) * inv;
            if (f == 0)
                continue;
            for (int j = 0; j < n; ++j)
                m.at(r, j) -= f * m.at(col + 1, j);
            for (int i = 0; i < n; ++i)
                m.at(i, col + 1) += f * m.at(i, r);
        }
    }
    // Recurrence on leading principal minors of tI - H.
    std::vector<RatPoly> p(static_cast<size_t>(n) + 1);
    p[0] = RatPoly::constant(1);
    for (int mth = 1; mth <= n; ++mth) {
        RatPoly term = (RatPoly::x() - RatPoly::constant(m.at(mth - 1, mth - 1))) * p[static_cast<size_t>(mth - 1)];
        Rat prod = 1;
        for (int i = mth - 2; i >= 0; --i) {
            prod *= m.at(i + 1, i);
            if (prod == 0)
                break;
            Rat c = m.at(i, mth - 1) * prod;
            if (c != 0)
                term -= c * p[static_cast<size_t>(i)];
        }
        p[static_cast<size_t>(mth)] = std::move(term);
    }
    return p[static_cast<size_t>(n)];
}

namespace {

RatPoly compose_mod(const RatPoly &f, const RatPoly &g, const RatPoly &mod) {
    RatPoly acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = divrem(acc * g, mod).second;
        acc += RatPoly::constant(f.coeff(i));
    }
    return divrem(acc, mod).second;
}

RatPoly inverse_mod(const RatPoly &a, const RatPoly &mod) {
    ExtGcd e = ext_gcd(a, mod);
    if (e.g.degree() != 0)
        throw std::logic_error("inverse_mod: element not invertible");
    return divrem((Rat(1) / e.g.coeff(0)) * e.u, mod).second;
}

// Rescale to coprime integer coefficients with positive lead. Scaling a
// modulus by a constant leaves the ideal unchanged but keeps the
// coefficient sizes of its powers sane.
RatPoly primitive_int(const RatPoly &p) {
    if (p.is_zero())
        return p;
    std::vector<Rat> c = p.coeffs();
    make_primitive(c);
    if (c.back() < 0)
        for (Rat &x : c)
            x = -x;
    return RatPoly(std::move(c));
}

} // namespace

RatPoly jordan_splitting_poly(const RatPoly &p) {
    std::vector<RatPoly> yun = yun_squarefree(p);
    RatPoly rad = RatPoly::constant(1);
    std::vector<std::pair<RatPoly, int>> comps; // (P_i, multiplicity i)
    bool mixed = false;
    for (size_t i = 0; i < yun.size(); ++i) {
        if (yun[i].degree() > 0) {
            comps.emplace_back(primitive_int(yun[i]), static_cast<int>(i) + 1);
            if (i > 0)
                mixed = true;
        }
        rad = rad * yun[i];
    }
    rad = primitive_int(rad);
    if (comps.empty())
        return RatPoly();
    if (!mixed)
        return divrem(RatPoly::x(), p).second; // squarefree: already semisimple
    RatPoly radp = rad.derivative();

    // Newton iteration s <- s - rad(s) * rad'(s)^{-1}, run mod each
    // repeated component P^m of the characteristic polynomial and glued
    // back by CRT around the identity baseline: on the squarefree
    // component the splitting is t itself, so only multiplicity >= 2
    // components need work. Inverses are seeded by an extended gcd at
    // degree deg(P) and Hensel-lifted through the powers, which keeps
    // every intermediate coefficient small.
    RatPoly total = divrem(RatPoly::x(), p).second;
    const RatPoly two = RatPoly::constant(2);
    for (const auto &[pi, mult] : comps) {
        if (mult < 2)
            continue;
        std::vector<RatPoly> pw{RatPoly::constant(1), pi}; // pi^j cache
        auto power = [&](int e) -> const RatPoly & {
            while (static_cast<int>(pw.size()) <= e)
                pw.push_back(pw.back() * pi);
            return pw[static_cast<size_t>(e)];
        };
        // Lift s with rad(s) = 0 and u = rad'(s)^{-1} from mod pi to
        // mod pi^mult, doubling the precision each round.
        RatPoly s = divrem(RatPoly::x(), pi).second;
        RatPoly u = inverse_mod(compose_mod(radp, s, pi), pi);
        int prec = 1;
        while (prec < mult) {
            prec = std::min(2 * prec, mult);
            const RatPoly &q = power(prec);
            s = divrem(s - compose_mod(rad, s, q) * u, q).second;
            u = divrem(u * (two - compose_mod(radp, s, q) * u), q).second;
        }
        const RatPoly &qi = power(mult);
        if (!compose_mod(rad, s, qi).is_zero())
            throw std::logic_error("jordan_splitting_poly: Hensel lift failed");
        // CRT idempotent for this component, by the same inverse lift.
        RatPoly mi = divrem(p, qi).first;
        RatPoly ui = inverse_mod(divrem(mi, pi).second, pi);
        prec = 1;
        while (prec < mult) {
            prec = std::min(2 * prec, mult);
            const RatPoly &q = power(prec);
            ui = divrem(ui * (two - divrem(mi, q).second * ui), q).second;
        }
        total += divrem((s - RatPoly::x()) * ui, qi).second * mi;
    }
    return divrem(total, p).second;
}

} // namespace logdiv
