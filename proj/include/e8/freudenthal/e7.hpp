#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "e8/freudenthal/jordan.hpp"
#include "e8/freudenthal/operator.hpp"
#include "e8/lie/table.hpp"
#include "e8/scalar/sparse.hpp"

namespace e8::freudenthal {

/// (phi, A, B, nu) describing the operator on P:
///   X -> phi X - (nu/3) X + 2 B x Y + eta A
///   Y -> 2 A x X + phi' Y + (nu/3) Y + xi B
///   xi -> (A, Y) + nu xi
///   eta -> (B, X) - nu eta
/// with phi' = -G^-1 t(phi) G the dual of phi for the trace form G.
struct E7Parts {
    SpMat phi{kJ};
    Jordan<Rational> A = jordan_zero<Rational>();
    Jordan<Rational> B = jordan_zero<Rational>();
    Rational nu;
};

/// Dimension counts observed while building the operator algebras; each must match the expected value.
struct BootstrapRanks {
    std::size_t f4 = 0;
    std::size_t e6 = 0;
    std::size_t e7 = 0;
};

inline constexpr std::size_t kE6 = 78;
inline constexpr std::size_t kE7 = 133;

/// Exact bootstrap of the operator algebras f4 < e6 < e7 over Q.
///
/// Basis of e7 (133): the 52 derivations (reduced row echelon basis of span [L_A, L_B]),
/// then L_T for T = E1 - E2, E2 - E3 and the 24 off-diagonal coordinates, then
/// (0, E_a, 0, 0) for a = 0..26, then (0, 0, E_a, 0), then (0, 0, 0, 1).
class E7 {
public:
    static const E7& get()
    {
        static const E7 e;
        return e;
    }

    const BootstrapRanks& ranks() const { return ranks_; }
    const SpMat& L(std::size_t a) const { return L_[a]; }
    const SparseVec<Rational>& jordan_product(std::size_t a, std::size_t b) const { return jprod_[a * kJ + b]; }
    const SpMat& basis(std::size_t k) const { return basis_[k]; }
    const SpMat& e6_basis(std::size_t k) const { return e6_[k]; }
    const StructureTable<Rational>& table() const { return table_; }
    const SpMat& lambda() const { return lambda_; }
    const SpMat& gamma() const { return gamma_; }

    /// Coordinates of P_m x Q_n in the e7 basis.
    const SparseVec<Rational>& cross_basis(std::size_t m, std::size_t n) const { return cross_[m * kP + n]; }

    /// X o Y over Q through the basis product table.
    Jordan<Rational> jmul(const Jordan<Rational>& x, const Jordan<Rational>& y) const
    {
        std::vector<Rational> z(kJ);
        for (std::size_t a = 0; a < kJ; ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < kJ; ++b)
                if (!y[b].is_zero()) axpy(z, x[a] * y[b], jprod_[a * kJ + b]);
        }
        Jordan<Rational> r;
        for (std::size_t k = 0; k < kJ; ++k) r[k] = z[k];
        return r;
    }

    Jordan<Rational> jcross(const Jordan<Rational>& x, const Jordan<Rational>& y) const
    {
        const Jordan<Rational> xy = jmul(x, y);
        const Rational tx = jordan_trace(x), ty = jordan_trace(y);
        const Rational c = tx * ty - jordan_inner(x, y);
        const Rational half(1, 2);
        Jordan<Rational> z;
        for (std::size_t k = 0; k < kJ; ++k) z[k] = half * (Rational(2) * xy[k] - tx * y[k] - ty * x[k]);
        for (std::size_t k = 0; k < 3; ++k) z[k] += half * c;
        return z;
    }

    /// Left multiplication L_X.
    SpMat left_mul(const Jordan<Rational>& x) const
    {
        SpMat m(kJ);
        for (std::size_t a = 0; a < kJ; ++a)
            if (!x[a].is_zero()) m = m + x[a] * L_[a];
        return m;
    }

    /// The 56x56 operator of the given parts.
    SpMat assemble(const E7Parts& p) const
    {
        std::vector<std::vector<Rational>> cols(kP, std::vector<Rational>(kP));
        const Rational third = p.nu / Rational(3);
        // phi' = -G^-1 t(phi) G with G = diag(1,1,1,2,...,2)
        for (std::size_t c = 0; c < kJ; ++c)
            for (const auto& [r, v] : p.phi.column(c)) {
                cols[c][r] += v;
                cols[kJ + r][kJ + c] -= v * gram(r) / gram(c);
            }
        for (std::size_t k = 0; k < kJ; ++k) {
            cols[k][k] -= third;
            cols[kJ + k][kJ + k] += third;
        }
        // 2 B x Y into the X rows, 2 A x X into the Y rows
        for (std::size_t b = 0; b < kJ; ++b) {
            for (std::size_t a = 0; a < kJ; ++a) {
                if (!p.B[a].is_zero())
                    for (const auto& [r, v] : cross2_[a * kJ + b]) cols[kJ + b][r] += p.B[a] * v;
                if (!p.A[a].is_zero())
                    for (const auto& [r, v] : cross2_[a * kJ + b]) cols[b][kJ + r] += p.A[a] * v;
            }
        }
        for (std::size_t k = 0; k < kJ; ++k) {
            cols[55][k] += p.A[k];
            cols[54][kJ + k] += p.B[k];
            cols[kJ + k][54] += gram(k) * p.A[k];
            cols[k][55] += gram(k) * p.B[k];
        }
        cols[54][54] += p.nu;
        cols[55][55] -= p.nu;
        return SpMat::from_dense_columns(cols);
    }

    /// e7 coordinates of the given parts; nullopt when phi is not in e6.
    std::optional<std::vector<Rational>> coords_of_parts(const E7Parts& p) const
    {
        std::vector<Rational> c(kE7);
        // T = phi(E): derivations kill E and L_T E = T.
        Jordan<Rational> t = jordan_zero<Rational>();
        for (std::size_t k = 0; k < 3; ++k)
            for (const auto& [r, v] : p.phi.column(k)) t[r] += v;
        if (!(t[0] + t[1] + t[2]).is_zero()) return std::nullopt;
        c[52] = t[0];
        c[53] = t[0] + t[1];
        for (std::size_t k = 3; k < kJ; ++k) c[51 + k] = t[k];
        const SpMat delta = p.phi - left_mul(t);
        const std::vector<Rational> flat = delta.flatten();
        std::vector<Rational> rebuilt(kJ * kJ);
        for (std::size_t k = 0; k < f4_rows_.size(); ++k) {
            c[k] = flat[f4_pivots_[k]];
            axpy(rebuilt, c[k], f4_rows_[k]);
        }
        if (rebuilt != flat) return std::nullopt;
        for (std::size_t k = 0; k < kJ; ++k) {
            c[kE6 + k] = p.A[k];
            c[kE6 + kJ + k] = p.B[k];
        }
        c[132] = p.nu;
        return c;
    }

    /// Reads (phi, A, B, nu) back off a 56x56 operator without checking membership.
    E7Parts parts_of(const SpMat& m) const
    {
        E7Parts p;
        p.nu = m.at(54, 54);
        const Rational third = p.nu / Rational(3);
        std::vector<std::vector<Rational>> phi(kJ, std::vector<Rational>(kJ));
        for (std::size_t c = 0; c < kJ; ++c)
            for (const auto& [r, v] : m.column(c))
                if (r < kJ) phi[c][r] += v;
        for (std::size_t k = 0; k < kJ; ++k) phi[k][k] += third;
        p.phi = SpMat::from_dense_columns(phi);
        for (const auto& [r, v] : m.column(55))
            if (r < kJ) p.A[r] = v;
        for (const auto& [r, v] : m.column(54))
            if (r >= kJ && r < 2 * kJ) p.B[r - kJ] = v;
        return p;
    }

    /// Membership certificate: e7 coordinates of m, or nullopt if m is outside the span.
    std::optional<std::vector<Rational>> try_coords(const SpMat& m) const
    {
        const E7Parts p = parts_of(m);
        auto c = coords_of_parts(p);
        if (!c) return std::nullopt;
        if (!(assemble(p) == m)) return std::nullopt;
        return c;
    }

    std::vector<Rational> coords(const SpMat& m) const
    {
        auto c = try_coords(m);
        if (!c) throw DomainError("operator is not in the 133-dimensional e7 span");
        return *c;
    }

    SpMat from_coords(const std::vector<Rational>& c) const
    {
        SpMat m(kP);
        for (std::size_t k = 0; k < kE7; ++k)
            if (!c[k].is_zero()) m = m + c[k] * basis_[k];
        return m;
    }

    /// Gram weight of Jordan coordinate k for the trace form.
    static Rational gram(std::size_t k) { return k < 3 ? Rational(1) : Rational(2); }

private:
    E7()
    {
        build_jordan();
        build_e6();
        build_e7();
        build_table();
        build_cross();
        build_lambda_gamma();
    }

    static void gate(const char* what, std::size_t got, std::size_t want)
    {
        if (got == want) return;
        std::ostringstream os;
        os << what << ": expected " << want << ", got " << got
           << " (octonion, Jordan or e7 sign convention is inconsistent)";
        throw GateFailure(os.str());
    }

    void build_jordan()
    {
        jprod_.resize(kJ * kJ);
        for (std::size_t a = 0; a < kJ; ++a)
            for (std::size_t b = 0; b < kJ; ++b) {
                const Jordan<Rational> p = jordan_mul(jordan_unit<Rational>(a), jordan_unit<Rational>(b));
                jprod_[a * kJ + b] = sparse_from_dense(std::vector<Rational>(p.begin(), p.end()));
            }
        L_.resize(kJ);
        for (std::size_t a = 0; a < kJ; ++a) {
            L_[a] = SpMat(kJ);
            for (std::size_t b = 0; b < kJ; ++b) L_[a].column(b) = jprod_[a * kJ + b];
        }
        cross2_.resize(kJ * kJ);
        for (std::size_t a = 0; a < kJ; ++a)
            for (std::size_t b = 0; b < kJ; ++b) {
                Jordan<Rational> x = jcross(jordan_unit<Rational>(a), jordan_unit<Rational>(b));
                for (auto& v : x) v *= Rational(2);
                cross2_[a * kJ + b] = sparse_from_dense(std::vector<Rational>(x.begin(), x.end()));
            }
    }

    void build_e6()
    {
        Echelon<Rational> f4(kJ * kJ);
        for (std::size_t a = 0; a < kJ; ++a)
            for (std::size_t b = a + 1; b < kJ; ++b) f4.insert(commutator(L_[a], L_[b]).flatten());
        ranks_.f4 = f4.rank();
        gate("rank of span [L_A, L_B]", ranks_.f4, 52);
        f4.reduce_full();
        f4_rows_ = f4.rows_by_pivot();
        for (auto p : f4.pivot_columns()) f4_pivots_.push_back(p);
        for (const auto& row : f4_rows_) e6_.push_back(SpMat::unflatten(dense_from_sparse(row, kJ * kJ), kJ));
        std::vector<Jordan<Rational>> ts;
        Jordan<Rational> t = jordan_zero<Rational>();
        t[0] = Rational(1);
        t[1] = Rational(-1);
        ts.push_back(t);
        t = jordan_zero<Rational>();
        t[1] = Rational(1);
        t[2] = Rational(-1);
        ts.push_back(t);
        for (std::size_t k = 3; k < kJ; ++k) ts.push_back(jordan_unit<Rational>(k));
        for (const auto& x : ts) {
            e6_.push_back(left_mul(x));
            f4.insert(e6_.back().flatten());
        }
        ranks_.e6 = f4.rank();
        gate("rank of e6 span", ranks_.e6, kE6);
    }

    void build_e7()
    {
        for (const auto& phi : e6_) {
            E7Parts p;
            p.phi = phi;
            basis_.push_back(assemble(p));
        }
        for (std::size_t a = 0; a < kJ; ++a) {
            E7Parts p;
            p.A = jordan_unit<Rational>(a);
            basis_.push_back(assemble(p));
        }
        for (std::size_t a = 0; a < kJ; ++a) {
            E7Parts p;
            p.B = jordan_unit<Rational>(a);
            basis_.push_back(assemble(p));
        }
        E7Parts p;
        p.nu = Rational(1);
        basis_.push_back(assemble(p));
        Echelon<Rational> e(kP * kP);
        for (const auto& m : basis_) e.insert(m.flatten());
        ranks_.e7 = e.rank();
        gate("rank of e7 span", ranks_.e7, kE7);
    }

    void build_table()
    {
        table_ = StructureTable<Rational>(kE7);
        for (std::size_t i = 0; i < kE7; ++i)
            for (std::size_t j = i + 1; j < kE7; ++j) {
                auto c = try_coords(commutator(basis_[i], basis_[j]));
                if (!c) {
                    std::ostringstream os;
                    os << "commutator of e7 basis elements " << i << " and " << j << " leaves the span";
                    throw GateFailure(os.str());
                }
                table_.at(i, j) = sparse_from_dense(*c);
                SparseVec<Rational> neg;
                for (const auto& [k, v] : table_(i, j)) neg.emplace_back(k, -v);
                table_.at(j, i) = std::move(neg);
            }
    }

    /// X v W = [L_X, L_W] + L_{X o W - (1/3)(X, W) E}
    SpMat vee(const Jordan<Rational>& x, const Jordan<Rational>& w) const
    {
        const SpMat lx = left_mul(x), lw = left_mul(w);
        Jordan<Rational> t = jmul(x, w);
        const Rational s = jordan_inner(x, w) / Rational(3);
        for (std::size_t k = 0; k < 3; ++k) t[k] -= s;
        return commutator(lx, lw) + left_mul(t);
    }

    /// P x Q for P = (X, Y, xi, eta), Q = (Z, W, zeta, omega):
    ///   phi = -(1/2)(X v W + Z v Y)
    ///   A = -(1/4)(2 Y x W - xi Z - zeta X)
    ///   B = (1/4)(2 X x Z - eta W - omega Y)
    ///   nu = (1/8)((X, W) + (Z, Y) - 3(xi omega + zeta eta))
    E7Parts cross_parts(const Freud<Rational>& p, const Freud<Rational>& q) const
    {
        const Jordan<Rational> x = freud_X(p), y = freud_Y(p), z = freud_X(q), w = freud_Y(q);
        const Rational xi = p[54], eta = p[55], zeta = q[54], omega = q[55];
        E7Parts r;
        r.phi = Rational(-1, 2) * (vee(x, w) + vee(z, y));
        const Jordan<Rational> yw = jcross(y, w), xz = jcross(x, z);
        for (std::size_t k = 0; k < kJ; ++k) {
            r.A[k] = Rational(-1, 4) * (Rational(2) * yw[k] - xi * z[k] - zeta * x[k]);
            r.B[k] = Rational(1, 4) * (Rational(2) * xz[k] - eta * w[k] - omega * y[k]);
        }
        r.nu = Rational(1, 8) * (jordan_inner(x, w) + jordan_inner(z, y) - Rational(3) * (xi * omega + zeta * eta));
        return r;
    }

    void build_cross()
    {
        cross_.resize(kP * kP);
        for (std::size_t m = 0; m < kP; ++m)
            for (std::size_t n = 0; n < kP; ++n) {
                auto c = coords_of_parts(cross_parts(freud_unit<Rational>(m), freud_unit<Rational>(n)));
                if (!c) throw GateFailure("Freudenthal cross product leaves e7");
                cross_[m * kP + n] = sparse_from_dense(*c);
            }
    }

    void build_lambda_gamma()
    {
        std::vector<std::vector<Rational>> lc(kP, std::vector<Rational>(kP)), gc = lc;
        for (std::size_t k = 0; k < kP; ++k) {
            const auto l = lambda_apply(freud_unit<Rational>(k));
            const auto g = gamma_apply(freud_unit<Rational>(k));
            lc[k].assign(l.begin(), l.end());
            gc[k].assign(g.begin(), g.end());
        }
        lambda_ = SpMat::from_dense_columns(lc);
        gamma_ = SpMat::from_dense_columns(gc);
    }

    BootstrapRanks ranks_;
    std::vector<SparseVec<Rational>> jprod_;
    std::vector<SparseVec<Rational>> cross2_;  // 2 E_a x E_b
    std::vector<SpMat> L_;
    std::vector<SparseVec<Rational>> f4_rows_;
    std::vector<std::uint32_t> f4_pivots_;
    std::vector<SpMat> e6_;
    std::vector<SpMat> basis_;
    StructureTable<Rational> table_;
    std::vector<SparseVec<Rational>> cross_;
    SpMat lambda_{kP};
    SpMat gamma_{kP};
};

}  // namespace e8::freudenthal
