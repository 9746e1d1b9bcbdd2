#pragma once

#include <string>
#include <vector>

#include "e8/exterior/matrix9.hpp"
#include "e8/exterior/subsets.hpp"
#include "e8/scalar/traits.hpp"

namespace e8 {

/// Element of the k-th exterior power of C^9 on the lexicographic basis e_I.
template <Field S>
class Wedge {
public:
    Wedge() : Wedge(0) {}
    explicit Wedge(int degree) : k_(check_degree(degree)), c_(static_cast<std::size_t>(binomial9(degree)), S(0)) {}

    /// Basis element e_I for a strictly increasing subset I.
    static Wedge basis(std::initializer_list<int> subset)
    {
        Wedge w(static_cast<int>(subset.size()));
        w.c_[static_cast<std::size_t>(subset_index(subset))] = S(1);
        return w;
    }
    static Wedge basis_mask(Mask m)
    {
        Wedge w(degree_of(m));
        w.c_[static_cast<std::size_t>(SubsetTables::get().index(m))] = S(1);
        return w;
    }
    static Wedge basis_index(int k, int idx)
    {
        Wedge w(k);
        w.c_.at(static_cast<std::size_t>(idx)) = S(1);
        return w;
    }
    /// The degree-1 element with the given 9 coordinates.
    static Wedge vector(const std::array<S, 9>& x)
    {
        Wedge w(1);
        for (std::size_t i = 0; i < 9; ++i) w.c_[i] = x[i];
        return w;
    }

    int degree() const { return k_; }
    std::size_t size() const { return c_.size(); }
    S& operator[](std::size_t i) { return c_[i]; }
    const S& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of e_I.
    const S& at(std::initializer_list<int> subset) const
    {
        if (static_cast<int>(subset.size()) != k_) throw ShapeError("subset size differs from degree");
        return c_[static_cast<std::size_t>(subset_index(subset))];
    }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!e8::is_zero(x)) return false;
        return true;
    }

    Wedge conj() const
    {
        Wedge w(k_);
        for (std::size_t i = 0; i < c_.size(); ++i) w.c_[i] = tau(c_[i]);
        return w;
    }

    Wedge operator-() const
    {
        Wedge w(k_);
        for (std::size_t i = 0; i < c_.size(); ++i) w.c_[i] = -c_[i];
        return w;
    }
    friend Wedge operator+(const Wedge& a, const Wedge& b)
    {
        same_degree(a, b);
        Wedge w(a.k_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) w.c_[i] = a.c_[i] + b.c_[i];
        return w;
    }
    friend Wedge operator-(const Wedge& a, const Wedge& b)
    {
        same_degree(a, b);
        Wedge w(a.k_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) w.c_[i] = a.c_[i] - b.c_[i];
        return w;
    }
    friend Wedge operator*(const S& s, const Wedge& a)
    {
        Wedge w(a.k_);
        if (e8::is_zero(s)) return w;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!e8::is_zero(a.c_[i])) w.c_[i] = s * a.c_[i];
        return w;
    }
    Wedge& operator+=(const Wedge& o) { return *this = *this + o; }
    Wedge& operator-=(const Wedge& o) { return *this = *this - o; }

    friend bool operator==(const Wedge& a, const Wedge& b) { return a.k_ == b.k_ && a.c_ == b.c_; }

    std::string to_string() const
    {
        std::string s;
        const auto& t = SubsetTables::get();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (e8::is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + literal(c_[i]) + ")e";
            Mask m = t.mask(k_, static_cast<int>(i));
            for (int j = 1; j <= kN; ++j)
                if (m & (1u << (j - 1))) s += std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

private:
    static int check_degree(int k)
    {
        if (k < 0 || k > kN) throw ShapeError("exterior degree " + std::to_string(k) + " outside 0..9");
        return k;
    }
    static void same_degree(const Wedge& a, const Wedge& b)
    {
        if (a.k_ != b.k_) throw ShapeError("exterior degree mismatch");
    }

    int k_;
    std::vector<S> c_;
};

/// Exterior product; the sign sorts the concatenated index lists.
template <Field S>
Wedge<S> wedge(const Wedge<S>& u, const Wedge<S>& v)
{
    const int k = u.degree(), l = v.degree();
    if (k + l > kN) throw ShapeError("wedge degree exceeds 9");
    const auto& t = SubsetTables::get();
    Wedge<S> w(k + l);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (is_zero(u[a])) continue;
        const Mask ma = t.mask(k, static_cast<int>(a));
        for (std::size_t b = 0; b < v.size(); ++b) {
            if (is_zero(v[b])) continue;
            const Mask mb = t.mask(l, static_cast<int>(b));
            const int sg = concat_sign(ma, mb);
            if (sg == 0) continue;
            const S p = u[a] * v[b];
            auto& dst = w[static_cast<std::size_t>(t.index(ma | mb))];
            if (sg > 0)
                dst += p;
            else
                dst -= p;
        }
    }
    return w;
}

/// Symmetric bilinear pairing making e_I orthonormal (no conjugation).
template <Field S>
S inner(const Wedge<S>& u, const Wedge<S>& v)
{
    if (u.degree() != v.degree()) throw ShapeError("inner product degree mismatch");
    S s(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!is_zero(u[i]) && !is_zero(v[i])) s += u[i] * v[i];
    return s;
}

/// Hodge star: e_I -> sign(I, I^c) e_{I^c}.
template <Field S>
Wedge<S> hodge_star(const Wedge<S>& u)
{
    const int k = u.degree();
    const auto& t = SubsetTables::get();
    Wedge<S> w(kN - k);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (is_zero(u[a])) continue;
        const Mask m = t.mask(k, static_cast<int>(a));
        const Mask mc = kFullMask & static_cast<Mask>(~m);
        auto& dst = w[static_cast<std::size_t>(t.index(mc))];
        dst = concat_sign(m, mc) > 0 ? u[a] : -u[a];
    }
    return w;
}

/// Derivation action of a 9x9 matrix: D(u1 ^ ... ^ uk) = sum over slots of u1 ^ .. ^ D ui ^ .. ^ uk.
template <Field S>
Wedge<S> sl9_act(const Matrix9<S>& d, const Wedge<S>& u)
{
    const int k = u.degree();
    const auto& t = SubsetTables::get();
    Wedge<S> w(k);
    std::vector<int> seq(static_cast<std::size_t>(k));
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (is_zero(u[a])) continue;
        const Mask m = t.mask(k, static_cast<int>(a));
        std::vector<int> idx;
        for (int i = 0; i < kN; ++i)
            if (m & (1u << i)) idx.push_back(i);
        for (int slot = 0; slot < k; ++slot) {
            const int i = idx[static_cast<std::size_t>(slot)];
            for (int j = 0; j < kN; ++j) {
                const S& dji = d(j, i);  // D e_i = sum_j D_{ji} e_j
                if (is_zero(dji)) continue;
                const Mask rest = static_cast<Mask>(m & ~(1u << i));
                if (rest & (1u << j)) continue;
                seq = idx;
                seq[static_cast<std::size_t>(slot)] = j;
                const int sg = sort_sign(seq);
                const S p = dji * u[a];
                auto& dst = w[static_cast<std::size_t>(t.index(static_cast<Mask>(rest | (1u << j))))];
                if (sg > 0)
                    dst += p;
                else
                    dst -= p;
            }
        }
    }
    return w;
}

/// Group action of an invertible 9x9 matrix: A(u1 ^ ... ^ uk) = Au1 ^ ... ^ Auk.
/// The coefficient of e_J in A e_I is the minor det A[J, I].
template <Field S>
Wedge<S> gl9_act(const Matrix9<S>& a, const Wedge<S>& u)
{
    const int k = u.degree();
    const auto& t = SubsetTables::get();
    Wedge<S> w(k);
    for (std::size_t ia = 0; ia < u.size(); ++ia) {
        if (is_zero(u[ia])) continue;
        // Build the product of the images column by column.
        Wedge<S> img = Wedge<S>::basis_index(0, 0);
        const Mask m = t.mask(k, static_cast<int>(ia));
        for (int i = 0; i < kN; ++i) {
            if (!(m & (1u << i))) continue;
            std::array<S, 9> col;
            for (int r = 0; r < 9; ++r) col[static_cast<std::size_t>(r)] = a(r, i);
            img = wedge(img, Wedge<S>::vector(col));
        }
        w += u[ia] * img;
    }
    return w;
}

/// The vector x in C^9 as a 9-array, from a degree-1 wedge.
template <Field S>
std::array<S, 9> as_vector(const Wedge<S>& x)
{
    if (x.degree() != 1) throw ShapeError("expected a degree-1 element");
    std::array<S, 9> v;
    for (std::size_t i = 0; i < 9; ++i) v[i] = x[i];
    return v;
}

}  // namespace e8
