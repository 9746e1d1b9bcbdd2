#pragma once

#include <functional>
#include <vector>

#include "e8/lie/table.hpp"
#include "e8/scalar/matrix.hpp"

namespace e8 {

/// Linear endomorphism stored column by column: column k is the image of b_k.
///
/// With `conjugate_linear` set, the map is x -> M tau(x) instead of x -> M x.
template <Field S>
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(std::size_t n, bool conjugate_linear = false) : n_(n), conj_(conjugate_linear), cols_(n) {}

    static LinearMap identity(std::size_t n)
    {
        LinearMap m(n);
        for (std::size_t k = 0; k < n; ++k) m.cols_[k] = {{static_cast<std::uint32_t>(k), S(1)}};
        return m;
    }

    static LinearMap from_images(std::size_t n, const std::function<Coords<S>(std::size_t)>& image,
                                 bool conjugate_linear = false)
    {
        LinearMap m(n, conjugate_linear);
        for (std::size_t k = 0; k < n; ++k) m.cols_[k] = sparse_from_dense(image(k));
        return m;
    }

    /// Diagonal map from its diagonal.
    static LinearMap diagonal(const std::vector<S>& d)
    {
        LinearMap m(d.size());
        for (std::size_t k = 0; k < d.size(); ++k)
            if (!is_zero(d[k])) m.cols_[k] = {{static_cast<std::uint32_t>(k), d[k]}};
        return m;
    }

    std::size_t dim() const { return n_; }
    bool conjugate_linear() const { return conj_; }
    const SparseVec<S>& column(std::size_t k) const { return cols_[k]; }
    SparseVec<S>& column(std::size_t k) { return cols_[k]; }

    Coords<S> operator()(const Coords<S>& x) const
    {
        Coords<S> y(n_, S(0));
        for (std::size_t k = 0; k < n_; ++k) {
            if (is_zero(x[k])) continue;
            axpy(y, conj_ ? tau(x[k]) : x[k], cols_[k]);
        }
        return y;
    }

    Coords<S> image_of_basis(std::size_t k) const { return dense_from_sparse(cols_[k], n_); }

    /// this o other
    LinearMap compose(const LinearMap& other) const
    {
        LinearMap r(n_, conj_ != other.conj_);
        for (std::size_t k = 0; k < n_; ++k) {
            Coords<S> x = other.image_of_basis(k);
            r.cols_[k] = sparse_from_dense((*this)(x));
        }
        return r;
    }

    LinearMap power(int e) const
    {
        LinearMap r = identity(n_);
        for (int k = 0; k < e; ++k) r = compose(r);
        return r;
    }

    Matrix<S> to_matrix() const
    {
        Matrix<S> m(n_, n_);
        for (std::size_t k = 0; k < n_; ++k)
            for (const auto& [r, v] : cols_[k]) m(r, k) = v;
        return m;
    }

    friend bool operator==(const LinearMap& a, const LinearMap& b)
    {
        return a.n_ == b.n_ && a.conj_ == b.conj_ && a.cols_ == b.cols_;
    }

    /// First basis index whose image differs, or dim() when the maps agree.
    std::size_t first_difference(const LinearMap& other, double tolerance = 0) const
    {
        for (std::size_t k = 0; k < n_; ++k) {
            Coords<S> a = image_of_basis(k), b = other.image_of_basis(k);
            for (std::size_t r = 0; r < n_; ++r)
                if (!negligible(S(a[r] - b[r]), tolerance)) return k;
        }
        return n_;
    }

private:
    std::size_t n_ = 0;
    bool conj_ = false;
    std::vector<SparseVec<S>> cols_;
};

/// Real linear system whose kernel is the set of x = a + i b (a, b rational vectors) fixed by `m`.
///
/// Linear m = M_r + i M_i gives [[M_r - I, -M_i], [M_i, M_r - I]]; conjugate-linear m gives
/// [[M_r - I, M_i], [M_i, -M_r - I]].
inline std::vector<SparseVec<Rational>> real_fixed_system(const LinearMap<Gaussian>& m)
{
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> rows(2 * n, std::vector<Rational>(2 * n));
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [r, v] : m.column(k)) {
            const Rational& re = v.re();
            const Rational& im = v.im();
            rows[r][k] += re;
            rows[n + r][k] += im;
            if (m.conjugate_linear()) {
                rows[r][n + k] += im;
                rows[n + r][n + k] -= re;
            } else {
                rows[r][n + k] -= im;
                rows[n + r][n + k] += re;
            }
        }
    }
    for (std::size_t k = 0; k < 2 * n; ++k) rows[k][k] -= Rational(1);
    std::vector<SparseVec<Rational>> out;
    out.reserve(2 * n);
    for (auto& r : rows) out.push_back(sparse_from_dense(r));
    return out;
}

/// Common fixed vectors of several real-linear maps, as complex coordinate vectors.
inline std::vector<Coords<Gaussian>> real_fixed_space(const std::vector<const LinearMap<Gaussian>*>& maps)
{
    if (maps.empty()) throw DomainError("no maps given");
    const std::size_t n = maps.front()->dim();
    std::vector<SparseVec<Rational>> rows;
    for (const auto* m : maps) {
        auto r = real_fixed_system(*m);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    auto ker = sparse_null_space(rows, 2 * n);
    std::vector<Coords<Gaussian>> out;
    for (const auto& v : ker) {
        Coords<Gaussian> x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = Gaussian(v[k], v[n + k]);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace e8
