#include <gtest/gtest.h>

#include "e8/verify/suites_freudenthal.hpp"

using namespace e8;
using namespace e8::freudenthal;
using Q = Rational;
using G = Gaussian;

namespace {

Octonion<Q> oct(std::initializer_list<int> c)
{
    Octonion<Q> x = octonion_zero<Q>();
    std::size_t k = 0;
    for (int v : c) x[k++] = Q(v);
    return x;
}

Jordan<Q> sample_jordan(int shift)
{
    Jordan<Q> x = jordan_zero<Q>();
    for (std::size_t k = 0; k < kJ; ++k) x[k] = Q(static_cast<long long>((k * 7 + static_cast<std::size_t>(shift)) % 11) - 5, 1 + static_cast<long long>(k % 3));
    return x;
}

}  // namespace

TEST(Octonion, Units)
{
    const auto e1 = octonion_unit<Q>(1), e2 = octonion_unit<Q>(2), e3 = octonion_unit<Q>(3);
    auto minus_one = octonion_zero<Q>();
    minus_one[0] = Q(-1);
    for (int k = 1; k < 8; ++k) EXPECT_EQ(octonion_mul(octonion_unit<Q>(k), octonion_unit<Q>(k)), minus_one) << k;
    EXPECT_EQ(octonion_mul(e1, e2), e3);
    auto neg_e3 = e3;
    neg_e3[3] = Q(-1);
    EXPECT_EQ(octonion_mul(e2, e1), neg_e3);
}

TEST(Octonion, AlternativeNotAssociative)
{
    const auto x = oct({1, 2, 0, -1, 3, 0, 1, -2}), y = oct({0, 1, 1, 0, -1, 2, 0, 1});
    EXPECT_EQ(octonion_mul(octonion_mul(x, x), y), octonion_mul(x, octonion_mul(x, y)));
    EXPECT_EQ(octonion_mul(octonion_mul(y, x), x), octonion_mul(y, octonion_mul(x, x)));
    const auto a = octonion_unit<Q>(1), b = octonion_unit<Q>(2), c = octonion_unit<Q>(4);
    EXPECT_FALSE(octonion_mul(octonion_mul(a, b), c) == octonion_mul(a, octonion_mul(b, c)));
}

TEST(Jordan, IdentityAndCross)
{
    const auto e = jordan_identity<Q>();
    const auto a = sample_jordan(3);
    EXPECT_EQ(jordan_mul(e, a), a);
    EXPECT_EQ(freudenthal_cross(e, e), e);
    EXPECT_EQ(jordan_trace(e), Q(3));
    EXPECT_EQ(jordan_inner(e, e), Q(3));
    const auto b = sample_jordan(5);
    EXPECT_EQ(jordan_mul(a, b), jordan_mul(b, a));
    EXPECT_EQ(freudenthal_cross(a, b), freudenthal_cross(b, a));
    // Jordan identity (a^2 b) a = a^2 (b a)
    const auto a2 = jordan_mul(a, a);
    EXPECT_EQ(jordan_mul(jordan_mul(a2, b), a), jordan_mul(a2, jordan_mul(b, a)));
}

TEST(E7, BootstrapRanks)
{
    const auto& r = E7::get().ranks();
    EXPECT_EQ(r.f4, 52u);
    EXPECT_EQ(r.e6, 78u);
    EXPECT_EQ(r.e7, 133u);
}

TEST(E7, LambdaGammaRelations)
{
    const auto& e = E7::get();
    const SpMat id = SpMat::identity(kP);
    EXPECT_EQ(e.lambda() * e.lambda(), Q(-1) * id);
    EXPECT_EQ(e.gamma() * e.gamma(), id);
    EXPECT_EQ(e.lambda() * e.gamma(), e.gamma() * e.lambda());
    EXPECT_EQ(e7_lambda_gamma_fixed().size(), 63u);
}

TEST(E7, SymplecticFormPreserved)
{
    for (std::size_t k = 0; k < kE7; k += 9) {
        std::vector<Q> phi(kE7, Q(0));
        phi[k] = Q(1);
        for (std::size_t m = 0; m < kP; m += 5)
            for (std::size_t n = 0; n < kP; n += 7) {
                const auto p = freud_unit<Q>(m), q = freud_unit<Q>(n);
                EXPECT_EQ(symplectic(e7_apply(phi, p), q) + symplectic(p, e7_apply(phi, q)), Q(0)) << k << " " << m << " " << n;
            }
    }
}

TEST(Freudenthal, LambdaGamma)
{
    const auto p = make_freud(sample_jordan(1), sample_jordan(2), Q(3), Q(-4));
    auto neg = p;
    for (auto& x : neg) x = -x;
    EXPECT_EQ(lambda_apply(lambda_apply(p)), neg);
    EXPECT_EQ(gamma_apply(gamma_apply(p)), p);
    EXPECT_EQ(lambda_apply(gamma_apply(p)), gamma_apply(lambda_apply(p)));
}

TEST(FreudenthalModel, AutomorphismRelations)
{
    using namespace e8::verify::freudenthal_suites;
    const auto u4 = upsilon4_map<G>(), u = upsilon_map<G>(), m4 = mu4_map<G>();
    const auto id = LinearMap<G>::identity(kDim);
    EXPECT_EQ(u4.compose(u4), u);
    EXPECT_EQ(m4.compose(m4), u);
    EXPECT_EQ(u4.power(4), id);
    EXPECT_EQ(m4.power(4), id);
    EXPECT_FALSE(m4.compose(m4) == id);
    EXPECT_EQ(phi_upsilon_map<G>(G(1)), id);
    EXPECT_EQ(phi_upsilon_map<G>(G::i()), u4);
    EXPECT_EQ(phi_upsilon_map<G>(G(-1)), u);
    EXPECT_EQ(phi_upsilon_map<G>(G(-1)).compose(u), id);
    EXPECT_EQ(m4.compose(phi_upsilon_map<G>(G::i())), phi_upsilon_map<G>(G::i()).compose(m4));
}

TEST(FreudenthalModel, TableAndCoordinates)
{
    const auto& t = table<G>();
    EXPECT_EQ(t.dim(), 248u);
    EXPECT_EQ(t.nonzeros_upper(), 19814u);
    EXPECT_EQ(block_of(0), 0);
    EXPECT_EQ(block_of(kPOff), 1);
    EXPECT_EQ(block_of(kQOff), 2);
    EXPECT_EQ(block_of(kT), 3);
    for (std::size_t k = 0; k < kDim; k += 23) EXPECT_EQ(coords(basis<G>(k)), unit_coords<G>(kDim, k));
    // [r, s] = 2 s, [r, t] = -2 t, [s, t] = r
    auto rs = unit_coords<G>(kDim, kS);
    rs[kS] = G(2);
    EXPECT_EQ(dense_from_sparse(t(kR, kS), kDim), rs);
    auto rt = unit_coords<G>(kDim, kT);
    rt[kT] = G(-2);
    EXPECT_EQ(dense_from_sparse(t(kR, kT), kDim), rt);
    EXPECT_EQ(dense_from_sparse(t(kS, kT), kDim), unit_coords<G>(kDim, kR));
}

TEST(FreudenthalFixed, Dimensions)
{
    using namespace e8::verify::freudenthal_suites;
    EXPECT_EQ(fixed_subalgebra(upsilon4_map<G>()).size(), 134u);
    EXPECT_EQ(fixed_subalgebra(mu4_map<G>()).size(), 66u);
    EXPECT_EQ(fixed_subalgebra(upsilon_map<G>()).size(), 136u);
    EXPECT_EQ(fixed_subalgebra(LinearMap<G>::identity(kDim)).size(), 248u);
}
