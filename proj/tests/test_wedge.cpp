#include <gtest/gtest.h>

#include "e8/wedge/model.hpp"

using namespace e8;
using namespace e8::wedge_model;
using G = Gaussian;
using W = Wedge<G>;
using M = Matrix9<G>;

namespace {

const G i_ = G::i();

Element<G> sample_element()
{
    M d = M::unit(1, 2) + G(3) * M::unit(5, 7) - i_ * M::unit(9, 4) + G(2) * (M::unit(3, 3) - M::unit(8, 8));
    W u = W::basis({1, 2, 5}) + G(Rational(1, 2)) * W::basis({4, 7, 9}) - i_ * W::basis({3, 5, 8});
    W v = W::basis({2, 3, 4}) + G(2) * W::basis({1, 6, 9});
    return {d, u, v};
}

}  // namespace

TEST(WedgeBracket, Examples)
{
    const auto h = from_D<G>(M::unit(1, 1) - M::unit(4, 4));
    EXPECT_EQ(bracket(h, from_u<G>(W::basis({1, 2, 3}))), from_u<G>(W::basis({1, 2, 3})));
    EXPECT_EQ(bracket(from_u<G>(W::basis({1, 2, 3})), from_u<G>(W::basis({4, 5, 6}))), from_v<G>(-W::basis({7, 8, 9})));
    const auto uv = bracket(from_u<G>(W::basis({1, 2, 3})), from_v<G>(W::basis({1, 2, 3})));
    EXPECT_EQ(uv.D, cross(W::basis({1, 2, 3}), W::basis({1, 2, 3})));
    EXPECT_TRUE(uv.u.is_zero() && uv.v.is_zero());
    // v side uses -tD
    EXPECT_EQ(bracket(h, from_v<G>(W::basis({1, 2, 3}))), from_v<G>(-W::basis({1, 2, 3})));
}

TEST(WedgeBracket, ZeroAndSelf)
{
    const auto r = sample_element();
    EXPECT_TRUE(bracket(r, r).is_zero());
    EXPECT_TRUE(bracket(Element<G>{}, r).is_zero());
}

TEST(WedgeKilling, Examples)
{
    const auto h = from_D<G>(M::unit(1, 1) - M::unit(4, 4));
    EXPECT_EQ(killing(h, h), G(120));
    EXPECT_EQ(killing(from_u<G>(W::basis({1, 2, 3})), from_v<G>(W::basis({1, 2, 3}))), G(60));
    EXPECT_EQ(killing(from_D<G>(M::unit(1, 2)), from_D<G>(M::unit(1, 2))), G(0));
    EXPECT_EQ(killing(from_D<G>(M::unit(1, 2)), from_D<G>(M::unit(2, 1))), G(60));
}

TEST(CompactForm, TauLambdaTilde)
{
    EXPECT_EQ(tau_lambda_tilde(from_D<G>(M::unit(1, 2))), from_D<G>(-M::unit(2, 1)));
    EXPECT_EQ(tau_lambda_tilde(from_u<G>(i_ * W::basis({1, 2, 3}))), from_v<G>(i_ * W::basis({1, 2, 3})));
    EXPECT_TRUE(in_compact_form(from_D<G>(M::unit(1, 2) - M::unit(2, 1))));
    EXPECT_TRUE(in_compact_form(Element<G>{M{}, W::basis({1, 2, 3}), -W::basis({1, 2, 3})}));
    EXPECT_FALSE(in_compact_form(from_D<G>(M::unit(1, 2))));
    const auto r = sample_element();
    EXPECT_EQ(tau_lambda_tilde(tau_lambda_tilde(r)), r);
}

TEST(CompactForm, HermitianExamples)
{
    EXPECT_EQ(hermitian(from_u<G>(W::basis({1, 2, 3})), from_u<G>(W::basis({1, 2, 3}))), G(60));
    EXPECT_EQ(hermitian(from_D<G>(M::unit(1, 2)), from_D<G>(M::unit(1, 2))), G(60));
    const auto d = from_D<G>(i_ * M::unit(1, 1) - i_ * M::unit(2, 2));
    EXPECT_EQ(tau_lambda_tilde(d), d);
    EXPECT_TRUE(in_compact_form(d));
    EXPECT_EQ(tau_lambda_tilde(from_u<G>(W::basis({1, 2, 3}))), from_v<G>(-W::basis({1, 2, 3})));
}

TEST(CompactForm, HermitianPositive)
{
    const auto r = sample_element();
    const G h = hermitian(r, r);
    EXPECT_TRUE(h.is_real());
    EXPECT_GT(h.re(), Rational(0));
    EXPECT_EQ(hermitian(r, r), hermitian_expanded(r, r));
}

TEST(W4, ActionOnBasis)
{
    EXPECT_EQ(w4_apply(from_D<G>(M::unit(1, 2))), from_D<G>(-i_ * M::unit(1, 2)));
    EXPECT_EQ(w4_apply(from_D<G>(M::unit(2, 3))), from_D<G>(M::unit(2, 3)));
    EXPECT_EQ(w4_apply(from_u<G>(W::basis({1, 2, 3}))), from_u<G>(-W::basis({1, 2, 3})));
    EXPECT_EQ(w4_apply(from_u<G>(W::basis({2, 3, 4}))), from_u<G>(-i_ * W::basis({2, 3, 4})));
}

TEST(W4, OrderFour)
{
    const auto r = sample_element();
    auto x = r;
    for (int k = 0; k < 4; ++k) x = w4_apply(x);
    EXPECT_EQ(x, r);
    EXPECT_FALSE(w4_apply(w4_apply(r)) == r);
}

TEST(W4, AutomorphismOnSampledPair)
{
    const auto a = sample_element();
    auto b = a;
    b.D = b.D.transpose();
    b.u = hodge_star(hodge_star(a.v));
    EXPECT_EQ(w4_apply(bracket(a, b)), bracket(w4_apply(a), w4_apply(b)));
}

TEST(PhiW4, IdentityAndKernel)
{
    const auto r = sample_element();
    EXPECT_EQ(phi_w4_apply(M::identity(), r), r);
    EXPECT_EQ(embed_f(G(1), lower_identity<G>()), M::identity());
    EXPECT_EQ(embed_f(G(2), lower_identity<G>()).det(), G(1));
    EXPECT_THROW(embed_f(G(0), lower_identity<G>()), DomainError);

    using C = Cyclotomic24;
    const auto omega = C::zeta(8);
    const Element<C> rc{lift_matrix<C>(r.D), Wedge<C>::basis({1, 4, 7}), Wedge<C>::basis({2, 5, 9})};
    const auto we = omega * Matrix9<C>::identity();
    EXPECT_EQ(we.det(), C(1));
    EXPECT_EQ(phi_w4_apply(we, rc), rc);
    // embed_f(omega24^3, omega24^-3 I) is diag(omega24^-24, I) = I
    const auto k = embed_f(C::zeta(3), C::zeta(21) * lower_identity<C>());
    EXPECT_EQ(k, Matrix9<C>::identity());
}

TEST(PhiW4, NeedsUnitDeterminant)
{
    // 2I scales u by 8 and v by 1/8, which the star terms do not follow
    const auto a = from_u<G>(W::basis({1, 2, 3})), b = from_u<G>(W::basis({4, 5, 6}));
    const M two = G(2) * M::identity();
    EXPECT_FALSE(phi_w4_apply(two, bracket(a, b)) == bracket(phi_w4_apply(two, a), phi_w4_apply(two, b)));
    M unimodular = M::identity() + G(3) * M::unit(2, 7) - i_ * M::unit(9, 1);
    ASSERT_EQ(unimodular.det(), G(1));
    EXPECT_EQ(phi_w4_apply(unimodular, bracket(a, b)), bracket(phi_w4_apply(unimodular, a), phi_w4_apply(unimodular, b)));
}

TEST(WedgeBasis, CoordinatesRoundTrip)
{
    EXPECT_EQ(block_of(0), 0);
    EXPECT_EQ(block_of(79), 0);
    EXPECT_EQ(block_of(80), 1);
    EXPECT_EQ(block_of(164), 2);
    for (std::size_t k = 0; k < kDim; k += 13) EXPECT_EQ(coords(basis<G>(k)), unit_coords<G>(kDim, k));
    const auto r = sample_element();
    EXPECT_EQ(element(coords(r)), r);
    Element<G> bad = r;
    bad.D(0, 0) += G(1);
    EXPECT_THROW(coords(bad), DomainError);
}

TEST(WedgeTable, RegressionCountAndExample)
{
    const auto& t = table<G>();
    EXPECT_EQ(t.dim(), 248u);
    EXPECT_EQ(t.nonzeros_upper(), 8368u);
    // (E11 - E99) with (0, e123, 0): coefficient 1 on (0, e123, 0); (E44 - E99) kills e123
    const std::size_t e123 = 80;
    ASSERT_EQ(t(72, e123).size(), 1u);
    EXPECT_EQ(t(72, e123)[0].first, e123);
    EXPECT_EQ(t(72, e123)[0].second, G(1));
    EXPECT_TRUE(t(75, e123).empty());
    // the table agrees with the element bracket
    for (std::size_t i = 0; i < kDim; i += 17)
        for (std::size_t j = 0; j < kDim; j += 11)
            EXPECT_EQ(dense_from_sparse(t(i, j), kDim), coords(bracket(basis<G>(i), basis<G>(j)))) << i << " " << j;
}

TEST(WedgeFixed, Dimensions)
{
    const auto fixed = fixed_subalgebra([](const Element<G>& r) { return w4_apply(r); });
    EXPECT_EQ(fixed.size(), 64u);
    for (const auto& r : fixed) {
        EXPECT_TRUE(r.u.is_zero() && r.v.is_zero());
        for (int k = 1; k < 9; ++k) EXPECT_TRUE(is_zero(r.D(0, k)) && is_zero(r.D(k, 0)));
    }
    EXPECT_EQ(fixed_subalgebra([](const Element<G>& r) { return w4_apply(w4_apply(r)); }).size(), 120u);
    EXPECT_EQ(fixed_subalgebra([](const Element<G>& r) { return r; }).size(), 248u);
}
