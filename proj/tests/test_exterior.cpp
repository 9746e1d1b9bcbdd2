#include <gtest/gtest.h>

#include "e8/exterior.hpp"

using namespace e8;
using W = Wedge<Rational>;
using M = Matrix9<Rational>;

TEST(Subsets, IndexingIsLexicographic)
{
    EXPECT_EQ(subset_index({1, 2, 3}), 0);
    EXPECT_EQ(subset_index({1, 2, 4}), 1);
    EXPECT_EQ(subset_index({7, 8, 9}), 83);
    EXPECT_EQ(binomial9(3), 84);
    EXPECT_EQ(binomial9(6), 84);
    EXPECT_EQ(subset_at(3, 83), (std::vector<int>{7, 8, 9}));
    for (int k = 0; k < 84; ++k) {
        const auto s = subset_at(3, k);
        EXPECT_EQ(subset_index(std::span<const int>(s)), k);
    }
}

TEST(Wedge, ProductSigns)
{
    EXPECT_EQ(wedge(W::basis({1, 2, 3}), W::basis({4, 5, 6})), W::basis({1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(wedge(W::basis({1, 2, 4}), W::basis({3})), -W::basis({1, 2, 3, 4}));
    EXPECT_TRUE(wedge(W::basis({1, 2, 3}), W::basis({1, 4, 5})).is_zero());
    // graded commutativity for odd degrees
    EXPECT_EQ(wedge(W::basis({4, 5, 6}), W::basis({1, 2, 3})), -W::basis({1, 2, 3, 4, 5, 6}));
}

TEST(Wedge, InnerProduct)
{
    EXPECT_EQ(inner(W::basis({1, 2, 3}), W::basis({1, 2, 3})), Rational(1));
    EXPECT_EQ(inner(W::basis({1, 2, 3}), W::basis({1, 2, 4})), Rational(0));
    const W x = wedge(wedge(W::basis({1}) + W::basis({4}), W::basis({2})), W::basis({3}));
    EXPECT_EQ(inner(x, W::basis({1, 2, 3})), Rational(1));
    EXPECT_THROW(inner(W::basis({1}), W::basis({1, 2})), ShapeError);
}

TEST(Wedge, HodgeStar)
{
    EXPECT_EQ(hodge_star(W::basis({1, 2, 3})), W::basis({4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(hodge_star(W::basis_index(0, 0)), W::basis({1, 2, 3, 4, 5, 6, 7, 8, 9}));
    // u ^ *v = (u, v) e_1..9
    for (int a = 0; a < 84; a += 7)
        for (int b = 0; b < 84; b += 5) {
            const W u = W::basis_index(3, a), v = W::basis_index(3, b);
            EXPECT_EQ(wedge(u, hodge_star(v)), inner(u, v) * W::basis({1, 2, 3, 4, 5, 6, 7, 8, 9}));
        }
    // ** = id in odd dimension
    for (int k = 0; k <= 9; ++k)
        for (int a = 0; a < binomial9(k); ++a) EXPECT_EQ(hodge_star(hodge_star(W::basis_index(k, a))), W::basis_index(k, a));
}

TEST(Wedge, Sl9Action)
{
    const M h = M::unit(1, 1) - M::unit(4, 4);
    EXPECT_EQ(sl9_act(h, W::basis({1, 2, 3})), W::basis({1, 2, 3}));
    EXPECT_EQ(sl9_act(h, W::basis({4, 5, 6})), -W::basis({4, 5, 6}));
    EXPECT_TRUE(sl9_act(h, W::basis({7, 8, 9})).is_zero());
    // E_41 moves e_1 to e_4
    EXPECT_EQ(sl9_act(M::unit(4, 1), W::basis({1, 2, 3})), W::basis({2, 3, 4}));
    // diagonal H acts on e_I by the sum of its entries over I
    std::array<Rational, 9> d{1, 2, 3, 4, 5, 6, 7, 8, -36};
    EXPECT_EQ(sl9_act(M::diagonal(d), W::basis({2, 5, 9})), Rational(2 + 5 - 36) * W::basis({2, 5, 9}));
}

TEST(Wedge, Sl9ActionIsLieHomomorphism)
{
    const M x = M::unit(1, 2) + Rational(3) * M::unit(5, 7) - M::unit(9, 4);
    const M y = M::unit(2, 5) + M::unit(7, 1) + Rational(2) * (M::unit(3, 3) - M::unit(8, 8));
    const W u = W::basis({1, 2, 5}) + Rational(2) * W::basis({4, 7, 9}) - W::basis({3, 5, 8});
    EXPECT_EQ(sl9_act(commutator(x, y), u), sl9_act(x, sl9_act(y, u)) - sl9_act(y, sl9_act(x, u)));
}

TEST(Wedge, GroupActionIsMultiplicative)
{
    M a = M::identity() + Rational(2) * M::unit(1, 3) - M::unit(6, 2);
    const W u = W::basis({1, 2, 3}), v = W::basis({2, 6, 8});
    EXPECT_EQ(gl9_act(a, wedge(u, v)), wedge(gl9_act(a, u), gl9_act(a, v)));
    EXPECT_EQ(gl9_act(M::identity(), u), u);
}

TEST(Cross, Examples)
{
    std::array<Rational, 9> d;
    for (int k = 0; k < 9; ++k) d[static_cast<std::size_t>(k)] = k < 3 ? Rational(2, 3) : Rational(-1, 3);
    EXPECT_EQ(cross(W::basis({1, 2, 3}), W::basis({1, 2, 3})), M::diagonal(d));
    EXPECT_TRUE(cross(W::basis({1, 2, 3}), W::basis({4, 5, 6})).trace().is_zero());
}

TEST(Cross, TableMatchesDefinition)
{
    for (int a = 0; a < 84; a += 3)
        for (int b = 0; b < 84; b += 4) {
            const W u = W::basis_index(3, a), v = W::basis_index(3, b);
            EXPECT_EQ(cross(u, v), cross_reference(u, v)) << a << " " << b;
        }
    const W u = W::basis({1, 2, 3}) + Rational(5) * W::basis({2, 4, 9});
    const W v = W::basis({1, 2, 3}) - W::basis({3, 4, 7});
    EXPECT_EQ(cross(u, v), cross_reference(u, v));
    EXPECT_TRUE(cross(u, v).trace().is_zero());
}

TEST(Matrix9, InverseAndDeterminant)
{
    M a = M::identity() + Rational(2) * M::unit(1, 3) - M::unit(6, 2) + M::unit(2, 6);
    EXPECT_EQ(a * a.inverse(), M::identity());
    EXPECT_EQ(M::identity().det(), Rational(1));
    EXPECT_EQ((Rational(2) * M::identity()).det(), Rational(512));
}
