#include <gtest/gtest.h>

#include "e8/scalar.hpp"

using namespace e8;

TEST(Rational, NormalisesAndOverflowsIntoGmp)
{
    EXPECT_EQ(Rational(6, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
    const Rational big(1LL << 62);
    EXPECT_EQ((big * big / big), big);
    EXPECT_EQ((big * big).to_string(), "21267647932558653966460912964485513216");
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, ParseRoundTrip)
{
    for (const char* s : {"0", "-7", "3/5", "-22/7", "123456789012345678901234567891/2"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Gaussian, ConjugationIsTau)
{
    EXPECT_EQ(tau(Gaussian::i()), -Gaussian::i());
    EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
    const Gaussian z{Rational(3), Rational(-4)};
    EXPECT_EQ(z * z.conj(), Gaussian(25));
    EXPECT_EQ(Gaussian(1) / z, Gaussian(Rational(3, 25), Rational(4, 25)));
}

TEST(Gaussian, ParseRoundTrip)
{
    for (const char* s : {"0", "1/2", "-3*i", "1/2-3/4*i", "5+1*i"}) EXPECT_EQ(Gaussian::parse(s).to_string(), s);
    EXPECT_EQ(Gaussian::parse("i"), Gaussian::i());
    EXPECT_EQ(Gaussian::parse("-i"), -Gaussian::i());
    EXPECT_EQ(Gaussian::parse("2+i"), Gaussian(Rational(2), Rational(1)));
    EXPECT_THROW(Gaussian::parse("x"), ParseError);
}

TEST(Cyclotomic24, RootsOfUnity)
{
    const auto z6 = Cyclotomic24::zeta(6);
    EXPECT_EQ(z6 * z6, Cyclotomic24(-1));
    const auto w = Cyclotomic24::zeta(8);  // primitive cube root
    EXPECT_EQ(w * w * w, Cyclotomic24(1));
    EXPECT_FALSE(w == Cyclotomic24(1));
    EXPECT_EQ(w * w + w + Cyclotomic24(1), Cyclotomic24(0));
    auto p = Cyclotomic24(1);
    for (int k = 0; k < 24; ++k) p *= Cyclotomic24::zeta(1);
    EXPECT_EQ(p, Cyclotomic24(1));
    EXPECT_EQ(tau(Cyclotomic24::i()), -Cyclotomic24::i());
    EXPECT_EQ(Cyclotomic24::zeta(5).conj(), Cyclotomic24::zeta(19));
}

TEST(Cyclotomic24, InverseAndEmbedding)
{
    const Cyclotomic24 x = Cyclotomic24(2) + Cyclotomic24::zeta(1) - Cyclotomic24::zeta(7);
    EXPECT_EQ(x * x.inverse(), Cyclotomic24(1));
    EXPECT_EQ(Cyclotomic24(Gaussian::i()), Cyclotomic24::i());
    EXPECT_NEAR(std::abs(Cyclotomic24::zeta(3).to_complex() - std::polar(1.0, M_PI / 4)), 0.0, 1e-15);
    EXPECT_EQ(Cyclotomic24::parse(x.to_string()), x);
    EXPECT_THROW(Cyclotomic24::parse("1,2"), ParseError);
}

TEST(Matrix, RankExamples)
{
    EXPECT_EQ(rank(Matrix<Rational>::identity(3)), 3u);
    EXPECT_EQ(rank(Matrix<Rational>(5, 7)), 0u);
    Matrix<Gaussian> m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = Gaussian::i();
    m(1, 0) = Gaussian::i();
    m(1, 1) = -1;
    EXPECT_EQ(rank(m), 1u);
    Matrix<F64> f(2, 2);
    f(0, 0) = 1;
    f(1, 1) = 1e-14;
    EXPECT_EQ(rank(f, 1e-9), 1u);
    EXPECT_EQ(rank(f, 1e-16), 2u);
}

TEST(Matrix, NullSpaceExamples)
{
    EXPECT_TRUE(null_space(Matrix<Rational>::identity(4)).empty());
    EXPECT_EQ(null_space(Matrix<Rational>(1, 4)).size(), 4u);
    Matrix<Rational> m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = -1;
    const auto ns = null_space(m);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0][0], ns[0][1]);
    EXPECT_FALSE(ns[0][0].is_zero());
}

TEST(Matrix, ShapeErrors)
{
    EXPECT_THROW(Matrix<Rational>(2, 3) * Matrix<Rational>(2, 3), ShapeError);
    EXPECT_THROW(Matrix<Rational>(2, 3).apply({1, 2}), ShapeError);
}

TEST(Sparse, NullSpaceMatchesDense)
{
    // rows of a 3x5 rank-2 system
    Matrix<Rational> d(3, 5);
    const int vals[3][5] = {{1, 2, 0, -1, 3}, {0, 1, 1, 1, 0}, {1, 3, 1, 0, 3}};
    std::vector<SparseVec<Rational>> rows;
    for (int r = 0; r < 3; ++r) {
        std::vector<Rational> row;
        for (int c = 0; c < 5; ++c) {
            d(r, c) = vals[r][c];
            row.emplace_back(vals[r][c]);
        }
        rows.push_back(sparse_from_dense(row));
    }
    const auto ns = sparse_null_space(rows, 5);
    EXPECT_EQ(ns.size(), 3u);
    for (const auto& v : ns) {
        const auto img = d.apply(v);
        for (const auto& x : img) EXPECT_TRUE(x.is_zero());
    }
    EXPECT_EQ(rank(d), 2u);
}

TEST(Traits, LiteralsRoundTripPerBackend)
{
    const Gaussian g{Rational(-5, 3), Rational(2)};
    EXPECT_EQ(parse_literal<Gaussian>(literal(g)), g);
    const Cyclotomic24 c = Cyclotomic24::zeta(11) + Cyclotomic24(Rational(1, 9));
    EXPECT_EQ(parse_literal<Cyclotomic24>(literal(c)), c);
    const F64 f{0.1, -1.0 / 3.0};
    const F64 back = parse_literal<F64>(literal(f));
    EXPECT_EQ(back, f);
    EXPECT_EQ(parse_literal<F64>("-2.5e-3"), F64(-2.5e-3, 0));
    EXPECT_EQ(parse_literal<F64>("1.5e+2-0.25*i"), F64(150, -0.25));
    EXPECT_EQ(parse_literal<F64>("0.5*i"), F64(0, 0.5));
    EXPECT_EQ(parse_literal<F64>("1/4"), F64(0.25, 0));
    EXPECT_THROW(parse_literal<F64>("1.5x"), ParseError);
}
