#include "support.hpp"

using namespace diracepr;
using namespace diracepr::test;

TEST(Matrix, IdentityAndProduct)
{
    CMat2 const a{1.0, 2.0, I_unit, -1.0};
    EXPECT_TRUE(mat_near(a * CMat2::identity(), a, 0));
    EXPECT_TRUE(mat_near(CMat2::identity() * a, a, 0));
    CMat2 const sq = a * a;
    EXPECT_EQ(sq(0, 0), 1.0 + 2.0 * I_unit);
    EXPECT_EQ(sq(1, 1), 1.0 + 2.0 * I_unit);
}

TEST(Matrix, AdjointTransposeTrace)
{
    CMat<2, 3> const a{1.0, I_unit, 2.0, 3.0, -I_unit, 4.0};
    auto const at = transpose(a);
    auto const ad = adjoint(a);
    EXPECT_EQ(at(1, 0), I_unit);
    EXPECT_EQ(ad(1, 0), -I_unit);
    EXPECT_EQ(trace(CMat2{1.0, 5.0, 6.0, I_unit}), 1.0 + I_unit);
}

TEST(Matrix, DetInverseEigenvalues)
{
    CMat2 const a{2.0, 1.0, 1.0, 2.0};
    EXPECT_NEAR(std::abs(det(a) - 3.0), 0, 1e-15);
    EXPECT_TRUE(mat_near(a * inverse(a), CMat2::identity(), 1e-15));
    auto const ev = eigenvalues(a);
    EXPECT_NEAR(ev[0].real(), 1.0, 1e-15);
    EXPECT_NEAR(ev[1].real(), 3.0, 1e-15);
}

TEST(Matrix, Blocks)
{
    CMat2 const s = pauli(1);
    CMat4 const d = blockdiag(s, -s);
    EXPECT_TRUE(mat_near(block(d, 0, 0), s, 0));
    EXPECT_TRUE(mat_near(block(d, 1, 1), -s, 0));
    EXPECT_TRUE(mat_near(block(d, 0, 1), CMat2{}, 0));
    CMat42 const v = vstack(s, CMat2::identity());
    EXPECT_EQ(v(2, 0), 1.0);
    EXPECT_EQ(v(0, 1), 1.0);
}

TEST(Vectors, MinkowskiDot)
{
    EXPECT_DOUBLE_EQ(minkowski_dot(FourVector{{1, 0, 0, 0}}, FourVector{{1, 0, 0, 0}}), 1.0);
    double const r2 = std::sqrt(2.0);
    EXPECT_NEAR(minkowski_dot(FourVector{{r2, 1, 0, 0}}, FourVector{{r2, 0, 1, 0}}), 2.0, 1e-15);
    FourVector const k = on_shell({0.3, -1.2, 2.0}, 1.7);
    EXPECT_NEAR(minkowski_dot(k, k), 1.7 * 1.7, 1e-12);
    EXPECT_TRUE(is_on_shell(k, 1.7));
}

TEST(Vectors, ParityAndShellErrors)
{
    FourVector const k = on_shell({1, 2, 3}, 1.0);
    FourVector const kp = parity(k);
    EXPECT_EQ(kp[0], k[0]);
    EXPECT_EQ(kp[1], -1.0);
    EXPECT_EQ(kp[3], -3.0);
    expect_error([] { on_shell({1, 0, 0}, 0.0); }, Errc::invalid_argument);
    expect_error([] { require_on_shell(FourVector{{1, 1, 0, 0}}, 1.0); }, Errc::off_shell);
}

TEST(Random, DeterministicAndInRange)
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i)
    {
        double const x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    Rng c(1);
    for (int i = 0; i < 100; ++i)
    {
        EXPECT_NEAR(norm(c.unit_vector()), 1.0, 1e-15);
        EXPECT_LE(norm(c.in_ball(5.0)), 5.0);
    }
}
