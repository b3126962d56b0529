#include "support.hpp"

using namespace diracepr;
using namespace diracepr::test;

TEST(Amplitude, RestFrame)
{
    Amplitude const v = amplitude_v(FourVector{{1.0, 0, 0, 0}}, 1.0);
    CMat42 const expected = (1 / std::sqrt(2.0)) * vstack(pauli(2), pauli(2));
    EXPECT_TRUE(mat_near(v.matrix(), expected, 1e-15));
    CMat42 const u = amplitude_u(v);
    EXPECT_TRUE(mat_near(u, (I_unit / std::sqrt(2.0)) * vstack(CMat2::identity(), CMat2::identity()),
                         1e-15));
}

TEST(Amplitude, RejectsOffShell)
{
    expect_error([] { amplitude_v(FourVector{{2.0, 0, 0, 0}}, 1.0); }, Errc::off_shell);
    expect_error([] { amplitude_v(FourVector{{1.0, 0, 0, 0}}, -1.0); }, Errc::invalid_argument);
}

TEST(Amplitude, MomentumOverloadAgrees)
{
    Vec3 const k{0.4, -2.0, 1.1};
    EXPECT_TRUE(mat_near(amplitude_v(k, 1.5).matrix(), amplitude_v(on_shell(k, 1.5), 1.5).matrix(), 0));
}

class AmplitudeRelations : public ::testing::TestWithParam<double>
{
};

TEST_P(AmplitudeRelations, HoldForRandomMomenta)
{
    double const m = GetParam();
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i)
    {
        FourVector const k = random_on_shell(rng, m);
        Amplitude const v = amplitude_v(k, m);
        CMat4 const slash = feynman_slash(k);
        CMat24 const vb = vbar(v);
        ASSERT_TRUE(mat_near(slash * v.matrix(), m * v.matrix(), 1e-11 * m));
        ASSERT_TRUE(mat_near(vb * v.matrix(), CMat2::identity(), 1e-11));
        ASSERT_TRUE(mat_near(diracepr::gamma(0) * v.matrix(), amplitude_v(parity(k), m).matrix(), 1e-11));
        for (std::size_t mu = 0; mu < 4; ++mu)
            ASSERT_TRUE(mat_near(vb * diracepr::gamma(mu) * v.matrix(), (k[mu] / m) * CMat2::identity(), 1e-11));
        ASSERT_TRUE(mat_near(v.matrix() * vb, (slash + m * CMat4::identity()) / (2 * m), 1e-11));
        CMat42 const u = amplitude_u(v);
        CMat42 const w = amplitude_w(v);
        ASSERT_TRUE(mat_near(slash * u, m * u, 1e-11 * m));
        ASSERT_TRUE(mat_near(slash * w, -m * w, 1e-11 * m));
    }
}

INSTANTIATE_TEST_SUITE_P(Masses, AmplitudeRelations, ::testing::Values(1.0, 0.511, 3.0));

TEST(Amplitude, WeinbergConditions)
{
    Rng rng(seed);
    double const m = 1.0;
    for (int i = 0; i < 200; ++i)
    {
        SL2Element const a = random_lorentz(rng);
        CMat4 const d = bispinor_rep(a);
        for (int j = 0; j < 5; ++j)
        {
            FourVector const k = random_on_shell(rng, m);
            CMat2 const r = wigner_rotation(a, k, m);
            CMat42 const vk = amplitude_v(k, m).matrix();
            CMat42 const vlk = amplitude_v(transform_momentum(a, k, m), m).matrix();
            ASSERT_TRUE(mat_near(vlk, d * vk * transpose(r), 1e-10));
            ASSERT_TRUE(mat_near(vlk * pauli(2), d * vk * pauli(2) * adjoint(r), 1e-10));
        }
    }
}
