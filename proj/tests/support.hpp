#pragma once

#include <gtest/gtest.h>

#include "diracepr/diracepr.hpp"

namespace diracepr::test
{
//! Entrywise comparison with the worst offending entry in the message.
template<std::size_t R, std::size_t C>
::testing::AssertionResult
mat_near(CMat<R, C> const& actual, CMat<R, C> const& expected, double tol)
{
    double const err = max_abs_diff(actual, expected);
    if (err <= tol)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "max entrywise error " << err << " > " << tol;
}

inline constexpr std::uint64_t seed = 7;

inline Direction random_direction(Rng& rng)
{
    return Direction(rng.unit_vector());
}

//! CMF antiparticle momentum with speed beta along n.
inline FourVector cmf_momentum(Direction const& n, double beta, double m = 1.0)
{
    double const kmag = m * beta / std::sqrt((1 - beta) * (1 + beta));
    return on_shell(kmag * n.vec(), m);
}

template<class F>
void expect_error(F&& f, Errc code)
{
    try
    {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    }
    catch (Error const& e)
    {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}
}  // namespace diracepr::test
