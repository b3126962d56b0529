#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "vectors.hpp"

namespace diracepr
{

/*!
 * Seeded random source with a platform-independent output sequence.
 *
 * The engine is std::mt19937_64, whose sequence is fixed by the standard.
 * Doubles are built from the top 53 bits of each draw rather than through
 * std::uniform_real_distribution, whose algorithm is implementation-defined.
 */
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    //! Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    //! Uniform on the unit sphere.
    Vec3 unit_vector()
    {
        double const z = uniform(-1.0, 1.0);
        double const phi = uniform(0.0, 2 * std::numbers::pi);
        double const r = std::sqrt(std::max(0.0, 1 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

    //! Uniform in the ball of the given radius.
    Vec3 in_ball(double radius)
    {
        return (radius * std::cbrt(uniform())) * unit_vector();
    }

    //! Complex 3-vector with components uniform in the unit square.
    CVec3 complex_vector()
    {
        CVec3 v;
        for (auto& x : v)
            x = cplx{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
        return v;
    }

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace diracepr
