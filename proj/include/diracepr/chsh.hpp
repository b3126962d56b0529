#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "correlations.hpp"
#include "error.hpp"
#include "random.hpp"

namespace diracepr
{

//! |C(a,b) + C(a,b') + C(a',b) - C(a',b')|
inline double chsh(Correlator const& corr, Direction const& a, Direction const& a2,
                   Direction const& b, Direction const& b2)
{
    return std::abs(corr(a, b) + corr(a, b2) + corr(a2, b) - corr(a2, b2));
}

enum class ChshMode
{
    planar,  //!< all four axes in the x-z plane
    full,    //!< arbitrary axes on the sphere
};

struct ChshConfig
{
    ChshMode mode = ChshMode::planar;
    int grid_points = 24;  //!< per angle
    int iterations = 60;   //!< coordinate-descent sweeps
    int restarts = 4;      //!< extra seeded random starting points
    std::uint64_t seed = 7;
};

struct ChshResult
{
    double value;
    Direction a;
    Direction a2;
    Direction b;
    Direction b2;
};

namespace detail
{
inline Direction planar_direction(double angle)
{
    return Direction({std::sin(angle), 0.0, std::cos(angle)});
}

//! Parameters are 4 planar angles or 4 (theta, phi) pairs.
inline std::array<Direction, 4> chsh_directions(ChshMode mode, std::vector<double> const& x)
{
    if (mode == ChshMode::planar)
    {
        return {planar_direction(x[0]), planar_direction(x[1]),
                planar_direction(x[2]), planar_direction(x[3])};
    }
    return {Direction::spherical(x[0], x[1]), Direction::spherical(x[2], x[3]),
            Direction::spherical(x[4], x[5]), Direction::spherical(x[6], x[7])};
}

inline double
chsh_objective(Correlator const& corr, ChshMode mode, std::vector<double> const& x)
{
    auto const d = chsh_directions(mode, x);
    return chsh(corr, d[0], d[1], d[2], d[3]);
}

//! Coordinate descent with step halving; returns the refined objective.
inline double refine(Correlator const& corr, ChshMode mode, std::vector<double>& x,
                     double value, double step, int iterations)
{
    for (int it = 0; it < iterations; ++it)
    {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            for (double dir : {1.0, -1.0})
            {
                std::vector<double> trial = x;
                trial[i] += dir * step;
                double const v = chsh_objective(corr, mode, trial);
                if (v > value + 1e-15)
                {
                    x = std::move(trial);
                    value = v;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved)
            step *= 0.5;
    }
    return value;
}
}  // namespace detail

/*!
 * Maximize the CHSH combination over measurement axes.
 *
 * A coarse grid over the planar angles (correlator tabulated once on the
 * grid) seeds a coordinate descent; seeded random restarts are refined the
 * same way and the best result wins. Deterministic for a fixed config.
 */
inline ChshResult chsh_max(Correlator const& corr, ChshConfig const& cfg)
{
    require(cfg.grid_points >= 2, Errc::invalid_argument, "grid_points must be >= 2");
    require(cfg.iterations >= 0 && cfg.restarts >= 0, Errc::invalid_argument,
            "iterations and restarts must be non-negative");

    constexpr double two_pi = 2 * std::numbers::pi;
    auto const g = static_cast<std::size_t>(cfg.grid_points);
    double const step = two_pi / static_cast<double>(g);

    std::vector<Direction> axes;
    axes.reserve(g);
    for (std::size_t i = 0; i < g; ++i)
        axes.push_back(detail::planar_direction(step * static_cast<double>(i)));
    std::vector<double> table(g * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            table[i * g + j] = corr(axes[i], axes[j]);

    double best = -1;
    std::array<std::size_t, 4> arg{0, 0, 0, 0};
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t i2 = 0; i2 < g; ++i2)
            for (std::size_t j = 0; j < g; ++j)
                for (std::size_t j2 = 0; j2 < g; ++j2)
                {
                    double const v = std::abs(table[i * g + j] + table[i * g + j2]
                                              + table[i2 * g + j] - table[i2 * g + j2]);
                    if (v > best)
                    {
                        best = v;
                        arg = {i, i2, j, j2};
                    }
                }

    std::vector<double> x;
    for (auto idx : arg)
    {
        double const angle = step * static_cast<double>(idx);
        x.push_back(angle);
        if (cfg.mode == ChshMode::full)
            x.push_back(0.0);  // azimuth 0 keeps the planar axis
    }
    best = detail::chsh_objective(corr, cfg.mode, x);
    best = detail::refine(corr, cfg.mode, x, best, step, cfg.iterations);

    Rng rng(cfg.seed);
    for (int r = 0; r < cfg.restarts; ++r)
    {
        std::vector<double> y(x.size());
        for (auto& v : y)
            v = rng.uniform(0.0, two_pi);
        double v = detail::chsh_objective(corr, cfg.mode, y);
        v = detail::refine(corr, cfg.mode, y, v, step, cfg.iterations);
        if (v > best)
        {
            best = v;
            x = y;
        }
    }

    auto const d = detail::chsh_directions(cfg.mode, x);
    return {best, d[0], d[1], d[2], d[3]};
}

}  // namespace diracepr
