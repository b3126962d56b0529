#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "correlations.hpp"
#include "csv.hpp"
#include "error.hpp"

namespace diracepr
{

//! count evenly spaced points from start to stop inclusive.
inline std::vector<double> linspace(double start, double stop, int count)
{
    require(count >= 2, Errc::invalid_argument, "grid count must be at least 2");
    require(std::isfinite(start) && std::isfinite(stop), Errc::invalid_argument,
            "grid range must be finite");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
    out.back() = stop;
    return out;
}

/*!
 * Difference between Czachor's CMF correlation and the pseudoscalar result,
 * with n = z, a = (sin ta, 0, cos ta), b = (cos pb sin tb, sin pb sin tb, cos tb),
 * over ta, tb in [0, pi]. Columns: phi_b, theta_a, theta_b, delta_c.
 */
inline CsvTable fig1_table(double beta, std::vector<double> const& phi_b_values, int grid)
{
    require(std::isfinite(beta) && beta >= 0 && beta < 1, Errc::invalid_argument,
            "beta must lie in [0, 1)");
    require(!phi_b_values.empty(), Errc::invalid_argument, "phi_b list is empty");
    auto const thetas = linspace(0, std::numbers::pi, grid);
    Direction const n = Direction::z();

    CsvTable t{{"phi_b", "theta_a", "theta_b", "delta_c"}, {}};
    t.rows.reserve(phi_b_values.size() * thetas.size() * thetas.size());
    for (double pb : phi_b_values)
    {
        for (double ta : thetas)
        {
            Direction const a({std::sin(ta), 0.0, std::cos(ta)});
            for (double tb : thetas)
            {
                Direction const b = Direction::spherical(tb, pb);
                t.rows.push_back({pb, ta, tb, delta_c_pseudoscalar(n, beta, a, b)});
            }
        }
    }
    return t;
}

//! Vector difference for phi = z with n(theta) = (sin t, 0, cos t) and a, b in the xy plane.
inline double fig2_delta_c(double theta, double phi_a, double phi_b)
{
    CVec3 const phi{0.0, 0.0, 1.0};
    Direction const n({std::sin(theta), 0.0, std::cos(theta)});
    Direction const a({std::cos(phi_a), std::sin(phi_a), 0.0});
    Direction const b({std::cos(phi_b), std::sin(phi_b), 0.0});
    if (norm2(cross(n.vec(), phi)) > 1e-12)
        return delta_c_vector(n, phi, a, b);
    // n parallel to phi: take the limit along dn/dtheta
    Direction const tangent({std::cos(theta), 0.0, -std::sin(theta)});
    return delta_c_vector_limit(tangent, phi, a, b);
}

/*!
 * Vector-state difference for phi = z over phi_a, phi_b in [0, 2 pi].
 * Columns: theta, phi_a, phi_b, delta_c.
 */
inline CsvTable fig2_table(std::vector<double> const& theta_values, int grid)
{
    require(!theta_values.empty(), Errc::invalid_argument, "theta list is empty");
    auto const phis = linspace(0, 2 * std::numbers::pi, grid);
    CsvTable t{{"theta", "phi_a", "phi_b", "delta_c"}, {}};
    t.rows.reserve(theta_values.size() * phis.size() * phis.size());
    for (double th : theta_values)
    {
        require(std::isfinite(th), Errc::invalid_argument, "theta must be finite");
        for (double pa : phis)
            for (double pb : phis)
                t.rows.push_back({th, pa, pb, fig2_delta_c(th, pa, pb)});
    }
    return t;
}

}  // namespace diracepr
