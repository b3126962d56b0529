#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "error.hpp"
#include "matrix.hpp"

namespace diracepr
{

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

//---------------------------------------------------------------------------//
// EUCLIDEAN 3-VECTORS
//---------------------------------------------------------------------------//

constexpr double dot(Vec3 const& a, Vec3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(Vec3 const& a, Vec3 const& b)
{
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double norm(Vec3 const& a)
{
    return std::sqrt(dot(a, a));
}

constexpr Vec3 operator+(Vec3 const& a, Vec3 const& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
constexpr Vec3 operator-(Vec3 const& a, Vec3 const& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
constexpr Vec3 operator-(Vec3 const& a)
{
    return {-a[0], -a[1], -a[2]};
}
constexpr Vec3 operator*(double s, Vec3 const& a)
{
    return {s * a[0], s * a[1], s * a[2]};
}

//! Bilinear (not sesquilinear) product of a real and a complex vector.
constexpr cplx dot(Vec3 const& a, CVec3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline CVec3 conj(CVec3 const& v)
{
    return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])};
}

//! |v|^2 = sum |v_i|^2
inline double norm2(CVec3 const& v)
{
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

inline CVec3 cross(Vec3 const& a, CVec3 const& b)
{
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline CVec3 to_complex(Vec3 const& v)
{
    return {v[0], v[1], v[2]};
}

//---------------------------------------------------------------------------//
// FOUR-VECTORS
//---------------------------------------------------------------------------//
/*!
 * Contravariant real four-vector (k^0, k^1, k^2, k^3).
 *
 * The metric is diag(1,-1,-1,-1) throughout; natural units (hbar = c = 1).
 */
struct FourVector
{
    std::array<double, 4> c{0, 0, 0, 0};

    constexpr double operator[](std::size_t mu) const { return c[mu]; }
    constexpr double& operator[](std::size_t mu) { return c[mu]; }

    constexpr double time() const { return c[0]; }
    constexpr Vec3 spatial() const { return {c[1], c[2], c[3]}; }

    static constexpr FourVector from(double t, Vec3 const& x)
    {
        return FourVector{{t, x[0], x[1], x[2]}};
    }
};

constexpr FourVector operator+(FourVector const& a, FourVector const& b)
{
    return FourVector{{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
}
constexpr FourVector operator-(FourVector const& a, FourVector const& b)
{
    return FourVector{{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}
constexpr FourVector operator*(double s, FourVector const& a)
{
    return FourVector{{s * a[0], s * a[1], s * a[2], s * a[3]}};
}

//! Metric diagonal g_{mu mu}.
constexpr double metric(std::size_t mu)
{
    return mu == 0 ? 1.0 : -1.0;
}

constexpr double minkowski_dot(FourVector const& k, FourVector const& p)
{
    return k[0] * p[0] - k[1] * p[1] - k[2] * p[2] - k[3] * p[3];
}

//! Largest component modulus, used for relative tolerances.
inline double max_component(FourVector const& k)
{
    double m = 0;
    for (double x : k.c)
        m = std::max(m, std::abs(x));
    return m;
}

inline double euclidean_norm(FourVector const& k)
{
    return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + k[3] * k[3]);
}

//! k^pi = (k^0, -k_vec)
constexpr FourVector parity(FourVector const& k)
{
    return FourVector{{k[0], -k[1], -k[2], -k[3]}};
}

//! On-shell four-momentum with the given spatial part; k^0 = sqrt(m^2+|k|^2).
inline FourVector on_shell(Vec3 const& k, double mass)
{
    require(mass > 0 && std::isfinite(mass), Errc::invalid_argument,
            "mass must be positive and finite");
    return FourVector::from(std::sqrt(mass * mass + dot(k, k)), k);
}

//! On-shell test with tolerance 1e-9 * max(1, k^0).
inline bool is_on_shell(FourVector const& k, double mass, double rel_tol = 1e-9)
{
    Vec3 const kv = k.spatial();
    double const e = std::sqrt(mass * mass + dot(kv, kv));
    return k[0] > 0 && std::abs(k[0] - e) <= rel_tol * std::max(1.0, k[0]);
}

inline void require_on_shell(FourVector const& k, double mass)
{
    require(mass > 0 && std::isfinite(mass), Errc::invalid_argument,
            "mass must be positive and finite");
    require(is_on_shell(k, mass), Errc::off_shell,
            "four-momentum is not on the mass shell");
}

}  // namespace diracepr
