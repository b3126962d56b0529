#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "clifford.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "vectors.hpp"

namespace diracepr
{
//---------------------------------------------------------------------------//
// TYPES
//---------------------------------------------------------------------------//
/*!
 * Element of SL(2,C), the double cover of the proper orthochronous Lorentz
 * group.
 */
class SL2Element
{
  public:
    static constexpr double det_tolerance = 1e-12;

    explicit SL2Element(CMat2 const& a) : a_(a)
    {
        require(is_finite(a), Errc::invalid_argument,
                "SL(2,C) element has non-finite entries");
        require(std::abs(det(a) - 1.0) <= det_tolerance * std::max(1.0, max_abs(a) * max_abs(a)),
                Errc::invalid_argument, "SL(2,C) element must have unit determinant");
    }

    static SL2Element identity() { return SL2Element(CMat2::identity()); }

    CMat2 const& matrix() const { return a_; }

    friend SL2Element operator*(SL2Element const& x, SL2Element const& y)
    {
        return SL2Element(x.a_ * y.a_);
    }

  private:
    CMat2 a_;
};

//! Real 4x4 Lorentz matrix Lambda^mu_nu acting on contravariant vectors.
struct LorentzMatrix
{
    std::array<std::array<double, 4>, 4> m{};

    static LorentzMatrix identity()
    {
        LorentzMatrix out;
        for (std::size_t i = 0; i < 4; ++i)
            out.m[i][i] = 1;
        return out;
    }

    double operator()(std::size_t mu, std::size_t nu) const { return m[mu][nu]; }

    friend LorentzMatrix operator*(LorentzMatrix const& a, LorentzMatrix const& b)
    {
        LorentzMatrix out;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t j = 0; j < 4; ++j)
                    out.m[i][j] += a.m[i][k] * b.m[k][j];
        return out;
    }

    //! max |(Lambda^T g Lambda - g)_{ij}|
    double metric_defect() const
    {
        double worst = 0;
        for (std::size_t i = 0; i < 4; ++i)
        {
            for (std::size_t j = 0; j < 4; ++j)
            {
                double s = 0;
                for (std::size_t mu = 0; mu < 4; ++mu)
                    s += m[mu][i] * metric(mu) * m[mu][j];
                worst = std::max(worst, std::abs(s - (i == j ? metric(i) : 0.0)));
            }
        }
        return worst;
    }
};

inline double max_abs_diff(LorentzMatrix const& a, LorentzMatrix const& b)
{
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
    return worst;
}

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

//! k^mu sigma_mu = k^0 I + k_vec . sigma (plain contraction, no metric).
inline CMat2 sigma_map(FourVector const& k)
{
    return k[0] * CMat2::identity() + sigma_dot(k.spatial());
}

//! Inverse of sigma_map for a hermitian matrix: k^mu = Tr[sigma_mu X] / 2.
inline FourVector from_sigma_map(CMat2 const& x)
{
    FourVector k;
    for (std::size_t mu = 0; mu < 4; ++mu)
        k[mu] = 0.5 * trace(pauli(mu) * x).real();
    return k;
}

inline FourVector apply_lorentz(LorentzMatrix const& lam, FourVector const& k)
{
    FourVector out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu)
            out[mu] += lam.m[mu][nu] * k[nu];
    return out;
}

/*!
 * Rotation-free boost taking (m, 0) to k:
 * A_k = (m I + k^mu sigma_mu) / sqrt(2m(m + k^0)).
 *
 * This is the positive hermitian square root of k^mu sigma_mu / m.
 */
inline SL2Element standard_boost_sl2(FourVector const& k, double mass)
{
    require_on_shell(k, mass);
    double const scale = 1.0 / std::sqrt(2 * mass * (mass + k[0]));
    CMat2 a = scale * (mass * CMat2::identity() + sigma_map(k));
    return SL2Element(a);
}

//! Lambda(A)^mu_nu = Tr[sigma_mu A sigma_nu A^dagger] / 2
inline LorentzMatrix sl2_to_lorentz(SL2Element const& a)
{
    CMat2 const& am = a.matrix();
    CMat2 const ad = adjoint(am);
    LorentzMatrix out;
    for (std::size_t nu = 0; nu < 4; ++nu)
    {
        CMat2 const image = am * pauli(nu) * ad;
        for (std::size_t mu = 0; mu < 4; ++mu)
            out.m[mu][nu] = 0.5 * trace(pauli(mu) * image).real();
    }
    return out;
}

//! Chiral bispinor representation D(A) = blockdiag(A, (A^dagger)^{-1}).
inline CMat4 bispinor_rep(SL2Element const& a)
{
    return blockdiag(a.matrix(), inverse(adjoint(a.matrix())));
}

//! Image of an on-shell momentum, re-projected onto the mass shell.
inline FourVector transform_momentum(SL2Element const& a, FourVector const& k, double mass)
{
    FourVector const image = from_sigma_map(a.matrix() * sigma_map(k) * adjoint(a.matrix()));
    return on_shell(image.spatial(), mass);
}

/*!
 * Spin-1/2 image of the Wigner rotation R(Lambda, k) = L_{Lambda k}^{-1}
 * Lambda L_k, i.e. A_{Lambda k}^{-1} A A_k. The result lies in SU(2).
 */
inline CMat2 wigner_rotation(SL2Element const& a, FourVector const& k, double mass)
{
    require_on_shell(k, mass);
    SL2Element const ak = standard_boost_sl2(k, mass);
    SL2Element const alk = standard_boost_sl2(transform_momentum(a, k, mass), mass);
    return inverse(alk.matrix()) * a.matrix() * ak.matrix();
}

//---------------------------------------------------------------------------//
// CONSTRUCTION HELPERS
//---------------------------------------------------------------------------//

//! exp(-i angle n.sigma / 2): rotation by `angle` about unit axis n.
inline SL2Element rotation_sl2(Vec3 const& axis, double angle)
{
    double const n = norm(axis);
    require(n > 0, Errc::invalid_argument, "rotation axis must be nonzero");
    Vec3 const u = (1.0 / n) * axis;
    CMat2 a = std::cos(angle / 2) * CMat2::identity()
              - I_unit * std::sin(angle / 2) * sigma_dot(u);
    return SL2Element(a);
}

//! exp(rapidity n.sigma / 2): pure boost along unit direction n.
inline SL2Element boost_sl2(Vec3 const& direction, double rapidity)
{
    double const n = norm(direction);
    require(n > 0, Errc::invalid_argument, "boost direction must be nonzero");
    Vec3 const u = (1.0 / n) * direction;
    CMat2 a = std::cosh(rapidity / 2) * CMat2::identity()
              + std::sinh(rapidity / 2) * sigma_dot(u);
    return SL2Element(a);
}

//! Rotation (uniform axis and angle) times boost (uniform direction, rapidity in [0, max]).
inline SL2Element random_lorentz(Rng& rng, double max_rapidity = 2.0)
{
    SL2Element const rot = rotation_sl2(rng.unit_vector(),
                                        rng.uniform(0.0, 2 * std::numbers::pi));
    SL2Element const boost = boost_sl2(rng.unit_vector(), rng.uniform(0.0, max_rapidity));
    return rot * boost;
}

//! Random on-shell momentum with |k| uniform in the ball of radius `max_p`.
inline FourVector random_on_shell(Rng& rng, double mass, double max_p = 5.0)
{
    return on_shell(rng.in_ball(max_p), mass);
}

}  // namespace diracepr
