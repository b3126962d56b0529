#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "clifford.hpp"
#include "error.hpp"
#include "states.hpp"
#include "vectors.hpp"

namespace diracepr
{
//---------------------------------------------------------------------------//
// TYPES
//---------------------------------------------------------------------------//
//! Unit 3-vector giving a spin measurement axis.
class Direction
{
  public:
    static constexpr double tolerance = 1e-12;

    /*!
     * Accepts v when ||v| - 1| <= max_deviation and stores v/|v|; larger
     * deviations are rejected.
     */
    explicit Direction(Vec3 const& v, double max_deviation = tolerance)
    {
        double const n = norm(v);
        require(std::isfinite(n) && n > 0, Errc::invalid_argument,
                "direction must be a finite nonzero vector");
        require(std::abs(n - 1) <= max_deviation, Errc::invalid_argument,
                "direction is not a unit vector");
        v_ = (1.0 / n) * v;
    }

    //! (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta))
    static Direction spherical(double theta, double phi)
    {
        return Direction({std::sin(theta) * std::cos(phi),
                          std::sin(theta) * std::sin(phi),
                          std::cos(theta)});
    }

    static Direction x() { return Direction({1, 0, 0}); }
    static Direction y() { return Direction({0, 1, 0}); }
    static Direction z() { return Direction({0, 0, 1}); }

    Vec3 const& vec() const { return v_; }
    double operator[](std::size_t i) const { return v_[i]; }

  private:
    Vec3 v_{0, 0, 1};
};

struct CorrelationResult
{
    double value;
    double numerator;
    double denominator;
};

using Correlator = std::function<double(Direction const&, Direction const&)>;

//---------------------------------------------------------------------------//
// TRACE ORACLE
//---------------------------------------------------------------------------//

//! Tr[(b.sigma) M (a.sigma^T) M^dagger]; b acts on the antiparticle index.
inline double correlation_numerator(CMat2 const& m, Direction const& a, Direction const& b)
{
    return trace(sigma_dot(b.vec()) * m * sigma_t_dot(a.vec()) * adjoint(m)).real();
}

using EntryMask = std::vector<bool>;

//! Which ensemble member a region predicate looks at.
enum class Species
{
    particle,      //!< momentum p, registered by Alice
    antiparticle,  //!< momentum k, registered by Bob
};

//! Per-entry mask from a momentum-space region (characteristic function).
inline EntryMask region_mask(EnsembleState const& state, Species who,
                             std::function<bool(FourVector const&)> const& contains)
{
    EntryMask mask;
    mask.reserve(state.size());
    for (auto const& e : state.entries())
        mask.push_back(contains(who == Species::particle ? e.kernel.p : e.kernel.k));
    return mask;
}

/*!
 * First-principles correlation of an ensemble:
 *
 *   C = sum_i w_i Tr[(b.sigma) M_i (a.sigma^T) M_i^dagger]
 *       / sum_i w_i Tr[M_i M_i^dagger]
 *
 * restricted to entries where both masks are set. Alice's axis \c a is
 * contracted with the particle index, Bob's axis \c b with the antiparticle.
 */
inline CorrelationResult correlate_oracle(EnsembleState const& state,
                                          Direction const& a,
                                          Direction const& b,
                                          EntryMask const& mask_a,
                                          EntryMask const& mask_b)
{
    require(mask_a.size() == state.size() && mask_b.size() == state.size(),
            Errc::invalid_argument, "mask length does not match ensemble size");
    double num = 0;
    double den = 0;
    bool any = false;
    for (std::size_t i = 0; i < state.size(); ++i)
    {
        if (!mask_a[i] || !mask_b[i])
            continue;
        auto const& e = state.entries()[i];
        if (e.weight == 0)
            continue;
        any = true;
        num += e.weight * correlation_numerator(e.kernel.matrix, a, b);
        den += e.weight * e.kernel.norm2();
    }
    require(any, Errc::empty_ensemble, "no ensemble entry selected by the masks");
    require(den > 0, Errc::zero_norm, "selected sub-ensemble has zero norm");
    return {num / den, num, den};
}

inline CorrelationResult
correlate_oracle(EnsembleState const& state, Direction const& a, Direction const& b)
{
    EntryMask const all(state.size(), true);
    return correlate_oracle(state, a, b, all, all);
}

inline CorrelationResult
correlate_oracle(StateKernel const& kernel, Direction const& a, Direction const& b)
{
    return correlate_oracle(EnsembleState::sharp(kernel), a, b);
}

//---------------------------------------------------------------------------//
// PSEUDOSCALAR CLOSED FORMS
//---------------------------------------------------------------------------//
/*!
 * Sharp-momentum pseudoscalar correlation (antiparticle k, particle p):
 *
 *   C = -a.b + (k x p) . [ b x a + ((b.k)(a x p) - (a.p)(b x k))
 *                                  / ((m+k0)(m+p0)) ] / (m^2 + kp)
 *
 * Equivalent to -a^T O b with O the relative Wigner rotation, so |C| <= 1.
 */
inline double correlation_pseudoscalar_sharp(FourVector const& k, FourVector const& p,
                                             double mass, Direction const& da,
                                             Direction const& db)
{
    require_on_shell(k, mass);
    require_on_shell(p, mass);
    Vec3 const& a = da.vec();
    Vec3 const& b = db.vec();
    Vec3 const kv = k.spatial();
    Vec3 const pv = p.spatial();
    double const boost_den = (mass + k[0]) * (mass + p[0]);
    Vec3 const bracket = cross(b, a)
                         + (1.0 / boost_den)
                               * (dot(b, kv) * cross(a, pv) - dot(a, pv) * cross(b, kv));
    return -dot(a, b) + dot(cross(kv, pv), bracket) / (mass * mass + minkowski_dot(k, p));
}

//! In the centre-of-mass frame the pseudoscalar state gives the singlet result.
inline double correlation_pseudoscalar_cmf(Direction const& a, Direction const& b)
{
    return -dot(a.vec(), b.vec());
}

namespace detail
{
inline void require_beta(double beta)
{
    require(std::isfinite(beta) && beta >= 0 && beta < 1, Errc::invalid_argument,
            "beta must lie in [0, 1)");
}

//! 1 + beta^2 ((n.x)^2 - 1), evaluated without cancellation near beta = 1.
inline double czachor_radicand(double beta, double nx)
{
    return (1 - beta) * (1 + beta) + beta * beta * nx * nx;
}
}  // namespace detail

//! Czachor's centre-of-mass correlation function.
inline double correlation_czachor_cmf(Direction const& dn, double beta,
                                      Direction const& da, Direction const& db)
{
    detail::require_beta(beta);
    Vec3 const& n = dn.vec();
    Vec3 const& a = da.vec();
    Vec3 const& b = db.vec();
    double const na = dot(n, a);
    double const nb = dot(n, b);
    Vec3 const a_perp = a - na * n;
    Vec3 const b_perp = b - nb * n;
    double const den = std::sqrt(detail::czachor_radicand(beta, na))
                       * std::sqrt(detail::czachor_radicand(beta, nb));
    require(den > 0, Errc::singular_configuration, "Czachor denominator vanishes");
    return -(dot(a, b) - beta * beta * dot(a_perp, b_perp)) / den;
}

//! beta -> 1 limit of Czachor's function: -sign((n.a)(n.b)).
inline double correlation_czachor_ultra(Direction const& n, Direction const& a,
                                        Direction const& b)
{
    double const na = dot(n.vec(), a.vec());
    double const nb = dot(n.vec(), b.vec());
    require(std::abs(na) > 1e-12 && std::abs(nb) > 1e-12, Errc::undefined_limit,
            "ultrarelativistic Czachor limit is undefined for a or b perpendicular to n");
    return na * nb > 0 ? -1.0 : 1.0;
}

//! Czachor minus the pseudoscalar CMF result.
inline double delta_c_pseudoscalar(Direction const& n, double beta, Direction const& a,
                                   Direction const& b)
{
    return correlation_czachor_cmf(n, beta, a, b) - correlation_pseudoscalar_cmf(a, b);
}

//---------------------------------------------------------------------------//
// VECTOR AND TRIPLET CLOSED FORMS
//---------------------------------------------------------------------------//

namespace detail
{
//! x y* + x* y
inline double sym_re(cplx x, cplx y)
{
    return 2 * (x * std::conj(y)).real();
}

inline void require_polarization(CVec3 const& phi)
{
    double const n2 = norm2(phi);
    require(std::isfinite(n2) && n2 > 0, Errc::invalid_argument,
            "polarization must be nonzero");
}
}  // namespace detail

//! Nonrelativistic triplet: a.b - [(a.phi)(b.phi*) + (b.phi)(a.phi*)] / |phi|^2
inline double correlation_triplet_nonrel(CVec3 const& phi, Direction const& a,
                                         Direction const& b)
{
    detail::require_polarization(phi);
    cplx const ap = dot(a.vec(), phi);
    cplx const bp = dot(b.vec(), phi);
    return dot(a.vec(), b.vec()) - detail::sym_re(ap, bp) / norm2(phi);
}

/*!
 * Vector-state correlation in the centre-of-mass frame with antiparticle
 * momentum k and particle momentum k^pi, for spatial polarization phi.
 *
 * The common denominator k0^2|phi|^2 - |k.phi|^2 is evaluated as
 * m^2|phi|^2 + |k x phi|^2.
 */
inline double correlation_vector_cmf(FourVector const& k, double mass, CVec3 const& phi,
                                     Direction const& da, Direction const& db)
{
    require_on_shell(k, mass);
    detail::require_polarization(phi);
    Vec3 const& a = da.vec();
    Vec3 const& b = db.vec();
    Vec3 const kv = k.spatial();
    double const k0 = k[0];
    double const den = mass * mass * norm2(phi) + norm2(cross(kv, phi));
    require(den > 0, Errc::zero_state, "vector state has vanishing norm");

    cplx const ap = dot(a, phi);
    cplx const bp = dot(b, phi);
    cplx const kp = dot(kv, phi);
    double const ak = dot(a, kv);
    double const bk = dot(b, kv);

    double c = dot(a, b);
    c -= k0 * k0 * detail::sym_re(ap, bp) / den;
    c -= 2 * ak * bk * std::norm(kp) / ((mass + k0) * (mass + k0) * den);
    c += k0 * (ak * detail::sym_re(bp, kp) + bk * detail::sym_re(ap, kp)) / ((mass + k0) * den);
    return c;
}

//! beta -> 1 limit of the vector CMF correlation; n is the antiparticle direction.
inline double correlation_vector_ultra(Direction const& dn, CVec3 const& phi,
                                       Direction const& da, Direction const& db)
{
    detail::require_polarization(phi);
    Vec3 const& n = dn.vec();
    Vec3 const& a = da.vec();
    Vec3 const& b = db.vec();
    double const den = norm2(cross(n, phi));
    require(den > 1e-12 * norm2(phi), Errc::singular_configuration,
            "polarization is parallel to the momentum direction");

    cplx const ap = dot(a, phi);
    cplx const bp = dot(b, phi);
    cplx const np = dot(n, phi);
    double const an = dot(a, n);
    double const bn = dot(b, n);
    double const braces = detail::sym_re(ap, bp) + 2 * an * bn * std::norm(np)
                          - an * detail::sym_re(bp, np) - bn * detail::sym_re(ap, np);
    return dot(a, b) - braces / den;
}

namespace detail
{
inline void require_perpendicular(Direction const& d, CVec3 const& phi, char const* what)
{
    require(std::abs(dot(d.vec(), phi)) <= 1e-9 * std::sqrt(norm2(phi)),
            Errc::invalid_argument, what);
}
}  // namespace detail

/*!
 * Ultrarelativistic vector correlation minus the nonrelativistic triplet for
 * a, b perpendicular to phi: -2 (a.n)(b.n) |n.phi|^2 / |n x phi|^2.
 */
inline double delta_c_vector(Direction const& dn, CVec3 const& phi, Direction const& a,
                             Direction const& b)
{
    detail::require_polarization(phi);
    detail::require_perpendicular(a, phi, "a must be perpendicular to phi");
    detail::require_perpendicular(b, phi, "b must be perpendicular to phi");
    Vec3 const& n = dn.vec();
    double const den = norm2(cross(n, phi));
    require(den > 1e-12 * norm2(phi), Errc::singular_configuration,
            "polarization is parallel to the momentum direction");
    return -2 * dot(a.vec(), n) * dot(b.vec(), n) * std::norm(dot(n, phi)) / den;
}

/*!
 * Limit of delta_c_vector as n approaches the polarization axis along the
 * unit tangent t (t perpendicular to phi): -2 (a.t)(b.t) |phi|^2 / |t x phi|^2.
 *
 * Requires phi = c n0 for a real axis n0, the only case in which n can be
 * parallel to phi.
 */
inline double delta_c_vector_limit(Direction const& tangent, CVec3 const& phi,
                                   Direction const& a, Direction const& b)
{
    detail::require_polarization(phi);
    detail::require_perpendicular(a, phi, "a must be perpendicular to phi");
    detail::require_perpendicular(b, phi, "b must be perpendicular to phi");
    detail::require_perpendicular(tangent, phi, "tangent must be perpendicular to phi");
    Vec3 const re{phi[0].real(), phi[1].real(), phi[2].real()};
    Vec3 const im{phi[0].imag(), phi[1].imag(), phi[2].imag()};
    require(norm(cross(re, im)) <= 1e-12 * norm2(phi), Errc::invalid_argument,
            "polarization has no real axis");
    Vec3 const& t = tangent.vec();
    return -2 * dot(a.vec(), t) * dot(b.vec(), t) * norm2(phi) / norm2(cross(t, phi));
}

}  // namespace diracepr
