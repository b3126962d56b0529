#pragma once

#include <cmath>

#include "clifford.hpp"
#include "error.hpp"
#include "lorentz.hpp"
#include "matrix.hpp"
#include "vectors.hpp"

namespace diracepr
{
/*!
 * The 4x2 amplitude matrix v(k) of a Dirac particle of mass m:
 *
 *   v(k) = 1 / (2 sqrt(1 + k^0/m)) [ (I + k.sigma/m) sigma_2 ;
 *                                    (I + k^pi.sigma/m) sigma_2 ]
 *
 * with k.sigma = k^0 I + k_vec . sigma_vec. Columns carry the spin label,
 * rows the bispinor index. Built only through \c amplitude_v, so the
 * momentum is always on shell.
 */
class Amplitude
{
  public:
    CMat42 const& matrix() const { return v_; }
    FourVector const& momentum() const { return k_; }
    double mass() const { return m_; }

  private:
    Amplitude(CMat42 const& v, FourVector const& k, double m) : v_(v), k_(k), m_(m) {}

    friend Amplitude amplitude_v(FourVector const& k, double mass);

    CMat42 v_;
    FourVector k_;
    double m_;
};

inline Amplitude amplitude_v(FourVector const& k, double mass)
{
    require_on_shell(k, mass);
    CMat2 const id = CMat2::identity();
    CMat2 const s2 = pauli(2);
    CMat2 const top = (id + sigma_map(k) / mass) * s2;
    CMat2 const bottom = (id + sigma_map(parity(k)) / mass) * s2;
    double const norm = 1.0 / (2 * std::sqrt(1 + k[0] / mass));
    return Amplitude(norm * vstack(top, bottom), k, mass);
}

//! Convenience: amplitude for spatial momentum k with k^0 put on shell.
inline Amplitude amplitude_v(Vec3 const& k, double mass)
{
    return amplitude_v(on_shell(k, mass), mass);
}

//! v-bar = v^dagger gamma^0
inline CMat24 vbar(Amplitude const& a)
{
    return adjoint(a.matrix()) * gamma(0);
}

//! Particle amplitude u(k) = i v(k) sigma_2.
inline CMat42 amplitude_u(Amplitude const& a)
{
    return I_unit * (a.matrix() * pauli(2));
}

//! Antiparticle amplitude gamma^5 v(k).
inline CMat42 amplitude_w(Amplitude const& a)
{
    return gamma5() * a.matrix();
}

}  // namespace diracepr
