#pragma once

#include <array>

#include "amplitudes.hpp"
#include "clifford.hpp"
#include "matrix.hpp"
#include "vectors.hpp"

namespace diracepr
{

//! Pauli-Lubanski matrices on the covariant one-particle basis.
struct PauliLubanskiMatrices
{
    CMat4 w0;
    std::array<CMat4, 3> w;
};

//! Spin component matrices S_1, S_2, S_3 on the covariant basis.
struct SpinMatrices
{
    std::array<CMat4, 3> s;

    //! a . S
    CMat4 along(Vec3 const& a) const { return a[0] * s[0] + a[1] * s[1] + a[2] * s[2]; }
};

/*!
 * W^0 = -1/2 blockdiag(k.sigma, k.sigma)
 * W_i = -1/2 [k^0 blockdiag(sigma_i, sigma_i) - i blockdiag((k x sigma)_i, -(k x sigma)_i)]
 */
inline PauliLubanskiMatrices pauli_lubanski(FourVector const& k, double mass)
{
    require_on_shell(k, mass);
    Vec3 const kv = k.spatial();
    CMat2 const ks = sigma_dot(kv);

    // (k x sigma)_i as 2x2 matrices
    std::array<CMat2, 3> const k_cross_sigma{
        kv[1] * pauli(3) - kv[2] * pauli(2),
        kv[2] * pauli(1) - kv[0] * pauli(3),
        kv[0] * pauli(2) - kv[1] * pauli(1),
    };

    PauliLubanskiMatrices out;
    out.w0 = -0.5 * blockdiag(ks, ks);
    for (std::size_t i = 0; i < 3; ++i)
    {
        CMat2 const s = pauli(i + 1);
        CMat2 const c = k_cross_sigma[i];
        out.w[i] = -0.5 * (k[0] * blockdiag(s, s) - I_unit * blockdiag(c, -c));
    }
    return out;
}

//! S_i = (W_i - k_i W^0 / (k^0 + m)) / m
inline SpinMatrices spin_matrices(FourVector const& k, double mass)
{
    PauliLubanskiMatrices const pl = pauli_lubanski(k, mass);
    SpinMatrices out;
    for (std::size_t i = 0; i < 3; ++i)
        out.s[i] = (pl.w[i] - (k[i + 1] / (k[0] + mass)) * pl.w0) / mass;
    return out;
}

//! S_i = v(k) (sigma_i^T / 2) v-bar(k)
inline SpinMatrices spin_covariant(FourVector const& k, double mass)
{
    Amplitude const v = amplitude_v(k, mass);
    CMat24 const vb = vbar(v);
    SpinMatrices out;
    for (std::size_t i = 0; i < 3; ++i)
        out.s[i] = v.matrix() * (0.5 * transpose(pauli(i + 1))) * vb;
    return out;
}

//! 2x2 restriction v-bar X v of a covariant-basis operator to the spin labels.
inline CMat2 reduce_to_spin_labels(CMat4 const& op, Amplitude const& v)
{
    return vbar(v) * op * v.matrix();
}

/*!
 * Effective spin-1/2 generators in the standard basis.
 *
 * The reduction v-bar S_i v yields the row-action matrix sigma_i^T / 2; its
 * transpose is the ordinary (column-action) operator matrix.
 */
inline std::array<CMat2, 3> effective_generators(SpinMatrices const& s, Amplitude const& v)
{
    std::array<CMat2, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = transpose(reduce_to_spin_labels(s.s[i], v));
    return out;
}

//! Eigenvalues of a.S on the physical (spin-label) subspace.
inline std::array<cplx, 2>
physical_eigenvalues(SpinMatrices const& s, Amplitude const& v, Vec3 const& a)
{
    return eigenvalues(reduce_to_spin_labels(s.along(a), v));
}

}  // namespace diracepr
