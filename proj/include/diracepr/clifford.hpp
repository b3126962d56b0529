#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "error.hpp"
#include "matrix.hpp"
#include "vectors.hpp"

namespace diracepr
{
//---------------------------------------------------------------------------//
// PAULI AND DIRAC MATRICES
//
// Chiral representation:
//   gamma^0 = [[0, I], [I, 0]],  gamma^i = [[0, -sigma_i], [sigma_i, 0]],
//   gamma^5 = diag(I, -I),       C = -i gamma^2 gamma^0.
//---------------------------------------------------------------------------//

//! sigma_0 = I, sigma_1, sigma_2, sigma_3 in the standard convention.
inline CMat2 pauli(std::size_t i)
{
    switch (i)
    {
        case 0: return CMat2::identity();
        case 1: return CMat2{0.0, 1.0, 1.0, 0.0};
        case 2: return CMat2{0.0, -I_unit, I_unit, 0.0};
        case 3: return CMat2{1.0, 0.0, 0.0, -1.0};
    }
    fail(Errc::invalid_argument, "Pauli index out of range");
}

//! v . sigma for a real 3-vector.
inline CMat2 sigma_dot(Vec3 const& v)
{
    return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3);
}

//! v . sigma^T for a real 3-vector.
inline CMat2 sigma_t_dot(Vec3 const& v)
{
    return transpose(sigma_dot(v));
}

inline CMat4 gamma(std::size_t mu)
{
    require(mu < 4, Errc::invalid_argument, "gamma index out of range");
    if (mu == 0)
        return blocks(CMat2{}, CMat2::identity(), CMat2::identity(), CMat2{});
    CMat2 const s = pauli(mu);
    return blocks(CMat2{}, -s, s, CMat2{});
}

inline CMat4 gamma5()
{
    return blockdiag(CMat2::identity(), -CMat2::identity());
}

//! C = -i gamma^2 gamma^0 = i blockdiag(sigma_2, -sigma_2)
inline CMat4 charge_conjugation()
{
    return -I_unit * (gamma(2) * gamma(0));
}

//! Lowered-index slash: k_mu gamma^mu = k^0 gamma^0 - k_vec . gamma_vec
inline CMat4 feynman_slash(FourVector const& k)
{
    CMat4 out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        out += (metric(mu) * k[mu]) * gamma(mu);
    return out;
}

//---------------------------------------------------------------------------//
// CLIFFORD BASIS LABELS
//---------------------------------------------------------------------------//
/*!
 * One element of the 16-element Clifford basis:
 * I, gamma^5, gamma^mu, gamma^mu gamma^5, [gamma^mu, gamma^nu].
 */
class GammaLabel
{
  public:
    enum class Kind
    {
        identity,
        gamma5,
        gamma_mu,
        gamma_mu_gamma5,
        commutator,
    };

    static GammaLabel identity() { return GammaLabel(Kind::identity, 0, 0); }
    static GammaLabel gamma5() { return GammaLabel(Kind::gamma5, 0, 0); }
    static GammaLabel gamma_mu(std::size_t mu)
    {
        return GammaLabel(Kind::gamma_mu, mu, 0);
    }
    static GammaLabel gamma_mu_gamma5(std::size_t mu)
    {
        return GammaLabel(Kind::gamma_mu_gamma5, mu, 0);
    }
    static GammaLabel commutator(std::size_t mu, std::size_t nu)
    {
        require(mu != nu, Errc::invalid_argument,
                "commutator label requires distinct indices");
        return GammaLabel(Kind::commutator, mu, nu);
    }

    /*!
     * Parse a textual label: "1", "g5", "g<mu>", "g<mu>g5", "c<mu><nu>".
     */
    static GammaLabel parse(std::string const& s)
    {
        auto index = [&](char ch) -> std::size_t {
            if (ch < '0' || ch > '3')
                fail(Errc::parse, "bad gamma index in label '" + s + "'");
            return static_cast<std::size_t>(ch - '0');
        };
        if (s == "1" || s == "I")
            return identity();
        if (s == "g5")
            return gamma5();
        if (s.size() == 2 && s[0] == 'g')
            return gamma_mu(index(s[1]));
        if (s.size() == 4 && s[0] == 'g' && s.substr(2) == "g5")
            return gamma_mu_gamma5(index(s[1]));
        if (s.size() == 3 && s[0] == 'c')
        {
            auto mu = index(s[1]);
            auto nu = index(s[2]);
            if (mu == nu)
                fail(Errc::parse, "commutator label needs mu != nu");
            return commutator(mu, nu);
        }
        fail(Errc::parse, "unrecognized gamma label '" + s + "'");
    }

    Kind kind() const { return kind_; }
    std::size_t mu() const { return mu_; }
    std::size_t nu() const { return nu_; }

    std::string str() const
    {
        switch (kind_)
        {
            case Kind::identity: return "1";
            case Kind::gamma5: return "g5";
            case Kind::gamma_mu: return "g" + std::to_string(mu_);
            case Kind::gamma_mu_gamma5:
                return "g" + std::to_string(mu_) + "g5";
            case Kind::commutator:
                return "c" + std::to_string(mu_) + std::to_string(nu_);
        }
        return "?";
    }

    friend bool operator==(GammaLabel const&, GammaLabel const&) = default;

  private:
    GammaLabel(Kind k, std::size_t mu, std::size_t nu) : kind_(k), mu_(mu), nu_(nu)
    {
        require(mu < 4 && nu < 4, Errc::invalid_argument,
                "gamma label index out of range");
    }

    Kind kind_;
    std::size_t mu_;
    std::size_t nu_;
};

inline CMat4 clifford_element(GammaLabel const& label)
{
    using K = GammaLabel::Kind;
    switch (label.kind())
    {
        case K::identity: return CMat4::identity();
        case K::gamma5: return gamma5();
        case K::gamma_mu: return gamma(label.mu());
        case K::gamma_mu_gamma5: return gamma(label.mu()) * gamma5();
        case K::commutator:
            return commutator(gamma(label.mu()), gamma(label.nu()));
    }
    fail(Errc::invalid_argument, "invalid gamma label");
}

}  // namespace diracepr
