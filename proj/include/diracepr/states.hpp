#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "amplitudes.hpp"
#include "clifford.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "vectors.hpp"

namespace diracepr
{
//---------------------------------------------------------------------------//
// POLARIZATION
//---------------------------------------------------------------------------//
//! Complex contravariant polarization four-vector phi^mu.
class Polarization
{
  public:
    explicit Polarization(std::array<cplx, 4> const& phi) : phi_(phi)
    {
        require(norm() > 0, Errc::invalid_argument, "polarization must be nonzero");
    }

    //! Purely spatial polarization (0, phi_vec).
    static Polarization spatial(CVec3 const& phi)
    {
        return Polarization({0.0, phi[0], phi[1], phi[2]});
    }

    cplx operator[](std::size_t mu) const { return phi_[mu]; }
    std::array<cplx, 4> const& components() const { return phi_; }
    CVec3 spatial_part() const { return {phi_[1], phi_[2], phi_[3]}; }

    //! Euclidean norm sqrt(sum |phi^mu|^2).
    double norm() const
    {
        double s = 0;
        for (auto const& x : phi_)
            s += std::norm(x);
        return std::sqrt(s);
    }

    //! q_mu phi^mu
    cplx contract(FourVector const& q) const
    {
        cplx s{};
        for (std::size_t mu = 0; mu < 4; ++mu)
            s += metric(mu) * q[mu] * phi_[mu];
        return s;
    }

  private:
    std::array<cplx, 4> phi_;
};

inline constexpr double transversality_tolerance = 1e-9;

inline bool is_transverse(Polarization const& phi, FourVector const& q)
{
    return std::abs(phi.contract(q))
           <= transversality_tolerance * euclidean_norm(q) * phi.norm();
}

/*!
 * phi' = phi - (q.phi / q.q) q, so that q.phi' = 0.
 *
 * A fully longitudinal input projects to zero; that case is reported as
 * ZeroState since a zero polarization is not a valid value.
 */
inline Polarization project_transverse(Polarization const& phi, FourVector const& q)
{
    double const qq = minkowski_dot(q, q);
    double const scale = euclidean_norm(q);
    require(scale > 0 && std::abs(qq) > 1e-12 * scale * scale, Errc::invalid_argument,
            "cannot project against a lightlike or zero four-vector");
    cplx const f = phi.contract(q) / qq;
    std::array<cplx, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        out[mu] = phi[mu] - f * q[mu];
    double n = 0;
    for (auto const& x : out)
        n = std::max(n, std::abs(x));
    require(n > 1e-12 * phi.norm(), Errc::zero_state,
            "polarization is purely longitudinal");
    return Polarization(out);
}

//---------------------------------------------------------------------------//
// STATE KERNELS
//---------------------------------------------------------------------------//
/*!
 * Spin coefficient matrix M(k, p) of a sharp-momentum pair state.
 *
 * Left index: antiparticle (momentum k). Right index: particle (momentum p).
 */
struct StateKernel
{
    CMat2 matrix;
    FourVector k;
    FourVector p;
    std::variant<GammaLabel, Polarization> label;

    double norm2() const { return trace(matrix * adjoint(matrix)).real(); }
};

//! v^T(k) C Gamma v(p) for an arbitrary 4x4 Gamma.
inline CMat2 kernel_matrix(Amplitude const& vk, Amplitude const& vp, CMat4 const& g)
{
    return transpose(vk.matrix()) * charge_conjugation() * g * vp.matrix();
}

inline StateKernel general_kernel(FourVector const& k, FourVector const& p,
                                  GammaLabel const& label, double mass)
{
    Amplitude const vk = amplitude_v(k, mass);
    Amplitude const vp = amplitude_v(p, mass);
    return StateKernel{kernel_matrix(vk, vp, clifford_element(label)), k, p, label};
}

//! M = v^T(k) C gamma^5 v(p)
inline StateKernel pseudoscalar_kernel(FourVector const& k, FourVector const& p, double mass)
{
    return general_kernel(k, p, GammaLabel::gamma5(), mass);
}

//! phi_mu v^T(k) C gamma^mu v(p), without transversality or norm checks.
inline CMat2 contract_vector(FourVector const& k, FourVector const& p,
                             std::array<cplx, 4> const& phi, double mass)
{
    Amplitude const vk = amplitude_v(k, mass);
    Amplitude const vp = amplitude_v(p, mass);
    CMat4 g;
    for (std::size_t mu = 0; mu < 4; ++mu)
        g += (metric(mu) * phi[mu]) * gamma(mu);
    return kernel_matrix(vk, vp, g);
}

inline StateKernel vector_kernel(FourVector const& k, FourVector const& p,
                                 Polarization const& phi, double mass)
{
    FourVector const q = k + p;
    require(is_transverse(phi, q), Errc::non_transverse,
            "polarization is not transverse to the total momentum");
    StateKernel out{contract_vector(k, p, phi.components(), mass), k, p, phi};
    require(out.norm2() >= 1e-12 * std::max(1.0, phi.norm() * phi.norm()),
            Errc::zero_state, "vector state has vanishing norm");
    return out;
}

//---------------------------------------------------------------------------//
// ENSEMBLES
//---------------------------------------------------------------------------//

struct EnsembleEntry
{
    double weight;
    StateKernel kernel;
};

/*!
 * Weighted list of sharp-momentum kernels sharing a total momentum q.
 *
 * Weights stand for |phi(k,p)|^2 with the invariant measure absorbed; the
 * correlation is a ratio, so their overall scale is irrelevant.
 */
class EnsembleState
{
  public:
    static constexpr double momentum_tolerance = 1e-9;

    EnsembleState(std::vector<EnsembleEntry> entries, FourVector const& q)
        : entries_(std::move(entries)), q_(q)
    {
        require(!entries_.empty(), Errc::empty_ensemble, "ensemble has no entries");
        bool any_positive = false;
        for (auto const& e : entries_)
        {
            require(std::isfinite(e.weight) && e.weight >= 0, Errc::invalid_argument,
                    "ensemble weights must be finite and non-negative");
            any_positive = any_positive || e.weight > 0;
            FourVector const d = (e.kernel.k + e.kernel.p) - q_;
            require(max_component(d) <= momentum_tolerance * std::max(1.0, max_component(q_)),
                    Errc::momentum_mismatch, "entry momenta do not sum to the total momentum");
        }
        require(any_positive, Errc::invalid_argument, "all ensemble weights are zero");
    }

    //! Sharp-momentum state with a single unit-weight entry.
    static EnsembleState sharp(StateKernel const& kernel)
    {
        return EnsembleState({{1.0, kernel}}, kernel.k + kernel.p);
    }

    std::vector<EnsembleEntry> const& entries() const { return entries_; }
    FourVector const& total_momentum() const { return q_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::vector<EnsembleEntry> entries_;
    FourVector q_;
};

//! Build an ensemble, taking q from the first entry.
inline EnsembleState ensemble(std::vector<EnsembleEntry> entries)
{
    require(!entries.empty(), Errc::empty_ensemble, "ensemble has no entries");
    FourVector const q = entries.front().kernel.k + entries.front().kernel.p;
    return EnsembleState(std::move(entries), q);
}

//---------------------------------------------------------------------------//
// ENSEMBLE CSV: header `weight,k1,k2,k3,p1,p2,p3`
//---------------------------------------------------------------------------//

struct EnsembleRow
{
    double weight;
    Vec3 k;
    Vec3 p;
};

namespace detail
{
inline std::string trim(std::string const& s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string const& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep))
        out.push_back(trim(field));
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

inline double parse_double(std::string const& s, std::size_t line_no)
{
    std::size_t used = 0;
    double v = 0;
    try
    {
        v = std::stod(s, &used);
    }
    catch (std::exception const&)
    {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v))
        fail(Errc::parse, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
    return v;
}
}  // namespace detail

inline std::vector<EnsembleRow> read_ensemble_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<EnsembleRow> rows;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string const t = detail::trim(line);
        if (t.empty())
            continue;
        auto const fields = detail::split(t, ',');
        if (!header_seen)
        {
            static std::vector<std::string> const expected{"weight", "k1", "k2", "k3",
                                                           "p1", "p2", "p3"};
            if (fields != expected)
                fail(Errc::parse, "ensemble CSV header must be weight,k1,k2,k3,p1,p2,p3");
            header_seen = true;
            continue;
        }
        if (fields.size() != 7)
            fail(Errc::parse, "line " + std::to_string(line_no) + ": expected 7 fields");
        std::array<double, 7> v;
        for (std::size_t i = 0; i < 7; ++i)
            v[i] = detail::parse_double(fields[i], line_no);
        rows.push_back({v[0], {v[1], v[2], v[3]}, {v[4], v[5], v[6]}});
    }
    if (!header_seen)
        fail(Errc::parse, "ensemble CSV is empty");
    require(!rows.empty(), Errc::empty_ensemble, "ensemble CSV has no data rows");
    return rows;
}

using KernelFactory = std::function<StateKernel(FourVector const&, FourVector const&)>;

//! Put every row on shell, build its kernel, and enforce a common q (from row one).
inline EnsembleState
build_ensemble(std::vector<EnsembleRow> const& rows, double mass, KernelFactory const& make)
{
    std::vector<EnsembleEntry> entries;
    entries.reserve(rows.size());
    for (auto const& r : rows)
    {
        FourVector const k = on_shell(r.k, mass);
        FourVector const p = on_shell(r.p, mass);
        entries.push_back({r.weight, make(k, p)});
    }
    return ensemble(std::move(entries));
}

}  // namespace diracepr
