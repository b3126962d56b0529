#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "amplitudes.hpp"
#include "clifford.hpp"
#include "correlations.hpp"
#include "lorentz.hpp"
#include "random.hpp"
#include "spin.hpp"
#include "states.hpp"

namespace diracepr
{
//---------------------------------------------------------------------------//
// REPORT TYPES
//---------------------------------------------------------------------------//

struct CheckResult
{
    std::string name;
    double max_error = 0;
    double tolerance = 0;

    bool passed() const { return std::isfinite(max_error) && max_error <= tolerance; }
};

struct SuiteReport
{
    std::string suite;
    std::vector<CheckResult> checks;

    double max_error() const
    {
        double e = 0;
        for (auto const& c : checks)
            e = std::max(e, c.max_error);
        return e;
    }
    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(),
                           [](CheckResult const& c) { return c.passed(); });
    }
};

struct RunReport
{
    std::vector<SuiteReport> suites;
    int checks_passed = 0;
    int checks_failed = 0;
    double max_error = 0;
    double wall_seconds = 0;

    bool ok() const { return checks_failed == 0; }
};

struct VerifyConfig
{
    std::uint64_t seed = 7;
    int samples = 1000;
    double mass = 1.0;
    double max_momentum = 5.0;
    std::optional<double> tolerance_override;
};

namespace detail
{
//! Accumulates the worst error of one named check.
class Check
{
  public:
    Check(SuiteReport& suite, std::string name, double tol, VerifyConfig const& cfg)
        : suite_(suite), result_{std::move(name), 0.0, cfg.tolerance_override.value_or(tol)}
    {
    }
    ~Check() { suite_.checks.push_back(result_); }

    Check(Check const&) = delete;
    Check& operator=(Check const&) = delete;

    void record(double err)
    {
        if (!std::isfinite(err))
            result_.max_error = std::numeric_limits<double>::infinity();
        else
            result_.max_error = std::max(result_.max_error, err);
    }

  private:
    SuiteReport& suite_;
    CheckResult result_;
};

inline int scaled(int samples, int divisor)
{
    return std::max(1, samples / divisor);
}

inline Direction random_direction(Rng& rng)
{
    return Direction(rng.unit_vector());
}

inline SuiteReport verify_clifford(VerifyConfig const& cfg)
{
    SuiteReport s{"clifford", {}};
    {
        Check c(s, "anticommutator {g^mu,g^nu} = 2 g^{mu nu}", 1e-14, cfg);
        for (std::size_t mu = 0; mu < 4; ++mu)
            for (std::size_t nu = 0; nu < 4; ++nu)
            {
                CMat4 expected = mu == nu ? 2 * metric(mu) * CMat4::identity() : CMat4{};
                c.record(max_abs_diff(anticommutator(gamma(mu), gamma(nu)), expected));
            }
    }
    {
        Check c(s, "C g^muT C^-1 = -g^mu", 1e-14, cfg);
        CMat4 const cc = charge_conjugation();
        CMat4 const cinv = adjoint(cc);
        for (std::size_t mu = 0; mu < 4; ++mu)
            c.record(max_abs_diff(cc * transpose(gamma(mu)) * cinv, -gamma(mu)));
    }
    {
        Check c(s, "C C^dagger = I", 1e-14, cfg);
        CMat4 const cc = charge_conjugation();
        c.record(max_abs_diff(cc * adjoint(cc), CMat4::identity()));
    }
    {
        Check c(s, "g5 anticommutes with g^mu", 1e-14, cfg);
        for (std::size_t mu = 0; mu < 4; ++mu)
            c.record(max_abs(anticommutator(gamma5(), gamma(mu))));
        c.record(max_abs_diff(gamma5() * gamma5(), CMat4::identity()));
    }
    {
        Check c(s, "sigma_2 sigma_i^T sigma_2 = -sigma_i", 1e-14, cfg);
        for (std::size_t i = 1; i < 4; ++i)
            c.record(max_abs_diff(pauli(2) * transpose(pauli(i)) * pauli(2), -pauli(i)));
    }
    return s;
}

inline SuiteReport verify_lorentz(VerifyConfig const& cfg)
{
    SuiteReport s{"lorentz", {}};
    Rng rng(cfg.seed ^ 0x4c6f72656e747aULL);
    double const m = cfg.mass;
    Check unit(s, "Wigner rotation unitary", 1e-10, cfg);
    Check det1(s, "Wigner rotation det = 1", 1e-10, cfg);
    Check hom(s, "Lambda(A1 A2) = Lambda(A1) Lambda(A2)", 1e-10, cfg);
    Check metric_ok(s, "Lambda^T g Lambda = g", 1e-10, cfg);
    Check inv(s, "minkowski_dot invariant", 1e-10, cfg);
    Check herm(s, "standard boost hermitian positive", 1e-12, cfg);
    Check rest(s, "Lambda(A_k)(m,0) = k", 1e-10, cfg);
    Check cov(s, "D^-1 g^mu D = Lambda^mu_nu g^nu", 1e-10, cfg);
    for (int i = 0; i < cfg.samples; ++i)
    {
        FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
        FourVector const p = random_on_shell(rng, m, cfg.max_momentum);
        SL2Element const a1 = random_lorentz(rng);
        SL2Element const a2 = random_lorentz(rng);

        CMat2 const u = wigner_rotation(a1, k, m);
        unit.record(max_abs_diff(u * adjoint(u), CMat2::identity()));
        det1.record(std::abs(det(u) - 1.0));

        LorentzMatrix const l1 = sl2_to_lorentz(a1);
        hom.record(max_abs_diff(sl2_to_lorentz(a1 * a2), l1 * sl2_to_lorentz(a2)));
        metric_ok.record(l1.metric_defect());
        inv.record(std::abs(minkowski_dot(apply_lorentz(l1, k), apply_lorentz(l1, p))
                            - minkowski_dot(k, p)));

        SL2Element const ak = standard_boost_sl2(k, m);
        auto const ev = eigenvalues(ak.matrix());
        double const pos = std::min(ev[0].real(), ev[1].real()) > 0 ? 0.0 : 1.0;
        herm.record(std::max(max_abs_diff(ak.matrix(), adjoint(ak.matrix())), pos));
        FourVector const image = apply_lorentz(sl2_to_lorentz(ak), FourVector{{m, 0, 0, 0}});
        rest.record(max_component(image - k));

        CMat4 const d = bispinor_rep(a1);
        CMat4 const dinv = bispinor_rep(SL2Element(inverse(a1.matrix())));
        for (std::size_t mu = 0; mu < 4; ++mu)
        {
            CMat4 rhs;
            for (std::size_t nu = 0; nu < 4; ++nu)
                rhs += l1(mu, nu) * gamma(nu);
            cov.record(max_abs_diff(dinv * gamma(mu) * d, rhs));
        }
    }
    return s;
}

inline SuiteReport verify_amplitudes(VerifyConfig const& cfg)
{
    SuiteReport s{"amplitudes", {}};
    Rng rng(cfg.seed ^ 0x616d706cULL);
    double const m = cfg.mass;
    {
        Check dirac(s, "(k gamma) v = m v", 1e-11, cfg);
        Check norm(s, "vbar v = I", 1e-11, cfg);
        Check par(s, "gamma^0 v(k) = v(k^pi)", 1e-11, cfg);
        Check cur(s, "vbar gamma^mu v = (k^mu/m) I", 1e-11, cfg);
        Check proj(s, "v vbar = (k gamma + m)/(2m)", 1e-11, cfg);
        Check uw(s, "(k gamma) u = m u, (k gamma) w = -m w", 1e-11, cfg);
        for (int i = 0; i < cfg.samples; ++i)
        {
            FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
            Amplitude const v = amplitude_v(k, m);
            CMat4 const slash = feynman_slash(k);
            CMat24 const vb = vbar(v);
            dirac.record(max_abs_diff(slash * v.matrix(), m * v.matrix()));
            norm.record(max_abs_diff(vb * v.matrix(), CMat2::identity()));
            par.record(max_abs_diff(gamma(0) * v.matrix(), amplitude_v(parity(k), m).matrix()));
            for (std::size_t mu = 0; mu < 4; ++mu)
                cur.record(max_abs_diff(vb * gamma(mu) * v.matrix(),
                                        (k[mu] / m) * CMat2::identity()));
            proj.record(max_abs_diff(v.matrix() * vb,
                                     (slash + m * CMat4::identity()) / (2 * m)));
            CMat42 const u = amplitude_u(v);
            CMat42 const w = amplitude_w(v);
            uw.record(std::max(max_abs_diff(slash * u, m * u), max_abs_diff(slash * w, -m * w)));
        }
    }
    {
        Check wein(s, "v(Lk) = D v(k) D^T(R)", 1e-10, cfg);
        Check wein2(s, "v(Lk) s2 = D v(k) s2 D^dagger(R)", 1e-10, cfg);
        int const n_lorentz = scaled(cfg.samples, 5);
        for (int i = 0; i < n_lorentz; ++i)
        {
            SL2Element const a = random_lorentz(rng);
            CMat4 const d = bispinor_rep(a);
            for (int j = 0; j < 5; ++j)
            {
                FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
                CMat2 const r = wigner_rotation(a, k, m);
                CMat42 const vk = amplitude_v(k, m).matrix();
                CMat42 const vlk = amplitude_v(transform_momentum(a, k, m), m).matrix();
                wein.record(max_abs_diff(vlk, d * vk * transpose(r)));
                wein2.record(max_abs_diff(vlk * pauli(2), d * vk * pauli(2) * adjoint(r)));
            }
        }
    }
    return s;
}

inline SuiteReport verify_spin(VerifyConfig const& cfg)
{
    SuiteReport s{"spin", {}};
    Rng rng(cfg.seed ^ 0x7370696eULL);
    double const m = cfg.mass;
    Check sw(s, "S_W v = v sigma^T/2", 1e-10, cfg);
    Check sc(s, "S_cov v = v sigma^T/2", 1e-10, cfg);
    Check alg(s, "[s_i, s_j] = i eps_ijk s_k", 1e-12, cfg);
    Check eig(s, "a.S eigenvalues +-1/2", 1e-10, cfg);
    int const n = scaled(cfg.samples, 2);
    for (int i = 0; i < n; ++i)
    {
        FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
        Amplitude const v = amplitude_v(k, m);
        SpinMatrices const w = spin_matrices(k, m);
        SpinMatrices const cov = spin_covariant(k, m);
        for (std::size_t j = 0; j < 3; ++j)
        {
            CMat42 const expected = v.matrix() * (0.5 * transpose(pauli(j + 1)));
            sw.record(max_abs_diff(w.s[j] * v.matrix(), expected));
            sc.record(max_abs_diff(cov.s[j] * v.matrix(), expected));
        }
        auto const g = effective_generators(w, v);
        for (std::size_t x = 0; x < 3; ++x)
        {
            std::size_t const y = (x + 1) % 3;
            std::size_t const z = (x + 2) % 3;
            alg.record(max_abs_diff(commutator(g[x], g[y]), I_unit * g[z]));
        }
        auto const ev = physical_eigenvalues(w, v, rng.unit_vector());
        eig.record(std::max(std::abs(ev[0] + 0.5), std::abs(ev[1] - 0.5)));
    }
    return s;
}

inline SuiteReport verify_states(VerifyConfig const& cfg)
{
    SuiteReport s{"states", {}};
    Rng rng(cfg.seed ^ 0x7374617465ULL);
    double const m = cfg.mass;
    Check lon(s, "(k+p)_mu v^T C g^mu v = 0", 1e-10, cfg);
    Check tr(s, "Tr[M M^dagger] = (m^2+kp)/m^2", 1e-10, cfg);
    Check lor(s, "Tr[M M^dagger] Lorentz invariant", 1e-9, cfg);
    Check scale(s, "correlation invariant under M -> c M", 1e-12, cfg);
    int const n = scaled(cfg.samples, 2);
    for (int i = 0; i < n; ++i)
    {
        FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
        FourVector const p = random_on_shell(rng, m, cfg.max_momentum);
        FourVector const q = k + p;
        std::array<cplx, 4> const longitudinal{q[0], q[1], q[2], q[3]};
        lon.record(max_abs(contract_vector(k, p, longitudinal, m)));

        StateKernel const ps = pseudoscalar_kernel(k, p, m);
        tr.record(std::abs(ps.norm2() - (m * m + minkowski_dot(k, p)) / (m * m)));

        SL2Element const a = random_lorentz(rng);
        StateKernel const moved = pseudoscalar_kernel(transform_momentum(a, k, m),
                                                      transform_momentum(a, p, m), m);
        lor.record(std::abs(moved.norm2() - ps.norm2()));

        Direction const da = random_direction(rng);
        Direction const db = random_direction(rng);
        cplx const c{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        StateKernel scaled_kernel = ps;
        scaled_kernel.matrix *= c;
        scale.record(std::abs(correlate_oracle(scaled_kernel, da, db).value
                              - correlate_oracle(ps, da, db).value));
    }
    return s;
}

inline SuiteReport verify_correlations(VerifyConfig const& cfg)
{
    SuiteReport s{"correlations", {}};
    Rng rng(cfg.seed ^ 0x636f7272ULL);
    double const m = cfg.mass;
    double worst_bound = 0;
    auto bound = [&](double c) { worst_bound = std::max(worst_bound, std::abs(c) - 1.0); };
    {
        Check eq(s, "pseudoscalar oracle = closed form", 1e-9, cfg);
        Check numden(s, "pseudoscalar trace identities", 1e-10, cfg);
        for (int i = 0; i < cfg.samples; ++i)
        {
            FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
            FourVector const p = random_on_shell(rng, m, cfg.max_momentum);
            Direction const a = random_direction(rng);
            Direction const b = random_direction(rng);
            auto const r = correlate_oracle(pseudoscalar_kernel(k, p, m), a, b);
            double const closed = correlation_pseudoscalar_sharp(k, p, m, a, b);
            eq.record(std::abs(r.value - closed));
            double const den = (m * m + minkowski_dot(k, p)) / (m * m);
            numden.record(std::max(std::abs(r.denominator - den),
                                   std::abs(r.numerator - den * closed)));
            bound(r.value);
            bound(closed);
        }
    }
    {
        Check eq(s, "vector CMF oracle = closed form", 1e-9, cfg);
        Check sym(s, "CMF pseudoscalar exchange symmetry", 1e-12, cfg);
        Check nonrel(s, "vector CMF at beta=1e-3 -> triplet", 1e-5, cfg);
        int const n = scaled(cfg.samples, 2);
        for (int i = 0; i < n; ++i)
        {
            FourVector const k = random_on_shell(rng, m, cfg.max_momentum);
            CVec3 const phi = rng.complex_vector();
            Direction const a = random_direction(rng);
            Direction const b = random_direction(rng);
            auto const kernel = vector_kernel(k, parity(k), Polarization::spatial(phi), m);
            double const oracle = correlate_oracle(kernel, a, b).value;
            double const closed = correlation_vector_cmf(k, m, phi, a, b);
            eq.record(std::abs(oracle - closed));
            bound(oracle);
            bound(closed);
            bound(correlation_triplet_nonrel(phi, a, b));

            auto const ps = pseudoscalar_kernel(k, parity(k), m);
            sym.record(std::abs(correlate_oracle(ps, a, b).value
                                - correlate_oracle(ps, b, a).value));

            Direction const nhat(rng.unit_vector());
            double const beta = 1e-3;
            double const kmag = m * beta / std::sqrt((1 - beta) * (1 + beta));
            FourVector const slow = on_shell(kmag * nhat.vec(), m);
            nonrel.record(std::abs(correlation_vector_cmf(slow, m, phi, a, b)
                                   - correlation_triplet_nonrel(phi, a, b)));
        }
    }
    {
        Check cz(s, "Czachor beta=1-1e-8 -> ultra limit", 1e-3, cfg);
        // The vector closed form converges at first order in m/k0; 1-beta=1e-12 gives
        // m/k0 ~ 1.4e-6.
        Check vu(s, "vector CMF at 1-beta=1e-12 -> ultra limit", 1e-4, cfg);
        int const n = scaled(cfg.samples, 2);
        int done_cz = 0;
        int done_vu = 0;
        while (done_cz < n || done_vu < n)
        {
            Direction const nhat = random_direction(rng);
            Direction const a = random_direction(rng);
            Direction const b = random_direction(rng);
            if (done_cz < n && std::abs(dot(nhat.vec(), a.vec())) > 0.1
                && std::abs(dot(nhat.vec(), b.vec())) > 0.1)
            {
                double const beta = 1 - 1e-8;
                double const c = correlation_czachor_cmf(nhat, beta, a, b);
                cz.record(std::abs(c - correlation_czachor_ultra(nhat, a, b)));
                bound(c);
                ++done_cz;
            }
            CVec3 const phi = rng.complex_vector();
            if (done_vu < n && norm2(cross(nhat.vec(), phi)) >= 0.1 * norm2(phi))
            {
                double const one_minus_beta = 1e-12;
                double const beta = 1 - one_minus_beta;
                double const kmag = m * beta / std::sqrt(one_minus_beta * (1 + beta));
                FourVector const k = on_shell(kmag * nhat.vec(), m);
                double const c = correlation_vector_cmf(k, m, phi, a, b);
                vu.record(std::abs(c - correlation_vector_ultra(nhat, phi, a, b)));
                bound(c);
                ++done_vu;
            }
        }
    }
    {
        Check mask(s, "single-entry mask reproduces sharp value", 1e-14, cfg);
        int const n = scaled(cfg.samples, 10);
        for (int i = 0; i < n; ++i)
        {
            std::vector<EnsembleEntry> entries;
            FourVector const k0 = random_on_shell(rng, m, cfg.max_momentum);
            FourVector const p0 = random_on_shell(rng, m, cfg.max_momentum);
            FourVector const total = k0 + p0;
            entries.push_back({rng.uniform(0.1, 2.0), pseudoscalar_kernel(k0, p0, m)});
            // Other members share q = k0 + p0 but are masked out below.
            entries.push_back({rng.uniform(0.1, 2.0), pseudoscalar_kernel(p0, k0, m)});
            EnsembleState const ens(entries, total);
            Direction const a = random_direction(rng);
            Direction const b = random_direction(rng);
            EntryMask const only_first{true, false};
            EntryMask const all{true, true};
            double const masked = correlate_oracle(ens, a, b, only_first, all).value;
            double const sharp = correlate_oracle(entries[0].kernel, a, b).value;
            mask.record(std::abs(masked - sharp));
            bound(masked);
        }
    }
    {
        Check b(s, "correlators bounded by 1", 1e-9, cfg);
        b.record(std::max(0.0, worst_bound));
    }
    return s;
}
}  // namespace detail

/*!
 * Run every identity suite with seeded random samples.
 *
 * A tolerance override replaces every per-check tolerance.
 */
inline RunReport run_verify(VerifyConfig const& cfg)
{
    require(cfg.samples >= 1, Errc::invalid_argument, "samples must be >= 1");
    auto const t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.suites.push_back(detail::verify_clifford(cfg));
    report.suites.push_back(detail::verify_lorentz(cfg));
    report.suites.push_back(detail::verify_amplitudes(cfg));
    report.suites.push_back(detail::verify_spin(cfg));
    report.suites.push_back(detail::verify_states(cfg));
    report.suites.push_back(detail::verify_correlations(cfg));
    for (auto const& s : report.suites)
    {
        for (auto const& c : s.checks)
        {
            (c.passed() ? report.checks_passed : report.checks_failed) += 1;
            report.max_error = std::max(report.max_error, c.max_error);
        }
    }
    report.wall_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace diracepr
