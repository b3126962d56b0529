// Acceptance gate: one PASS/FAIL line per criterion, with the measured figure.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "diracepr/diracepr.hpp"

using namespace diracepr;

namespace
{
constexpr double pi = std::numbers::pi;
constexpr std::uint64_t seed = 7;

struct Clause
{
    std::string text;
    bool ok;
};

int failures = 0;

void report(int id, std::string const& title, std::vector<Clause> const& clauses)
{
    bool ok = true;
    for (auto const& c : clauses)
        ok = ok && c.ok;
    std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", title.c_str());
    for (auto const& c : clauses)
        std::printf("    [%s] %s\n", c.ok ? "ok" : "FAIL", c.text.c_str());
    if (!ok)
        ++failures;
}

std::string fmt(char const* f, double x)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string fmt(char const* f, double x, double y)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, x, y);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Direction random_direction(Rng& rng)
{
    return Direction(rng.unit_vector());
}

FourVector cmf_momentum(Direction const& n, double one_minus_beta, double m = 1.0)
{
    double const beta = 1 - one_minus_beta;
    double const kmag = m * beta / std::sqrt(one_minus_beta * (1 + beta));
    return on_shell(kmag * n.vec(), m);
}

FourVector cmf_momentum_beta(Direction const& n, double beta, double m = 1.0)
{
    double const kmag = m * beta / std::sqrt((1 - beta) * (1 + beta));
    return on_shell(kmag * n.vec(), m);
}

//---------------------------------------------------------------------------//

void criterion1()
{
    auto const t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    double const m = 1.0;
    std::vector<SL2Element> transforms;
    for (int i = 0; i < 200; ++i)
        transforms.push_back(random_lorentz(rng));

    double err_rel = 0;
    double err_weinberg = 0;
    for (int i = 0; i < 1000; ++i)
    {
        FourVector const k = random_on_shell(rng, m, 5.0);
        Amplitude const v = amplitude_v(k, m);
        CMat4 const slash = feynman_slash(k);
        CMat24 const vb = vbar(v);
        err_rel = std::max(err_rel, max_abs_diff(slash * v.matrix(), m * v.matrix()));
        err_rel = std::max(err_rel, max_abs_diff(vb * v.matrix(), CMat2::identity()));
        err_rel = std::max(err_rel, max_abs_diff(diracepr::gamma(0) * v.matrix(),
                                                 amplitude_v(parity(k), m).matrix()));
        for (std::size_t mu = 0; mu < 4; ++mu)
            err_rel = std::max(err_rel, max_abs_diff(vb * diracepr::gamma(mu) * v.matrix(),
                                                     (k[mu] / m) * CMat2::identity()));
        err_rel = std::max(err_rel, max_abs_diff(v.matrix() * vb,
                                                 (slash + m * CMat4::identity()) / (2 * m)));

        SL2Element const& a = transforms[static_cast<std::size_t>(i) % transforms.size()];
        CMat4 const d = bispinor_rep(a);
        CMat2 const r = wigner_rotation(a, k, m);
        CMat42 const vlk = amplitude_v(transform_momentum(a, k, m), m).matrix();
        err_weinberg = std::max(err_weinberg, max_abs_diff(vlk, d * v.matrix() * transpose(r)));
        err_weinberg = std::max(err_weinberg, max_abs_diff(vlk * pauli(2),
                                                           d * v.matrix() * pauli(2) * adjoint(r)));
    }
    double const t = seconds_since(t0);
    report(1, "amplitude identities and Weinberg conditions",
           {{fmt("amplitude relations, 1000 momenta: max error %.2e < 1e-10", err_rel), err_rel < 1e-10},
            {fmt("Weinberg conditions, 200 transformations: max error %.2e < 1e-10", err_weinberg),
             err_weinberg < 1e-10},
            {fmt("runtime %.3f s < 5 s", t), t < 5}});
}

void criterion2()
{
    Rng rng(seed + 1);
    double err_action = 0;
    double err_alg = 0;
    for (int i = 0; i < 500; ++i)
    {
        FourVector const k = random_on_shell(rng, 1.0, 5.0);
        Amplitude const v = amplitude_v(k, 1.0);
        SpinMatrices const s = spin_matrices(k, 1.0);
        for (std::size_t j = 0; j < 3; ++j)
            err_action = std::max(err_action,
                                  max_abs_diff(s.s[j] * v.matrix(),
                                               v.matrix() * (0.5 * transpose(pauli(j + 1)))));
        auto const g = effective_generators(s, v);
        for (std::size_t x = 0; x < 3; ++x)
            err_alg = std::max(err_alg, max_abs_diff(commutator(g[x], g[(x + 1) % 3]),
                                                     I_unit * g[(x + 2) % 3]));
    }
    report(2, "spin operator consistency",
           {{fmt("S(k) v(k) = v(k) sigma^T/2, 500 momenta: max error %.2e < 1e-10", err_action),
             err_action < 1e-10},
            {fmt("su(2) commutators: max error %.2e < 1e-12", err_alg), err_alg < 1e-12}});
}

void criterion3()
{
    auto const t0 = std::chrono::steady_clock::now();
    Rng rng(seed + 2);
    double err = 0;
    for (int i = 0; i < 1000; ++i)
    {
        FourVector const k = random_on_shell(rng, 1.0, 5.0);
        FourVector const p = random_on_shell(rng, 1.0, 5.0);
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        err = std::max(err, std::abs(correlate_oracle(pseudoscalar_kernel(k, p, 1.0), a, b).value
                                     - correlation_pseudoscalar_sharp(k, p, 1.0, a, b)));
    }
    double const t = seconds_since(t0);
    report(3, "pseudoscalar oracle equals closed form",
           {{fmt("1000 random (k,p,a,b): max |delta| %.2e < 1e-9", err), err < 1e-9},
            {fmt("runtime %.3f s < 2 s", t), t < 2}});
}

void criterion4()
{
    Rng rng(seed + 3);
    double err = 0;
    for (int i = 0; i < 500; ++i)
    {
        FourVector const k = random_on_shell(rng, 1.0, 5.0);
        CVec3 const phi = rng.complex_vector();
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        auto const kernel = vector_kernel(k, parity(k), Polarization::spatial(phi), 1.0);
        err = std::max(err, std::abs(correlate_oracle(kernel, a, b).value
                                     - correlation_vector_cmf(k, 1.0, phi, a, b)));
    }
    report(4, "vector oracle equals CMF closed form",
           {{fmt("500 random (k, complex phi, a, b): max |delta| %.2e < 1e-9", err), err < 1e-9}});
}

void criterion5()
{
    Rng rng(seed + 4);
    std::vector<double> const betas{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999};
    double err = 0;
    for (double beta : betas)
    {
        for (int i = 0; i < 100; ++i)
        {
            FourVector const k = cmf_momentum_beta(random_direction(rng), beta);
            Direction const a = random_direction(rng);
            Direction const b = random_direction(rng);
            double const c = correlate_oracle(pseudoscalar_kernel(k, parity(k), 1.0), a, b).value;
            err = std::max(err, std::abs(c + dot(a.vec(), b.vec())));
        }
    }

    Direction const n = Direction::spherical(0.4, 1.1);
    double lo = 1e9;
    double hi = -1e9;
    double worst_tsirelson = 0;
    for (double beta : {0.1, 0.5, 0.9, 0.999})
    {
        FourVector const k = cmf_momentum_beta(n, beta);
        EnsembleState const st = EnsembleState::sharp(pseudoscalar_kernel(k, parity(k), 1.0));
        Correlator const c = [&st](Direction const& a, Direction const& b) {
            return correlate_oracle(st, a, b).value;
        };
        double const v = chsh_max(c, {}).value;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        worst_tsirelson = std::max(worst_tsirelson, std::abs(v - 2 * std::sqrt(2.0)));
    }
    report(5, "CMF pseudoscalar behaves as the singlet",
           {{fmt("C = -a.b for beta up to 0.999: max error %.2e < 1e-12", err), err < 1e-12},
            {fmt("CHSH optimum spread over beta %.2e < 1e-6", hi - lo), hi - lo < 1e-6},
            {fmt("CHSH optimum |value - 2 sqrt 2| %.2e < 1e-4", worst_tsirelson),
             worst_tsirelson < 1e-4}});
}

void criterion6()
{
    Rng rng(seed + 5);
    double err_cz = 0;
    int n_cz = 0;
    while (n_cz < 1000)
    {
        Direction const n = random_direction(rng);
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        if (std::abs(dot(n.vec(), a.vec())) <= 0.1 || std::abs(dot(n.vec(), b.vec())) <= 0.1)
            continue;
        err_cz = std::max(err_cz, std::abs(correlation_czachor_cmf(n, 1 - 1e-8, a, b)
                                           - correlation_czachor_ultra(n, a, b)));
        ++n_cz;
    }

    // Away from the singular set: |n x phi|^2 >= 0.1 |phi|^2.
    double err_vu = 0;
    int n_vu = 0;
    while (n_vu < 500)
    {
        Direction const n = random_direction(rng);
        CVec3 const phi = rng.complex_vector();
        if (norm2(cross(n.vec(), phi)) < 0.1 * norm2(phi))
            continue;
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        FourVector const k = cmf_momentum(n, 1e-6);
        err_vu = std::max(err_vu, std::abs(correlation_vector_cmf(k, 1.0, phi, a, b)
                                           - correlation_vector_ultra(n, phi, a, b)));
        ++n_vu;
    }

    double err_nr = 0;
    for (int i = 0; i < 500; ++i)
    {
        FourVector const k = cmf_momentum_beta(random_direction(rng), 1e-3);
        CVec3 const phi = rng.complex_vector();
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        err_nr = std::max(err_nr, std::abs(correlation_vector_cmf(k, 1.0, phi, a, b)
                                           - correlation_triplet_nonrel(phi, a, b)));
    }
    report(6, "limit consistency",
           {{fmt("Czachor at beta = 1-1e-8 vs limit, |n.a|,|n.b| > 0.1: max %.2e < 1e-3", err_cz),
             err_cz < 1e-3},
            {fmt("vector CMF at beta = 1-1e-6 vs limit: max %.2e < 1e-4", err_vu), err_vu < 1e-4},
            {fmt("vector CMF at beta = 1e-3 vs triplet: max %.2e < 1e-5", err_nr), err_nr < 1e-5}});
}

struct ParsedCsv
{
    std::string header;
    std::vector<std::vector<double>> rows;
};

ParsedCsv parse_csv(std::string const& text)
{
    ParsedCsv out;
    std::istringstream is(text);
    std::getline(is, out.header);
    std::string line;
    while (std::getline(is, line))
    {
        std::vector<double> row;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ','))
            row.push_back(std::stod(field));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string slurp(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

//! Runs the CLI writing to `path`; returns the file contents ("" on failure).
std::string run_cli(std::string const& args, std::string const& path)
{
    std::string const cmd = std::string(DIRACEPR_CLI) + " --out " + path + " " + args;
    if (std::system(cmd.c_str()) != 0)
        return {};
    return slurp(path);
}

void criterion7()
{
    std::string const base = "acceptance_fig";
    std::string const f2a = run_cli("fig2 --theta 0 0.3 0.7853981633974483 1.2 1.5707963267948966 2.5 3.141592653589793",
                                    base + "2a.csv");
    std::string const f2b = run_cli("fig2 --theta 0 0.3 0.7853981633974483 1.2 1.5707963267948966 2.5 3.141592653589793",
                                    base + "2b.csv");
    double err2 = f2a.empty() ? INFINITY : 0;
    std::size_t rows2 = 0;
    if (!f2a.empty())
    {
        for (auto const& r : parse_csv(f2a).rows)
        {
            double const c = std::cos(r[0]);
            err2 = std::max(err2, std::abs(r[3] + 2 * std::cos(r[1]) * std::cos(r[2]) * c * c));
            ++rows2;
        }
    }

    std::string const f1a = run_cli("fig1", base + "1a.csv");
    std::string const f1b = run_cli("fig1", base + "1b.csv");
    double max1 = f1a.empty() ? NAN : 0;
    if (!f1a.empty())
        for (auto const& r : parse_csv(f1a).rows)
            max1 = std::max(max1, std::abs(r[3]));
    std::string const f1zero = run_cli("fig1 --beta 0", base + "1z.csv");
    double max0 = f1zero.empty() ? INFINITY : 0;
    if (!f1zero.empty())
        for (auto const& r : parse_csv(f1zero).rows)
            max0 = std::max(max0, std::abs(r[3]));

    bool const stable = !f1a.empty() && !f2a.empty() && f1a == f1b && f2a == f2b;
    for (char const* s : {"2a", "2b", "1a", "1b", "1z"})
        std::remove((base + s + ".csv").c_str());
    report(7, "figure reproduction",
           {{fmt("fig2 closed-form identity over %.0f points: max error %.2e <= 1e-12",
                 static_cast<double>(rows2), err2),
             err2 <= 1e-12},
            {fmt("fig1 at beta = 0.999: max |dC| = %.4f in [1, 2]", max1), max1 >= 1 && max1 <= 2},
            {fmt("fig1 at beta = 0: max |dC| = %g (identically 0)", max0), max0 == 0},
            {"fig1 and fig2 CSVs byte-identical across reruns", stable}});
}

void criterion8()
{
    Rng rng(seed + 7);
    double err = 0;
    for (int i = 0; i < 500; ++i)
    {
        FourVector const k = random_on_shell(rng, 1.0, 5.0);
        FourVector const p = random_on_shell(rng, 1.0, 5.0);
        FourVector const q = k + p;
        err = std::max(err, frobenius_norm(contract_vector(k, p, {q[0], q[1], q[2], q[3]}, 1.0)));
    }
    report(8, "transversality",
           {{fmt("longitudinal annihilation, 500 pairs: max norm %.2e < 1e-10", err), err < 1e-10}});
}

void criterion9()
{
    Rng rng(seed + 8);
    double worst = 0;
    auto track = [&worst](double c) { worst = std::max(worst, std::abs(c)); };
    for (int i = 0; i < 2000; ++i)
    {
        FourVector const k = random_on_shell(rng, 1.0, 5.0);
        FourVector const p = random_on_shell(rng, 1.0, 5.0);
        Direction const a = random_direction(rng);
        Direction const b = random_direction(rng);
        Direction const n = random_direction(rng);
        CVec3 const phi = rng.complex_vector();
        double const beta = rng.uniform(0, 1 - 1e-9);
        track(correlate_oracle(pseudoscalar_kernel(k, p, 1.0), a, b).value);
        track(correlation_pseudoscalar_sharp(k, p, 1.0, a, b));
        track(correlation_pseudoscalar_cmf(a, b));
        track(correlation_czachor_cmf(n, beta, a, b));
        if (std::abs(dot(n.vec(), a.vec())) > 1e-12 && std::abs(dot(n.vec(), b.vec())) > 1e-12)
            track(correlation_czachor_ultra(n, a, b));
        track(correlate_oracle(vector_kernel(k, parity(k), Polarization::spatial(phi), 1.0), a, b)
                  .value);
        track(correlation_vector_cmf(k, 1.0, phi, a, b));
        track(correlation_vector_ultra(n, phi, a, b));
        track(correlation_triplet_nonrel(phi, a, b));
    }

    // Vector extremes: theta -> 0 with phi_a = phi_b = 0 and phi_a = 0, phi_b = pi.
    CVec3 const phi_z{0.0, 0.0, 1.0};
    Direction const n({std::sin(1e-5), 0.0, std::cos(1e-5)});
    double const lo = delta_c_vector(n, phi_z, Direction::x(), Direction::x());
    double const hi = delta_c_vector(n, phi_z, Direction::x(), Direction({std::cos(pi), std::sin(pi), 0.0}));
    report(9, "boundedness and range",
           {{fmt("max |C| over all correlators %.15f <= 1 + 1e-9", worst), worst <= 1 + 1e-9},
            {fmt("delta_c_vector minimum %.12f within 1e-9 of -2", lo), std::abs(lo + 2) <= 1e-9},
            {fmt("delta_c_vector maximum %.12f within 1e-9 of +2", hi), std::abs(hi - 2) <= 1e-9}});
}

}  // namespace

int main()
{
    std::vector<std::function<void()>> const criteria{criterion1, criterion2, criterion3,
                                                      criterion4, criterion5, criterion6,
                                                      criterion7, criterion8, criterion9};
    for (auto const& c : criteria)
    {
        try
        {
            c();
        }
        catch (std::exception const& e)
        {
            std::printf("criterion error: %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
