// Command-line front end: verify, eval, scan, fig1, fig2, chsh.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracepr/diracepr.hpp"

using namespace diracepr;
using nlohmann::json;

namespace
{
constexpr int exit_ok = 0;
constexpr int exit_compute = 1;
constexpr int exit_usage = 2;

struct GlobalOpts
{
    double mass = 1.0;
    std::uint64_t seed = 7;
    std::optional<double> tol;
    std::string out;
    std::string format = "csv";
};

//! Writes to --out when given, otherwise stdout.
class Output
{
  public:
    explicit Output(std::string const& path)
    {
        if (!path.empty())
        {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
    void finish()
    {
        os().flush();
        if (!os())
            throw std::runtime_error("write failed");
    }

  private:
    std::ofstream file_;
};

Vec3 to_vec3(std::vector<double> const& v)
{
    return {v[0], v[1], v[2]};
}

//! (theta, phi) or a 3-vector within 1e-6 of unit length.
Direction parse_direction(std::vector<double> const& v, char const* what)
{
    if (v.size() == 2)
        return Direction::spherical(v[0], v[1]);
    if (v.size() == 3)
    {
        double const n = norm(to_vec3(v));
        if (!(std::abs(n - 1) <= 1e-6))
            fail(Errc::parse, std::string(what) + " is not a unit vector (|v| = "
                                  + format_double(n) + ")");
        return Direction(to_vec3(v), 1e-6);
    }
    fail(Errc::parse, std::string(what) + " takes 2 angles or 3 components");
}

void write_table(Output& out, GlobalOpts const& g, CsvTable const& t)
{
    if (g.format == "json")
    {
        json rows = json::array();
        for (auto const& r : t.rows)
            rows.push_back(r);
        out.os() << json{{"header", t.header}, {"rows", rows}}.dump() << '\n';
    }
    else
    {
        write_csv(out.os(), t);
    }
}

json direction_json(Direction const& d)
{
    return json::array({d[0], d[1], d[2]});
}

//---------------------------------------------------------------------------//
// STATE SPECIFICATION
//---------------------------------------------------------------------------//

struct StateOpts
{
    std::string state = "pseudoscalar";
    bool closed = false;
    bool ultra = false;
    std::vector<double> k;
    std::vector<double> p;
    double beta = 0.0;
    std::vector<double> n;
    std::vector<double> phi;
    std::vector<double> phi_im;
    std::string gamma;
    std::string ensemble;
    bool project = false;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--state", state, "pseudoscalar|vector|general|czachor|triplet")
            ->check(CLI::IsMember({"pseudoscalar", "vector", "general", "czachor", "triplet"}));
        cmd->add_flag("--closed", closed, "use the closed form instead of the trace oracle");
        cmd->add_flag("--ultra", ultra, "use the beta -> 1 limit (czachor, vector)");
        cmd->add_option("--k", k, "antiparticle 3-momentum (lab frame)")->expected(3);
        cmd->add_option("--p", p, "particle 3-momentum (lab frame)")->expected(3);
        cmd->add_option("--beta", beta, "CMF velocity, 0 <= beta < 1");
        cmd->add_option("--n", n, "CMF antiparticle direction: theta phi, or x y z")
            ->expected(2, 3);
        cmd->add_option("--phi", phi, "polarization real part: 3 spatial or 4 components")
            ->expected(3, 4);
        cmd->add_option("--phi-im", phi_im, "polarization imaginary part")->expected(3, 4);
        cmd->add_option("--gamma", gamma, "Clifford element for --state general: 1 g5 g<mu> g<mu>g5 c<mu><nu>");
        cmd->add_option("--ensemble", ensemble, "ensemble CSV (weight,k1,k2,k3,p1,p2,p3)");
        cmd->add_flag("--project", project, "project the polarization transverse to k+p");
    }

    bool lab() const { return !k.empty() || !p.empty(); }

    Direction axis() const { return n.empty() ? Direction::z() : parse_direction(n, "--n"); }

    std::array<cplx, 4> polarization_components() const
    {
        if (phi.empty() && !phi_im.empty())
            fail(Errc::parse, "--phi-im requires --phi");
        std::vector<double> re = phi.empty() ? std::vector<double>{0, 0, 1} : phi;
        std::vector<double> im = phi_im.empty() ? std::vector<double>(re.size(), 0.0) : phi_im;
        if (im.size() != re.size())
            fail(Errc::parse, "--phi and --phi-im need the same number of components");
        std::array<cplx, 4> out{};
        std::size_t const offset = re.size() == 3 ? 1 : 0;
        for (std::size_t i = 0; i < re.size(); ++i)
            out[i + offset] = cplx{re[i], im[i]};
        return out;
    }

    CVec3 spatial_polarization() const
    {
        auto const c = polarization_components();
        if (c[0] != cplx{})
            fail(Errc::parse, "this evaluator needs a purely spatial polarization");
        return {c[1], c[2], c[3]};
    }

    void check_consistency() const
    {
        if (lab() && (k.empty() || p.empty()))
            fail(Errc::parse, "lab frame needs both --k and --p");
        if (state == "general" && gamma.empty())
            fail(Errc::parse, "--state general needs --gamma");
        if (state != "general" && !gamma.empty())
            fail(Errc::parse, "--gamma is only valid with --state general");
        if (closed && ultra)
            fail(Errc::parse, "--closed and --ultra are exclusive");
        if (!ensemble.empty() && (lab() || closed || ultra))
            fail(Errc::parse, "--ensemble excludes --k/--p, --closed and --ultra");
        if ((state == "czachor" || state == "triplet") && (lab() || !ensemble.empty()))
            fail(Errc::parse, "czachor and triplet are CMF closed forms");
        if (ultra && state != "czachor" && state != "vector")
            fail(Errc::parse, "--ultra applies to czachor and vector states");
        if (closed && state == "general")
            fail(Errc::parse, "no closed form for general states");
        if (closed && state == "vector" && lab())
            fail(Errc::parse, "the vector closed form is CMF only");
    }
};

//! A correlator plus, for oracle evaluations, the numerator/denominator split.
struct Evaluator
{
    Correlator corr;
    std::function<CorrelationResult(Direction const&, Direction const&)> oracle;
};

Evaluator make_evaluator(StateOpts const& s, double mass)
{
    s.check_consistency();

    if (s.state == "czachor")
    {
        Direction const n = s.axis();
        double const beta = s.beta;
        if (s.ultra)
            return {[n](Direction const& a, Direction const& b) {
                        return correlation_czachor_ultra(n, a, b);
                    },
                    {}};
        detail::require_beta(beta);
        return {[n, beta](Direction const& a, Direction const& b) {
                    return correlation_czachor_cmf(n, beta, a, b);
                },
                {}};
    }
    if (s.state == "triplet")
    {
        CVec3 const phi = s.spatial_polarization();
        return {[phi](Direction const& a, Direction const& b) {
                    return correlation_triplet_nonrel(phi, a, b);
                },
                {}};
    }

    auto make_kernel = [&s, mass](FourVector const& k, FourVector const& p) -> StateKernel {
        if (s.state == "pseudoscalar")
            return pseudoscalar_kernel(k, p, mass);
        if (s.state == "general")
            return general_kernel(k, p, GammaLabel::parse(s.gamma), mass);
        Polarization phi(s.polarization_components());
        if (s.project)
            phi = project_transverse(phi, k + p);
        return vector_kernel(k, p, phi, mass);
    };

    std::optional<EnsembleState> state;
    if (!s.ensemble.empty())
    {
        std::ifstream in(s.ensemble);
        if (!in)
            fail(Errc::parse, "cannot open ensemble file '" + s.ensemble + "'");
        state.emplace(build_ensemble(read_ensemble_csv(in), mass, make_kernel));
    }
    else
    {
        FourVector k;
        FourVector p;
        if (s.lab())
        {
            k = on_shell(to_vec3(s.k), mass);
            p = on_shell(to_vec3(s.p), mass);
        }
        else
        {
            detail::require_beta(s.beta);
            Direction const n = s.axis();
            double const kmag = mass * s.beta / std::sqrt((1 - s.beta) * (1 + s.beta));
            k = on_shell(kmag * n.vec(), mass);
            p = parity(k);
        }

        if (s.ultra)
        {
            CVec3 const phi = s.spatial_polarization();
            Direction const n = s.axis();
            return {[n, phi](Direction const& a, Direction const& b) {
                        return correlation_vector_ultra(n, phi, a, b);
                    },
                    {}};
        }
        if (s.closed && s.state == "pseudoscalar")
            return {[k, p, mass](Direction const& a, Direction const& b) {
                        return correlation_pseudoscalar_sharp(k, p, mass, a, b);
                    },
                    {}};
        if (s.closed)
        {
            CVec3 const phi = s.spatial_polarization();
            return {[k, phi, mass](Direction const& a, Direction const& b) {
                        return correlation_vector_cmf(k, mass, phi, a, b);
                    },
                    {}};
        }
        state.emplace(EnsembleState::sharp(make_kernel(k, p)));
    }

    auto oracle = [st = *state](Direction const& a, Direction const& b) {
        return correlate_oracle(st, a, b);
    };
    return {[oracle](Direction const& a, Direction const& b) { return oracle(a, b).value; },
            oracle};
}

//---------------------------------------------------------------------------//
// COMMANDS
//---------------------------------------------------------------------------//

int run_verify(GlobalOpts const& g, int samples)
{
    if (samples < 1)
        fail(Errc::invalid_argument, "--samples must be >= 1");
    VerifyConfig cfg;
    cfg.seed = g.seed;
    cfg.samples = samples;
    cfg.mass = g.mass;
    cfg.tolerance_override = g.tol;
    RunReport const report = diracepr::run_verify(cfg);

    Output out(g.out);
    if (g.format == "json")
    {
        json suites = json::array();
        for (auto const& s : report.suites)
        {
            json checks = json::array();
            for (auto const& c : s.checks)
                checks.push_back({{"name", c.name},
                                  {"max_error", c.max_error},
                                  {"tolerance", c.tolerance},
                                  {"passed", c.passed()}});
            suites.push_back({{"suite", s.suite},
                              {"max_error", s.max_error()},
                              {"passed", s.passed()},
                              {"checks", checks}});
        }
        out.os() << json{{"passed", report.checks_passed},
                         {"failed", report.checks_failed},
                         {"max_error", report.max_error},
                         {"wall_seconds", report.wall_seconds},
                         {"suites", suites}}
                        .dump()
                 << '\n';
    }
    else
    {
        char buf[256];
        for (auto const& s : report.suites)
        {
            int ok = 0;
            for (auto const& c : s.checks)
                ok += c.passed() ? 1 : 0;
            std::snprintf(buf, sizeof buf, "%-13s %2d/%-2zu max error %.3e\n", s.suite.c_str(),
                          ok, s.checks.size(), s.max_error());
            out.os() << buf;
            for (auto const& c : s.checks)
            {
                if (c.passed())
                    continue;
                std::snprintf(buf, sizeof buf, "  FAIL %s: %.3e > %.3e\n", c.name.c_str(),
                              c.max_error, c.tolerance);
                out.os() << buf;
            }
        }
        std::snprintf(buf, sizeof buf, "%d passed, %d failed, max error %.3e, %.2f s\n",
                      report.checks_passed, report.checks_failed, report.max_error,
                      report.wall_seconds);
        out.os() << buf;
    }
    out.finish();
    return report.ok() ? exit_ok : exit_compute;
}

int run_eval(GlobalOpts const& g, StateOpts const& s, std::vector<double> const& av,
             std::vector<double> const& bv)
{
    Evaluator const ev = make_evaluator(s, g.mass);
    Direction const a = av.empty() ? Direction::z() : parse_direction(av, "--a");
    Direction const b = bv.empty() ? Direction::z() : parse_direction(bv, "--b");

    CsvTable t;
    json j;
    if (ev.oracle)
    {
        CorrelationResult const r = ev.oracle(a, b);
        t = {{"value", "numerator", "denominator"}, {{r.value, r.numerator, r.denominator}}};
        j = {{"value", r.value}, {"numerator", r.numerator}, {"denominator", r.denominator}};
    }
    else
    {
        double const v = ev.corr(a, b);
        t = {{"value"}, {{v}}};
        j = {{"value", v}};
    }
    Output out(g.out);
    if (g.format == "json")
        out.os() << j.dump() << '\n';
    else
        write_csv(out.os(), t);
    out.finish();
    return exit_ok;
}

SweepVariable parse_sweep(std::string const& text)
{
    // name:start:stop:count
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 4)
        fail(Errc::parse, "--var expects name:start:stop:count, got '" + text + "'");
    SweepVariable v;
    v.name = parts[0];
    v.start = detail::parse_double(parts[1], 0);
    v.stop = detail::parse_double(parts[2], 0);
    std::size_t used = 0;
    try
    {
        v.count = std::stoi(parts[3], &used);
    }
    catch (std::exception const&)
    {
        used = 0;
    }
    if (used == 0 || used != parts[3].size())
        fail(Errc::parse, "bad sweep count '" + parts[3] + "'");
    return v;
}

int run_scan(GlobalOpts const& g, std::string const& evaluator,
             std::vector<std::string> const& vars, std::vector<std::string> const& sets,
             StateOpts const& s)
{
    ScanSpec spec;
    spec.evaluator = evaluator;
    for (auto const& v : vars)
        spec.variables.push_back(parse_sweep(v));
    spec.fixed.set("mass", g.mass);
    for (auto const& kv : sets)
    {
        auto const eq = kv.find('=');
        if (eq == std::string::npos)
            fail(Errc::parse, "--set expects name=value, got '" + kv + "'");
        spec.fixed.set(kv.substr(0, eq), detail::parse_double(kv.substr(eq + 1), 0));
    }
    spec.fixed.phi = s.spatial_polarization();
    validate(spec);

    CsvTable const t = diracepr::run_scan(spec);
    Output out(g.out);
    write_table(out, g, t);
    out.finish();
    return exit_ok;
}

int run_chsh(GlobalOpts const& g, StateOpts const& s, std::string const& mode)
{
    Evaluator const ev = make_evaluator(s, g.mass);
    ChshConfig cfg;
    cfg.mode = mode == "full" ? ChshMode::full : ChshMode::planar;
    cfg.seed = g.seed;
    ChshResult const r = chsh_max(ev.corr, cfg);

    Output out(g.out);
    if (g.format == "json")
    {
        out.os() << json{{"value", r.value},
                         {"a", direction_json(r.a)},
                         {"a2", direction_json(r.a2)},
                         {"b", direction_json(r.b)},
                         {"b2", direction_json(r.b2)}}
                        .dump()
                 << '\n';
    }
    else
    {
        CsvTable t{{"value", "ax", "ay", "az", "a2x", "a2y", "a2z", "bx", "by", "bz", "b2x",
                    "b2y", "b2z"},
                   {{r.value}}};
        for (Direction const* d : {&r.a, &r.a2, &r.b, &r.b2})
            for (std::size_t i = 0; i < 3; ++i)
                t.rows[0].push_back((*d)[i]);
        write_csv(out.os(), t);
    }
    out.finish();
    return exit_ok;
}

int report_error(Error const& e)
{
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code())
    {
        case Errc::parse:
        case Errc::invalid_argument:
            return exit_usage;
        default:
            return exit_compute;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin correlations of relativistic Dirac particle-antiparticle pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    double tol = 0;
    app.add_option("--mass", g.mass, "particle mass")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for random sampling and search restarts");
    auto* tol_opt = app.add_option("--tol", tol, "override every verify tolerance");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    int samples = 1000;
    auto* verify = app.add_subcommand("verify", "check every algebraic identity on random samples");
    verify->add_option("--samples", samples, "random samples per identity");

    StateOpts eval_state;
    std::vector<double> eval_a;
    std::vector<double> eval_b;
    auto* eval = app.add_subcommand("eval", "correlation for one state and pair of axes");
    eval_state.add_to(eval);
    eval->add_option("--a", eval_a, "particle axis: theta phi, or x y z")->expected(2, 3);
    eval->add_option("--b", eval_b, "antiparticle axis: theta phi, or x y z")->expected(2, 3);

    std::string evaluator;
    std::vector<std::string> vars;
    std::vector<std::string> sets;
    StateOpts scan_state;
    auto* scan = app.add_subcommand("scan", "sweep an evaluator over one or two parameters");
    scan->add_option("--evaluator", evaluator, "evaluator name")
        ->required()
        ->check(CLI::IsMember(evaluator_names()));
    scan->add_option("--var", vars, "name:start:stop:count (outermost first)")->required();
    scan->add_option("--set", sets, "fixed parameter name=value");
    scan->add_option("--phi", scan_state.phi, "polarization real part")->expected(3);
    scan->add_option("--phi-im", scan_state.phi_im, "polarization imaginary part")->expected(3);

    double fig1_beta = 0.999;
    std::vector<double> fig1_phi_b{0.0, std::numbers::pi / 4};
    int fig1_grid = 61;
    auto* fig1 = app.add_subcommand("fig1", "Czachor minus pseudoscalar correlation over (theta_a, theta_b)");
    fig1->add_option("--beta", fig1_beta, "CMF velocity");
    fig1->add_option("--phi-b", fig1_phi_b, "azimuths of b");
    fig1->add_option("--grid", fig1_grid, "points per angle");

    std::vector<double> fig2_theta{0.0};
    int fig2_grid = 73;
    auto* fig2 = app.add_subcommand("fig2", "ultrarelativistic minus rest-frame vector correlation over (phi_a, phi_b)");
    fig2->add_option("--theta", fig2_theta, "angles between n and phi");
    fig2->add_option("--grid", fig2_grid, "points per angle");

    StateOpts chsh_state;
    std::string mode = "planar";
    auto* chsh_cmd = app.add_subcommand("chsh", "maximize the CHSH combination over axes");
    chsh_state.add_to(chsh_cmd);
    chsh_cmd->add_option("--mode", mode, "planar|full")->check(CLI::IsMember({"planar", "full"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (*tol_opt)
        g.tol = tol;

    try
    {
        if (*verify)
            return run_verify(g, samples);
        if (*eval)
            return run_eval(g, eval_state, eval_a, eval_b);
        if (*scan)
            return run_scan(g, evaluator, vars, sets, scan_state);
        if (*chsh_cmd)
            return run_chsh(g, chsh_state, mode);

        CsvTable t;
        if (*fig1)
            t = fig1_table(fig1_beta, fig1_phi_b, fig1_grid);
        else
            t = fig2_table(fig2_theta, fig2_grid);
        Output out(g.out);
        write_table(out, g, t);
        out.finish();
        return exit_ok;
    }
    catch (Error const& e)
    {
        return report_error(e);
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_compute;
    }
}
