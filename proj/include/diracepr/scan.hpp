#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "correlations.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "figures.hpp"
#include "states.hpp"

namespace diracepr
{
/*!
 * Named scalar parameters shared by the point evaluators.
 *
 * Directions a, b and the CMF axis n are given by spherical angles
 * (theta_*, phi_*); lab momenta by kx..kz (antiparticle) and px..pz
 * (particle); beta sets |k| = m beta / sqrt(1 - beta^2) along n in the CMF.
 */
struct ParameterSet
{
    std::map<std::string, double> values{
        {"mass", 1.0},   {"beta", 0.0},    {"theta_a", 0.0}, {"phi_a", 0.0},
        {"theta_b", 0.0}, {"phi_b", 0.0},  {"theta_n", 0.0}, {"phi_n", 0.0},
        {"kx", 0.0},     {"ky", 0.0},      {"kz", 0.0},      {"px", 0.0},
        {"py", 0.0},     {"pz", 0.0},
    };
    CVec3 phi{0.0, 0.0, 1.0};

    static bool known(std::string const& name)
    {
        return ParameterSet{}.values.count(name) != 0;
    }

    double get(std::string const& name) const { return values.at(name); }

    void set(std::string const& name, double v)
    {
        require(known(name), Errc::invalid_argument, ("unknown parameter '" + name + "'").c_str());
        require(std::isfinite(v), Errc::invalid_argument, "parameter must be finite");
        values[name] = v;
    }

    double mass() const { return get("mass"); }
    Direction a() const { return Direction::spherical(get("theta_a"), get("phi_a")); }
    Direction b() const { return Direction::spherical(get("theta_b"), get("phi_b")); }
    Direction n() const { return Direction::spherical(get("theta_n"), get("phi_n")); }

    //! Antiparticle momentum in the CMF: |k| from beta, along n.
    FourVector cmf_k() const
    {
        double const beta = get("beta");
        require(beta >= 0 && beta < 1, Errc::invalid_argument, "beta must lie in [0, 1)");
        double const m = mass();
        double const kmag = m * beta / std::sqrt((1 - beta) * (1 + beta));
        return on_shell(kmag * n().vec(), m);
    }
    FourVector lab_k() const { return on_shell({get("kx"), get("ky"), get("kz")}, mass()); }
    FourVector lab_p() const { return on_shell({get("px"), get("py"), get("pz")}, mass()); }
};

//! Evaluator names accepted by \c evaluate and the scan command.
inline std::vector<std::string> const& evaluator_names()
{
    static std::vector<std::string> const names{
        "pseudoscalar-cmf",  // trace oracle, CMF momenta from beta and n
        "pseudoscalar",      // trace oracle, lab momenta k, p
        "pseudoscalar-closed",
        "czachor",
        "czachor-ultra",
        "delta-c",
        "vector-cmf",        // trace oracle, spatial phi, CMF momenta
        "vector-cmf-closed",
        "vector-ultra",
        "delta-c-vector",
        "triplet",
    };
    return names;
}

inline double evaluate(std::string const& evaluator, ParameterSet const& ps)
{
    double const m = ps.mass();
    auto const a = ps.a();
    auto const b = ps.b();
    if (evaluator == "pseudoscalar-cmf")
    {
        FourVector const k = ps.cmf_k();
        return correlate_oracle(pseudoscalar_kernel(k, parity(k), m), a, b).value;
    }
    if (evaluator == "pseudoscalar")
        return correlate_oracle(pseudoscalar_kernel(ps.lab_k(), ps.lab_p(), m), a, b).value;
    if (evaluator == "pseudoscalar-closed")
        return correlation_pseudoscalar_sharp(ps.lab_k(), ps.lab_p(), m, a, b);
    if (evaluator == "czachor")
        return correlation_czachor_cmf(ps.n(), ps.get("beta"), a, b);
    if (evaluator == "czachor-ultra")
        return correlation_czachor_ultra(ps.n(), a, b);
    if (evaluator == "delta-c")
        return delta_c_pseudoscalar(ps.n(), ps.get("beta"), a, b);
    if (evaluator == "vector-cmf")
    {
        FourVector const k = ps.cmf_k();
        auto const kernel = vector_kernel(k, parity(k), Polarization::spatial(ps.phi), m);
        return correlate_oracle(kernel, a, b).value;
    }
    if (evaluator == "vector-cmf-closed")
        return correlation_vector_cmf(ps.cmf_k(), m, ps.phi, a, b);
    if (evaluator == "vector-ultra")
        return correlation_vector_ultra(ps.n(), ps.phi, a, b);
    if (evaluator == "delta-c-vector")
        return delta_c_vector(ps.n(), ps.phi, a, b);
    if (evaluator == "triplet")
        return correlation_triplet_nonrel(ps.phi, a, b);
    fail(Errc::invalid_argument, "unknown evaluator '" + evaluator + "'");
}

struct SweepVariable
{
    std::string name;
    double start;
    double stop;
    int count;
};

struct ScanSpec
{
    std::string evaluator;
    std::vector<SweepVariable> variables;  //!< outermost first
    ParameterSet fixed;
};

//! Throws InvalidArgument for malformed specs; evaluation is not attempted.
inline void validate(ScanSpec const& spec)
{
    auto const& names = evaluator_names();
    require(std::find(names.begin(), names.end(), spec.evaluator) != names.end(),
            Errc::invalid_argument, "unknown evaluator");
    require(!spec.variables.empty() && spec.variables.size() <= 2, Errc::invalid_argument,
            "a scan sweeps one or two variables");
    for (auto const& v : spec.variables)
    {
        require(ParameterSet::known(v.name), Errc::invalid_argument, "unknown sweep variable");
        require(v.count >= 2, Errc::invalid_argument, "sweep count must be at least 2");
        require(std::isfinite(v.start) && std::isfinite(v.stop), Errc::invalid_argument,
                "sweep range must be finite");
    }
    if (spec.variables.size() == 2)
        require(spec.variables[0].name != spec.variables[1].name, Errc::invalid_argument,
                "sweep variables must differ");
}

//! Columns: swept variable names then `value`; rows in outer-to-inner order.
inline CsvTable run_scan(ScanSpec const& spec)
{
    validate(spec);
    CsvTable t;
    for (auto const& v : spec.variables)
        t.header.push_back(v.name);
    t.header.push_back("value");

    auto const outer = linspace(spec.variables[0].start, spec.variables[0].stop,
                                spec.variables[0].count);
    std::vector<double> inner{0.0};
    if (spec.variables.size() == 2)
        inner = linspace(spec.variables[1].start, spec.variables[1].stop,
                         spec.variables[1].count);

    ParameterSet ps = spec.fixed;
    for (double x : outer)
    {
        ps.set(spec.variables[0].name, x);
        for (double y : inner)
        {
            std::vector<double> row{x};
            if (spec.variables.size() == 2)
            {
                ps.set(spec.variables[1].name, y);
                row.push_back(y);
            }
            row.push_back(evaluate(spec.evaluator, ps));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace diracepr
