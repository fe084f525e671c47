// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include "oracle.hpp"

#include "ionforge/budget.hpp"
#include "ionforge/cli.hpp"
#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"
#include "ionforge/explorer.hpp"
#include "ionforge/optics.hpp"
#include "ionforge/report.hpp"
#include "ionforge/trapchip.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ionforge;

namespace {

const std::string kFixtures = IONFORGE_FIXTURES;

class Criterion
{
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back(what);
    }

    void near(double actual, double expected, double rel, const std::string& what)
    {
        const bool ok = std::abs(actual / expected - 1.0) <= rel;
        expect(ok, what + ": " + fmt(actual) + " vs " + fmt(expected) + " +/-" + fmt(rel * 100) + "%");
    }

    void within(double actual, double lo, double hi, const std::string& what)
    {
        expect(actual >= lo && actual <= hi, what + ": " + fmt(actual) + " not in [" + fmt(lo) + ", " + fmt(hi) + "]");
    }

    void exact(long long actual, long long expected, const std::string& what)
    {
        expect(actual == expected, what + ": " + std::to_string(actual) + " != " + std::to_string(expected));
    }

    bool report() const
    {
        std::printf("%s %s\n", failures_.empty() ? "PASS" : "FAIL", name_.c_str());
        for (const auto& f : failures_)
            std::printf("    %s\n", f.c_str());
        return failures_.empty();
    }

private:
    static std::string fmt(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    std::string name_;
    std::vector<std::string> failures_;
};

DesignConfig fixture(const std::string& name) { return load_design(kFixtures + "/" + name + ".yaml").config; }

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr)
{
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out)
        *out = o.str();
    return code;
}

bool criterion1()
{
    Criterion c("1 optical block regression (Cd+)");
    const auto d = derive(fixture("cd_default"));
    const auto& r = d.raman;
    c.near(r.saturation_intensity, 11700, 0.02, "I0");
    c.near(r.recoil_frequency, 39e3, 0.02, "R");
    c.near(r.scattering_floor, 5.3e-6, 0.02, "P0");
    c.near(r.lamb_dicke, 0.07, 0.02, "eta");
    c.near(r.rabi_frequency, 2 * oracle::pi * 14e6, 0.03, "Omega_R");
    c.near(r.intensity_at_floor / 1e9, 9.2, 0.03, "I_P0 [mW/um^2]");
    c.near(r.intensity / 1e9, 18, 0.03, "I [mW/um^2]");
    c.near(r.beam_power, 0.220, 0.03, "beam power");
    c.near(r.total_power, 440, 0.03, "total power");
    c.near(d.readout.measurement_time, 7.2e-6, 0.02, "t_m");
    c.near(d.readout.p_meas_error, 5.0e-4, 0.02, "P(0 or 1)");
    return c.report();
}

bool criterion2()
{
    Criterion c("2 trapping, electrical and thermal regression");
    const auto d = derive(fixture("cd_default"));
    const auto& t = d.trap;
    c.near(t.radial.secular_frequency, 70e6, 0.02, "nu_r");
    c.near(t.radial.rf_drive / (2 * oracle::pi), 660e6, 0.02, "Omega/2pi");
    c.near(t.radial.v_rms, 106, 0.02, "V_rms");
    c.near(t.electrical.area / 1e-4, 0.3, 0.10, "area [cm^2]");
    c.exact(t.electrical.n_electrodes, 158580, "electrodes");
    c.near(t.electrical.capacitance_per_pbit / 1e-12, 0.002, 0.15, "C [pF]");
    c.near(d.thermal.thermal_gate_error, 5e-5, 0.10, "P_nbar");
    c.near(d.thermal.cooling_time, 0.4e-6, 0.10, "tau_cool");
    c.near(d.thermal.gate_heating, 5e-4, 0.10, "delta nbar");
    const double rate = trapchip::heating_rate(10e-6 * 10, 1e-26, d.raman.stretch_frequency, d.config.species.mass());
    c.within(rate, 1000.0 / 2, 1000.0 * 2, "gate-zone heating rate from the noise model [1/s]");
    return c.report();
}

bool criterion3()
{
    Criterion c("3 documented-discrepancy handling");
    const auto d = derive(DesignConfig{});
    c.near(d.trap.split_frequency_formula, 38e6, 0.02, "nu_spl formula");
    c.near(d.trap.electrical.rf_power, 0.27, 0.02, "r.f. power formula");
    c.near(d.trap.split_frequency_anchored, 15e6, 1e-12, "nu_spl anchored");
    c.near(d.trap.rf_power_anchored, 24e-3, 1e-12, "r.f. power anchored");
    c.expect(d.trap.split_frequency_used == d.trap.split_frequency_anchored, "timing chain uses anchored nu_spl");
    const double expected_tg = 2 / 15e6 + 10 / d.trap.radial.secular_frequency + d.thermal.cooling_time +
                               d.config.optics.phase_gate_time;
    c.near(d.logical.gate_time, expected_tg, 1e-14, "tau_g built on the anchored nu_spl");

    const auto rep = report::build_report(d, explorer::check_constraints(d));
    auto row_footnoted = [&](const std::string& key) {
        for (const auto* tables : {&rep.table1, &rep.table2})
            for (const auto& s : *tables)
                for (const auto& row : s.rows)
                    if (row.key == key)
                        return !row.footnotes.empty();
        return false;
    };
    for (const char* key : {"trap.split_frequency_formula", "trap.split_frequency_anchored", "chip.rf_power_formula",
                            "chip.rf_power_anchored"})
        c.expect(row_footnoted(key), std::string("footnoted row ") + key);
    const auto human = report::render_report(rep, report::Format::Human);
    c.expect(human.find("15 MHz") != std::string::npos && human.find("38.38 MHz") != std::string::npos &&
                 human.find("267.6 mW") != std::string::npos && human.find("24 mW") != std::string::npos,
             "human report shows formula and anchored values");
    return c.report();
}

bool criterion4()
{
    Criterion c("4 logical budget regression (Cd+)");
    const auto d = derive(fixture("cd_default"));
    const auto& l = d.logical;
    c.exact(l.blocks, 12, "b");
    c.exact(l.n_parallel, 990, "N_P");
    c.exact(l.parallel_measurements, 1524, "parallel measurements");
    c.exact(l.bits_per_block, 537, "bits per block");
    c.near(l.gate_time, 1.2e-6, 0.05, "tau_g");
    c.within(l.logical_rate, 7.3e3, 8.0e3, "logical rate");
    c.within(l.gamma2, 9e-5, 1.1e-4, "gamma2");
    c.expect(budget::crash_probability(1e-4) == 1e-10, "crash p at the anchor");
    c.within(l.n_logical_gates, 5e8, 2e9, "n. logical gates");
    return c.report();
}

bool criterion5()
{
    Criterion c("5 Ca+ cross-check");
    const auto d = derive(fixture("ca_default"));
    c.expect(d.config.species.data_provenance == DataProvenance::ExternalReference, "Ca+ marked external");
    c.within(d.raman.lamb_dicke, 0.06 - 0.005, 0.06 + 0.005, "eta");
    c.near(d.logical.gate_time, 1.08e-6, 0.10, "tau_g");
    c.within(d.raman.total_power, 100.0 / 2, 100.0 * 2, "total laser power");
    return c.report();
}

bool criterion6()
{
    Criterion c("6 property suites");
    const auto cd = load_species("Cd+");
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // (a) scattering round trip
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        optics::RamanConfig cfg;
        cfg.phase_gate_time = std::pow(10.0, -7.5 + 2 * unit(rng));
        cfg.beam_radius = 1e-6 + 1e-5 * unit(rng);
        cfg.n_parallel = 1 + static_cast<long long>(2000 * unit(rng));
        const double eta = std::sqrt(optics::recoil_frequency(cd) * cfg.phase_gate_time / 4);
        cfg.scattering_target = eta * optics::scattering_floor(cd) * (1.001 + 1000 * unit(rng));
        const auto r = optics::derive_raman(cd, cfg);
        worst = std::max(worst, std::abs(optics::scattering_infidelity(r.intensity, r) / cfg.scattering_target - 1));
    }
    c.expect(worst < 1e-12, "(a) round trip worst relative error " + std::to_string(worst));

    // (b) Eq. 1 invariant along a tau_p sweep, scattering-dominated points only
    std::vector<double> inv;
    optics::RamanConfig cfg;
    cfg.scattering_target = 1e-3;
    for (double tau = 1e-7; tau <= 1e-5; tau *= 1.25) {
        cfg.phase_gate_time = tau;
        const auto r = optics::derive_raman(cd, cfg);
        if (r.lamb_dicke * r.scattering_floor < 0.01 * cfg.scattering_target)
            inv.push_back(tau * std::sqrt(r.intensity * cd.wavelength * cfg.scattering_target / cd.mass()));
    }
    const auto [lo, hi] = std::ranges::minmax(inv);
    c.expect(inv.size() > 5 && hi / lo - 1 < 0.02, "(b) tau_p sqrt(I lambda eps/m) spread " + std::to_string(hi / lo - 1));

    // (c) power-law ratios
    auto ratio = [&](double got, double want, const char* what) {
        c.expect(std::abs(got / want - 1) < 4e-16 * 4, std::string("(c) ") + what);
    };
    const double ns = trapchip::split_frequency(111, 0.02, 2e8, 10e-6);
    ratio(trapchip::split_frequency(111, 0.02, 4e8, 10e-6) / ns, std::pow(2.0, 0.3), "nu_spl ~ E^0.3");
    ratio(trapchip::split_frequency(111, 0.02, 2e8, 20e-6) / ns, std::pow(2.0, -0.9), "nu_spl ~ rho^-0.9");
    const double nr = trapchip::radial_chain(111, 0.3, 0.15, 1e8, 10e-6).secular_frequency;
    ratio(trapchip::radial_chain(111, 0.3, 0.15, 4e8, 10e-6).secular_frequency / nr, 2.0, "nu_r ~ E_rf^0.5");
    ratio(trapchip::radial_chain(111, 0.3, 0.15, 1e8, 40e-6).secular_frequency / nr, 0.5, "nu_r ~ rho^-0.5");
    const double hr = trapchip::heating_rate(1e-4, 1e-26, 8e6, cd.mass());
    ratio(trapchip::heating_rate(2e-4, 1e-26, 8e6, cd.mass()) / hr, 1.0 / 16, "heating ~ rho^-4");
    ratio(trapchip::heating_rate(1e-4, 1e-26, 16e6, cd.mass()) / hr, 0.5, "heating ~ nu^-1");

    // (d) logical rate decreasing in each timing input
    const double base = budget::logical_gate_rate(47, 1.2e-6, 7.2e-6, 5e-6);
    bool mono = true;
    for (int i = 0; i < 200; ++i) {
        const double f = 1 + unit(rng);
        mono &= budget::logical_gate_rate(48 + i, 1.2e-6, 7.2e-6, 5e-6) < base;
        mono &= budget::logical_gate_rate(47, 1.2e-6 * f, 7.2e-6, 5e-6) < base;
        mono &= budget::logical_gate_rate(47, 1.2e-6, 7.2e-6 * f, 5e-6) < base;
        mono &= budget::logical_gate_rate(47, 1.2e-6, 7.2e-6, 5e-6 * f) < base;
    }
    c.expect(mono, "(d) logical rate monotonicity");

    // (e) crash probability doubling, below the p = 1 saturation
    bool exact128 = true;
    for (int i = 0; i < 1000; ++i) {
        const double g = std::pow(10.0, -7 + 4 * unit(rng));
        exact128 &= budget::crash_probability(2 * g) == 128 * budget::crash_probability(g);
    }
    c.expect(exact128, "(e) crash probability x128 under doubling");
    return c.report();
}

bool criterion7()
{
    Criterion c("7 solver and optimizer oracles");
    const auto cd = load_species("Cd+");
    const double rho = explorer::solve_rho_heating_bound(cd, 0.02, 2e8, 1e-26);

    // grid oracle: 1e4 log points, linear interpolation of log excess
    const double a = std::log(0.1e-6), b = std::log(1e-3);
    double grid = NAN, prev_r = 0, prev_x = 0;
    for (int i = 0; i < 10000; ++i) {
        const double r = std::exp(a + (b - a) * i / 9999.0);
        const double x = std::log(oracle::split_phonons(r, 111, 0.02, 2e8, 1e-26));
        if (x <= 0 && i > 0) {
            grid = std::exp(std::log(prev_r) + prev_x / (prev_x - x) * (std::log(r) - std::log(prev_r)));
            break;
        }
        prev_r = r;
        prev_x = x;
    }
    c.near(rho, grid, 1e-3, "rho_min vs grid scan");
    c.within(rho, 5e-6 / 3, 5e-6 * 3, "rho_min within a factor 3 of 5 um");

    explorer::OptimizeSpec spec;
    spec.parameters = {{"optics.tau_p", 1e-7, 1e-6, 7, explorer::Scale::Log}, {"optics.epsilon_s", 2e-5, 1e-4, 7}};
    spec.objective = "optics.total_power";
    spec.constraints = {{"budget.logical_rate", ">=", 6000}};
    const auto base = fixture("cd_default");
    const auto best = explorer::optimize(base, spec);
    c.expect(best.found, "optimizer found a feasible point");
    for (unsigned seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double sample_best = INFINITY;
        for (int i = 0; i < 100; ++i) {
            auto cfg = base;
            cfg.optics.phase_gate_time = 1e-7 * std::pow(10.0, unit(rng));
            cfg.optics.scattering_target = 2e-5 + 8e-5 * unit(rng);
            const auto d = derive(cfg);
            if (explorer::point_feasible(d, spec.constraints))
                sample_best = std::min(sample_best, d.raman.total_power);
        }
        c.expect(best.objective <= sample_best, "optimize vs random sample, seed " + std::to_string(seed));
    }
    return c.report();
}

bool criterion8()
{
    Criterion c("8 scenario checks");
    const auto d = derive(fixture("cd_default"));
    const auto one = explorer::scenario_ancilla_pipelining(d, 1);
    c.expect(one.logical.logical_rate == d.logical.logical_rate && one.logical.gate_time == d.logical.gate_time &&
                 one.total_laser_power == d.raman.total_power && one.n_electrodes == d.trap.electrical.n_electrodes,
             "pipelining s = 1 identity");
    const auto full = explorer::scenario_ancilla_pipelining(d, 2.0 * d.config.encoding.ancilla_width);
    c.near(full.logical.logical_rate, 49e3, 0.05, "pipelining s = 2w rate");

    const auto three = explorer::scenario_measurement_redundancy(d, 3);
    c.near(three.measurement_time, 3.4e-6, 0.05, "redundancy k = 3 t_m'");
    int best_k = 1;
    double best_t = INFINITY;
    for (int k = 1; k <= 15; k += 2) {
        const double t = d.readout.measurement_time / k + (k - 1) * d.config.optics.phase_gate_time;
        if (t < best_t) {
            best_t = t;
            best_k = k;
        }
    }
    c.exact(explorer::optimal_redundancy(d.readout.measurement_time, d.config.optics.phase_gate_time), best_k,
            "odd-k optimum vs brute-force scan");
    return c.report();
}

bool criterion9()
{
    Criterion c("9 CLI determinism and fixture suite");
    const auto start = std::chrono::steady_clock::now();
    std::string a, b;
    const auto file = kFixtures + "/cd_default.yaml";
    c.expect(run_cli({"derive", file, "--format", "machine"}, &a) == 0, "derive exit code");
    run_cli({"derive", file, "--format", "machine"}, &b);
    c.expect(!a.empty() && a == b, "two derive runs byte-identical");

    for (const char* name : {"cd_default", "ca_default", "cd_rho1um", "cd_scenarios"}) {
        const auto f = load_design(kFixtures + "/" + name + ".yaml");
        c.expect(parse_design(serialize_design(f)) == f, std::string("round trip ") + name);
    }

    c.exact(run_cli({"derive", kFixtures + "/ca_default.yaml", "--format", "machine"}), 0, "derive Ca+");
    c.exact(run_cli({"check", file}), 0, "check default");
    c.exact(run_cli({"check", kFixtures + "/cd_rho1um.yaml"}), 2, "check rho = 1 um");
    c.exact(run_cli({"sweep", kFixtures + "/cd_scenarios.yaml"}), 0, "sweep");
    c.exact(run_cli({"optimize", kFixtures + "/cd_scenarios.yaml"}), 0, "optimize");
    c.exact(run_cli({"scenario", kFixtures + "/cd_scenarios.yaml"}), 0, "scenario");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.within(secs, 0, 30, "fixture suite wall time [s]");
    return c.report();
}

}  // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};
    int failed = 0;
    for (const auto& run : criteria) {
        try {
            failed += run() ? 0 : 1;
        } catch (const std::exception& e) {
            std::printf("FAIL (exception: %s)\n", e.what());
            ++failed;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
