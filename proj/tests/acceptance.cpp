// Acceptance suite: one pass/fail line per criterion, pinned tolerances.
//
// The reference dynamics run (criterion 5) is shared by criteria 6 and 9; the
// resolution-doubled companion run dominates the wall time on one core.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "axivort/biot_savart.hpp"
#include "axivort/dynamics.hpp"
#include "axivort/experiments.hpp"
#include "axivort/field.hpp"
#include "axivort/inequalities.hpp"
#include "axivort/io.hpp"
#include "axivort/kernels.hpp"
#include "harness.hpp"

using namespace axivort;
using harness::record;
namespace fs = std::filesystem;

namespace {

const EvalOptions kFast{true, 0};
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------- 1
void criterion1_closed_form() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double s = 1e-4 * std::pow(1e8, i / 49.0);
        const long double ls = s;
        const double want = static_cast<double>(0.25L * ((2.0L + ls) * std::log1p(4.0L / ls) - 4.0L));
        worst = std::max(worst, std::abs(elliptic_f({4, 0, 1e-10}, s) / want - 1.0));
    }
    record("criterion 1: F_(4) closed form, 50 pts in [1e-4,1e4], rel < 1e-8", worst < 1e-8,
           "(worst=" + num(worst) + ")");
}

// ---------------------------------------------------------------------- 2
void criterion2_kernel_decay() {
    bool ok = true;
    double worst_stab = 0.0;
    for (int d = 3; d <= 6; ++d) {
        for (int ell = 1; ell <= 2; ++ell) {
            const auto base = verify_kernel_bounds({d, ell, 1e-10}, 1e-6, 1e6, 200);
            const auto fine = verify_kernel_bounds({d, ell, 1e-10}, 1e-6, 1e6, 400);
            const double stab = std::abs(fine.empirical_constant / base.empirical_constant - 1.0);
            worst_stab = std::max(worst_stab, stab);
            ok = ok && std::isfinite(base.empirical_constant) && base.empirical_constant > 0.0 &&
                 stab < 0.05;
        }
    }
    record("criterion 2: decay constants finite, < 5% under grid doubling (d=3..6, ell=1,2)", ok,
           "(worst stability=" + num(worst_stab) + ")");
}

// ---------------------------------------------------------------------- 3
void criterion3_oracle_equivalence() {
    SplitMix64 rng(424242);
    double worst = 0.0;
    int pairs = 0;
    while (pairs < 20) {
        const double rr = rng.uniform(0.7, 2.0);
        const double rz = rng.uniform(-1.0, 1.0);
        const double amp = rng.uniform(0.5, 2.0) * (rng.uniform01() < 0.5 ? -1 : 1);
        const VorticityField ring = make_single_ring({rr, rz}, 0.004 * rr, amp, 8, 3, 0.0);
        double gamma = 0.0;
        for (std::size_t i = 0; i < ring.elements.size(); ++i)
            gamma += ring.omega(i) * ring.elements[i].area;
        const double ang = rng.uniform(0.0, 2.0 * M_PI);
        const double dist = rng.uniform(0.8, 2.0) * rr;
        const HalfPlanePoint p{rr + dist * std::cos(ang), rz + dist * std::sin(ang)};
        if (p.r < 0.25 * rr) continue;
        const Velocity o = oracle_3d_ring_velocity(rr, rz, gamma, p, 512);
        const double mag = std::hypot(o.ur, o.uz);
        if (mag < 1e-3 * std::abs(gamma) / rr) continue;
        const Velocity v = velocity_at(ring, p);
        worst = std::max(worst, std::hypot(v.ur - o.ur, v.uz - o.uz) / mag);
        ++pairs;
    }
    record("criterion 3: velocityAt vs direct 3D Biot-Savart, 20 pairs, rel < 1e-4", worst < 1e-4,
           "(worst=" + num(worst) + ")");
}

// ---------------------------------------------------------------------- 4
void criterion4_energy() {
    const VorticityField ring = make_single_ring({1.0, 0.0}, 0.25, 1.0, 36, 3, -1.0);
    const double stream = kinetic_energy(ring, kFast).value;
    const double grid = kinetic_energy_grid(ring, kFast, 48, 96).value;
    const double mismatch = std::abs(stream / grid - 1.0);
    record("criterion 4a: stream double sum vs grid quadrature < 1%", mismatch < 0.01,
           "(mismatch=" + num(mismatch) + ")");
    double worst_expo = 0.0;
    for (double lambda : {0.5, 2.0}) {
        const double scaled = kinetic_energy(rescale(ring, lambda, 0.0), kFast).value;
        const double expo = std::log(scaled / stream) / std::log(lambda);
        worst_expo = std::max(worst_expo, std::abs(expo + 1.5));
    }
    record("criterion 4b: rescale energy exponent -d/2 within 1e-3", worst_expo < 1e-3,
           "(worst dev=" + num(worst_expo) + ")");
}

// ------------------------------------------------------------------- 5,6,9
struct DipoleRun {
    SimulationResult sim;
    VorticityField initial;
    double drift_l1 = 0.0, drift_linf = 0.0;
};

DipoleRun reference_dipole_run(int resolution, double dt, int diag_every) {
    DipoleRun out;
    const DipoleParams params{{1.0, 1.0}, 0.25, 0.5, resolution};
    out.initial = make_dipole(params);
    SimConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 5.0;
    cfg.diag_every = diag_every;
    cfg.eval = kFast;
    out.sim = run_simulation(out.initial, cfg);
    for (const auto& r : out.sim.records) {
        out.drift_l1 = std::max(out.drift_l1,
                                std::abs(r.relvort_L1 / out.sim.records[0].relvort_L1 - 1.0));
        out.drift_linf = std::max(
            out.drift_linf, std::abs(r.relvort_Linf / out.sim.records[0].relvort_Linf - 1.0));
    }
    return out;
}

void criteria_5_6_9(const DipoleRun& ref, const DipoleRun& doubled, double C_key, double C_global) {
    // 5: conservation at reference resolution, halving (or roundoff floor) under doubling.
    const double drift_ref = std::max(ref.drift_l1, ref.drift_linf);
    const double drift_dbl = std::max(doubled.drift_l1, doubled.drift_linf);
    const bool halved = drift_dbl <= std::max(0.625 * drift_ref, 1e-9);
    record("criterion 5: relvort L1/Linf drift < 1e-3 at ~2000 elements, halving under doubling",
           drift_ref < 1e-3 && halved,
           "(ref=" + num(drift_ref) + ", doubled=" + num(drift_dbl) + ")");

    // 6: monotone moments on the reference run.
    const auto& recs = ref.sim.records;
    bool mono = true;
    for (std::size_t i = 1; i < recs.size(); ++i) {
        mono = mono && recs[i].I_r2 >= recs[i - 1].I_r2 - 1e-6 &&
               recs[i].I_z <= recs[i - 1].I_z + 1e-6;
    }
    record("criterion 6: I_r2 nondecreasing and I_z nonincreasing (1e-6 slack)", mono);

    // 9: pathwise theorem checks on every conservation-passing run + growth fit.
    bool pathwise = true;
    std::string detail;
    for (const auto* run : {&ref, &doubled}) {
        if (std::max(run->drift_l1, run->drift_linf) >= 1e-3) continue;
        const auto traj = trajectory_bound_check(run->sim.records, C_key, 3);
        const auto thm = theorem13_monitor(run->sim.records, C_global);
        pathwise = pathwise && traj.pass && thm.pass;
        detail += " traj=" + num(traj.max_ratio) + " thm13=" + num(thm.max_ratio);
    }
    std::vector<double> t, R;
    for (const auto& r : recs) {
        t.push_back(r.t);
        R.push_back(r.R);
    }
    const GrowthFit fit = fit_growth_exponent(t, R, 2.5, 5.0 + 1e-9, "R");
    const bool beta_ok = fit.beta <= 4.0 / 3.0 + 0.15;
    record("criterion 9: trajectory/theorem-1.3 monitors pass; fitted beta <= 4/3 + 0.15",
           pathwise && beta_ok, "(beta=" + num(fit.beta) + "," + detail + ")");
}

// ---------------------------------------------------------------------- 7
struct CorpusConstants {
    double key = 0.0, global = 0.0;
};

CorpusConstants criterion7_harness() {
    CorpusParams cp;
    cp.n_fields = 200;  // first 100 = base corpus, rest = the doubling check
    const auto corpus = build_random_corpus(cp);
    double key100 = 0, key200 = 0, glob100 = 0, glob200 = 0, fs100 = 0, fs200 = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double ck = check_key_estimate(corpus[i], kFast).empirical_constant;
        const double cg = check_global_estimate(corpus[i], kFast).empirical_constant;
        const double cf = check_feng_sverak(corpus[i], kFast).empirical_constant;
        if (i < 100) {
            key100 = std::max(key100, ck);
            glob100 = std::max(glob100, cg);
            fs100 = std::max(fs100, cf);
        }
        key200 = std::max(key200, ck);
        glob200 = std::max(glob200, cg);
        fs200 = std::max(fs200, cf);
    }
    const double stab = std::max({key200 / key100, glob200 / glob100, fs200 / fs100}) - 1.0;
    const bool finite = std::isfinite(key100) && std::isfinite(glob100) && std::isfinite(fs100) &&
                        key100 > 0 && glob100 > 0 && fs100 > 0;
    record("criterion 7a: corpus constants finite, max stable (+-10%) under doubling",
           finite && stab <= 0.10,
           "(key=" + num(key100) + ", global=" + num(glob100) + ", fs=" + num(fs100) +
               ", stab=" + num(stab) + ")");

    const std::vector<double> lambdas = {0.5, 2.0, 10.0};
    bool scaling_ok = true, detect_ok = true;
    double worst_dev = 0.0;
    const std::vector<std::pair<InequalityName, std::string>> combos = {
        {InequalityName::key_R14, "relvort_Linf"},
        {InequalityName::global_energy, "r_omega_L1"},
        {InequalityName::feng_sverak, "r_omega_L1"},
    };
    for (const auto& [name, norm] : combos) {
        const auto clean = scaling_invariance_suite(name, corpus[0], lambdas, kFast);
        const auto bumped = scaling_invariance_suite(name, corpus[0], lambdas, kFast, norm, 0.01);
        worst_dev = std::max(worst_dev, clean.max_deviation);
        scaling_ok = scaling_ok && clean.pass;
        detect_ok = detect_ok && bumped.max_deviation > 1e-2;
    }
    record("criterion 7b: scaling suite < 1e-6 and detects +-0.01 exponent perturbation",
           scaling_ok && detect_ok, "(worst clean dev=" + num(worst_dev) + ")");
    return {key100, glob100};
}

// ---------------------------------------------------------------------- 8
void criterion8_exponents() {
    const auto fs_sol = solve_exponents(feng_sverak_system());
    const auto ge = solve_exponents(global_energy_system());
    const bool ok = fs_sol.alpha == Rational(1, 2) && fs_sol.beta == Rational(1, 4) &&
                    fs_sol.gamma == Rational(1, 4) && ge.alpha == Rational(1, 3) &&
                    ge.beta == Rational(1, 2) && ge.gamma == Rational(1, 6);
    record("criterion 8: exponent solver returns (1/2,1/4,1/4) and (1/3,1/2,1/6) exactly", ok,
           "(" + fs_sol.alpha.str() + "," + fs_sol.beta.str() + "," + fs_sol.gamma.str() + ") (" +
               ge.alpha.str() + "," + ge.beta.str() + "," + ge.gamma.str() + ")");
}

// ---------------------------------------------------------------------- 10
void criterion10_highd() {
    bool ok = true;
    std::string detail;
    for (int d : {4, 5}) {
        CorpusParams cp;
        cp.seed = 20240817 + d;
        cp.n_fields = 40;
        cp.d = d;
        cp.resolution = 10;
        const auto corpus = build_random_corpus(cp);
        double c20 = 0, c40 = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const double c = check_key_estimate_highd(corpus[i], kFast).empirical_constant;
            if (i < 20) c20 = std::max(c20, c);
            c40 = std::max(c40, c);
        }
        ok = ok && std::isfinite(c20) && c20 > 0 && (c40 / c20 - 1.0) <= 0.10;
        detail += " d" + std::to_string(d) + "=" + num(c20);
    }
    const std::vector<int> dims = {3, 4, 5, 6};
    const auto table = highd_growth_table(dims);
    const bool table_ok = table[0].exponent == Rational(4, 3) && table[1].exponent == Rational(2) &&
                          table[2].exponent == Rational(4) && table[3].exponential;
    record("criterion 10: high-d constants stable; growth table {3:4/3, 4:2, 5:4, 6:exp}",
           ok && table_ok, "(" + detail + " )");
}

// ---------------------------------------------------------------------- 11
int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion11_determinism() {
    const char* bin = std::getenv("AXIVORT_BIN");
    if (!bin) {
        record("criterion 11: determinism across 1/4/8 workers", false, "(AXIVORT_BIN not set)");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "axivort_acceptance";
    fs::create_directories(dir);
    const nlohmann::json configs[] = {
        {{"experiment", "single_ring"},
         {"sim", {{"dt", 0.05}, {"t_end", 0.5}, {"diag_every", 1}}},
         {"ring", {{"radius", 0.15}, {"amplitude", 2.0}, {"resolution", 12}}}},
        {{"experiment", "inequality_corpus"},
         {"corpus", {{"n_fields", 8}, {"check_doubling", false}}}},
        {{"experiment", "kernel_bounds"}, {"kernel_bounds", {{"n", 32}}}},
    };
    bool ok = true;
    std::string why;
    for (const auto& cfg : configs) {
        const std::string name = cfg.at("experiment").get<std::string>();
        const fs::path cfg_path = dir / (name + ".json");
        {
            std::ofstream out(cfg_path);
            out << cfg.dump(2);
        }
        std::string ref_csv, ref_json, ref_plot;
        for (int workers : {1, 4, 8}) {
            const fs::path out_dir = dir / (name + "_w" + std::to_string(workers));
            const int code = shell("AXIVORT_THREADS=" + std::to_string(workers) + " " +
                                   std::string(bin) + " run " + cfg_path.string() + " --out " +
                                   out_dir.string() + " > /dev/null");
            if (code != 0 && code != 2) {
                ok = false;
                why = name + " exited " + std::to_string(code);
                break;
            }
            const std::string csv = read_text_file((out_dir / "diagnostics.csv").string());
            const std::string rep = read_text_file((out_dir / "report.json").string());
            const std::string plot = read_text_file((out_dir / "plot.dat").string());
            if (workers == 1) {
                ref_csv = csv;
                ref_json = rep;
                ref_plot = plot;
            } else if (csv != ref_csv || rep != ref_json || plot != ref_plot) {
                ok = false;
                why = name + " differs at " + std::to_string(workers) + " workers";
            }
        }
    }
    record("criterion 11: outputs byte-identical across 1, 4, 8 workers", ok, why);
}

}  // namespace

int main() {
    criterion1_closed_form();
    criterion2_kernel_decay();
    criterion3_oracle_equivalence();
    criterion4_energy();
    criterion8_exponents();
    criterion10_highd();
    const CorpusConstants constants = criterion7_harness();
    criterion11_determinism();

    std::printf("-- reference dipole run (t = 5, ~2000 elements) --\n");
    std::fflush(stdout);
    const DipoleRun ref = reference_dipole_run(36, 0.05, 2);
    std::printf("-- resolution-doubled dipole run (t = 5, ~8000 elements) --\n");
    std::fflush(stdout);
    const DipoleRun doubled = reference_dipole_run(72, 0.025, 8);
    criteria_5_6_9(ref, doubled, constants.key, constants.global);

    return harness::summary("acceptance");
}
