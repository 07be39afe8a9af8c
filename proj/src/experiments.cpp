#include "cbjc/experiments.hpp"

#include "cbjc/bath.hpp"
#include "cbjc/csv.hpp"
#include "cbjc/density.hpp"
#include "cbjc/drive.hpp"
#include "cbjc/errors.hpp"
#include "cbjc/evolve.hpp"
#include "cbjc/oracle.hpp"
#include "cbjc/rate_tensor.hpp"
#include "cbjc/steady_state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <sstream>

namespace cbjc {

namespace {

namespace fs = std::filesystem;

// Quasi-dark convergence: every observable varies by less than this over one window.
constexpr double kSettleWindow = 100.0;
constexpr double kSettleTolerance = 1e-6;
constexpr double kSettleCap = 20000.0;

fs::path prepare_output(const ExperimentConfig& config) {
    const fs::path dir = config.run.output;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

Eigen::VectorXcd initial_ket(const DressedBasis& basis, InitialState s) {
    switch (s) {
        case InitialState::cavity_photon: return product_ket(basis, 1, Atom::ground);
        case InitialState::excited_atom: return product_ket(basis, 0, Atom::excited);
        case InitialState::dressed_plus: return dressed_ket(basis, 1, +1);
        case InitialState::dressed_minus: return dressed_ket(basis, 1, -1);
    }
    throw ContractViolation("unhandled initial state");
}

SingleExcitationState exact_initial(InitialState s, std::size_t modes) {
    switch (s) {
        case InitialState::cavity_photon: return SingleExcitationState::system(1.0, 0.0, modes);
        case InitialState::excited_atom: return SingleExcitationState::system(0.0, 1.0, modes);
        case InitialState::dressed_plus: return SingleExcitationState::dressed(+1, modes);
        case InitialState::dressed_minus: return SingleExcitationState::dressed(-1, modes);
    }
    throw ContractViolation("unhandled initial state");
}

OneExcitationElements iteration_initial(const DressedBasis& basis, const Eigen::VectorXcd& ket) {
    const auto p = static_cast<Eigen::Index>(basis.index(1, +1));
    const auto m = static_cast<Eigen::Index>(basis.index(1, -1));
    OneExcitationElements e;
    e.rho_1p1p = std::norm(ket(p));
    e.rho_1m1m = std::norm(ket(m));
    e.rho_1p1m = ket(p) * std::conj(ket(m));
    return e;
}

const std::vector<std::string> kDecayColumns{"t", "photon", "excited", "rho_1p1p", "rho_1m1m"};

void write_trajectory(const fs::path& path, const std::string& echo, const Trajectory& traj) {
    CsvWriter csv(path, echo, kDecayColumns);
    const auto& ph = traj.observable("photon");
    const auto& ex = traj.observable("excited");
    const auto& pp = traj.observable("rho_1p1p");
    const auto& mm = traj.observable("rho_1m1m");
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const std::array<double, 5> row{traj.times[i], ph[i], ex[i], pp[i], mm[i]};
        csv.row(row);
    }
    csv.close();
}

struct EngineOutput {
    fs::path file;
    std::string summary;
    std::vector<std::string> warnings;
};

EngineOutput run_engine(const ExperimentConfig& config, Engine engine, const fs::path& dir,
                        const std::vector<double>& grid) {
    const std::string echo = config.echo();
    const DressedBasis basis = build_dressed_basis(config.system);
    const Eigen::VectorXcd ket = initial_ket(basis, config.run.initial);
    EngineOutput out;
    out.file = dir / ("decay_" + std::string(engine_name(engine)) + ".csv");

    auto finish_master = [&](const Trajectory& traj) {
        write_trajectory(out.file, echo, traj);
        for (const auto& d : traj.diagnostics) out.warnings.push_back(std::string(engine_name(engine)) + ": " + d);
        out.summary = "decay engine=" + std::string(engine_name(engine)) +
                      " photon_final=" + num(traj.observable("photon").back()) +
                      " rows=" + std::to_string(traj.size());
    };

    switch (engine) {
        case Engine::common_bath:
        case Engine::no_interference: {
            const bool interference = engine == Engine::common_bath && config.run.interference;
            const RateTensor tensor =
                build_rate_tensor(basis, config.cavity_bath, config.atom_bath, interference);
            finish_master(evolve(DensityMatrix::pure(ket), tensor, basis.energies(), grid));
            break;
        }
        case Engine::traditional: {
            const double j1 = config.cavity_bath(config.system.omega_c);
            const double j2 = config.atom_bath(config.system.omega_0);
            finish_master(evolve_traditional(DensityMatrix::pure(ket), config.system, j1, j2, grid));
            break;
        }
        case Engine::exact: {
            const DiscretizedBath bath = discretize(config.cavity_bath, config.atom_bath,
                                                    config.oracle.delta_omega, config.oracle.omega_max);
            const ExactSeries s = exact_evolve(config.system, bath, exact_initial(config.run.initial, bath.size()), grid);
            CsvWriter csv(out.file, echo, kDecayColumns);
            for (std::size_t i = 0; i < s.times.size(); ++i) {
                const std::array<double, 5> row{s.times[i], s.photon[i], s.excited[i], s.rho_1p1p[i], s.rho_1m1m[i]};
                csv.row(row);
            }
            csv.close();
            for (const auto& w : s.warnings) out.warnings.push_back("exact: " + w);
            out.summary = "decay engine=exact modes=" + std::to_string(bath.size()) +
                          " photon_final=" + num(s.photon.back()) + " max_norm_defect=" + num(s.max_norm_defect);
            break;
        }
        case Engine::iteration: {
            if (!basis.coupled()) throw UnsupportedConfiguration("iteration engine requires lambda > 0");
            const RateTensor tensor =
                build_rate_tensor(basis, config.cavity_bath, config.atom_bath, config.run.interference);
            const IterationSeries s =
                iteration_solution(tensor, basis.energies(), iteration_initial(basis, ket), grid);
            CsvWriter csv(out.file, echo, {"t", "rho_1p1p", "rho_1m1m"});
            for (std::size_t i = 0; i < s.times.size(); ++i) {
                const std::array<double, 3> row{s.times[i], s.rho_1p1p[i], s.rho_1m1m[i]};
                csv.row(row);
            }
            csv.close();
            out.summary = "decay engine=iteration rows=" + std::to_string(s.times.size());
            break;
        }
    }
    return out;
}

struct SettledRun {
    std::vector<double> times;
    std::vector<std::array<double, 2>> values;  // photon, excited
    bool settled{false};
    std::vector<std::string> diagnostics;
};

// Evolves window by window until photon and excited stop changing.
SettledRun evolve_until_settled(const DensityMatrix& rho0, const RateTensor& tensor,
                                const Eigen::VectorXd& energies, double dt) {
    SettledRun run;
    const std::vector<double> window = uniform_grid(kSettleWindow, dt);
    DensityMatrix rho = rho0;
    double t0 = 0.0;
    while (true) {
        const Trajectory traj = evolve(rho, tensor, energies, window);
        const auto& ph = traj.observable("photon");
        const auto& ex = traj.observable("excited");
        const std::size_t first = run.times.empty() ? 0 : 1;  // window start duplicates the previous end
        for (std::size_t i = first; i < traj.size(); ++i) {
            run.times.push_back(t0 + traj.times[i]);
            run.values.push_back({ph[i], ex[i]});
        }
        if (run.diagnostics.empty() && !traj.diagnostics.empty()) run.diagnostics = traj.diagnostics;
        const auto [pmin, pmax] = std::minmax_element(ph.begin(), ph.end());
        const auto [emin, emax] = std::minmax_element(ex.begin(), ex.end());
        t0 += traj.times.back();
        if (std::max(*pmax - *pmin, *emax - *emin) < kSettleTolerance) {
            run.settled = true;
            break;
        }
        if (t0 >= kSettleCap) break;
        rho = traj.state(traj.size() - 1);
    }
    return run;
}

}  // namespace

RunReport run_decay(const ExperimentConfig& config) {
    config.validate();
    const fs::path dir = prepare_output(config);
    const std::vector<double> grid = uniform_grid(config.run.t_max, config.run.dt);

    std::vector<std::future<EngineOutput>> jobs;
    for (Engine e : config.run.engines) {
        jobs.push_back(std::async(std::launch::async, run_engine, std::cref(config), e, dir, std::cref(grid)));
    }
    RunReport report;
    std::exception_ptr failure;
    for (auto& job : jobs) {
        try {
            EngineOutput out = job.get();
            report.files.push_back(out.file);
            report.summary.push_back(out.summary);
            report.warnings.insert(report.warnings.end(), out.warnings.begin(), out.warnings.end());
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return report;
}

RunReport run_quasidark(const ExperimentConfig& input) {
    ExperimentConfig config = input;
    config.system.lambda = 0.0;
    config.validate();
    const fs::path dir = prepare_output(config);
    const std::string echo = config.echo();

    const DressedBasis basis = build_dressed_basis(config.system);
    const RateTensor tensor =
        build_rate_tensor(basis, config.cavity_bath, config.atom_bath, config.run.interference);
    const double j1 = config.cavity_bath(config.system.omega_c);
    const double j2 = config.atom_bath(config.system.omega_0);

    struct Arm {
        const char* tag;
        Atom atom;
        int photons;
        InitialArm arm;
    };
    const std::array<Arm, 2> arms{Arm{"1g", Atom::ground, 1, InitialArm::cavity},
                                  Arm{"0e", Atom::excited, 0, InitialArm::atom}};

    std::array<std::future<SettledRun>, 2> jobs;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        const DensityMatrix rho0 = DensityMatrix::pure(product_ket(basis, arms[i].photons, arms[i].atom));
        jobs[i] = std::async(std::launch::async, evolve_until_settled, rho0, std::cref(tensor),
                             basis.energies(), config.run.dt);
    }

    RunReport report;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        const SettledRun run = jobs[i].get();
        const fs::path file = dir / ("quasidark_" + std::string(arms[i].tag) + ".csv");
        CsvWriter csv(file, echo, {"t", "photon", "excited"});
        for (std::size_t k = 0; k < run.times.size(); ++k) {
            const std::array<double, 3> row{run.times[k], run.values[k][0], run.values[k][1]};
            csv.row(row);
        }
        csv.close();
        report.files.push_back(file);

        const auto& last = run.values.back();
        std::string line = "quasidark initial=" + std::string(arms[i].tag) + " t_end=" + num(run.times.back()) +
                           " photon=" + num(last[0]) + " excited=" + num(last[1]);
        if (j1 + j2 > 0.0) {
            const SteadyExpectations ref = steady_expectations_analytic(j1, j2, arms[i].arm);
            line += " photon_analytic=" + num(ref.photon) + " excited_analytic=" + num(ref.excited) +
                    " photon_deviation=" + num(std::abs(last[0] - ref.photon)) +
                    " excited_deviation=" + num(std::abs(last[1] - ref.excited));
        }
        report.summary.push_back(line);
        if (!run.settled) {
            report.warnings.push_back("quasidark " + std::string(arms[i].tag) + ": observables still changing at t=" +
                                      num(run.times.back()));
        }
        for (const auto& d : run.diagnostics) report.warnings.push_back("quasidark " + std::string(arms[i].tag) + ": " + d);
    }
    if (!(j1 + j2 > 0.0)) report.warnings.push_back("quasidark: J1 = J2 = 0, analytic values undefined");
    return report;
}

RunReport run_spectrum(const ExperimentConfig& config) {
    config.validate_drive();
    if (!(config.drive.eta > 0.0)) throw ConfigurationError("spectrum requires drive.eta > 0");
    const fs::path dir = prepare_output(config);
    const std::string echo = config.echo();
    const std::vector<double> grid = linear_grid(config.omega_d_min(), config.omega_d_max(), config.drive.points);

    RunReport report;
    for (bool interference : {true, false}) {
        const std::string tag = interference ? "interference" : "no_interference";
        const SpectrumResult result = transmission_spectrum(config.system, config.cavity_bath, config.atom_bath,
                                                            config.drive.eta, grid, interference);
        const fs::path file = dir / ("spectrum_" + tag + ".csv");
        CsvWriter csv(file, echo, {"omega_d", "photon"});
        for (std::size_t i = 0; i < result.omega_d.size(); ++i) {
            const std::array<double, 2> row{result.omega_d[i], result.photon[i]};
            csv.row(row);
        }
        csv.close();
        report.files.push_back(file);
        for (const auto& w : result.warnings) report.warnings.push_back("spectrum " + tag + ": " + w);

        try {
            const PeakMetrics peaks = peak_metrics(result);
            std::string line = "spectrum " + tag + " peaks=";
            for (std::size_t i = 0; i < peaks.positions.size(); ++i) {
                line += (i ? "," : "") + num(peaks.positions[i]) + ":" + num(peaks.heights[i]);
            }
            line += " asymmetry_ratio=" + (peaks.asymmetry_ratio ? num(*peaks.asymmetry_ratio) : std::string("none"));
            report.summary.push_back(line);
        } catch (const NoPeakError& e) {
            report.warnings.push_back("spectrum " + tag + ": " + e.what());
            report.summary.push_back("spectrum " + tag + " peaks=none");
        }
    }
    return report;
}

RunReport run_oracle_compare(const ExperimentConfig& config) {
    config.validate();
    const fs::path dir = prepare_output(config);
    const std::string echo = config.echo();
    const std::vector<double> grid = uniform_grid(config.run.t_max, config.run.dt);
    const DressedBasis basis = build_dressed_basis(config.system);
    if (!basis.coupled()) throw UnsupportedConfiguration("oracle-compare requires lambda > 0");
    const Eigen::VectorXcd ket = initial_ket(basis, config.run.initial);
    const RateTensor tensor =
        build_rate_tensor(basis, config.cavity_bath, config.atom_bath, config.run.interference);

    auto exact_job = std::async(std::launch::async, [&] {
        const DiscretizedBath bath = discretize(config.cavity_bath, config.atom_bath, config.oracle.delta_omega,
                                                config.oracle.omega_max);
        return exact_evolve(config.system, bath, exact_initial(config.run.initial, bath.size()), grid);
    });
    const Trajectory master = evolve(DensityMatrix::pure(ket), tensor, basis.energies(), grid);
    const IterationSeries iter = iteration_solution(tensor, basis.energies(), iteration_initial(basis, ket), grid);
    const ExactSeries exact = exact_job.get();

    RunReport report;
    const auto& ph = master.observable("photon");
    double max_exact = 0.0;
    {
        const fs::path file = dir / "oracle_exact.csv";
        CsvWriter csv(file, echo, {"t", "photon_exact", "photon_master", "deviation"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double dev = std::abs(exact.photon[i] - ph[i]);
            max_exact = std::max(max_exact, dev);
            const std::array<double, 4> row{grid[i], exact.photon[i], ph[i], dev};
            csv.row(row);
        }
        csv.close();
        report.files.push_back(file);
    }
    const auto& pp = master.observable("rho_1p1p");
    const auto& mm = master.observable("rho_1m1m");
    double max_iter = 0.0;
    {
        const fs::path file = dir / "oracle_iteration.csv";
        CsvWriter csv(file, echo,
                      {"t", "rho_1p1p_iteration", "rho_1p1p_master", "rho_1m1m_iteration", "rho_1m1m_master"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            max_iter = std::max({max_iter, std::abs(iter.rho_1p1p[i] - pp[i]), std::abs(iter.rho_1m1m[i] - mm[i])});
            const std::array<double, 5> row{grid[i], iter.rho_1p1p[i], pp[i], iter.rho_1m1m[i], mm[i]};
            csv.row(row);
        }
        csv.close();
        report.files.push_back(file);
    }
    report.summary.push_back("oracle exact_vs_master max_photon_deviation=" + num(max_exact) +
                             " max_norm_defect=" + num(exact.max_norm_defect));
    report.summary.push_back("oracle iteration_vs_master max_population_deviation=" + num(max_iter));
    for (const auto& w : exact.warnings) report.warnings.push_back("oracle exact: " + w);
    for (const auto& d : master.diagnostics) report.warnings.push_back("oracle master: " + d);
    return report;
}

}  // namespace cbjc
