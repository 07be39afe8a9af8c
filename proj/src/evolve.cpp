#include "cbjc/evolve.hpp"

#include "cbjc/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <sstream>

namespace cbjc {

namespace ode = boost::numeric::odeint;
using cd = std::complex<double>;
using State = std::vector<cd>;

std::vector<double> uniform_grid(double t_max, double dt) {
    if (!(t_max >= 0.0)) throw ConfigurationError("run.t_max must be >= 0");
    if (!(dt > 0.0)) throw ConfigurationError("run.dt must be > 0");
    const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 2);
    for (std::size_t i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) * dt);
    if (t_max - grid.back() > 1e-9 * dt) grid.push_back(t_max);
    return grid;
}

Trajectory evolve(const DensityMatrix& rho0, const Generator& generator,
                  std::span<const double> t_grid, const ObservableSet& observables,
                  const EvolveOptions& options) {
    const std::size_t n = generator.dim();
    if (rho0.dim() != n) throw ContractViolation("initial state does not match generator dimension");
    if (t_grid.empty()) throw ConfigurationError("time grid is empty");
    if (t_grid.front() != 0.0) throw ConfigurationError("time grid must start at 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) throw ConfigurationError("time grid must be increasing");
    }

    Trajectory traj;
    traj.times.reserve(t_grid.size());
    traj.states.reserve(t_grid.size());
    for (const auto& [name, op] : observables.operators) {
        traj.names.push_back(name);
        traj.series.emplace_back();
        traj.series.back().reserve(t_grid.size());
    }

    const auto n2 = static_cast<Eigen::Index>(n * n);
    const Eigen::MatrixXcd& l = generator.matrix();
    auto rhs = [&l, n2](const State& x, State& dx, double /*t*/) {
        Eigen::Map<Eigen::VectorXcd>(dx.data(), n2).noalias() =
            l * Eigen::Map<const Eigen::VectorXcd>(x.data(), n2);
    };

    double last_time = 0.0;
    auto record = [&](const State& x, double t) {
        Eigen::MatrixXcd rho = unvectorize(Eigen::Map<const Eigen::VectorXcd>(x.data(), n2), n);
        if (!rho.allFinite()) throw IntegrationError(t, "state became non-finite");
        if (options.check_positivity) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
            const double lowest = eig.eigenvalues().minCoeff();
            if (lowest < -kPositivityTolerance) {
                if (traj.positivity_violations++ == 0) {
                    std::ostringstream os;
                    os << "eigenvalue " << lowest << " below -" << kPositivityTolerance << " at t = " << t;
                    traj.diagnostics.push_back(os.str());
                }
            }
        }
        for (std::size_t i = 0; i < observables.operators.size(); ++i) {
            traj.series[i].push_back((observables.operators[i].second * rho).trace().real());
        }
        traj.times.push_back(t);
        traj.states.push_back(std::move(rho));
        last_time = t;
    };

    State x(static_cast<std::size_t>(n2));
    Eigen::Map<Eigen::VectorXcd>(x.data(), n2) = vectorize(rho0.matrix());

    if (t_grid.size() == 1) {
        record(x, 0.0);
        return traj;
    }

    auto stepper = ode::make_dense_output(options.abs_tol, options.rel_tol, ode::runge_kutta_dopri5<State>());
    try {
        ode::integrate_times(stepper, rhs, x, t_grid.begin(), t_grid.end(), options.initial_step, record,
                             ode::max_step_checker(options.max_steps_between_outputs));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw IntegrationError(last_time, std::string("integrator step failure: ") + e.what());
    }
    return traj;
}

Trajectory evolve(const DensityMatrix& rho0, const RateTensor& tensor, const Eigen::VectorXd& energies,
                  std::span<const double> t_grid, const EvolveOptions& options) {
    return evolve(rho0, master_generator(tensor, energies), t_grid, standard_observables(tensor.basis()),
                  options);
}

Trajectory evolve_traditional(const DensityMatrix& rho0, const SystemParams& params, double j1_value,
                              double j2_value, std::span<const double> t_grid,
                              const EvolveOptions& options) {
    const DressedBasis basis = build_dressed_basis(params);
    return evolve(rho0, traditional_generator(basis, j1_value, j2_value), t_grid,
                  standard_observables(basis), options);
}

}  // namespace cbjc
