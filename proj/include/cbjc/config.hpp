// config.hpp — flat "section.key = value" experiment configuration.

#pragma once

#include "cbjc/bath.hpp"
#include "cbjc/jc_core.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cbjc {

enum class Engine { common_bath, traditional, no_interference, exact, iteration };

std::string_view engine_name(Engine engine) noexcept;
// Throws ConfigurationError for unknown names.
Engine parse_engine(std::string_view name);

// Initial one-excitation state used by the decay and oracle runs.
enum class InitialState { cavity_photon, excited_atom, dressed_plus, dressed_minus };

std::string_view initial_state_name(InitialState s) noexcept;
InitialState parse_initial_state(std::string_view name);

struct DriveConfig {
    double eta{0.005};
    // Default window is omega_c -+ 2 lambda.
    std::optional<double> omega_d_min;
    std::optional<double> omega_d_max;
    std::size_t points{401};
};

struct OracleConfig {
    double delta_omega{5e-4};
    double omega_max{4.0};
};

struct RunConfig {
    double t_max{200.0};
    double dt{0.5};
    std::filesystem::path output{"."};
    bool interference{true};
    std::vector<Engine> engines{Engine::common_bath, Engine::traditional, Engine::no_interference,
                                Engine::exact};
    InitialState initial{InitialState::cavity_photon};
};

struct ExperimentConfig {
    SystemParams system{1.0, 1.0, 0.1, 3};
    SpectralDensity cavity_bath{0.002, 5.0};  // J1
    SpectralDensity atom_bath{0.001, 8.0};    // J2
    DriveConfig drive;
    OracleConfig oracle;
    RunConfig run;

    // Assign one key; throws ConfigurationError for unknown keys or bad values.
    void set(std::string_view key, std::string_view value);
    void validate() const;
    // validate() plus the drive-frequency window; only the spectrum run needs it.
    void validate_drive() const;

    double omega_d_min() const noexcept;
    double omega_d_max() const noexcept;

    // All resolved keys in a fixed order, "key=value" joined by spaces.
    std::string echo() const;
};

// Lines are "key = value"; '#' starts a comment; blank lines are ignored.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

}  // namespace cbjc
