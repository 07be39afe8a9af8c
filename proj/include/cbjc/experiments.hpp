// experiments.hpp — reproduction runs driven by an ExperimentConfig. Each run
// writes CSV files into config.run.output and returns a short report.

#pragma once

#include "cbjc/config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cbjc {

struct RunReport {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> summary;   // one "key=value ..." line per result
    std::vector<std::string> warnings;
};

// decay_<engine>.csv for every selected engine. Engines run concurrently.
RunReport run_decay(const ExperimentConfig& config);

// lambda forced to 0; quasidark_1g.csv and quasidark_0e.csv, evolved until the
// observables settle, plus a summary against the analytic long-time values.
RunReport run_quasidark(const ExperimentConfig& config);

// spectrum_interference.csv and spectrum_no_interference.csv plus peak metrics.
RunReport run_spectrum(const ExperimentConfig& config);

// oracle_exact.csv (exact vs master photon number) and oracle_iteration.csv
// (closed-form iteration vs evolve for rho_{1+-,1+-}), with max deviations.
RunReport run_oracle_compare(const ExperimentConfig& config);

}  // namespace cbjc
