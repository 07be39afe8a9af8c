#include "cbjc/config.hpp"

#include "cbjc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cbjc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigurationError(std::string(key) + ": not a number: '" + std::string(value) + "'");
    }
    return out;
}

long to_integer(std::string_view key, std::string_view value) {
    long out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigurationError(std::string(key) + ": not an integer: '" + std::string(value) + "'");
    }
    return out;
}

bool to_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigurationError(std::string(key) + ": not a boolean: '" + std::string(value) + "'");
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string_view engine_name(Engine engine) noexcept {
    switch (engine) {
        case Engine::common_bath: return "common-bath";
        case Engine::traditional: return "traditional";
        case Engine::no_interference: return "no-interference";
        case Engine::exact: return "exact";
        case Engine::iteration: return "iteration";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name) {
    for (Engine e : {Engine::common_bath, Engine::traditional, Engine::no_interference, Engine::exact,
                     Engine::iteration}) {
        if (engine_name(e) == name) return e;
    }
    throw ConfigurationError("unknown engine '" + std::string(name) + "'");
}

std::string_view initial_state_name(InitialState s) noexcept {
    switch (s) {
        case InitialState::cavity_photon: return "1g";
        case InitialState::excited_atom: return "0e";
        case InitialState::dressed_plus: return "1p";
        case InitialState::dressed_minus: return "1m";
    }
    return "unknown";
}

InitialState parse_initial_state(std::string_view name) {
    for (InitialState s : {InitialState::cavity_photon, InitialState::excited_atom, InitialState::dressed_plus,
                           InitialState::dressed_minus}) {
        if (initial_state_name(s) == name) return s;
    }
    throw ConfigurationError("unknown initial state '" + std::string(name) + "' (expected 1g, 0e, 1p, 1m)");
}

void ExperimentConfig::set(std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "system.omega_c") system.omega_c = to_double(key, value);
    else if (key == "system.omega_0") system.omega_0 = to_double(key, value);
    else if (key == "system.lambda") system.lambda = to_double(key, value);
    else if (key == "system.n_max") system.n_max = static_cast<int>(to_integer(key, value));
    else if (key == "bath.alpha_1") cavity_bath.alpha = to_double(key, value);
    else if (key == "bath.omega_c1") cavity_bath.omega_cutoff = to_double(key, value);
    else if (key == "bath.alpha_2") atom_bath.alpha = to_double(key, value);
    else if (key == "bath.omega_c2") atom_bath.omega_cutoff = to_double(key, value);
    else if (key == "drive.eta") drive.eta = to_double(key, value);
    else if (key == "drive.omega_d_min") drive.omega_d_min = to_double(key, value);
    else if (key == "drive.omega_d_max") drive.omega_d_max = to_double(key, value);
    else if (key == "drive.points") {
        const long n = to_integer(key, value);
        if (n < 0) throw ConfigurationError("drive.points must be >= 0");
        drive.points = static_cast<std::size_t>(n);
    }
    else if (key == "oracle.delta_omega") oracle.delta_omega = to_double(key, value);
    else if (key == "oracle.omega_max") oracle.omega_max = to_double(key, value);
    else if (key == "run.t_max") run.t_max = to_double(key, value);
    else if (key == "run.dt") run.dt = to_double(key, value);
    else if (key == "run.output") run.output = std::string(value);
    else if (key == "run.interference") run.interference = to_bool(key, value);
    else if (key == "run.initial") run.initial = parse_initial_state(value);
    else if (key == "run.engines") {
        std::vector<Engine> engines;
        std::string_view rest = value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            if (!item.empty()) engines.push_back(parse_engine(item));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        if (engines.empty()) throw ConfigurationError("run.engines is empty");
        run.engines = std::move(engines);
    } else {
        throw ConfigurationError("unknown key '" + std::string(key) + "'");
    }
}

void ExperimentConfig::validate() const {
    system.validate();
    cavity_bath.validate();
    atom_bath.validate();
    if (!(drive.eta >= 0.0)) throw ConfigurationError("drive.eta must be >= 0");
    if (!(oracle.delta_omega > 0.0)) throw ConfigurationError("oracle.delta_omega must be > 0");
    if (!(oracle.omega_max >= oracle.delta_omega)) throw ConfigurationError("oracle.omega_max must be >= oracle.delta_omega");
    if (!(run.t_max >= 0.0)) throw ConfigurationError("run.t_max must be >= 0");
    if (!(run.dt > 0.0)) throw ConfigurationError("run.dt must be > 0");
}

void ExperimentConfig::validate_drive() const {
    validate();
    if (drive.points < 2) throw ConfigurationError("drive.points must be >= 2");
    if (!(omega_d_max() > omega_d_min())) throw ConfigurationError("drive.omega_d_max must exceed drive.omega_d_min");
}

double ExperimentConfig::omega_d_min() const noexcept {
    return drive.omega_d_min.value_or(system.omega_c - 2.0 * system.lambda);
}

double ExperimentConfig::omega_d_max() const noexcept {
    return drive.omega_d_max.value_or(system.omega_c + 2.0 * system.lambda);
}

std::string ExperimentConfig::echo() const {
    std::ostringstream os;
    os << "system.omega_c=" << format_number(system.omega_c)
       << " system.omega_0=" << format_number(system.omega_0)
       << " system.lambda=" << format_number(system.lambda)
       << " system.n_max=" << system.n_max
       << " bath.alpha_1=" << format_number(cavity_bath.alpha)
       << " bath.omega_c1=" << format_number(cavity_bath.omega_cutoff)
       << " bath.alpha_2=" << format_number(atom_bath.alpha)
       << " bath.omega_c2=" << format_number(atom_bath.omega_cutoff)
       << " drive.eta=" << format_number(drive.eta)
       << " drive.omega_d_min=" << format_number(omega_d_min())
       << " drive.omega_d_max=" << format_number(omega_d_max())
       << " drive.points=" << drive.points
       << " oracle.delta_omega=" << format_number(oracle.delta_omega)
       << " oracle.omega_max=" << format_number(oracle.omega_max)
       << " run.t_max=" << format_number(run.t_max)
       << " run.dt=" << format_number(run.dt)
       << " run.output=" << run.output.string()
       << " run.interference=" << (run.interference ? "true" : "false")
       << " run.initial=" << initial_state_name(run.initial) << " run.engines=";
    for (std::size_t i = 0; i < run.engines.size(); ++i) {
        os << (i ? "," : "") << engine_name(run.engines[i]);
    }
    return os.str();
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigurationError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        try {
            cfg.set(trim(view.substr(0, eq)), view.substr(eq + 1));
        } catch (const ConfigurationError& e) {
            throw ConfigurationError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    return parse_config(in, std::move(base));
}

}  // namespace cbjc
