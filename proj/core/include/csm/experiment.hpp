#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "csm/dicke.hpp"
#include "csm/single_qubit.hpp"
#include "csm/two_qubit.hpp"

namespace csm {

enum class ExperimentKind {
    single_qubit,
    two_qubit_common,
    two_qubit_individual,
    intrabath_single,
    intrabath_two,
    spectral,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

// Bath preparation recipe; realized against a spin count at run time.
struct BathSpec {
    enum class Kind {
        spin_coherent,
        equally_weighted,
        w_class,
        fully_polarized,
        amplitudes,
    };
    Kind kind = Kind::spin_coherent;
    double theta = 0.0;
    double phi = 0.0;
    std::complex<double> gamma_nm1{M_SQRT1_2, 0.0};
    std::complex<double> gamma_n{M_SQRT1_2, 0.0};
    int m_down = 0;
    std::vector<std::complex<double>> amplitudes;

    BathState realize(int n_spins) const;
};

struct TimeGrid {
    double t_max = 20.0;
    int n_points = 2001;

    // t_max = 0 collapses to the single point t = 0.
    std::vector<double> times() const;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::single_qubit;
    int n_spins = 60;
    int n_spins2 = -1;  // second bath size for individual baths; -1 copies n_spins

    double omega1 = 1.0, g1 = 1.0, g1p = 0.0;
    double omega2 = 1.0, g2 = 1.0, g2p = 0.0;
    double J = 0.0, Jp = 0.0;

    BathSpec bath;
    std::optional<BathSpec> bath2;  // individual baths; defaults to bath

    QubitState qubit0 = QubitState::up();
    TwoQubitState pair0 = TwoQubitState::bell_psi_plus();
    std::string initial_label = "up";  // named state, or "custom"

    TimeGrid time;
    double tol = 1e-9;
    std::string output = "out.csv";

    SingleQubitParams single_params() const;
    TwoQubitParams two_params() const;
    bool is_two_qubit() const;
};

// Parses a JSON experiment description. Unknown keys and malformed values
// raise std::invalid_argument naming the offending key.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// Normalized single-line JSON echo of the config (stable key order).
std::string config_json(const ExperimentConfig& config);

// Full CSV output: '#' metadata header, column header row, data rows.
std::string run_to_string(const ExperimentConfig& config);

// Writes run_to_string(config) to config.output.
void run(const ExperimentConfig& config);

const std::vector<std::string>& preset_names();
ExperimentConfig preset(const std::string& name);

}  // namespace csm
