#include "csm/experiment.hpp"

#include <cmath>
#include <stdexcept>

namespace csm {

namespace {

// Panel quartets: theta in {pi/10, 2pi/10, 3pi/10, 5pi/10} for the
// spin-coherent figures, g'/g in {0, 0.8, 1, 2} for the intrabath ones.
const double thetas[4] = {M_PI / 10.0, 2.0 * M_PI / 10.0, 3.0 * M_PI / 10.0,
                          5.0 * M_PI / 10.0};
const double gp_values[4] = {0.0, 0.8, 1.0, 2.0};

BathSpec coherent(double theta) {
    BathSpec b;
    b.kind = BathSpec::Kind::spin_coherent;
    b.theta = theta;
    b.phi = 0.0;
    return b;
}

BathSpec equal_weights() {
    BathSpec b;
    b.kind = BathSpec::Kind::equally_weighted;
    return b;
}

BathSpec w_class_bath() {
    BathSpec b;
    b.kind = BathSpec::Kind::w_class;
    return b;
}

ExperimentConfig base(ExperimentKind kind) {
    ExperimentConfig c;
    c.experiment = kind;
    c.n_spins = 60;
    return c;
}

ExperimentConfig fig2(int panel) {
    ExperimentConfig c = base(ExperimentKind::single_qubit);
    c.bath = coherent(thetas[panel]);
    c.time = {20.0, 2001};
    return c;
}

ExperimentConfig fig3(int panel) {
    ExperimentConfig c = base(ExperimentKind::spectral);
    c.bath = coherent(thetas[2]);
    c.g1p = panel == 2 ? 1.0 : 0.0;
    return c;
}

ExperimentConfig fig4(int panel) {
    ExperimentConfig c = fig2(panel);
    c.g1p = 1.0;
    c.time = {300.0, 3001};
    return c;
}

ExperimentConfig fig5(int panel) {
    ExperimentConfig c = base(ExperimentKind::two_qubit_individual);
    c.bath = coherent(thetas[panel]);
    c.initial_label = "bell_psi_plus";
    c.pair0 = TwoQubitState::bell_psi_plus();
    c.time = {50.0, 2501};
    return c;
}

ExperimentConfig fig6(int panel) {
    ExperimentConfig c = fig5(panel);
    c.g1p = c.g2p = 1.0;
    c.time = {400.0, 2001};
    return c;
}

ExperimentConfig fig7(int panel) {
    ExperimentConfig c = base(ExperimentKind::two_qubit_common);
    c.bath = coherent(thetas[panel]);
    c.g1p = c.g2p = 1.0;
    c.initial_label = "bell_psi_plus";
    c.pair0 = TwoQubitState::bell_psi_plus();
    // Rabi period at resonance is 2*pi/(N+1); sample well below it.
    c.time = {190.0, 9501};
    c.tol = 1e-8;
    return c;
}

ExperimentConfig fig8(int panel) {
    ExperimentConfig c = fig7(panel);
    c.initial_label = "up_up";
    c.pair0 = TwoQubitState::basis(0);
    return c;
}

ExperimentConfig fig9(int panel) {
    ExperimentConfig c = base(ExperimentKind::intrabath_single);
    c.omega1 = 0.0;
    c.g1p = gp_values[panel];
    c.bath = equal_weights();
    c.initial_label = "plus";
    c.qubit0 = QubitState::plus();
    c.time = {5.0, 2001};
    return c;
}

ExperimentConfig fig9b(int panel) {
    ExperimentConfig c = base(ExperimentKind::intrabath_two);
    c.omega1 = c.omega2 = 0.0;
    c.g1p = c.g2p = gp_values[panel];
    c.bath = equal_weights();
    c.initial_label = "bell_psi_plus";
    c.pair0 = TwoQubitState::bell_psi_plus();
    c.time = {5.0, 1001};
    c.tol = 1e-8;
    return c;
}

ExperimentConfig fig10(int panel) {
    ExperimentConfig c = fig9(panel);
    c.bath = w_class_bath();
    c.time = {50.0, 10001};
    return c;
}

ExperimentConfig fig10b(int panel) {
    ExperimentConfig c = fig9b(panel);
    c.bath = w_class_bath();
    c.time = {50.0, 1001};
    return c;
}

struct PresetEntry {
    const char* name;
    ExperimentConfig (*make)(int);
    int panel;
};

// One preset per figure panel; the two-qubit companions of figures 9
// and 10 are fig9ba..fig9bd and fig10ba..fig10bd. Bare figure names
// alias panel (a).
const PresetEntry entries[] = {
    {"fig2", fig2, 0},      {"fig2a", fig2, 0},     {"fig2b", fig2, 1},
    {"fig2c", fig2, 2},     {"fig2d", fig2, 3},     {"fig3", fig3, 0},
    {"fig3a", fig3, 0},     {"fig3b", fig3, 1},     {"fig3c", fig3, 2},
    {"fig4", fig4, 0},      {"fig4a", fig4, 0},     {"fig4b", fig4, 1},
    {"fig4c", fig4, 2},     {"fig4d", fig4, 3},     {"fig5", fig5, 0},
    {"fig5a", fig5, 0},     {"fig5b", fig5, 1},     {"fig5c", fig5, 2},
    {"fig5d", fig5, 3},     {"fig6", fig6, 0},      {"fig6a", fig6, 0},
    {"fig6b", fig6, 1},     {"fig6c", fig6, 2},     {"fig6d", fig6, 3},
    {"fig7", fig7, 0},      {"fig7a", fig7, 0},     {"fig7b", fig7, 1},
    {"fig7c", fig7, 2},     {"fig7d", fig7, 3},     {"fig8", fig8, 0},
    {"fig8a", fig8, 0},     {"fig8b", fig8, 1},     {"fig8c", fig8, 2},
    {"fig8d", fig8, 3},     {"fig9", fig9, 0},      {"fig9a", fig9, 0},
    {"fig9b", fig9, 1},     {"fig9c", fig9, 2},     {"fig9d", fig9, 3},
    {"fig9ba", fig9b, 0},   {"fig9bb", fig9b, 1},   {"fig9bc", fig9b, 2},
    {"fig9bd", fig9b, 3},   {"fig10", fig10, 0},    {"fig10a", fig10, 0},
    {"fig10b", fig10, 1},   {"fig10c", fig10, 2},   {"fig10d", fig10, 3},
    {"fig10ba", fig10b, 0}, {"fig10bb", fig10b, 1}, {"fig10bc", fig10b, 2},
    {"fig10bd", fig10b, 3},
};

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : entries) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

ExperimentConfig preset(const std::string& name) {
    for (const auto& e : entries)
        if (name == e.name) {
            ExperimentConfig c = e.make(e.panel);
            c.output = name + ".csv";
            return c;
        }
    std::string known;
    for (const auto& e : entries) {
        if (!known.empty()) known += ", ";
        known += e.name;
    }
    throw std::invalid_argument("unknown preset '" + name + "' (available: " + known + ")");
}

}  // namespace csm
