#include "csm/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "csm/density_matrix.hpp"
#include "csm/individual_baths.hpp"
#include "csm/intrabath.hpp"
#include "csm/measures.hpp"

namespace csm {

namespace {

using nlohmann::json;
using cd = std::complex<double>;

constexpr std::pair<ExperimentKind, const char*> kind_names[] = {
    {ExperimentKind::single_qubit, "single_qubit"},
    {ExperimentKind::two_qubit_common, "two_qubit_common"},
    {ExperimentKind::two_qubit_individual, "two_qubit_individual"},
    {ExperimentKind::intrabath_single, "intrabath_single"},
    {ExperimentKind::intrabath_two, "intrabath_two"},
    {ExperimentKind::spectral, "spectral"},
};

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw std::invalid_argument("unknown config key '" + item.key() + "' in " +
                                        where);
}

double get_number(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) bad_key(key, "expected a number");
    return obj.at(key).get<double>();
}

int get_int(const json& obj, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer()) bad_key(key, "expected an integer");
    return obj.at(key).get<int>();
}

cd parse_complex(const json& j, const std::string& key) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    bad_key(key, "expected a number or [re, im]");
}

json complex_json(cd z) {
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

BathSpec parse_bath(const json& j, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
    if (!j.contains("kind")) throw std::invalid_argument(where + ": missing 'kind'");
    BathSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "spin_coherent") {
        reject_unknown_keys(j, {"kind", "theta", "phi"}, where);
        spec.kind = BathSpec::Kind::spin_coherent;
        if (!j.contains("theta")) throw std::invalid_argument(where + ": missing 'theta'");
        spec.theta = get_number(j, "theta", 0.0);
        spec.phi = get_number(j, "phi", 0.0);
    } else if (kind == "equally_weighted") {
        reject_unknown_keys(j, {"kind"}, where);
        spec.kind = BathSpec::Kind::equally_weighted;
    } else if (kind == "w_class") {
        reject_unknown_keys(j, {"kind", "gamma_nm1", "gamma_n"}, where);
        spec.kind = BathSpec::Kind::w_class;
        if (j.contains("gamma_nm1")) spec.gamma_nm1 = parse_complex(j.at("gamma_nm1"), "gamma_nm1");
        if (j.contains("gamma_n")) spec.gamma_n = parse_complex(j.at("gamma_n"), "gamma_n");
    } else if (kind == "fully_polarized") {
        reject_unknown_keys(j, {"kind", "m_down"}, where);
        spec.kind = BathSpec::Kind::fully_polarized;
        spec.m_down = get_int(j, "m_down", 0);
    } else if (kind == "amplitudes") {
        reject_unknown_keys(j, {"kind", "amplitudes"}, where);
        spec.kind = BathSpec::Kind::amplitudes;
        if (!j.contains("amplitudes") || !j.at("amplitudes").is_array())
            throw std::invalid_argument(where + ": missing 'amplitudes' array");
        for (const auto& e : j.at("amplitudes"))
            spec.amplitudes.push_back(parse_complex(e, "amplitudes"));
    } else {
        throw std::invalid_argument(where + ": unknown bath kind '" + kind + "'");
    }
    return spec;
}

json bath_json(const BathSpec& spec) {
    json j;
    switch (spec.kind) {
        case BathSpec::Kind::spin_coherent:
            j["kind"] = "spin_coherent";
            j["theta"] = spec.theta;
            j["phi"] = spec.phi;
            break;
        case BathSpec::Kind::equally_weighted:
            j["kind"] = "equally_weighted";
            break;
        case BathSpec::Kind::w_class:
            j["kind"] = "w_class";
            j["gamma_nm1"] = complex_json(spec.gamma_nm1);
            j["gamma_n"] = complex_json(spec.gamma_n);
            break;
        case BathSpec::Kind::fully_polarized:
            j["kind"] = "fully_polarized";
            j["m_down"] = spec.m_down;
            break;
        case BathSpec::Kind::amplitudes: {
            j["kind"] = "amplitudes";
            json arr = json::array();
            for (cd z : spec.amplitudes) arr.push_back(complex_json(z));
            j["amplitudes"] = arr;
            break;
        }
    }
    return j;
}

void parse_initial(const json& j, ExperimentConfig& c) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        c.initial_label = name;
        if (c.is_two_qubit()) {
            if (name == "bell_psi_plus") c.pair0 = TwoQubitState::bell_psi_plus();
            else if (name == "up_up") c.pair0 = TwoQubitState::basis(0);
            else if (name == "up_down") c.pair0 = TwoQubitState::basis(1);
            else if (name == "down_up") c.pair0 = TwoQubitState::basis(2);
            else if (name == "down_down") c.pair0 = TwoQubitState::basis(3);
            else bad_key("initial", "unknown two-qubit state '" + name + "'");
        } else {
            if (name == "up") c.qubit0 = QubitState::up();
            else if (name == "down") c.qubit0 = QubitState::down();
            else if (name == "plus") c.qubit0 = QubitState::plus();
            else if (name == "minus") c.qubit0 = QubitState::minus();
            else bad_key("initial", "unknown qubit state '" + name + "'");
        }
        return;
    }
    if (!j.is_object()) bad_key("initial", "expected a state name or an object");
    c.initial_label = "custom";
    if (c.is_two_qubit()) {
        reject_unknown_keys(j, {"amplitudes"}, "initial");
        if (!j.contains("amplitudes") || !j.at("amplitudes").is_array() ||
            j.at("amplitudes").size() != 4)
            bad_key("initial", "expected 'amplitudes' with four entries");
        std::array<cd, 4> amp;
        for (int i = 0; i < 4; ++i)
            amp[static_cast<std::size_t>(i)] =
                parse_complex(j.at("amplitudes")[static_cast<std::size_t>(i)], "initial.amplitudes");
        c.pair0 = TwoQubitState::validated(amp);
    } else {
        reject_unknown_keys(j, {"f_up", "f_down"}, "initial");
        if (!j.contains("f_up") || !j.contains("f_down"))
            bad_key("initial", "expected 'f_up' and 'f_down'");
        c.qubit0 = QubitState::validated(parse_complex(j.at("f_up"), "initial.f_up"),
                                         parse_complex(j.at("f_down"), "initial.f_down"));
    }
}

json initial_json(const ExperimentConfig& c) {
    if (c.initial_label != "custom") return c.initial_label;
    json j;
    if (c.is_two_qubit()) {
        json arr = json::array();
        for (cd z : c.pair0.amp) arr.push_back(complex_json(z));
        j["amplitudes"] = arr;
    } else {
        j["f_up"] = complex_json(c.qubit0.f_up);
        j["f_down"] = complex_json(c.qubit0.f_down);
    }
    return j;
}

void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

void append_row(std::string& out, std::initializer_list<double> vals) {
    bool first = true;
    for (double v : vals) {
        if (!first) out += ',';
        first = false;
        append_num(out, v);
    }
    out += '\n';
}

std::string csv_header(const ExperimentConfig& c, const char* columns) {
    std::string out;
    out += "# central-spin dynamics\n";
    out += "# config: ";
    out += config_json(c);
    out += '\n';
    out += columns;
    out += '\n';
    return out;
}

std::string run_single(const ExperimentConfig& c) {
    const auto p = c.single_params();
    const BathState bath = c.bath.realize(c.n_spins);
    std::string out = csv_header(c, "t,Sx,Sy,Sz,purity,coherence,entropy");
    for (double t : c.time.times()) {
        const auto table = evolve(p, c.qubit0, bath, t);
        const DensityMatrix rho = qubit_density(table);
        const cd sp = rho(1, 0);
        const double sz = 0.5 * (rho(0, 0) - rho(1, 1)).real();
        append_row(out, {t, sp.real(), sp.imag(), sz, purity(rho), std::abs(sp),
                         von_neumann_entropy(rho)});
    }
    return out;
}

std::string run_two_common(const ExperimentConfig& c) {
    const auto p = c.two_params();
    const BathState bath = c.bath.realize(c.n_spins);
    const auto snaps = integrate(p, c.pair0, bath, c.time.times(), c.tol);
    std::string out = csv_header(
        c, "t,concurrence,C_re,entropy,pop_uu,pop_ud,pop_du,pop_dd");
    for (const auto& snap : snaps) {
        const auto sch = to_schrodinger(snap, p);
        const DensityMatrix rho = two_qubit_density(sch);
        append_row(out, {snap.t, concurrence(rho), relative_entropy_of_coherence(rho),
                         von_neumann_entropy(rho), rho(0, 0).real(), rho(1, 1).real(),
                         rho(2, 2).real(), rho(3, 3).real()});
    }
    return out;
}

std::string run_two_individual(const ExperimentConfig& c) {
    if (c.J != 0.0 || c.Jp != 0.0)
        throw std::invalid_argument(
            "individual baths: direct qubit-qubit coupling J, Jp must be zero");
    SingleQubitParams p1{c.omega1, c.g1, c.g1p, c.n_spins};
    const int n2 = c.n_spins2 < 0 ? c.n_spins : c.n_spins2;
    SingleQubitParams p2{c.omega2, c.g2, c.g2p, n2};
    const BathState bath1 = c.bath.realize(c.n_spins);
    const BathState bath2 = (c.bath2 ? *c.bath2 : c.bath).realize(n2);
    Eigen::Matrix4cd r0 = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r0(i, j) = c.pair0.amp[static_cast<std::size_t>(i)] *
                       std::conj(c.pair0.amp[static_cast<std::size_t>(j)]);
    const auto state =
        JointInitialState::make(DensityMatrix::validated(r0), p1, bath1, p2, bath2);
    std::string out = csv_header(
        c, "t,concurrence,C_re,entropy,pop_uu,pop_ud,pop_du,pop_dd");
    for (double t : c.time.times()) {
        const DensityMatrix rho = compose(state, t);
        append_row(out, {t, concurrence(rho), relative_entropy_of_coherence(rho),
                         von_neumann_entropy(rho), rho(0, 0).real(), rho(1, 1).real(),
                         rho(2, 2).real(), rho(3, 3).real()});
    }
    return out;
}

std::string run_intrabath_single(const ExperimentConfig& c) {
    const auto p = c.single_params();
    const BathState bath = c.bath.realize(c.n_spins);
    const PairDensity chi0 = pair_density(bath_density(evolve(p, c.qubit0, bath, 0.0)));
    std::string out = csv_header(c, "t,reduced_concurrence,coherence,entropy");
    for (double t : c.time.times()) {
        const auto table = evolve(p, c.qubit0, bath, t);
        const PairDensity chi = pair_density(bath_density(table));
        const DensityMatrix rho1 = qubit_density(table);
        append_row(out, {t, reduced_concurrence(chi, chi0),
                         relative_entropy_of_coherence(rho1), von_neumann_entropy(rho1)});
    }
    return out;
}

std::string run_intrabath_two(const ExperimentConfig& c) {
    const auto p = c.two_params();
    const BathState bath = c.bath.realize(c.n_spins);
    const auto snaps = integrate(p, c.pair0, bath, c.time.times(), c.tol);
    const PairDensity chi0 = pair_density(bath_density_2q(to_schrodinger(snaps.front(), p)));
    std::string out = csv_header(c, "t,reduced_concurrence,C_re,entropy");
    for (const auto& snap : snaps) {
        const auto sch = to_schrodinger(snap, p);
        const PairDensity chi = pair_density(bath_density_2q(sch));
        const DensityMatrix rho = two_qubit_density(sch);
        append_row(out, {snap.t, reduced_concurrence(chi, chi0),
                         relative_entropy_of_coherence(rho), von_neumann_entropy(rho)});
    }
    return out;
}

std::string run_spectral(const ExperimentConfig& c) {
    const auto p = c.single_params();
    const SpectralData sd = spectral(p);
    const BathState bath = c.bath.realize(c.n_spins);
    std::string out = csv_header(c, "n,q_sq,a_n,b_n,A_n,dA_n");
    for (int n = 0; n <= c.n_spins; ++n) {
        const double q2 = std::norm(bath.gamma_for_excitation(n));
        append_row(out, {static_cast<double>(n), q2, sd.a(n), sd.b(n), sd.A(n),
                         std::abs(sd.A(n + 1) - sd.A(n))});
    }
    return out;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto& [k, name] : kind_names)
        if (k == kind) return name;
    throw std::logic_error("unreachable experiment kind");
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
    for (const auto& [k, kname] : kind_names)
        if (name == kname) return k;
    std::string known;
    for (const auto& [k, kname] : kind_names) {
        if (!known.empty()) known += ", ";
        known += kname;
    }
    throw std::invalid_argument("unknown experiment '" + name + "' (known: " + known + ")");
}

BathState BathSpec::realize(int n_spins) const {
    switch (kind) {
        case Kind::spin_coherent:
            return BathState::spin_coherent(n_spins, theta, phi);
        case Kind::equally_weighted:
            return BathState::equally_weighted(n_spins);
        case Kind::w_class:
            return BathState::w_class(n_spins, gamma_nm1, gamma_n);
        case Kind::fully_polarized:
            return BathState::fully_polarized(n_spins, m_down);
        case Kind::amplitudes: {
            Eigen::VectorXcd g(static_cast<Eigen::Index>(amplitudes.size()));
            for (Eigen::Index i = 0; i < g.size(); ++i)
                g(i) = amplitudes[static_cast<std::size_t>(i)];
            return BathState::from_amplitudes(n_spins, g);
        }
    }
    throw std::logic_error("unreachable bath kind");
}

std::vector<double> TimeGrid::times() const {
    if (t_max < 0.0) throw std::invalid_argument("time.t_max must be >= 0");
    if (t_max == 0.0) return {0.0};
    if (n_points < 2) throw std::invalid_argument("time.n_points must be >= 2");
    std::vector<double> ts(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        ts[static_cast<std::size_t>(i)] = t_max * i / (n_points - 1);
    return ts;
}

SingleQubitParams ExperimentConfig::single_params() const {
    return {omega1, g1, g1p, n_spins};
}

TwoQubitParams ExperimentConfig::two_params() const {
    return {omega1, omega2, J, Jp, g1, g2, g1p, g2p, n_spins};
}

bool ExperimentConfig::is_two_qubit() const {
    return experiment == ExperimentKind::two_qubit_common ||
           experiment == ExperimentKind::two_qubit_individual ||
           experiment == ExperimentKind::intrabath_two;
}

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    reject_unknown_keys(j,
                        {"experiment", "n_spins", "n_spins2", "omega1", "g1", "g1p",
                         "omega2", "g2", "g2p", "J", "Jp", "bath", "bath2", "initial",
                         "time", "tol", "output"},
                        "config");
    ExperimentConfig c;
    if (!j.contains("experiment")) throw std::invalid_argument("config: missing 'experiment'");
    c.experiment = experiment_kind_from_string(j.at("experiment").get<std::string>());
    c.n_spins = get_int(j, "n_spins", 60);
    c.n_spins2 = get_int(j, "n_spins2", -1);
    c.omega1 = get_number(j, "omega1", 1.0);
    c.g1 = get_number(j, "g1", 1.0);
    c.g1p = get_number(j, "g1p", 0.0);
    c.omega2 = get_number(j, "omega2", 1.0);
    c.g2 = get_number(j, "g2", 1.0);
    c.g2p = get_number(j, "g2p", 0.0);
    c.J = get_number(j, "J", 0.0);
    c.Jp = get_number(j, "Jp", 0.0);
    if (!j.contains("bath")) throw std::invalid_argument("config: missing 'bath'");
    c.bath = parse_bath(j.at("bath"), "bath");
    if (j.contains("bath2")) {
        if (c.experiment != ExperimentKind::two_qubit_individual)
            throw std::invalid_argument("config: 'bath2' only applies to two_qubit_individual");
        c.bath2 = parse_bath(j.at("bath2"), "bath2");
    }
    if (j.contains("initial")) parse_initial(j.at("initial"), c);
    else c.initial_label = c.is_two_qubit() ? "bell_psi_plus" : "up";
    if (j.contains("time")) {
        const json& t = j.at("time");
        if (!t.is_object()) bad_key("time", "expected an object");
        reject_unknown_keys(t, {"t_max", "n_points"}, "time");
        c.time.t_max = get_number(t, "t_max", c.time.t_max);
        c.time.n_points = get_int(t, "n_points", c.time.n_points);
    }
    c.tol = get_number(j, "tol", 1e-9);
    if (c.tol <= 0.0) bad_key("tol", "must be positive");
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string config_json(const ExperimentConfig& c) {
    json j;
    j["experiment"] = to_string(c.experiment);
    j["n_spins"] = c.n_spins;
    if (c.experiment == ExperimentKind::two_qubit_individual)
        j["n_spins2"] = c.n_spins2 < 0 ? c.n_spins : c.n_spins2;
    j["omega1"] = c.omega1;
    j["g1"] = c.g1;
    j["g1p"] = c.g1p;
    if (c.is_two_qubit()) {
        j["omega2"] = c.omega2;
        j["g2"] = c.g2;
        j["g2p"] = c.g2p;
        j["J"] = c.J;
        j["Jp"] = c.Jp;
    }
    j["bath"] = bath_json(c.bath);
    if (c.bath2) j["bath2"] = bath_json(*c.bath2);
    j["initial"] = initial_json(c);
    if (c.experiment != ExperimentKind::spectral) {
        j["time"] = {{"t_max", c.time.t_max}, {"n_points", c.time.n_points}};
        if (c.experiment == ExperimentKind::two_qubit_common ||
            c.experiment == ExperimentKind::intrabath_two)
            j["tol"] = c.tol;
    }
    j["output"] = c.output;
    return j.dump();
}

std::string run_to_string(const ExperimentConfig& c) {
    switch (c.experiment) {
        case ExperimentKind::single_qubit: return run_single(c);
        case ExperimentKind::two_qubit_common: return run_two_common(c);
        case ExperimentKind::two_qubit_individual: return run_two_individual(c);
        case ExperimentKind::intrabath_single: return run_intrabath_single(c);
        case ExperimentKind::intrabath_two: return run_intrabath_two(c);
        case ExperimentKind::spectral: return run_spectral(c);
    }
    throw std::logic_error("unreachable experiment kind");
}

void run(const ExperimentConfig& c) {
    const std::string text = run_to_string(c);
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + c.output);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + c.output);
}

}  // namespace csm
