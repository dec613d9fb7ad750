#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "csm/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact dynamics of central qubits in a spin-1/2 bath"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "run an experiment described by a JSON config");
    run_cmd->add_option("config", config_path, "path to the config JSON file")->required();

    std::string preset_name;
    std::string out_path;
    auto* preset_cmd = app.add_subcommand("preset", "run a named figure preset");
    preset_cmd->add_option("name", preset_name, "preset name, e.g. fig2c")->required();
    preset_cmd->add_option("--out", out_path, "output CSV path (default <name>.csv)");

    auto* list_cmd = app.add_subcommand("list-presets", "print the available preset names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : csm::preset_names()) std::cout << name << '\n';
            return 0;
        }
        csm::ExperimentConfig config;
        if (run_cmd->parsed()) {
            config = csm::load_config(config_path);
        } else {
            config = csm::preset(preset_name);
            if (!out_path.empty()) config.output = out_path;
        }
        csm::run(config);
        std::cout << "wrote " << config.output << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
