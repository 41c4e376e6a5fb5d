// Command-line front end. Talks to the simulator exclusively through the
// C API of the shared library.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ntnsim.h"

namespace {

constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

struct StringGuard {
    char* text = nullptr;
    ~StringGuard() { ntnsim_string_free(text); }
};

bool write_file(const std::filesystem::path& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

int run_command(const std::string& config_path, const std::string& sweep_name,
                std::int64_t trials, std::int64_t seed, std::int64_t workers,
                const std::string& out_dir, bool svg) {
    ntnsim_config* config = nullptr;
    ntnsim_status status = ntnsim_config_load_file(config_path.c_str(), &config);
    if (status != NTNSIM_OK) {
        std::cerr << "config error: " << ntnsim_last_error() << "\n";
        return kExitConfigError;
    }

    if (trials >= 0) status = ntnsim_config_set_trials(config, static_cast<uint32_t>(trials));
    if (status == NTNSIM_OK && seed >= 0)
        status = ntnsim_config_set_seed(config, static_cast<uint64_t>(seed));
    if (status == NTNSIM_OK && workers >= 0)
        status = ntnsim_config_set_workers(config, static_cast<uint32_t>(workers));
    if (status != NTNSIM_OK) {
        std::cerr << "config error: " << ntnsim_last_error() << "\n";
        ntnsim_config_free(config);
        return kExitConfigError;
    }

    const ntnsim_axis axis =
        sweep_name == "power" ? NTNSIM_AXIS_TX_POWER_DBM : NTNSIM_AXIS_RHO;

    ntnsim_result* result = nullptr;
    status = ntnsim_run_sweep(config, axis, &result);
    ntnsim_config_free(config);
    if (status != NTNSIM_OK) {
        std::cerr << (status == NTNSIM_ERR_CONSTRAINT ? "config error: " : "runtime error: ")
                  << ntnsim_last_error() << "\n";
        return status == NTNSIM_ERR_CONSTRAINT ? kExitConfigError : kExitRuntimeError;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "runtime error: cannot create output directory '" << out_dir << "'\n";
        ntnsim_result_free(result);
        return kExitRuntimeError;
    }

    int exit_code = 0;
    const std::filesystem::path dir(out_dir);
    {
        StringGuard csv;
        if (ntnsim_result_csv(result, &csv.text) != NTNSIM_OK ||
            !write_file(dir / ("sweep_" + sweep_name + ".csv"), csv.text)) {
            std::cerr << "runtime error: failed to write CSV\n";
            exit_code = kExitRuntimeError;
        } else {
            std::cout << "wrote " << (dir / ("sweep_" + sweep_name + ".csv")).string() << " ("
                      << ntnsim_result_count(result) << " records)\n";
        }
    }

    if (svg && exit_code == 0) {
        const std::pair<ntnsim_metric, const char*> metrics[] = {
            {NTNSIM_METRIC_SUM_RATE, "sum_rate"},
            {NTNSIM_METRIC_ENERGY_EFFICIENCY, "energy_efficiency"},
            {NTNSIM_METRIC_COVERAGE, "coverage"},
        };
        for (const auto& [metric, name] : metrics) {
            StringGuard text;
            const auto path = dir / (std::string(name) + "_" + sweep_name + ".svg");
            if (ntnsim_result_svg(result, metric, &text.text) != NTNSIM_OK ||
                !write_file(path, text.text)) {
                std::cerr << "runtime error: failed to write " << path.string() << "\n";
                exit_code = kExitRuntimeError;
                break;
            }
            std::cout << "wrote " << path.string() << "\n";
        }
    }

    ntnsim_result_free(result);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo link-level simulator for a HAPS/UAV-RIS multi-layer network"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one sweep and write CSV (and optionally SVG)");
    std::string config_path;
    std::string sweep_name;
    std::string out_dir;
    std::int64_t trials = -1;
    std::int64_t seed = -1;
    std::int64_t workers = -1;
    bool svg = false;
    run->add_option("--config", config_path, "config document (JSON)")->required();
    run->add_option("--sweep", sweep_name, "sweep axis: power | rho")
        ->required()
        ->check(CLI::IsMember({"power", "rho"}));
    run->add_option("--trials", trials, "override run.trials");
    run->add_option("--seed", seed, "override run.seed");
    run->add_option("--workers", workers, "override run.workers (0 = hardware)");
    run->add_option("--out", out_dir, "output directory")->required();
    run->add_flag("--svg", svg, "also write SVG charts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfigError;
    }

    return run_command(config_path, sweep_name, trials, seed, workers, out_dir, svg);
}
