#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iho/errors.hpp"
#include "iho/kernels.hpp"
#include "iho/runner.hpp"

namespace {

int run(const std::string& experiment, const std::string& config_path,
        std::string out_dir, const std::string& sweep) {
    if (out_dir.empty()) out_dir = "out/" + experiment;

    if (sweep.empty()) {
        iho::Config cfg = iho::Config::from_file(config_path);
        iho::run_experiment(experiment, cfg, out_dir);
        std::printf("wrote %s\n", out_dir.c_str());
        return 0;
    }

    const auto eq = sweep.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= sweep.size())
        throw iho::ConfigError("--sweep expects key=v1,v2,...");
    const std::string key = sweep.substr(0, eq);
    std::vector<std::string> values;
    {
        std::string rest = sweep.substr(eq + 1), token;
        size_t pos = 0;
        while ((pos = rest.find(',')) != std::string::npos) {
            values.push_back(rest.substr(0, pos));
            rest.erase(0, pos + 1);
        }
        values.push_back(rest);
    }

    std::vector<iho::RunResult> results;
    for (const std::string& v : values) {
        iho::Config cfg = iho::Config::from_file(config_path);
        cfg.set(key, v);
        const std::string dir = out_dir + "/" + key + "=" + v;
        results.push_back(iho::run_experiment(experiment, cfg, dir));
        std::printf("wrote %s\n", dir.c_str());
    }
    if (experiment == "scatter" &&
        key.size() >= 4 && key.compare(key.size() - 4, 4, "eps0") == 0) {
        iho::aggregate_scatter_sweep(results, out_dir);
        std::printf("wrote %s (sweep aggregate)\n", out_dir.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trapped-ion inverted-oscillator simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, sweep, exec_mode = "openmp";
    for (const std::string& name : iho::experiment_names()) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", config_path, "config file (flat INI)")
            ->required();
        sub->add_option("--out", out_dir, "output directory (default out/<experiment>)");
        sub->add_option("--sweep", sweep, "key=v1,v2,... fan out over one key");
        sub->add_option("--exec", exec_mode, "kernel variant: openmp|serial")
            ->check(CLI::IsMember({"openmp", "serial"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    iho::kern::default_exec() = exec_mode == "serial" ? iho::kern::Exec::serial
                                                      : iho::kern::Exec::openmp;
    const std::string experiment = app.get_subcommands().front()->get_name();
    try {
        return run(experiment, config_path, out_dir, sweep);
    } catch (const iho::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const iho::InvalidInputError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const iho::NumericalGuardError& e) {
        std::fprintf(stderr, "numerical guard: %s\n", e.what());
        return 3;
    } catch (const iho::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
