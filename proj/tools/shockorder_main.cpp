#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#if defined(_WIN32)
#else
#include <unistd.h>
#endif

#include "shockorder/commands.hpp"

namespace {

using namespace shockorder;

ReportStyle style_for(std::ostream& out) {
    ReportStyle style;
    bool to_stdout = &out == &std::cout;
    style.color = to_stdout && isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
    return style;
}

// Runs fn against stdout or --out; input/config errors map to exit 1.
template <typename Fn>
int run(const std::string& config_path, const std::string& out_path, Fn&& fn) {
    try {
        ScenarioConfig config = load_config(config_path);
        if (out_path.empty()) return fn(config, std::cout, style_for(std::cout));
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return kExitInputError;
        }
        return fn(config, out, ReportStyle{});
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "shockorder: lifetime distributions and stochastic-order checks for shocked\n"
        "series/parallel systems with Archimedean dependence"};
    app.require_subcommand(1);

    std::string config_path, out_path, figure, out_dir = ".";
    std::optional<std::size_t> samples_override;
    std::optional<std::uint64_t> seed_override;

    auto* check = app.add_subcommand("check", "validate a scenario against the ordering results");
    check->add_option("config", config_path, "scenario config file")->required();
    check->add_option("--out", out_path, "write the report to this path");

    auto* curve = app.add_subcommand("curve", "emit the distribution-difference curve as CSV");
    curve->add_option("config", config_path, "scenario config file")->required();
    curve->add_option("--out", out_path, "write the CSV to this path");

    auto* mc = app.add_subcommand("mc", "Monte Carlo cross-check of the analytic laws");
    mc->add_option("config", config_path, "scenario config file")->required();
    mc->add_option("--samples", samples_override, "override mc.samples");
    mc->add_option("--seed", seed_override, "override mc.seed");

    auto* repro = app.add_subcommand("repro", "emit a built-in scenario (fig1..fig4)");
    repro->add_option("figure", figure, "one of fig1, fig2, fig3, fig4")->required();
    repro->add_option("--out-dir", out_dir, "output directory (default .)");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed())
        return run(config_path, out_path,
                   [](const ScenarioConfig& c, std::ostream& o, const ReportStyle& s) {
                       return cmd_check(c, o, s);
                   });
    if (curve->parsed())
        return run(config_path, out_path,
                   [](const ScenarioConfig& c, std::ostream& o, const ReportStyle&) {
                       return cmd_curve(c, o);
                   });
    if (mc->parsed())
        return run(config_path, "",
                   [&](ScenarioConfig c, std::ostream& o, const ReportStyle& s) {
                       if (samples_override) c.mc_samples = *samples_override;
                       if (seed_override) c.mc_seed = *seed_override;
                       return cmd_mc(c, o, s);
                   });
    if (repro->parsed()) {
        try {
            return cmd_repro(figure, out_dir, std::cout, ReportStyle{});
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }
    return kExitInputError;
}
