#include "shockorder/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "shockorder/builtin_scenarios.hpp"
#include "shockorder/monte_carlo.hpp"

namespace shockorder {

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << v;
    return os.str();
}

std::string tag(bool pass, const ReportStyle& style) {
    if (!style.color) return pass ? "[pass]" : "[FAIL]";
    return pass ? "\x1b[32m[pass]\x1b[0m" : "\x1b[31m[FAIL]\x1b[0m";
}

std::string vec_text(const ParamVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        std::ostringstream os;
        os << v[i];
        s += os.str();
    }
    return s + ")";
}

void print_scenario(std::ostream& out, const Scenario& scn) {
    out << "scenario: " << structure_name(scn.structure) << " system of " << scn.alpha.size()
        << " components, family " << kind_name(scn.family.kind());
    if (scn.family.has_shape()) out << " (shape " << scn.family.shape() << ")";
    out << "\n";
    out << "  gen_x = " << family_name(scn.gen_x.family()) << "(theta=" << scn.gen_x.theta()
        << "), gen_y = " << family_name(scn.gen_y.family()) << "(theta=" << scn.gen_y.theta()
        << ")\n";
    out << "  alpha = " << vec_text(scn.alpha) << ", beta = " << vec_text(scn.beta)
        << ", shocks = " << vec_text(scn.shocks) << "\n";
}

nlohmann::json report_json(const HypothesisReport& rep, const OrderCheck* order) {
    nlohmann::json j;
    j["theorem"] = theorem_name(rep.theorem);
    j["all_hold"] = rep.all_hold;
    nlohmann::json conds = nlohmann::json::array();
    for (const CheckReport& c : rep.condition_results)
        conds.push_back({{"name", c.name},
                         {"holds", c.holds},
                         {"worst_violation", c.worst_violation},
                         {"witness", c.witness}});
    j["conditions"] = std::move(conds);
    if (rep.conclusion) j["conclusion"] = conclusion_text(*rep.conclusion);
    if (order) {
        j["order_check"] = {{"holds", order->holds},
                            {"max_signed_violation", order->max_signed_violation},
                            {"argmax_x", order->argmax_x}};
    }
    return j;
}

}  // namespace

int cmd_check(const ScenarioConfig& config, std::ostream& out, const ReportStyle& style) {
    const Scenario& scn = config.scenario;
    print_scenario(out, scn);
    auto grid = evaluation_grid(config);

    auto reports = conclude(scn);
    nlohmann::json machine;
    machine["theorems"] = nlohmann::json::array();
    std::vector<std::string> holding;

    for (const HypothesisReport& rep : reports) {
        out << "\ntheorem " << theorem_name(rep.theorem) << "\n";
        for (const CheckReport& c : rep.condition_results) {
            out << "  " << tag(c.holds, style) << " " << c.name
                << "  (worst violation " << num(c.worst_violation);
            if (!c.holds) out << " at " << c.witness;
            out << ")\n";
        }
        if (rep.all_hold) {
            holding.push_back(theorem_name(rep.theorem));
            OrderCheck order = verify_order_numeric(scn, grid, config.order_tol, *rep.conclusion);
            out << "  => all conditions hold: " << conclusion_text(*rep.conclusion) << "\n";
            out << "  => numeric order check on " << grid.size()
                << "-point grid: " << (order.holds ? "confirmed" : "VIOLATED")
                << " (worst signed violation " << num(order.max_signed_violation) << " at x="
                << num(order.argmax_x) << ")\n";
            machine["theorems"].push_back(report_json(rep, &order));
        } else {
            out << "  => conditions not satisfied\n";
            machine["theorems"].push_back(report_json(rep, nullptr));
        }
    }

    out << "\ntheorems holding: ";
    if (holding.empty())
        out << "none";
    else
        for (std::size_t i = 0; i < holding.size(); ++i) out << (i ? ", " : "") << holding[i];
    out << "\n--- machine-readable ---\n" << machine.dump() << "\n";
    return holding.empty() ? kExitNegative : kExitOk;
}

int cmd_curve(const ScenarioConfig& config, std::ostream& out) {
    const Scenario& scn = config.scenario;
    SystemSpec sx = scn.system_x();
    SystemSpec sy = scn.system_y();
    auto grid = evaluation_grid(config);

    out << "x,F_X,F_Y,diff\n";
    for (double x : grid) {
        double fx = scn.structure == Structure::Parallel ? parallel_cdf(sx, x) : series_sf(sx, x);
        double fy = scn.structure == Structure::Parallel ? parallel_cdf(sy, x) : series_sf(sy, x);
        out << num17(x) << ',' << num17(fx) << ',' << num17(fy) << ',' << num17(fy - fx) << "\n";
    }
    return kExitOk;
}

int cmd_mc(const ScenarioConfig& config, std::ostream& out, const ReportStyle& style) {
    const Scenario& scn = config.scenario;
    if (!frailty_supported(scn.gen_x.family()) || !frailty_supported(scn.gen_y.family())) {
        out << "oracle unavailable: no frailty construction for generator family "
            << family_name(frailty_supported(scn.gen_x.family()) ? scn.gen_y.family()
                                                                 : scn.gen_x.family())
            << " (supported: clayton, gumbel, amh)\n";
        return kExitOracleUnavailable;
    }

    double bound = ks_bound(config.mc_samples);
    out << "monte carlo cross-check: " << config.mc_samples << " samples per system, seed "
        << config.mc_seed << ", bound " << num(bound) << "\n";

    bool ok = true;
    for (auto [label, spec, stream] :
         {std::tuple{"X", scn.system_x(), SeededStream{config.mc_seed, 0}},
          std::tuple{"Y", scn.system_y(), SeededStream{config.mc_seed, 1}}}) {
        SystemSampler sampler(spec, stream);
        auto samples = sampler.draw(config.mc_samples);
        auto cdf = [&spec](double x) {
            return spec.structure == Structure::Parallel ? parallel_cdf(spec, x)
                                                         : 1.0 - series_sf(spec, x);
        };
        double d = ks_distance(std::move(samples), cdf);
        bool pass = d <= bound;
        ok = ok && pass;
        out << "  " << tag(pass, style) << " system " << label << ": sup-distance " << num(d)
            << "\n";
    }
    out << (ok ? "within bound\n" : "bound exceeded\n");
    return ok ? kExitOk : kExitNegative;
}

int cmd_repro(const std::string& figure, const std::string& out_dir, std::ostream& log,
              const ReportStyle& style) {
    const BuiltinScenario& builtin = builtin_scenario(figure);
    std::filesystem::create_directories(out_dir);
    auto path = [&](const std::string& suffix) {
        return (std::filesystem::path(out_dir) / (figure + suffix)).string();
    };

    {
        std::ofstream f(path("_config.txt"));
        write_config(f, builtin.config);
        log << "wrote " << path("_config.txt") << "\n";
    }
    {
        std::ofstream f(path("_curve.csv"));
        cmd_curve(builtin.config, f);
        log << "wrote " << path("_curve.csv") << "\n";
    }
    {
        std::ofstream f(path("_report.txt"));
        cmd_check(builtin.config, f, style);
        log << "wrote " << path("_report.txt") << "\n";
    }
    return kExitOk;
}

}  // namespace shockorder
