#include "shockorder/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace shockorder {

namespace {

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

struct RawEntry {
    std::string value;
    int line = 0;
};

class ConfigReader {
  public:
    ConfigReader(std::istream& in, const std::string& source) : source_(source) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string body = line.substr(0, line.find('#'));
            body = trim(body);
            if (body.empty()) continue;
            auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ConfigError(source_ + ":" + std::to_string(lineno) +
                                      ": expected key = value",
                                  lineno, body);
            std::string key = trim(body.substr(0, eq));
            std::string value = trim(body.substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError(source_ + ":" + std::to_string(lineno) + ": empty key or value",
                                  lineno, key);
            if (entries_.count(key))
                throw ConfigError(source_ + ":" + std::to_string(lineno) + ": duplicate key '" +
                                      key + "'",
                                  lineno, key);
            entries_[key] = {value, lineno};
        }
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string require(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw ConfigError(source_ + ": missing required key '" + key + "'", 0, key);
        consumed_.insert(it->first);
        return it->second.value;
    }

    std::optional<std::string> optional(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        consumed_.insert(it->first);
        return it->second.value;
    }

    int line_of(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    void reject_unknown() const {
        for (const auto& [key, entry] : entries_)
            if (!consumed_.count(key))
                throw ConfigError(source_ + ":" + std::to_string(entry.line) +
                                      ": unknown key '" + key + "'",
                                  entry.line, key);
    }

    [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
        throw ConfigError(source_ + ":" + std::to_string(line_of(key)) + ": " + key + ": " + msg,
                          line_of(key), key);
    }

    const std::string& source() const { return source_; }

  private:
    std::string source_;
    std::map<std::string, RawEntry> entries_;
    std::set<std::string> consumed_;
};

double parse_number(ConfigReader& r, const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size() || std::isnan(v)) r.fail(key, "not a number: '" + text + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        r.fail(key, "not a number: '" + text + "'");
    }
}

std::vector<double> parse_vector(ConfigReader& r, const std::string& key,
                                 const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) r.fail(key, "empty list entry");
        out.push_back(parse_number(r, key, item));
    }
    if (out.empty()) r.fail(key, "empty list");
    return out;
}

std::uint64_t parse_u64(ConfigReader& r, const std::string& key, const std::string& text) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        r.fail(key, "not a non-negative integer: '" + text + "'");
    return v;
}

ArchimedeanGenerator parse_generator(ConfigReader& r, const std::string& prefix) {
    std::string fam_key = prefix + ".family";
    std::string theta_key = prefix + ".theta";
    GeneratorFamily family;
    try {
        family = parse_generator_token(r.require(fam_key));
    } catch (const std::invalid_argument& e) {
        r.fail(fam_key, e.what());
    }
    double theta = parse_number(r, theta_key, r.require(theta_key));
    try {
        return {family, theta};
    } catch (const std::domain_error& e) {
        r.fail(theta_key, e.what());
    }
}

}  // namespace

std::string generator_token(GeneratorFamily family) { return family_name(family); }
std::string lifetime_token(LifetimeKind kind) { return kind_name(kind); }
std::string structure_token(Structure structure) { return structure_name(structure); }

GeneratorFamily parse_generator_token(const std::string& token) {
    for (GeneratorFamily f :
         {GeneratorFamily::Clayton, GeneratorFamily::Gumbel, GeneratorFamily::Amh,
          GeneratorFamily::GumbelBarnett, GeneratorFamily::GumbelHougaard})
        if (token == family_name(f)) return f;
    throw std::invalid_argument("unknown generator family '" + token +
                                "' (expected clayton|gumbel|amh|gumbel_barnett|gumbel_hougaard)");
}

LifetimeKind parse_lifetime_token(const std::string& token) {
    for (LifetimeKind k : {LifetimeKind::ExponentialMean, LifetimeKind::WeibullScaleRate,
                           LifetimeKind::LogLogisticScale})
        if (token == kind_name(k)) return k;
    throw std::invalid_argument(
        "unknown lifetime kind '" + token +
        "' (expected exponential_mean|weibull_scale_rate|log_logistic_scale)");
}

Structure parse_structure_token(const std::string& token) {
    if (token == "series") return Structure::Series;
    if (token == "parallel") return Structure::Parallel;
    throw std::invalid_argument("unknown structure '" + token + "' (expected series|parallel)");
}

ScenarioConfig parse_config(std::istream& in, const std::string& source_name) {
    ConfigReader r(in, source_name);

    Structure structure;
    try {
        structure = parse_structure_token(r.require("structure"));
    } catch (const std::invalid_argument& e) {
        r.fail("structure", e.what());
    }

    LifetimeKind kind;
    try {
        kind = parse_lifetime_token(r.require("family.kind"));
    } catch (const std::invalid_argument& e) {
        r.fail("family.kind", e.what());
    }
    SurvivalFamily family = SurvivalFamily::exponential_mean();
    if (kind == LifetimeKind::ExponentialMean) {
        if (r.has("family.shape")) r.fail("family.shape", "exponential_mean takes no shape");
    } else {
        double shape = parse_number(r, "family.shape", r.require("family.shape"));
        try {
            family = kind == LifetimeKind::WeibullScaleRate
                         ? SurvivalFamily::weibull_scale_rate(shape)
                         : SurvivalFamily::log_logistic_scale(shape);
        } catch (const std::domain_error& e) {
            r.fail("family.shape", e.what());
        }
    }

    ArchimedeanGenerator gen_x = parse_generator(r, "gen_x");
    ArchimedeanGenerator gen_y = parse_generator(r, "gen_y");

    auto read_vec = [&](const std::string& key) -> ParamVector {
        auto values = parse_vector(r, key, r.require(key));
        try {
            return ParamVector(std::move(values));
        } catch (const std::exception& e) {
            r.fail(key, e.what());
        }
    };
    ParamVector alpha = read_vec("alpha");
    ParamVector beta = read_vec("beta");
    ParamVector shocks = read_vec("shocks");
    for (std::size_t i = 0; i < shocks.size(); ++i)
        if (shocks[i] > 1.0)
            r.fail("shocks", "shocks[" + std::to_string(i) + "] outside (0,1]");
    if (alpha.size() != beta.size() || alpha.size() != shocks.size())
        r.fail("alpha", "alpha, beta and shocks must have equal length");

    ScenarioConfig config{Scenario(gen_x, gen_y, family, std::move(alpha), std::move(beta),
                                   std::move(shocks), structure),
                          {}};

    if (auto v = r.optional("grid.x_min")) {
        config.grid.x_min = parse_number(r, "grid.x_min", *v);
        if (!(*config.grid.x_min >= 0.0)) r.fail("grid.x_min", "must be >= 0");
    }
    if (auto v = r.optional("grid.x_max")) {
        config.grid.x_max = parse_number(r, "grid.x_max", *v);
        if (!(*config.grid.x_max > 0.0)) r.fail("grid.x_max", "must be > 0");
    }
    if (config.grid.x_min && config.grid.x_max && !(*config.grid.x_min < *config.grid.x_max))
        r.fail("grid.x_max", "must exceed grid.x_min");
    if (auto v = r.optional("grid.points")) {
        config.grid.points = parse_u64(r, "grid.points", *v);
        if (config.grid.points < 2) r.fail("grid.points", "need at least 2 points");
    }
    if (auto v = r.optional("grid.spacing")) {
        if (*v == "linear")
            config.grid.spacing = GridSpacing::Linear;
        else if (*v == "log")
            config.grid.spacing = GridSpacing::Log;
        else
            r.fail("grid.spacing", "expected linear|log");
    }
    if (auto v = r.optional("tol.order")) {
        config.order_tol = parse_number(r, "tol.order", *v);
        if (!(config.order_tol >= 0.0)) r.fail("tol.order", "must be >= 0");
    }
    if (auto v = r.optional("mc.samples")) {
        config.mc_samples = parse_u64(r, "mc.samples", *v);
        if (config.mc_samples == 0) r.fail("mc.samples", "must be positive");
    }
    if (auto v = r.optional("mc.seed")) config.mc_seed = parse_u64(r, "mc.seed", *v);

    r.reject_unknown();
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, path);
    return parse_config(in, path);
}

void write_config(std::ostream& out, const ScenarioConfig& config) {
    auto num = [](double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    };
    auto vec = [&](const ParamVector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
        return s;
    };
    const Scenario& scn = config.scenario;
    out << "structure = " << structure_token(scn.structure) << "\n";
    out << "family.kind = " << lifetime_token(scn.family.kind()) << "\n";
    if (scn.family.has_shape()) out << "family.shape = " << num(scn.family.shape()) << "\n";
    out << "gen_x.family = " << generator_token(scn.gen_x.family()) << "\n";
    out << "gen_x.theta = " << num(scn.gen_x.theta()) << "\n";
    out << "gen_y.family = " << generator_token(scn.gen_y.family()) << "\n";
    out << "gen_y.theta = " << num(scn.gen_y.theta()) << "\n";
    out << "alpha = " << vec(scn.alpha) << "\n";
    out << "beta = " << vec(scn.beta) << "\n";
    out << "shocks = " << vec(scn.shocks) << "\n";
    if (config.grid.x_min) out << "grid.x_min = " << num(*config.grid.x_min) << "\n";
    if (config.grid.x_max) out << "grid.x_max = " << num(*config.grid.x_max) << "\n";
    out << "grid.points = " << config.grid.points << "\n";
    out << "grid.spacing = " << (config.grid.spacing == GridSpacing::Log ? "log" : "linear")
        << "\n";
    out << "tol.order = " << num(config.order_tol) << "\n";
    out << "mc.samples = " << config.mc_samples << "\n";
    out << "mc.seed = " << config.mc_seed << "\n";
}

std::vector<double> evaluation_grid(const ScenarioConfig& config) {
    auto base = default_order_grid(config.scenario, config.grid.points);
    double lo = config.grid.x_min.value_or(base.front());
    double hi = config.grid.x_max.value_or(base.back());
    if (config.grid.spacing == GridSpacing::Linear) return linear_grid(lo, hi, config.grid.points);
    if (!(lo > 0.0)) lo = std::min(1e-6, hi / 1e6);  // log spacing needs a positive start
    return log_grid(lo, hi, config.grid.points);
}

}  // namespace shockorder
