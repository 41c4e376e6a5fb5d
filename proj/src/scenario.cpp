#include "ntnsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ntnsim {

using nlohmann::json;

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::I: return "I";
        case Scheme::II: return "II";
        case Scheme::III: return "III";
        case Scheme::IV: return "IV";
    }
    return "?";
}

const char* to_string(Condition c) { return c == Condition::ideal ? "ideal" : "impaired"; }

const char* to_string(RisMode m) { return m == RisMode::passive ? "passive" : "active"; }

const std::vector<LosTableRow>& default_urban_los_table() {
    // TR 38.811 Table 6.6.1-1, urban column, 10 degree steps.
    static const std::vector<LosTableRow> table = {
        {10.0, 0.246}, {20.0, 0.386}, {30.0, 0.493}, {40.0, 0.613}, {50.0, 0.726},
        {60.0, 0.805}, {70.0, 0.919}, {80.0, 0.968}, {90.0, 0.992},
    };
    return table;
}

double ScenarioConfig::thermal_floor_w() const {
    // -174 dBm/Hz thermal density.
    return std::pow(10.0, (-174.0 + 10.0 * std::log10(bandwidth) - 30.0) / 10.0);
}

double ScenarioConfig::noise_power_w() const {
    return thermal_floor_w() * std::pow(10.0, noise_figure / 10.0);
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& rule) {
    throw config_error(key, rule);
}

void check(bool ok, const std::string& key, const std::string& rule) {
    if (!ok) fail(key, rule);
}

Scheme scheme_from_string(const std::string& s, const std::string& key) {
    if (s == "I") return Scheme::I;
    if (s == "II") return Scheme::II;
    if (s == "III") return Scheme::III;
    if (s == "IV") return Scheme::IV;
    fail(key, "unknown scheme '" + s + "' (expected I, II, III or IV)");
}

Condition condition_from_string(const std::string& s, const std::string& key) {
    if (s == "ideal") return Condition::ideal;
    if (s == "impaired") return Condition::impaired;
    fail(key, "unknown condition '" + s + "' (expected ideal or impaired)");
}

// Tracks consumed keys of one JSON object so anything unrecognized is a hard
// error naming the stray key.
class Section {
public:
    Section(const json* obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (obj_ && !obj_->is_object()) fail(path_, "must be an object");
    }

    const json* find(const std::string& key) {
        if (!obj_) return nullptr;
        consumed_.push_back(key);
        auto it = obj_->find(key);
        return it == obj_->end() ? nullptr : &*it;
    }

    void get_number(const std::string& key, double& target) {
        const json* v = find(key);
        if (!v) return;
        if (!v->is_number()) fail(path_ + "." + key, "must be a number");
        target = v->get<double>();
    }

    void get_optional_number(const std::string& key, std::optional<double>& target) {
        const json* v = find(key);
        if (!v || v->is_null()) return;
        if (!v->is_number()) fail(path_ + "." + key, "must be a number");
        target = v->get<double>();
    }

    void get_int(const std::string& key, int& target) {
        const json* v = find(key);
        if (!v) return;
        if (!v->is_number_integer()) fail(path_ + "." + key, "must be an integer");
        target = v->get<int>();
    }

    void get_bool(const std::string& key, bool& target) {
        const json* v = find(key);
        if (!v) return;
        if (!v->is_boolean()) fail(path_ + "." + key, "must be a boolean");
        target = v->get<bool>();
    }

    void get_string(const std::string& key, std::string& target) {
        const json* v = find(key);
        if (!v) return;
        if (!v->is_string()) fail(path_ + "." + key, "must be a string");
        target = v->get<std::string>();
    }

    void get_number_list(const std::string& key, std::vector<double>& target) {
        const json* v = find(key);
        if (!v) return;
        if (!v->is_array()) fail(path_ + "." + key, "must be an array of numbers");
        std::vector<double> values;
        for (const auto& e : *v) {
            if (!e.is_number()) fail(path_ + "." + key, "must be an array of numbers");
            values.push_back(e.get<double>());
        }
        target = std::move(values);
    }

    void finish() {
        if (!obj_) return;
        for (auto it = obj_->begin(); it != obj_->end(); ++it) {
            if (std::find(consumed_.begin(), consumed_.end(), it.key()) == consumed_.end())
                fail(path_ + "." + it.key(), "unknown key");
        }
    }

private:
    const json* obj_;
    std::string path_;
    std::vector<std::string> consumed_;
};

Position3D parse_position(const json& v, const std::string& path) {
    Position3D p;
    Section s(&v, path);
    s.get_number("x", p.x);
    s.get_number("y", p.y);
    s.get_number("z", p.z);
    s.finish();
    return p;
}

json position_to_json(const Position3D& p) { return json{{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

}  // namespace

void ScenarioConfig::validate() const {
    check(std::isfinite(haps_position.x) && std::isfinite(haps_position.y) &&
              std::isfinite(haps_position.z),
          "geometry.haps_position", "coordinates must be finite");
    check(std::isfinite(uav_position.x) && std::isfinite(uav_position.y) &&
              std::isfinite(uav_position.z),
          "geometry.uav_position", "coordinates must be finite");
    check(uav_position.z > 0.0, "geometry.uav_position", "uav altitude must be > 0");
    check(haps_position.z > uav_position.z, "geometry.haps_position",
          "haps altitude must exceed uav altitude");
    check(user_area_radius >= 0.0 && std::isfinite(user_area_radius),
          "geometry.user_area_radius", "must be >= 0");
    check(num_users >= 1, "geometry.num_users", "must be >= 1");

    check(num_haps_antennas >= 1, "radio.num_haps_antennas", "must be >= 1");
    check(carrier_frequency > 0.0, "radio.carrier_frequency", "must be > 0");
    check(bandwidth > 0.0, "radio.bandwidth", "must be > 0");
    check(noise_figure >= 0.0, "radio.noise_figure", "must be >= 0");
    check(shadowing_sigma.los >= 0.0 && shadowing_sigma.nlos >= 0.0, "radio.shadowing_sigma",
          "must be >= 0");
    check(clutter_loss >= 0.0, "radio.clutter_loss", "must be >= 0");

    check(!los_table.empty(), "radio.los_table", "must not be empty");
    for (size_t i = 0; i < los_table.size(); ++i) {
        check(los_table[i].elevation_deg >= 0.0 && los_table[i].elevation_deg <= 90.0,
              "radio.los_table", "elevations must lie in [0, 90]");
        check(los_table[i].probability >= 0.0 && los_table[i].probability <= 1.0,
              "radio.los_table", "probabilities must lie in [0, 1]");
        if (i > 0)
            check(los_table[i].elevation_deg > los_table[i - 1].elevation_deg, "radio.los_table",
                  "elevations must be strictly increasing");
    }

    check(ris.num_ris_elements >= 1, "ris.num_ris_elements", "must be >= 1");
    check(ris.rho > 0.0, "ris.rho", "amplitude must be > 0");
    if (ris.ris_mode == RisMode::passive)
        check(ris.rho <= 1.0, "ris.rho", "passive amplitude must be <= 1");
    else
        check(ris.rho >= 1.0, "ris.rho", "active amplitude must be >= 1");
    check(ris.amp_efficiency > 0.0 && ris.amp_efficiency <= 1.0, "ris.amp_efficiency",
          "must lie in (0, 1]");
    if (ris.element_noise_power_w)
        check(*ris.element_noise_power_w >= 0.0, "ris.element_noise_power", "must be >= 0");
    if (ris.element_static_power_w)
        check(*ris.element_static_power_w >= 0.0, "ris.element_static_power", "must be >= 0");

    check(static_cast<int>(noma_coefficients.size()) == num_users, "noma.coefficients",
          "length must equal geometry.num_users");
    double sum = 0.0;
    for (size_t i = 0; i < noma_coefficients.size(); ++i) {
        check(noma_coefficients[i] > 0.0, "noma.coefficients", "coefficients must be positive");
        if (i > 0)
            check(noma_coefficients[i] <= noma_coefficients[i - 1], "noma.coefficients",
                  "coefficients must be non-increasing");
        sum += noma_coefficients[i];
    }
    check(std::abs(sum - 1.0) <= 1e-9, "noma.coefficients", "coefficients must sum to 1");
    check(static_cast<int>(rate_targets.size()) == num_users, "noma.rate_targets",
          "length must equal geometry.num_users");
    for (double t : rate_targets) check(t >= 0.0, "noma.rate_targets", "must be >= 0");

    check(impairments.kappa_tx >= 0.0, "impairments.kappa_tx", "must be >= 0");
    check(impairments.kappa_rx >= 0.0, "impairments.kappa_rx", "must be >= 0");
    check(impairments.kappa_ris >= 0.0, "impairments.kappa_ris", "must be >= 0");

    check(power.pa_efficiency > 0.0 && power.pa_efficiency <= 1.0, "power.pa_efficiency",
          "must lie in (0, 1]");
    check(power.haps_static_w >= 0.0, "power.haps_static", "must be >= 0");
    check(power.user_static_w >= 0.0, "power.user_static", "must be >= 0");
    check(power.uav_static_w >= 0.0, "power.uav_static", "must be >= 0");
    if (power.relay_pa_efficiency)
        check(*power.relay_pa_efficiency > 0.0 && *power.relay_pa_efficiency <= 1.0,
              "power.relay_pa_efficiency", "must lie in (0, 1]");

    auto check_axis = [](const std::vector<double>& values, const std::string& key) {
        check(!values.empty(), key, "must not be empty");
        for (size_t i = 1; i < values.size(); ++i)
            check(values[i] > values[i - 1], key, "values must be strictly increasing");
    };
    check_axis(sweep.tx_power_dbm_values, "sweep.tx_power_dbm_values");
    check_axis(sweep.rho_values, "sweep.rho_values");
    for (double r : sweep.rho_values)
        check(r >= 1.0, "sweep.rho_values", "active amplitude must be >= 1");
    check(!sweep.schemes.empty(), "sweep.schemes", "must not be empty");
    check(!sweep.conditions.empty(), "sweep.conditions", "must not be empty");

    check(run.trials >= 1, "run.trials", "must be >= 1");
    check(run.workers >= 0, "run.workers", "must be >= 0");
}

ScenarioConfig load_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error("", std::string("parse failure: ") + e.what(),
                           config_error::Kind::parse);
    }
    if (!doc.is_object())
        throw config_error("", "document root must be an object", config_error::Kind::parse);

    ScenarioConfig cfg;
    cfg.los_table = default_urban_los_table();

    Section root(&doc, "config");

    {
        Section s(root.find("geometry"), "geometry");
        if (const json* v = s.find("haps_position"))
            cfg.haps_position = parse_position(*v, "geometry.haps_position");
        if (const json* v = s.find("uav_position"))
            cfg.uav_position = parse_position(*v, "geometry.uav_position");
        s.get_number("user_area_radius", cfg.user_area_radius);
        s.get_int("num_users", cfg.num_users);
        s.finish();
    }
    {
        Section s(root.find("radio"), "radio");
        s.get_int("num_haps_antennas", cfg.num_haps_antennas);
        s.get_number("carrier_frequency", cfg.carrier_frequency);
        s.get_number("bandwidth", cfg.bandwidth);
        s.get_number("noise_figure", cfg.noise_figure);
        std::string env = "urban";
        s.get_string("environment", env);
        if (env != "urban") fail("radio.environment", "unknown environment '" + env + "'");
        cfg.environment = Environment::urban;
        {
            Section k(s.find("rician_k"), "radio.rician_k");
            k.get_number("haps_ground", cfg.rician_k.haps_ground);
            k.get_number("haps_uav", cfg.rician_k.haps_uav);
            k.get_number("uav_ground", cfg.rician_k.uav_ground);
            k.finish();
        }
        {
            Section sh(s.find("shadowing_sigma"), "radio.shadowing_sigma");
            sh.get_number("los", cfg.shadowing_sigma.los);
            sh.get_number("nlos", cfg.shadowing_sigma.nlos);
            sh.finish();
        }
        s.get_number("clutter_loss", cfg.clutter_loss);
        if (const json* v = s.find("los_table")) {
            if (!v->is_array()) fail("radio.los_table", "must be an array of [elevation, probability] pairs");
            std::vector<LosTableRow> table;
            for (const auto& row : *v) {
                if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
                    fail("radio.los_table", "must be an array of [elevation, probability] pairs");
                table.push_back({row[0].get<double>(), row[1].get<double>()});
            }
            cfg.los_table = std::move(table);
        }
        s.get_number("haps_antenna_gain_db", cfg.haps_antenna_gain_db);
        s.get_number("uav_antenna_gain_db", cfg.uav_antenna_gain_db);
        s.get_number("user_antenna_gain_db", cfg.user_antenna_gain_db);
        s.finish();
    }
    {
        Section s(root.find("ris"), "ris");
        s.get_int("num_ris_elements", cfg.ris.num_ris_elements);
        std::string mode = to_string(cfg.ris.ris_mode);
        s.get_string("ris_mode", mode);
        if (mode == "passive")
            cfg.ris.ris_mode = RisMode::passive;
        else if (mode == "active")
            cfg.ris.ris_mode = RisMode::active;
        else
            fail("ris.ris_mode", "unknown mode '" + mode + "' (expected passive or active)");
        s.get_number("rho", cfg.ris.rho);
        s.get_optional_number("element_noise_power", cfg.ris.element_noise_power_w);
        s.get_optional_number("element_static_power", cfg.ris.element_static_power_w);
        s.get_number("amp_efficiency", cfg.ris.amp_efficiency);
        s.get_number("element_gain_db", cfg.ris.element_gain_db);
        s.finish();
    }
    {
        Section s(root.find("noma"), "noma");
        const bool have_coefficients = s.find("coefficients") != nullptr;
        const bool have_targets = s.find("rate_targets") != nullptr;
        std::vector<double> coefficients;
        std::vector<double> targets;
        s.get_number_list("coefficients", coefficients);
        s.get_number_list("rate_targets", targets);
        s.finish();
        if (have_coefficients) {
            cfg.noma_coefficients = std::move(coefficients);
        } else if (cfg.num_users != 3) {
            // Defaults written for L = 3 adapt when only num_users changed:
            // a halving ladder normalized to 1.
            cfg.noma_coefficients.assign(cfg.num_users, 0.0);
            double ladder_sum = 0.0;
            for (int k = 0; k < cfg.num_users; ++k) {
                cfg.noma_coefficients[k] = std::pow(2.0, cfg.num_users - 1 - k);
                ladder_sum += cfg.noma_coefficients[k];
            }
            for (double& a : cfg.noma_coefficients) a /= ladder_sum;
        }
        if (have_targets)
            cfg.rate_targets = std::move(targets);
        else if (cfg.num_users != 3)
            cfg.rate_targets.assign(cfg.num_users, cfg.rate_targets.front());
    }
    {
        Section s(root.find("impairments"), "impairments");
        s.get_bool("enabled", cfg.impairments.enabled);
        s.get_number("kappa_tx", cfg.impairments.kappa_tx);
        s.get_number("kappa_rx", cfg.impairments.kappa_rx);
        s.get_number("kappa_ris", cfg.impairments.kappa_ris);
        s.finish();
    }
    {
        Section s(root.find("power"), "power");
        s.get_number("tx_power_dbm", cfg.power.tx_power_dbm);
        s.get_number("pa_efficiency", cfg.power.pa_efficiency);
        s.get_number("haps_static", cfg.power.haps_static_w);
        s.get_number("user_static", cfg.power.user_static_w);
        s.get_number("uav_static", cfg.power.uav_static_w);
        s.get_optional_number("relay_tx_power_dbm", cfg.power.relay_tx_power_dbm);
        s.get_optional_number("relay_pa_efficiency", cfg.power.relay_pa_efficiency);
        s.finish();
    }
    {
        Section s(root.find("sweep"), "sweep");
        s.get_number_list("tx_power_dbm_values", cfg.sweep.tx_power_dbm_values);
        s.get_number_list("rho_values", cfg.sweep.rho_values);
        if (const json* v = s.find("schemes")) {
            if (!v->is_array()) fail("sweep.schemes", "must be an array of scheme names");
            std::vector<Scheme> schemes;
            for (const auto& e : *v) {
                if (!e.is_string()) fail("sweep.schemes", "must be an array of scheme names");
                schemes.push_back(scheme_from_string(e.get<std::string>(), "sweep.schemes"));
            }
            cfg.sweep.schemes = std::move(schemes);
        }
        if (const json* v = s.find("conditions")) {
            if (!v->is_array()) fail("sweep.conditions", "must be an array of condition names");
            std::vector<Condition> conditions;
            for (const auto& e : *v) {
                if (!e.is_string()) fail("sweep.conditions", "must be an array of condition names");
                conditions.push_back(condition_from_string(e.get<std::string>(), "sweep.conditions"));
            }
            cfg.sweep.conditions = std::move(conditions);
        }
        s.finish();
    }
    {
        Section s(root.find("run"), "run");
        if (const json* v = s.find("seed")) {
            if (!v->is_number_unsigned() && !v->is_number_integer())
                fail("run.seed", "must be a non-negative integer");
            cfg.run.seed = v->get<std::uint64_t>();
        }
        s.get_int("trials", cfg.run.trials);
        s.get_int("workers", cfg.run.workers);
        s.finish();
    }
    root.finish();

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("", "cannot open config file '" + path + "'",
                           config_error::Kind::parse);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

std::string save_config(const ScenarioConfig& cfg) {
    json j;
    j["geometry"] = {{"haps_position", position_to_json(cfg.haps_position)},
                     {"uav_position", position_to_json(cfg.uav_position)},
                     {"user_area_radius", cfg.user_area_radius},
                     {"num_users", cfg.num_users}};

    json table = json::array();
    for (const auto& row : cfg.los_table) table.push_back({row.elevation_deg, row.probability});
    j["radio"] = {{"num_haps_antennas", cfg.num_haps_antennas},
                  {"carrier_frequency", cfg.carrier_frequency},
                  {"bandwidth", cfg.bandwidth},
                  {"noise_figure", cfg.noise_figure},
                  {"environment", "urban"},
                  {"rician_k",
                   {{"haps_ground", cfg.rician_k.haps_ground},
                    {"haps_uav", cfg.rician_k.haps_uav},
                    {"uav_ground", cfg.rician_k.uav_ground}}},
                  {"shadowing_sigma",
                   {{"los", cfg.shadowing_sigma.los}, {"nlos", cfg.shadowing_sigma.nlos}}},
                  {"clutter_loss", cfg.clutter_loss},
                  {"los_table", table},
                  {"haps_antenna_gain_db", cfg.haps_antenna_gain_db},
                  {"uav_antenna_gain_db", cfg.uav_antenna_gain_db},
                  {"user_antenna_gain_db", cfg.user_antenna_gain_db}};

    json ris = {{"num_ris_elements", cfg.ris.num_ris_elements},
                {"ris_mode", to_string(cfg.ris.ris_mode)},
                {"rho", cfg.ris.rho},
                {"amp_efficiency", cfg.ris.amp_efficiency},
                {"element_gain_db", cfg.ris.element_gain_db}};
    if (cfg.ris.element_noise_power_w) ris["element_noise_power"] = *cfg.ris.element_noise_power_w;
    if (cfg.ris.element_static_power_w)
        ris["element_static_power"] = *cfg.ris.element_static_power_w;
    j["ris"] = ris;

    j["noma"] = {{"coefficients", cfg.noma_coefficients}, {"rate_targets", cfg.rate_targets}};

    j["impairments"] = {{"enabled", cfg.impairments.enabled},
                        {"kappa_tx", cfg.impairments.kappa_tx},
                        {"kappa_rx", cfg.impairments.kappa_rx},
                        {"kappa_ris", cfg.impairments.kappa_ris}};

    json power = {{"tx_power_dbm", cfg.power.tx_power_dbm},
                  {"pa_efficiency", cfg.power.pa_efficiency},
                  {"haps_static", cfg.power.haps_static_w},
                  {"user_static", cfg.power.user_static_w},
                  {"uav_static", cfg.power.uav_static_w}};
    if (cfg.power.relay_tx_power_dbm) power["relay_tx_power_dbm"] = *cfg.power.relay_tx_power_dbm;
    if (cfg.power.relay_pa_efficiency)
        power["relay_pa_efficiency"] = *cfg.power.relay_pa_efficiency;
    j["power"] = power;

    json schemes = json::array();
    for (Scheme s : cfg.sweep.schemes) schemes.push_back(to_string(s));
    json conditions = json::array();
    for (Condition c : cfg.sweep.conditions) conditions.push_back(to_string(c));
    j["sweep"] = {{"tx_power_dbm_values", cfg.sweep.tx_power_dbm_values},
                  {"rho_values", cfg.sweep.rho_values},
                  {"schemes", schemes},
                  {"conditions", conditions}};

    j["run"] = {{"seed", cfg.run.seed}, {"trials", cfg.run.trials}, {"workers", cfg.run.workers}};

    return j.dump(2) + "\n";
}

double slant_distance(const Position3D& a, const Position3D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double elevation_angle(const Position3D& ground_point, const Position3D& aerial_point) {
    const double dz = aerial_point.z - ground_point.z;
    const double dx = aerial_point.x - ground_point.x;
    const double dy = aerial_point.y - ground_point.y;
    const double horizontal = std::hypot(dx, dy);
    if (dz <= 0.0) throw std::domain_error("elevation_angle: aerial point must be above ground point");
    return std::atan2(dz, horizontal) * 180.0 / M_PI;
}

LinkGeometry link_geometry(const Position3D& low, const Position3D& high, LinkClass link_class) {
    return LinkGeometry{slant_distance(low, high), elevation_angle(low, high), link_class};
}

std::vector<Position3D> place_users(const ScenarioConfig& config, Rng& rng) {
    std::vector<Position3D> users;
    users.reserve(config.num_users);
    for (int i = 0; i < config.num_users; ++i) {
        const double r = config.user_area_radius * std::sqrt(rng.uniform01());
        const double phi = 2.0 * M_PI * rng.uniform01();
        users.push_back({config.uav_position.x + r * std::cos(phi),
                         config.uav_position.y + r * std::sin(phi), 0.0});
    }
    return users;
}

}  // namespace ntnsim
