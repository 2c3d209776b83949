#include "projkit/config.hpp"

#include <fstream>

#include <json.hpp>

#include "projkit/dft.hpp"

namespace projkit {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double require_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw ConfigError(std::string("missing numeric '") + key + "' in " + where);
    }
    return obj[key].get<double>();
}

Vector vector_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty()) {
        throw ConfigError("expected a nonempty number array in " + where);
    }
    std::vector<double> coords;
    coords.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number()) throw ConfigError("non-numeric coordinate in " + where);
        coords.push_back(v.get<double>());
    }
    return Vector(std::move(coords));
}

SetPtr set_from_json(const json& j, const std::string& where);

SetPtr product_from_json(const json& j, const std::string& where) {
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty()) {
        throw ConfigError("product needs a nonempty 'components' array in " + where);
    }
    std::vector<SetPtr> parts;
    for (const auto& c : j["components"]) {
        parts.push_back(set_from_json(c, where + ".components"));
    }
    return std::make_shared<const ProductSet>(std::move(parts));
}

SetPtr set_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ConfigError("set description needs a 'type' string in " + where);
    }
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "fullspace") {
            reject_unknown(j, {"type", "dim"}, where);
            return std::make_shared<const FullSpaceSet>(
                static_cast<std::size_t>(require_number(j, "dim", where)));
        }
        if (type == "halfspace") {
            reject_unknown(j, {"type", "normal", "offset"}, where);
            return std::make_shared<const HalfspaceSet>(
                vector_from_json(j.value("normal", json::array()), where),
                require_number(j, "offset", where));
        }
        if (type == "finite_points") {
            reject_unknown(j, {"type", "points"}, where);
            if (!j.contains("points") || !j["points"].is_array()) {
                throw ConfigError("finite_points needs 'points' in " + where);
            }
            std::vector<Vector> pts;
            for (const auto& p : j["points"]) pts.push_back(vector_from_json(p, where));
            return std::make_shared<const FinitePointSet>(std::move(pts));
        }
        if (type == "sector") {
            reject_unknown(j, {"type", "theta_lo", "theta_hi", "radius_cap"}, where);
            std::optional<double> cap;
            if (j.contains("radius_cap")) cap = require_number(j, "radius_cap", where);
            return std::make_shared<const SectorSet>(require_number(j, "theta_lo", where),
                                                     require_number(j, "theta_hi", where), cap);
        }
        if (type == "epigraph") {
            reject_unknown(j, {"type", "curve", "bracket"}, where);
            if (!j.contains("curve") || !j["curve"].is_string()) {
                throw ConfigError("epigraph needs a 'curve' name in " + where);
            }
            const Vector br = vector_from_json(j.value("bracket", json::array()), where);
            if (br.dim() != 2) throw ConfigError("epigraph bracket must be [lo, hi] in " + where);
            return std::make_shared<const EpigraphSet>(curve_by_name(j["curve"].get<std::string>()),
                                                       br[0], br[1]);
        }
        if (type == "support") {
            reject_unknown(j, {"type", "mask", "n"}, where);
            const std::size_t n = static_cast<std::size_t>(require_number(j, "n", where));
            std::vector<std::size_t> on;
            for (const auto& v : j.value("mask", json::array())) {
                on.push_back(v.get<std::size_t>());
            }
            return std::make_shared<const SupportSet>(SupportSet::from_indices(on, n));
        }
        if (type == "fourier_magnitude") {
            reject_unknown(j, {"type", "amplitude"}, where);
            const Vector a = vector_from_json(j.value("amplitude", json::array()), where);
            return std::make_shared<const FourierMagnitudeSet>(a.coords());
        }
        if (type == "diagonal") {
            reject_unknown(j, {"type", "blocks", "block_dim"}, where);
            return std::make_shared<const DiagonalSet>(
                static_cast<std::size_t>(require_number(j, "blocks", where)),
                static_cast<std::size_t>(require_number(j, "block_dim", where)));
        }
        if (type == "product") {
            reject_unknown(j, {"type", "components"}, where);
            return product_from_json(j, where);
        }
        if (type == "cylinder") {
            reject_unknown(j, {"type", "radius", "h_lo", "h_hi"}, where);
            return std::make_shared<const CylinderSet>(require_number(j, "radius", where),
                                                       require_number(j, "h_lo", where),
                                                       require_number(j, "h_hi", where));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError("unknown set type '" + type + "' in " + where);
}

void pair_from_json(const json& j, ExperimentConfig& cfg) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ConfigError("pair description needs a 'type' string");
    }
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "discrete_spiral") {
            reject_unknown(j, {"type", "ray_angle", "ray_count", "start_radius", "floor"}, "pair");
            DiscreteSpiralSpec spec;
            if (j.contains("ray_count")) {
                spec = DiscreteSpiralSpec::from_ray_count(
                    static_cast<std::size_t>(require_number(j, "ray_count", "pair")));
            }
            if (j.contains("ray_angle")) spec.ray_angle = require_number(j, "ray_angle", "pair");
            if (j.contains("start_radius")) {
                spec.start_radius = require_number(j, "start_radius", "pair");
            }
            if (j.contains("floor")) spec.truncation_floor = require_number(j, "floor", "pair");
            const auto pair = build_discrete_spiral(spec);
            cfg.set_a = pair.a;
            cfg.set_b = pair.b;
            return;
        }
        if (type == "continuous_spiral") {
            reject_unknown(j, {"type", "r1", "floor", "circle_samples"}, "pair");
            ContinuousSpiralSpec spec;
            if (j.contains("r1")) spec.r1 = require_number(j, "r1", "pair");
            if (j.contains("floor")) spec.radial_floor = require_number(j, "floor", "pair");
            if (j.contains("circle_samples")) {
                spec.circle_samples =
                    static_cast<std::size_t>(require_number(j, "circle_samples", "pair"));
            }
            const auto pair = build_continuous_spiral(spec);
            cfg.set_a = pair.a;
            cfg.set_b = pair.b;
            return;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("pair: ") + e.what());
    }
    throw ConfigError("unknown pair type '" + type + "'");
}

Expected expected_from_json(const json& j) {
    Expected e;
    if (j.is_string()) {
        e.kind = expected_kind_from_string(j.get<std::string>());
        return e;
    }
    if (j.is_object()) {
        reject_unknown(j, {"kind", "rho"}, "expected");
        if (!j.contains("kind") || !j["kind"].is_string()) {
            throw ConfigError("expected.kind must be a string");
        }
        e.kind = expected_kind_from_string(j["kind"].get<std::string>());
        if (j.contains("rho")) e.rho = require_number(j, "rho", "expected");
        return e;
    }
    throw ConfigError("'expected' must be a string or an object");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(j,
                   {"name", "set_a", "set_b", "pair", "x0", "rule", "expected", "probe_point",
                    "diagnostics"},
                   "config");

    ExperimentConfig cfg;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ConfigError("'name' must be a string");
        cfg.name = j["name"].get<std::string>();
    }
    if (j.contains("pair")) {
        if (j.contains("set_a") || j.contains("set_b")) {
            throw ConfigError("give either 'pair' or 'set_a'/'set_b', not both");
        }
        pair_from_json(j["pair"], cfg);
    } else {
        if (!j.contains("set_a") || !j.contains("set_b")) {
            throw ConfigError("config needs 'set_a' and 'set_b' (or 'pair')");
        }
        cfg.set_a = set_from_json(j["set_a"], "set_a");
        cfg.set_b = set_from_json(j["set_b"], "set_b");
    }
    if (!j.contains("x0")) throw ConfigError("config needs 'x0'");
    cfg.x0 = vector_from_json(j["x0"], "x0");

    if (j.contains("rule")) {
        const json& r = j["rule"];
        reject_unknown(r, {"gap_tol", "step_tol", "max_iter", "stall_window"}, "rule");
        if (r.contains("gap_tol")) cfg.rule.gap_tol = require_number(r, "gap_tol", "rule");
        if (r.contains("step_tol")) cfg.rule.step_tol = require_number(r, "step_tol", "rule");
        if (r.contains("max_iter")) {
            cfg.rule.max_iter = static_cast<std::size_t>(require_number(r, "max_iter", "rule"));
        }
        if (r.contains("stall_window")) {
            cfg.rule.stall_window =
                static_cast<std::size_t>(require_number(r, "stall_window", "rule"));
        }
    }
    if (j.contains("expected")) cfg.expected = expected_from_json(j["expected"]);
    if (j.contains("probe_point")) {
        cfg.probe_point = vector_from_json(j["probe_point"], "probe_point");
    }
    if (j.contains("diagnostics")) {
        const json& d = j["diagnostics"];
        reject_unknown(d, {"omega_grid", "rate_kind", "holder"}, "diagnostics");
        if (d.contains("omega_grid")) {
            for (const auto& v : d["omega_grid"]) {
                if (!v.is_number()) throw ConfigError("omega_grid entries must be numbers");
                cfg.diagnostics.omega_grid.push_back(v.get<double>());
            }
        }
        if (d.contains("rate_kind")) {
            const std::string k = d["rate_kind"].get<std::string>();
            if (k == "power") {
                cfg.diagnostics.rate_kind = RateKind::power;
            } else if (k == "linear") {
                cfg.diagnostics.rate_kind = RateKind::linear;
            } else {
                throw ConfigError("rate_kind must be 'power' or 'linear'");
            }
        }
        if (d.contains("holder")) {
            const json& h = d["holder"];
            reject_unknown(h, {"sigma", "c", "radius", "samples", "seed"}, "holder");
            HolderParams params;
            params.sigma = require_number(h, "sigma", "holder");
            params.c = require_number(h, "c", "holder");
            if (h.contains("radius")) {
                params.neighborhood_radius = require_number(h, "radius", "holder");
            }
            if (h.contains("samples")) {
                params.sample_count =
                    static_cast<std::size_t>(require_number(h, "samples", "holder"));
            }
            if (h.contains("seed")) {
                params.seed = static_cast<std::uint64_t>(require_number(h, "seed", "holder"));
            }
            cfg.diagnostics.holder = params;
        }
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

namespace {

json set_summary(const ProjectableSet& set) {
    json j;
    j["type"] = set.name();
    j["dimension"] = set.dimension();
    if (const auto* hs = dynamic_cast<const HalfspaceSet*>(&set)) {
        j["normal"] = hs->normal().coords();
        j["offset"] = hs->offset();
    } else if (const auto* sc = dynamic_cast<const SectorSet*>(&set)) {
        j["theta_lo"] = sc->theta_lo();
        j["theta_hi"] = sc->theta_hi();
        if (sc->radius_cap()) j["radius_cap"] = *sc->radius_cap();
    } else if (const auto* ep = dynamic_cast<const EpigraphSet*>(&set)) {
        j["curve"] = ep->curve().name;
        j["bracket"] = {ep->bracket_lo(), ep->bracket_hi()};
    } else if (const auto* fp = dynamic_cast<const FinitePointSet*>(&set)) {
        j["count"] = fp->points().size();
        if (fp->points().size() <= 64) {
            json pts = json::array();
            for (const auto& p : fp->points()) pts.push_back(p.coords());
            j["points"] = pts;
        } else {
            j["points_truncated"] = true;
        }
    } else if (const auto* cy = dynamic_cast<const CylinderSet*>(&set)) {
        j["radius"] = cy->radius();
        j["h_lo"] = cy->h_lo();
        j["h_hi"] = cy->h_hi();
    }
    return j;
}

}  // namespace

std::string fixture_to_json(const ExperimentSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["summary"] = spec.summary;
    j["set_a"] = set_summary(*spec.set_a);
    j["set_b"] = set_summary(*spec.set_b);
    j["x0"] = spec.x0.coords();
    j["rule"] = {{"gap_tol", spec.rule.gap_tol},
                 {"step_tol", spec.rule.step_tol},
                 {"max_iter", spec.rule.max_iter},
                 {"stall_window", spec.rule.stall_window}};
    j["expected"] = to_string(spec.expected.kind);
    if (spec.expected.kind == ExpectedKind::converges_sublinear) {
        j["expected_rho"] = spec.expected.rho;
    }
    j["probe_point"] = spec.probe_point.coords();
    if (!spec.notes.empty()) j["notes"] = spec.notes;
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_fixture(const ExperimentSpec& spec) {
    ExperimentConfig cfg;
    cfg.name = spec.name;
    cfg.set_a = spec.set_a;
    cfg.set_b = spec.set_b;
    cfg.x0 = spec.x0;
    cfg.rule = spec.rule;
    cfg.expected = spec.expected;
    cfg.probe_point = spec.probe_point;
    return cfg;
}

}  // namespace projkit
