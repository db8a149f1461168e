#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "cli.hpp"
#include "pgsurf/errors.hpp"

namespace pgsurf::cli {

namespace {

const Json kEmpty = Json::object();

}  // namespace

std::string fmt_double(double v) { return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v); }

void apply_override(Json& root, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    Json value = Json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        value = text;
    }
    Json* node = &root;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
        if (part.empty()) {
            throw ConfigError("--set: empty path component in '" + key + "'");
        }
        if (!node->is_object()) {
            throw ConfigError("--set: '" + key + "' descends into a non-object");
        }
        if (dot == std::string::npos) {
            (*node)[part] = std::move(value);
            return;
        }
        node = &(*node)[part];
        if (node->is_null()) {
            *node = Json::object();
        }
        start = dot + 1;
    }
}

Json load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    Json root = Json::parse(in, nullptr, false);
    if (root.is_discarded()) {
        throw ConfigError("config '" + path + "' is not valid JSON");
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    for (const auto& o : overrides) {
        apply_override(root, o);
    }
    return root;
}

const Json& section(const Json& root, const std::string& name) {
    const auto it = root.find(name);
    if (it == root.end()) {
        return kEmpty;
    }
    if (!it->is_object()) {
        throw ConfigError("'" + name + "' must be an object");
    }
    return *it;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || k == a;
        }
        if (!known) {
            throw ConfigError("unknown key '" + k + "' in " + where);
        }
    }
}

double get_number(const Json& obj, const std::string& key, double fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        throw ConfigError("'" + key + "' must be a number");
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError("'" + key + "' must be finite");
    }
    return v;
}

long long get_integer(const Json& obj, const std::string& key, long long fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_integer()) {
        throw ConfigError("'" + key + "' must be an integer");
    }
    return it->get<long long>();
}

std::string get_string(const Json& obj, const std::string& key, const std::string& fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        throw ConfigError("'" + key + "' must be a string");
    }
    return it->get<std::string>();
}

Causal get_causal(const Json& obj, const std::string& key, Causal fallback) {
    const std::string s = get_string(obj, key, std::string(to_string(fallback)));
    if (s == "spacelike") return Causal::spacelike;
    if (s == "timelike") return Causal::timelike;
    throw ConfigError("'" + key + "' must be \"spacelike\" or \"timelike\"");
}

double tolerance(const Json& root, const std::string& key, double fallback) {
    const Json& t = section(root, "tolerances");
    check_keys(t, {"constancy", "cross_check", "motion", "reconstruct", "probe_floor", "probe_control"},
               "tolerances");
    const double v = get_number(t, key, fallback);
    if (!(v > 0.0)) {
        throw ConfigError("tolerance '" + key + "' must be positive");
    }
    return v;
}

SurfaceSpec surface_from_config(const Json& root) {
    const Json& s = section(root, "surface");
    check_keys(s, {"family", "fixture", "K0", "H0", "lambda1", "lambda2", "lambda3", "f0", "sign",
                   "causal", "g_exponent_scale"},
               "surface");
    const bool has_family = s.contains("family");
    const bool has_fixture = s.contains("fixture");
    if (has_family == has_fixture) {
        throw ConfigError("surface needs exactly one of 'family' or 'fixture'");
    }
    SurfaceSpec spec;
    if (has_fixture) {
        spec.name = get_string(s, "fixture", "");
        auto fx = find_fixture(spec.name);
        if (!fx) {
            throw ConfigError("unknown fixture '" + spec.name + "'");
        }
        spec.surface = fx->surface;
        spec.domain = fx->domain;
        spec.describe = {{"fixture", spec.name}};
        spec.fixture = std::move(fx);
        return spec;
    }
    spec.name = get_string(s, "family", "");
    FamilyParams p;
    p.K0 = get_number(s, "K0", 1.0);
    p.H0 = get_number(s, "H0", 0.5);
    p.lambda1 = get_number(s, "lambda1", spec.name == "thm42" ? 1.0 : 0.0);
    p.lambda2 = get_number(s, "lambda2", spec.name == "thm42" ? 1.0 : 0.0);
    p.lambda3 = get_number(s, "lambda3", 0.0);
    p.f0 = get_number(s, "f0", 1.0);
    const long long sign = get_integer(s, "sign", 1);
    if (sign != 1 && sign != -1) {
        throw ConfigError("'sign' must be 1 or -1");
    }
    p.sign = static_cast<int>(sign);
    p.causal = get_causal(s, "causal", Causal::spacelike);
    p.g_exponent_scale = get_number(s, "g_exponent_scale", 1.0);
    Family fam = make_family(spec.name, p);
    spec.surface = fam.surface;
    spec.domain = fam.domain;
    spec.describe = {{"family", spec.name}};
    if (spec.name == "thm31") {
        spec.describe["K0"] = p.K0;
        spec.describe["lambda1"] = p.lambda1;
        spec.describe["lambda2"] = p.lambda2;
        spec.describe["sign"] = p.sign;
    } else {
        spec.describe["H0"] = p.H0;
        spec.describe["lambda1"] = p.lambda1;
        spec.describe["lambda2"] = p.lambda2;
        if (spec.name == "thm32") {
            spec.describe["f0"] = p.f0;
        } else {
            spec.describe["lambda3"] = p.lambda3;
            spec.describe["g_exponent_scale"] = p.g_exponent_scale;
        }
        spec.describe["causal"] = to_string(p.causal);
    }
    spec.family = std::move(fam);
    return spec;
}

Grid2 grid_from_config(const Json& root, const Grid2& fallback) {
    const Json& g = section(root, "grid");
    check_keys(g, {"u1", "u2", "n1", "n2"}, "grid");
    Grid2 out = fallback;
    auto range = [&](const char* key, double& lo, double& hi) {
        const auto it = g.find(key);
        if (it == g.end()) {
            return;
        }
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
            throw ConfigError(std::string("grid.") + key + " must be [lo, hi]");
        }
        lo = (*it)[0].get<double>();
        hi = (*it)[1].get<double>();
    };
    range("u1", out.u1_lo, out.u1_hi);
    range("u2", out.u2_lo, out.u2_hi);
    const long long n1 = get_integer(g, "n1", static_cast<long long>(out.n1));
    const long long n2 = get_integer(g, "n2", static_cast<long long>(out.n2));
    if (n1 < 2 || n2 < 2) {
        throw ConfigError("grid resolution must be at least 2 per axis");
    }
    out.n1 = static_cast<std::size_t>(n1);
    out.n2 = static_cast<std::size_t>(n2);
    try {
        out.validate();
    } catch (const GridRejected& e) {
        throw ConfigError(e.what());
    }
    return out;
}

SurfaceFn surface_fn_from_config(const Json& root, const FactorableSurface& s) {
    const Json& d = section(root, "derivatives");
    check_keys(d, {"mode", "step"}, "derivatives");
    const std::string mode = get_string(d, "mode", "analytic");
    const double step = get_number(d, "step", 1e-4);
    if (!(step > 0.0)) {
        throw ConfigError("derivatives.step must be positive");
    }
    if (mode == "analytic") {
        return s.surface_fn(DerivativeMode::analytic);
    }
    if (mode == "finite_difference") {
        return s.surface_fn(DerivativeMode::finite_difference, step);
    }
    throw ConfigError("derivatives.mode must be \"analytic\" or \"finite_difference\"");
}

}  // namespace pgsurf::cli
