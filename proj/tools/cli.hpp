#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pgsurf/families.hpp"
#include "pgsurf/grid.hpp"
#include "pgsurf/surface.hpp"

namespace pgsurf::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kConfigError = 2,
    kEmptyGrid = 3,
    kBranchViolation = 4,
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies one "dotted.key=value" override. The value is parsed as JSON and falls back to a
/// plain string.
void apply_override(Json& root, const std::string& assignment);

/// Reads the JSON config at `path` and applies the overrides in order.
Json load_config(const std::string& path, const std::vector<std::string>& overrides);

/// Surface selected by the "surface" section: a named family or a fixture.
struct SurfaceSpec {
    std::string name;
    FactorableSurface surface;
    Grid2 domain;
    std::optional<Family> family;
    std::optional<Fixture> fixture;
    Json describe;
};

SurfaceSpec surface_from_config(const Json& root);
/// The surface's default domain with any "grid" keys applied on top.
Grid2 grid_from_config(const Json& root, const Grid2& fallback);
SurfaceFn surface_fn_from_config(const Json& root, const FactorableSurface& s);
double tolerance(const Json& root, const std::string& key, double fallback);

// Typed access to config sections; every mismatch is a ConfigError.
const Json& section(const Json& root, const std::string& name);
void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where);
double get_number(const Json& obj, const std::string& key, double fallback);
long long get_integer(const Json& obj, const std::string& key, long long fallback);
std::string get_string(const Json& obj, const std::string& key, const std::string& fallback);
Causal get_causal(const Json& obj, const std::string& key, Causal fallback);

/// %.17g
std::string fmt_double(double v);

int run_curvature(const Json& cfg, std::ostream& out, std::ostream& err);
int run_verify(const Json& cfg, std::ostream& out, std::ostream& err);
int run_reconstruct(const Json& cfg, std::ostream& out, std::ostream& err);
int run_probe(const Json& cfg, std::ostream& out, std::ostream& err);
int run_mesh(const Json& cfg, std::ostream& out, std::ostream& err);

/// Dispatches a loaded config to the named command, mapping library errors to exit codes.
int run_command(const std::string& command, const Json& cfg, std::ostream& out, std::ostream& err);

/// Full command line: pg-surf <command> --config <path> [--set key=value ...].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgsurf::cli
