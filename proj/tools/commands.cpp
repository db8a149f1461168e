#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cli.hpp"
#include "pgsurf/errors.hpp"
#include "pgsurf/probe.hpp"
#include "pgsurf/reconstruct.hpp"

namespace pgsurf::cli {

namespace {

struct PointEval {
    double u1 = 0.0;
    double u2 = 0.0;
    bool has_position = false;
    Vec3 position;
    bool ok = false;
    Curvature c;
};

std::vector<PointEval> evaluate_grid(const SurfaceFn& fn, const Grid2& g) {
    std::vector<PointEval> pts(g.size());
    parallel_for(
        pts.size(),
        [&](std::size_t idx) {
            PointEval& p = pts[idx];
            p.u1 = g.u1(idx / g.n2);
            p.u2 = g.u2(idx % g.n2);
            try {
                p.position = fn.position(p.u1, p.u2);
                p.has_position = std::isfinite(p.position.x) && std::isfinite(p.position.y) &&
                                 std::isfinite(p.position.z);
                p.c = curvature(fn.jet(p.u1, p.u2));
                p.ok = p.has_position && std::isfinite(p.c.K) && std::isfinite(p.c.H);
            } catch (const LightlikeSurface&) {
            } catch (const InadmissiblePatch&) {
            } catch (const DomainError&) {
            }
        },
        default_thread_count());
    return pts;
}

struct Stats {
    std::size_t n = 0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double max_dev = 0.0;
    double stddev = 0.0;
};

Stats stats_of(const std::vector<double>& v) {
    Stats s;
    s.n = v.size();
    if (v.empty()) {
        return s;
    }
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    for (double x : v) s.mean += x;
    s.mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        s.max_dev = std::max(s.max_dev, std::abs(x - s.mean));
        ss += (x - s.mean) * (x - s.mean);
    }
    s.stddev = std::sqrt(ss / static_cast<double>(v.size()));
    return s;
}

Json to_json(const Stats& s) {
    return {{"mean", s.mean}, {"min", s.min}, {"max", s.max}, {"max_dev", s.max_dev},
            {"stddev", s.stddev}};
}

Json to_json(const Grid2& g) {
    return {{"u1", {g.u1_lo, g.u1_hi}}, {"u2", {g.u2_lo, g.u2_hi}}, {"n1", g.n1}, {"n2", g.n2}};
}

std::string output_path(const Json& cfg, const char* key) {
    const Json& o = section(cfg, "output");
    check_keys(o, {"csv", "json", "obj", "sidecar"}, "output");
    return get_string(o, key, "");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot write '" + path + "'");
    }
    f << content;
    if (!f) {
        throw ConfigError("write to '" + path + "' failed");
    }
}

void emit(const Json& cfg, const Json& report, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    out << text;
    if (const auto path = output_path(cfg, "json"); !path.empty()) {
        write_file(path, text);
    }
}

std::string mode_name(const Json& cfg) {
    return get_string(section(cfg, "derivatives"), "mode", "analytic");
}

// Value in the specialized-formula convention, as used by Family::attained.
double specialized_convention(const Curvature& c, Quantity q) {
    return q == Quantity::K ? k_in_factorable_convention(c) : kSignH * c.H;
}

struct Expectation {
    Quantity quantity;
    double value;
};

std::vector<Expectation> expectations(const SurfaceSpec& spec) {
    if (spec.family) {
        return {{spec.family->quantity, spec.family->attained}};
    }
    std::vector<Expectation> out;
    if (spec.fixture->K) out.push_back({Quantity::K, *spec.fixture->K});
    if (spec.fixture->H) out.push_back({Quantity::H, *spec.fixture->H});
    return out;
}

const char* quantity_name(Quantity q) { return q == Quantity::K ? "K" : "H"; }

Motion random_motion(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(-2.0, 2.0);
    std::uniform_real_distribution<double> th(-1.5, 1.5);
    Motion m;
    m.a1 = a(rng);
    m.a2 = a(rng);
    m.a3 = a(rng);
    m.a4 = a(rng);
    m.a5 = a(rng);
    m.theta = th(rng);
    return m;
}

}  // namespace

int run_curvature(const Json& cfg, std::ostream& out, std::ostream& err) {
    const SurfaceSpec spec = surface_from_config(cfg);
    const Grid2 grid = grid_from_config(cfg, spec.domain);
    const SurfaceFn fn = surface_fn_from_config(cfg, spec.surface);
    const auto pts = evaluate_grid(fn, grid);

    std::string csv = "u1,u2,x,y,z,K,H,epsilon,W,excluded\n";
    std::vector<double> ks, hs;
    std::size_t spacelike = 0, timelike = 0;
    for (const auto& p : pts) {
        csv += fmt_double(p.u1) + "," + fmt_double(p.u2) + ",";
        if (p.has_position) {
            csv += fmt_double(p.position.x) + "," + fmt_double(p.position.y) + "," +
                   fmt_double(p.position.z) + ",";
        } else {
            csv += ",,,";
        }
        if (p.ok) {
            csv += fmt::format("{},{},{},{},0\n", fmt_double(p.c.K), fmt_double(p.c.H), p.c.epsilon,
                               fmt_double(p.c.W));
            ks.push_back(p.c.K);
            hs.push_back(p.c.H);
            (p.c.epsilon > 0 ? spacelike : timelike)++;
        } else {
            csv += ",,,,1\n";
        }
    }
    if (const auto path = output_path(cfg, "csv"); !path.empty()) {
        write_file(path, csv);
    }

    Json report;
    report["command"] = "curvature";
    report["surface"] = spec.describe;
    report["grid"] = to_json(grid);
    report["derivatives"] = mode_name(cfg);
    report["points"] = pts.size();
    report["evaluated"] = ks.size();
    report["excluded"] = pts.size() - ks.size();
    report["spacelike"] = spacelike;
    report["timelike"] = timelike;
    report["K"] = to_json(stats_of(ks));
    report["H"] = to_json(stats_of(hs));
    if (spec.family) {
        const Family& f = *spec.family;
        // general-pipeline value of the attained constant
        const double eps = f.causal == Causal::spacelike ? 1.0 : -1.0;
        const double pipeline = f.quantity == Quantity::K ? -eps * f.attained : kSignH * f.attained;
        report["expected"] = {{"quantity", quantity_name(f.quantity)},
                              {"attained", f.attained},
                              {"pipeline", pipeline}};
    }
    emit(cfg, report, out);
    if (ks.empty()) {
        err << "pg-surf: every grid point is lightlike or outside the surface domain\n";
        return kEmptyGrid;
    }
    return kOk;
}

int run_verify(const Json& cfg, std::ostream& out, std::ostream& err) {
    const SurfaceSpec spec = surface_from_config(cfg);
    const Grid2 grid = grid_from_config(cfg, spec.domain);
    const SurfaceFn fn = surface_fn_from_config(cfg, spec.surface);
    const bool fd = fn.mode() == DerivativeMode::finite_difference;
    const double tol_const = tolerance(cfg, "constancy", fd ? 1e-4 : 1e-7);
    const double tol_cross = tolerance(cfg, "cross_check", 1e-8);
    const double tol_motion = tolerance(cfg, "motion", fd ? 1e-4 : 1e-8);
    const Json& v = section(cfg, "verify");
    check_keys(v, {"motions", "seed"}, "verify");
    const long long motions = get_integer(v, "motions", 10);
    const long long seed = get_integer(v, "seed", 1);
    if (motions < 0) {
        throw ConfigError("verify.motions must be non-negative");
    }

    const auto pts = evaluate_grid(fn, grid);
    const std::size_t bad = static_cast<std::size_t>(
        std::count_if(pts.begin(), pts.end(), [](const PointEval& p) { return !p.ok; }));
    if (bad == pts.size()) {
        err << "pg-surf: every grid point is lightlike or outside the surface domain\n";
        return kEmptyGrid;
    }

    Json suites = Json::array();
    auto add_suite = [&](const std::string& name, bool pass, double metric, double tol,
                         const std::string& detail) {
        suites.push_back({{"name", name}, {"pass", pass}, {"metric", metric}, {"tolerance", tol},
                          {"detail", detail}});
    };

    // constancy
    {
        double metric = 0.0;
        std::string detail;
        for (const auto& e : expectations(spec)) {
            std::vector<double> vals;
            double spec_dev = 0.0;
            for (const auto& p : pts) {
                if (!p.ok) continue;
                vals.push_back(specialized_convention(p.c, e.quantity));
                try {
                    const double s = e.quantity == Quantity::K ? k_specialized(spec.surface, p.u1, p.u2)
                                                               : h_specialized(spec.surface, p.u1, p.u2);
                    spec_dev = std::max(spec_dev, std::abs(s - e.value));
                } catch (const LightlikeLocus&) {
                    spec_dev = std::numeric_limits<double>::infinity();
                }
            }
            const Stats s = stats_of(vals);
            const double m = std::max({s.max_dev, std::abs(s.mean - e.value), spec_dev});
            metric = std::max(metric, m);
            detail += fmt::format("{}{}: expected {}, mean {}, max_dev {}, specialized max_dev {}",
                                  detail.empty() ? "" : "; ", quantity_name(e.quantity), e.value,
                                  s.mean, s.max_dev, spec_dev);
        }
        if (bad > 0) {
            detail += fmt::format("; {} grid points not evaluable", bad);
        }
        add_suite("constancy", bad == 0 && metric < tol_const, metric, tol_const, detail);
    }

    // cross-check of the specialized formulas against the general pipeline
    {
        try {
            const CrossCheckReport r = cross_check(spec.surface, grid);
            const double metric = std::max(r.max_dk, r.max_dh);
            std::string detail = fmt::format(
                "max_dk {}, max_dh {}, signs K(spacelike) {} K(timelike) {} H(spacelike) {} H(timelike) {}",
                r.max_dk, r.max_dh, r.k_spacelike.sign().value_or(0),
                r.k_timelike.sign().value_or(0), r.h_spacelike.sign().value_or(0),
                r.h_timelike.sign().value_or(0));
            if (!r.matches_documented) {
                detail += "; observed sign differs from the documented convention";
            }
            add_suite("cross_check", r.matches_documented && metric < tol_cross, metric, tol_cross, detail);
        } catch (const GridRejected& e) {
            add_suite("cross_check", false, std::numeric_limits<double>::infinity(), tol_cross, e.what());
        }
    }

    // motion invariance
    {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        double metric = 0.0;
        bool eps_ok = true;
        for (long long i = 0; i < motions; ++i) {
            const Motion m = random_motion(rng);
            const auto moved = evaluate_grid(fn.moved(m), grid);
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (pts[k].ok != moved[k].ok) {
                    eps_ok = false;
                    continue;
                }
                if (!pts[k].ok) continue;
                const Curvature& a = pts[k].c;
                const Curvature& b = moved[k].c;
                metric = std::max(metric, std::abs(a.K - b.K) / std::max(1.0, std::abs(a.K)));
                metric = std::max(metric, std::abs(a.H - b.H) / std::max(1.0, std::abs(a.H)));
                eps_ok = eps_ok && a.epsilon == b.epsilon;
            }
        }
        add_suite("motion_invariance", eps_ok && metric < tol_motion, metric, tol_motion,
                  fmt::format("{} motions, seed {}{}", motions, seed,
                              eps_ok ? "" : "; causal character changed"));
    }

    Json failing = Json::array();
    for (const auto& s : suites) {
        if (!s["pass"].get<bool>()) failing.push_back(s["name"]);
    }
    Json report;
    report["command"] = "verify";
    report["surface"] = spec.describe;
    report["grid"] = to_json(grid);
    report["derivatives"] = mode_name(cfg);
    report["suites"] = suites;
    report["failing"] = failing;
    report["pass"] = failing.empty();
    emit(cfg, report, out);
    if (!failing.empty()) {
        std::string names;
        for (const auto& f : failing) names += (names.empty() ? "" : ", ") + f.get<std::string>();
        err << "pg-surf: verify failed: " << names << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int run_reconstruct(const Json& cfg, std::ostream& out, std::ostream& err) {
    const Json& r = section(cfg, "reconstruct");
    const std::string family = get_string(r, "family", "thm31");
    const double tol = tolerance(cfg, "reconstruct", 1e-6);
    ReconstructionReport rep;
    Json params;
    bool relative = false;
    if (family == "thm31") {
        check_keys(r, {"family", "K0", "g0", "lambda1", "sign", "x1", "h"}, "reconstruct");
        Thm31Problem p;
        p.K0 = get_number(r, "K0", p.K0);
        p.g0 = get_number(r, "g0", p.g0);
        p.lambda1 = get_number(r, "lambda1", p.lambda1);
        p.sign = get_integer(r, "sign", 1) < 0 ? -1 : 1;
        p.x1 = get_number(r, "x1", p.x1);
        p.h = get_number(r, "h", p.h);
        params = {{"K0", p.K0}, {"g0", p.g0}, {"lambda1", p.lambda1}, {"sign", p.sign}};
        rep = reconstruct_thm31(p);
    } else if (family == "thm32") {
        check_keys(r, {"family", "H0", "f0", "lambda", "causal", "branch", "y0", "length", "h"},
                   "reconstruct");
        const Causal c = get_causal(r, "causal", Causal::timelike);
        Thm32Problem p = thm32_problem(get_number(r, "H0", 0.5), get_number(r, "f0", 1.0),
                                       get_number(r, "lambda", 0.0), c, get_number(r, "y0", 1.2),
                                       get_number(r, "length", 1.0), get_number(r, "h", 1e-3));
        p.causal = get_causal(r, "branch", c);
        params = {{"H0", p.H0}, {"f0", p.f0}, {"initial_conditions", to_string(c)},
                  {"branch", to_string(p.causal)}};
        rep = reconstruct_thm32(p);
    } else if (family == "thm42") {
        check_keys(r, {"family", "H0", "lambda1", "lambda2", "lambda3", "causal", "z0", "length", "h",
                       "w_init"},
                   "reconstruct");
        Thm42Problem p;
        p.H0 = get_number(r, "H0", p.H0);
        p.lambda1 = get_number(r, "lambda1", p.lambda1);
        p.lambda2 = get_number(r, "lambda2", p.lambda2);
        p.lambda3 = get_number(r, "lambda3", p.lambda3);
        p.causal = get_causal(r, "causal", p.causal);
        p.z0 = get_number(r, "z0", p.z0);
        p.length = get_number(r, "length", p.length);
        p.h = get_number(r, "h", p.h);
        if (r.contains("w_init")) p.w_init = get_number(r, "w_init", 0.0);
        params = {{"H0", p.H0}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2}, {"lambda3", p.lambda3},
                  {"causal", to_string(p.causal)}};
        rep = reconstruct_thm42(p);
        relative = true;
    } else {
        throw ConfigError("reconstruct.family must be \"thm31\", \"thm32\" or \"thm42\"");
    }

    if (const auto path = output_path(cfg, "csv"); !path.empty()) {
        std::string csv = "t,numeric,closed,error\n";
        for (std::size_t i = 0; i < rep.t.size(); ++i) {
            csv += fmt::format("{},{},{},{}\n", fmt_double(rep.t[i]), fmt_double(rep.numeric[i]),
                               fmt_double(rep.closed[i]),
                               fmt_double(std::abs(rep.numeric[i] - rep.closed[i])));
        }
        write_file(path, csv);
    }
    const double metric = relative ? rep.max_relative_error : rep.max_error;
    const bool pass = metric < tol;
    Json report;
    report["command"] = "reconstruct";
    report["family"] = family;
    report["parameters"] = params;
    report["h"] = rep.h;
    report["corridor"] = {rep.t0, rep.t1};
    report["steps"] = rep.steps;
    report["max_error"] = rep.max_error;
    report["max_relative_error"] = rep.max_relative_error;
    report["metric"] = relative ? "max_relative_error" : "max_error";
    report["tolerance"] = tol;
    report["pass"] = pass;
    report["note"] = rep.note;
    emit(cfg, report, out);
    if (!pass) {
        err << fmt::format("pg-surf: reconstruction error {} exceeds tolerance {}\n", metric, tol);
        return kCheckFailed;
    }
    return kOk;
}

int run_probe(const Json& cfg, std::ostream& out, std::ostream& err) {
    const Json& p = section(cfg, "probe");
    check_keys(p, {"K0", "ansatz", "degree", "budget", "restarts", "seed", "init_scale"}, "probe");
    ProbeConfig pc;
    pc.K0 = get_number(p, "K0", pc.K0);
    const std::string ansatz = get_string(p, "ansatz", "polynomial");
    if (ansatz == "polynomial") {
        pc.ansatz = Ansatz::polynomial;
    } else if (ansatz == "exp_polynomial") {
        pc.ansatz = Ansatz::exp_polynomial;
    } else {
        throw ConfigError("probe.ansatz must be \"polynomial\" or \"exp_polynomial\"");
    }
    const long long degree = get_integer(p, "degree", pc.degree);
    const long long budget = get_integer(p, "budget", static_cast<long long>(pc.budget));
    const long long restarts = get_integer(p, "restarts", static_cast<long long>(pc.restarts));
    const long long seed = get_integer(p, "seed", static_cast<long long>(pc.seed));
    if (degree < 0 || degree > 4) throw ConfigError("probe.degree must be in [0, 4]");
    if (budget < 0) throw ConfigError("probe.budget must be non-negative");
    if (restarts < 1) throw ConfigError("probe.restarts must be at least 1");
    pc.degree = static_cast<int>(degree);
    pc.budget = static_cast<std::size_t>(budget);
    pc.restarts = static_cast<std::size_t>(restarts);
    pc.seed = static_cast<std::uint64_t>(seed);
    pc.init_scale = get_number(p, "init_scale", pc.init_scale);
    pc.grid = grid_from_config(cfg, pc.grid);
    pc.threads = default_thread_count();
    const double floor = tolerance(cfg, "probe_floor", 0.05);
    const double control = tolerance(cfg, "probe_control", 1e-6);

    const ProbeReport rep = nonexistence_probe(pc);
    const bool is_control = pc.K0 == 0.0;
    const bool pass = is_control ? rep.best_residual < control : rep.best_residual > floor;
    Json report;
    report["command"] = "probe";
    report["scope"] = rep.scope;
    report["K0"] = rep.K0;
    report["best_residual"] = rep.best_residual;
    report["initial_residual"] = rep.initial_residual;
    report["evaluations"] = rep.evaluations;
    report["best_restart"] = rep.best_restart;
    report["best_params"] = rep.best_params;
    report["criterion"] = is_control ? fmt::format("best_residual < {}", control)
                                     : fmt::format("best_residual > {}", floor);
    report["pass"] = pass;
    emit(cfg, report, out);
    if (!pass) {
        err << "pg-surf: probe criterion not met: " << report["criterion"].get<std::string>() << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int run_mesh(const Json& cfg, std::ostream& out, std::ostream& err) {
    const SurfaceSpec spec = surface_from_config(cfg);
    const Grid2 grid = grid_from_config(cfg, spec.domain);
    const SurfaceFn fn = surface_fn_from_config(cfg, spec.surface);
    const std::string obj_path = output_path(cfg, "obj");
    if (obj_path.empty()) {
        throw ConfigError("mesh needs output.obj");
    }
    std::string sidecar_path = output_path(cfg, "sidecar");
    if (sidecar_path.empty()) {
        sidecar_path = std::filesystem::path(obj_path).replace_extension(".csv").string();
    }
    const auto pts = evaluate_grid(fn, grid);

    std::vector<std::size_t> vertex(pts.size(), 0);  // 1-based OBJ index, 0 = excluded
    std::size_t nv = 0;
    std::string obj_v, sidecar = "vertex,u1,u2,K,H,epsilon,W\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        if (!p.ok) continue;
        vertex[i] = ++nv;
        obj_v += fmt::format("v {} {} {}\n", fmt_double(p.position.x), fmt_double(p.position.y),
                             fmt_double(p.position.z));
        sidecar += fmt::format("{},{},{},{},{},{},{}\n", nv, fmt_double(p.u1), fmt_double(p.u2),
                               fmt_double(p.c.K), fmt_double(p.c.H), p.c.epsilon, fmt_double(p.c.W));
    }
    if (nv == 0) {
        err << "pg-surf: no admissible vertex to mesh\n";
        return kEmptyGrid;
    }
    std::string obj_f;
    std::size_t nf = 0;
    for (std::size_t i = 0; i + 1 < grid.n1; ++i) {
        for (std::size_t k = 0; k + 1 < grid.n2; ++k) {
            const std::size_t a = vertex[i * grid.n2 + k], b = vertex[(i + 1) * grid.n2 + k],
                              c = vertex[(i + 1) * grid.n2 + k + 1], d = vertex[i * grid.n2 + k + 1];
            if (a && b && c && d) {
                obj_f += fmt::format("f {} {} {} {}\n", a, b, c, d);
                ++nf;
            }
        }
    }
    write_file(obj_path, fmt::format("# pg-surf mesh: {} vertices, {} quads\n", nv, nf) + obj_v + obj_f);
    write_file(sidecar_path, sidecar);

    Json report;
    report["command"] = "mesh";
    report["surface"] = spec.describe;
    report["grid"] = to_json(grid);
    report["obj"] = obj_path;
    report["sidecar"] = sidecar_path;
    report["vertices"] = nv;
    report["quads"] = nf;
    report["excluded"] = pts.size() - nv;
    emit(cfg, report, out);
    return kOk;
}

int run_command(const std::string& command, const Json& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (command == "curvature") return run_curvature(cfg, out, err);
        if (command == "verify") return run_verify(cfg, out, err);
        if (command == "reconstruct") return run_reconstruct(cfg, out, err);
        if (command == "probe") return run_probe(cfg, out, err);
        if (command == "mesh") return run_mesh(cfg, out, err);
        err << "pg-surf: unknown command '" << command << "'\n";
        return kConfigError;
    } catch (const ConfigError& e) {
        err << "pg-surf: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidParams& e) {
        err << "pg-surf: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const GridRejected& e) {
        err << "pg-surf: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DomainError& e) {
        err << "pg-surf: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const BranchViolation& e) {
        err << "pg-surf: branch violation: " << e.what() << "\n";
        return kBranchViolation;
    } catch (const LightlikeSurface& e) {
        err << "pg-surf: " << e.what() << "\n";
        return kEmptyGrid;
    } catch (const std::exception& e) {
        err << "pg-surf: " << e.what() << "\n";
        return kCheckFailed;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature of factorable surfaces in pseudo-Galilean space", "pg-surf"};
    app.require_subcommand(1);
    std::string config;
    std::vector<std::string> sets;
    const std::pair<const char*, const char*> subcommands[] = {
        {"curvature", "K, H and causal character over a grid"},
        {"verify", "constancy, cross-check and motion-invariance suites"},
        {"reconstruct", "integrate a profile ODE and compare with its closed form"},
        {"probe", "bounded search for second-kind surfaces of constant K"},
        {"mesh", "OBJ quad mesh with a per-vertex curvature sidecar"},
    };
    for (const auto& [name, about] : subcommands) {
        auto* sub = app.add_subcommand(name, about);
        sub->add_option("--config", config, "JSON config file")->required();
        sub->add_option("--set", sets, "override a config value, key.path=value");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    Json cfg;
    try {
        cfg = load_config(config, sets);
    } catch (const ConfigError& e) {
        err << "pg-surf: config error: " << e.what() << "\n";
        return kConfigError;
    }
    return run_command(command, cfg, out, err);
}

}  // namespace pgsurf::cli
