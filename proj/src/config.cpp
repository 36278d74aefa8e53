#include "kobs/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "kobs/errors.hpp"

namespace kobs {

using nlohmann::json;

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "grid.n",           "grid.Nt",           "grid.Nx",        "grid.Nv",
        "grid.t_lo",        "grid.t_hi",         "grid.x_extent",  "grid.v_extent",
        "penalty.eps",      "penalty.variant",   "solver.kind",    "solver.cfl",
        "solver.newton_max_iter", "solver.newton_tol", "solver.newton_damping", "solver.omega",
        "solver.sweep_tol", "solver.max_sweeps", "boundary.preset", "boundary.e",
        "boundary.m",       "boundary.a",        "boundary.slope", "boundary.file",
        "forcing.phi",      "threads"};
    return keys;
}

std::string to_string(SolverKind k) { return k == SolverKind::penalized ? "penalized" : "projected"; }

std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates) {
    auto dist = [](const std::string& a, const std::string& b) {
        std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
        for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            cur[0] = i;
            for (std::size_t j = 1; j <= b.size(); ++j)
                cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
            std::swap(prev, cur);
        }
        return prev[b.size()];
    };
    std::string best;
    std::size_t bd = SIZE_MAX;
    for (const auto& c : candidates) {
        const std::size_t d = dist(key, c);
        if (d < bd) {
            bd = d;
            best = c;
        }
    }
    return best;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::map<std::string, json>& out,
             std::vector<std::string>& errors) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten(*it, key, out, errors);
            continue;
        }
        auto [pos, fresh] = out.emplace(key, *it);
        if (!fresh && pos->second != *it)
            errors.push_back("conflicting values for '" + key + "': " + pos->second.dump() + " vs " + it->dump());
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    std::vector<std::string> errors;
    // Duplicate keys inside one object are silently merged by the parser, so catch them here.
    std::vector<std::set<std::string>> seen;
    std::vector<std::string> path;
    std::string last_key;
    json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        switch (ev) {
            case json::parse_event_t::object_start:
                seen.emplace_back();
                path.push_back(seen.size() > 1 ? last_key : "");
                break;
            case json::parse_event_t::object_end:
                if (!seen.empty()) seen.pop_back();
                if (!path.empty()) path.pop_back();
                break;
            case json::parse_event_t::key: {
                last_key = parsed.get<std::string>();
                if (!seen.empty() && !seen.back().insert(last_key).second) {
                    std::string full;
                    for (const auto& p : path)
                        if (!p.empty()) full += p + ".";
                    errors.push_back("duplicate key '" + full + last_key + "'");
                }
                break;
            }
            default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    std::map<std::string, json> flat;
    flatten(doc, "", flat, errors);

    RunConfig c;
    const auto& keys = config_keys();
    std::size_t Nt = c.grid.Nt, Nx = c.grid.Nx, Nv = c.grid.Nv, n = 1;
    double t_lo = c.grid.t_lo, t_hi = c.grid.t_hi, x_ext = c.grid.x_ext, v_ext = c.grid.v_ext;
    double eps = c.penalty.eps;
    std::string variant = to_string(c.penalty.variant);

    auto num = [&](const std::string& k, const json& v, double& dst) {
        if (!v.is_number()) errors.push_back("'" + k + "' must be a number, got " + v.dump());
        else dst = v.get<double>();
    };
    auto count = [&](const std::string& k, const json& v, std::size_t& dst) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            errors.push_back("'" + k + "' must be a nonnegative integer, got " + v.dump());
        else dst = v.get<std::size_t>();
    };
    auto str = [&](const std::string& k, const json& v, std::string& dst) {
        if (!v.is_string()) errors.push_back("'" + k + "' must be a string, got " + v.dump());
        else dst = v.get<std::string>();
    };

    for (const auto& [k, v] : flat) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            errors.push_back("unknown key '" + k + "' (did you mean '" + nearest_key(k, keys) + "'?)");
            continue;
        }
        std::size_t tmp = 0;
        std::string s;
        if (k == "grid.n") count(k, v, n);
        else if (k == "grid.Nt") count(k, v, Nt);
        else if (k == "grid.Nx") count(k, v, Nx);
        else if (k == "grid.Nv") count(k, v, Nv);
        else if (k == "grid.t_lo") num(k, v, t_lo);
        else if (k == "grid.t_hi") num(k, v, t_hi);
        else if (k == "grid.x_extent") num(k, v, x_ext);
        else if (k == "grid.v_extent") num(k, v, v_ext);
        else if (k == "penalty.eps") num(k, v, eps);
        else if (k == "penalty.variant") str(k, v, variant);
        else if (k == "solver.kind") {
            str(k, v, s);
            if (s == "penalized") c.solver = SolverKind::penalized;
            else if (s == "projected") c.solver = SolverKind::projected;
            else if (!s.empty()) errors.push_back("solver.kind must be 'penalized' or 'projected', got '" + s + "'");
        } else if (k == "solver.cfl") num(k, v, c.march.cfl);
        else if (k == "solver.newton_max_iter") {
            count(k, v, tmp);
            c.newton.max_iter = static_cast<int>(tmp);
        } else if (k == "solver.newton_tol") num(k, v, c.newton.tol);
        else if (k == "solver.newton_damping") num(k, v, c.newton.damping);
        else if (k == "solver.omega") num(k, v, c.projected.omega);
        else if (k == "solver.sweep_tol") num(k, v, c.projected.sweep_tol);
        else if (k == "solver.max_sweeps") {
            count(k, v, tmp);
            c.projected.max_sweeps = static_cast<int>(tmp);
        } else if (k == "boundary.preset") str(k, v, c.boundary.preset);
        else if (k == "boundary.e") num(k, v, c.boundary.e);
        else if (k == "boundary.m") num(k, v, c.boundary.m);
        else if (k == "boundary.a") num(k, v, c.boundary.a);
        else if (k == "boundary.slope") num(k, v, c.boundary.slope);
        else if (k == "boundary.file") str(k, v, c.boundary.file);
        else if (k == "forcing.phi") num(k, v, c.forcing);
        else if (k == "threads") count(k, v, c.threads);
    }

    if (n != 1) errors.push_back("grid.n = " + std::to_string(n) + " is not supported (only n = 1)");
    try {
        c.grid = Grid::make(Nt, Nx, Nv, t_lo, t_hi, x_ext, v_ext);
    } catch (const ConfigError& e) {
        errors.push_back(e.what());
    }
    try {
        c.penalty = Penalty(eps, parse_penalty_variant(variant));
    } catch (const ConfigError& e) {
        errors.push_back(e.what());
    }
    if (!(c.march.cfl > 0.0 && c.march.cfl <= 1.0)) errors.push_back("solver.cfl must lie in (0, 1]");
    if (c.newton.max_iter < 1) errors.push_back("solver.newton_max_iter must be >= 1");
    if (!(c.newton.tol > 0.0)) errors.push_back("solver.newton_tol must be positive");
    if (!(c.newton.damping > 0.0 && c.newton.damping < 1.0)) errors.push_back("solver.newton_damping must lie in (0, 1)");
    if (!(c.projected.omega >= 0.0 && c.projected.omega < 2.0)) errors.push_back("solver.omega must lie in [0, 2)");
    if (!(c.projected.sweep_tol > 0.0)) errors.push_back("solver.sweep_tol must be positive");
    if (c.projected.max_sweeps < 1) errors.push_back("solver.max_sweeps must be >= 1");
    static const std::vector<std::string> presets = {"zero", "half_space", "polynomial", "thick_obstacle",
                                                     "thin_obstacle", "file"};
    if (std::find(presets.begin(), presets.end(), c.boundary.preset) == presets.end())
        errors.push_back("unknown boundary.preset '" + c.boundary.preset + "' (did you mean '" +
                         nearest_key(c.boundary.preset, presets) + "'?)");
    if (c.boundary.preset == "file" && c.boundary.file.empty()) errors.push_back("boundary.preset 'file' needs boundary.file");
    if (c.boundary.e != 1.0 && c.boundary.e != -1.0) errors.push_back("boundary.e must be +1 or -1");

    if (!errors.empty()) {
        std::ostringstream os;
        os << errors.size() << " config error(s):";
        for (const auto& e : errors) os << "\n  - " << e;
        throw ConfigError(os.str());
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

json to_json(const RunConfig& c) {
    json j;
    j["grid"] = {{"n", c.grid.n},         {"Nt", c.grid.Nt},          {"Nx", c.grid.Nx},
                 {"Nv", c.grid.Nv},       {"t_lo", c.grid.t_lo},      {"t_hi", c.grid.t_hi},
                 {"x_extent", c.grid.x_ext}, {"v_extent", c.grid.v_ext}};
    j["penalty"] = {{"eps", c.penalty.eps}, {"variant", to_string(c.penalty.variant)}};
    j["solver"] = {{"kind", to_string(c.solver)},
                   {"cfl", c.march.cfl},
                   {"newton_max_iter", c.newton.max_iter},
                   {"newton_tol", c.newton.tol},
                   {"newton_damping", c.newton.damping},
                   {"omega", c.projected.omega},
                   {"sweep_tol", c.projected.sweep_tol},
                   {"max_sweeps", c.projected.max_sweeps}};
    j["boundary"] = {{"preset", c.boundary.preset}, {"e", c.boundary.e},         {"m", c.boundary.m},
                     {"a", c.boundary.a},           {"slope", c.boundary.slope}, {"file", c.boundary.file}};
    j["forcing"] = {{"phi", c.forcing}};
    j["threads"] = c.threads;
    return j;
}

}  // namespace kobs
