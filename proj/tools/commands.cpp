#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kobs/blowup.hpp"
#include "kobs/config.hpp"
#include "kobs/errors.hpp"
#include "kobs/estimators.hpp"
#include "kobs/free_boundary.hpp"
#include "kobs/parallel.hpp"
#include "kobs/presets.hpp"
#include "kobs/report.hpp"
#include "kobs/stopping_mc.hpp"
#include "kobs/weiss_energy.hpp"

namespace kobs::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

KineticPoint parse_point(const std::string& s) {
    std::vector<double> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("point '" + s + "': '" + item + "' is not a number");
        }
    }
    if (c.size() != 3) throw ConfigError("point '" + s + "' must be t,x,v");
    return KineticPoint::make1(c[0], c[1], c[2]);
}

/// Free boundary point on the x = 0 column of the last time slice.
KineticPoint auto_point(const Field& u, double tol_zero) {
    const Classification cls = classify(u, tol_zero);
    for (int dir : {1, -1}) {
        const GraphResult g = extract_graph(u, cls, dir);
        if (auto z = graph_point(g, u.grid().t_hi, 0.0)) return *z;
    }
    throw DomainError("no free boundary column found; pass --at t,x,v");
}

KineticPoint resolve_point(const std::string& at, const Field& u, double tol_zero) {
    return at == "auto" ? auto_point(u, tol_zero) : parse_point(at);
}

void emit(const std::string& command, const json& config, const json& result, double seconds,
          const std::string& report_path) {
    const json rep = make_report(command, config, result, seconds);
    if (report_path.empty()) std::cout << rep.dump(2) << '\n';
    else write_json(report_path, rep);
}

json diag_json(const SolveDiagnostics& d) {
    return {{"method", d.method},
            {"steps", d.steps},
            {"total_iterations", d.total_iterations},
            {"max_iterations", d.max_iterations},
            {"max_line_residual", d.max_line_residual},
            {"omega", d.omega},
            {"courant", d.courant},
            {"seconds", d.seconds}};
}

// ---- solve ----

struct SolveArgs {
    std::string config, scenario, out, report;
    std::size_t N = 64;
};

int cmd_solve(const SolveArgs& a, std::size_t threads) {
    const auto t0 = Clock::now();
    RunConfig c;
    if (!a.config.empty() && !a.scenario.empty()) throw ConfigError("pass either --config or --scenario, not both");
    if (!a.config.empty()) c = load_config(a.config);
    else if (!a.scenario.empty()) c = scenario_config(a.scenario, a.N);
    else throw ConfigError("solve needs --config or --scenario");
    if (threads) c.threads = threads;
    const SolveResult res = run_solver(c);
    save_field(a.out, res.u);
    const ObstacleProblem p = make_problem(c);
    const double tol = c.solver == SolverKind::penalized ? penalized_zero_tolerance(p, c.penalty) : 0.0;
    const Classification cls = classify(res.u, tol);
    json r = {{"field", a.out},
              {"diagnostics", diag_json(res.diag)},
              {"complementarity_residual", complementarity_residual(p, res.u)},
              {"sup_u", res.u.sup_norm()},
              {"min_u", res.u.min()},
              {"tol_zero", tol},
              {"contact_nodes", cls.count(Phase::contact)},
              {"positive_nodes", cls.count(Phase::positive)},
              {"gamma_nodes", cls.gamma_count()}};
    emit("solve", to_json(c), r, since(t0), a.report);
    if (!a.report.empty())
        std::cout << "solved " << c.grid.size() << " nodes in " << std::fixed << std::setprecision(2)
                  << res.diag.seconds << " s, gamma nodes " << cls.gamma_count() << '\n';
    return kExitOk;
}

// ---- thickness ----

struct ThicknessArgs {
    std::string field, at = "auto", report;
    std::vector<double> radii{0.5, 0.25, 0.125};
    bool star = false;
    double tol_zero = 1e-12;
};

int cmd_thickness(const ThicknessArgs& a) {
    const auto t0 = Clock::now();
    const Field u = load_field(a.field);
    const KineticPoint z0 = resolve_point(a.at, u, a.tol_zero);
    json rows = json::array();
    for (double r : a.radii) {
        const ThicknessResult th =
            a.star ? thickness_delta_star(u, z0, r, a.tol_zero) : thickness_delta(u, z0, r, a.tol_zero);
        rows.push_back({{"r", r},
                        {"delta", th.delta},
                        {"diameter", th.diameter},
                        {"witness_t", th.witness_t},
                        {"witness_x", th.witness_x}});
    }
    json cfg = {{"field", a.field}, {"at", to_json(z0)}, {"radii", a.radii}, {"star", a.star}, {"tol_zero", a.tol_zero}};
    emit("thickness", cfg, {{"rows", rows}}, since(t0), a.report);
    return kExitOk;
}

// ---- graph ----

struct GraphArgs {
    std::string field, out, axis = "v", report;
    int direction = 1;
    double tol_zero = 1e-12;
    std::string window_at = "auto";
    double window_r = 0.5;
};

int cmd_graph(const GraphArgs& a) {
    const auto t0 = Clock::now();
    if (a.axis != "v" && a.axis != "vn") throw ConfigError("--axis must be 'v' (n = 1)");
    const Field u = load_field(a.field);
    const Classification cls = classify(u, a.tol_zero);
    const GraphResult g = extract_graph(u, cls, a.direction);
    std::ofstream os(a.out);
    if (!os) throw ConfigError("cannot open " + a.out + " for writing");
    os << "t,x,vprime,f,mask\n" << std::setprecision(17);
    for (const auto& c : g.columns) {
        os << c.t << ',' << c.x << ",0,";
        if (std::isfinite(c.f)) os << c.f;
        else os << "nan";
        os << ',' << (c.mask ? 1 : 0) << '\n';
    }
    const KineticPoint zc = resolve_point(a.window_at, u, a.tol_zero);
    const GraphWindow w{zc, a.window_r};
    const HolderReport h = holder_seminorms(g, w);
    json r = {{"csv", a.out},
              {"columns", g.columns.size()},
              {"single_crossing_fraction", single_crossing_fraction(g, w)},
              {"holder_tx", h.tx},
              {"lipschitz_vprime", h.vprime},
              {"holder_samples", h.samples}};
    json cfg = {{"field", a.field},         {"axis", a.axis},        {"direction", a.direction},
                {"tol_zero", a.tol_zero},   {"window_center", to_json(zc)}, {"window_r", a.window_r}};
    emit("graph", cfg, r, since(t0), a.report);
    return kExitOk;
}

// ---- energy ----

struct EnergyArgs {
    std::string field, reference, at = "auto", report;
    std::vector<double> radii{1.0, 0.5, 0.25, 0.125};
    std::vector<double> balance_radii;
    double tol_zero = 1e-12;
    QuadratureOptions quad;
};

int cmd_energy(const EnergyArgs& a) {
    const auto t0 = Clock::now();
    if (a.field.empty() == a.reference.empty()) throw ConfigError("energy needs exactly one of --field, --reference");
    EnergySource src;
    KineticPoint z0 = KineticPoint::origin(1);
    if (!a.field.empty()) {
        const Field u = load_field(a.field);
        src = source_from_field(u);
        z0 = resolve_point(a.at, u, a.tol_zero);
    } else {
        src = source_from_reference(reference_by_name(a.reference));
        if (a.at != "auto") z0 = parse_point(a.at);
    }
    const WeissScan scan = weiss_scan(src, z0, a.radii, a.quad);
    const double w = omega_hat();
    json vals = json::array();
    for (std::size_t i = 0; i < scan.radii.size(); ++i)
        vals.push_back({{"r", scan.radii[i]}, {"I", scan.values[i]}, {"ratio", scan.values[i] / w}});
    json r = {{"omega_hat", w}, {"values", vals}, {"drift_C", scan.drift_C}, {"monotone", scan.monotone}};
    if (!a.balance_radii.empty()) {
        const BalancedEnergy b = balanced_energy(src, z0, a.balance_radii, 0.15, a.quad);
        r["balanced"] = {{"value", b.value}, {"ratio", b.ratio}, {"class", to_string(b.cls)}};
    }
    json cfg = {{"field", a.field},
                {"reference", a.reference},
                {"at", to_json(z0)},
                {"radii", a.radii},
                {"balance_radii", a.balance_radii},
                {"quadrature", {{"panels", a.quad.panels}, {"order", a.quad.order}, {"sigmas", a.quad.sigmas}}}};
    emit("energy", cfg, r, since(t0), a.report);
    return kExitOk;
}

// ---- blowup ----

struct BlowupArgs {
    std::string field, at = "auto", out;
    std::vector<double> radii{0.5, 0.25, 0.125};
    std::vector<double> energy_radii;
    std::size_t N = 32;
    double dead_band = 0.05;
    double tol_zero = 1e-12;
};

int cmd_blowup(const BlowupArgs& a) {
    const auto t0 = Clock::now();
    const Field u = load_field(a.field);
    const KineticPoint z0 = resolve_point(a.at, u, a.tol_zero);
    BlowupOptions opt;
    opt.N = a.N;
    opt.dead_band = a.dead_band;
    opt.energy_radii = a.energy_radii;
    const PointClassification pc = classify_point(u, z0, a.radii, opt);
    json fits = json::array();
    for (const auto& f : pc.fits)
        fits.push_back({{"r", f.r},
                        {"halfspace", {{"e", f.hs.e}, {"residual", f.hs.residual}}},
                        {"polynomial", {{"m", f.poly.m}, {"a", f.poly.a}, {"residual", f.poly.residual}}}});
    json r = {{"class", to_string(pc.cls)}, {"reason", pc.reason}, {"fits", fits}};
    if (pc.energy_checked)
        r["energy"] = {{"value", pc.energy.value}, {"ratio", pc.energy.ratio}, {"class", to_string(pc.energy.cls)}};
    json cfg = {{"field", a.field},       {"at", to_json(z0)},           {"radii", a.radii},
                {"energy_radii", a.energy_radii}, {"N", a.N}, {"dead_band", a.dead_band}};
    emit("blowup", cfg, r, since(t0), a.out);
    if (!a.out.empty()) std::cout << to_string(pc.cls) << '\n';
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string field, coarse, suite = "all", report, at = "origin";
    double r = 0.5;
    double tol_zero = 1e-12;
    std::size_t max_points = 32;
    bool list_references = false;
};

json verify_lipschitz(const Field& u, const Field* coarse, const KineticPoint& zc, double r, bool& pass) {
    const LipschitzReport l = lipschitz_report(u, zc, r);
    json j = {{"grad_x", l.grad_x}, {"dt", l.dt}, {"dvv", l.dvv}, {"sup_u", l.sup_u}, {"nodes", l.nodes}};
    pass = std::isfinite(l.grad_x) && std::isfinite(l.dt) && std::isfinite(l.dvv);
    if (coarse) {
        const LipschitzReport lc = lipschitz_report(*coarse, zc, r);
        const double change = std::abs(l.grad_x - lc.grad_x) / std::max(lc.grad_x, 1e-300);
        j["coarse_grad_x"] = lc.grad_x;
        j["relative_change"] = change;
        pass = pass && change <= 0.2;
    }
    return j;
}

int cmd_verify(const VerifyArgs& a) {
    const auto t0 = Clock::now();
    if (a.list_references) {
        for (const auto& name : reference_names()) {
            const ReferenceSolution ref = reference_by_name(name);
            std::cout << std::left << std::setw(12) << name << ' ' << ref.description << '\n';
        }
        return kExitOk;
    }
    static const std::vector<std::string> suites = {"lipschitz", "growth", "nondegen", "porosity", "all"};
    if (std::find(suites.begin(), suites.end(), a.suite) == suites.end())
        throw ConfigError("unknown suite '" + a.suite + "' (did you mean '" + nearest_key(a.suite, suites) + "'?)");
    if (a.field.empty()) throw ConfigError("verify needs --field");
    const Field u = load_field(a.field);
    std::optional<Field> coarse;
    if (!a.coarse.empty()) coarse = load_field(a.coarse);
    const Field* cp = coarse ? &*coarse : nullptr;
    const Grid& g = u.grid();
    const KineticPoint zc = a.at == "origin" ? KineticPoint::make1(g.t_hi, 0.0, 0.0) : parse_point(a.at);
    const Classification cls = classify(u, a.tol_zero);

    std::vector<KineticPoint> pts = gamma_points_in(cls, Cylinder(zc, a.r));
    if (pts.size() > a.max_points) {
        std::vector<KineticPoint> thin;
        const double stride = static_cast<double>(pts.size()) / static_cast<double>(a.max_points);
        for (std::size_t i = 0; i < a.max_points; ++i) thin.push_back(pts[static_cast<std::size_t>(i * stride)]);
        pts = std::move(thin);
    }
    const bool all = a.suite == "all";
    json result = {{"gamma_points_checked", pts.size()}};
    bool ok = true;
    auto record = [&](const std::string& name, json body, bool pass) {
        body["pass"] = pass;
        result[name] = std::move(body);
        ok = ok && pass;
    };

    if (all || a.suite == "lipschitz") {
        bool pass = false;
        json j = verify_lipschitz(u, cp, zc, a.r, pass);
        record("lipschitz", std::move(j), pass);
    }
    if (all || a.suite == "growth") {
        json rows = json::array();
        bool pass = true;
        double max_q = 0.0;
        for (const auto& z : pts) {
            const auto radii = feasible_radii(g, z, 0.25);
            for (const auto& row : growth_report(u, z, radii, cp)) {
                max_q = std::max(max_q, row.quotient);
                pass = pass && row.pass;
                if (!row.pass) rows.push_back({{"at", to_json(z)}, {"r", row.r}, {"margin", row.margin}, {"slack", row.slack}});
            }
        }
        record("growth", {{"max_quotient", max_q}, {"failures", rows}}, pass);
    }
    if (all || a.suite == "nondegen") {
        json rows = json::array();
        bool pass = true;
        std::size_t elliptic_claimed = 0;
        double min_r0 = 0.25;
        for (const auto& z : pts) {
            const auto deltas = feasible_radii(g, z, 0.25);
            const double r0 = parabolic_r0(u, z, 0.25);
            min_r0 = std::min(min_r0, r0);
            std::vector<double> below;
            for (double d : deltas)
                if (d <= r0) below.push_back(d);
            for (const auto& row : parabolic_nondegeneracy(u, z, below)) {
                pass = pass && row.pass;
                if (!row.pass) rows.push_back({{"at", to_json(z)}, {"delta", row.scale}, {"margin", row.margin}});
            }
            const EllipticReport el = elliptic_nondegeneracy(u, z, deltas);
            if (!el.hypothesis_holds) continue;
            ++elliptic_claimed;
            for (const auto& row : el.rows) {
                pass = pass && row.pass;
                if (!row.pass) rows.push_back({{"at", to_json(z)}, {"lambda", row.scale}, {"margin", row.margin}});
            }
        }
        record("nondegen", {{"elliptic_points", elliptic_claimed}, {"min_r0", min_r0}, {"failures", rows}}, pass);
    }
    if (all || a.suite == "porosity") {
        json rows = json::array();
        bool pass = true;
        double min_delta = 1.0;
        for (const auto& z : pts) {
            const auto radii = feasible_radii(g, z, 0.25);
            for (const auto& row : porosity_report(cls, z, radii)) {
                min_delta = std::min(min_delta, row.delta);
                if (row.delta <= 0.0) {
                    pass = false;
                    rows.push_back({{"at", to_json(z)}, {"r", row.r}});
                }
            }
        }
        record("porosity", {{"min_delta", pts.empty() ? 0.0 : min_delta}, {"failures", rows}}, pass);
    }
    result["pass"] = ok;
    json cfg = {{"field", a.field}, {"coarse", a.coarse},     {"suite", a.suite},          {"center", to_json(zc)},
                {"r", a.r},         {"tol_zero", a.tol_zero}, {"max_points", a.max_points}};
    emit("verify", cfg, result, since(t0), a.report);
    if (!a.report.empty()) std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitCheck;
}

// ---- price ----

struct PriceArgs {
    std::string payoff = "bump", report;
    std::vector<std::string> at{"0,0.2,-0.5", "0,0,0.9", "0.1,-0.3,1.2"};
    double T = 0.25;
    LsmcOptions lsmc;
    bool compare_pde = false;
    std::size_t pde_N = 64;
    double extent = 3.0;
};

Payoff payoff_by_name(const std::string& name) {
    if (name == "constant") return [](double, double, double) { return 1.0; };
    if (name == "bump") return [](double, double x, double v) { return std::exp(-x * x - v * v); };
    if (name == "put") return [](double, double, double v) { return std::max(-v, 0.0); };
    throw ConfigError("unknown payoff '" + name + "' (constant, bump, put)");
}

int cmd_price(const PriceArgs& a) {
    const auto t0 = Clock::now();
    const Payoff psi = payoff_by_name(a.payoff);
    std::vector<KineticPoint> qs;
    for (const auto& s : a.at) qs.push_back(parse_point(s));
    json rows = json::array();
    std::vector<LsmcResult> mc;
    for (const auto& q : qs) {
        mc.push_back(lsmc_price(psi, q, a.T, a.lsmc));
        rows.push_back({{"at", to_json(q)},
                        {"value", mc.back().value},
                        {"se", mc.back().se},
                        {"immediate", mc.back().immediate}});
    }
    bool ok = true;
    if (a.compare_pde) {
        const std::size_t nt = std::max<std::size_t>(a.pde_N / 4, 4);
        const Grid g = Grid::make(nt, a.pde_N, a.pde_N, 0.0, a.T, a.extent, a.extent);
        const PdePriceResult coarse = pde_price(psi, a.T, g, qs);
        const PdePriceResult fine = pde_price(psi, a.T, g.refined(), qs);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            const double slack = std::abs(fine.values[i] - coarse.values[i]);
            const double gap = std::abs(mc[i].value - fine.values[i]);
            const bool pass = gap <= 3.0 * mc[i].se + slack;
            ok = ok && pass;
            rows[i]["pde"] = fine.values[i];
            rows[i]["pde_slack"] = slack;
            rows[i]["gap"] = gap;
            rows[i]["pass"] = pass;
        }
    }
    json cfg = {{"payoff", a.payoff},        {"T", a.T},
                {"steps", a.lsmc.steps},     {"paths", a.lsmc.paths},
                {"seed", a.lsmc.seed},       {"degree", a.lsmc.degree},
                {"payoff_basis", a.lsmc.payoff_basis}, {"compare_pde", a.compare_pde},
                {"pde_N", a.pde_N},          {"extent", a.extent}};
    emit("price", cfg, {{"points", rows}, {"pass", ok}}, since(t0), a.report);
    return ok ? kExitOk : kExitCheck;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"kobs: obstacle problems for the Kolmogorov operator"};
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = hardware concurrency)");
    app.set_version_flag("--version", version_string());

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve an obstacle problem and write the field");
    solve->add_option("--config", sa.config, "JSON run configuration")->check(CLI::ExistingFile);
    solve->add_option("--scenario", sa.scenario, "shipped scenario name");
    solve->add_option("--N", sa.N, "cells per axis for --scenario");
    solve->add_option("--out", sa.out, "output field file")->required();
    solve->add_option("--report", sa.report, "JSON report path (stdout if omitted)");

    ThicknessArgs ta;
    auto* thick = app.add_subcommand("thickness", "thickness of the contact set at a free boundary point");
    thick->add_option("--field", ta.field)->required()->check(CLI::ExistingFile);
    thick->add_option("--at", ta.at, "t,x,v or auto");
    thick->add_option("--r", ta.radii)->delimiter(',');
    thick->add_flag("--star", ta.star, "use the time-averaged variant");
    thick->add_option("--tol-zero", ta.tol_zero);
    thick->add_option("--report", ta.report);

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "free boundary as a graph over (t, x); CSV output");
    graph->add_option("--field", ga.field)->required()->check(CLI::ExistingFile);
    graph->add_option("--axis", ga.axis, "graph axis (v)");
    graph->add_option("--direction", ga.direction, "+1: contact below the graph, -1: above");
    graph->add_option("--out", ga.out, "CSV path")->required();
    graph->add_option("--tol-zero", ga.tol_zero);
    graph->add_option("--window-at", ga.window_at, "window center t,x,v or auto");
    graph->add_option("--window-r", ga.window_r);
    graph->add_option("--report", ga.report);

    EnergyArgs ea;
    auto* energy = app.add_subcommand("energy", "energy functional scan");
    energy->add_option("--field", ea.field)->check(CLI::ExistingFile);
    energy->add_option("--reference", ea.reference, "closed-form reference solution name");
    energy->add_option("--at", ea.at, "t,x,v or auto");
    energy->add_option("--radii", ea.radii)->delimiter(',');
    energy->add_option("--balance-radii", ea.balance_radii, "radii for the r -> 0 extrapolation")->delimiter(',');
    energy->add_option("--panels", ea.quad.panels);
    energy->add_option("--order", ea.quad.order);
    energy->add_option("--tol-zero", ea.tol_zero);
    energy->add_option("--report", ea.report);

    BlowupArgs ba;
    auto* blowup = app.add_subcommand("blowup", "classify a free boundary point by its blow-ups");
    blowup->add_option("--field", ba.field)->required()->check(CLI::ExistingFile);
    blowup->add_option("--at", ba.at, "t,x,v or auto");
    blowup->add_option("--radii", ba.radii)->delimiter(',');
    blowup->add_option("--energy-radii", ba.energy_radii)->delimiter(',');
    blowup->add_option("--N", ba.N, "reference cells per axis");
    blowup->add_option("--dead-band", ba.dead_band);
    blowup->add_option("--tol-zero", ba.tol_zero);
    blowup->add_option("--out", ba.out, "JSON report path (stdout if omitted)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "estimate checks on a solved field");
    verify->add_option("--field", va.field)->check(CLI::ExistingFile);
    verify->add_option("--coarse", va.coarse, "same box at half resolution (Richardson slack)")
        ->check(CLI::ExistingFile);
    verify->add_option("--suite", va.suite, "lipschitz, growth, nondegen, porosity or all");
    verify->add_option("--at", va.at, "window center t,x,v (default: (t_hi, 0, 0))");
    verify->add_option("--r", va.r, "window radius");
    verify->add_option("--tol-zero", va.tol_zero);
    verify->add_option("--max-points", va.max_points);
    verify->add_flag("--list-references", va.list_references);
    verify->add_option("--report", va.report);

    PriceArgs pa;
    auto* price = app.add_subcommand("price", "optimal stopping value by regression Monte Carlo");
    price->add_option("--payoff", pa.payoff, "constant, bump or put");
    price->add_option("--at", pa.at, "query points t,x,v (repeatable)");
    price->add_option("--T", pa.T, "horizon");
    price->add_option("--paths", pa.lsmc.paths);
    price->add_option("--steps", pa.lsmc.steps);
    price->add_option("--degree", pa.lsmc.degree);
    price->add_option("--seed", pa.lsmc.seed);
    price->add_flag("--compare-pde", pa.compare_pde, "cross-check against the obstacle solver");
    price->add_option("--pde-N", pa.pde_N);
    price->add_option("--report", pa.report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    set_thread_cap(threads);

    if (*solve) return cmd_solve(sa, threads);
    if (*thick) return cmd_thickness(ta);
    if (*graph) return cmd_graph(ga);
    if (*energy) return cmd_energy(ea);
    if (*blowup) return cmd_blowup(ba);
    if (*verify) return cmd_verify(va);
    if (*price) return cmd_price(pa);
    return kExitUsage;
}

}  // namespace kobs::cli
