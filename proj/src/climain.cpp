#include "barriertop/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "barriertop/classical.hpp"
#include "barriertop/density.hpp"
#include "barriertop/errors.hpp"
#include "barriertop/fluctuations.hpp"
#include "barriertop/oracle.hpp"
#include "barriertop/version.hpp"
#include "parallel.hpp"

namespace barriertop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e12;

using nlohmann::json;

} // namespace

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    RunConfig cfg;
    try {
        if (j.contains("a3")) cfg.params.a[3] = j["a3"].get<double>();
        if (j.contains("a4")) cfg.params.a[4] = j["a4"].get<double>();
        if (j.contains("a5")) cfg.params.a[5] = j["a5"].get<double>();
        if (j.contains("a6")) cfg.params.a[6] = j["a6"].get<double>();
        if (j.contains("epsilon")) cfg.params.epsilon = j["epsilon"].get<double>();
        if (j.contains("kappa")) cfg.kappa = j["kappa"].get<double>();
        if (j.contains("sweep")) {
            const json& s = j["sweep"];
            cfg.sweep.axis = s.value("axis", std::string{});
            cfg.sweep.from = s.value("from", 0.0);
            cfg.sweep.to = s.value("to", 0.0);
            cfg.sweep.steps = s.value("steps", 0);
            cfg.sweep_given = true;
        }
        if (j.contains("fixed")) {
            for (const auto& [key, val] : j["fixed"].items())
                cfg.fixed[key] = val.get<double>();
        }
        if (j.contains("oracle")) {
            const json& o = j["oracle"];
            cfg.oracle.L = o.value("L", cfg.oracle.L);
            cfg.oracle.N = o.value("N", cfg.oracle.N);
            cfg.oracle.q_match = o.value("q_match", cfg.oracle.q_match);
            cfg.oracle.slices = o.value("slices", cfg.oracle.slices);
        }
        if (j.contains("epsilons"))
            cfg.epsilons = j["epsilons"].get<std::vector<double>>();
        if (j.contains("allow_strong_asymmetry"))
            cfg.allow_strong_asymmetry = j["allow_strong_asymmetry"].get<bool>();
        if (j.contains("all_formulas"))
            cfg.all_formulas = j["all_formulas"].get<bool>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    return cfg;
}

std::string config_hash(const RunConfig& cfg, const std::string& subcommand) {
    std::ostringstream os;
    os << subcommand << '|' << kVersion;
    for (const auto& [n, a] : cfg.params.a) os << "|a" << n << '=' << fmt17(a);
    os << "|eps=" << fmt17(cfg.params.epsilon) << "|kappa=" << fmt17(cfg.kappa);
    os << "|sweep=" << cfg.sweep.axis << ',' << fmt17(cfg.sweep.from) << ','
       << fmt17(cfg.sweep.to) << ',' << cfg.sweep.steps;
    for (const auto& [k, v] : cfg.fixed) os << '|' << k << '=' << fmt17(v);
    os << "|oracle=" << fmt17(cfg.oracle.L) << ',' << cfg.oracle.N << ','
       << fmt17(cfg.oracle.q_match) << ',' << cfg.oracle.slices;
    for (double e : cfg.epsilons) os << "|e=" << fmt17(e);
    os << "|allow=" << cfg.allow_strong_asymmetry << "|cols=" << cfg.all_formulas;

    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// ---------------------------------------------------------------------------
// sweep and output plumbing

std::vector<double> linspace(const SweepSpec& s) {
    if (s.steps < 2) throw ConfigError("sweep.steps must be >= 2");
    if (!(s.from < s.to)) throw ConfigError("sweep.from must be below sweep.to");
    std::vector<double> v(static_cast<std::size_t>(s.steps));
    for (int i = 0; i < s.steps; ++i)
        v[static_cast<std::size_t>(i)] = s.from + (s.to - s.from) * i / (s.steps - 1);
    return v;
}

class Csv {
public:
    Csv(const RunConfig& cfg, const std::string& subcommand,
        const std::vector<std::string>& columns) {
        body_ << "# barriertop " << kVersion << "\n";
        body_ << "# subcommand: " << subcommand << "\n";
        body_ << "# config-hash: " << config_hash(cfg, subcommand) << "\n";
        body_ << "# kappa: " << fmt17(cfg.kappa) << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            body_ << (i ? "," : "") << columns[i];
        body_ << "\n";
    }

    void comment(const std::string& line) { body_ << "# " << line << "\n"; }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            body_ << (i ? "," : "") << cells[i];
        body_ << "\n";
    }

    void write(const std::string& out_path) const {
        if (out_path.empty() || out_path == "-") {
            std::cout << body_.str();
            return;
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + out_path);
        out << body_.str();
    }

private:
    std::ostringstream body_;
};

double fixed_or(const RunConfig& cfg, const std::string& key, double fallback) {
    auto it = cfg.fixed.find(key);
    return it == cfg.fixed.end() ? fallback : it->second;
}

bool has_fixed(const RunConfig& cfg, const std::string& key) {
    return cfg.fixed.count(key) != 0;
}

// theta of the configured temperature point: fixed.lambda1 wins over fixed.theta
double fixed_theta(const RunConfig& cfg, double lambda1_fallback) {
    if (has_fixed(cfg, "lambda1") && has_fixed(cfg, "theta"))
        throw ConfigError("specify either fixed.lambda1 or fixed.theta, not both");
    if (has_fixed(cfg, "theta")) return cfg.fixed.at("theta");
    return theta_from_lambda1(fixed_or(cfg, "lambda1", lambda1_fallback));
}

void check_params(const RunConfig& cfg) {
    auto violations = validate(cfg.params);
    if (cfg.allow_strong_asymmetry) {
        std::erase_if(violations, [](const std::string& m) {
            return m.find("weak-asymmetry") != std::string::npos;
        });
    }
    if (!violations.empty()) {
        std::string msg = "invalid barrier parameters:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw ConfigError(msg);
    }
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_regions(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) {
        cfg.sweep = {"lambda1", cd.lambda_c > 0.0 ? -3.0 * cd.lambda_c : -0.05,
                     cd.lambda_c > 0.0 ? cd.lambda_c : 0.0, 201};
    }
    if (cfg.sweep.axis != "lambda1") throw ConfigError("regions sweeps lambda1");
    const auto grid = linspace(cfg.sweep);
    Csv csv(cfg, "regions", {"lambda1", "r_minus", "r_plus", "r_e"});
    for (double l1 : grid) {
        double rm = std::nan(""), rp = std::nan("");
        if (cfg.params.a3() == 0.0) {
            rm = rp = 0.0; // symmetric pitchfork: both curves collapse onto r = 0
        } else if (l1 <= cd.lambda_c) {
            std::tie(rm, rp) = bifurcation_boundaries(cfg.params, l1);
        }
        csv.row({fmt17(l1), fmt17(rm), fmt17(rp), fmt17(line_re(cfg.params, l1))});
    }
    csv.write(cfg.out_path);
    return 0;
}

int cmd_bifurcation(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) {
        const double span = cd.lambda_c > 0.0 ? cd.lambda_c : 0.02;
        cfg.sweep = {"lambda1", -2.0 * span, 2.0 * span, 401};
    }
    if (cfg.sweep.axis != "lambda1") throw ConfigError("bifurcation sweeps lambda1");
    const double r = fixed_or(cfg, "r", 0.0);
    const auto grid = linspace(cfg.sweep);

    std::vector<BranchSet> sets(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        sets[i] = solve_cubic(cfg.params, theta_from_lambda1(grid[i]), r);
    });

    Csv csv(cfg, "bifurcation", {"lambda1", "Q", "stability"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (const CubicSolution& b : sets[i].solutions)
            csv.row({fmt17(grid[i]), fmt17(b.Q), b.stable() ? "stable" : "unstable"});
    csv.write(cfg.out_path);
    return 0;
}

int cmd_flucpot(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    const double theta = fixed_theta(cfg, std::max(0.5 * cd.lambda_c, 1e-3));
    const double Q = fixed_or(cfg, "Q", cd.Q_c);
    const FluctuationPotentialSpec spec = make_fluctuation_spec(cfg.params, cd, theta, Q);
    if (!cfg.sweep_given) {
        double ymax = spec.c4 > 0.0 ? std::pow(5.0 / spec.c4, 0.25) : 10.0;
        for (double y : fluc_extrema(spec)) ymax = std::max(ymax, 1.5 * std::abs(y));
        cfg.sweep = {"Y1", -ymax, ymax, 401};
    }
    if (cfg.sweep.axis != "Y1") throw ConfigError("flucpot sweeps Y1");
    Csv csv(cfg, "flucpot", {"Y1", "V"});
    for (double y : linspace(cfg.sweep))
        csv.row({fmt17(y), fmt17(fluc_potential(spec, y))});
    csv.write(cfg.out_path);
    return 0;
}

int cmd_kq(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) {
        const double halfwidth = 30.0 * cfg.params.epsilon;
        cfg.sweep = {"lambda1", cd.lambda_c - halfwidth, cd.lambda_c + halfwidth, 201};
    }
    const double Q = fixed_or(cfg, "Q", cd.Q_c);
    const auto grid = linspace(cfg.sweep);

    struct Row {
        double lambda1, theta, K, err, bound;
    };
    std::vector<Row> rows(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        double theta, l1;
        if (cfg.sweep.axis == "lambda1") {
            l1 = grid[i];
            theta = theta_from_lambda1(l1);
        } else if (cfg.sweep.axis == "theta") {
            theta = grid[i];
            l1 = lambda1_from_theta(theta);
        } else {
            throw ConfigError("kq sweeps lambda1 or theta");
        }
        const MarginalIntegral K =
            marginal_integral(make_fluctuation_spec(cfg.params, cd, theta, Q));
        rows[i] = {l1, theta, K.value, K.quadrature_error, K.truncation_bound};
    });

    Csv csv(cfg, "kq", {"lambda1", "theta", "Q", "K", "quadrature_error", "truncation_bound"});
    for (const Row& w : rows)
        csv.row({fmt17(w.lambda1), fmt17(w.theta), fmt17(Q), fmt17(w.K), fmt17(w.err),
                 fmt17(w.bound)});
    csv.write(cfg.out_path);
    return 0;
}

int cmd_action(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) {
        const double span = cd.lambda_c > 0.0 ? cd.lambda_c : 0.02;
        cfg.sweep = {"lambda1", -span, 2.0 * span, 301};
    }
    if (cfg.sweep.axis != "lambda1") throw ConfigError("action sweeps lambda1");
    const double r = fixed_or(cfg, "r", 0.0);
    const double z = fixed_or(cfg, "z", 0.0);
    const auto grid = linspace(cfg.sweep);

    struct Row {
        double lambda1, Q, S;
        bool stable;
    };
    std::vector<std::vector<Row>> rows(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const double theta = theta_from_lambda1(grid[i]);
        for (const CubicSolution& b : solve_cubic(cfg.params, theta, r).solutions)
            rows[i].push_back(
                {grid[i], b.Q, classical_action(cfg.params, theta, z, r, b.Q), b.stable()});
    });

    Csv csv(cfg, "action", {"lambda1", "Q", "stability", "S_cl"});
    for (const auto& pts : rows)
        for (const Row& w : pts)
            csv.row({fmt17(w.lambda1), fmt17(w.Q), w.stable ? "stable" : "unstable",
                     fmt17(w.S)});
    csv.write(cfg.out_path);
    return 0;
}

int cmd_density(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) {
        const double span = cd.lambda_c > 0.0 ? cd.lambda_c : 0.02;
        cfg.sweep = {"lambda1", -span, 2.0 * span, 201};
    }
    const double z = fixed_or(cfg, "z", 0.0);
    const auto grid = linspace(cfg.sweep);

    std::vector<SemiclassicalDensity> vals(grid.size());
    std::vector<std::pair<double, double>> tl(grid.size()); // (theta, r) per point
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        double theta, r;
        if (cfg.sweep.axis == "lambda1") {
            theta = theta_from_lambda1(grid[i]);
            r = fixed_or(cfg, "r", 0.0);
        } else if (cfg.sweep.axis == "theta") {
            theta = grid[i];
            r = fixed_or(cfg, "r", 0.0);
        } else if (cfg.sweep.axis == "r" || cfg.sweep.axis == "q") {
            theta = fixed_theta(cfg, 2.0 * cd.lambda_c);
            r = grid[i];
        } else {
            throw ConfigError("density sweeps lambda1, theta, r or q");
        }
        tl[i] = {theta, r};
        vals[i] = density(cfg.params, theta, z, r, cfg.kappa);
    });

    Csv csv(cfg, "density",
            {"sweep", "theta", "lambda1", "z", "r", "value", "regime", "prefactor", "K",
             "n_branches"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& d = vals[i];
        csv.row({fmt17(grid[i]), fmt17(tl[i].first), fmt17(lambda1_from_theta(tl[i].first)),
                 fmt17(z), fmt17(tl[i].second), fmt17(d.value), to_string(d.regime),
                 fmt17(d.prefactor), fmt17(d.K_value ? *d.K_value : std::nan("")),
                 std::to_string(d.actions.size())});
    }
    csv.write(cfg.out_path);
    return 0;
}

int cmd_distribution(RunConfig cfg) {
    check_params(cfg);
    const CriticalData cd = critical_point(cfg.params);
    if (!cfg.sweep_given) cfg.sweep = {"q", -3.0, 3.0, 241};

    std::vector<std::string> cols;
    const bool fig7 = cfg.sweep.axis == "lambda1";
    if (fig7)
        cols = {"lambda1", "P", "regime"};
    else if (cfg.sweep.axis == "q")
        cols = {"q", "P", "regime"};
    else
        throw ConfigError("distribution sweeps q (fixed temperature) or lambda1 (fixed q)");
    if (cfg.all_formulas) {
        cols.insert(cols.end(), {"P_high_t", "P_gaussian", "P_critical", "P_two_branch",
                                 "P_dominant", "clamped"});
    }

    const auto grid = linspace(cfg.sweep);
    struct Row {
        SemiclassicalDensity d;
        FormulaColumns f;
    };
    std::vector<Row> rows(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        double theta, q;
        if (fig7) {
            theta = theta_from_lambda1(grid[i]);
            q = fixed_or(cfg, "q", 0.0);
        } else {
            theta = fixed_theta(cfg, 2.0 * std::max(cd.lambda_c, 0.01));
            q = grid[i];
        }
        rows[i].d = density(cfg.params, theta, 0.0, q, cfg.kappa);
        if (cfg.all_formulas)
            rows[i].f = evaluate_all_formulas(cfg.params, theta, 0.0, q, cfg.kappa, kClamp);
    });

    Csv csv(cfg, "distribution", cols);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<std::string> cells{fmt17(grid[i]), fmt17(rows[i].d.value),
                                       to_string(rows[i].d.regime)};
        if (cfg.all_formulas) {
            const FormulaColumns& f = rows[i].f;
            cells.insert(cells.end(),
                         {fmt17(f.high_t), fmt17(f.gaussian), fmt17(f.critical),
                          fmt17(f.two_branch), fmt17(f.dominant),
                          std::to_string(f.clamped_mask)});
        }
        csv.row(cells);
    }
    csv.write(cfg.out_path);
    return 0;
}

int cmd_compare_oracle(RunConfig cfg) {
    check_params(cfg);
    bool any_anharmonic = false;
    for (const auto& [n, a] : cfg.params.a)
        if (a != 0.0) any_anharmonic = true;
    if (!any_anharmonic)
        throw ConfigError("compare-oracle needs an anharmonic barrier; the pure inverted "
                          "oscillator is not confined (use the harmonic analytic test instead)");

    if (!cfg.sweep_given) cfg.sweep = {"q", -1.0, 1.0, 81};
    if (cfg.sweep.axis != "q") throw ConfigError("compare-oracle sweeps q");
    const double theta = fixed_theta(cfg, lambda1_from_theta(0.9 * kPi));
    std::vector<double> eps_set = cfg.epsilons;
    if (eps_set.empty()) eps_set = {0.2, 0.1, 0.05};
    const auto qs = linspace(cfg.sweep);

    Csv csv(cfg, "compare-oracle",
            {"epsilon", "q", "P_semiclassical_normalized", "P_exact_normalized", "rel_error"});

    std::vector<CompareMetrics> metrics;
    for (double eps : eps_set) {
        BarrierParams params = cfg.params;
        params.epsilon = eps;

        std::vector<std::pair<double, double>> semi(qs.size());
        detail::parallel_for(qs.size(), [&](std::size_t i) {
            semi[i] = {qs[i], position_distribution(params, theta, qs[i], cfg.kappa)};
        });

        const CappedPotential pot = build_capped_potential(params, cfg.oracle.q_match);
        const ExactDensityGrid ex =
            exact_density(GridSpec{cfg.oracle.L, cfg.oracle.N}, pot, theta);

        const double p0 = position_distribution(params, theta, 0.0, cfg.kappa);
        const double e0 = ex.diagonal_at(0.0);
        CompareMetrics m{0.0, 0.0};
        for (const auto& [q, P] : semi) {
            const double ps = P / p0;
            const double pe = ex.diagonal_at(q) / e0;
            const double rel = std::abs(ps - pe) / std::abs(pe);
            m.max_rel = std::max(m.max_rel, rel);
            m.mean_rel += rel;
            csv.row({fmt17(eps), fmt17(q), fmt17(ps), fmt17(pe), fmt17(rel)});
        }
        m.mean_rel /= static_cast<double>(qs.size());
        metrics.push_back(m);
    }

    bool monotone = true;
    for (std::size_t i = 0; i + 1 < eps_set.size(); ++i) {
        const bool order = eps_set[i] > eps_set[i + 1];
        const bool decreasing = order ? metrics[i].max_rel > metrics[i + 1].max_rel
                                      : metrics[i].max_rel < metrics[i + 1].max_rel;
        if (!decreasing) monotone = false;
    }
    for (std::size_t i = 0; i < eps_set.size(); ++i) {
        std::ostringstream os;
        os << "summary epsilon=" << fmt17(eps_set[i]) << " max_rel=" << fmt17(metrics[i].max_rel)
           << " mean_rel=" << fmt17(metrics[i].mean_rel);
        csv.comment(os.str());
    }
    csv.comment(std::string("epsilon-trend max_rel decreasing with epsilon: ") +
                (monotone ? "yes" : "no"));
    csv.write(cfg.out_path);
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"semiclassical density matrix near the top of an anharmonic barrier"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<double> a3, a4, a5, a6, epsilon, theta, lambda1, qv, rv, zv;
    std::optional<double> from, to, kappa;
    std::optional<int> steps;
    std::optional<std::string> axis;
    bool allow_strong = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--a3", a3, "cubic coefficient");
        sub->add_option("--a4", a4, "quartic coefficient");
        sub->add_option("--a5", a5, "quintic coefficient");
        sub->add_option("--a6", a6, "sextic coefficient");
        sub->add_option("--epsilon", epsilon, "expansion parameter");
        sub->add_option("--theta", theta, "fixed inverse temperature");
        sub->add_option("--lambda1", lambda1, "fixed lowest eigenvalue");
        sub->add_option("--q", qv, "fixed coordinate q");
        sub->add_option("--r", rv, "fixed sum coordinate r");
        sub->add_option("--z", zv, "fixed difference coordinate z");
        sub->add_option("--axis", axis, "sweep axis");
        sub->add_option("--from", from, "sweep start");
        sub->add_option("--to", to, "sweep end");
        sub->add_option("--steps", steps, "sweep points");
        sub->add_option("--kappa", kappa, "regime threshold multiplier");
        sub->add_option("--out", out_path, "output CSV path (default stdout)");
        sub->add_flag("--allow-strong-asymmetry", allow_strong,
                      "accept barriers violating a3^3 <= epsilon");
    };

    for (const char* name : {"regions", "bifurcation", "flucpot", "kq", "action", "density",
                             "distribution", "compare-oracle"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        if (a3) cfg.params.a[3] = *a3;
        if (a4) cfg.params.a[4] = *a4;
        if (a5) cfg.params.a[5] = *a5;
        if (a6) cfg.params.a[6] = *a6;
        if (epsilon) cfg.params.epsilon = *epsilon;
        if (theta) cfg.fixed["theta"] = *theta;
        if (lambda1) cfg.fixed["lambda1"] = *lambda1;
        if (qv) cfg.fixed["q"] = *qv;
        if (rv) cfg.fixed["r"] = *rv;
        if (zv) cfg.fixed["z"] = *zv;
        if (kappa) cfg.kappa = *kappa;
        if (!out_path.empty()) cfg.out_path = out_path;
        if (allow_strong) cfg.allow_strong_asymmetry = true;
        if (axis || from || to || steps) {
            if (!(axis && from && to && steps) && !cfg.sweep_given)
                throw ConfigError("a sweep override needs --axis, --from, --to and --steps");
            if (axis) cfg.sweep.axis = *axis;
            if (from) cfg.sweep.from = *from;
            if (to) cfg.sweep.to = *to;
            if (steps) cfg.sweep.steps = *steps;
            cfg.sweep_given = true;
        }

        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "regions") return cmd_regions(std::move(cfg));
        if (sub == "bifurcation") return cmd_bifurcation(std::move(cfg));
        if (sub == "flucpot") return cmd_flucpot(std::move(cfg));
        if (sub == "kq") return cmd_kq(std::move(cfg));
        if (sub == "action") return cmd_action(std::move(cfg));
        if (sub == "density") return cmd_density(std::move(cfg));
        if (sub == "distribution") return cmd_distribution(std::move(cfg));
        if (sub == "compare-oracle") return cmd_compare_oracle(std::move(cfg));
        throw ConfigError("unknown subcommand: " + sub);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace barriertop
