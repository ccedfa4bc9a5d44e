// slitbm command-line front end: evaluate formulas, tabulate them over
// grids, run Monte Carlo experiments, execute verification suites, and probe
// the independence question. Emits CSV or JSON with provenance headers.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slitbm/conditioned.hpp"
#include "slitbm/green.hpp"
#include "slitbm/hyperbolic.hpp"
#include "slitbm/monte_carlo.hpp"
#include "slitbm/quadrature.hpp"
#include "slitbm/slit_kernels.hpp"
#include "slitbm/special_functions.hpp"
#include "slitbm/stable.hpp"
#include "slitbm/verify.hpp"

namespace {

using slitbm::Point;
using Params = std::map<std::string, double>;

constexpr const char* kVersion = "slitbm 1.0.0";

struct Target {
    std::string params;     // comma-separated parameter names, in order
    std::string convention; // VAR2T / VAR1T tag of the producing formula
    std::string help;
    double (*eval)(const Params&);
};

double arg(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter --" + key);
    return it->second;
}

const std::map<std::string, Target>& targets() {
    using namespace slitbm;
    static const std::map<std::string, Target> reg = {
        // hitting place
        {"h1", {"x,z", "VAR2T", "axis exit-place density h(x,z)",
                [](const Params& p) { return hit_place_density_axis(arg(p, "x"), arg(p, "z")); }}},
        {"cdf1", {"x,z0", "VAR2T", "axis exit-place cdf P(B_tau > -z0)",
                  [](const Params& p) { return hit_place_cdf_axis(arg(p, "x"), arg(p, "z0")); }}},
        {"h3", {"x,y,z", "VAR2T", "general-start exit-place density (closed form)",
                [](const Params& p) {
                    return hit_place_density({arg(p, "x"), arg(p, "y")}, arg(p, "z"));
                }}},
        {"h2", {"x,y,z", "VAR2T", "general-start exit-place density (half-plane sweep)",
                [](const Params& p) {
                    return hit_place_density_halfplane_route({arg(p, "x"), arg(p, "y")},
                                                             arg(p, "z"));
                }}},
        {"h4", {"y,z", "VAR2T", "vertical-axis-start exit-place density",
                [](const Params& p) {
                    return hit_place_density({0.0, arg(p, "y")}, arg(p, "z"));
                }}},
        {"hgen", {"z1,z2,w", "VAR2T", "general-start exit-place density (z-notation)",
                  [](const Params& p) {
                      return hit_place_density_general({arg(p, "z1"), arg(p, "z2")},
                                                       arg(p, "w"));
                  }}},
        {"hint", {"x,z", "VAR2T", "two-ray slit exit-place density",
                  [](const Params& p) {
                      return hit_place_density_interval(arg(p, "x"), arg(p, "z"));
                  }}},
        // joint laws on the axis
        {"ga", {"a,s", "VAR2T", "level-crossing time density g_a(s)",
                [](const Params& p) { return level_hit_density(arg(p, "a"), arg(p, "s")); }}},
        {"bttd", {"x,s,z", "VAR2T", "joint exit law h_x(s,z) from (x,0)",
                  [](const Params& p) {
                      return joint_density_axis(arg(p, "x"), arg(p, "s"), arg(p, "z"));
                  }}},
        {"gtau", {"x,y,s,w", "VAR2T", "first hit of the horizontal axis: joint (s,w)",
                  [](const Params& p) {
                      return coordinate_hit_joint_density({arg(p, "x"), arg(p, "y")},
                                                          arg(p, "s"), arg(p, "w"),
                                                          HitLine::vertical);
                  }}},
        {"gsig", {"x,y,s,w", "VAR2T", "first hit of the vertical axis: joint (s,w)",
                  [](const Params& p) {
                      return coordinate_hit_joint_density({arg(p, "x"), arg(p, "y")},
                                                          arg(p, "s"), arg(p, "w"),
                                                          HitLine::horizontal);
                  }}},
        // general-start family
        {"jlg", {"z1,z2,lambda,w", "VAR1T", "exit Laplace transform E[e^{-l^2 tau/2}; dw]",
                 [](const Params& p) {
                     return joint_laplace_general({arg(p, "z1"), arg(p, "z2")},
                                                  arg(p, "lambda"), arg(p, "w"));
                 }}},
        {"jdg", {"z1,z2,s,w", "VAR1T", "general-start joint exit density",
                 [](const Params& p) {
                     return joint_density_general({arg(p, "z1"), arg(p, "z2")},
                                                  arg(p, "s"), arg(p, "w"));
                 }}},
        {"gauge", {"z1,z2,w,lambda", "VAR1T", "conditional gauge u(z,w)",
                   [](const Params& p) {
                       return conditional_gauge({arg(p, "z1"), arg(p, "z2")}, arg(p, "w"),
                                                arg(p, "lambda"));
                   }}},
        {"psi", {"v,y", "VAR2T", "e^{-tau}-weighted axis first-hit kernel Psi(v,y)",
                 [](const Params& p) { return psi_kernel(arg(p, "v"), arg(p, "y")); }}},
        {"gaugemass", {"x,y,w", "VAR2T", "off-axis gauge mass E[e^{-tau}; B_tau in dw]",
                       [](const Params& p) {
                           return gauge_mass_offaxis({arg(p, "x"), arg(p, "y")},
                                                     arg(p, "w"));
                       }}},
        {"dpk1", {"alpha,x,u", "VAR2T", "1-d alpha-stable half-line Poisson kernel",
                  [](const Params& p) {
                      const double xv[] = {arg(p, "x")};
                      const double uv[] = {arg(p, "u")};
                      return stable_poisson_halfspace(xv, uv, arg(p, "alpha"));
                  }}},
        {"dpk2", {"alpha,x1,x2,u1,u2", "VAR2T", "2-d alpha-stable half-space Poisson kernel",
                  [](const Params& p) {
                      const double xv[] = {arg(p, "x1"), arg(p, "x2")};
                      const double uv[] = {arg(p, "u1"), arg(p, "u2")};
                      return stable_poisson_halfspace(xv, uv, arg(p, "alpha"));
                  }}},
        // subordinators and the relativistic Cauchy process
        {"theta", {"t,u", "VAR2T", "1/2-stable subordinator density",
                   [](const Params& p) { return subordinator_density(arg(p, "t"), arg(p, "u")); }}},
        {"thetam", {"m,t,u", "VAR2T", "tilted subordinator density",
                    [](const Params& p) {
                        return tilted_subordinator_density(arg(p, "m"), arg(p, "t"),
                                                           arg(p, "u"));
                    }}},
        {"relc", {"d,m,t,x", "VAR2T", "relativistic Cauchy density at radius x",
                  [](const Params& p) {
                      const int d = static_cast<int>(arg(p, "d"));
                      std::vector<double> xv(static_cast<std::size_t>(d), 0.0);
                      xv[0] = arg(p, "x");
                      return rel_cauchy_density({d, arg(p, "m"), arg(p, "t")}, xv);
                  }}},
        {"relpot", {"d,alpha,m,r", "VAR2T", "relativistic m-potential at radius r",
                    [](const Params& p) {
                        return rel_potential(static_cast<int>(arg(p, "d")),
                                             arg(p, "alpha"), arg(p, "m"), arg(p, "r"));
                    }}},
        // potentials and Green functions
        {"ulam", {"lambda,r", "as-printed", "lambda-potential, as-printed constant",
                  [](const Params& p) { return potential_lambda(arg(p, "lambda"), arg(p, "r")); }}},
        {"ulamc", {"lambda,r", "VAR2T", "lambda-potential, resolvent-normalized",
                   [](const Params& p) {
                       return potential_lambda_corrected(arg(p, "lambda"), arg(p, "r"));
                   }}},
        {"ghp", {"lambda,x1,x2,y1,y2", "VAR2T", "half-plane lambda-Green function",
                 [](const Params& p) {
                     return green_halfplane_lambda(arg(p, "lambda"),
                                                   {arg(p, "x1"), arg(p, "x2")},
                                                   {arg(p, "y1"), arg(p, "y2")});
                 }}},
        {"glax", {"lambda,x,y", "VAR1T", "slit Green function, both points on the axis",
                  [](const Params& p) {
                      return green_lambda_axis(arg(p, "lambda"), arg(p, "x"), arg(p, "y"));
                  }}},
        {"gloff", {"lambda,x1,x2,y", "VAR1T", "slit Green function, one point off-axis",
                   [](const Params& p) {
                       return green_lambda_offaxis(arg(p, "lambda"),
                                                   {arg(p, "x1"), arg(p, "x2")},
                                                   arg(p, "y"));
                   }}},
        {"glgen", {"lambda,x1,x2,y1,y2", "VAR1T", "slit Green function, both points off-axis",
                   [](const Params& p) {
                       return green_lambda_general(arg(p, "lambda"),
                                                   {arg(p, "x1"), arg(p, "x2")},
                                                   {arg(p, "y1"), arg(p, "y2")});
                   }}},
        {"pkill", {"t,x,y", "VAR1T", "killed transition density on the axis",
                   [](const Params& p) {
                       return killed_density_axis(arg(p, "t"), arg(p, "x"), arg(p, "y"));
                   }}},
        {"pkilloff", {"t,x1,x2,y", "VAR1T", "killed transition density, off-axis start",
                      [](const Params& p) {
                          return killed_density_offaxis(arg(p, "t"),
                                                        {arg(p, "x1"), arg(p, "x2")},
                                                        arg(p, "y"));
                      }}},
        {"cyg", {"v,y", "VAR1T", "Cauchy half-line Green function",
                 [](const Params& p) { return cauchy_halfline_green(arg(p, "v"), arg(p, "y")); }}},
        {"glog", {"y,x1,x2", "VAR1T", "log Green function G_D((y,0),p)",
                  [](const Params& p) {
                      return green_log_axis(arg(p, "y"), {arg(p, "x1"), arg(p, "x2")});
                  }}},
        {"glogv", {"y,x1,x2", "VAR1T", "log Green function G_D((0,y),p)",
                   [](const Params& p) {
                       return green_log_from_vertical(arg(p, "y"),
                                                      {arg(p, "x1"), arg(p, "x2")});
                   }}},
        {"gfact", {"x1,x2,y", "VAR1T", "harmonic-measure form of the log Green function",
                   [](const Params& p) {
                       return greenfact({arg(p, "x1"), arg(p, "x2")}, arg(p, "y"));
                   }}},
        // conditioned / killed planar densities
        {"free2d", {"t,x1,x2,y1,y2", "VAR2T", "free planar transition density",
                    [](const Params& p) {
                        return free_density(arg(p, "t"), {arg(p, "x1"), arg(p, "x2")},
                                            {arg(p, "y1"), arg(p, "y2")});
                    }}},
        {"rzd", {"t,y,z,w1,w2", "VAR2T", "passed-through-exit kernel r_z^D",
                 [](const Params& p) {
                     return r_zD(arg(p, "t"), arg(p, "y"), arg(p, "z"),
                                 {arg(p, "w1"), arg(p, "w2")});
                 }}},
        {"pcond", {"t,y,z,w1,w2", "VAR2T", "transition density conditioned to exit at (z,0)",
                   [](const Params& p) {
                       return conditioned_density(arg(p, "t"), arg(p, "y"), arg(p, "z"),
                                                  {arg(p, "w1"), arg(p, "w2")});
                   }}},
        {"pkill2d", {"t,x1,x2,w1,w2", "VAR2T", "killed planar transition density",
                     [](const Params& p) {
                         return killed_density_2d(arg(p, "t"),
                                                  {arg(p, "x1"), arg(p, "x2")},
                                                  {arg(p, "w1"), arg(p, "w2")});
                     }}},
        // drifted / hyperbolic family
        {"hmu", {"mu,y,s,z", "VAR2T", "drifted joint exit law",
                 [](const Params& p) {
                     return drift_joint_density(arg(p, "mu"), arg(p, "y"), arg(p, "s"),
                                                arg(p, "z"));
                 }}},
        {"gmu", {"mu,a,s", "VAR2T", "drifted level-crossing density",
                 [](const Params& p) {
                     return drift_level_density(arg(p, "mu"), arg(p, "a"), arg(p, "s"));
                 }}},
        {"hypj", {"mu,a,y,s,z", "VAR2T", "hyperbolic exit joint law",
                  [](const Params& p) {
                      return hyp_exit_joint(arg(p, "mu"), arg(p, "a"), arg(p, "y"),
                                            arg(p, "s"), arg(p, "z"));
                  }}},
        {"hypp", {"a,y,z", "VAR2T", "hyperbolic exit place density",
                  [](const Params& p) {
                      return hyp_exit_place(arg(p, "a"), arg(p, "y"), arg(p, "z"));
                  }}},
        {"eam", {"mu,y,t", "VAR2T", "mean of the exponential functional (t<0 means infinity)",
                 [](const Params& p) {
                     const double t = arg(p, "t");
                     return exp_functional_mean(
                         arg(p, "mu"), arg(p, "y"),
                         t < 0.0 ? std::numeric_limits<double>::infinity() : t);
                 }}},
        // special functions
        {"besseli", {"nu,z", "VAR2T", "modified Bessel function I_nu",
                     [](const Params& p) { return slitbm::bessel_i(arg(p, "nu"), arg(p, "z")); }}},
        {"besselk", {"nu,z", "VAR2T", "Macdonald function K_nu",
                     [](const Params& p) { return slitbm::bessel_k(arg(p, "nu"), arg(p, "z")); }}},
        {"besselkh", {"n,z", "VAR2T", "half-integer Macdonald function K_{n+1/2}",
                      [](const Params& p) {
                          return slitbm::bessel_k_half(static_cast<int>(arg(p, "n")),
                                                       arg(p, "z"));
                      }}},
    };
    return reg;
}

Params parse_extras(const std::vector<std::string>& extras) {
    Params out;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0)
            throw std::invalid_argument("expected --name value, got '" + tok + "'");
        std::string key = tok.substr(2);
        std::string value;
        const auto eq = key.find('=');
        if (eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size())
                throw std::invalid_argument("missing value for --" + key);
            value = extras[++i];
        }
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("could not parse value for --" + key);
        out[key] = parsed;
    }
    return out;
}

std::string format_value(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

std::vector<GridAxis> parse_grid(const std::string& spec) {
    std::vector<GridAxis> axes;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid axis must look like name=lo:hi:count");
        GridAxis axis;
        axis.name = part.substr(0, eq);
        const std::string range = part.substr(eq + 1);
        double lo = 0, hi = 0;
        long count = 0;
        if (std::sscanf(range.c_str(), "%lf:%lf:%ld", &lo, &hi, &count) != 3 || count < 1)
            throw std::invalid_argument("bad grid range '" + range + "'");
        for (long i = 0; i < count; ++i) {
            const double t = count == 1 ? 0.0
                                        : static_cast<double>(i) /
                                              static_cast<double>(count - 1);
            axis.values.push_back(lo + t * (hi - lo));
        }
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) throw std::invalid_argument("empty grid");
    return axes;
}

Point parse_point(const std::string& s) {
    double a = 0, b = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &a, &b) != 2)
        throw std::invalid_argument("point must look like x,y");
    return {a, b};
}

int cmd_eval(const std::string& target, const Params& params, int precision) {
    const auto& reg = targets();
    const auto it = reg.find(target);
    if (it == reg.end()) {
        std::fprintf(stderr, "unknown operation '%s'\n", target.c_str());
        return 2;
    }
    try {
        const double value = it->second.eval(params);
        std::printf("# %s eval formula=%s convention=%s\n", kVersion, target.c_str(),
                    it->second.convention.c_str());
        std::printf("%s\n", format_value(value, precision).c_str());
        return 0;
    } catch (const slitbm::tolerance_error& e) {
        std::fprintf(stderr, "tolerance failure: %s (best estimate %.9g, bound %.3g)\n",
                     e.what(), e.best_estimate(), e.error_bound());
        return 1;
    }
}

int cmd_table(const std::string& target, const std::string& grid_spec,
              const Params& fixed, int precision) {
    const auto& reg = targets();
    const auto it = reg.find(target);
    if (it == reg.end()) {
        std::fprintf(stderr, "unknown operation '%s'\n", target.c_str());
        return 2;
    }
    const auto axes = parse_grid(grid_spec);
    std::printf("# %s table formula=%s convention=%s\n", kVersion, target.c_str(),
                it->second.convention.c_str());
    std::printf("# grid: %s\n", grid_spec.c_str());
    for (const auto& [k, v] : fixed)
        std::printf("# fixed: %s=%s\n", k.c_str(), format_value(v, precision).c_str());
    for (const auto& axis : axes) std::printf("%s,", axis.name.c_str());
    std::printf("value,convention\n");

    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        Params p = fixed;
        for (std::size_t k = 0; k < axes.size(); ++k)
            p[axes[k].name] = axes[k].values[idx[k]];
        for (std::size_t k = 0; k < axes.size(); ++k)
            std::printf("%s,", format_value(p[axes[k].name], precision).c_str());
        double value = std::nan("");
        try {
            value = it->second.eval(p);
        } catch (const std::exception&) {
            // out-of-domain grid nodes are reported as nan rows
        }
        std::printf("%s,%s\n", format_value(value, precision).c_str(),
                    it->second.convention.c_str());
        std::size_t k = axes.size();
        while (k > 0) {
            --k;
            if (++idx[k] < axes[k].values.size()) break;
            idx[k] = 0;
            if (k == 0) return 0;
        }
    }
}

int cmd_mc_hits(const slitbm::MCConfig& cfg, const Point& start, int precision) {
    const auto outcomes = slitbm::simulate_hits(cfg, start);
    std::printf("# %s mc hits start=%g,%g paths=%ld step=%g horizon=%g seed=%" PRIu64
                " sigma2=%g mu=%g workers=%d convention=%s\n",
                kVersion, start.x1, start.x2, cfg.paths, cfg.step, cfg.horizon, cfg.seed,
                cfg.sigma2, cfg.drift_mu, slitbm::resolve_workers(cfg.workers),
                cfg.sigma2 == 2.0 ? "VAR2T" : "VAR1T");
    std::printf("path_id,hit_time,hit_place,censored\n");
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        std::printf("%zu,%s,%s,%d\n", i, format_value(o.hit_time, precision).c_str(),
                    o.censored ? "nan" : format_value(o.hit_place, precision).c_str(),
                    o.censored ? 1 : 0);
    }
    return 0;
}

int cmd_mc_survival(const slitbm::MCConfig& cfg, const Point& start, double t,
                    int precision, const std::string& output) {
    const auto est = slitbm::estimate_survival(cfg, start, t);
    if (output == "json") {
        nlohmann::ordered_json j;
        j["start"] = {start.x1, start.x2};
        j["t"] = t;
        j["paths"] = cfg.paths;
        j["step"] = cfg.step;
        j["seed"] = cfg.seed;
        j["sigma2"] = cfg.sigma2;
        j["value"] = est.value;
        j["std_error"] = est.std_error;
        j["ci95"] = {est.ci95.first, est.ci95.second};
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("# %s mc survival start=%g,%g t=%g paths=%ld step=%g seed=%" PRIu64
                    " sigma2=%g convention=%s\n",
                    kVersion, start.x1, start.x2, t, cfg.paths, cfg.step, cfg.seed,
                    cfg.sigma2, cfg.sigma2 == 2.0 ? "VAR2T" : "VAR1T");
        std::printf("value,std_error,n,ci_lo,ci_hi\n");
        std::printf("%s,%s,%ld,%s,%s\n", format_value(est.value, precision).c_str(),
                    format_value(est.std_error, precision).c_str(), est.n,
                    format_value(est.ci95.first, precision).c_str(),
                    format_value(est.ci95.second, precision).c_str());
    }
    return 0;
}

int cmd_verify(const std::string& suite, const slitbm::VerifyOptions& opt) {
    std::vector<std::string> to_run;
    if (suite == "all")
        to_run = slitbm::suite_names();
    else
        to_run.push_back(suite);

    bool all_ok = true;
    for (const auto& name : to_run) {
        const auto result = slitbm::run_suite(name, opt);
        for (const auto& check : result.checks) {
            std::printf("[%s] %s: %s (observed %.3g, tolerance %.3g)%s%s\n",
                        check.passed ? "PASS" : "FAIL", name.c_str(),
                        check.name.c_str(), check.observed, check.tolerance,
                        check.note.empty() ? "" : " -- ", check.note.c_str());
            all_ok = all_ok && check.passed;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_probe(double mu, double y, long paths, std::uint64_t seed) {
    const auto rep = slitbm::conjecture_probe(mu, y, paths, seed);
    nlohmann::ordered_json j;
    j["mu"] = rep.mu;
    j["y"] = rep.y;
    j["paths"] = paths;
    j["seed"] = rep.seed;
    j["n"] = rep.n;
    j["censored"] = rep.censored;
    j["pearson"] = rep.pearson;
    j["pearson_ci95"] = {rep.pearson_ci.first, rep.pearson_ci.second};
    j["spearman"] = rep.spearman;
    j["spearman_ci95"] = {rep.spearman_ci.first, rep.spearman_ci.second};
    j["chi2_quartile_4x4"] = rep.chi2;
    j["chi2_df"] = 9;
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slit-plane Brownian hitting laws: evaluate, tabulate, simulate, verify"};
    app.require_subcommand(1);
    int precision = 9;
    app.add_option("--precision", precision, "significant digits in output")
        ->check(CLI::Range(1, 17));

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one formula; see README for ids");
    std::string eval_target;
    eval->add_option("target", eval_target, "operation id (e.g. h1, glax, besselk)")
        ->required();
    eval->add_option("--precision", precision, "significant digits in output")
        ->check(CLI::Range(1, 17));
    eval->allow_extras();

    // table
    auto* table = app.add_subcommand("table", "tabulate a formula over a grid (CSV)");
    std::string table_target, grid_spec;
    table->add_option("target", table_target)->required();
    table->add_option("--grid", grid_spec, "axes, e.g. x=0.5:2:4,z=-3:-0.5:6")->required();
    table->add_option("--precision", precision, "significant digits in output")
        ->check(CLI::Range(1, 17));
    table->allow_extras();

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
    mc->require_subcommand(1);
    slitbm::MCConfig cfg;
    std::string start_str = "1,0";
    auto add_mc_common = [&](CLI::App* sub) {
        sub->add_option("--start", start_str, "starting point x,y");
        sub->add_option("--paths", cfg.paths);
        sub->add_option("--step", cfg.step);
        sub->add_option("--horizon", cfg.horizon);
        sub->add_option("--seed", cfg.seed);
        sub->add_option("--sigma2", cfg.sigma2, "variance per unit time (1 or 2)");
        sub->add_option("--mu", cfg.drift_mu, "horizontal drift -2*mu*t");
        sub->add_option("--workers", cfg.workers);
    };
    auto* hits = mc->add_subcommand("hits", "stream hit samples as CSV");
    add_mc_common(hits);
    auto* survival = mc->add_subcommand("survival", "estimate P(tau > t)");
    add_mc_common(survival);
    double survival_t = 1.0;
    std::string output = "csv";
    survival->add_option("--t", survival_t)->required();
    survival->add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string suite = "all";
    slitbm::VerifyOptions vopt;
    verify->add_option("--suite", suite, "kernels|bessel|stable|green|killed|hyperbolic|mc-agreement|all");
    verify->add_option("--tol", vopt.tol, "override tolerance of exact checks");
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--paths", vopt.mc_paths, "paths for MC-backed checks");
    verify->add_option("--step", vopt.mc_step, "Euler step for MC-backed checks");

    // probe
    auto* probe = app.add_subcommand("probe", "dependence probe of the exponential "
                                              "functional vs the exit place (JSON)");
    double probe_mu = 2.0, probe_y = 2.0;
    long probe_paths = 20000;
    std::uint64_t probe_seed = 1;
    probe->add_option("--mu", probe_mu)->required();
    probe->add_option("--y", probe_y)->required();
    probe->add_option("--paths", probe_paths);
    probe->add_option("--seed", probe_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // argument errors exit 2
    }

    try {
        if (*eval) return cmd_eval(eval_target, parse_extras(eval->remaining()), precision);
        if (*table)
            return cmd_table(table_target, grid_spec, parse_extras(table->remaining()),
                             precision);
        if (*hits) return cmd_mc_hits(cfg, parse_point(start_str), precision);
        if (*survival)
            return cmd_mc_survival(cfg, parse_point(start_str), survival_t, precision,
                                   output);
        if (*verify) return cmd_verify(suite, vopt);
        if (*probe) return cmd_probe(probe_mu, probe_y, probe_paths, probe_seed);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "argument error: %s\n", e.what());
        return 2;
    } catch (const slitbm::tolerance_error& e) {
        std::fprintf(stderr, "tolerance failure: %s (best estimate %.9g)\n", e.what(),
                     e.best_estimate());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
