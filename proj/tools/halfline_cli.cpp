// Command-line interface for the half-line wavemaker solver library.
//
// Subcommands: roots, dnmap, evaluate, phase-diagram, oracle, compare.
// Output is CSV (schema: model,omega0,x,t,xi,method,value,err_estimate,
// region,status) written to stdout or --output.  A JSON config file may
// supply any long-option value; explicit flags override the file.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfline/asymptotics.hpp"
#include "halfline/csv.hpp"
#include "halfline/dispersion.hpp"
#include "halfline/dnmap.hpp"
#include "halfline/fokas.hpp"
#include "halfline/modulation.hpp"
#include "halfline/oracle.hpp"

namespace {

using namespace halfline;
using nlohmann::json;

// Short machine-readable status token for a library error (CSV-safe).
std::string error_code(const HalflineError& e) {
    if (dynamic_cast<const PoleOfDispersion*>(&e)) return "pole";
    if (dynamic_cast<const DegeneratePolynomial*>(&e)) return "degenerate";
    if (dynamic_cast<const NoUniqueRadiatingRoot*>(&e)) return "no-unique-root";
    if (dynamic_cast<const UncoveredFamily*>(&e)) return "uncovered-family";
    if (dynamic_cast<const UncoveredHarmonic*>(&e)) return "uncovered-harmonic";
    if (dynamic_cast<const NonConvergent*>(&e)) return "non-convergent";
    if (dynamic_cast<const StrategyDomain*>(&e)) return "strategy-domain";
    if (dynamic_cast<const OnRegionBoundary*>(&e)) return "on-boundary";
    if (dynamic_cast<const SupercriticalUnsupported*>(&e)) {
        return "supercritical";
    }
    if (dynamic_cast<const AtGroupVelocity*>(&e)) return "at-cg";
    if (dynamic_cast<const StabilityViolation*>(&e)) return "unstable";
    if (dynamic_cast<const FrontExitedDomain*>(&e)) return "front-exited";
    return "error";
}

int thread_budget() {
    if (const char* env = std::getenv("HALFLINE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Run fn(i) for i in [0, n) on the thread budget; results are indexed, so
// output order is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v;
    if (count <= 1) {
        v.push_back(lo);
        return v;
    }
    for (int i = 0; i < count; ++i) {
        v.push_back(lo + (hi - lo) * i / (count - 1));
    }
    return v;
}

struct ModelChoice {
    std::string name = "kdv";  // kdv | bbm | general
    ModelCoefficients coeffs = ModelCoefficients::kdv();

    void resolve() {
        if (name == "kdv") {
            coeffs = ModelCoefficients::kdv();
        } else if (name == "bbm") {
            coeffs = ModelCoefficients::bbm();
        }
        coeffs.validate();
    }
    bool is_kdv() const { return name == "kdv"; }
    bool is_bbm() const { return name == "bbm"; }
};

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return &std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output: " + path);
    return &file;
}

std::string location_name(RootLocation loc) {
    switch (loc) {
        case RootLocation::OnDPlusBoundary: return "boundary-D+";
        case RootLocation::OnDMinusBoundary: return "boundary-D-";
        case RootLocation::Interior: return "interior";
    }
    return "?";
}

// Evaluate one sample with the requested method; errors become row status.
CsvRow eval_row(const ModelChoice& model, double omega0, double x, double t,
                const std::string& method) {
    CsvRow row;
    row.model = model.name;
    row.omega0 = omega0;
    row.x = x;
    row.t = t;
    row.xi = (t > 0.0) ? x / t : 0.0;
    row.method = method;
    row.status = "ok";
    try {
        if (method == "exact") {
            SolutionSample s = model.is_kdv() ? kdv_exact(x, t, omega0)
                                              : bbm_exact(x, t, omega0);
            row.value = s.value;
            row.err_estimate = s.err_estimate;
        } else if (method == "asym") {
            SolutionSample s = model.is_kdv() ? kdv_asymptotic(omega0, x, t)
                                              : bbm_asymptotic(omega0, x, t);
            row.value = s.value;
            row.err_estimate = s.err_estimate;
            RegionLabel label = model.is_kdv() ? kdv_region(omega0, row.xi)
                                               : bbm_region(omega0, row.xi);
            row.region = to_string(label.name);
        } else if (method == "series") {
            DNMapResult dn =
                dn_coefficients(model.coeffs, FourierBoundary::sin_preset(omega0));
            row.value = asymptotic_solution_series(dn, x, t).real();
            row.err_estimate = 1.0 / std::sqrt(std::max(t, 1.0));
        } else {
            throw std::runtime_error("unknown method: " + method);
        }
        if (row.region.empty()) {
            try {
                RegionLabel label = model.is_kdv() ? kdv_region(omega0, row.xi)
                                                   : bbm_region(omega0, row.xi);
                row.region = to_string(label.name);
            } catch (const HalflineError&) {
                row.region = "boundary";
            }
        }
    } catch (const HalflineError& e) {
        row.value = std::nan("");
        row.status = error_code(e);
    }
    return row;
}

json load_config(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) {
                throw std::runtime_error(std::string("cannot read config: ") +
                                         argv[i + 1]);
            }
            return json::parse(in);
        }
    }
    return json::object();
}

// Pre-seed a variable from the JSON config so that explicit CLI flags
// still take precedence.
template <class T>
void seed(const json& cfg, const char* key, T& var) {
    if (cfg.contains(key)) var = cfg.at(key).get<T>();
}

int cmd_roots(const ModelChoice& model, double omega0, int n,
              std::ostream& os) {
    if (!(omega0 > 0.0)) {
        std::cerr << "error: omega0 must be positive for the wavemaker "
                     "preset\n";
        return 2;
    }
    RootSet rs = characteristic_roots(model.coeffs, n, omega0);
    os << "# model=" << model.name << " omega0=" << format_double(omega0)
       << " n=" << n << "\n";
    os << "root_re,root_im,multiplicity,location,is_k0,cg_re,cg_im\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const ClassifiedRoot& r = rs.roots[i];
        Complex cg{0.0, 0.0};
        bool have_cg = true;
        try {
            cg = group_velocity(model.coeffs, r.value);
        } catch (const HalflineError&) {
            have_cg = false;
        }
        os << format_double(r.value.real()) << ','
           << format_double(r.value.imag()) << ',' << r.multiplicity << ','
           << location_name(r.location) << ','
           << (i == rs.k0_index ? 1 : 0) << ','
           << (have_cg ? format_double(cg.real()) : "") << ','
           << (have_cg ? format_double(cg.imag()) : "") << "\n";
    }
    CriticalFrequencies cf = critical_frequencies(model.coeffs);
    os << "# omega_cr_minus=" << format_double(cf.omega_cr_minus)
       << " omega_cr_plus=" << format_double(cf.omega_cr_plus)
       << " degenerate=" << (cf.degenerate ? 1 : 0) << "\n";
    return 0;
}

int cmd_dnmap(const ModelChoice& model, double omega0, std::ostream& os) {
    DNMapResult dn =
        dn_coefficients(model.coeffs, FourierBoundary::sin_preset(omega0));
    os << "# model=" << model.name << " omega0=" << format_double(omega0)
       << " real_data=" << (dn.real_data ? 1 : 0) << "\n";
    os << "n,a_re,a_im,k0_re,k0_im,b_re,b_im,c_re,c_im\n";
    for (const HarmonicDN& h : dn.harmonics) {
        os << h.n << ',' << format_double(h.a.real()) << ','
           << format_double(h.a.imag()) << ',' << format_double(h.k0.real())
           << ',' << format_double(h.k0.imag()) << ','
           << format_double(h.b.real()) << ',' << format_double(h.b.imag())
           << ',';
        if (h.has_c) {
            os << format_double(h.c.real()) << ','
               << format_double(h.c.imag());
        } else {
            os << ',';
        }
        os << "\n";
    }
    return 0;
}

int cmd_evaluate(const ModelChoice& model, double omega0,
                 const std::string& method, const std::vector<double>& xs,
                 const std::vector<double>& ts, std::ostream& os) {
    std::vector<std::string> methods;
    if (method == "all") {
        methods = {"exact", "asym", "series"};
    } else {
        methods = {method};
    }
    struct Task {
        double x, t;
        std::string method;
    };
    std::vector<Task> tasks;
    for (double t : ts) {
        for (double x : xs) {
            for (const std::string& m : methods) tasks.push_back({x, t, m});
        }
    }
    std::vector<CsvRow> rows(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        rows[i] = eval_row(model, omega0, tasks[i].x, tasks[i].t,
                           tasks[i].method);
    });
    if (method == "all") {
        // Append pairwise difference rows per (x, t) group, preserving
        // input order.
        std::vector<CsvRow> with_diffs;
        for (std::size_t g = 0; g < rows.size(); g += methods.size()) {
            for (std::size_t j = 0; j < methods.size(); ++j) {
                with_diffs.push_back(rows[g + j]);
            }
            for (std::size_t a = 0; a < methods.size(); ++a) {
                for (std::size_t b = a + 1; b < methods.size(); ++b) {
                    CsvRow d = rows[g + a];
                    d.method = "diff:" + methods[a] + "-" + methods[b];
                    if (rows[g + a].status == "ok" &&
                        rows[g + b].status == "ok") {
                        d.value = rows[g + a].value - rows[g + b].value;
                        d.err_estimate = rows[g + a].err_estimate +
                                         rows[g + b].err_estimate;
                    } else {
                        d.value = std::nan("");
                        d.status = "skipped";
                    }
                    with_diffs.push_back(d);
                }
            }
        }
        rows = std::move(with_diffs);
    }
    write_csv(os, rows);
    bool any_ok = false;
    for (const CsvRow& r : rows) any_ok |= (r.status == "ok");
    return (rows.empty() || any_ok) ? 0 : 1;
}

int cmd_phase_diagram(const ModelChoice& model, double w_lo, double w_hi,
                      double xi_lo, double xi_hi, int resolution,
                      std::ostream& os) {
    const bool kdv = model.is_kdv();
    std::vector<double> ws = linspace(w_lo, w_hi, resolution);
    std::vector<double> xis = linspace(xi_lo, xi_hi, resolution);
    std::vector<CsvRow> rows(ws.size() * xis.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        double w = ws[i / xis.size()];
        double xi = xis[i % xis.size()];
        CsvRow& row = rows[i];
        row.model = model.name;
        row.omega0 = w;
        row.xi = xi;
        row.method = "region";
        row.status = "ok";
        try {
            RegionLabel label = kdv ? kdv_region(w, xi) : bbm_region(w, xi);
            row.region = to_string(label.name);
        } catch (const HalflineError& e) {
            row.region = "boundary";
            row.status = error_code(e);
        }
    });

    // Boundary-curve polylines: for each curve, xi(omega0) found by
    // bisection where a closed form is not available.
    auto emit_curve = [&](const std::string& name, double w, double xi) {
        CsvRow row;
        row.model = model.name;
        row.omega0 = w;
        row.xi = xi;
        row.method = "curve";
        row.region = name;
        row.status = "ok";
        rows.push_back(row);
    };
    auto bisect = [](const std::function<double(double)>& f, double lo,
                     double hi) {
        double flo = f(lo);
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = f(mid);
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    const double wcr = kdv ? critical_frequencies(ModelCoefficients::kdv())
                                 .omega_cr_plus
                           : 0.5;
    for (double w : linspace(std::max(w_lo, 1e-3), w_hi, 200)) {
        if (w < wcr) {
            double cg = kdv ? kdv_cg_curve(w) : bbm_cg(w);
            if (cg >= xi_lo && cg <= xi_hi) emit_curve("cg", w, cg);
        } else if (w > wcr) {
            if (kdv) {
                if (kdv_l1(w, 1e-9) * kdv_l1(w, 1.0 - 1e-9) < 0) {
                    double xi = bisect(
                        [&](double s) { return kdv_l1(w, s); }, 1e-9,
                        1.0 - 1e-9);
                    if (xi >= xi_lo && xi <= xi_hi) emit_curve("l1", w, xi);
                }
                if (xi_hi > 1.0 &&
                    kdv_l2(w, 1.0 + 1e-9) * kdv_l2(w, xi_hi) < 0) {
                    double xi = bisect(
                        [&](double s) { return kdv_l2(w, s); }, 1.0 + 1e-9,
                        xi_hi);
                    emit_curve("l2", w, xi);
                }
            } else {
                if (bbm_l3(w, 1e-9) * bbm_l3(w, 1.0 - 1e-9) < 0) {
                    double xi = bisect(
                        [&](double s) { return bbm_l3(w, s); }, 1e-9,
                        1.0 - 1e-9);
                    if (xi >= xi_lo && xi <= xi_hi) emit_curve("l3", w, xi);
                }
                if (w > 1.0 / std::sqrt(2.0)) {
                    double xi = 2.0 * w * w;
                    if (xi >= xi_lo && xi <= xi_hi) {
                        emit_curve("xi=2w2", w, xi);
                    }
                }
            }
        }
    }
    for (double w : linspace(std::max(w_lo, 1e-3), w_hi, 200)) {
        if (1.0 >= xi_lo && 1.0 <= xi_hi) emit_curve("xi=1", w, 1.0);
    }
    if (wcr >= w_lo && wcr <= w_hi) {
        for (double xi : linspace(std::max(xi_lo, 1e-3), xi_hi, 200)) {
            emit_curve("omega_cr", wcr, xi);
        }
    }
    write_csv(os, rows);
    return 0;
}

int cmd_oracle(const ModelChoice& model, double omega0, double t_final,
               const OracleGrid& grid, int stride, std::ostream& os) {
    OracleResult res = model.is_kdv() ? run_kdv(omega0, grid, t_final)
                                      : run_bbm(omega0, grid, t_final);
    std::vector<CsvRow> rows;
    for (const OracleSnapshot& snap : res.snapshots) {
        for (std::size_t i = 0; i < res.x.size();
             i += static_cast<std::size_t>(std::max(1, stride))) {
            CsvRow row;
            row.model = model.name;
            row.omega0 = omega0;
            row.x = res.x[i];
            row.t = snap.t;
            row.xi = (snap.t > 0.0) ? res.x[i] / snap.t : 0.0;
            row.method = "oracle";
            row.value = snap.u[i];
            row.status = "ok";
            rows.push_back(row);
        }
    }
    write_csv(os, rows);
    return 0;
}

int cmd_compare(const ModelChoice& model, double omega0, double t_final,
                const OracleGrid& grid, double x_hi, int stride,
                std::ostream& os) {
    OracleResult res = model.is_kdv() ? run_kdv(omega0, grid, t_final)
                                      : run_bbm(omega0, grid, t_final);
    const OracleSnapshot& snap = res.snapshots.back();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < res.x.size();
         i += static_cast<std::size_t>(std::max(1, stride))) {
        if (res.x[i] <= x_hi) idx.push_back(i);
    }
    std::vector<CsvRow> rows(3 * idx.size());
    parallel_for(idx.size(), [&](std::size_t j) {
        double x = res.x[idx[j]];
        CsvRow ex = eval_row(model, omega0, x, snap.t, "exact");
        CsvRow orc = ex;
        orc.method = "oracle";
        orc.value = snap.u[idx[j]];
        orc.err_estimate = 0.0;
        orc.status = "ok";
        CsvRow diff = ex;
        diff.method = "diff:exact-oracle";
        diff.value = ex.value - orc.value;
        rows[3 * j] = ex;
        rows[3 * j + 1] = orc;
        rows[3 * j + 2] = diff;
    });
    write_csv(os, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        json cfg = load_config(argc, argv);

        CLI::App app{"half-line wavemaker solver"};
        app.require_subcommand(1);
        std::string config_path, output_path;
        app.add_option("--config", config_path,
                       "JSON config file (flags override its values)");
        seed(cfg, "output", output_path);
        app.add_option("--output", output_path, "output file (default stdout)");

        ModelChoice model;
        double omega0 = 0.375;
        seed(cfg, "model", model.name);
        seed(cfg, "omega0", omega0);

        auto add_model_opts = [&](CLI::App* sub) {
            sub->add_option("--config", config_path,
                           "JSON config file (flags override its values)");
            sub->add_option("--output", output_path,
                           "output file (default stdout)");
            sub->add_option("--model", model.name, "kdv | bbm | general");
            sub->add_option("--omega0", omega0, "base forcing frequency");
            sub->add_option("--a-m2", model.coeffs.a_m2, "coefficient on u_xxt");
            sub->add_option("--a0", model.coeffs.a0, "zeroth-order coefficient");
            sub->add_option("--a1", model.coeffs.a1, "first-order coefficient");
            sub->add_option("--a2", model.coeffs.a2, "second-order coefficient");
            sub->add_option("--a3", model.coeffs.a3, "third-order coefficient");
        };

        // roots
        int harmonic = -1;
        CLI::App* roots = app.add_subcommand("roots", "characteristic roots");
        add_model_opts(roots);
        seed(cfg, "n", harmonic);
        roots->add_option("--n", harmonic, "harmonic index");

        // dnmap
        CLI::App* dnm = app.add_subcommand("dnmap", "boundary-derivative map");
        add_model_opts(dnm);

        // evaluate
        std::string method = "exact";
        double x_lo = 0.0, x_hi = 10.0, t_lo = 10.0, t_hi = 10.0;
        int x_count = 11, t_count = 1;
        std::vector<double> xi_list;
        CLI::App* ev = app.add_subcommand("evaluate", "solution samples");
        add_model_opts(ev);
        seed(cfg, "method", method);
        seed(cfg, "x-min", x_lo);
        seed(cfg, "x-max", x_hi);
        seed(cfg, "x-count", x_count);
        seed(cfg, "t-min", t_lo);
        seed(cfg, "t-max", t_hi);
        seed(cfg, "t-count", t_count);
        ev->add_option("--method", method, "exact | asym | series | all");
        ev->add_option("--x-min", x_lo, "first x");
        ev->add_option("--x-max", x_hi, "last x");
        ev->add_option("--x-count", x_count, "number of x samples");
        ev->add_option("--t-min", t_lo, "first t");
        ev->add_option("--t-max", t_hi, "last t");
        ev->add_option("--t-count", t_count, "number of t samples");
        ev->add_option("--xi", xi_list,
                       "evaluate at fixed rays xi (x = xi * t)");

        // phase-diagram
        double w_lo = 0.01, w_hi = 1.2, pxi_lo = 0.01, pxi_hi = 2.0;
        int resolution = 100;
        CLI::App* pd =
            app.add_subcommand("phase-diagram", "region labels and curves");
        add_model_opts(pd);
        seed(cfg, "omega0-min", w_lo);
        seed(cfg, "omega0-max", w_hi);
        seed(cfg, "xi-min", pxi_lo);
        seed(cfg, "xi-max", pxi_hi);
        seed(cfg, "resolution", resolution);
        pd->add_option("--omega0-min", w_lo, "lower omega0");
        pd->add_option("--omega0-max", w_hi, "upper omega0");
        pd->add_option("--xi-min", pxi_lo, "lower xi");
        pd->add_option("--xi-max", pxi_hi, "upper xi");
        pd->add_option("--resolution", resolution, "grid points per axis");

        // oracle / compare
        OracleGrid grid;
        double t_final = 20.0;
        int stride = 1;
        double cmp_x_hi = 15.0;
        CLI::App* orc = app.add_subcommand("oracle", "PDE time stepper");
        add_model_opts(orc);
        seed(cfg, "t-final", t_final);
        seed(cfg, "x-max-grid", grid.x_max);
        seed(cfg, "nx", grid.nx);
        seed(cfg, "dt", grid.dt);
        seed(cfg, "stride", stride);
        auto add_grid_opts = [&](CLI::App* sub) {
            sub->add_option("--t-final", t_final, "integration time");
            sub->add_option("--x-max-grid", grid.x_max, "domain length");
            sub->add_option("--nx", grid.nx, "grid points");
            sub->add_option("--dt", grid.dt, "time step");
            sub->add_option("--stride", stride, "output every k-th point");
        };
        add_grid_opts(orc);

        CLI::App* cmp =
            app.add_subcommand("compare", "oracle vs exact evaluator");
        add_model_opts(cmp);
        add_grid_opts(cmp);
        seed(cfg, "x-hi", cmp_x_hi);
        cmp->add_option("--x-hi", cmp_x_hi, "compare on [0, x-hi]");

        app.parse(argc, argv);
        model.resolve();

        std::ofstream file;
        std::ostream& os = *open_output(output_path, file);

        if (roots->parsed()) return cmd_roots(model, omega0, harmonic, os);
        if (dnm->parsed()) return cmd_dnmap(model, omega0, os);
        if (ev->parsed()) {
            std::vector<double> ts = linspace(t_lo, t_hi, t_count);
            std::vector<double> xs;
            if (!xi_list.empty()) {
                std::vector<CsvRow> rows;
                for (double t : ts) {
                    for (double xi : xi_list) {
                        rows.push_back(
                            eval_row(model, omega0, xi * t, t, method));
                    }
                }
                write_csv(os, rows);
                return 0;
            }
            xs = linspace(x_lo, x_hi, x_count);
            return cmd_evaluate(model, omega0, method, xs, ts, os);
        }
        if (pd->parsed()) {
            return cmd_phase_diagram(model, w_lo, w_hi, pxi_lo, pxi_hi,
                                     resolution, os);
        }
        if (orc->parsed()) {
            return cmd_oracle(model, omega0, t_final, grid, stride, os);
        }
        if (cmp->parsed()) {
            return cmd_compare(model, omega0, t_final, grid, cmp_x_hi,
                               stride, os);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return CLI::App{}.exit(e);
    } catch (const UncoveredFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoUniqueRadiatingRoot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
