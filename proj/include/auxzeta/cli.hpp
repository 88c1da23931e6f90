#pragma once

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "auxzeta/calibrate.hpp"
#include "auxzeta/catalog_io.hpp"
#include "auxzeta/config.hpp"
#include "auxzeta/critical_line.hpp"
#include "auxzeta/periodic.hpp"
#include "auxzeta/rzeta.hpp"
#include "auxzeta/verify.hpp"
#include "auxzeta/version.hpp"
#include "auxzeta/xray.hpp"
#include "auxzeta/zeros.hpp"
#include "auxzeta/zeta.hpp"

namespace auxzeta {

// exit codes: 0 pass, 1 check failed, 2 regime, 3 scan failure, 4 missing input
enum ExitCode { kOk = 0, kCheckFailed = 1, kRegime = 2, kScanFailure = 3, kMissingInput = 4 };

// Accepts "4+110i", "-5+52.3i", "0.5-3i", "2", "1.5i", "3,4".
inline cplx parse_complex(std::string text) {
    for (auto& ch : text)
        if (ch == 'I') ch = 'i';
    const auto comma = text.find(',');
    if (comma != std::string::npos)
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    if (text.find('i') == std::string::npos) return {std::stod(text), 0.0};
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string im) {
        im.erase(im.find('i'), 1);
        if (im.empty() || im == "+") return 1.0;
        if (im == "-") return -1.0;
        return std::stod(im);
    };
    if (split == std::string::npos) return {0.0, imag_part(text)};
    return {std::stod(text.substr(0, split)), imag_part(text.substr(split))};
}

namespace detail {

inline std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

inline std::string format_complex(cplx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", v.real(), v.imag() < 0 ? '-' : '+',
                  std::abs(v.imag()));
    return buf;
}

inline int fail_json(std::ostream& err, int code, const std::string& msg) {
    err << nlohmann::json{{"error", msg}, {"code", code}}.dump() << "\n";
    return code;
}

struct EvalOut {
    cplx value;
    std::string method;
    double error;
};

inline EvalOut eval_function(const std::string& fn, cplx s, const RunConfig& cfg) {
    if (fn == "R") {
        auto r = rzeta_eval(s, cfg.quad_target);
        const char* names[] = {"quadrature", "mainsum", "asymptotic"};
        return {r.value, names[(int)r.method], r.abs_error};
    }
    if (fn == "F") return {big_f(s, cfg.quad_target), "quadrature", cfg.quad_target};
    if (fn == "J") {
        const cplx lj = log_j(s);
        const double rel = cfg.constants.u_bound_A * std::pow(s.imag(), -1.0 / 21.0);
        return {std::exp(lj), "asymptotic", rel * std::abs(std::exp(lj))};
    }
    if (fn == "zeta") return {zeta_em(s), "euler-maclaurin", 1e-12};
    if (fn == "chi") return {chi(s), "log-gamma", 1e-12};
    if (fn == "theta") return {cplx(theta(s.real()), 0.0), "log-gamma", 1e-12};
    if (fn == "Z") return {cplx(z_function(s.real()), 0.0), "riemann-siegel", 1e-9};
    if (fn == "per") return {cplx(per(s.real()), 0.0), "fourier-series", PerSeries{}.tail_bound()};
    throw missing_input_error("eval: unknown function " + fn +
                              " (expected R, F, J, zeta, chi, theta, Z, per)");
}

inline ZeroCatalog load_catalog_or_die(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw missing_input_error("catalog not found: " + path + " (run `auxzeta scan` first)");
    return read_catalog(path);
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerics for Riemann's auxiliary function and its zero statistics"};
    app.set_version_flag("--version", std::string(kVersion));

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "fitted-constants file");
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--threads", cfg.threads, "worker count (0 = hardware)");
    app.add_option("--t0", cfg.t0, "lower integration limit for verification runs");

    // --- eval ---------------------------------------------------------------
    auto* cmd_eval = app.add_subcommand("eval", "evaluate one of R, F, J, zeta, chi, theta, Z, per");
    std::string eval_fn, eval_s;
    cmd_eval->add_option("function", eval_fn)->required();
    cmd_eval->add_option("s", eval_s)->required();

    // --- scan ---------------------------------------------------------------
    auto* cmd_scan = app.add_subcommand("scan", "catalog the zeros of R up to height T");
    double scan_T = 100.0;
    std::string scan_out = "catalog.csv";
    std::string scan_window;
    cmd_scan->add_option("--T", scan_T)->required();
    cmd_scan->add_option("--out-file", scan_out, "CSV path (JSON sidecar written next to it)");
    cmd_scan->add_option("--window", scan_window, "beta window lo,hi (default from T)");

    // --- verify -------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run one verification report");
    std::string check_name, vrect, vsigmas, vcatalog = "catalog.csv", va, vb;
    double vsigma = 4.0, vT = 300.0, vR_disc = 10.0, vsigma_prime = 0.0;
    int vsamples = 100;
    cmd_verify->add_option("check", check_name)->required();
    cmd_verify->add_option("--rect", vrect, "sigma_min,sigma_max,t_min,t_max");
    cmd_verify->add_option("--sigma", vsigma);
    cmd_verify->add_option("--sigmas", vsigmas, "comma list");
    cmd_verify->add_option("--sigma-prime", vsigma_prime);
    cmd_verify->add_option("--T", vT);
    cmd_verify->add_option("--catalog", vcatalog);
    cmd_verify->add_option("--samples", vsamples);
    cmd_verify->add_option("--a", va);
    cmd_verify->add_option("--b", vb);
    cmd_verify->add_option("--R-disc", vR_disc);

    // --- xray ---------------------------------------------------------------
    auto* cmd_xray = app.add_subcommand("xray", "emit Re/Im zero-curve plot as SVG + CSV");
    std::string xfn = "F", xwindow = "-40,40,-40,40", xout = "xray";
    int xres = 400;
    cmd_xray->add_option("--function", xfn, "R, F or zeta");
    cmd_xray->add_option("--window", xwindow, "x0,x1,y0,y1");
    cmd_xray->add_option("--resolution", xres);
    cmd_xray->add_option("--out-prefix", xout);

    // --- calibrate ----------------------------------------------------------
    auto* cmd_cal = app.add_subcommand("calibrate", "fit the existential constants and pin them");
    std::string cal_catalog = "catalog.csv";
    double cal_T = 200.0;
    cmd_cal->add_option("--catalog", cal_catalog);
    cmd_cal->add_option("--T", cal_T);

    std::vector<const char*> argv;
    argv.push_back("auxzeta");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        return detail::fail_json(err, kMissingInput, e.what());
    }

    if (!config_path.empty()) cfg.constants_path = config_path;
    cfg.constants = load_constants(cfg.constants_path);
    std::filesystem::create_directories(cfg.out_dir);

    try {
        cfg.validate();
        if (*cmd_eval) {
            const cplx s = parse_complex(eval_s);
            auto r = detail::eval_function(eval_fn, s, cfg);
            out << eval_fn << "(" << eval_s << ") = " << detail::format_complex(r.value)
                << "  method=" << r.method << "  abs_error<=" << r.error << "\n";
            return kOk;
        }

        if (*cmd_scan) {
            if (scan_T > kQuadratureTCap)
                throw regime_error("scan: T beyond the quadrature envelope (500)");
            const std::string path = (std::filesystem::path(cfg.out_dir) / scan_out).string();
            auto window = scan_window.empty()
                              ? default_beta_window(scan_T)
                              : std::pair<double, double>{detail::parse_list(scan_window)[0],
                                                          detail::parse_list(scan_window)[1]};
            ZeroCatalog cat;
            ScanOptions opts;
            opts.threads = cfg.worker_count();
            if (std::filesystem::exists(path)) {
                cat = read_catalog(path);
                if (cat.t_frontier < scan_T) {
                    // extend from the stored frontier; also widen the window
                    opts.t_floor = cat.t_frontier;
                    ZeroCatalog ext = scan_catalog(scan_T, window, opts);
                    if (window.first < cat.beta_window.first - 1e-12) {
                        ScanOptions side = opts;
                        side.t_floor = cat.t_floor;
                        ZeroCatalog slice =
                            scan_catalog(cat.t_frontier, {window.first, cat.beta_window.first}, side);
                        for (auto& r : slice.records) ext.records.push_back(r);
                    }
                    for (auto& r : ext.records) cat.records.push_back(r);
                    std::sort(cat.records.begin(), cat.records.end(),
                              [](const ZeroRecord& x, const ZeroRecord& y) { return x.gamma < y.gamma; });
                    cat.t_frontier = scan_T;
                    cat.beta_window = window;
                    write_catalog(cat, path);
                }
            } else {
                cat = scan_catalog(scan_T, window, opts);
                write_catalog(cat, path);
            }
            long total = 0;
            for (const auto& r : cat.records) total += r.multiplicity;
            out << "catalog: " << cat.records.size() << " records, winding total " << total
                << ", frontier " << cat.t_frontier << ", window [" << cat.beta_window.first << ", "
                << cat.beta_window.second << "] -> " << path << "\n";
            return kOk;
        }

        if (*cmd_verify) {
            Report rep;
            const auto& fc = cfg.constants;
            if (check_name == "littlewood") {
                auto nums = detail::parse_list(vrect);
                if (nums.size() != 4) throw missing_input_error("littlewood: need --rect a,b,c,d");
                auto cat = detail::load_catalog_or_die(vcatalog);
                rep = littlewood_closure({nums[0], nums[1], nums[2], nums[3]}, Target::R, cat);
            } else if (check_name == "right-excess") {
                rep = check_right_excess(vsigma, vT, detail::load_catalog_or_die(vcatalog),
                                         fc.kappa1, cfg.t0);
            } else if (check_name == "left-excess") {
                rep = check_left_excess(vsigma, vT, detail::load_catalog_or_die(vcatalog),
                                        fc.kappa2, cfg.t0);
            } else if (check_name == "sigma-decay") {
                auto sig = vsigmas.empty() ? std::vector<double>{4, 5, 6, 7}
                                           : detail::parse_list(vsigmas);
                rep = check_sigma_decay(sig, vT, fc.sigma_decay_C, cfg.t0);
            } else if (check_name == "backlund") {
                rep = backlund_bound_check(Target::R, parse_complex(va), parse_complex(vb),
                                           vR_disc, detail::load_catalog_or_die(vcatalog));
            } else if (check_name == "jensen-meansquare") {
                rep = jensen_meansquare_check(vsigma_prime, vT, cfg.t0);
            } else if (check_name == "per-mean") {
                rep = per_integral_check(vT, fc.kappa3);
            } else if (check_name == "eta-mean") {
                rep = littlemean_check(vT, fc.kappa4);
            } else if (check_name == "j-mean") {
                rep = mean_j_check(vT, fc.kappa5);
            } else if (check_name == "comb-decomposition") {
                rep = comb_decomposition_check(vsigma, vT, detail::load_catalog_or_die(vcatalog),
                                               fc.kappa6, cfg.t0);
            } else if (check_name == "comb-mean-left") {
                rep = comb_mean_left_check(vT, detail::load_catalog_or_die(vcatalog), fc.kappa7,
                                           cfg.t0);
            } else if (check_name == "gamma-mean-left") {
                rep = gamma_mean_left_check(vsigma, vT, fc.kappa8, cfg.t0);
            } else if (check_name == "gamma-mean") {
                // O*(3 sqrt3/16) bound over seeded random (sigma, T) draws
                std::mt19937 rng(20260810);
                std::uniform_real_distribution<double> us(-30.0, 10.0), uT(2.5, 100.0);
                double worst = 0.0;
                std::pair<double, double> worst_at{0, 0};
                for (int k = 0; k < vsamples; ++k) {
                    const double sig = us(rng), T = uT(rng);
                    auto r = gamma_mean_check(sig, 2.0, T);
                    if (r.residual > worst) {
                        worst = r.residual;
                        worst_at = {sig, T};
                    }
                }
                rep.check_name = "gamma-mean";
                rep.inputs = {{"samples", vsamples}, {"worst_sigma", worst_at.first},
                              {"worst_T", worst_at.second}};
                rep.lhs = worst;
                rep.rhs = 3.0 * std::sqrt(3.0) / 16.0;
                rep.residual = worst;
                rep.normalizer = rep.rhs;
                rep.pass = worst <= rep.rhs;
            } else if (check_name == "density") {
                auto cat = detail::load_catalog_or_die(vcatalog);
                const auto integral =
                    log_modulus_line_integral(LineTarget::R, 0.5, cfg.t0, vT, &cat);
                auto d = density_check(cat, vT, integral.q.value);
                rep.check_name = "left-density";
                rep.inputs = {{"T", vT}, {"t0", cfg.t0}};
                rep.lhs = d.lhs;
                rep.rhs = d.rhs;
                rep.residual = std::max(0.0, -d.slack);
                rep.normalizer = 1.0;
                rep.fitted_constants = {{"gain_at_opt", d.gain_at_opt}};
                rep.pass = d.holds;
            } else if (check_name == "critical-line") {
                auto cat = detail::load_catalog_or_die(vcatalog);
                auto cc = critical_line_counts(cat, cfg.t0, vT);
                rep.check_name = "critical-line";
                rep.inputs = {{"t0", cfg.t0}, {"T", vT}};
                rep.lhs = (double)cc.z_sign_changes;
                rep.rhs = (double)(cc.cos_zeros + cc.r_zeros_on_line);
                rep.residual = std::abs(rep.lhs - rep.rhs);
                rep.normalizer = 1.0;
                rep.pass = cc.within_one;
            } else {
                throw missing_input_error("verify: unknown check " + check_name);
            }
            const std::string rp =
                (std::filesystem::path(cfg.out_dir) / ("report_" + rep.check_name + ".json")).string();
            std::ofstream rf(rp, std::ios::binary);
            rf << rep.to_json().dump(2) << "\n";
            out << rep.check_name << ": " << (rep.pass ? "pass" : "FAIL") << "  residual="
                << rep.residual << " (report " << rp << ")\n";
            return rep.pass ? kOk : kCheckFailed;
        }

        if (*cmd_xray) {
            auto nums = detail::parse_list(xwindow);
            if (nums.size() != 4) throw missing_input_error("xray: need --window x0,x1,y0,y1");
            Window w{nums[0], nums[1], nums[2], nums[3]};
            std::function<cplx(cplx)> f;
            if (xfn == "R") f = [&](cplx s) { return rzeta_eval(s, 1e-10).value; };
            else if (xfn == "F") f = [&](cplx s) { return big_f(s, 1e-10); };
            else if (xfn == "zeta") f = [&](cplx s) { return zeta_em(s); };
            else throw missing_input_error("xray: function must be R, F or zeta");
            Xray x = compute_xray(f, w, xres, cfg.worker_count());
            const auto prefix = (std::filesystem::path(cfg.out_dir) / xout).string();
            write_xray_svg(x, prefix + ".svg");
            write_xray_csv(x, prefix + ".csv");
            out << "xray: " << x.re_curves.size() << " re-segments, " << x.im_curves.size()
                << " im-segments, " << x.warnings << " warnings -> " << prefix << ".svg\n";
            return kOk;
        }

        if (*cmd_cal) {
            ZeroCatalog cat;
            if (std::filesystem::exists(cal_catalog)) cat = read_catalog(cal_catalog);
            else cat = scan_catalog(cal_T, default_beta_window(cal_T));
            FittedConstants fitted = calibrate(cat, cal_T);
            save_constants(fitted, cfg.constants_path, "catalog frontier " +
                                                           std::to_string(cat.t_frontier));
            out << "calibrated constants written to " << cfg.constants_path << "\n";
            return kOk;
        }

        out << app.help();
        return kOk;
    } catch (const regime_error& e) {
        return detail::fail_json(err, kRegime, e.what());
    } catch (const near_pole_error& e) {
        return detail::fail_json(err, kRegime, e.what());
    } catch (const pole_error& e) {
        return detail::fail_json(err, kRegime, e.what());
    } catch (const missing_input_error& e) {
        return detail::fail_json(err, kMissingInput, e.what());
    } catch (const scan_error& e) {
        return detail::fail_json(err, kScanFailure, e.what());
    } catch (const std::exception& e) {
        return detail::fail_json(err, kCheckFailed, e.what());
    }
}

}  // namespace auxzeta
