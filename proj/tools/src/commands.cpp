#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <pinchext/csv.hpp>
#include <pinchext/errors.hpp>
#include <pinchext/extension.hpp>
#include <pinchext/families.hpp>
#include <pinchext/gallery.hpp>
#include <pinchext/parallel.hpp>
#include <pinchext/report.hpp>

namespace pinchext::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json function_json(const AnalysisConfig& cfg) {
    json j = {{"name", cfg.function.name}, {"epsilon", cfg.function.epsilon}};
    if (cfg.function.name == "example1" || cfg.function.name == "example2") j["n_trunc"] = cfg.function.n_trunc;
    if (cfg.function.subtract_plus) j["subtract_plus"] = true;
    return j;
}

json taylor_json(const DiscFunction& phi) {
    json a = json::array();
    for (const auto& c : phi.coeffs()) a.push_back(io::to_json(c));
    return a;
}

// Generator index of curve i, or null for explicit curves.
json curve_label(const AnalysisConfig& cfg, std::size_t i) {
    const auto& cs = cfg.curves;
    if (cs.generator.empty()) return nullptr;
    const auto n = static_cast<std::size_t>(cs.indices.last - cs.indices.first + 1);
    if (i < n) return cs.indices.first + static_cast<int>(i);
    return nullptr;
}

std::vector<DiscFunction> require_curves(const AnalysisConfig& cfg, std::size_t minimum) {
    std::vector<DiscFunction> curves = build_curves(cfg);
    if (curves.empty()) throw ConfigError("no curves configured ([curves] generator or curve)");
    if (curves.size() < minimum)
        throw ConfigError("this command needs at least " + std::to_string(minimum) + " curves, got " +
                          std::to_string(curves.size()));
    return curves;
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

CommandResult cmd_test(const AnalysisConfig& cfg) {
    const RingFunction f = build_function(cfg);
    const std::vector<DiscFunction> curves = require_curves(cfg, 1);
    ExtensionOptions opts;
    opts.grid = cfg.analysis.grid;
    opts.holo_tolerance = cfg.analysis.holo_tol;
    std::vector<ExtensionVerdict> verdicts(curves.size());
    parallel_for(curves.size(), default_thread_count(),
                 [&](std::size_t i) { verdicts[i] = extension_test(f, curves[i], cfg.analysis.n_max, opts); });

    CommandResult r;
    json rows = json::array();
    int counts[3] = {0, 0, 0};
    std::ostringstream csv;
    csv << "index,kind,residual,degree\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& v = verdicts[i];
        ++counts[static_cast<int>(v.kind)];
        rows.push_back({{"index", i}, {"label", curve_label(cfg, i)}, {"taylor", taylor_json(curves[i])},
                        {"verdict", io::to_json(v)}});
        csv << i << "," << to_string(v.kind) << "," << num(v.residual) << "," << v.part.degree() << "\n";
    }
    r.report = {{"command", "test"},
                {"function", function_json(cfg)},
                {"n_max", cfg.analysis.n_max},
                {"grid", cfg.analysis.grid},
                {"curves", rows},
                {"summary", {{"holomorphic", counts[0]}, {"meromorphic", counts[1]}, {"not_extendable", counts[2]}}}};
    r.csv = csv.str();
    r.code = counts[2] > 0 ? exit_negative : exit_ok;
    return r;
}

CommandResult cmd_ladder(const AnalysisConfig& cfg) {
    const RingFunction f = build_function(cfg);
    const std::vector<DiscFunction> curves = require_curves(cfg, 3);
    LadderOptions lo;
    lo.grid = cfg.analysis.grid;
    lo.ladder_tol = cfg.analysis.ladder_tol;
    lo.threads = default_thread_count();
    const CoefficientLadder L = coefficient_ladder(f, curves, cfg.analysis.depth, cfg.analysis.n_max, lo);
    const PinchDescriptor d = pinch_estimate(L);
    const auto violations = verify_coefficient_bounds(L);
    std::vector<double> radii;
    for (int i = 1; i <= 20; ++i) radii.push_back(i / 20.0);
    const auto rows = ray_profile(L, cfg.analysis.ray_angle, radii);

    std::ostringstream csv;
    io::write_ray_profile_csv(csv, rows);
    CommandResult r;
    r.report = {{"command", "ladder"},
                {"function", function_json(cfg)},
                {"depth", cfg.analysis.depth},
                {"n_max", cfg.analysis.n_max},
                {"curve_count", curves.size()},
                {"ladder", io::to_json(L)},
                {"pinch", io::to_json(d)},
                {"bound_violations", io::to_json(violations)},
                {"ray_angle", cfg.analysis.ray_angle}};
    r.csv = csv.str();
    r.extra_csv = r.csv;
    return r;
}

CommandResult cmd_validate(const AnalysisConfig& cfg) {
    const std::vector<DiscFunction> curves = require_curves(cfg, 3);
    const DiscFunction phi0(cfg.curves.phi0);
    const TestSequenceReport seq = validate_test_sequence(curves, phi0, cfg.analysis.n_bound);
    const TestFamilyReport fam = validate_test_family(curves, cfg.analysis.n_bound, cfg.function.epsilon);
    cvec probes = cfg.analysis.probes;
    if (probes.empty()) probes = {cplx{0.0, 0.0}, cplx{0.5, 0.0}};
    const GeneralPositionReport gp = general_position_check(curves, phi0, probes, cfg.analysis.probe_radius);

    std::ostringstream csv;
    csv << "index,winding\n";
    for (const auto& c : seq.curves) csv << c.index << "," << (c.winding ? std::to_string(*c.winding) : "") << "\n";
    CommandResult r;
    r.report = {{"command", "validate"},
                {"n_bound", cfg.analysis.n_bound},
                {"epsilon", cfg.function.epsilon},
                {"phi0", taylor_json(phi0)},
                {"curve_count", curves.size()},
                {"test_sequence", io::to_json(seq)},
                {"test_family", io::to_json(fam)},
                {"general_position", io::to_json(gp)},
                {"is_test", seq.is_test}};
    r.csv = csv.str();
    r.code = seq.is_test ? exit_ok : exit_negative;
    return r;
}

CommandResult cmd_gallery(const AnalysisConfig& cfg) {
    const auto& g = cfg.gallery;
    const std::string& name = cfg.function.name;
    CommandResult r;
    std::ostringstream csv;
    json body;
    if (name == "remark1") {
        json along = json::array();
        csv << "k,re,im\n";
        for (int k = std::max(1, g.restriction_k.first); k <= g.restriction_k.last; ++k) {
            // f along lambda/k sampled on the unit circle; constant e^{1/k}.
            const CircleFunction F = CircleFunction::sample(
                [&](cplx l) { return gallery::remark1_eval(l, l / static_cast<double>(k)); }, 1.0, cfg.analysis.grid);
            const cplx v = F.coeff(0);
            double variation = 0.0;
            for (const auto& s : F.samples()) variation = std::max(variation, std::abs(s - v));
            along.push_back({{"k", k}, {"value", io::to_json(v)}, {"variation", variation}});
            csv << k << "," << num(v.real()) << "," << num(v.imag()) << "\n";
        }
        body = {{"value_at_point", io::to_json(gallery::remark1_eval(g.lambda, g.z))}, {"along_lambda_over_k", along}};
    } else if (name == "example1") {
        const auto v = gallery::example1_eval_detailed(g.lambda, g.z, cfg.function.n_trunc);
        std::vector<int> ms;
        for (int m = g.growth_m.first; m <= g.growth_m.last; ++m) ms.push_back(m);
        const auto probe = gallery::example1_growth_probe(g.growth_n0, g.growth_c, ms, cfg.function.n_trunc);
        csv << "m,lambda,abs_f,log_abs_f\n";
        for (const auto& row : probe.rows)
            csv << row.m << "," << num(row.lambda) << "," << num(row.abs_f) << "," << num(row.log_abs_f) << "\n";
        body = {{"value_at_point",
                 {{"value", io::to_json(v.value)}, {"log_abs", v.log_abs}, {"tail_bound", v.tail_bound},
                  {"terms", v.terms}}},
                {"growth", io::to_json(probe)}};
    } else if (name == "example2") {
        json rows = json::array(), orders = json::array();
        csv << "k,method,pole_order\n";
        for (int k = g.restriction_k.first; k <= g.restriction_k.last; ++k) {
            const CircleFunction F = gallery::example2_restriction(k, cfg.analysis.grid);
            const RationalityVerdict v = detect_rational(hardy_project_minus(F), cfg.analysis.n_max);
            int order = -1;
            if (v.rational()) order = v.part.degree();
            rows.push_back({{"k", k}, {"z_k", gallery::Example2::z_k(k)}, {"detection", io::to_json(v)}});
            orders.push_back(order >= 0 ? json(order) : json(nullptr));
            csv << k << "," << v.method << "," << (order >= 0 ? std::to_string(order) : "") << "\n";
        }
        body = {{"value_at_point", io::to_json(gallery::example2_eval(g.lambda, g.z,
                                                                     std::min(cfg.function.n_trunc, 40)))},
                {"restrictions", rows},
                {"pole_orders", orders}};
    } else {
        throw ConfigError("gallery needs [function] name = remark1, example1 or example2");
    }
    r.report = {{"command", "gallery"},
                {"function", function_json(cfg)},
                {"point", {io::to_json(g.lambda), io::to_json(g.z)}},
                {"result", body}};
    r.csv = csv.str();
    return r;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"meromorphic extension analysis along families of curves", "pinchext"};
    app.require_subcommand(1);
    std::string config_path, out_dir, format = "json";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"test", "extension test of f along each curve"},
        {"ladder", "coefficient ladder, pinch estimate and coefficient bounds"},
        {"validate", "test-sequence, test-family and general-position reports"},
        {"gallery", "evaluate the built-in examples"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "configuration file")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    }

    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? exit_ok : exit_usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const AnalysisConfig cfg = load_config(config_path);
        CommandResult r;
        if (command == "test")
            r = cmd_test(cfg);
        else if (command == "ladder")
            r = cmd_ladder(cfg);
        else if (command == "validate")
            r = cmd_validate(cfg);
        else
            r = cmd_gallery(cfg);

        const std::string text = format == "json" ? io::dump(r.report) : r.csv;
        if (out_dir.empty()) {
            out << text;
        } else {
            fs::create_directories(out_dir);
            const std::string json_name = cfg.output.json.empty() ? command + ".json" : cfg.output.json;
            const std::string csv_name = cfg.output.csv.empty() ? command + ".csv" : cfg.output.csv;
            const fs::path target = fs::path(out_dir) / (format == "json" ? json_name : csv_name);
            std::ofstream f(target);
            if (!f) throw ConfigError("cannot write '" + target.string() + "'");
            f << text;
            if (format == "json" && !r.extra_csv.empty()) {
                std::ofstream c(fs::path(out_dir) / csv_name);
                if (!c) throw ConfigError("cannot write '" + (fs::path(out_dir) / csv_name).string() + "'");
                c << r.extra_csv;
            }
        }
        return r.code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "numerical error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const fs::filesystem_error& e) {
        err << "io error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace pinchext::cli
