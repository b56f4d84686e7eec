#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <pinchext/csv.hpp>
#include <pinchext/errors.hpp>
#include <pinchext/gallery.hpp>

namespace pinchext::cli {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    const auto p = s.find_first_of("#;");
    return p == std::string::npos ? s : s.substr(0, p);
}

template <class F>
auto convert(const IniFile& ini, const std::string& sec, const std::string& key, const std::string& v, F f) {
    try {
        return f(v);
    } catch (const std::exception& e) {
        throw ConfigError(ini.origin + ": [" + sec + "] " + key + ": " + e.what());
    }
}

double as_real(const std::string& s) { return io::parse_real(s); }

long long as_int(const std::string& s) {
    const double d = io::parse_real(s);
    if (d != std::floor(d) || std::abs(d) > 1e15) throw DomainError("not an integer: '" + s + "'");
    return static_cast<long long>(d);
}

bool as_bool(const std::string& s) {
    if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
    if (s == "false" || s == "no" || s == "0" || s == "off") return false;
    throw DomainError("not a boolean: '" + s + "'");
}

} // namespace

IniFile IniFile::parse(const std::string& text, const std::string& origin) {
    IniFile ini;
    ini.origin = origin;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(strip_comment(line));
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3)
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside of any section");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        ini.entries_.push_back({section, key, trim(t.substr(eq + 1)), lineno});
    }
    return ini;
}

IniFile IniFile::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
}

bool IniFile::has(const std::string& section, const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.section == section && e.key == key; });
}

std::optional<std::string> IniFile::get(const std::string& section, const std::string& key) const {
    std::optional<std::string> out;
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) out = e.value;
    return out;
}

std::vector<std::string> IniFile::all(const std::string& section, const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) out.push_back(e.value);
    return out;
}

void IniFile::check_schema(const std::map<std::string, std::vector<std::string>>& schema) const {
    for (const auto& e : entries_) {
        const auto it = schema.find(e.section);
        if (it == schema.end())
            throw ConfigError(origin + ":" + std::to_string(e.line) + ": unknown section [" + e.section + "]");
        if (std::find(it->second.begin(), it->second.end(), e.key) == it->second.end())
            throw ConfigError(origin + ":" + std::to_string(e.line) + ": unknown key '" + e.key + "' in [" +
                              e.section + "]");
    }
}

IndexRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    IndexRange r;
    try {
        if (dots == std::string::npos) {
            r.first = r.last = static_cast<int>(as_int(s));
        } else {
            r.first = static_cast<int>(as_int(s.substr(0, dots)));
            r.last = static_cast<int>(as_int(s.substr(dots + 2)));
        }
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (r.last < r.first) throw ConfigError("empty range '" + s + "'");
    return r;
}

cvec parse_complex_list(const std::string& s) {
    cvec out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("empty entry in list '" + s + "'");
        try {
            out.push_back(io::parse_complex(item));
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    return out;
}

AnalysisConfig parse_config(const IniFile& ini) {
    ini.check_schema({
        {"function", {"name", "file", "epsilon", "n_trunc", "subtract_plus"}},
        {"curves", {"generator", "indices", "center", "curve", "phi0"}},
        {"analysis",
         {"grid", "depth", "n_max", "holo_tol", "ladder_tol", "n_bound", "seed", "ray_angle", "probe",
          "probes_file", "probe_radius"}},
        {"gallery", {"point", "growth_n0", "growth_c", "growth_m", "restriction_k"}},
        {"output", {"json", "csv"}},
    });
    AnalysisConfig c;
    c.base_dir = fs::path(ini.origin).parent_path().string();
    auto value = [&](const std::string& sec, const std::string& key) { return ini.get(sec, key); };
    auto resolve = [&](const std::string& p) {
        const fs::path q(p);
        return q.is_absolute() || c.base_dir.empty() ? q.string() : (fs::path(c.base_dir) / q).string();
    };

    // [function]
    if (auto v = value("function", "name")) c.function.name = *v;
    if (auto v = value("function", "file")) c.function.file = resolve(*v);
    if (auto v = value("function", "epsilon")) c.function.epsilon = convert(ini, "function", "epsilon", *v, as_real);
    if (auto v = value("function", "n_trunc"))
        c.function.n_trunc = static_cast<int>(convert(ini, "function", "n_trunc", *v, as_int));
    if (auto v = value("function", "subtract_plus"))
        c.function.subtract_plus = convert(ini, "function", "subtract_plus", *v, as_bool);
    const std::vector<std::string> names{"remark1", "example1", "example2", "coefficients"};
    if (std::find(names.begin(), names.end(), c.function.name) == names.end())
        throw ConfigError(ini.origin + ": [function] name: unknown function '" + c.function.name + "'");
    if (!(c.function.epsilon > 0.0 && c.function.epsilon < 0.5))
        throw ConfigError(ini.origin + ": [function] epsilon must lie in (0, 0.5)");
    if (c.function.name == "coefficients") {
        if (c.function.file.empty()) throw ConfigError(ini.origin + ": [function] coefficients need 'file'");
        if (!fs::exists(c.function.file))
            throw ConfigError(ini.origin + ": [function] file '" + c.function.file + "' does not exist");
    }
    if (c.function.n_trunc < 1 || c.function.n_trunc > 150)
        throw ConfigError(ini.origin + ": [function] n_trunc must lie in 1..150");

    // [curves]
    if (auto v = value("curves", "generator")) c.curves.generator = *v;
    if (auto v = value("curves", "indices")) c.curves.indices = convert(ini, "curves", "indices", *v, parse_range);
    if (auto v = value("curves", "center"))
        c.curves.center = convert(ini, "curves", "center", *v, [](const std::string& s) { return io::parse_complex(s); });
    for (const auto& s : ini.all("curves", "curve"))
        c.curves.explicit_curves.push_back(convert(ini, "curves", "curve", s, parse_complex_list));
    if (auto v = value("curves", "phi0")) c.curves.phi0 = convert(ini, "curves", "phi0", *v, parse_complex_list);
    const std::vector<std::string> gens{"", "lambda_over_k", "two_thirds_power", "quadratic_plus_exp", "horizontal",
                                        "random"};
    if (std::find(gens.begin(), gens.end(), c.curves.generator) == gens.end())
        throw ConfigError(ini.origin + ": [curves] generator: unknown generator '" + c.curves.generator + "'");
    if (!c.curves.generator.empty() && c.curves.indices.first < 1)
        throw ConfigError(ini.origin + ": [curves] indices must start at 1 or later");

    // [analysis]
    auto& a = c.analysis;
    if (auto v = value("analysis", "grid")) a.grid = static_cast<std::size_t>(convert(ini, "analysis", "grid", *v, as_int));
    if (auto v = value("analysis", "depth")) a.depth = static_cast<int>(convert(ini, "analysis", "depth", *v, as_int));
    if (auto v = value("analysis", "n_max")) a.n_max = static_cast<int>(convert(ini, "analysis", "n_max", *v, as_int));
    if (auto v = value("analysis", "holo_tol")) a.holo_tol = convert(ini, "analysis", "holo_tol", *v, as_real);
    if (auto v = value("analysis", "ladder_tol")) a.ladder_tol = convert(ini, "analysis", "ladder_tol", *v, as_real);
    if (auto v = value("analysis", "n_bound")) a.n_bound = static_cast<int>(convert(ini, "analysis", "n_bound", *v, as_int));
    if (auto v = value("analysis", "seed")) {
        const long long s = convert(ini, "analysis", "seed", *v, as_int);
        if (s < 0) throw ConfigError(ini.origin + ": [analysis] seed must be nonnegative");
        a.seed = static_cast<unsigned long long>(s);
    }
    if (auto v = value("analysis", "ray_angle")) a.ray_angle = convert(ini, "analysis", "ray_angle", *v, as_real);
    for (const auto& s : ini.all("analysis", "probe")) {
        const cvec p = convert(ini, "analysis", "probe", s, parse_complex_list);
        a.probes.insert(a.probes.end(), p.begin(), p.end());
    }
    if (auto v = value("analysis", "probes_file")) {
        const std::string path = resolve(*v);
        std::ifstream f(path);
        if (!f) throw ConfigError(ini.origin + ": [analysis] cannot open probes_file '" + path + "'");
        const cvec p = convert(ini, "analysis", "probes_file", path, [&](const std::string&) { return io::read_probes_csv(f); });
        a.probes.insert(a.probes.end(), p.begin(), p.end());
    }
    if (auto v = value("analysis", "probe_radius")) a.probe_radius = convert(ini, "analysis", "probe_radius", *v, as_real);
    if (a.grid < 16 || !is_power_of_two(a.grid)) throw ConfigError(ini.origin + ": [analysis] grid must be a power of two >= 16");
    if (a.depth < 0 || a.depth > 24) throw ConfigError(ini.origin + ": [analysis] depth must lie in 0..24");
    if (a.n_max < 1 || a.n_max > 16) throw ConfigError(ini.origin + ": [analysis] n_max must lie in 1..16");
    if (!(a.holo_tol > 0.0) || !(a.ladder_tol > 0.0)) throw ConfigError(ini.origin + ": [analysis] tolerances must be positive");
    if (a.n_bound < 0) throw ConfigError(ini.origin + ": [analysis] n_bound must be nonnegative");
    if (!(a.probe_radius > 0.0)) throw ConfigError(ini.origin + ": [analysis] probe_radius must be positive");

    // [gallery]
    auto& g = c.gallery;
    if (auto v = value("gallery", "point")) {
        const cvec p = convert(ini, "gallery", "point", *v, parse_complex_list);
        if (p.size() != 2) throw ConfigError(ini.origin + ": [gallery] point needs 'lambda, z'");
        g.lambda = p[0];
        g.z = p[1];
    }
    if (auto v = value("gallery", "growth_n0")) g.growth_n0 = static_cast<int>(convert(ini, "gallery", "growth_n0", *v, as_int));
    if (auto v = value("gallery", "growth_c")) g.growth_c = convert(ini, "gallery", "growth_c", *v, as_real);
    if (auto v = value("gallery", "growth_m")) g.growth_m = convert(ini, "gallery", "growth_m", *v, parse_range);
    if (auto v = value("gallery", "restriction_k")) g.restriction_k = convert(ini, "gallery", "restriction_k", *v, parse_range);
    if (g.growth_m.first < 0 || g.growth_m.last > 1000) throw ConfigError(ini.origin + ": [gallery] growth_m must lie in 0..1000");
    if (g.restriction_k.first < 0) throw ConfigError(ini.origin + ": [gallery] restriction_k must be nonnegative");

    // [output]
    if (auto v = value("output", "json")) c.output.json = *v;
    if (auto v = value("output", "csv")) c.output.csv = *v;
    return c;
}

AnalysisConfig load_config(const std::string& path) { return parse_config(IniFile::load(path)); }

RingFunction build_function(const AnalysisConfig& cfg) {
    const auto& fn = cfg.function;
    RingFunction f;
    if (fn.name == "remark1") {
        f = gallery::remark1_ring(fn.epsilon);
    } else if (fn.name == "example1") {
        f = gallery::example1_ring(fn.epsilon, fn.n_trunc);
    } else if (fn.name == "example2") {
        f = gallery::example2_ring(fn.epsilon, std::min(fn.n_trunc, gallery::example2_default().max_l()));
    } else {
        std::ifstream in(fn.file);
        if (!in) throw ConfigError("cannot open coefficient file '" + fn.file + "'");
        LaurentPoly2 p = io::read_laurent_coefficients(in);
        if (p.coeffs().empty()) throw ConfigError("coefficient file '" + fn.file + "' has no coefficients");
        f = RingFunction::from_laurent(std::move(p), fn.epsilon, "coefficients");
    }
    if (fn.subtract_plus) f = subtract_plus_part(f, cfg.analysis.grid);
    return f;
}

std::vector<DiscFunction> build_curves(const AnalysisConfig& cfg) {
    const auto& cs = cfg.curves;
    std::vector<DiscFunction> out;
    std::mt19937_64 rng(cfg.analysis.seed);
    if (!cs.generator.empty()) {
        for (int k = cs.indices.first; k <= cs.indices.last; ++k) {
            if (cs.generator == "lambda_over_k") {
                out.push_back(DiscFunction::monomial(1.0 / k, 1));
            } else if (cs.generator == "two_thirds_power") {
                out.push_back(DiscFunction::monomial(std::pow(2.0 / 3.0, k), k));
            } else if (cs.generator == "quadratic_plus_exp") {
                cvec a(static_cast<std::size_t>(std::max(k, 2)) + 1, cplx{0.0, 0.0});
                a[2] += 1.0 / k;
                a[static_cast<std::size_t>(k)] += std::exp(-static_cast<double>(k));
                out.push_back(DiscFunction(std::move(a)));
            } else if (cs.generator == "horizontal") {
                out.push_back(DiscFunction::constant(gallery::Example2::z_k(k)));
            } else { // random
                std::uniform_real_distribution<double> u(0.0, 1.0);
                std::normal_distribution<double> n(0.0, 1.0);
                const double room = 0.95 - std::abs(cs.center);
                if (!(room > 0.0)) throw ConfigError("[curves] center must satisfy |center| < 0.95");
                cvec a(5);
                a[0] = cs.center;
                double mass = 0.0;
                for (std::size_t j = 1; j < a.size(); ++j) {
                    a[j] = {n(rng), n(rng)};
                    mass += std::abs(a[j]);
                }
                const double target = (0.2 + 0.8 * u(rng)) * room;
                for (std::size_t j = 1; j < a.size(); ++j) a[j] *= target / mass;
                out.push_back(DiscFunction(std::move(a)));
            }
        }
    }
    for (const auto& c : cs.explicit_curves) out.emplace_back(c);
    return out;
}

} // namespace pinchext::cli
