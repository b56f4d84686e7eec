#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <pinchext/disc.hpp>
#include <pinchext/extension.hpp>
#include <pinchext/types.hpp>

namespace pinchext::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sectioned key = value text. Keys may repeat (curve, probe); '#' and ';'
// start comments.
class IniFile {
public:
    static IniFile parse(const std::string& text, const std::string& origin);
    static IniFile load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    // Last value of a key, or nullopt.
    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::vector<std::string> all(const std::string& section, const std::string& key) const;
    // Rejects sections/keys outside the given schema.
    void check_schema(const std::map<std::string, std::vector<std::string>>& schema) const;

    std::string origin;

private:
    struct Entry {
        std::string section, key, value;
        int line;
    };
    std::vector<Entry> entries_;
};

struct IndexRange {
    int first = 1;
    int last = 12;
};

struct FunctionSpec {
    std::string name = "remark1"; // remark1 | example1 | example2 | coefficients
    std::string file;
    double epsilon = 0.25;
    int n_trunc = 40;
    bool subtract_plus = false;
};

struct CurveSpec {
    std::string generator; // empty when only explicit curves are given
    IndexRange indices;
    cplx center{0.0, 0.0};   // value at 0 for the random generator
    std::vector<cvec> explicit_curves;
    cvec phi0{cplx{0.0, 0.0}};
};

struct AnalysisSpec {
    std::size_t grid = 256;
    int depth = 6;
    int n_max = 10;
    double holo_tol = 1e-8;
    double ladder_tol = 1e-7;
    int n_bound = 10;
    unsigned long long seed = 0;
    double ray_angle = 0.0;
    cvec probes;
    double probe_radius = 0.05;
};

struct GallerySpec {
    cplx lambda{0.5, 0.0};
    cplx z{0.1, 0.0};
    int growth_n0 = 1;
    double growth_c = 0.1;
    IndexRange growth_m{6, 12};
    IndexRange restriction_k{1, 8};
};

struct OutputSpec {
    std::string json; // file name inside --out; default <command>.json
    std::string csv;  // default <command>.csv
};

struct AnalysisConfig {
    FunctionSpec function;
    CurveSpec curves;
    AnalysisSpec analysis;
    GallerySpec gallery;
    OutputSpec output;
    std::string base_dir; // directory of the config file, for relative paths
};

AnalysisConfig parse_config(const IniFile& ini);
AnalysisConfig load_config(const std::string& path);

IndexRange parse_range(const std::string& s);
cvec parse_complex_list(const std::string& s);

RingFunction build_function(const AnalysisConfig& cfg);
std::vector<DiscFunction> build_curves(const AnalysisConfig& cfg);

} // namespace pinchext::cli
