#include "pinchext/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "pinchext/errors.hpp"

namespace pinchext::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Parses a real prefix of s starting at pos; advances pos.
bool real_prefix(const std::string& s, std::size_t& pos, double& out) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return false;
    pos += static_cast<std::size_t>(end - begin);
    return true;
}

} // namespace

double parse_real(const std::string& raw) {
    const std::string s = trim(raw);
    std::size_t pos = 0;
    double v = 0.0;
    if (s.empty() || !real_prefix(s, pos, v) || pos != s.size())
        throw DomainError("not a real number: '" + raw + "'");
    return v;
}

cplx parse_complex(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw DomainError("empty complex literal");
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    std::size_t pos = 0;
    double a = 0.0;
    if (!real_prefix(s, pos, a)) throw DomainError("not a complex number: '" + raw + "'");
    if (pos == s.size()) return {a, 0.0};
    if (s[pos] == 'i' && pos + 1 == s.size()) return {0.0, a};
    if (s[pos] == '+' || s[pos] == '-') {
        const double sign = s[pos] == '-' ? -1.0 : 1.0;
        if (s.compare(pos + 1, std::string::npos, "i") == 0) return {a, sign};
        double b = 0.0;
        std::size_t p2 = pos;
        if (real_prefix(s, p2, b) && p2 + 1 == s.size() && s[p2] == 'i') return {a, b};
    }
    throw DomainError("not a complex number: '" + raw + "'");
}

cvec read_probes_csv(std::istream& is) {
    cvec out;
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line == "re,im") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DomainError("probe CSV: expected 're,im' in '" + line + "'");
        out.emplace_back(parse_real(line.substr(0, comma)), parse_real(line.substr(comma + 1)));
    }
    return out;
}

void write_probes_csv(std::ostream& os, const cvec& pts) {
    os << std::setprecision(17) << "re,im\n";
    for (const auto& p : pts) os << p.real() << "," << p.imag() << "\n";
}

void write_ray_profile_csv(std::ostream& os, const std::vector<RayProfileRow>& rows) {
    os << std::setprecision(17) << "n,r,abs_An\n";
    for (const auto& r : rows) os << r.n << "," << r.r << "," << r.abs_An << "\n";
}

LaurentPoly2 read_laurent_coefficients(std::istream& is) {
    std::map<std::pair<int, int>, cplx> coeffs;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string sn, sl, sre, sim, extra;
        if (!(ls >> sn >> sl >> sre)) throw DomainError("coefficient file line " + std::to_string(lineno) + ": expected 'n l re [im]'");
        ls >> sim;
        if (ls >> extra) throw DomainError("coefficient file line " + std::to_string(lineno) + ": too many fields");
        const double n = parse_real(sn), l = parse_real(sl);
        if (n != static_cast<int>(n) || l != static_cast<int>(l))
            throw DomainError("coefficient file line " + std::to_string(lineno) + ": degrees must be integers");
        const cplx v{parse_real(sre), sim.empty() ? 0.0 : parse_real(sim)};
        coeffs[{static_cast<int>(n), static_cast<int>(l)}] += v;
    }
    return LaurentPoly2(std::move(coeffs));
}

} // namespace pinchext::io
