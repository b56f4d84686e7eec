#include "pinchext/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pinchext/errors.hpp"

namespace pinchext::io {

json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("complex number must be a [re, im] pair");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json to_json(const RationalPart& rp) {
    json poles = json::array();
    for (const auto& p : rp.poles()) {
        json c = json::array();
        for (const auto& v : p.c) c.push_back(to_json(v));
        poles.push_back({{"a", to_json(p.a)}, {"m", p.m}, {"c", c}});
    }
    return {{"poles", poles}};
}

RationalPart rational_part_from_json(const json& j) {
    std::vector<Pole> poles;
    for (const auto& p : j.at("poles")) {
        Pole q;
        q.a = complex_from_json(p.at("a"));
        q.m = p.at("m").get<int>();
        for (const auto& c : p.at("c")) q.c.push_back(complex_from_json(c));
        poles.push_back(std::move(q));
    }
    return RationalPart(std::move(poles));
}

json to_json(const RationalityVerdict& v) {
    return {{"kind", v.rational() ? "rational" : "not-rational"},
            {"n_max", v.n_max},
            {"numeric_rank", v.numeric_rank},
            {"gap", v.gap},
            {"fit_residual", v.fit_residual},
            {"method", v.method},
            {"singular_values", v.singular_values},
            {"rational_part", to_json(v.part)}};
}

json to_json(const ExtensionVerdict& v) {
    json j = {{"kind", to_string(v.kind)},
              {"residual", v.residual},
              {"holo_tolerance", v.holo_tolerance},
              {"n_max", v.n_max},
              {"rational_part", to_json(v.part)}};
    if (v.kind != ExtensionKind::holomorphic) j["detection"] = to_json(v.detection);
    return j;
}

json to_json(const CoefficientLadder& L) {
    json zeros = json::array(), poles = json::array(), entries = json::array();
    for (const auto& a : L.zeros) zeros.push_back({{"a", to_json(a.a)}, {"order", a.order}});
    for (const auto& b : L.poles) poles.push_back({{"b", to_json(b.b)}, {"multiplicity", b.multiplicity}});
    for (const auto& e : L.entries) {
        json tail = json::array();
        for (const auto& t : e.tail) tail.push_back(to_json(t));
        entries.push_back({{"n", e.n},
                           {"principal", to_json(e.principal)},
                           {"tail", tail},
                           {"boundary_sup", e.boundary_sup},
                           {"corrected_sup", e.corrected_sup},
                           {"corrected_minus", e.corrected_minus},
                           {"curve_deviation", e.curve_deviation},
                           {"curve_bound", e.curve_bound},
                           {"curve_pole_count", e.curve_pole_count}});
    }
    return {{"epsilon", L.epsilon}, {"C", L.C},         {"C_prime", L.C_prime}, {"N", L.N},
            {"M", L.M},             {"n_max", L.n_max}, {"rho", L.rho},         {"zeros", zeros},
            {"pole_lines", poles},  {"entries", entries}};
}

json to_json(const PinchDescriptor& d) {
    json pinches = json::array(), lines = json::array();
    for (const auto& a : d.pinches) pinches.push_back({{"a", to_json(a.a)}, {"order", a.order}});
    for (const auto& b : d.pole_lines)
        lines.push_back({{"b", to_json(b.b)}, {"multiplicity", b.multiplicity}, {"removable", true}});
    return {{"pinches", pinches}, {"pole_lines", lines}, {"c", d.c}, {"pinches_in_core", d.pinches_in_core}};
}

json to_json(const std::vector<BoundViolation>& v) {
    json a = json::array();
    for (const auto& b : v) a.push_back({{"n", b.n}, {"lambda", to_json(b.lambda)}, {"lhs", b.lhs}, {"rhs", b.rhs}});
    return a;
}

json to_json(const TestSequenceReport& r) {
    json curves = json::array();
    for (const auto& c : r.curves) {
        json w = c.winding ? json(*c.winding) : json(nullptr);
        curves.push_back({{"index", c.index}, {"winding", w}, {"failure", c.failure}});
    }
    return {{"curves", curves},
            {"N", r.N},
            {"N_bound", r.N_bound},
            {"is_test", r.is_test},
            {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}};
}

json to_json(const TestFamilyReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"s", p.s},
                         {"t", p.t},
                         {"radius", p.radius ? json(*p.radius) : json(nullptr)},
                         {"winding", p.winding ? json(*p.winding) : json(nullptr)},
                         {"failure", p.failure}});
    return {{"pairs", pairs}, {"N_bound", r.N_bound}, {"all_witnessed", r.all_witnessed}};
}

json to_json(const GeneralPositionReport& r) {
    json probes = json::array(), triples = json::array();
    for (const auto& p : r.probes)
        probes.push_back({{"probe", to_json(p.probe)}, {"passes", p.passes}, {"avoiding", p.avoiding}});
    for (const auto& t : r.triples)
        triples.push_back({{"curves", {t.t1, t.t2, t.t3}}, {"lambda", to_json(t.lambda)}, {"z", to_json(t.z)}});
    return {{"probe_radius", r.probe_radius}, {"probes", probes}, {"triple_violations", triples}};
}

json to_json(const WindingProfile& p) {
    json alphas = json::array();
    for (const auto& a : p.alphas) alphas.push_back(to_json(a));
    return {{"alpha0", to_json(p.alpha0)},
            {"radius", p.radius},
            {"alphas", alphas},
            {"windings", p.windings},
            {"constant", p.constant}};
}

json to_json(const gallery::GrowthProbe& g) {
    json rows = json::array();
    for (const auto& r : g.rows)
        rows.push_back({{"m", r.m},
                        {"lambda", r.lambda},
                        {"abs_f", r.abs_f},
                        {"log_abs_f", r.log_abs_f},
                        {"ratios", r.ratios},
                        {"log_ratios", r.log_ratios}});
    return {{"n0", g.n0}, {"c", g.c}, {"n1", g.n1}, {"rows", rows}};
}

namespace {

std::string number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_flat(const json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void write(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
    case json::value_t::null:
        os << "null";
        break;
    case json::value_t::boolean:
        os << (j.get<bool>() ? "true" : "false");
        break;
    case json::value_t::number_integer:
        os << j.get<long long>();
        break;
    case json::value_t::number_unsigned:
        os << j.get<unsigned long long>();
        break;
    case json::value_t::number_float:
        os << number(j.get<double>());
        break;
    case json::value_t::string:
        os << j.dump();
        break;
    case json::value_t::array:
        if (j.empty()) {
            os << "[]";
        } else if (is_flat(j)) {
            os << "[";
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << ", ";
                first = false;
                write(os, e, indent);
            }
            os << "]";
        } else {
            os << "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << ",\n";
                first = false;
                os << pad;
                write(os, e, indent + 2);
            }
            os << "\n" << close << "]";
        }
        break;
    case json::value_t::object:
        if (j.empty()) {
            os << "{}";
        } else {
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << json(it.key()).dump() << ": ";
                write(os, it.value(), indent + 2);
            }
            os << "\n" << close << "}";
        }
        break;
    default:
        os << j.dump();
    }
}

} // namespace

std::string dump(const json& j) {
    std::ostringstream os;
    write(os, j, 0);
    os << "\n";
    return os.str();
}

} // namespace pinchext::io
