#include "logdiv/problem_io.hpp"

#include "logdiv/errors.hpp"
#include "logdiv/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace logdiv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw InputError("problem file: " + what); }

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
    return *it;
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rat as_rat(const json& j, const char* what) {
    return rat_from_string(as_string(j, what));
}

std::vector<Rat> as_point(const json& j) {
    if (!j.is_array()) bad("a point must be an array of rational strings");
    std::vector<Rat> p;
    for (const json& c : j) p.push_back(as_rat(c, "a coordinate"));
    return p;
}

ProblemSpec build_problem(const json& doc) {
    if (!doc.is_object()) bad("the top level must be an object");

    ProblemSpec spec;
    const json& jn = field(doc, "n");
    if (!jn.is_number_integer()) bad("\"n\" must be an integer");
    spec.n = jn.get<int>();

    const json& vars = field(doc, "variables");
    if (!vars.is_array() || vars.empty()) bad("\"variables\" must be a nonempty array");
    std::vector<std::string> names;
    for (const json& v : vars) names.push_back(as_string(v, "a variable name"));
    spec.ctx = Context(names);

    const json& divs = field(doc, "divisors");
    if (!divs.is_array() || divs.empty()) bad("\"divisors\" must be a nonempty array");
    for (const json& d : divs) {
        if (!d.is_object()) bad("each divisor must be an object");
        const std::string name = as_string(field(d, "name"), "a divisor name");
        const std::string text = as_string(field(d, "poly"), "a divisor polynomial");
        try {
            spec.divisors.push_back(
                {name, DivisorOnPn(spec.n, HomogPoly(parse_poly(text, spec.ctx)))});
        } catch (const MathError& e) {
            // a divisor violating the file invariants is bad input, not a
            // failure of some later computation
            bad("divisor " + name + ": " + e.what());
        }
    }

    if (const auto it = doc.find("decomposition"); it != doc.end()) {
        if (!it->is_array() || it->size() != 2) bad("\"decomposition\" must name two divisors");
        spec.decomposition = {as_string((*it)[0], "a decomposition name"),
                              as_string((*it)[1], "a decomposition name")};
    }
    if (const auto it = doc.find("total"); it != doc.end())
        spec.total = as_string(*it, "\"total\"");

    if (const auto it = doc.find("vector_field"); it != doc.end()) {
        if (!it->is_array()) bad("\"vector_field\" must be a matrix of rational strings");
        RatMat A(it->size(), it->empty() ? 0 : (*it)[0].size());
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& row = (*it)[i];
            if (!row.is_array() || row.size() != A.cols())
                bad("\"vector_field\" rows must have equal length");
            for (std::size_t j = 0; j < row.size(); ++j)
                A.at(i, j) = as_rat(row[j], "a matrix entry");
        }
        try {
            spec.field.emplace(spec.ctx, std::move(A));
        } catch (const MathError& e) {
            bad(std::string("vector_field: ") + e.what());
        }
    }

    if (const auto it = doc.find("singular_points"); it != doc.end()) {
        if (!it->is_object()) bad("\"singular_points\" must map names to point lists");
        for (const auto& [key, list] : it->items()) {
            if (!list.is_array()) bad("singular points of " + key + " must be an array");
            std::vector<std::vector<Rat>> pts;
            for (const json& p : list) pts.push_back(as_point(p));
            spec.singular_points.emplace(key, std::move(pts));
        }
    }

    if (const auto it = doc.find("options"); it != doc.end()) {
        if (!it->is_object()) bad("\"options\" must be an object");
        for (const auto& [key, value] : it->items()) {
            if (key == "chart") {
                if (!value.is_number_unsigned()) bad("options.chart must be a nonnegative integer");
                spec.options.chart = value.get<std::size_t>();
            } else if (key == "probes") {
                if (!value.is_boolean()) bad("options.probes must be a boolean");
                spec.options.probes = value.get<bool>();
            } else if (key == "allow_linear_change") {
                if (!value.is_boolean()) bad("options.allow_linear_change must be a boolean");
                spec.options.allow_linear_change = value.get<bool>();
            } else {
                bad("unknown option \"" + key + "\"");
            }
        }
    }

    validate_problem(spec);
    return spec;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json rat_json(const Rat& r) { return rat_to_string(r); }
ordered_json int_json(const Int& v) { return v.get_str(); }

ordered_json point_json(const std::vector<Rat>& p) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : p) arr.push_back(rat_json(c));
    return arr;
}

ordered_json entries_json(const std::vector<QuantityEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const QuantityEntry& e : entries) {
        ordered_json o;
        o["name"] = e.name;
        o["value"] = rat_json(e.value);
        o["route"] = e.route;
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json findings_json(const std::vector<std::string>& findings) {
    ordered_json arr = ordered_json::array();
    for (const std::string& f : findings) arr.push_back(f);
    return arr;
}

void entries_text(std::ostream& os, const std::vector<QuantityEntry>& entries) {
    if (entries.empty()) return;
    os << "intermediates:\n";
    for (const QuantityEntry& e : entries)
        os << "  " << e.name << " = " << rat_to_string(e.value) << "   (" << e.route << ")\n";
}

void findings_text(std::ostream& os, const std::vector<std::string>& findings) {
    if (findings.empty()) return;
    os << "findings:\n";
    for (const std::string& f : findings) os << "  - " << f << "\n";
}

} // namespace

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

ProblemSpec parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
    return build_problem(doc);
}

std::string report_json(const VerificationReport& rep) {
    ordered_json o;
    o["formula"] = rep.formula;
    o["lhs"] = rat_json(rep.lhs);
    o["lhs_route"] = rep.lhs_route;
    o["default_variant"] = rep.default_variant;
    o["default_pass"] = rep.default_pass();
    ordered_json vs = ordered_json::array();
    for (const VariantResult& v : rep.variants) {
        ordered_json vo;
        vo["name"] = v.name;
        vo["rhs"] = rat_json(v.rhs);
        vo["residual"] = rat_json(v.residual);
        vo["pass"] = v.pass;
        vs.push_back(std::move(vo));
    }
    o["variants"] = std::move(vs);
    o["intermediates"] = entries_json(rep.intermediates);
    o["findings"] = findings_json(rep.findings);
    return dump(o);
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "formula: " << rep.formula << "\n";
    os << "lhs = " << rat_to_string(rep.lhs) << "   (" << rep.lhs_route << ")\n";
    for (const VariantResult& v : rep.variants) {
        os << "variant " << v.name << ": rhs = " << rat_to_string(v.rhs)
           << ", residual = " << rat_to_string(v.residual) << " -> "
           << (v.pass ? "PASS" : "FAIL");
        if (v.name == rep.default_variant) os << "   [default]";
        os << "\n";
    }
    entries_text(os, rep.intermediates);
    findings_text(os, rep.findings);
    return os.str();
}

std::string milnor_json(const MilnorReport& rep, const std::string& divisor) {
    ordered_json o;
    o["divisor"] = divisor;
    o["total"] = int_json(rep.global.total);
    o["chart"] = rep.global.chart;
    if (rep.global.transform) {
        ordered_json m = ordered_json::array();
        for (const auto& row : *rep.global.transform) m.push_back(point_json(row));
        o["linear_change"] = std::move(m);
    } else {
        o["linear_change"] = nullptr;
    }
    ordered_json pts = ordered_json::array();
    for (const SingularPointCert& c : rep.points) {
        ordered_json p;
        p["point"] = point_json(c.point);
        p["chart"] = c.chart;
        p["mu"] = std::to_string(c.mu);
        pts.push_back(std::move(p));
    }
    o["points"] = std::move(pts);
    o["certified_complete"] = rep.certified_complete;
    return dump(o);
}

std::string milnor_text(const MilnorReport& rep, const std::string& divisor) {
    std::ostringstream os;
    os << "divisor " << divisor << ": total Milnor number " << rep.global.total.get_str()
       << " (chart " << rep.global.chart;
    if (rep.global.transform) os << ", after a unimodular coordinate change";
    os << ")\n";
    for (const SingularPointCert& c : rep.points)
        os << "  mu = " << c.mu << " at " << proj_to_string(ProjPoint{c.point}) << " (chart "
           << c.chart << ")\n";
    if (!rep.points.empty())
        os << (rep.certified_complete ? "the listed points account for the whole total\n"
                                      : "the listed points do NOT account for the whole total\n");
    return os.str();
}

std::string euler_json(const EulerComplement& e) {
    ordered_json o;
    o["chi_complement"] = int_json(e.value);
    o["ledger"] = entries_json(e.ledger);
    o["findings"] = findings_json(e.findings);
    return dump(o);
}

std::string euler_text(const EulerComplement& e) {
    std::ostringstream os;
    os << "chi(complement) = " << e.value.get_str() << "\n";
    entries_text(os, e.ledger);
    findings_text(os, e.findings);
    return os.str();
}

std::string error_json(const std::string& kind, const std::string& message) {
    ordered_json o;
    ordered_json err;
    err["kind"] = kind;
    err["message"] = message;
    o["error"] = std::move(err);
    return dump(o);
}

} // namespace logdiv
