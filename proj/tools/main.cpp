#include "logdiv/errors.hpp"
#include "logdiv/problem_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using logdiv::EulerComplement;
using logdiv::Int;
using logdiv::InputError;
using logdiv::MathError;
using logdiv::ProblemSpec;
using logdiv::Rat;
using logdiv::VerificationReport;
using ordered_json = nlohmann::ordered_json;

// exit-code contract: 0 success/pass, 2 input error, 3 mathematical
// precondition failure, 4 verification failure under the default convention
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;
constexpr int kExitVerdict = 4;

struct GlobalFlags {
    bool json = false;
    std::optional<std::size_t> chart;
    std::optional<bool> probes;
    bool linear_change = false;
};

void apply_overrides(ProblemSpec& spec, const GlobalFlags& g) {
    if (g.chart) spec.options.chart = g.chart;
    if (g.probes) spec.options.probes = *g.probes;
    if (g.linear_change) spec.options.allow_linear_change = true;
}

void emit_error(const GlobalFlags& g, const std::string& kind, const std::string& message) {
    if (g.json)
        std::cout << logdiv::error_json(kind, message);
    else
        std::cerr << "error [" << kind << "]: " << message << "\n";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

/// The degrees the smooth-crossings baseline is about: the decomposition
/// pair when one is declared, otherwise every divisor except a declared total.
std::vector<int> baseline_degrees(const ProblemSpec& spec) {
    std::vector<int> degrees;
    if (spec.decomposition) {
        degrees.push_back(divisor_by_name(spec, spec.decomposition->first).degree());
        degrees.push_back(divisor_by_name(spec, spec.decomposition->second).degree());
        return degrees;
    }
    for (const auto& nd : spec.divisors)
        if (!spec.total || nd.name != *spec.total) degrees.push_back(nd.D.degree());
    return degrees;
}

int cmd_milnor(const GlobalFlags& g, const std::string& file, const std::string& divisor) {
    ProblemSpec spec = logdiv::load_problem(file);
    apply_overrides(spec, g);
    const logdiv::DivisorOnPn& D = divisor_by_name(spec, divisor);
    std::vector<std::vector<Rat>> points;
    if (const auto it = spec.singular_points.find(divisor); it != spec.singular_points.end())
        points = it->second;
    const logdiv::MilnorReport rep = certify_points(D, points, spec.options.chart,
                                                    spec.options.allow_linear_change);
    std::cout << (g.json ? milnor_json(rep, divisor) : milnor_text(rep, divisor));
    return 0;
}

int cmd_euler(const GlobalFlags& g, const std::string& file) {
    ProblemSpec spec = logdiv::load_problem(file);
    apply_overrides(spec, g);
    const EulerComplement e = euler_complement(spec);
    std::cout << (g.json ? euler_json(e) : euler_text(e));
    return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& file, const std::string& formula) {
    ProblemSpec spec = logdiv::load_problem(file);
    apply_overrides(spec, g);
    VerificationReport rep;
    if (formula == "gauss-bonnet")
        rep = verify_gauss_bonnet(spec);
    else if (formula == "poincare-hopf")
        rep = verify_poincare_hopf(spec);
    else if (formula == "nsa")
        rep = logdiv::nsa_baseline(spec.n, baseline_degrees(spec));
    else if (formula == "corollary-pn")
        rep = corollary_pn_report(spec);
    else
        throw InputError("unknown formula: " + formula);
    std::cout << (g.json ? report_json(rep) : report_text(rep));
    return rep.default_pass() ? 0 : kExitVerdict;
}

int cmd_chow(const GlobalFlags& g, int n, const std::vector<int>& degrees) {
    const logdiv::ChowClass cls = logdiv::log_chern_class(n, degrees);
    const Rat top = integrate(cls);

    ordered_json o;
    o["n"] = n;
    o["degrees"] = degrees;
    ordered_json coeffs = ordered_json::array();
    for (int k = 0; k <= n; ++k) coeffs.push_back(logdiv::rat_to_string(cls[k]));
    o["log_chern_coefficients"] = std::move(coeffs);
    o["top_coefficient"] = logdiv::rat_to_string(top);

    std::ostringstream text;
    text << "c(log cotangent bundle) in Z[h]/(h^" << n + 1 << "):";
    for (int k = 0; k <= n; ++k) text << " " << logdiv::rat_to_string(cls[k]) << "*h^" << k;
    text << "\ntop coefficient [h^" << n << "] = " << logdiv::rat_to_string(top) << "\n";

    if (degrees.size() == 1) {
        const Rat alt = logdiv::twisted_top_chern(n, degrees[0]); // sum of (1-d)^i
        o["alternating_sum"] = logdiv::rat_to_string(alt);
        text << "alternating sum of (1-d)^i = " << logdiv::rat_to_string(alt)
             << " (equals (-1)^n times the top coefficient)\n";
    } else {
        const std::vector<Rat> shifted{Rat(degrees[0] - 1), Rat(degrees[1] - 1)};
        const Rat sigma_n = logdiv::complete_symmetric(n, shifted);
        Rat sigma_sum(0);
        for (int i = 0; i <= n; ++i) sigma_sum += logdiv::complete_symmetric(n - i, shifted);
        o["sigma_n"] = logdiv::rat_to_string(sigma_n);
        o["sigma_sum"] = logdiv::rat_to_string(sigma_sum);
        o["sigma_sum_matches"] = sigma_sum == sigma_n;
        text << "sigma_n(d1-1,d2-1) = " << logdiv::rat_to_string(sigma_n)
             << " (the top coefficient itself)\n";
        text << "sum of sigma_{n-i} = " << logdiv::rat_to_string(sigma_sum)
             << (sigma_sum == sigma_n ? " (agrees)" : " (differs from the top coefficient)")
             << "\n";
    }
    std::cout << (g.json ? dump(o) : text.str());
    return 0;
}

int cmd_oracle(const GlobalFlags& g, const std::vector<std::string>& weight_texts,
               const std::string& degree_text) {
    std::vector<Rat> weights;
    for (const std::string& w : weight_texts) weights.push_back(logdiv::rat_from_string(w));
    const Rat d = logdiv::rat_from_string(degree_text);
    const Rat mu = logdiv::milnor_orlik_oracle(weights, d);
    if (g.json) {
        ordered_json o;
        ordered_json ws = ordered_json::array();
        for (const Rat& w : weights) ws.push_back(logdiv::rat_to_string(w));
        o["weights"] = std::move(ws);
        o["degree"] = logdiv::rat_to_string(d);
        o["mu"] = logdiv::rat_to_string(mu);
        std::cout << dump(o);
    } else {
        std::cout << "mu = " << logdiv::rat_to_string(mu) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of complement Euler-characteristic, log Chern and "
                 "index formulas for divisors in projective space"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_flag("--json", g.json, "machine-readable output with stable key order");
    std::size_t chart_value = 0;
    CLI::Option* chart_opt =
        app.add_option("--chart", chart_value, "fix the affine chart index for Milnor totals");
    bool probes_on = false, probes_off = false;
    CLI::Option* probes_opt =
        app.add_flag("--probes", probes_on, "evaluate alternative sign conventions (default)");
    CLI::Option* no_probes_opt =
        app.add_flag("--no-probes", probes_off, "skip alternative sign conventions");
    app.add_flag("--linear-change", g.linear_change,
                 "allow deterministic coordinate changes when every chart fails");

    auto* milnor = app.add_subcommand("milnor", "total and per-point Milnor numbers of a divisor");
    milnor->fallthrough();
    std::string milnor_file, milnor_divisor;
    milnor->add_option("file", milnor_file, "problem file")->required();
    milnor->add_option("divisor", milnor_divisor, "divisor name")->required();

    auto* euler = app.add_subcommand("euler", "chi of the complement by two routes");
    euler->fallthrough();
    std::string euler_file;
    euler->add_option("file", euler_file, "problem file")->required();

    auto* verify = app.add_subcommand("verify", "verify a formula on a problem file");
    verify->fallthrough();
    std::string verify_file, formula;
    verify->add_option("file", verify_file, "problem file")->required();
    verify->add_option("--formula", formula, "gauss-bonnet | poincare-hopf | nsa | corollary-pn")
        ->required();

    auto* chow = app.add_subcommand("chow", "log Chern class of a divisor arrangement");
    chow->fallthrough();
    int chow_n = 0;
    std::vector<int> chow_degrees;
    chow->add_option("--n", chow_n, "ambient projective dimension")->required();
    chow->add_option("--degrees", chow_degrees, "component degrees (one or two)")
        ->required()
        ->delimiter(',');

    auto* oracle = app.add_subcommand("oracle", "weighted-homogeneous Milnor number product");
    oracle->fallthrough();
    std::vector<std::string> weight_texts;
    std::string degree_text;
    oracle->add_option("--weights", weight_texts, "weights of the variables")
        ->required()
        ->delimiter(',');
    oracle->add_option("--d", degree_text, "weighted degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (chart_opt->count() > 0) g.chart = chart_value;
    if (probes_opt->count() > 0 && no_probes_opt->count() > 0) {
        emit_error(g, "input", "--probes and --no-probes conflict");
        return kExitInput;
    }
    if (probes_opt->count() > 0) g.probes = true;
    if (no_probes_opt->count() > 0) g.probes = false;

    try {
        if (app.got_subcommand(milnor)) return cmd_milnor(g, milnor_file, milnor_divisor);
        if (app.got_subcommand(euler)) return cmd_euler(g, euler_file);
        if (app.got_subcommand(verify)) return cmd_verify(g, verify_file, formula);
        if (app.got_subcommand(chow)) return cmd_chow(g, chow_n, chow_degrees);
        if (app.got_subcommand(oracle)) return cmd_oracle(g, weight_texts, degree_text);
    } catch (const InputError& e) {
        emit_error(g, "input", e.what());
        return kExitInput;
    } catch (const MathError& e) {
        // what() carries a "kind: " prefix for bare std::exception consumers;
        // the envelope already has a kind field, so strip it there
        std::string message = e.what();
        const std::string prefix = e.kind() + ": ";
        if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
        emit_error(g, e.kind(), message);
        return kExitMath;
    }
    emit_error(g, "input", "no subcommand");
    return kExitInput;
}
