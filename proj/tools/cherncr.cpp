// Command-line interface for computing global CR invariants of Sasakian
// eta-Einstein circle bundles from characteristic-class data.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cherncr/family.hpp"
#include "cherncr/invariants.hpp"
#include "cherncr/json_io.hpp"
#include "cherncr/parser.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cherncr;

constexpr const char* kSchema = "chern-cr/1";
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    CliError(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
    int exit_code;
};

std::vector<int> parse_degree_tuple(const std::string& text) {
    std::vector<int> d;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(field, &used);
            if (used != field.size() || v < 1) throw std::invalid_argument("");
            d.push_back(v);
        } catch (const std::exception&) {
            throw CliError("malformed degree tuple '" + text + "'", kExitUsage);
        }
    }
    if (d.empty()) throw CliError("empty degree tuple", kExitUsage);
    return d;
}

// k-digit decimal rendering, truncated toward zero; clearly approximate.
std::string decimal_string(const Rational& q, int digits) {
    mpz_class num = q.get_num(), den = q.get_den();
    std::string sign = num < 0 ? "-" : "";
    num = abs(num);
    mpz_class integral = num / den, rem = num % den;
    std::string frac;
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        mpz_class digit = rem / den;
        frac += digit.get_str();
        rem %= den;
    }
    std::string out = sign + integral.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

struct BaseOptions {
    std::string ci;
    std::string base_file;
};

void add_base_options(CLI::App* cmd, BaseOptions& opts) {
    auto* ci = cmd->add_option("--ci", opts.ci, "complete-intersection base: degree tuple d1,d2,...");
    auto* file = cmd->add_option("--base", opts.base_file, "base from a ChernNumberTable JSON file");
    ci->excludes(file);
}

KEBase resolve_base(const BaseOptions& opts) {
    if (!opts.ci.empty()) {
        std::vector<int> d = parse_degree_tuple(opts.ci);
        return complete_intersection_base(static_cast<int>(d.size()), d);
    }
    if (!opts.base_file.empty()) {
        std::ifstream in(opts.base_file);
        if (!in) throw CliError("cannot open base file '" + opts.base_file + "'", kExitValidation);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw CliError("invalid JSON in '" + opts.base_file + "': " + e.what(), kExitValidation);
        }
        KEBase base = base_from_json(j);
        ValidationReport report = validate_base(base);
        if (!report.ok()) {
            std::string msg = "base file '" + opts.base_file + "' fails validation:";
            for (const auto& v : report.violations) msg += "\n  " + v;
            throw CliError(msg, kExitValidation);
        }
        return base;
    }
    throw CliError("a base is required: pass --ci or --base", kExitUsage);
}

ordered_json base_summary(const KEBase& base) {
    ordered_json j;
    j["n"] = base.n;
    j["lambda"] = to_string(base.lambda);
    if (base.complete_intersection) {
        std::string ds;
        for (std::size_t i = 0; i < base.complete_intersection->degrees.size(); ++i) {
            if (i) ds += ",";
            ds += std::to_string(base.complete_intersection->degrees[i]);
        }
        j["base"] = "complete-intersection(" + ds + ")";
    } else {
        j["base"] = "custom";
    }
    if (base.formal_regime) j["warning"] = "formal regime: the Aubin-Yau existence hypothesis fails";
    return j;
}

std::string read_poly_argument(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void add_rational(ordered_json& j, const std::string& key, const Rational& value,
                  std::optional<int> decimal) {
    j[key] = to_string(value);
    if (decimal) j[key + "_decimal_approx"] = decimal_string(value, *decimal);
}

// Known coefficient tables for the mu = sum C_varsigma I_varsigma relation;
// beyond n = 4 the solver output has no published cross-check.
const std::map<int, std::map<std::string, std::string>> kKnownConjectureTables = {
    {1, {{"1", "-1"}}},
    {2, {{"2,0", "1"}, {"0,1", "-1"}}},
    {3, {{"3,0,0", "-1"}, {"1,1,0", "1"}, {"0,0,1", "2"}}},
    {4, {{"4,0,0,0", "1"}, {"2,1,0,0", "-1"}, {"1,0,1,0", "-2"}, {"0,2,0,0", "1/2"}, {"0,0,0,1", "-6"}}},
};

int run(int argc, char** argv) {
    CLI::App app{"Exact CR invariants of Sasakian eta-Einstein circle bundles"};
    app.require_subcommand(1);

    std::optional<int> decimal;
    app.add_option("--decimal", decimal, "append a k-digit decimal rendering (approximate)")
        ->check(CLI::Range(1, 1000));

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate I_Phi or I_varsigma on a base");
    BaseOptions compute_base;
    add_base_options(compute, compute_base);
    std::string compute_poly, compute_partition;
    auto* poly_opt = compute->add_option("--poly", compute_poly, "invariant polynomial in ch1..ch{n+1} / c1..c{n+1}; '-' reads stdin");
    auto* part_opt = compute->add_option("--partition", compute_partition, "partition of n, e.g. '2,0'");
    poly_opt->excludes(part_opt);

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "Burns-Epstein invariant of the circle bundle");
    BaseOptions mu_base;
    add_base_options(mu_cmd, mu_base);

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "split Phi = ch1*Phi~ + sum C_varsigma Phi_varsigma");
    int decompose_n = 0;
    std::string decompose_poly;
    decompose_cmd->add_option("--n", decompose_n, "dimension n")->required()->check(CLI::PositiveNumber);
    decompose_cmd->add_option("--poly", decompose_poly, "invariant polynomial; '-' reads stdin")->required();

    // family
    auto* family_cmd = app.add_subcommand("family", "symbolic invariant over the complete-intersection family");
    int family_n = 0;
    std::string family_partition;
    bool family_mu_flag = false;
    family_cmd->add_option("--n", family_n, "dimension n")->required()->check(CLI::PositiveNumber);
    auto* fam_part = family_cmd->add_option("--partition", family_partition, "partition of n");
    auto* fam_mu = family_cmd->add_flag("--mu", family_mu_flag, "Burns-Epstein invariant of the family");
    fam_part->excludes(fam_mu);

    // leading-check
    auto* leading_cmd = app.add_subcommand("leading-check", "verify the leading-term identity for every partition");
    int leading_n = 0;
    leading_cmd->add_option("--n", leading_n, "dimension n")->required()->check(CLI::PositiveNumber);

    // independence
    auto* indep_cmd = app.add_subcommand("independence", "transition-matrix determinant and family rank witness");
    int indep_n = 0;
    indep_cmd->add_option("--n", indep_n, "dimension n")->required()->check(CLI::PositiveNumber);

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "solve mu = sum C_varsigma I_varsigma over the family");
    int conj_n = 0;
    conj_cmd->add_option("--n", conj_n, "dimension n")->required()->check(CLI::PositiveNumber);

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check a base for completeness and Einstein consistency");
    BaseOptions validate_base_opts;
    add_base_options(validate_cmd, validate_base_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    ordered_json out;
    out["schema"] = kSchema;

    if (compute->parsed()) {
        KEBase base = resolve_base(compute_base);
        out.update(base_summary(base));
        if (!compute_partition.empty()) {
            Partition varsigma = Partition::parse(compute_partition);
            out["partition"] = varsigma.str();
            add_rational(out, "I", I_varsigma(base, varsigma), decimal);
        } else if (!compute_poly.empty()) {
            InvPoly phi = parse_invariant_poly(read_poly_argument(compute_poly), base.n);
            out["poly"] = phi.poly.str();
            Rational direct = I_phi(base, phi);
            Decomposition dec = decompose_invariant(phi);
            Rational via_decomposition = 0;
            for (const auto& [varsigma, c] : dec.coefficients)
                via_decomposition += c * I_varsigma(base, varsigma);
            if (direct != via_decomposition)
                throw CliError("internal cross-check failed: direct evaluation " + to_string(direct) +
                                   " != decomposed evaluation " + to_string(via_decomposition),
                               kExitValidation);
            add_rational(out, "I", direct, decimal);
        } else {
            throw CliError("compute needs --poly or --partition", kExitUsage);
        }
        emit(out);
    } else if (mu_cmd->parsed()) {
        KEBase base = resolve_base(mu_base);
        out.update(base_summary(base));
        add_rational(out, "mu", burns_epstein(base), decimal);
        emit(out);
    } else if (decompose_cmd->parsed()) {
        InvPoly phi = parse_invariant_poly(read_poly_argument(decompose_poly), decompose_n);
        Decomposition dec = decompose_invariant(phi);
        out["n"] = decompose_n;
        out["poly"] = phi.poly.str();
        ordered_json coeffs = ordered_json::object();
        for (const Partition& varsigma : partitions(decompose_n)) {
            auto it = dec.coefficients.find(varsigma);
            coeffs[varsigma.str()] = it == dec.coefficients.end() ? "0" : to_string(it->second);
        }
        out["coefficients"] = std::move(coeffs);
        out["remainder"] = dec.remainder.poly.str();
        emit(out);
    } else if (family_cmd->parsed()) {
        out["n"] = family_n;
        if (family_mu_flag) {
            out["invariant"] = "mu";
            out["q"] = family_mu(family_n).q.str();
        } else if (!family_partition.empty()) {
            Partition varsigma = Partition::parse(family_partition);
            out["invariant"] = "I_varsigma";
            out["partition"] = varsigma.str();
            out["q"] = family_I_varsigma(family_n, varsigma).q.str();
        } else {
            throw CliError("family needs --partition or --mu", kExitUsage);
        }
        out["note"] = "the invariant equals E*q with E = d1*...*dn";
        emit(out);
    } else if (leading_cmd->parsed()) {
        out["n"] = leading_n;
        bool all_pass = true;
        ordered_json entries = ordered_json::array();
        for (const LeadingTermEntry& entry : leading_term_check(leading_n)) {
            ordered_json e;
            e["partition"] = entry.varsigma.str();
            e["top_part"] = entry.actual.str();
            e["expected"] = entry.expected.str();
            e["pass"] = entry.pass;
            all_pass = all_pass && entry.pass;
            entries.push_back(std::move(e));
        }
        out["entries"] = std::move(entries);
        out["all_pass"] = all_pass;
        emit(out);
        if (!all_pass) return kExitValidation;
    } else if (indep_cmd->parsed()) {
        TransitionMatrix tm = transition_matrix(indep_n);
        IndependenceReport rank = independence_check(indep_n);
        out["n"] = indep_n;
        out["partition_count"] = tm.order.size();
        out["transition_determinant"] = to_string(tm.det);
        out["family_rank"] = rank.rank;
        bool ok = tm.det != 0 && rank.full_rank();
        out["independent"] = ok;
        emit(out);
        if (!ok) return kExitValidation;
    } else if (conj_cmd->parsed()) {
        ConjectureResult result = conjecture_coefficients(conj_n);
        out["n"] = conj_n;
        switch (result.kind) {
            case LinearSolveResult::Kind::Unique: out["status"] = "unique"; break;
            case LinearSolveResult::Kind::NoSolution: out["status"] = "no-solution"; break;
            case LinearSolveResult::Kind::NonUnique: out["status"] = "non-unique"; break;
        }
        if (result.kind == LinearSolveResult::Kind::Unique) {
            ordered_json coeffs = ordered_json::object();
            for (const Partition& varsigma : result.order)
                coeffs[varsigma.str()] = to_string(result.coefficients.at(varsigma));
            out["coefficients"] = std::move(coeffs);
            auto known = kKnownConjectureTables.find(conj_n);
            if (known != kKnownConjectureTables.end()) {
                bool matches = true;
                for (const auto& [key, value] : known->second)
                    matches = matches && out["coefficients"][key] == value;
                out["provenance"] = matches ? "matches-known-table" : "CONFLICTS-with-known-table";
                if (!matches) {
                    ordered_json expected = ordered_json::object();
                    for (const auto& [key, value] : known->second) expected[key] = value;
                    out["known_table"] = std::move(expected);
                }
            } else {
                out["provenance"] = "derived, unverified against published tables";
            }
        }
        emit(out);
        if (result.kind != LinearSolveResult::Kind::Unique) return kExitValidation;
    } else if (validate_cmd->parsed()) {
        // resolve_base already rejects invalid files; rebuild without the
        // short-circuit so violations are reported structurally.
        if (!validate_base_opts.base_file.empty()) {
            std::ifstream in(validate_base_opts.base_file);
            if (!in) throw CliError("cannot open base file '" + validate_base_opts.base_file + "'", kExitValidation);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw CliError("invalid JSON: " + std::string(e.what()), kExitValidation);
            }
            KEBase base = base_from_json(j);
            ValidationReport report = validate_base(base);
            out.update(base_summary(base));
            out["ok"] = report.ok();
            out["violations"] = report.violations;
            emit(out);
            if (!report.ok()) return kExitValidation;
        } else {
            KEBase base = resolve_base(validate_base_opts);
            ValidationReport report = validate_base(base);
            out.update(base_summary(base));
            out["ok"] = report.ok();
            out["violations"] = report.violations;
            emit(out);
            if (!report.ok()) return kExitValidation;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
