// Command-line surface of the quaternionic normalization engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quatnorm/cert.hpp"
#include "quatnorm/format.hpp"
#include "quatnorm/oracle.hpp"
#include "quatnorm/parse.hpp"
#include "quatnorm/qideal.hpp"
#include "quatnorm/report_io.hpp"
#include "quatnorm/structcheck.hpp"

namespace {

using namespace quatnorm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

// Flag wins over the QUATNORM_N environment variable; neither set is an error.
int resolve_n(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("QUATNORM_N")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
        }
        throw Error("QUATNORM_N is set but not a positive integer");
    }
    throw Error("no variable count given: pass --n or set QUATNORM_N");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ReductionStrategy parse_strategy(const std::string& text) {
    if (text == "det") return ReductionStrategy::deterministic();
    if (text.rfind("rand:", 0) == 0)
        return ReductionStrategy::seeded(std::stoull(text.substr(5)));
    throw Error("strategy must be 'det' or 'rand:SEED', got '" + text + "'");
}

int cmd_normalize(int n_flag, const std::string& strategy_text, const std::string& expr_file) {
    const int n = resolve_n(n_flag);
    AlphabetConfig alph(n);
    Polynomial p = parse_expression(read_file(expr_file), alph);
    const int bound = std::max(2, static_cast<int>(p.degree()));
    Basis bg = enumerate_bg(n, bound);
    auto [nf, trace] = normal_form(p, bg, parse_strategy(strategy_text));
    std::cout << format_poly(nf) << '\n';
    return kExitPass;
}

int cmd_basis(int n_flag, int deg, const std::string& families) {
    const int n = resolve_n(n_flag);
    Basis bg = enumerate_bg(n, deg);
    if (families.empty()) {
        write_basis(std::cout, bg);
        return kExitPass;
    }
    std::vector<BasisElement> kept;
    std::stringstream ss(families);
    std::vector<std::string> wanted;
    for (std::string tag; std::getline(ss, tag, ',');) wanted.push_back(tag);
    for (const auto& el : bg.elements())
        for (const auto& tag : wanted)
            if (family_name(el.family) == tag) {
                kept.push_back(el);
                break;
            }
    write_basis(std::cout, Basis(bg.alphabet(), bg.degree_bound(), std::move(kept)));
    return kExitPass;
}

int cmd_certify(int n_flag, int deg, bool all_squads, const std::string& report_file, bool json,
                int workers) {
    const int n = resolve_n(n_flag);
    Basis bg = enumerate_bg(n, deg);
    CertReport report =
        certify(bg, deg, all_squads ? CertMode::All : CertMode::ClearOnly, workers);
    auto emit = [&](std::ostream& os) {
        if (json)
            write_report_json(os, report, bg);
        else
            write_report_text(os, report, bg);
    };
    if (report_file.empty()) {
        emit(std::cout);
    } else {
        std::ofstream out(report_file);
        if (!out) throw Error("cannot write " + report_file);
        emit(out);
        std::cout << (report.passed() ? "certification passed" : "certification FAILED")
                  << ", report written to " << report_file << '\n';
    }
    return report.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_check_structure(int n_flag, const std::string& word_text) {
    const int n = resolve_n(n_flag);
    AlphabetConfig alph(n);
    Word w = parse_word(word_text, alph);
    auto decomp = conforms_normal_pattern(w, alph);
    if (!decomp) {
        std::cout << format_word(w) << ": does not conform\n";
        return kExitCheckFailed;
    }
    std::cout << format_word(w) << ": conforms (r=" << decomp->r << ", s=" << decomp->s;
    if (decomp->virtual_front)
        std::cout << ", embedded after " << format_letter(*decomp->virtual_front);
    std::cout << ")\n";
    return kExitPass;
}

int cmd_oracle_eq(int n_flag, const std::string& expr1, const std::string& expr2) {
    const int n = resolve_n(n_flag);
    AlphabetConfig alph(n);
    Polynomial p = parse_expression(expr1, alph);
    Polynomial q = parse_expression(expr2, alph);
    const bool equal = oracle::coord_equal(p, q, n);
    std::cout << (equal ? "equal modulo the defining ideal\n" : "not equal\n");
    return equal ? kExitPass : kExitCheckFailed;
}

int cmd_gen_ideal(int n_flag) {
    const int n = resolve_n(n_flag);
    write_basis(std::cout, ideal_generators(n));
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quatnorm: normalization of quaternionic polynomials over the free algebra"};
    app.require_subcommand(1);

    int n = 0;
    app.add_option("--n", n, "number of quaternionic variables (or env QUATNORM_N)");

    auto* normalize = app.add_subcommand("normalize", "reduce an expression to normal form");
    std::string strategy = "det";
    std::string expr_file;
    normalize->add_option("--strategy", strategy, "det or rand:SEED");
    normalize->add_option("expr_file", expr_file, "file with one expression")->required();

    auto* basis_cmd = app.add_subcommand("basis", "print the rewriting basis up to a degree");
    int deg = 0;
    std::string families;
    basis_cmd->add_option("--deg", deg, "degree bound")->required();
    basis_cmd->add_option("--families", families, "comma-separated family tags to keep");

    auto* certify_cmd = app.add_subcommand("certify", "reduce S-polynomials of the basis to zero");
    int cert_deg = 0;
    bool all_squads = false;
    std::string report_file;
    bool json = false;
    int workers = 1;
    certify_cmd->add_option("--deg", cert_deg, "leader degree bound")->required();
    certify_cmd->add_flag("--all-squads", all_squads, "also reduce non-clear S-polynomials");
    certify_cmd->add_option("--report", report_file, "write the report to a file");
    certify_cmd->add_flag("--json", json, "machine-readable report");
    certify_cmd->add_option("--workers", workers, "parallel reduction workers");

    auto* check = app.add_subcommand("check-structure", "test the normal-form word pattern");
    std::string word_text;
    check->add_option("word", word_text, "word such as q2*q1")->required();

    auto* oracle_eq = app.add_subcommand("oracle-eq", "coordinatization equality of two expressions");
    std::string expr1, expr2;
    oracle_eq->add_option("expr1", expr1)->required();
    oracle_eq->add_option("expr2", expr2)->required();

    auto* gen_ideal = app.add_subcommand("gen-ideal", "print the defining ideal generators");

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize->parsed()) return cmd_normalize(n, strategy, expr_file);
        if (basis_cmd->parsed()) return cmd_basis(n, deg, families);
        if (certify_cmd->parsed())
            return cmd_certify(n, cert_deg, all_squads, report_file, json, workers);
        if (check->parsed()) return cmd_check_structure(n, word_text);
        if (oracle_eq->parsed()) return cmd_oracle_eq(n, expr1, expr2);
        if (gen_ideal->parsed()) return cmd_gen_ideal(n);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
