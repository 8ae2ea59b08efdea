#pragma once

/**
 * @file cli.hpp
 * @brief The `recform` command line, callable in-process.
 *
 *     recform form|factor|verify|eval|examples [FILE] [--n-range=A..B] [--precision P] [--json]
 *
 * FILE is a problem file path or the name of a bundled problem.
 * Exit codes: 0 success, 1 usage error, 2 precondition failure
 * (gamma_0 = 0, dependent initials, non-integral data), 3 certification failure.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "recform/binary.hpp"
#include "recform/errors.hpp"
#include "recform/factorization.hpp"
#include "recform/form_builder.hpp"
#include "recform/io.hpp"
#include "recform/recurrence.hpp"
#include "recform/verify.hpp"

namespace recform::cli {

enum ExitCode : int { ok = 0, usage = 1, precondition = 2, certification = 3 };

struct NRange {
    long long first;
    long long last;
};

inline NRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw FormatError("--n-range: expected A..B, got \"" + text + "\"");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        NRange r{std::stoll(a, &used_a), std::stoll(b, &used_b)};
        if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
        if (r.first > r.last) throw FormatError("--n-range: empty range " + text);
        return r;
    } catch (const std::logic_error&) {
        throw FormatError("--n-range: expected integers A..B, got \"" + text + "\"");
    }
}

/// Reads FILE, falling back to a bundled problem of that name (".json" suffix optional).
inline Problem load_problem(const std::string& source) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(source)) {
        std::ifstream in(source);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_problem(buffer.str());
    }
    std::string name = fs::path(source).filename().string();
    if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
    if (auto p = golden_problem(name)) return *p;
    throw FormatError("no such problem file or bundled example: " + source);
}

namespace detail {

inline std::string decomposition_scale_line(const FormPackage& pkg) {
    return "F~ = " + pkg.rhs_scale().str() + " · F\n";
}

inline int cmd_form(const Problem& p, bool as_json, bool dense, std::ostream& out) {
    const FormPackage pkg = build_form(p.family());
    if (as_json) out << to_json(pkg).dump(2) << "\n";
    else out << render_text(pkg, dense);
    return ok;
}

inline int cmd_factor(const Problem& p, double precision, double tolerance, bool as_json, std::ostream& out) {
    const SequenceFamily f = p.family();
    const FormPackage pkg = build_form(f);
    const Decomposition d = decompose_form(f, precision, tolerance);
    if (as_json) {
        json j = to_json(d);
        j["rhs_scale"] = pkg.rhs_scale().str();
        j["tolerance"] = tolerance;
        out << j.dump(2) << "\n";
    } else {
        out << render_text(d) << decomposition_scale_line(pkg);
    }
    return d.relative_residual <= tolerance ? ok : certification;
}

inline int cmd_verify(const Problem& p, NRange range, bool as_json, std::ostream& out) {
    const SequenceFamily f = p.family();
    const VerificationReport r = verify_identity(f, build_form(f), range.first, range.last);
    if (as_json) out << to_json(r).dump(2) << "\n";
    else out << render_text(r);
    return r.ok() ? ok : certification;
}

inline int cmd_eval(const Problem& p, std::optional<std::size_t> seq, NRange range, bool as_json, std::ostream& out) {
    std::vector<std::size_t> which;
    if (seq) {
        if (*seq < 1 || *seq > p.sequences.size())
            throw FormatError("--seq: expected 1.." + std::to_string(p.sequences.size()));
        which.push_back(*seq - 1);
    } else {
        for (std::size_t i = 0; i < p.sequences.size(); ++i) which.push_back(i);
    }
    std::vector<Sequence> sequences;
    for (auto i : which) sequences.push_back(p.sequence(i));

    if (as_json) {
        json rows = json::array();
        for (long long n = range.first; n <= range.last; ++n) {
            json values = json::array();
            for (const auto& s : sequences) values.push_back(s.at(n).str());
            rows.push_back({{"n", n}, {"values", values}});
        }
        json cols = json::array();
        for (auto i : which) cols.push_back(i + 1);
        out << json{{"sequences", cols}, {"terms", rows}}.dump(2) << "\n";
        return ok;
    }
    out << "n";
    for (auto i : which) out << "\tG" << (i + 1);
    out << "\n";
    for (long long n = range.first; n <= range.last; ++n) {
        out << n;
        for (const auto& s : sequences) out << "\t" << s.at(n);
        out << "\n";
    }
    return ok;
}

inline int cmd_examples(const std::string& name, NRange range, bool as_json, std::ostream& out) {
    if (name.empty()) {
        if (as_json) {
            json names = json::array();
            for (const auto& [n, text] : golden_problems()) names.push_back(n);
            out << names.dump(2) << "\n";
        } else {
            for (const auto& [n, text] : golden_problems()) out << n << "\n";
        }
        return ok;
    }
    auto problem = golden_problem(name);
    if (!problem) throw FormatError("no bundled example named \"" + name + "\"");
    const SequenceFamily f = problem->family();
    const FormPackage pkg = build_form(f);
    const VerificationReport r = verify_identity(f, pkg, range.first, range.last);
    if (as_json) {
        out << json{{"name", name}, {"problem", to_json(*problem)}, {"package", to_json(pkg)}, {"verification", to_json(r)}}
                   .dump(2)
            << "\n";
    } else {
        out << "example " << name << ": " << to_json(*problem).dump() << "\n" << render_text(pkg) << render_text(r);
    }
    return r.ok() ? ok : certification;
}

}  // namespace detail

/// Runs the command line; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Closed-form identities for families of linear recurrence sequences", "recform"};
    app.require_subcommand(1);

    std::string file, range_text;
    bool as_json = false, dense = false;
    double precision = default_root_precision, tolerance = default_certification_tolerance;
    std::optional<std::size_t> seq;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        auto* opt = sub->add_option("file", file, "problem file or bundled example name");
        if (needs_file) opt->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };
    auto* form = app.add_subcommand("form", "print the form F~ with F~(g_n) = Delta^k·delta^n");
    add_common(form, true);
    form->add_flag("--dense", dense, "list every monomial, zeros included");
    auto* factor = app.add_subcommand("factor", "factor F into linear forms");
    add_common(factor, true);
    factor->add_option("--precision", precision, "root error bound")->check(CLI::PositiveNumber);
    factor->add_option("--tolerance", tolerance, "certification tolerance per coefficient")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "check the identity exactly over a range of n");
    add_common(verify, true);
    verify->add_option("--n-range", range_text, "inclusive range A..B (default 0..50)");
    auto* eval = app.add_subcommand("eval", "print sequence terms");
    add_common(eval, true);
    eval->add_option("--n-range", range_text, "inclusive range A..B (default 0..10)");
    eval->add_option("--seq", seq, "1-based sequence index (default: all)");
    auto* examples = app.add_subcommand("examples", "list bundled problems, or run one");
    add_common(examples, false);
    examples->add_option("--n-range", range_text, "verification range A..B (default 0..20)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        auto range_or = [&](NRange fallback) { return range_text.empty() ? fallback : parse_range(range_text); };
        if (*examples) return detail::cmd_examples(file, range_or({0, 20}), as_json, out);
        const Problem problem = load_problem(file);
        if (*form) return detail::cmd_form(problem, as_json, dense, out);
        if (*factor) return detail::cmd_factor(problem, precision, tolerance, as_json, out);
        if (*verify) return detail::cmd_verify(problem, range_or({0, 50}), as_json, out);
        if (*eval) return detail::cmd_eval(problem, seq, range_or({0, 10}), as_json, out);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const DependentInitialsError& e) {
        err << "error: " << e.what() << "\n";
        return precondition;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return precondition;
    } catch (const CertificationError& e) {
        err << "certification failed: " << e.what() << " (residual " << e.residual << ")\n";
        return certification;
    } catch (const PrecisionError& e) {
        err << "certification failed: " << e.what() << " (best bound " << e.best_bound << ")\n";
        return certification;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return precondition;
    }
    return usage;
}

}  // namespace recform::cli
