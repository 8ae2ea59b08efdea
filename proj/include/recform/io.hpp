#pragma once

/**
 * @file io.hpp
 * @brief Problem files, bundled examples, and text/JSON rendering of results.
 *
 * Problem file (JSON, rationals as strings "p/q" or "p"):
 *
 *     { "k": 3,
 *       "gammas": ["1", "0", "1"],                  // gamma_0 first
 *       "sequences": [["0","1","1"], ["3","1","1"], ["3","0","2"]],
 *       "mode": "family" }                          // or "cassini" with one sequence
 */

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recform/binary.hpp"
#include "recform/errors.hpp"
#include "recform/factorization.hpp"
#include "recform/form.hpp"
#include "recform/form_builder.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"
#include "recform/verify.hpp"

namespace recform {

using json = nlohmann::ordered_json;

/// Malformed problem or package text.
class FormatError : public Error {
public:
    using Error::Error;
};

enum class ProblemMode { family, cassini };

struct Problem {
    std::size_t k = 0;
    std::vector<Rat> gammas;
    std::vector<std::vector<Rat>> sequences;
    ProblemMode mode = ProblemMode::family;

    RecurrenceRelation relation() const { return RecurrenceRelation(gammas); }

    Sequence sequence(std::size_t i) const { return Sequence(relation(), sequences.at(i)); }

    /// The family the pipeline runs on: the given rows, or one sequence and its shifts.
    SequenceFamily family() const {
        if (mode == ProblemMode::cassini) return shifted_family(sequence(0));
        return SequenceFamily(relation(), RatMatrix::from_rows(sequences));
    }

    friend bool operator==(const Problem&, const Problem&) = default;
};

namespace detail {

inline Rat rat_from_json(const json& v, const char* field) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw FormatError(std::string("problem: ") + field + " entries must be rational strings");
}

inline json rat_list(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

}  // namespace detail

inline Problem parse_problem(const json& j) {
    if (!j.is_object()) throw FormatError("problem: top level must be an object");
    for (const char* key : {"k", "gammas", "sequences"})
        if (!j.contains(key)) throw FormatError(std::string("problem: missing field \"") + key + "\"");
    Problem p;
    if (!j["k"].is_number_integer() || j["k"].get<long long>() < 2) throw FormatError("problem: k must be an integer >= 2");
    p.k = j["k"].get<std::size_t>();
    if (j.contains("mode")) {
        auto mode = j["mode"].get<std::string>();
        if (mode == "family") p.mode = ProblemMode::family;
        else if (mode == "cassini") p.mode = ProblemMode::cassini;
        else throw FormatError("problem: mode must be \"family\" or \"cassini\"");
    }
    if (!j["gammas"].is_array() || j["gammas"].size() != p.k) throw FormatError("problem: gammas must list k values");
    try {
        for (const auto& g : j["gammas"]) p.gammas.push_back(detail::rat_from_json(g, "gammas"));
        if (!j["sequences"].is_array()) throw FormatError("problem: sequences must be an array");
        for (const auto& row : j["sequences"]) {
            if (!row.is_array() || row.size() != p.k) throw FormatError("problem: every sequence needs k initial values");
            std::vector<Rat> r;
            for (const auto& v : row) r.push_back(detail::rat_from_json(v, "sequences"));
            p.sequences.push_back(std::move(r));
        }
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    const std::size_t want = p.mode == ProblemMode::cassini ? 1 : p.k;
    if (p.sequences.size() != want)
        throw FormatError("problem: expected " + std::to_string(want) + " sequence(s) for this mode");
    return p;
}

inline Problem parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("problem: invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

inline json to_json(const Problem& p) {
    json j;
    j["k"] = p.k;
    j["gammas"] = detail::rat_list(p.gammas);
    j["sequences"] = json::array();
    for (const auto& s : p.sequences) j["sequences"].push_back(detail::rat_list(s));
    j["mode"] = p.mode == ProblemMode::cassini ? "cassini" : "family";
    return j;
}

/// Bundled problems, keyed by name.
inline const std::map<std::string, std::string>& golden_problems() {
    static const std::map<std::string, std::string> problems = {
        {"fibonacci", R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"]], "mode": "cassini"})"},
        {"fibonacci-lucas", R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"], ["2", "1"]], "mode": "family"})"},
        {"table1-row1", R"({"k": 2, "gammas": ["4", "0"], "sequences": [["1", "2"], ["2", "3"]], "mode": "family"})"},
        {"table1-row2", R"({"k": 2, "gammas": ["-1", "2"], "sequences": [["2", "3"], ["4", "5"]], "mode": "family"})"},
        {"table1-row3", R"({"k": 2, "gammas": ["-10", "7"], "sequences": [["0", "1"], ["2", "7"]], "mode": "family"})"},
        {"table1-row4", R"({"k": 2, "gammas": ["-10", "7"], "sequences": [["1", "2"], ["1", "5"]], "mode": "family"})"},
        {"table1-row5", R"({"k": 2, "gammas": ["-1", "4"], "sequences": [["1", "2"], ["3", "4"]], "mode": "family"})"},
        {"narayana", R"({"k": 3, "gammas": ["1", "0", "1"], "sequences": [["0", "1", "1"], ["3", "1", "1"], ["3", "0", "2"]], "mode": "family"})"},
        {"tribonacci-cassini", R"({"k": 3, "gammas": ["1", "1", "1"], "sequences": [["0", "0", "1"]], "mode": "cassini"})"},
    };
    return problems;
}

inline std::optional<Problem> golden_problem(const std::string& name) {
    auto it = golden_problems().find(name);
    if (it == golden_problems().end()) return std::nullopt;
    return parse_problem(it->second);
}

// ---------------------------------------------------------------------------
// Forms and packages

inline json to_json(const HomogeneousForm& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.dense()) terms.push_back({{"exponent", e}, {"coeff", c.str()}});
    return {{"arity", f.arity()}, {"degree", f.degree()}, {"terms", terms}};
}

inline HomogeneousForm parse_form(const json& j) {
    try {
        HomogeneousForm f(j.at("arity").get<std::size_t>(), j.at("degree").get<unsigned>());
        for (const auto& t : j.at("terms"))
            f.add_term(t.at("exponent").get<Exponent>(), Rat::parse(t.at("coeff").get<std::string>()));
        return f;
    } catch (const json::exception& e) {
        throw FormatError(std::string("form: ") + e.what());
    }
}

inline json to_json(const FormPackage& p) {
    return {{"arity", p.arity},
            {"delta", p.delta.str()},
            {"base", p.base.str()},
            {"rhs_scale", p.rhs_scale().str()},
            {"form_f", to_json(p.form_f)},
            {"form_f_tilde", to_json(p.form_f_tilde)}};
}

inline FormPackage parse_form_package(const json& j) {
    try {
        FormPackage p;
        p.arity = j.at("arity").get<std::size_t>();
        p.delta = Rat::parse(j.at("delta").get<std::string>());
        p.base = Rat::parse(j.at("base").get<std::string>());
        p.form_f = parse_form(j.at("form_f"));
        p.form_f_tilde = parse_form(j.at("form_f_tilde"));
        return p;
    } catch (const json::exception& e) {
        throw FormatError(std::string("package: ") + e.what());
    }
}

inline std::string power_str(const Rat& base) {
    std::string b = base.str();
    if (base.sign() < 0 || !base.is_integer()) b = "(" + b + ")";
    return b + "ⁿ";
}

inline std::string render_text(const FormPackage& p, bool dense = false) {
    std::ostringstream os;
    const std::string lhs = p.form_f_tilde.str(dense);
    os << "F~(x) = " << lhs << "\n";
    os << "F(x)  = " << p.form_f.str(dense) << "\n";
    os << "Δ = " << p.delta << "\n";
    os << "δ = " << p.base << "\n";
    os << "rhs = " << p.rhs_scale() << "·" << power_str(p.base) << "\n";
    os << "identity: F~(x̄) = Δ^" << p.arity << "·δⁿ, i.e. " << lhs << " = " << p.rhs_scale() << "·"
       << power_str(p.base) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Decompositions

inline json to_json(const ComplexApprox& c) {
    return {{"re", c.real()}, {"im", c.imag()}, {"bound", c.error_bound()}};
}

inline json to_json(const RootDatum& r) {
    json j{{"multiplicity", r.multiplicity}};
    if (r.is_exact()) j["exact"] = r.exact().str();
    else j["approx"] = to_json(r.approx());
    return j;
}

inline json to_json(const Decomposition& d) {
    json factors = json::array();
    for (const auto& f : d.factors) {
        json coeffs = json::array();
        if (f.is_exact())
            for (const auto& c : f.exact()) coeffs.push_back(c.str());
        else
            for (const auto& c : f.approx()) coeffs.push_back(to_json(c));
        factors.push_back({{"exact", f.is_exact()},
                           {"multiplicity", f.multiplicity},
                           {"root", to_json(f.source_root)},
                           {"coefficients", coeffs}});
    }
    return {{"exact", d.is_exact()},
            {"residual", d.residual},
            {"relative_residual", d.relative_residual},
            {"scale", d.scale.str()},
            {"factors", factors}};
}

inline std::string linear_factor_str(const LinearFactor& f) {
    std::ostringstream os;
    std::size_t nonzero = 0;
    if (f.is_exact()) {
        bool first = true;
        for (std::size_t i = 0; i < f.exact().size(); ++i) {
            const Rat& c = f.exact()[i];
            if (c.is_zero()) continue;
            ++nonzero;
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            first = false;
            if (abs(c) != Rat(1)) os << abs(c) << "·";
            os << "x" << (i + 1);
        }
    } else {
        auto coeffs = f.approx();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (is_zero(coeffs[i])) continue;
            os << (nonzero++ ? " + " : "") << "(" << coeffs[i].str() << ")·x" << (i + 1);
        }
    }
    std::string body = os.str();
    if (nonzero > 1 || (nonzero == 1 && f.multiplicity > 1 && body.front() == '-')) body = "(" + body + ")";
    if (f.multiplicity > 1) {
        static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        for (char ch : std::to_string(f.multiplicity)) body += sup[ch - '0'];
    }
    return body;
}

inline std::string root_str(const RootDatum& r) {
    if (r.is_exact()) return r.exact().str();
    std::ostringstream os;
    os << r.approx().str(15) << " ±" << r.approx().error_bound();
    return os.str();
}

inline std::string render_text(const Decomposition& d, const std::string& target = "F") {
    std::ostringstream os;
    std::string product;
    for (const auto& f : d.factors) product += (product.empty() ? "" : " · ") + linear_factor_str(f);
    os << target << " = " << product << ", " << (d.is_exact() ? "exact" : "approx") << ", residual " << d.residual
       << "\n";
    if (!d.is_exact()) os << "relative residual " << d.relative_residual << "\n";
    os << "factors:\n";
    for (const auto& f : d.factors)
        os << "  root " << root_str(f.source_root) << " (multiplicity " << f.multiplicity << ", "
           << (f.is_exact() ? "exact" : "approx") << "): " << linear_factor_str(f) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Verification reports

inline json to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"n", f.n}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}, {"scaled", f.scaled}});
    return {{"first", r.first}, {"last", r.last}, {"passed", r.passed()}, {"count", r.count()}, {"ok", r.ok()},
            {"failures", failures}};
}

inline std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "n ∈ [" << r.first << ", " << r.last << "]: " << r.passed() << "/" << r.count()
       << (r.ok() ? " OK" : " FAILED") << "\n";
    for (const auto& f : r.failures)
        os << "  n = " << f.n << (f.scaled ? " (F~)" : " (F)") << ": lhs " << f.lhs << " != rhs " << f.rhs << "\n";
    return os.str();
}

}  // namespace recform
