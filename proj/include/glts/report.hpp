#pragma once

#include "glts/algebra.hpp"
#include "glts/linalg.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace glts {

/// Either side of an identity: vector-valued or operator-valued.
using Value = std::variant<Vector, Operator>;

struct NamedVector {
    std::string name;
    Vector value;

    friend bool operator==(const NamedVector&, const NamedVector&) = default;
};

struct Counterexample {
    std::vector<NamedVector> substitution;
    Value left;
    Value right;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
    std::string identity;
    std::string algebra;
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::size_t substitutions_checked = 0;
    // Only populated by exhaustive runs.
    std::optional<std::size_t> violations;
};

/// "2*e1 - 1/3*e3", or "0".
inline std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t k = 0; k < v.dim(); ++k) {
        const Scalar& c = v[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Scalar mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!(mag == Scalar(1))) out += mag.str() + "*";
        out += k < labels.size() ? labels[k] : "e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

inline std::string format_operator(const Operator& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) out += " ";
            out += m(r, c).str();
        }
    }
    return out + "]";
}

inline std::string format_value(const Value& v, const std::vector<std::string>& labels) {
    if (const auto* vec = std::get_if<Vector>(&v)) return format_vector(*vec, labels);
    return format_operator(std::get<Operator>(v));
}

inline nlohmann::json to_json(const Vector& v) {
    auto out = nlohmann::json::array();
    for (const auto& c : v.coords()) out.push_back(c.str());
    return out;
}

inline nlohmann::json to_json(const Operator& m) {
    auto out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

inline nlohmann::json to_json(const Value& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["algebra"] = r.algebra;
    j["holds"] = r.holds;
    j["substitutions_checked"] = r.substitutions_checked;
    if (r.violations) j["violations"] = *r.violations;
    if (r.counterexample) {
        nlohmann::json cx;
        auto subst = nlohmann::json::array();
        for (const auto& nv : r.counterexample->substitution) {
            subst.push_back({{"name", nv.name}, {"value", to_json(nv.value)}});
        }
        cx["substitution"] = std::move(subst);
        cx["left"] = to_json(r.counterexample->left);
        cx["right"] = to_json(r.counterexample->right);
        j["counterexample"] = std::move(cx);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

/// Multi-line human-readable rendering.
inline std::string format_report(const CheckReport& r, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << r.identity << " on " << r.algebra << ": " << (r.holds ? "holds" : "FAILS") << " ("
       << r.substitutions_checked << " substitutions checked";
    if (r.violations) os << ", " << *r.violations << " violations";
    os << ")\n";
    if (r.counterexample) {
        const auto& cx = *r.counterexample;
        os << "  counterexample:";
        for (std::size_t k = 0; k < cx.substitution.size(); ++k) {
            os << (k ? ", " : " ") << cx.substitution[k].name << " = "
               << format_vector(cx.substitution[k].value, labels);
        }
        os << "\n  left  = " << format_value(cx.left, labels) << "\n  right = " << format_value(cx.right, labels)
           << "\n";
    }
    return os.str();
}

}  // namespace glts
