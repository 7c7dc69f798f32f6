#pragma once

#include "glts/algebra.hpp"
#include "glts/errors.hpp"
#include "glts/linalg.hpp"
#include "glts/scalar.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glts {

/// Problem reading an algebra file: IO, JSON syntax, or content.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- Cayley-Dickson construction ------------------------------------------

namespace cayley_dickson {

/// Conjugate of an element of the 2^k-dimensional Cayley-Dickson algebra.
inline std::vector<Scalar> conjugate(const std::vector<Scalar>& a) {
    std::vector<Scalar> out(a.size());
    if (a.empty()) return out;
    out[0] = a[0];
    for (std::size_t k = 1; k < a.size(); ++k) out[k] = -a[k];
    return out;
}

/// (p, q)(r, s) = (pr - s*q, sp + qr*), recursing down to the reals.
inline std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    const std::size_t n = a.size();
    if (n != b.size() || n == 0 || (n & (n - 1)) != 0) {
        throw ContractViolation("cayley_dickson::multiply: sizes must be equal powers of two");
    }
    if (n == 1) return {a[0] * b[0]};
    const std::size_t h = n / 2;
    const std::vector<Scalar> p(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(h));
    const std::vector<Scalar> q(a.begin() + static_cast<std::ptrdiff_t>(h), a.end());
    const std::vector<Scalar> r(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(h));
    const std::vector<Scalar> s(b.begin() + static_cast<std::ptrdiff_t>(h), b.end());
    const auto pr = multiply(p, r);
    const auto sq = multiply(conjugate(s), q);
    const auto sp = multiply(s, p);
    const auto qr = multiply(q, conjugate(r));
    std::vector<Scalar> out(n);
    for (std::size_t k = 0; k < h; ++k) {
        out[k] = pr[k] - sq[k];
        out[h + k] = sp[k] + qr[k];
    }
    return out;
}

inline std::vector<Scalar> unit(std::size_t n, std::size_t k) {
    std::vector<Scalar> out(n);
    out.at(k) = Scalar(1);
    return out;
}

}  // namespace cayley_dickson

// --- builtin algebras -----------------------------------------------------

namespace detail {

inline std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back("e" + std::to_string(k));
    return out;
}

inline Vector coords(std::initializer_list<std::int64_t> values) {
    std::vector<Scalar> out;
    for (auto v : values) out.emplace_back(v);
    return Vector(std::move(out));
}

}  // namespace detail

inline Algebra make_abelian(std::size_t n) {
    if (n == 0) throw ContractViolation("abelian(n) requires n >= 1");
    return Algebra::create({"abelian(" + std::to_string(n) + ")", detail::numbered_labels(n), {}});
}

/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
inline Algebra make_so3() {
    using detail::coords;
    return Algebra::create({"so3",
                            detail::numbered_labels(3),
                            {{0, 1, coords({0, 0, 1})}, {1, 2, coords({1, 0, 0})}, {0, 2, coords({0, -1, 0})}}});
}

/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline Algebra make_sl2() {
    using detail::coords;
    return Algebra::create(
        {"sl2", {"h", "e", "f"}, {{0, 1, coords({0, 2, 0})}, {0, 2, coords({0, 0, -2})}, {1, 2, coords({1, 0, 0})}}});
}

/// Imaginary octonions under the commutator [a,b] = ab - ba, with octonion
/// multiplication produced by Cayley-Dickson doubling.
inline Algebra make_m7() {
    constexpr std::size_t kOct = 8;
    AlgebraTable table{"m7", detail::numbered_labels(7), {}};
    for (std::size_t i = 1; i < kOct; ++i) {
        for (std::size_t j = i + 1; j < kOct; ++j) {
            const auto ei = cayley_dickson::unit(kOct, i);
            const auto ej = cayley_dickson::unit(kOct, j);
            const auto ij = cayley_dickson::multiply(ei, ej);
            const auto ji = cayley_dickson::multiply(ej, ei);
            if (!(ij[0] - ji[0]).is_zero()) throw std::logic_error("octonion commutator has a real part");
            Vector result(7);
            for (std::size_t k = 1; k < kOct; ++k) result[k - 1] = ij[k] - ji[k];
            if (!result.is_zero()) table.entries.push_back({i - 1, j - 1, std::move(result)});
        }
    }
    return Algebra::create(std::move(table));
}

/// Anticommutative but neither Lie nor Mal'tsev:
/// [e1,e2] = e1, [e2,e3] = e2, [e3,e1] = e3.
inline Algebra make_nc3() {
    using detail::coords;
    return Algebra::create({"nc3",
                            detail::numbered_labels(3),
                            {{0, 1, coords({1, 0, 0})}, {1, 2, coords({0, 1, 0})}, {0, 2, coords({0, 0, -1})}}});
}

/// Names accepted by builtin(), with "abelian(n)" standing for any n >= 1.
inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"abelian(n)", "so3", "sl2", "m7", "nc3"};
    return names;
}

inline Algebra builtin(std::string_view name) {
    if (name == "so3") return make_so3();
    if (name == "sl2") return make_sl2();
    if (name == "m7") return make_m7();
    if (name == "nc3") return make_nc3();
    constexpr std::string_view prefix = "abelian(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        const bool numeric = !digits.empty() && digits.size() <= 6 &&
                             digits.find_first_not_of("0123456789") == std::string_view::npos;
        if (!numeric) throw UnknownName("abelian(n): '" + std::string(digits) + "' is not a positive integer");
        const auto n = std::stoul(std::string(digits));
        if (n == 0) throw ContractViolation("abelian(n) requires n >= 1");
        return make_abelian(n);
    }
    throw UnknownName("unknown algebra '" + std::string(name) + "'");
}

// --- algebra files --------------------------------------------------------

/// Raw contents of a .alg.json file, before any checking.
struct AlgebraFile {
    struct Entry {
        std::int64_t i = 0;
        std::int64_t j = 0;
        std::vector<std::pair<std::string, std::string>> result;  // basis index -> rational text
    };
    std::string name;
    std::int64_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Entry> brackets;
};

namespace detail {

template <typename T>
T require_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw LoadError(where + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw LoadError(where + "." + key + ": wrong type");
    }
}

inline bool parse_index(const std::string& text, std::int64_t& out) {
    if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos) return false;
    out = std::stoll(text);
    return true;
}

}  // namespace detail

/// Structural decoding. Content is checked by validate().
inline AlgebraFile algebra_file_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw LoadError("$: expected an object");
    AlgebraFile f;
    f.name = detail::require_field<std::string>(j, "name", "$");
    f.dim = detail::require_field<std::int64_t>(j, "dim", "$");
    f.basis = detail::require_field<std::vector<std::string>>(j, "basis", "$");
    if (j.contains("brackets")) {
        const auto& arr = j.at("brackets");
        if (!arr.is_array()) throw LoadError("$.brackets: expected an array");
        for (std::size_t n = 0; n < arr.size(); ++n) {
            const std::string where = "$.brackets[" + std::to_string(n) + "]";
            AlgebraFile::Entry e;
            e.i = detail::require_field<std::int64_t>(arr[n], "i", where);
            e.j = detail::require_field<std::int64_t>(arr[n], "j", where);
            const auto& res = arr[n].contains("result") ? arr[n].at("result") : nlohmann::json();
            if (!res.is_object()) throw LoadError(where + ".result: expected an object");
            for (const auto& [key, value] : res.items()) {
                if (!value.is_string()) throw LoadError(where + ".result[\"" + key + "\"]: expected a string");
                e.result.emplace_back(key, value.get<std::string>());
            }
            f.brackets.push_back(std::move(e));
        }
    }
    return f;
}

/// Checks every field of a file and reports all problems with their location.
inline ValidationReport validate(const AlgebraFile& f) {
    ValidationReport report;
    auto fail = [&](std::string loc, std::string msg) {
        report.violations.push_back({std::move(loc), std::move(msg)});
    };
    if (f.dim <= 0) fail("$.dim", "must be positive");
    if (f.dim > 0 && static_cast<std::size_t>(f.dim) != f.basis.size()) {
        fail("$.basis", "has " + std::to_string(f.basis.size()) + " labels, dim is " + std::to_string(f.dim));
    }
    std::set<std::string> labels;
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
        if (f.basis[k].empty()) fail("$.basis[" + std::to_string(k) + "]", "empty label");
        if (!labels.insert(f.basis[k]).second) fail("$.basis[" + std::to_string(k) + "]", "duplicate label");
    }
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t n = 0; n < f.brackets.size(); ++n) {
        const auto& e = f.brackets[n];
        const std::string where = "$.brackets[" + std::to_string(n) + "]";
        if (e.i < 0 || e.i >= f.dim) fail(where + ".i", "index out of range");
        if (e.j < 0 || e.j >= f.dim) fail(where + ".j", "index out of range");
        if (e.i >= e.j) fail(where, "i must be < j");
        if (!pairs.insert({e.i, e.j}).second) fail(where, "duplicate entry for pair");
        std::set<std::int64_t> keys;
        for (const auto& [key, value] : e.result) {
            const std::string loc = where + ".result[\"" + key + "\"]";
            std::int64_t k = 0;
            if (!detail::parse_index(key, k)) {
                fail(loc, "key is not a basis index");
            } else if (k >= f.dim) {
                fail(loc, "index out of range");
            } else if (!keys.insert(k).second) {
                fail(loc, "duplicate index");
            }
            const auto slash = value.find('/');
            if (slash != std::string::npos && value.find_first_not_of('0', slash + 1) == std::string::npos &&
                slash + 1 < value.size()) {
                fail(loc, "denominator is zero");
            } else if (!Scalar::parse(value)) {
                fail(loc, "'" + value + "' is not a rational of the form p or p/q");
            }
        }
    }
    return report;
}

inline Algebra to_algebra(const AlgebraFile& f) {
    const auto report = validate(f);
    if (!report.ok()) throw LoadError(report.summary());
    const auto dim = static_cast<std::size_t>(f.dim);
    AlgebraTable table{f.name, f.basis, {}};
    for (const auto& e : f.brackets) {
        Vector result(dim);
        for (const auto& [key, value] : e.result) result[std::stoul(key)] = *Scalar::parse(value);
        table.entries.push_back({static_cast<std::size_t>(e.i), static_cast<std::size_t>(e.j), std::move(result)});
    }
    return Algebra::create(std::move(table));
}

/// JSON form of an algebra. Zero brackets and zero coordinates are omitted.
inline nlohmann::json save(const Algebra& a) {
    nlohmann::json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["basis"] = a.basis();
    auto brackets = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = i + 1; k < a.dim(); ++k) {
            const Vector v = a.structure(i, k);
            if (v.is_zero()) continue;
            nlohmann::json result = nlohmann::json::object();
            for (std::size_t c = 0; c < v.dim(); ++c) {
                if (!v[c].is_zero()) result[std::to_string(c)] = v[c].str();
            }
            brackets.push_back({{"i", i}, {"j", k}, {"result", std::move(result)}});
        }
    }
    j["brackets"] = std::move(brackets);
    return j;
}

inline Algebra load_json(const nlohmann::json& j) { return to_algebra(algebra_file_from_json(j)); }

inline Algebra load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError(path.string() + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError(path.string() + ": parse error: " + e.what());
    }
    try {
        return load_json(j);
    } catch (const LoadError& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
}

inline void save(const Algebra& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw LoadError(path.string() + ": cannot write file");
    out << save(a).dump(2) << "\n";
}

/// Builtin name, or a path ending in ".alg.json".
inline Algebra resolve_algebra(std::string_view source) {
    if (source.ends_with(".alg.json")) return load(std::filesystem::path(std::string(source)));
    return builtin(source);
}

}  // namespace glts
