#pragma once

#include "glts/linalg.hpp"
#include "glts/scalar.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace glts {

/// [e_i, e_j] = result, stored for i < j only.
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    Vector result;
};

/// Unchecked description of an anticommutative algebra. Pairs that are not
/// listed bracket to zero.
struct AlgebraTable {
    std::string name;
    std::vector<std::string> basis;
    std::vector<BracketEntry> entries;
};

struct Violation {
    std::string location;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string summary() const {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += "; ";
            out += v.location + ": " + v.message;
        }
        return out;
    }
};

inline ValidationReport validate(const AlgebraTable& table) {
    ValidationReport report;
    auto fail = [&](std::string loc, std::string msg) {
        report.violations.push_back({std::move(loc), std::move(msg)});
    };
    const std::size_t dim = table.basis.size();
    if (dim == 0) fail("basis", "dimension must be positive");

    std::set<std::string> seen_labels;
    for (std::size_t k = 0; k < table.basis.size(); ++k) {
        if (table.basis[k].empty()) fail("basis[" + std::to_string(k) + "]", "empty label");
        if (!seen_labels.insert(table.basis[k]).second) {
            fail("basis[" + std::to_string(k) + "]", "duplicate label '" + table.basis[k] + "'");
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
    for (std::size_t n = 0; n < table.entries.size(); ++n) {
        const auto& e = table.entries[n];
        const std::string loc = "entries[" + std::to_string(n) + "]";
        if (e.i >= dim || e.j >= dim) fail(loc, "index out of range for dimension " + std::to_string(dim));
        if (e.i >= e.j) fail(loc, "i must be < j");
        if (!seen_pairs.insert({e.i, e.j}).second) fail(loc, "duplicate entry for pair");
        if (e.result.dim() != dim) {
            fail(loc + ".result", "has " + std::to_string(e.result.dim()) + " coordinates, expected " +
                                      std::to_string(dim));
        }
        for (std::size_t k = 0; k < e.result.dim(); ++k) {
            const mpq_class& q = e.result[k].raw();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
            if (sgn(q.get_den()) <= 0 || g != 1) {
                fail(loc + ".result[" + std::to_string(k) + "]", "scalar not in canonical form");
            }
        }
    }
    return report;
}

/// Finite-dimensional anticommutative algebra given by structure constants
/// over the rationals. Immutable once built.
class Algebra {
public:
    /// Validates and builds. Throws ContractViolation listing every problem.
    static Algebra create(AlgebraTable table) {
        const auto report = validate(table);
        if (!report.ok()) {
            throw ContractViolation("invalid algebra '" + table.name + "': " + report.summary());
        }
        return Algebra(std::move(table));
    }

    [[nodiscard]] const std::string& name() const { return table_.name; }
    [[nodiscard]] std::size_t dim() const { return table_.basis.size(); }
    [[nodiscard]] const std::vector<std::string>& basis() const { return table_.basis; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return table_.basis.at(i); }
    [[nodiscard]] const AlgebraTable& table() const { return table_; }

    /// [e_i, e_j] for any i, j.
    [[nodiscard]] Vector structure(std::size_t i, std::size_t j) const {
        if (i >= dim() || j >= dim()) throw ContractViolation("structure: basis index out of range");
        if (i == j) return Vector::zero(dim());
        if (i < j) return upper_[pair_index(i, j)];
        return -upper_[pair_index(j, i)];
    }

    /// Bilinear extension of the structure constants.
    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const {
        require_operand(x, "x", "bracket");
        require_operand(y, "y", "bracket");
        const std::size_t n = dim();
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || y[j].is_zero()) continue;
                const auto& terms = i < j ? sparse_[pair_index(i, j)] : sparse_[pair_index(j, i)];
                if (terms.empty()) continue;
                Scalar coeff = x[i] * y[j];
                if (i > j) coeff = -std::move(coeff);
                for (const auto& [k, c] : terms) out[k] += coeff * c;
            }
        }
        return out;
    }

    void require_operand(const Vector& v, const char* operand, const char* op) const {
        if (v.dim() != dim()) {
            throw ContractViolation(std::string(op) + ": operand " + operand + " has dimension " +
                                    std::to_string(v.dim()) + ", algebra '" + name() + "' has dimension " +
                                    std::to_string(dim()));
        }
    }

    /// Same basis labels and structure constants; the name is ignored.
    [[nodiscard]] bool same_structure(const Algebra& o) const {
        return table_.basis == o.table_.basis && upper_ == o.upper_;
    }
    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.name() == b.name() && a.same_structure(b);
    }

private:
    explicit Algebra(AlgebraTable table) : table_(std::move(table)) {
        const std::size_t n = dim();
        upper_.assign(n * (n - 1) / 2, Vector::zero(n));
        for (const auto& e : table_.entries) upper_[pair_index(e.i, e.j)] = e.result;
        sparse_.resize(upper_.size());
        for (std::size_t p = 0; p < upper_.size(); ++p) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!upper_[p][k].is_zero()) sparse_[p].emplace_back(k, upper_[p][k]);
            }
        }
    }

    // Row-major index of (i, j), i < j, in the strict upper triangle.
    [[nodiscard]] std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * dim() - i * (i + 1) / 2 + (j - i - 1);
    }

    AlgebraTable table_;
    std::vector<Vector> upper_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

inline ValidationReport validate(const Algebra& algebra) { return validate(algebra.table()); }

inline Vector bracket(const Algebra& a, const Vector& x, const Vector& y) { return a.bracket(x, y); }

/// Ternary bracket [x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z].
inline Vector yamaguti(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
    a.require_operand(x, "x", "yamaguti");
    a.require_operand(y, "y", "yamaguti");
    a.require_operand(z, "z", "yamaguti");
    Vector out = a.bracket(x, a.bracket(y, z));
    out -= a.bracket(y, a.bracket(x, z));
    out += a.bracket(a.bracket(x, y), z);
    return out;
}

/// l+_x : y -> [x, y]. Column k holds [x, e_k].
inline Operator left_translation(const Algebra& a, const Vector& x) {
    a.require_operand(x, "x", "left_translation");
    std::vector<Vector> columns;
    columns.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) columns.push_back(a.bracket(x, Vector::basis(a.dim(), k)));
    return Operator::from_columns(columns);
}

/// Yamagutian Y(x;y) = ([l+_x, l+_y] + l+_[x,y]) / 6, which acts as
/// z -> [x,y,z] / 6.
inline Operator yamagutian(const Algebra& a, const Vector& x, const Vector& y) {
    a.require_operand(x, "x", "yamagutian");
    a.require_operand(y, "y", "yamagutian");
    Operator out = commutator(left_translation(a, x), left_translation(a, y));
    out += left_translation(a, a.bracket(x, y));
    out *= Scalar(1, 6);
    return out;
}

}  // namespace glts
