#pragma once

#include "glts/algebra.hpp"
#include "glts/errors.hpp"
#include "glts/linalg.hpp"
#include "glts/report.hpp"
#include "glts/substitution.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace glts {

struct CheckOptions {
    /// Keep going after the first violation and count all of them.
    bool exhaustive = false;
    unsigned workers = 1;
};

/// Evaluates both sides of an identity for one assignment of its variables.
using Evaluator = std::function<std::pair<Value, Value>(const Algebra&, std::span<const Vector>)>;

namespace detail {

struct ScanResult {
    std::size_t first_failure;  // == space size when nothing failed
    std::size_t failures;
};

inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

// Walks the stream in fixed-size chunks handed out in increasing order. The
// smallest failing index is tracked with an atomic min, so the reported
// counterexample does not depend on the number of workers.
inline ScanResult scan(const Algebra& algebra, const SubstitutionSpace& space, const Evaluator& eval,
                       const CheckOptions& options) {
    const std::size_t total = space.size();
    constexpr std::size_t kChunk = 128;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{total};
    std::atomic<std::size_t> failures{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        std::vector<Vector> assignment;
        try {
            while (!aborted.load()) {
                const std::size_t start = next.fetch_add(kChunk);
                if (start >= total) return;
                if (!options.exhaustive && start >= first_failure.load()) return;
                const std::size_t stop = std::min(total, start + kChunk);
                for (std::size_t idx = start; idx < stop; ++idx) {
                    if (!options.exhaustive && idx >= first_failure.load()) break;
                    space.assign(idx, assignment);
                    const auto [lhs, rhs] = eval(algebra, assignment);
                    if (lhs != rhs) {
                        failures.fetch_add(1);
                        atomic_min(first_failure, idx);
                        if (!options.exhaustive) break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            aborted.store(true);
        }
    };

    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    return {first_failure.load(), failures.load()};
}

}  // namespace detail

/// Checks `eval` on every substitution of the space built from `domains`.
/// The counterexample, if any, is the first failing substitution in stream
/// order.
inline CheckReport run_check(const Algebra& algebra, std::string identity, std::span<const std::string> variables,
                             std::span<const VariableDomain> domains, const Evaluator& eval,
                             const CheckOptions& options = {}) {
    if (variables.size() != domains.size()) {
        throw ContractViolation("run_check: variable names and domains differ in length");
    }
    if (options.workers == 0) throw ContractViolation("run_check: worker count must be >= 1");
    const SubstitutionSpace space(algebra.dim(), domains);
    const auto scan = detail::scan(algebra, space, eval, options);

    CheckReport report;
    report.identity = std::move(identity);
    report.algebra = algebra.name();
    report.holds = scan.first_failure == space.size();
    if (options.exhaustive) {
        report.substitutions_checked = space.size();
        report.violations = scan.failures;
    } else {
        report.substitutions_checked = report.holds ? space.size() : scan.first_failure + 1;
    }
    if (!report.holds) {
        const auto assignment = space.at(scan.first_failure);
        auto [lhs, rhs] = eval(algebra, assignment);
        Counterexample cx{{}, std::move(lhs), std::move(rhs)};
        for (std::size_t v = 0; v < assignment.size(); ++v) cx.substitution.push_back({variables[v], assignment[v]});
        report.counterexample = std::move(cx);
    }
    return report;
}

/// One of the identities known to the checker.
struct BuiltinIdentity {
    std::string id;
    /// The identity written out, e.g. "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]".
    std::string formula;
    std::vector<std::string> variables;
    std::vector<int> multiplicities;
    bool operator_level = false;
    /// Included in the "all" selection. Only jacobi is left out: it is a
    /// Lie-detection probe rather than a property of Mal'tsev algebras.
    bool in_all = true;
    /// Equivalent DSL text for vector-level identities.
    std::optional<std::string> dsl;
    Evaluator evaluate;

    [[nodiscard]] std::size_t arity() const { return variables.size(); }
};

namespace detail {

inline std::vector<BuiltinIdentity> make_builtins() {
    using V = std::span<const Vector>;
    const auto B = [](const Algebra& a, const Vector& x, const Vector& y) { return a.bracket(x, y); };
    const auto T = [](const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
        return yamaguti(a, x, y, z);
    };
    const auto Y = [](const Algebra& a, const Vector& x, const Vector& y) { return yamagutian(a, x, y); };
    const auto L = [](const Algebra& a, const Vector& x) { return left_translation(a, x); };
    const auto vec = [](Vector l, Vector r) { return std::pair<Value, Value>{std::move(l), std::move(r)}; };
    const auto op = [](Operator l, Operator r) { return std::pair<Value, Value>{std::move(l), std::move(r)}; };

    std::vector<BuiltinIdentity> out;
    out.push_back({"anticommutativity", "[x,y] = -[y,x]", {"x", "y"}, {1, 1}, false, true,
                   "[x,y] = -1*[y,x]", [=](const Algebra& a, V s) {
                       return vec(B(a, s[0], s[1]), -B(a, s[1], s[0]));
                   }});
    out.push_back({"ternary-antisymmetry", "[x,y,z] = -[y,x,z]", {"x", "y", "z"}, {1, 1, 1}, false, true,
                   "[x,y,z] = -1*[y,x,z]", [=](const Algebra& a, V s) {
                       return vec(T(a, s[0], s[1], s[2]), -T(a, s[1], s[0], s[2]));
                   }});
    out.push_back({"glts-c", "[x,y,z] + [y,z,x] + [z,x,y] + [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
                   {"x", "y", "z"}, {1, 1, 1}, false, true,
                   "[x,y,z] + [y,z,x] + [z,x,y] + [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
                   [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2];
                       Vector l = T(a, x, y, z);
                       l += T(a, y, z, x);
                       l += T(a, z, x, y);
                       l += B(a, B(a, x, y), z);
                       l += B(a, B(a, y, z), x);
                       l += B(a, B(a, z, x), y);
                       return vec(std::move(l), Vector::zero(a.dim()));
                   }});
    out.push_back({"glts-d", "[[x,y],z,u] + [[y,z],x,u] + [[z,x],y,u] = 0", {"x", "y", "z", "u"}, {1, 1, 1, 1},
                   false, true, "[[x,y],z,u] + [[y,z],x,u] + [[z,x],y,u] = 0", [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2], &u = s[3];
                       Vector l = T(a, B(a, x, y), z, u);
                       l += T(a, B(a, y, z), x, u);
                       l += T(a, B(a, z, x), y, u);
                       return vec(std::move(l), Vector::zero(a.dim()));
                   }});
    out.push_back({"sagle-yamaguti", "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]", {"x", "y", "z", "w"},
                   {1, 1, 1, 1}, false, true, "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]",
                   [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2], &w = s[3];
                       return vec(T(a, x, y, B(a, z, w)), B(a, T(a, x, y, z), w) + B(a, z, T(a, x, y, w)));
                   }});
    out.push_back({"glts-f", "[x,y,[z,w,v]] = [[x,y,z],w,v] + [z,[x,y,w],v] + [z,w,[x,y,v]]",
                   {"x", "y", "z", "w", "v"}, {1, 1, 1, 1, 1}, false, true,
                   "[x,y,[z,w,v]] = [[x,y,z],w,v] + [z,[x,y,w],v] + [z,w,[x,y,v]]", [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2], &w = s[3], &v = s[4];
                       Vector r = T(a, T(a, x, y, z), w, v);
                       r += T(a, z, T(a, x, y, w), v);
                       r += T(a, z, w, T(a, x, y, v));
                       return vec(T(a, x, y, T(a, z, w, v)), std::move(r));
                   }});
    out.push_back({"yamagutian-antisymmetry", "Y(x;y) = -Y(y;x)", {"x", "y"}, {1, 1}, true, true, std::nullopt,
                   [=](const Algebra& a, V s) { return op(Y(a, s[0], s[1]), -Y(a, s[1], s[0])); }});
    out.push_back({"yamagutian-constraint", "Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0", {"x", "y", "z"},
                   {1, 1, 1}, true, true, std::nullopt, [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2];
                       Operator l = Y(a, B(a, x, y), z);
                       l += Y(a, B(a, y, z), x);
                       l += Y(a, B(a, z, x), y);
                       return op(std::move(l), Operator::zero(a.dim()));
                   }});
    out.push_back({"derivation", "Y(x;y)[z,w] = [Y(x;y)z,w] + [z,Y(x;y)w]", {"x", "y", "z", "w"}, {1, 1, 1, 1},
                   false, true, "1/6*[x,y,[z,w]] = [1/6*[x,y,z],w] + [z,1/6*[x,y,w]]", [=](const Algebra& a, V s) {
                       const auto &z = s[2], &w = s[3];
                       const Operator d = Y(a, s[0], s[1]);
                       return vec(d.apply(B(a, z, w)), B(a, d.apply(z), w) + B(a, z, d.apply(w)));
                   }});
    out.push_back({"reductivity", "6[Y(x;y), l+_z] = l+_[x,y,z]", {"x", "y", "z"}, {1, 1, 1}, true, true,
                   std::nullopt, [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2];
                       return op(Scalar(6) * commutator(Y(a, x, y), L(a, z)), L(a, T(a, x, y, z)));
                   }});
    out.push_back({"hidden-assoc-operator", "6[Y(x;y), Y(z;w)] = Y([x,y,z];w) + Y(z;[x,y,w])",
                   {"x", "y", "z", "w"}, {1, 1, 1, 1}, true, true, std::nullopt, [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2], &w = s[3];
                       return op(Scalar(6) * commutator(Y(a, x, y), Y(a, z, w)),
                                 Y(a, T(a, x, y, z), w) + Y(a, z, T(a, x, y, w)));
                   }});
    out.push_back({"ternary-derivation", "Y(x;y)[z,w,v] = [Y(x;y)z,w,v] + [z,Y(x;y)w,v] + [z,w,Y(x;y)v]",
                   {"x", "y", "z", "w", "v"}, {1, 1, 1, 1, 1}, false, true,
                   "1/6*[x,y,[z,w,v]] = [1/6*[x,y,z],w,v] + [z,1/6*[x,y,w],v] + [z,w,1/6*[x,y,v]]",
                   [=](const Algebra& a, V s) {
                       const auto &z = s[2], &w = s[3], &v = s[4];
                       const Operator d = Y(a, s[0], s[1]);
                       Vector r = T(a, d.apply(z), w, v);
                       r += T(a, z, d.apply(w), v);
                       r += T(a, z, w, d.apply(v));
                       return vec(d.apply(T(a, z, w, v)), std::move(r));
                   }});
    out.push_back({"maltsev", "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]", {"x", "y", "z"},
                   {2, 1, 1}, false, true, "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]",
                   [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2];
                       Vector r = B(a, B(a, B(a, x, y), z), x);
                       r += B(a, B(a, B(a, y, z), x), x);
                       r += B(a, B(a, B(a, z, x), x), y);
                       return vec(B(a, B(a, x, y), B(a, x, z)), std::move(r));
                   }});
    out.push_back({"jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", {"x", "y", "z"}, {1, 1, 1}, false, false,
                   "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", [=](const Algebra& a, V s) {
                       const auto &x = s[0], &y = s[1], &z = s[2];
                       Vector l = B(a, B(a, x, y), z);
                       l += B(a, B(a, y, z), x);
                       l += B(a, B(a, z, x), y);
                       return vec(std::move(l), Vector::zero(a.dim()));
                   }});
    return out;
}

}  // namespace detail

/// All builtin identities, in canonical order.
inline const std::vector<BuiltinIdentity>& builtin_identities() {
    static const std::vector<BuiltinIdentity> registry = detail::make_builtins();
    return registry;
}

inline const BuiltinIdentity& find_builtin(std::string_view id) {
    for (const auto& b : builtin_identities()) {
        if (b.id == id) return b;
    }
    throw UnknownName("unknown identity '" + std::string(id) + "'");
}

inline CheckReport check_builtin(const Algebra& algebra, const BuiltinIdentity& identity,
                                 const CheckOptions& options = {}) {
    std::vector<VariableDomain> domains;
    for (int m : identity.multiplicities) domains.push_back({m, true});
    return run_check(algebra, identity.id, identity.variables, domains, identity.evaluate, options);
}

inline CheckReport check_builtin(const Algebra& algebra, std::string_view id, const CheckOptions& options = {}) {
    return check_builtin(algebra, find_builtin(id), options);
}

/// The six general Lie triple system axioms, in order: anticommutativity of
/// the binary bracket, antisymmetry of the ternary one, the cyclic relations,
/// Sagle-Yamaguti, and the ternary derivation law.
inline const std::vector<std::string>& glts_axioms() {
    static const std::vector<std::string> ids = {"anticommutativity", "ternary-antisymmetry", "glts-c",
                                                 "glts-d",            "sagle-yamaguti",       "glts-f"};
    return ids;
}

inline std::vector<CheckReport> check_glts(const Algebra& algebra, const CheckOptions& options = {}) {
    std::vector<CheckReport> out;
    for (const auto& id : glts_axioms()) out.push_back(check_builtin(algebra, id, options));
    return out;
}

inline bool all_hold(std::span<const CheckReport> reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.holds; });
}

struct EquivalenceReport {
    CheckReport maltsev;
    CheckReport sagle_yamaguti;

    [[nodiscard]] bool agree() const { return maltsev.holds == sagle_yamaguti.holds; }
};

/// Runs the Mal'tsev identity and the Sagle-Yamaguti identity side by side.
inline EquivalenceReport check_equivalence(const Algebra& algebra, const CheckOptions& options = {}) {
    return {check_builtin(algebra, "maltsev", options), check_builtin(algebra, "sagle-yamaguti", options)};
}

}  // namespace glts
