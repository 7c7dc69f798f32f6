// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout (zero tolerance). Exit status is nonzero if any criterion fails.

#include "glts/catalog.hpp"
#include "glts/checker.hpp"
#include "glts/cli.hpp"
#include "glts/dsl.hpp"
#include "support/test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace glts;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<Algebra> maltsev_catalog() { return {make_abelian(3), make_so3(), make_sl2(), make_m7()}; }
std::vector<Algebra> full_catalog() { return {make_abelian(3), make_so3(), make_sl2(), make_m7(), make_nc3()}; }

const CheckOptions kParallel{false, 4};

Outcome glts_theorem() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t substitutions = 0;
    for (const auto& a : maltsev_catalog()) {
        for (const auto& r : check_glts(a, kParallel)) {
            o.require(r.holds, r.identity + " fails on " + a.name());
            substitutions += r.substitutions_checked;
            if (a.name() == "m7" && r.identity == "glts-f") {
                o.require(r.substitutions_checked == 16807, "m7 glts-f did not cover 16807 substitutions");
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 10.0, "runtime " + std::to_string(seconds) + " s exceeds 10 s");
    std::ostringstream d;
    d << substitutions << " substitutions in " << seconds << " s";
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome reductivity() {
    Outcome o;
    for (const auto& a : maltsev_catalog()) {
        const auto r = check_builtin(a, "reductivity", kParallel);
        o.require(r.holds, "fails on " + a.name());
        const std::size_t n = a.dim();
        o.require(r.substitutions_checked == n * n * n, "wrong triple count on " + a.name());
    }
    if (o.pass) o.detail = "343 triples on m7";
    return o;
}

Outcome derivations() {
    Outcome o;
    for (const auto& a : maltsev_catalog()) {
        o.require(check_builtin(a, "derivation", kParallel).holds, "derivation fails on " + a.name());
        o.require(check_builtin(a, "ternary-derivation", kParallel).holds, "ternary-derivation fails on " + a.name());
    }
    return o;
}

Outcome hidden_associativity() {
    Outcome o;
    for (const auto& a : maltsev_catalog()) {
        o.require(check_builtin(a, "hidden-assoc-operator", kParallel).holds, "operator form fails on " + a.name());
        o.require(check_builtin(a, "glts-f", kParallel).holds, "bracket form fails on " + a.name());
    }
    const auto nc3 = make_nc3();
    o.require(!check_builtin(nc3, "hidden-assoc-operator").holds, "operator form unexpectedly holds on nc3");
    o.require(!check_builtin(nc3, "glts-f").holds, "bracket form unexpectedly holds on nc3");
    return o;
}

Outcome yamagutian_consistency() {
    Outcome o;
    for (const auto& a : full_catalog()) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto x = Vector::basis(n, i);
                const auto y = Vector::basis(n, j);
                const auto op = yamagutian(a, x, y);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto z = Vector::basis(n, k);
                    if (op.apply(z) != Scalar(1, 6) * yamaguti(a, x, y, z)) {
                        o.require(false, "operator and ternary forms differ on " + a.name());
                    }
                }
            }
        }
        o.require(check_builtin(a, "yamagutian-antisymmetry").holds, "antisymmetry fails on " + a.name());
    }
    for (const auto& a : maltsev_catalog()) {
        o.require(check_builtin(a, "yamagutian-constraint").holds, "cyclic constraint fails on " + a.name());
    }
    return o;
}

Outcome maltsev_equivalence() {
    Outcome o;
    for (const auto& a : full_catalog()) o.require(check_equivalence(a).agree(), "disagreement on " + a.name());
    std::mt19937_64 rng(20240601);
    int maltsev = 0;
    for (int n = 0; n < 100; ++n) {
        const auto a = glts::testing::random_algebra3(rng, -2, 2, "random-" + std::to_string(n));
        const auto eq = check_equivalence(a);
        o.require(eq.agree(), "disagreement on " + a.name());
        maltsev += eq.maltsev.holds ? 1 : 0;
    }
    if (o.pass) o.detail = "105 algebras agree; " + std::to_string(maltsev) + " of 100 random ones are Mal'tsev";
    return o;
}

Outcome negative_control() {
    Outcome o;
    const auto nc3 = make_nc3();
    for (const auto* id : {"sagle-yamaguti", "maltsev", "jacobi"}) {
        const auto r = check_builtin(nc3, id);
        o.require(!r.holds && r.counterexample.has_value(), std::string("nc3 ") + id + " without counterexample");
    }
    const auto m7 = make_m7();
    o.require(!check_builtin(m7, "jacobi").holds, "m7 satisfies jacobi");
    o.require(check_builtin(m7, "maltsev").holds, "m7 violates maltsev");
    return o;
}

Outcome dsl_oracle() {
    Outcome o;
    std::size_t compared = 0;
    for (const auto& a : full_catalog()) {
        for (const auto& b : builtin_identities()) {
            if (!b.dsl) continue;
            const auto builtin = check_builtin(a, b, kParallel);
            const auto via_dsl = dsl::check_identity(a, dsl::parse_identity(*b.dsl), kParallel);
            const bool same = builtin.holds == via_dsl.holds && builtin.counterexample == via_dsl.counterexample &&
                              builtin.substitutions_checked == via_dsl.substitutions_checked;
            o.require(same, b.id + " differs on " + a.name());
            ++compared;
        }
    }
    if (o.pass) o.detail = std::to_string(compared) + " identity/algebra pairs";
    return o;
}

Outcome determinism() {
    Outcome o;
    auto run = [](std::vector<std::string> args) {
        std::vector<const char*> argv{"glts"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::pair{code, out.str()};
    };
    for (const auto* alg : {"abelian(3)", "so3", "sl2", "m7", "nc3"}) {
        for (const auto* mode : {"--json", "--exhaustive"}) {
            std::vector<std::string> base{"check", alg, "--identity", "all", "--identity", "jacobi", "--json"};
            if (std::string(mode) == "--exhaustive") base.push_back(mode);
            auto one = base, four = base;
            one.insert(one.end(), {"--workers", "1"});
            four.insert(four.end(), {"--workers", "4"});
            const auto r1 = run(one);
            const auto r4 = run(four);
            o.require(r1 == r4, std::string("reports differ on ") + alg + " " + mode);
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 GLTS axioms hold on abelian(3), so3, sl2, m7 (under 10 s)", glts_theorem},
        {"2 reductivity 6[Y(x;y), l+_z] = l+_[x,y,z] on all basis triples", reductivity},
        {"3 Yamagutian is a derivation of the binary and ternary brackets", derivations},
        {"4 hidden associativity: operator and bracket forms pass on Mal'tsev, fail on nc3", hidden_associativity},
        {"5 Yamagutian operator/ternary consistency, antisymmetry, cyclic constraint", yamagutian_consistency},
        {"6 Sagle-Yamaguti and Mal'tsev verdicts agree (catalog + 100 random dim-3)", maltsev_equivalence},
        {"7 negative control nc3 fails; m7 is Mal'tsev but not Lie", negative_control},
        {"8 DSL renderings reproduce builtin verdicts and counterexamples", dsl_oracle},
        {"9 JSON reports byte-identical for 1 and 4 workers", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
