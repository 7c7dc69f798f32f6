#pragma once

#include "glts/linalg.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace glts {

/// How a variable enters an identity: the largest number of times it occurs
/// in one additive term, and whether every term has that same degree in it.
struct VariableDomain {
    int multiplicity = 1;
    bool homogeneous = true;

    friend bool operator==(const VariableDomain&, const VariableDomain&) = default;
};

namespace detail {

// All nonnegative integer coefficient vectors of length dim with total in
// [lo, hi], ordered by total, then lexicographically descending.
inline void lattice_points(std::size_t dim, int lo, int hi, std::vector<Vector>& out) {
    std::vector<int> c(dim, 0);
    for (int total = lo; total <= hi; ++total) {
        // Enumerate compositions of `total` into dim parts, first part largest first.
        auto rec = [&](auto& self, std::size_t pos, int remaining) -> void {
            if (pos + 1 == dim) {
                c[pos] = remaining;
                Vector v(dim);
                for (std::size_t k = 0; k < dim; ++k) v[k] = Scalar(c[k]);
                out.push_back(std::move(v));
                return;
            }
            for (int take = remaining; take >= 0; --take) {
                c[pos] = take;
                self(self, pos + 1, remaining - take);
            }
        };
        rec(rec, 0, total);
    }
}

}  // namespace detail

/// Candidate values for one variable.
///
/// Homogeneous of degree 1 or 2: the basis vectors followed by the sums
/// e_i + e_j (i < j) when the degree is 2. A quadratic form q vanishes
/// identically iff it vanishes on these points, so over a field of
/// characteristic 0 this is as strong as universal quantification.
///
/// Anything else: nonnegative integer combinations of the basis with
/// coefficient total exactly m (homogeneous) or at most m (mixed degrees,
/// zero vector included). These sets are unisolvent for the corresponding
/// polynomial spaces.
inline std::vector<Vector> candidate_values(std::size_t dim, const VariableDomain& domain) {
    if (dim == 0) throw ContractViolation("candidate_values: dimension must be positive");
    if (domain.multiplicity < 1) throw ContractViolation("candidate_values: multiplicity must be >= 1");
    std::vector<Vector> out;
    if (domain.homogeneous && domain.multiplicity <= 2) {
        for (std::size_t i = 0; i < dim; ++i) out.push_back(Vector::basis(dim, i));
        if (domain.multiplicity == 2) {
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = i + 1; j < dim; ++j) {
                    out.push_back(Vector::basis(dim, i) + Vector::basis(dim, j));
                }
            }
        }
        return out;
    }
    const int m = domain.multiplicity;
    detail::lattice_points(dim, domain.homogeneous ? m : 0, m, out);
    return out;
}

/// Random-access view of the cartesian product of per-variable candidates.
/// Index 0 is the first assignment; the first variable varies slowest.
class SubstitutionSpace {
public:
    SubstitutionSpace(std::size_t dim, std::span<const VariableDomain> domains) : dim_(dim) {
        for (const auto& d : domains) candidates_.push_back(candidate_values(dim, d));
        size_ = 1;
        for (const auto& c : candidates_) {
            if (size_ > std::numeric_limits<std::size_t>::max() / c.size()) {
                throw ContractViolation("substitution space too large");
            }
            size_ *= c.size();
        }
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t arity() const { return candidates_.size(); }
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] const std::vector<Vector>& candidates(std::size_t variable) const {
        return candidates_.at(variable);
    }

    /// Writes assignment number `index` into `out` (resized to arity()).
    void assign(std::size_t index, std::vector<Vector>& out) const {
        if (index >= size_) throw ContractViolation("substitution index out of range");
        out.resize(candidates_.size());
        for (std::size_t v = candidates_.size(); v-- > 0;) {
            const auto& c = candidates_[v];
            out[v] = c[index % c.size()];
            index /= c.size();
        }
    }

    [[nodiscard]] std::vector<Vector> at(std::size_t index) const {
        std::vector<Vector> out;
        assign(index, out);
        return out;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Vector>> candidates_;
    std::size_t size_ = 1;
};

/// Substitutions for identities homogeneous in every variable.
inline SubstitutionSpace substitution_stream(std::size_t dim, std::span<const int> multiplicities) {
    std::vector<VariableDomain> domains;
    domains.reserve(multiplicities.size());
    for (int m : multiplicities) domains.push_back({m, true});
    return SubstitutionSpace(dim, domains);
}

}  // namespace glts
