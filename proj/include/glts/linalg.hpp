#pragma once

#include "glts/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace glts {

namespace detail {
inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ContractViolation(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}
}  // namespace detail

/// Coordinates of an element in a fixed basis.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

    static Vector zero(std::size_t dim) { return Vector(dim); }
    static Vector basis(std::size_t dim, std::size_t index) {
        if (index >= dim) throw ContractViolation("basis index out of range");
        Vector v(dim);
        v.coords_[index] = Scalar(1);
        return v;
    }

    [[nodiscard]] std::size_t dim() const { return coords_.size(); }
    [[nodiscard]] std::span<const Scalar> coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coords_) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    Vector& operator+=(const Vector& o) {
        detail::require_same_dim(dim(), o.dim(), "vector addition");
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
        }
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        detail::require_same_dim(dim(), o.dim(), "vector subtraction");
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
        }
        return *this;
    }
    Vector& operator*=(const Scalar& s) {
        for (auto& c : coords_) {
            if (!c.is_zero()) c *= s;
        }
        return *this;
    }

    /// this += s * o, skipping zero coordinates of o.
    void add_scaled(const Scalar& s, const Vector& o) {
        detail::require_same_dim(dim(), o.dim(), "vector axpy");
        if (s.is_zero()) return;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!o.coords_[i].is_zero()) coords_[i] += s * o.coords_[i];
        }
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator-(Vector a) {
        for (auto& c : a.coords_) c = -std::move(c);
        return a;
    }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> coords_;
};

/// Dense square matrix acting on column vectors. Row-major storage.
class Operator {
public:
    Operator() = default;
    explicit Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static Operator zero(std::size_t dim) { return Operator(dim); }
    static Operator identity(std::size_t dim) {
        Operator m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(1);
        return m;
    }
    /// Builds the operator whose k-th column is columns[k].
    static Operator from_columns(std::span<const Vector> columns) {
        Operator m(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            detail::require_same_dim(columns[c].dim(), columns.size(), "operator column");
            for (std::size_t r = 0; r < columns.size(); ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const {
        return Vector(std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
                                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_)));
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    [[nodiscard]] Vector apply(const Vector& v) const {
        detail::require_same_dim(dim_, v.dim(), "operator application");
        Vector out(dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            const Scalar& vc = v[c];
            if (vc.is_zero()) continue;
            for (std::size_t r = 0; r < dim_; ++r) {
                const Scalar& e = (*this)(r, c);
                if (!e.is_zero()) out[r] += e * vc;
            }
        }
        return out;
    }

    Operator& operator+=(const Operator& o) {
        detail::require_same_dim(dim_, o.dim_, "operator addition");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!o.entries_[i].is_zero()) entries_[i] += o.entries_[i];
        }
        return *this;
    }
    Operator& operator-=(const Operator& o) {
        detail::require_same_dim(dim_, o.dim_, "operator subtraction");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!o.entries_[i].is_zero()) entries_[i] -= o.entries_[i];
        }
        return *this;
    }
    Operator& operator*=(const Scalar& s) {
        for (auto& e : entries_) {
            if (!e.is_zero()) e *= s;
        }
        return *this;
    }

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator-(Operator a) { return a *= Scalar(-1); }
    friend Operator operator*(const Scalar& s, Operator m) { return m *= s; }

    friend Operator operator*(const Operator& a, const Operator& b) {
        detail::require_same_dim(a.dim_, b.dim_, "operator product");
        const std::size_t n = a.dim_;
        Operator out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (!bkj.is_zero()) out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend bool operator==(const Operator&, const Operator&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> entries_;
};

/// P*Q - Q*P.
inline Operator commutator(const Operator& p, const Operator& q) {
    detail::require_same_dim(p.dim(), q.dim(), "operator commutator");
    return p * q - q * p;
}

}  // namespace glts
