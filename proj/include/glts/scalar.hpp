#pragma once

#include "glts/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace glts {

/// Exact rational number. Always held in lowest terms with a positive
/// denominator, so two scalars are equal iff their representations are.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t numerator, std::int64_t denominator) {
        if (denominator == 0) {
            throw ContractViolation("rational with zero denominator");
        }
        value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                           mpz_class(static_cast<long>(denominator)));
        value_.canonicalize();
    }
    explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-'). Returns nullopt on
    /// malformed input or a zero denominator.
    static std::optional<Scalar> parse(std::string_view text) {
        const auto slash = text.find('/');
        const auto num_text = text.substr(0, slash);
        if (!is_integer_literal(num_text)) return std::nullopt;
        mpz_class num(std::string(num_text), 10);
        mpz_class den(1);
        if (slash != std::string_view::npos) {
            const auto den_text = text.substr(slash + 1);
            if (den_text.empty() || den_text.front() == '-' || !is_integer_literal(den_text)) return std::nullopt;
            den = mpz_class(std::string(den_text), 10);
            if (den == 0) return std::nullopt;
        }
        return Scalar(mpq_class(num, den));
    }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw ContractViolation("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a) {
        mpq_neg(a.value_.get_mpq_t(), a.value_.get_mpq_t());
        return a;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    static bool is_integer_literal(std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    }

    mpq_class value_{0};
};

}  // namespace glts
