#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace cmlef {

/// Exact rational coefficient. Canonical form throughout: lowest terms,
/// positive denominator, zero stored as 0/1.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long value) : v_(value) {}  // implicit by design
    Scalar(long num, long den);
    explicit Scalar(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with an optional leading '-'.
    /// Throws std::invalid_argument on anything else (including q = 0).
    static Scalar from_string(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    /// "p" when the denominator is 1, otherwise "p/q"; round-trips through
    /// from_string. This is the stable text form used in all file formats.
    std::string str() const { return v_.get_str(); }

    Scalar operator-() const {
        mpq_class r = -v_;
        return Scalar(std::move(r));
    }
    Scalar& operator+=(const Scalar& o) {
        v_ += o.v_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        v_ -= o.v_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        v_ *= o.v_;
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) {
        a += b;
        return a;
    }
    friend Scalar operator-(Scalar a, const Scalar& b) {
        a -= b;
        return a;
    }
    friend Scalar operator*(Scalar a, const Scalar& b) {
        a *= b;
        return a;
    }
    friend Scalar operator/(Scalar a, const Scalar& b) {
        a /= b;
        return a;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

}  // namespace cmlef
