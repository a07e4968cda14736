#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace kinn {

// Exact nonnegative integer. Every count, binomial and Catalan value in the
// library lives in this type. Operations that could leave the nonnegative
// range (subtraction, inexact division) throw instead of wrapping.
class Count {
public:
    using rep = boost::multiprecision::cpp_int;

    Count() = default;

    template <std::integral T>
    Count(T v) : value_(v) {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw std::domain_error("Count cannot be negative");
        }
    }

    explicit Count(rep v) : value_(std::move(v)) {
        if (value_ < 0) throw std::domain_error("Count cannot be negative");
    }

    static Count from_decimal(const std::string& text) { return Count(rep(text)); }

    const rep& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    // Decimal string; the only serialized form of a Count.
    std::string str() const { return value_.str(); }

    Count& operator+=(const Count& o) {
        value_ += o.value_;
        return *this;
    }

    Count& operator*=(const Count& o) {
        value_ *= o.value_;
        return *this;
    }

    // Checked subtraction: requires *this >= o.
    Count& operator-=(const Count& o) {
        if (value_ < o.value_) throw std::domain_error("Count subtraction would go negative");
        value_ -= o.value_;
        return *this;
    }

    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator*(Count a, const Count& b) { return a *= b; }
    friend Count operator-(Count a, const Count& b) { return a -= b; }

    // Checked exact division: throws std::logic_error if d does not divide *this.
    Count div_exact(const Count& d) const {
        if (d.is_zero()) throw std::domain_error("Count division by zero");
        rep q, r;
        boost::multiprecision::divide_qr(value_, d.value_, q, r);
        if (!r.is_zero())
            throw std::logic_error("inexact division: " + str() + " / " + d.str());
        return Count(std::move(q));
    }

    bool divisible_by(const Count& d) const {
        if (d.is_zero()) return false;
        const rep r = value_ % d.value_;
        return r.is_zero();
    }

    friend Count gcd(const Count& a, const Count& b) {
        return Count(boost::multiprecision::gcd(a.value_, b.value_));
    }

    friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }

    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        const int c = a.value_.compare(b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    rep value_;
};

// Exact rational with positive denominator, always stored in lowest terms.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}

    template <std::integral T>
    Ratio(T v) : num_(v), den_(1) {}

    Ratio(Count num, Count den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Ratio denominator must be positive");
        reduce();
    }

    const Count& num() const { return num_; }
    const Count& den() const { return den_; }

    // "p/q" in lowest terms; plain "p" when the value is an integer.
    std::string str() const {
        if (den_ == Count(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce() {
        const Count g = gcd(num_, den_);
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }

    Count num_;
    Count den_;
};

}  // namespace kinn
