#pragma once

#include <collatz/bignat.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace collatz {

/// Non-negative rational num/den, always stored in lowest terms with den >= 1.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(BigNat num, BigNat den);
    ExactRatio(std::uint64_t num, std::uint64_t den) : ExactRatio(BigNat(num), BigNat(den)) {}

    static ExactRatio one() { return {1, 1}; }
    static ExactRatio integer(BigNat n) { return {std::move(n), BigNat(1)}; }

    /// Accepts "a/b" or a bare integer "a".
    static ExactRatio parse(std::string_view text);

    const BigNat& num() const noexcept { return num_; }
    const BigNat& den() const noexcept { return den_; }

    bool is_reduced() const { return gcd(num_, den_).is_one() || (num_.is_zero() && den_.is_one()); }
    bool is_zero() const { return num_.is_zero(); }

    std::string str() const { return num_.str() + "/" + den_.str(); }
    double to_double() const;
    double log2() const;

    /// Multiplies by (k-1)/k. k and k-1 are coprime, so only cross terms need a gcd.
    ExactRatio& mul_steadiness_factor(const BigNat& k);

    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    struct Unchecked {};
    ExactRatio(BigNat num, BigNat den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}

    BigNat num_;
    BigNat den_;
};

}  // namespace collatz
