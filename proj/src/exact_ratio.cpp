#include <collatz/exact_ratio.hpp>

#include <cmath>

namespace collatz {

namespace {

struct Mantissa {
    double d;  // in [0.5, 1)
    long exp;
};

Mantissa split(const BigNat& n) {
    Mantissa m{};
    m.d = mpz_get_d_2exp(&m.exp, n.raw().get_mpz_t());
    return m;
}

}  // namespace

double BigNat::log2() const {
    if (is_zero()) throw InvalidInput("log2 of zero");
    const Mantissa m = split(*this);
    return std::log2(m.d) + static_cast<double>(m.exp);
}

ExactRatio::ExactRatio(BigNat num, BigNat den) {
    if (den.is_zero()) throw InvalidInput("zero denominator");
    if (num.is_zero()) {
        num_ = BigNat(0);
        den_ = BigNat(1);
        return;
    }
    const BigNat g = gcd(num, den);
    if (g.is_one()) {
        num_ = std::move(num);
        den_ = std::move(den);
    } else {
        num_ = num / g;
        den_ = den / g;
    }
}

ExactRatio ExactRatio::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return integer(BigNat::parse(text));
    BigNat num = BigNat::parse(text.substr(0, slash));
    BigNat den = BigNat::parse(text.substr(slash + 1));
    if (den.is_zero()) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return {std::move(num), std::move(den)};
}

double ExactRatio::to_double() const {
    if (num_.is_zero()) return 0.0;
    const Mantissa n = split(num_);
    const Mantissa d = split(den_);
    return std::ldexp(n.d / d.d, static_cast<int>(n.exp - d.exp));
}

double ExactRatio::log2() const {
    if (num_.is_zero()) throw InvalidInput("log2 of zero");
    const Mantissa n = split(num_);
    const Mantissa d = split(den_);
    return static_cast<double>(n.exp - d.exp) + std::log2(n.d / d.d);
}

ExactRatio& ExactRatio::mul_steadiness_factor(const BigNat& k) {
    if (k.is_zero()) throw InvalidInput("steadiness factor needs k >= 1");
    const BigNat km1 = k - BigNat(1);
    if (km1.is_zero()) {
        *this = ExactRatio();
        return *this;
    }
    const BigNat g1 = gcd(num_, k);
    const BigNat g2 = gcd(km1, den_);
    BigNat num = (num_ / g1) * (km1 / g2);
    BigNat den = (den_ / g2) * (k / g1);
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const BigNat g1 = gcd(a.num_, b.den_);
    const BigNat g2 = gcd(b.num_, a.den_);
    return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), ExactRatio::Unchecked{}};
}

ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.is_zero()) throw InvalidInput("division by zero ratio");
    return a * ExactRatio(b.den_, b.num_, ExactRatio::Unchecked{});
}

}  // namespace collatz
