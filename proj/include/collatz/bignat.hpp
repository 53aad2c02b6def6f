#pragma once

#include <collatz/errors.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace collatz {

/// Arbitrary-precision non-negative integer.
///
/// Thin value type over GMP. Every operation that could produce a negative
/// result throws InvalidInput instead.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {
        static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    }

    /// Decimal digits only; no sign, no whitespace, no leading '+'.
    static BigNat parse(std::string_view text) {
        if (text.empty()) throw InvalidInput("empty integer literal");
        for (char ch : text)
            if (ch < '0' || ch > '9')
                throw InvalidInput("not a non-negative decimal integer: '" + std::string(text) + "'");
        BigNat out;
        out.v_.set_str(std::string(text), 10);
        return out;
    }

    static BigNat pow(std::uint64_t base, std::uint64_t exp) {
        BigNat out;
        mpz_ui_pow_ui(out.v_.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
        return out;
    }

    static BigNat pow2(std::uint64_t exp) {
        BigNat out;
        mpz_setbit(out.v_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
        return out;
    }

    std::string str() const { return v_.get_str(10); }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

    std::uint64_t mod(std::uint64_t m) const {
        return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(m));
    }

    bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }
    std::optional<std::uint64_t> to_u64() const {
        if (!fits_u64()) return std::nullopt;
        return mpz_get_ui(v_.get_mpz_t());
    }

    std::size_t bit_length() const {
        return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    /// Nearest-below double; +inf beyond the double range.
    double to_double() const { return mpz_get_d(v_.get_mpz_t()); }

    /// log2 accurate to a few ulps for any magnitude. Requires a non-zero value.
    double log2() const;

    BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
    BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }
    BigNat& operator-=(const BigNat& o) {
        if (v_ < o.v_) throw InvalidInput("BigNat subtraction would go negative");
        v_ -= o.v_;
        return *this;
    }
    BigNat& operator/=(const BigNat& o) {
        if (o.is_zero()) throw InvalidInput("division by zero");
        mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
        return *this;
    }
    BigNat& operator%=(const BigNat& o) {
        if (o.is_zero()) throw InvalidInput("division by zero");
        mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
        return *this;
    }
    BigNat& operator<<=(std::uint64_t bits) {
        mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        return *this;
    }
    BigNat& operator>>=(std::uint64_t bits) {
        mpz_fdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
    friend BigNat operator%(BigNat a, const BigNat& b) { return a %= b; }
    friend BigNat operator<<(BigNat a, std::uint64_t bits) { return a <<= bits; }
    friend BigNat operator>>(BigNat a, std::uint64_t bits) { return a >>= bits; }

    friend bool operator==(const BigNat& a, const BigNat& b) {
        return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0;
    }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend BigNat gcd(const BigNat& a, const BigNat& b) {
        BigNat out;
        mpz_gcd(out.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.str(); }

    const mpz_class& raw() const noexcept { return v_; }

private:
    mpz_class v_;
};

}  // namespace collatz

template <>
struct std::hash<collatz::BigNat> {
    std::size_t operator()(const collatz::BigNat& n) const noexcept {
        const mpz_srcptr p = n.raw().get_mpz_t();
        std::size_t h = static_cast<std::size_t>(p->_mp_size);
        for (int i = 0; i < std::abs(p->_mp_size); ++i)
            h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::size_t>(p->_mp_d[i]);
        return h;
    }
};
